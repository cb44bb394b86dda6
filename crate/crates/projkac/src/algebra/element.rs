//! Formal elements of the two projective Kac algebras of the plane.
//!
//! Operator side: finite sums of phased generators `e^{iφ} L_Ω(x)` (or
//! `S_ν(x)`), possibly in tensor degree 2 or 3. Dual side: phased products of
//! named functions evaluated at symbolic slot points.
//!
//! Two rules fix how phases feel the base-point action:
//!
//! * operator products shift the right factor's Θ-terms by the left factor's
//!   first-leg argument (q ↦ x⁻¹·q);
//! * on the dual side a Θ-phase living on leg i has its base point translated
//!   by the first coordinates of the points sitting in the legs to its right.
//!   Within one leg, ⋆ products do not shift.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::phase::{Action, PhaseExponent};
use crate::error::{Error, Result};
use crate::symbolic::{int, Lin, Poly, Sym, Vec2, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Operator,
    Dual,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Operator => "operator",
            Side::Dual => "dual",
        }
    }
}

/// Which copy of the algebra: `L_Ω` / `A^Θ`, or the ν-scaled `S_ν` / `A^Θ_ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Scale {
    Unit,
    Nu,
}

impl Scale {
    fn power(self) -> u32 {
        match self {
            Scale::Unit => 0,
            Scale::Nu => 1,
        }
    }
}

/// A named dual-side function `f(arg)` or its conjugate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factor {
    pub name: String,
    pub conj: bool,
    pub arg: Vec2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Q,
    pub phase: PhaseExponent,
    /// Generator arguments, one per leg (operator side only).
    pub args: Vec<Vec2>,
    /// Function factors (dual side only).
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub side: Side,
    pub scale: Scale,
    pub degree: usize,
    /// Evaluation points, one per leg (dual side only).
    pub slots: Vec<Vec2>,
    pub terms: Vec<Term>,
}

/// Outcome of comparing two elements exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    /// lhs − rhs phase exponent when both sides are single terms with the
    /// same generator/factor content.
    pub phase_difference: Option<Poly>,
}

impl AlgebraElement {
    fn nu(&self) -> u32 {
        self.scale.power()
    }

    fn phase(&self, p: PhaseExponent) -> PhaseExponent {
        p.with_nu_power(self.nu())
    }

    fn op_single(scale: Scale, phase: PhaseExponent, args: Vec<Vec2>) -> Self {
        AlgebraElement {
            side: Side::Operator,
            scale,
            degree: args.len(),
            slots: Vec::new(),
            terms: vec![Term {
                coeff: Q::one(),
                phase: phase.with_nu_power(scale.power()),
                args,
                factors: Vec::new(),
            }],
        }
    }

    /// `L_Ω(x)`.
    pub fn generator(x: Vec2) -> Self {
        Self::op_single(Scale::Unit, PhaseExponent::zero(), vec![x])
    }

    /// `S_ν(x)`.
    pub fn generator_nu(x: Vec2) -> Self {
        Self::op_single(Scale::Nu, PhaseExponent::zero(), vec![x])
    }

    /// `e^{iφ} L(x₁)⊗…⊗L(x_k)` in the given scale.
    pub fn phased(scale: Scale, phase: PhaseExponent, args: Vec<Vec2>) -> Self {
        Self::op_single(scale, phase, args)
    }

    /// The operator-side unit `L_Ω(0)`.
    pub fn unit_operator(scale: Scale) -> Self {
        Self::op_single(scale, PhaseExponent::zero(), vec![Vec2::zero()])
    }

    /// The dual function `f(slot)`.
    pub fn dual_function(name: &str, slot: Vec2, scale: Scale) -> Self {
        AlgebraElement {
            side: Side::Dual,
            scale,
            degree: 1,
            slots: vec![slot.clone()],
            terms: vec![Term {
                coeff: Q::one(),
                phase: PhaseExponent::zero(),
                args: Vec::new(),
                factors: vec![Factor { name: name.into(), conj: false, arg: slot }],
            }],
        }
    }

    /// The dual unit `𝟙(x) = e^{−iΘ(q;x)}`.
    pub fn unit_dual(slot: Vec2, scale: Scale) -> Self {
        let phase = PhaseExponent::theta_at_q(slot.clone()).neg().with_nu_power(scale.power());
        AlgebraElement {
            side: Side::Dual,
            scale,
            degree: 1,
            slots: vec![slot],
            terms: vec![Term { coeff: Q::one(), phase, args: Vec::new(), factors: Vec::new() }],
        }
    }

    /// Multiply every term by the scalar phase `e^{iφ}` (φ is ν-scaled to match).
    pub fn times_phase(&self, phi: &PhaseExponent) -> Self {
        let phi = phi.clone().with_nu_power(self.nu());
        let mut out = self.clone();
        for t in &mut out.terms {
            t.phase = t.phase.plus(&phi);
        }
        out
    }

    pub fn scaled(&self, k: &Q) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.coeff = &t.coeff * k;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.side == Side::Dual && self.slots != other.slots {
            return Err(Error::SlotMismatch);
        }
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(&-Q::one()))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch);
        }
        Ok(())
    }

    fn require(&self, side: Side, op: &'static str) -> Result<()> {
        if self.side != side {
            return Err(Error::WrongSide { op, side: self.side.name() });
        }
        Ok(())
    }

    fn require_degree(&self, expected: usize, op: &'static str) -> Result<()> {
        if self.degree != expected {
            return Err(Error::BadDegree { op, expected, got: self.degree });
        }
        Ok(())
    }

    /// Per-leg phase of the ⋆ action at the given points: leg i carries
    /// Θ(q + Σ_{j>i} p_j₁; p_i).
    fn star_action(&self, points: &[Vec2]) -> PhaseExponent {
        let mut ph = PhaseExponent::zero();
        for (i, p) in points.iter().enumerate() {
            ph = ph.plus(&self.phase(PhaseExponent::theta(right_base(points, i), p.clone())));
        }
        ph
    }

    /// Σ_i −[Θ(b_i; p_i) − Θ(b_i; −p_i)] with b_i built from `bases`.
    fn odd_part(&self, points: &[Vec2], bases: &[Vec2]) -> PhaseExponent {
        let mut ph = PhaseExponent::zero();
        for (i, p) in points.iter().enumerate() {
            let b = right_base(bases, i);
            let odd = PhaseExponent::theta(b.clone(), p.clone())
                .minus(&PhaseExponent::theta(b, -p));
            ph = ph.plus(&self.phase(odd.neg()));
        }
        ph
    }

    /// Product. Operator side: the projective product with the right factor
    /// feeling the left one. Dual side: the ⋆ product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = Vec::new();
        match self.side {
            Side::Operator => {
                for a in &self.terms {
                    for b in &other.terms {
                        let mut phase =
                            a.phase.plus(&b.phase.shift(&a.args[0], Action::Inverse));
                        for (u, v) in a.args.iter().zip(&b.args) {
                            phase = phase.plus(&self.phase(PhaseExponent::omega(u, v)));
                        }
                        let args = a.args.iter().zip(&b.args).map(|(u, v)| u + v).collect();
                        terms.push(Term {
                            coeff: &a.coeff * &b.coeff,
                            phase,
                            args,
                            factors: Vec::new(),
                        });
                    }
                }
            }
            Side::Dual => {
                if self.slots != other.slots {
                    return Err(Error::SlotMismatch);
                }
                let act = self.star_action(&self.slots);
                for a in &self.terms {
                    for b in &other.terms {
                        let mut factors = a.factors.clone();
                        factors.extend(b.factors.iter().cloned());
                        terms.push(Term {
                            coeff: &a.coeff * &b.coeff,
                            phase: a.phase.plus(&b.phase).plus(&act),
                            args: Vec::new(),
                            factors,
                        });
                    }
                }
            }
        }
        Ok(AlgebraElement { terms, ..self.clone() })
    }

    /// Operator adjoint: arguments negated, phases conjugated by the star rule.
    pub fn dagger(&self) -> Result<Self> {
        self.require(Side::Operator, "dagger")?;
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                phase: t.phase.star(),
                args: t.args.iter().map(|a| -a).collect(),
                factors: Vec::new(),
            })
            .collect();
        Ok(AlgebraElement { terms, ..self.clone() })
    }

    /// Coproduct of a degree-1 element; dual slots gain the point `fresh`.
    pub fn coproduct_with(&self, fresh: &Vec2) -> Result<Self> {
        self.require_degree(1, "coproduct")?;
        self.coproduct_leg(0, fresh)
    }

    /// Coproduct with an automatically chosen fresh slot name.
    pub fn coproduct(&self) -> Result<Self> {
        let fresh = self.fresh_slot();
        self.coproduct_with(&fresh)
    }

    /// Apply the coproduct to one leg of a tensor element.
    pub fn coproduct_leg(&self, leg: usize, fresh: &Vec2) -> Result<Self> {
        if leg >= self.degree {
            return Err(Error::BadDegree { op: "coproduct_leg", expected: leg + 1, got: self.degree });
        }
        match self.side {
            Side::Operator => {
                let terms = self
                    .terms
                    .iter()
                    .map(|t| {
                        let a = t.args[leg].clone();
                        let mut args = t.args.clone();
                        args.insert(leg + 1, a.clone());
                        Term {
                            phase: t.phase.plus(&self.phase(PhaseExponent::theta_at_q(-&a))),
                            args,
                            ..t.clone()
                        }
                    })
                    .collect();
                Ok(AlgebraElement { degree: self.degree + 1, terms, ..self.clone() })
            }
            Side::Dual => {
                let s = self.slots[leg].clone();
                let (s1, s2) = symbols_of(&s)?;
                let mut map = BTreeMap::new();
                map.insert(s1, &s.c1 + &fresh.c1);
                map.insert(s2, &s.c2 + &fresh.c2);
                let mut slots = self.slots.clone();
                slots.insert(leg + 1, fresh.clone());
                let cocycle = self.phase(PhaseExponent::omega(&s, fresh)).neg();
                let terms = self
                    .terms
                    .iter()
                    .map(|t| {
                        let t = subs_term(t, &map);
                        Term { phase: t.phase.plus(&cocycle), ..t }
                    })
                    .collect();
                Ok(AlgebraElement { degree: self.degree + 1, slots, terms, ..self.clone() })
            }
        }
    }

    /// Coinvolution, applied legwise on tensor elements.
    ///
    /// Operator side: `κ^Ω(L(x)) = e^{i[Θ(q;x)−Θ(q;−x)]} L(−x)`. Dual side:
    /// `κ^Θ f(x) = e^{−i[Θ(q;x)−Θ(q;−x)]} f(−x)`, where on tensor elements the
    /// legs to the right contribute their reflected points to the base point.
    pub fn coinvolution(&self) -> Result<Self> {
        match self.side {
            Side::Operator => {
                let terms = self
                    .terms
                    .iter()
                    .map(|t| {
                        let mut phase = t.phase.clone();
                        for a in &t.args {
                            let odd = PhaseExponent::theta_at_q(a.clone())
                                .minus(&PhaseExponent::theta_at_q(-a));
                            phase = phase.plus(&self.phase(odd));
                        }
                        Term { phase, args: t.args.iter().map(|a| -a).collect(), ..t.clone() }
                    })
                    .collect();
                Ok(AlgebraElement { terms, ..self.clone() })
            }
            Side::Dual => {
                let map = self.reflection_map()?;
                let reflected: Vec<Vec2> = self.slots.iter().map(|s| -s).collect();
                let odd = self.odd_part(&self.slots, &reflected);
                let terms = self
                    .terms
                    .iter()
                    .map(|t| {
                        let t = subs_term(t, &map);
                        Term { phase: t.phase.plus(&odd), ..t }
                    })
                    .collect();
                Ok(AlgebraElement { terms, ..self.clone() })
            }
        }
    }

    /// The dual involution `f°(x) = e^{−i[Θ(q;x)−Θ(q;−x)]} \bar f(x)`.
    pub fn dual_involution(&self) -> Result<Self> {
        self.require(Side::Dual, "dual_involution")?;
        let odd = self.odd_part(&self.slots, &self.slots);
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                phase: t.phase.star().plus(&odd),
                args: Vec::new(),
                factors: t
                    .factors
                    .iter()
                    .map(|f| Factor { conj: !f.conj, ..f.clone() })
                    .collect(),
            })
            .collect();
        Ok(AlgebraElement { terms, ..self.clone() })
    }

    /// Tensor product. On the dual side the left element's Θ-phases feel the
    /// right element's points.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch);
        }
        let shift = other
            .slots
            .iter()
            .fold(Lin::zero(), |acc, s| &acc + &s.c1);
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let pa = match self.side {
                    Side::Operator => a.phase.clone(),
                    Side::Dual => a.phase.shift_base(&shift),
                };
                let mut args = a.args.clone();
                args.extend(b.args.iter().cloned());
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                terms.push(Term { coeff: &a.coeff * &b.coeff, phase: pa.plus(&b.phase), args, factors });
            }
        }
        let mut slots = self.slots.clone();
        slots.extend(other.slots.iter().cloned());
        Ok(AlgebraElement {
            side: self.side,
            scale: self.scale,
            degree: self.degree + other.degree,
            slots,
            terms,
        })
    }

    /// The flip σ of a degree-2 element.
    pub fn flip(&self) -> Result<Self> {
        self.require_degree(2, "flip")?;
        match self.side {
            Side::Operator => {
                let terms = self
                    .terms
                    .iter()
                    .map(|t| Term { args: vec![t.args[1].clone(), t.args[0].clone()], ..t.clone() })
                    .collect();
                Ok(AlgebraElement { terms, ..self.clone() })
            }
            Side::Dual => {
                let (a1, a2) = symbols_of(&self.slots[0])?;
                let (b1, b2) = symbols_of(&self.slots[1])?;
                let mut map = BTreeMap::new();
                map.insert(a1, self.slots[1].c1.clone());
                map.insert(a2, self.slots[1].c2.clone());
                map.insert(b1, self.slots[0].c1.clone());
                map.insert(b2, self.slots[0].c2.clone());
                let terms = self.terms.iter().map(|t| subs_term(t, &map)).collect();
                Ok(AlgebraElement { terms, ..self.clone() })
            }
        }
    }

    /// Substitute coordinate symbols throughout (slots included).
    pub fn subs(&self, map: &BTreeMap<Sym, Lin>) -> Self {
        AlgebraElement {
            slots: self.slots.iter().map(|s| s.subs(map)).collect(),
            terms: self.terms.iter().map(|t| subs_term(t, map)).collect(),
            ..self.clone()
        }
    }

    fn reflection_map(&self) -> Result<BTreeMap<Sym, Lin>> {
        let mut map = BTreeMap::new();
        for s in &self.slots {
            let (a, b) = symbols_of(s)?;
            map.insert(a, -&s.c1);
            map.insert(b, -&s.c2);
        }
        Ok(map)
    }

    fn fresh_slot(&self) -> Vec2 {
        let used: Vec<String> = self
            .slots
            .iter()
            .flat_map(|s| s.as_symbols().into_iter())
            .map(|(a, _)| a.name().trim_end_matches('1').to_string())
            .collect();
        for name in ["y", "z", "w", "u", "v"] {
            if !used.iter().any(|u| u == name) {
                return Vec2::symbol(name);
            }
        }
        Vec2::symbol(&format!("t{}", self.slots.len()))
    }

    /// Exact comparison with Θ expanded as `theta_sign · Θ`.
    pub fn compare_with(&self, other: &Self, theta_sign: &Q) -> Comparison {
        let ca = canonical(self, theta_sign);
        let cb = canonical(other, theta_sign);
        let single = self.terms.len() == 1 && other.terms.len() == 1;
        let phase_difference = if single && key_of(&self.terms[0]) == key_of(&other.terms[0]) {
            Some(
                self.terms[0].phase.expand_with(theta_sign)
                    - other.terms[0].phase.expand_with(theta_sign),
            )
        } else {
            None
        };
        let mut diff = ca;
        for (k, v) in cb {
            let e = diff.entry(k.clone()).or_insert_with(Q::zero);
            *e -= v;
            if e.is_zero() {
                diff.remove(&k);
            }
        }
        let equal = diff.is_empty() && self.side == other.side && self.degree == other.degree;
        Comparison { equal, phase_difference }
    }

    pub fn compare(&self, other: &Self) -> Comparison {
        self.compare_with(other, &int(1))
    }
}

/// Base point offset Σ_{j>i} p_j₁.
fn right_base(points: &[Vec2], i: usize) -> Lin {
    points[i + 1..].iter().fold(Lin::zero(), |acc, p| &acc + &p.c1)
}

fn symbols_of(v: &Vec2) -> Result<(Sym, Sym)> {
    v.as_symbols().ok_or_else(|| Error::NonSymbolicSlot(v.to_string()))
}

fn subs_term(t: &Term, map: &BTreeMap<Sym, Lin>) -> Term {
    Term {
        coeff: t.coeff.clone(),
        phase: t.phase.subs(map),
        args: t.args.iter().map(|a| a.subs(map)).collect(),
        factors: t
            .factors
            .iter()
            .map(|f| Factor { arg: f.arg.subs(map), ..f.clone() })
            .collect(),
    }
}

type Key = (Vec<Vec2>, Vec<Factor>);

fn key_of(t: &Term) -> Key {
    let mut f = t.factors.clone();
    f.sort();
    (t.args.clone(), f)
}

/// Terms collected by content and expanded phase, coefficients summed.
fn canonical(e: &AlgebraElement, theta_sign: &Q) -> BTreeMap<(Key, Poly), Q> {
    let mut out: BTreeMap<(Key, Poly), Q> = BTreeMap::new();
    for t in &e.terms {
        let k = (key_of(t), t.phase.expand_with(theta_sign));
        let entry = out.entry(k.clone()).or_insert_with(Q::zero);
        *entry += &t.coeff;
        if entry.is_zero() {
            out.remove(&k);
        }
    }
    out
}

/// `[L(x), L(y)] = L(x)L(y) − L(y)L(x)` as a difference of phased terms.
pub fn commutator(x: &Vec2, y: &Vec2, scale: Scale) -> AlgebraElement {
    let gen = |v: &Vec2| AlgebraElement::phased(scale, PhaseExponent::zero(), vec![v.clone()]);
    commutator_of(&gen(x), &gen(y)).expect("generators of one scale always commute-compatible")
}

/// `[a, b] = ab − ba`.
pub fn commutator_of(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.multiply(b)?.sub(&b.multiply(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rat;

    fn x() -> Vec2 {
        Vec2::symbol("x")
    }
    fn y() -> Vec2 {
        Vec2::symbol("y")
    }

    #[test]
    fn unit_on_the_right() {
        let l = AlgebraElement::generator(x());
        let one = AlgebraElement::unit_operator(Scale::Unit);
        assert!(l.multiply(&one).unwrap().compare(&l).equal);
    }

    #[test]
    fn projected_generators_multiply_with_shift() {
        let a = AlgebraElement::phased(Scale::Unit, PhaseExponent::theta_at_q(-&x()), vec![x()]);
        let b = AlgebraElement::phased(Scale::Unit, PhaseExponent::theta_at_q(-&y()), vec![y()]);
        let xy = &x() + &y();
        let expect = AlgebraElement::phased(Scale::Unit, PhaseExponent::theta_at_q(-&xy), vec![xy]);
        assert!(a.multiply(&b).unwrap().compare(&expect).equal);
    }

    #[test]
    fn nu_generators_pick_up_scaled_cocycle() {
        let a = AlgebraElement::generator_nu(x());
        let b = AlgebraElement::generator_nu(y());
        let expect = AlgebraElement::phased(
            Scale::Nu,
            PhaseExponent::omega(&x(), &y()),
            vec![&x() + &y()],
        );
        assert!(a.multiply(&b).unwrap().compare(&expect).equal);
    }

    #[test]
    fn dagger_of_projected_generator() {
        let a = AlgebraElement::phased(Scale::Unit, PhaseExponent::theta_at_q(-&x()), vec![x()]);
        let expect = AlgebraElement::phased(Scale::Unit, PhaseExponent::theta_at_q(x()), vec![-&x()]);
        assert_eq!(a.dagger().unwrap(), expect);
        assert_eq!(a.dagger().unwrap().dagger().unwrap(), a);
    }

    #[test]
    fn coproduct_of_unit_is_trivial() {
        let one = AlgebraElement::unit_operator(Scale::Unit);
        let d = one.coproduct().unwrap();
        let expect = AlgebraElement::phased(Scale::Unit, PhaseExponent::zero(), vec![Vec2::zero(), Vec2::zero()]);
        assert!(d.compare(&expect).equal);
    }

    #[test]
    fn dual_unit_coproduct() {
        let one = AlgebraElement::unit_dual(x(), Scale::Unit);
        let d = one.coproduct_with(&y()).unwrap();
        let xy = &x() + &y();
        let expect_phase = PhaseExponent::omega(&x(), &y())
            .neg()
            .minus(&PhaseExponent::theta_at_q(xy));
        assert_eq!(d.terms[0].phase.expand(), expect_phase.expand());
    }

    #[test]
    fn commutator_of_equal_arguments_vanishes() {
        let c = commutator(&x(), &x(), Scale::Unit);
        let zero = AlgebraElement { terms: Vec::new(), ..c.clone() };
        assert!(c.compare(&zero).equal);
    }

    #[test]
    fn commutator_of_basis_vectors() {
        let e1 = Vec2::constant(int(1), int(0));
        let e2 = Vec2::constant(int(0), int(1));
        let c = commutator(&e1, &e2, Scale::Unit);
        let s = Vec2::constant(int(1), int(1));
        let plus = AlgebraElement::phased(Scale::Unit, PhaseExponent::from_poly(Poly::constant(rat(1, 2))), vec![s.clone()]);
        let minus = AlgebraElement::phased(Scale::Unit, PhaseExponent::from_poly(Poly::constant(rat(-1, 2))), vec![s]);
        assert!(c.compare(&plus.sub(&minus).unwrap()).equal);
    }

    #[test]
    fn wrong_side_is_reported() {
        let f = AlgebraElement::dual_function("f", x(), Scale::Unit);
        assert!(matches!(f.dagger(), Err(Error::WrongSide { .. })));
        let l = AlgebraElement::generator(x());
        assert!(matches!(l.multiply(&f), Err(Error::SideMismatch)));
    }
}
