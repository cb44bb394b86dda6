//! Operators on functions of several plane points, written as a phase times a
//! substitution of the arguments:
//!
//! `(A F)(p) = e^{iφ_A(p)} Πf(p) · F(M_A p)`, conjugated when `A` is antilinear.
//!
//! Leg points are the symbols `x`, `y`, `z`. A Θ-phase attached to a leg has
//! its base point translated by the first coordinates of the legs to its
//! right, the same rule the dual tensor product uses.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::element::{AlgebraElement, Factor, Side};
use super::phase::PhaseExponent;
use crate::error::{Error, Result};
use crate::symbolic::{Lin, Poly, Sym, Vec2};

pub const LEG_NAMES: [&str; 3] = ["x", "y", "z"];

/// The symbolic point sitting in leg `i`.
pub fn leg(i: usize) -> Vec2 {
    Vec2::symbol(LEG_NAMES[i])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FundamentalName {
    WTheta,
    WThetaStar,
    WOmega,
    WOmegaStar,
    VTheta,
    VOmega,
    JTheta,
    JOmega,
    JPrimeTheta,
}

impl FundamentalName {
    pub const ALL: [FundamentalName; 9] = [
        FundamentalName::WTheta,
        FundamentalName::WThetaStar,
        FundamentalName::WOmega,
        FundamentalName::WOmegaStar,
        FundamentalName::VTheta,
        FundamentalName::VOmega,
        FundamentalName::JTheta,
        FundamentalName::JOmega,
        FundamentalName::JPrimeTheta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FundamentalName::WTheta => "WTheta",
            FundamentalName::WThetaStar => "WTheta*",
            FundamentalName::WOmega => "WOmega",
            FundamentalName::WOmegaStar => "WOmega*",
            FundamentalName::VTheta => "VTheta",
            FundamentalName::VOmega => "VOmega",
            FundamentalName::JTheta => "JTheta",
            FundamentalName::JOmega => "JOmega",
            FundamentalName::JPrimeTheta => "J'Theta",
        }
    }
}

impl FromStr for FundamentalName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .map(|c| match c {
                'Θ' => 'T',
                'Ω' => 'O',
                '′' => '\'',
                c => c.to_ascii_uppercase(),
            })
            .collect::<String>()
            .replace("THETA", "T")
            .replace("OMEGA", "O")
            .replace(['_', ' '], "");
        let name = match norm.as_str() {
            "WT" => FundamentalName::WTheta,
            "WT*" | "WTSTAR" => FundamentalName::WThetaStar,
            "WO" => FundamentalName::WOmega,
            "WO*" | "WOSTAR" => FundamentalName::WOmegaStar,
            "VT" => FundamentalName::VTheta,
            "VO" => FundamentalName::VOmega,
            "JT" => FundamentalName::JTheta,
            "JO" => FundamentalName::JOmega,
            "J'T" | "JPRIMET" | "JPT" => FundamentalName::JPrimeTheta,
            _ => return Err(Error::UnknownMap(s.to_string())),
        };
        Ok(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMapWithPhase {
    pub legs: usize,
    /// Image of each leg point, in terms of the leg symbols and constants.
    pub images: Vec<Vec2>,
    pub phase: PhaseExponent,
    /// Multiplicative function factors (⋆-multiplication operators).
    pub factors: Vec<Factor>,
    pub antilinear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointMapComparison {
    pub equal: bool,
    pub maps_agree: bool,
    pub factors_agree: bool,
    pub antilinear_agree: bool,
    #[serde(serialize_with = "display_poly")]
    pub phase_difference: Poly,
}

fn display_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

impl PointMapWithPhase {
    pub fn identity(legs: usize) -> Self {
        Self::with_phase(legs, PhaseExponent::zero())
    }

    /// Multiplication by the scalar phase `e^{iφ}`.
    pub fn with_phase(legs: usize, phase: PhaseExponent) -> Self {
        PointMapWithPhase {
            legs,
            images: (0..legs).map(leg).collect(),
            phase,
            factors: Vec::new(),
            antilinear: false,
        }
    }

    fn linear(legs: usize, images: Vec<Vec2>, phase: PhaseExponent) -> Self {
        PointMapWithPhase { legs, images, phase, factors: Vec::new(), antilinear: false }
    }

    fn images_with(legs: usize, target: usize, value: Vec2) -> Vec<Vec2> {
        let mut images: Vec<Vec2> = (0..legs).map(leg).collect();
        images[target] = value;
        images
    }

    /// `W^Θ` on legs (i, j): phase Θ(q + p_j₁; p_i) − Ω(p_i, p_j), p_j ↦ p_j + p_i.
    pub fn w_theta(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        let phase = PhaseExponent::theta(b.c1.clone(), a.clone()).minus(&PhaseExponent::omega(&a, &b));
        Self::linear(legs, Self::images_with(legs, j, &b + &a), phase)
    }

    /// `W^Θ*`: phase Θ(q + p_j₁; −p_i) + Ω(p_i, p_j), p_j ↦ p_j − p_i.
    pub fn w_theta_star(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        let phase = PhaseExponent::theta(b.c1.clone(), -&a).plus(&PhaseExponent::omega(&a, &b));
        Self::linear(legs, Self::images_with(legs, j, &b - &a), phase)
    }

    /// `W^Ω`: phase Ω(p_j, p_i) + Θ(q + p_i₁; −p_j), p_i ↦ p_i − p_j.
    pub fn w_omega(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        let phase = PhaseExponent::omega(&b, &a).plus(&PhaseExponent::theta(a.c1.clone(), -&b));
        Self::linear(legs, Self::images_with(legs, i, &a - &b), phase)
    }

    /// `W^Ω*`: phase −Ω(p_j, p_i) + Θ(q + p_i₁; p_j), p_i ↦ p_i + p_j.
    pub fn w_omega_star(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        let phase = PhaseExponent::omega(&b, &a).neg().plus(&PhaseExponent::theta(a.c1.clone(), b.clone()));
        Self::linear(legs, Self::images_with(legs, i, &a + &b), phase)
    }

    /// `V^Θ`: phase −Ω(p_i, p_j), p_j ↦ p_j + p_i.
    pub fn v_theta(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        Self::linear(legs, Self::images_with(legs, j, &b + &a), PhaseExponent::omega(&a, &b).neg())
    }

    /// Inverse of `V^Θ`: phase Ω(p_i, p_j), p_j ↦ p_j − p_i.
    pub fn v_theta_star(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        Self::linear(legs, Self::images_with(legs, j, &b - &a), PhaseExponent::omega(&a, &b))
    }

    /// `V^Ω`: phase −Ω(p_i, p_j), p_i ↦ p_i − p_j.
    pub fn v_omega(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        Self::linear(legs, Self::images_with(legs, i, &a - &b), PhaseExponent::omega(&a, &b).neg())
    }

    /// Inverse of `V^Ω`: phase Ω(p_i, p_j), p_i ↦ p_i + p_j.
    pub fn v_omega_star(legs: usize, i: usize, j: usize) -> Self {
        let (a, b) = (leg(i), leg(j));
        Self::linear(legs, Self::images_with(legs, i, &a + &b), PhaseExponent::omega(&a, &b))
    }

    /// Antiunitary map conjugating every leg, reflecting the legs flagged in
    /// `reflect`; `J^Ω ⊗ J^Θ` is `antiunitary(&[true, false])`.
    pub fn antiunitary(reflect: &[bool]) -> Self {
        let images = reflect
            .iter()
            .enumerate()
            .map(|(i, &r)| if r { -&leg(i) } else { leg(i) })
            .collect();
        PointMapWithPhase {
            legs: reflect.len(),
            images,
            phase: PhaseExponent::zero(),
            factors: Vec::new(),
            antilinear: true,
        }
    }

    /// `J′^Θ f(x) = e^{−i[Θ(q;x)−Θ(q;−x)]} \bar f(x)` on one leg.
    pub fn j_prime_theta() -> Self {
        let x = leg(0);
        let phase = PhaseExponent::theta_at_q(x.clone())
            .minus(&PhaseExponent::theta_at_q(-&x))
            .neg();
        PointMapWithPhase { phase, ..Self::antiunitary(&[false]) }
    }

    /// `L_Ω(v)` acting on one leg: phase Ω(v, p), p ↦ p − v.
    pub fn translation(legs: usize, on: usize, v: &Vec2) -> Self {
        let p = leg(on);
        Self::linear(legs, Self::images_with(legs, on, &p - v), PhaseExponent::omega(v, &p))
    }

    /// ⋆-multiplication by a single-term dual element whose slots are the leg
    /// points: the element's phase and factors plus the ⋆ action.
    pub fn star_multiplication(elem: &AlgebraElement) -> Result<Self> {
        if elem.side != Side::Dual {
            return Err(Error::WrongSide { op: "star_multiplication", side: "operator" });
        }
        let legs = elem.degree;
        let expected: Vec<Vec2> = (0..legs).map(leg).collect();
        if elem.slots != expected {
            return Err(Error::SlotMismatch);
        }
        let mut action = PhaseExponent::zero();
        for i in 0..legs {
            let base = expected[i + 1..].iter().fold(Lin::zero(), |acc, p| &acc + &p.c1);
            action = action.plus(&PhaseExponent::theta(base, expected[i].clone()));
        }
        let mut out = Self::identity(legs);
        out.phase = action;
        let mut first = true;
        for t in &elem.terms {
            if !first {
                return Err(Error::Parse("star_multiplication needs a single-term element".into()));
            }
            first = false;
            out.phase = out.phase.plus(&t.phase);
            out.factors = t.factors.clone();
        }
        Ok(out)
    }

    /// A degree-1 operator-side term acting on one leg: its scalar phase
    /// (base point q) times the translation by its generator argument.
    pub fn operator_action(elem: &AlgebraElement) -> Result<Self> {
        if elem.side != Side::Operator {
            return Err(Error::WrongSide { op: "operator_action", side: "dual" });
        }
        if elem.degree != 1 || elem.terms.len() != 1 {
            return Err(Error::BadDegree { op: "operator_action", expected: 1, got: elem.degree });
        }
        let t = &elem.terms[0];
        Self::with_phase(1, t.phase.clone()).compose(&Self::translation(1, 0, &t.args[0]))
    }

    /// The named map on two legs (one leg for the J's).
    pub fn fundamental(name: FundamentalName) -> Self {
        match name {
            FundamentalName::WTheta => Self::w_theta(2, 0, 1),
            FundamentalName::WThetaStar => Self::w_theta_star(2, 0, 1),
            FundamentalName::WOmega => Self::w_omega(2, 0, 1),
            FundamentalName::WOmegaStar => Self::w_omega_star(2, 0, 1),
            FundamentalName::VTheta => Self::v_theta(2, 0, 1),
            FundamentalName::VOmega => Self::v_omega(2, 0, 1),
            FundamentalName::JTheta => Self::antiunitary(&[false]),
            FundamentalName::JOmega => Self::antiunitary(&[true]),
            FundamentalName::JPrimeTheta => Self::j_prime_theta(),
        }
    }

    fn substitution(&self) -> BTreeMap<Sym, Lin> {
        let mut map = BTreeMap::new();
        for (i, img) in self.images.iter().enumerate() {
            let (a, b) = leg(i).as_symbols().expect("leg points are symbolic");
            map.insert(a, img.c1.clone());
            map.insert(b, img.c2.clone());
        }
        map
    }

    /// Operator product `self · other` (other acts first on F, so its phase is
    /// read at the points produced by `self`).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.legs != other.legs {
            return Err(Error::LegMismatch(self.legs, other.legs));
        }
        let map = self.substitution();
        let mut phase_b = other.phase.subs(&map);
        let mut factors_b: Vec<Factor> = other
            .factors
            .iter()
            .map(|f| Factor { arg: f.arg.subs(&map), ..f.clone() })
            .collect();
        if self.antilinear {
            phase_b = phase_b.star();
            for f in &mut factors_b {
                f.conj = !f.conj;
            }
        }
        let mut factors = self.factors.clone();
        factors.extend(factors_b);
        Ok(PointMapWithPhase {
            legs: self.legs,
            images: other.images.iter().map(|v| v.subs(&map)).collect(),
            phase: self.phase.plus(&phase_b),
            factors,
            antilinear: self.antilinear != other.antilinear,
        })
    }

    /// Left-to-right operator product of a chain.
    pub fn chain(maps: &[Self]) -> Result<Self> {
        let mut it = maps.iter();
        let first = it.next().cloned().ok_or_else(|| Error::Parse("empty chain".into()))?;
        it.try_fold(first, |acc, m| acc.compose(m))
    }

    pub fn compare(&self, other: &Self) -> PointMapComparison {
        self.compare_with(other, &crate::symbolic::int(1))
    }

    /// Comparison with Θ expanded as `theta_sign · Θ`.
    pub fn compare_with(&self, other: &Self, theta_sign: &crate::symbolic::Q) -> PointMapComparison {
        let phase_difference = self.phase.expand_with(theta_sign) - other.phase.expand_with(theta_sign);
        let maps_agree = self.legs == other.legs && self.images == other.images;
        let sorted = |fs: &[Factor]| {
            let mut v = fs.to_vec();
            v.sort();
            v
        };
        let factors_agree = sorted(&self.factors) == sorted(&other.factors);
        let antilinear_agree = self.antilinear == other.antilinear;
        PointMapComparison {
            equal: phase_difference.is_zero() && maps_agree && factors_agree && antilinear_agree,
            maps_agree,
            factors_agree,
            antilinear_agree,
            phase_difference,
        }
    }
}

impl fmt::Display for PointMapWithPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        let fac: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("{}{}({})", x.name, if x.conj { "*" } else { "" }, x.arg))
            .collect();
        write!(f, "e^{{i[{}]}}", self.phase)?;
        if !fac.is_empty() {
            write!(f, " {}", fac.join(" "))?;
        }
        write!(f, " {}F({})", if self.antilinear { "conj " } else { "" }, args.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_theta_is_unitary() {
        for (a, b) in [
            (PointMapWithPhase::w_theta(2, 0, 1), PointMapWithPhase::w_theta_star(2, 0, 1)),
            (PointMapWithPhase::w_omega(2, 0, 1), PointMapWithPhase::w_omega_star(2, 0, 1)),
        ] {
            assert!(a.compose(&b).unwrap().compare(&PointMapWithPhase::identity(2)).equal);
            assert!(b.compose(&a).unwrap().compare(&PointMapWithPhase::identity(2)).equal);
        }
    }

    #[test]
    fn j_omega_is_an_involution() {
        let j = PointMapWithPhase::fundamental(FundamentalName::JOmega);
        assert!(j.compose(&j).unwrap().compare(&PointMapWithPhase::identity(1)).equal);
        let jp = PointMapWithPhase::fundamental(FundamentalName::JPrimeTheta);
        assert!(jp.compose(&jp).unwrap().compare(&PointMapWithPhase::identity(1)).equal);
    }

    #[test]
    fn composition_is_associative() {
        let a = PointMapWithPhase::w_theta(3, 0, 2);
        let b = PointMapWithPhase::w_omega(3, 1, 2);
        let c = PointMapWithPhase::antiunitary(&[true, false, true]);
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert!(l.compare(&r).equal);
    }

    #[test]
    fn translations_are_projective() {
        let v = Vec2::symbol("v");
        let w = Vec2::symbol("w");
        let lv = PointMapWithPhase::translation(1, 0, &v);
        let lw = PointMapWithPhase::translation(1, 0, &w);
        let vw = &v + &w;
        let expect = PointMapWithPhase::translation(1, 0, &vw)
            .compose(&PointMapWithPhase::with_phase(1, PhaseExponent::omega(&v, &w)))
            .unwrap();
        assert!(lv.compose(&lw).unwrap().compare(&expect).equal);
    }

    #[test]
    fn names_parse() {
        for n in FundamentalName::ALL {
            assert_eq!(n.as_str().parse::<FundamentalName>().unwrap(), n);
        }
        assert_eq!("WΘ*".parse::<FundamentalName>().unwrap(), FundamentalName::WThetaStar);
        assert_eq!("J′Θ".parse::<FundamentalName>().unwrap(), FundamentalName::JPrimeTheta);
        assert!(matches!("X".parse::<FundamentalName>(), Err(Error::UnknownMap(_))));
    }
}
