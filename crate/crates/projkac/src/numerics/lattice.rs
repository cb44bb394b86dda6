//! Finite-lattice realizations: the braid relation for the R-matrix on ℤ_n²,
//! and the Haar-weight axioms of both projective algebras with Kronecker
//! deltas in place of Dirac deltas.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::grid::C;
use crate::cocycle::{omega, theta, PlanePoint};
use crate::error::{Error, Result};

type P = [i64; 2];

// ---------------------------------------------------------------- R-matrix

/// Cyclic lattice ℤ_n² with `Ω(x,y) = (area/2)(k₁l₂ − l₁k₂)`.
struct Cyclic {
    n: usize,
    /// `e^{iΩ(a,b)}` for flat indices `a, b < n²`.
    phase: Vec<C>,
}

impl Cyclic {
    fn new(n: usize, area: f64) -> Self {
        let g = n * n;
        let mut phase = Vec::with_capacity(g * g);
        for a in 0..g {
            for b in 0..g {
                let (k1, k2) = ((a / n) as i64, (a % n) as i64);
                let (l1, l2) = ((b / n) as i64, (b % n) as i64);
                let m = (k1 * l2 - l1 * k2).rem_euclid(n as i64) as f64;
                phase.push(C::from_polar(1.0, 0.5 * area * m));
            }
        }
        Cyclic { n, phase }
    }

    fn size(&self) -> usize {
        self.n * self.n
    }

    fn diff(&self, s: usize, a: usize) -> usize {
        let n = self.n;
        ((s / n + n - a / n) % n) * n + (s % n + n - a % n) % n
    }

    /// `R` acting on two adjacent legs of a three-leg vector.
    ///
    /// `(Rψ)(x,y) = |G|⁻¹ e^{iΩ(x,y)} Σ_{z+w=x+y} e^{−iΩ(z,w)} ψ(z,w)`; the
    /// inner sum depends on `x + y` only, so one pass per fibre suffices.
    fn apply(&self, psi: &[C], first_pair: bool) -> Vec<C> {
        let g = self.size();
        let idx = |a: usize, b: usize, c: usize| (a * g + b) * g + c;
        let mut out = vec![C::new(0.0, 0.0); g * g * g];
        let norm = 1.0 / g as f64;
        let mut fibre = vec![C::new(0.0, 0.0); g];
        for s in 0..g {
            for other in 0..g {
                fibre[other] = (0..g)
                    .map(|a| {
                        let b = self.diff(s, a);
                        let v = if first_pair { psi[idx(a, b, other)] } else { psi[idx(other, a, b)] };
                        self.phase[a * g + b].conj() * v
                    })
                    .sum::<C>()
                    * norm;
            }
            for a in 0..g {
                let b = self.diff(s, a);
                let ph = self.phase[a * g + b];
                for other in 0..g {
                    let at = if first_pair { idx(a, b, other) } else { idx(other, a, b) };
                    out[at] = ph * fibre[other];
                }
            }
        }
        out
    }
}

fn probes(size: usize, count: usize, seed: u64) -> Vec<Vec<C>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..size).map(|_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect())
        .collect()
}

fn max_diff(a: &[C], b: &[C]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Braid-form residual `max|R₁₂R₂₃R₁₂ψ − R₂₃R₁₂R₂₃ψ|` over seeded probes,
/// for a cell of the given area `h²`.
pub fn braid_residual(lattice_n: usize, area: f64, seed: u64) -> Result<f64> {
    if lattice_n == 0 || lattice_n > 16 {
        return Err(Error::InvalidGrid(format!("lattice_n = {lattice_n} must lie in 1..=16")));
    }
    let lat = Cyclic::new(lattice_n, area);
    let g = lat.size();
    let mut worst: f64 = 0.0;
    for psi in probes(g * g * g, 2, seed) {
        let l = lat.apply(&lat.apply(&lat.apply(&psi, true), false), true);
        let r = lat.apply(&lat.apply(&lat.apply(&psi, false), true), false);
        worst = worst.max(max_diff(&l, &r));
    }
    Ok(worst)
}

/// The cell area `h² = 4π/n` for which the phases close on ℤ_n².
pub fn closing_area(lattice_n: usize) -> f64 {
    4.0 * PI / lattice_n as f64
}

pub fn yang_baxter_residual(lattice_n: usize) -> Result<f64> {
    braid_residual(lattice_n, closing_area(lattice_n), 0x5eed)
}

// ------------------------------------------------------- structured phases

/// `Σ c·Θ(q + shift; arg) + constant`, kept unevaluated so that base-point
/// shifts and the star rule act on it faithfully.
#[derive(Clone, Debug, Default, PartialEq)]
struct PhaseSum {
    thetas: Vec<(f64, f64, PlanePoint<f64>)>,
    constant: f64,
}

impl PhaseSum {
    fn theta(c: f64, shift: f64, arg: PlanePoint<f64>) -> Self {
        PhaseSum { thetas: vec![(c, shift, arg)], constant: 0.0 }
    }

    fn constant(c: f64) -> Self {
        PhaseSum { thetas: Vec::new(), constant: c }
    }

    fn plus(&self, o: &Self) -> Self {
        let mut thetas = self.thetas.clone();
        thetas.extend(o.thetas.iter().cloned());
        PhaseSum { thetas, constant: self.constant + o.constant }
    }

    fn shift(&self, by: f64) -> Self {
        PhaseSum {
            thetas: self.thetas.iter().map(|&(c, s, a)| (c, s + by, a)).collect(),
            constant: self.constant,
        }
    }

    /// `(c, s, v) ↦ (c, −s, −v)` on Θ-terms; ordinary negation on the rest.
    fn star(&self) -> Self {
        PhaseSum {
            thetas: self.thetas.iter().map(|&(c, s, a)| (c, -s, a.neg())).collect(),
            constant: -self.constant,
        }
    }

    fn eval(&self, q: f64) -> f64 {
        self.constant + self.thetas.iter().map(|(c, s, a)| c * theta(&(q + s), a)).sum::<f64>()
    }
}

/// A complex function on a square box `{−r..r}²` of the lattice `hℤ²`,
/// zero outside.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeFunction {
    pub spacing: f64,
    pub radius: i64,
    pub values: Vec<C>,
}

impl LatticeFunction {
    pub fn random(spacing: f64, radius: i64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let side = (2 * radius + 1) as usize;
        let values = (0..side * side).map(|_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        LatticeFunction { spacing, radius, values }
    }

    pub fn point_mass(spacing: f64, radius: i64, at: P) -> Self {
        let side = (2 * radius + 1) as usize;
        let mut f = LatticeFunction { spacing, radius, values: vec![C::new(0.0, 0.0); side * side] };
        if let Some(i) = f.index(at) {
            f.values[i] = C::new(1.0, 0.0);
        }
        f
    }

    fn index(&self, k: P) -> Option<usize> {
        let r = self.radius;
        if k[0].abs() > r || k[1].abs() > r {
            return None;
        }
        Some(((k[0] + r) * (2 * r + 1) + (k[1] + r)) as usize)
    }

    pub fn at(&self, k: P) -> C {
        self.index(k).map_or(C::new(0.0, 0.0), |i| self.values[i])
    }

    fn support(&self) -> Vec<P> {
        let r = self.radius;
        let mut out = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                if self.at([a, b]) != C::new(0.0, 0.0) {
                    out.push([a, b]);
                }
            }
        }
        out
    }

    fn point(&self, k: P) -> PlanePoint<f64> {
        PlanePoint::new(self.spacing * k[0] as f64, self.spacing * k[1] as f64)
    }
}

fn add(a: P, b: P) -> P {
    [a[0] + b[0], a[1] + b[1]]
}

fn neg(a: P) -> P {
    [-a[0], -a[1]]
}

fn compare(a: &BTreeMap<Vec<P>, C>, b: &BTreeMap<Vec<P>, C>) -> f64 {
    let zero = C::new(0.0, 0.0);
    a.keys()
        .chain(b.keys())
        .map(|k| (a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).norm())
        .fold(0.0, f64::max)
}

// ---------------------------------------------------------- operator side

#[derive(Clone, Debug)]
struct OpTerm {
    amp: C,
    phase: PhaseSum,
    legs: Vec<P>,
}

/// Finite combinations of tensor products of the generators `L(x)`.
#[derive(Clone, Debug)]
struct OpElement {
    h: f64,
    terms: Vec<OpTerm>,
}

impl OpElement {
    fn pt(&self, k: P) -> PlanePoint<f64> {
        PlanePoint::new(self.h * k[0] as f64, self.h * k[1] as f64)
    }

    /// `f̂ = Σ_x f(x) L(x)`.
    fn from_function(f: &LatticeFunction) -> Self {
        let terms = f
            .support()
            .into_iter()
            .map(|k| OpTerm { amp: f.at(k), phase: PhaseSum::default(), legs: vec![k] })
            .collect();
        OpElement { h: f.spacing, terms }
    }

    fn unit(h: f64, degree: usize) -> Self {
        OpElement {
            h,
            terms: vec![OpTerm { amp: C::new(1.0, 0.0), phase: PhaseSum::default(), legs: vec![[0, 0]; degree] }],
        }
    }

    fn scaled(mut self, k: C) -> Self {
        for t in &mut self.terms {
            t.amp *= k;
        }
        self
    }

    /// The right factor's phase is read at `a⁻¹·q`, `a` the left factor's
    /// first leg, and every leg contributes `Ω(aᵢ, bᵢ)`.
    fn multiply(&self, o: &Self) -> Self {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &o.terms {
                let mut phase = a.phase.plus(&b.phase.shift(-self.pt(a.legs[0]).x1));
                for (u, v) in a.legs.iter().zip(&b.legs) {
                    phase = phase.plus(&PhaseSum::constant(omega(&self.pt(*u), &self.pt(*v))));
                }
                let legs = a.legs.iter().zip(&b.legs).map(|(u, v)| add(*u, *v)).collect();
                terms.push(OpTerm { amp: a.amp * b.amp, phase, legs });
            }
        }
        OpElement { h: self.h, terms }
    }

    fn dagger(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| OpTerm { amp: t.amp.conj(), phase: t.phase.star(), legs: t.legs.iter().map(|l| neg(*l)).collect() })
            .collect();
        OpElement { h: self.h, terms }
    }

    /// `L(x) ↦ e^{iΘ(q;−x)} L(x) ⊗ L(x)` on degree one.
    fn coproduct(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let x = self.pt(t.legs[0]);
                OpTerm { amp: t.amp, phase: t.phase.plus(&PhaseSum::theta(1.0, 0.0, x.neg())), legs: vec![t.legs[0]; 2] }
            })
            .collect();
        OpElement { h: self.h, terms }
    }

    fn coinvolution(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut phase = t.phase.clone();
                for l in &t.legs {
                    let a = self.pt(*l);
                    phase = phase.plus(&PhaseSum::theta(1.0, 0.0, a)).plus(&PhaseSum::theta(-1.0, 0.0, a.neg()));
                }
                OpTerm { amp: t.amp, phase, legs: t.legs.iter().map(|l| neg(*l)).collect() }
            })
            .collect();
        OpElement { h: self.h, terms }
    }

    /// `𝟙 ⊗ self`.
    fn behind_unit(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut legs = vec![[0, 0]];
                legs.extend(t.legs.iter().cloned());
                OpTerm { legs, ..t.clone() }
            })
            .collect();
        OpElement { h: self.h, terms }
    }

    /// `φ(L(x)) = δ_{x,0}` on the given leg.
    fn trace_leg(&self, leg: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.legs[leg] == [0, 0])
            .map(|t| {
                let mut legs = t.legs.clone();
                legs.remove(leg);
                OpTerm { legs, ..t.clone() }
            })
            .collect();
        OpElement { h: self.h, terms }
    }

    fn eval(&self, q: f64, nu: f64) -> BTreeMap<Vec<P>, C> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.legs.clone()).or_insert(C::new(0.0, 0.0)) += t.amp * C::from_polar(1.0, nu * t.phase.eval(q));
        }
        out
    }
}

// -------------------------------------------------------------- dual side

/// How the base points of a multi-slot phase are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Bases {
    /// Every slot reads its Θ at `q`.
    Plain,
    /// Slot `i` reads its Θ at `q + Σ_{j>i} s_j₁`, the tensor-product rule.
    Tensor,
}

#[derive(Clone, Debug)]
struct DualTerm {
    amp: C,
    phase: PhaseSum,
}

/// A function of one or two lattice slots, one structured term per slot tuple.
#[derive(Clone, Debug)]
struct DualElement {
    h: f64,
    entries: BTreeMap<Vec<P>, DualTerm>,
}

impl DualElement {
    fn pt(&self, k: P) -> PlanePoint<f64> {
        PlanePoint::new(self.h * k[0] as f64, self.h * k[1] as f64)
    }

    fn bases(&self, slots: &[P], rule: Bases) -> Vec<f64> {
        (0..slots.len())
            .map(|i| match rule {
                Bases::Plain => 0.0,
                Bases::Tensor => slots[i + 1..].iter().map(|s| self.pt(*s).x1).sum(),
            })
            .collect()
    }

    fn from_function(f: &LatticeFunction) -> Self {
        let entries = f
            .support()
            .into_iter()
            .map(|k| (vec![k], DualTerm { amp: f.at(k), phase: PhaseSum::default() }))
            .collect();
        DualElement { h: f.spacing, entries }
    }

    /// `(Δf)(x,y) = e^{−iΩ(x,y)} f(x + y)` for `x` in the window.
    fn coproduct(&self, window: i64) -> Self {
        let mut entries = BTreeMap::new();
        for (k, t) in &self.entries {
            let s = k[0];
            for a in -window..=window {
                for b in -window..=window {
                    let x = [a, b];
                    let y = add(s, neg(x));
                    // x + y = s, so the Θ-terms of the source carry over unchanged
                    let phase = t.phase.plus(&PhaseSum::constant(-omega(&self.pt(x), &self.pt(y))));
                    entries.insert(vec![x, y], DualTerm { amp: t.amp, phase });
                }
            }
        }
        DualElement { h: self.h, entries }
    }

    fn involution(&self, rule: Bases) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(slots, t)| {
                let mut phase = t.phase.star();
                for (s, b) in slots.iter().zip(self.bases(slots, rule)) {
                    let v = self.pt(*s);
                    phase = phase.plus(&PhaseSum::theta(-1.0, b, v)).plus(&PhaseSum::theta(1.0, b, v.neg()));
                }
                (slots.clone(), DualTerm { amp: t.amp.conj(), phase })
            })
            .collect();
        DualElement { h: self.h, entries }
    }

    fn star(&self, o: &Self, rule: Bases) -> Self {
        let entries = self
            .entries
            .iter()
            .filter_map(|(slots, a)| {
                let b = o.entries.get(slots)?;
                let mut phase = a.phase.plus(&b.phase);
                for (s, base) in slots.iter().zip(self.bases(slots, rule)) {
                    phase = phase.plus(&PhaseSum::theta(1.0, base, self.pt(*s)));
                }
                Some((slots.clone(), DualTerm { amp: a.amp * b.amp, phase }))
            })
            .collect();
        DualElement { h: self.h, entries }
    }

    /// `𝟙 ⊗ self` with the unit slot in the window; under the tensor rule
    /// the unit's Θ is read at `q + y₁`.
    fn behind_unit(&self, window: i64, rule: Bases) -> Self {
        let mut entries = BTreeMap::new();
        for (k, t) in &self.entries {
            let y = k[0];
            let base = match rule {
                Bases::Plain => 0.0,
                Bases::Tensor => self.pt(y).x1,
            };
            for a in -window..=window {
                for b in -window..=window {
                    let x = [a, b];
                    let phase = t.phase.plus(&PhaseSum::theta(-1.0, base, self.pt(x)));
                    entries.insert(vec![x, y], DualTerm { amp: t.amp, phase });
                }
            }
        }
        DualElement { h: self.h, entries }
    }

    /// `(id ⊗ φ)F(x) = Σ_y e^{−iΘ(b;−y)} F(x,y)`, evaluated, where `b = q`
    /// or `b = x⁻¹·q`.
    fn trace_second(&self, q: f64, nu: f64, shifted: bool) -> BTreeMap<Vec<P>, C> {
        let mut out = BTreeMap::new();
        for (slots, t) in &self.entries {
            let (x, y) = (self.pt(slots[0]), self.pt(slots[1]));
            let base = if shifted { q - x.x1 } else { q };
            let w = C::from_polar(1.0, -nu * theta(&base, &y.neg()));
            *out.entry(vec![slots[0]]).or_insert(C::new(0.0, 0.0)) +=
                w * t.amp * C::from_polar(1.0, nu * t.phase.eval(q));
        }
        out
    }
}

/// `κ^Θ h(x) = e^{−i[Θ(q;x) − Θ(q;−x)]} h(−x)` on evaluated one-slot data.
fn dual_coinvolution(h: &BTreeMap<Vec<P>, C>, spacing: f64, q: f64, nu: f64) -> BTreeMap<Vec<P>, C> {
    h.iter()
        .map(|(k, v)| {
            let x = neg(k[0]);
            let p = PlanePoint::new(spacing * x[0] as f64, spacing * x[1] as f64);
            let odd = theta(&q, &p) - theta(&q, &p.neg());
            (vec![x], v * C::from_polar(1.0, -nu * odd))
        })
        .collect()
}

/// Residuals of the two Haar-weight axioms on both algebras.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HaarResiduals {
    pub operator_left_invariance: f64,
    pub operator_strong_invariance: f64,
    /// Second leg and unit read at `x⁻¹·q`.
    pub dual_left_invariance: f64,
    /// `(Δg)°` with every slot at `q`.
    pub dual_strong_invariance: f64,
    /// Every base point at `q`.
    pub dual_left_invariance_literal: f64,
    /// `Δ(g°)` with tensor-rule base points throughout.
    pub dual_strong_invariance_literal: f64,
}

impl HaarResiduals {
    /// The four residuals the axioms are asserted on.
    pub fn max_adopted(&self) -> f64 {
        self.operator_left_invariance
            .max(self.operator_strong_invariance)
            .max(self.dual_left_invariance)
            .max(self.dual_strong_invariance)
    }
}

fn operator_residuals(f: &LatticeFunction, g: &LatticeFunction, nu: f64, q: f64) -> (f64, f64) {
    let h = f.spacing;
    let fh = OpElement::from_function(f);
    let gd = OpElement::from_function(g).dagger();
    let df = fh.coproduct();

    let lhs = df.trace_leg(1).eval(q, nu);
    let rhs = OpElement::unit(h, 1).scaled(f.at([0, 0])).eval(q, nu);
    let left = compare(&lhs, &rhs);

    let lhs = gd.behind_unit().multiply(&df).trace_leg(1).eval(q, nu);
    let rhs = gd.coproduct().multiply(&fh.behind_unit()).trace_leg(1).coinvolution().eval(q, nu);
    (left, compare(&lhs, &rhs))
}

fn dual_residuals(f: &LatticeFunction, g: &LatticeFunction, nu: f64, q: f64) -> (f64, f64, f64, f64) {
    let h = f.spacing;
    let window = f.radius + g.radius;
    let df = DualElement::from_function(f).coproduct(window);
    let gd = DualElement::from_function(g);

    // left invariance
    let phi_f: C = f
        .support()
        .into_iter()
        .map(|k| C::from_polar(1.0, -nu * theta(&q, &f.point(k).neg())) * f.at(k))
        .sum();
    let unit = |x: P, base: f64| {
        let p = PlanePoint::new(h * x[0] as f64, h * x[1] as f64);
        phi_f * C::from_polar(1.0, -nu * theta(&base, &p))
    };
    let lhs = df.trace_second(q, nu, true);
    let rhs: BTreeMap<_, _> = lhs.keys().map(|k| (k.clone(), unit(k[0], q - h * k[0][0] as f64))).collect();
    let left = compare(&lhs, &rhs);
    let lhs = df.trace_second(q, nu, false);
    let rhs: BTreeMap<_, _> = lhs.keys().map(|k| (k.clone(), unit(k[0], q))).collect();
    let left_literal = compare(&lhs, &rhs);

    // strong invariance
    let strong = |rule: Bases, literal: bool| {
        let g_inv = gd.involution(rule);
        let lhs = g_inv.behind_unit(window, rule).star(&df, rule).trace_second(q, nu, false);
        let dg = if literal { g_inv.coproduct(window) } else { gd.coproduct(window).involution(rule) };
        let unit_f = DualElement::from_function(f).behind_unit(window, rule);
        let inner = dg.star(&unit_f, rule).trace_second(q, nu, false);
        compare(&lhs, &dual_coinvolution(&inner, h, q, nu))
    };
    (left, strong(Bases::Plain, false), left_literal, strong(Bases::Tensor, true))
}

/// Both Haar axioms on both algebras for lattice functions `f`, `g` at the
/// base point `q`.
pub fn haar_axiom_residuals(f: &LatticeFunction, g: &LatticeFunction, nu: f64, q: f64) -> Result<HaarResiduals> {
    if f.spacing != g.spacing {
        return Err(Error::GridMismatch(format!("lattice spacings {} and {}", f.spacing, g.spacing)));
    }
    let (ol, os) = operator_residuals(f, g, nu, q);
    let (dl, ds, dll, dsl) = dual_residuals(f, g, nu, q);
    Ok(HaarResiduals {
        operator_left_invariance: ol,
        operator_strong_invariance: os,
        dual_left_invariance: dl,
        dual_strong_invariance: ds,
        dual_left_invariance_literal: dll,
        dual_strong_invariance_literal: dsl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `R` by direct summation over all `(z,w)` with explicit deltas and
    /// phases computed from coordinates.
    fn brute_apply(n: usize, area: f64, psi: &[C], first_pair: bool) -> Vec<C> {
        let g = n * n;
        let h = area.sqrt();
        let pt = |a: usize| PlanePoint::new(h * (a / n) as f64, h * (a % n) as f64);
        let same = |a: usize, b: usize, c: usize, d: usize| {
            (a / n + b / n) % n == (c / n + d / n) % n && (a % n + b % n) % n == (c % n + d % n) % n
        };
        let idx = |a: usize, b: usize, c: usize| (a * g + b) * g + c;
        let mut out = vec![C::new(0.0, 0.0); g * g * g];
        for x in 0..g {
            for y in 0..g {
                for z in 0..g {
                    for w in 0..g {
                        if !same(x, y, z, w) {
                            continue;
                        }
                        let ph = C::from_polar(1.0 / g as f64, omega(&pt(x), &pt(y)) - omega(&pt(z), &pt(w)));
                        for o in 0..g {
                            if first_pair {
                                out[idx(x, y, o)] += ph * psi[idx(z, w, o)];
                            } else {
                                out[idx(o, x, y)] += ph * psi[idx(o, z, w)];
                            }
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn fibre_application_matches_direct_sum() {
        for n in [2, 3, 4] {
            let area = closing_area(n);
            let lat = Cyclic::new(n, area);
            let g = n * n;
            let psi = &probes(g * g * g, 1, 9)[0];
            for first in [true, false] {
                let fast = lat.apply(psi, first);
                let slow = brute_apply(n, area, psi, first);
                assert!(max_diff(&fast, &slow) < 1e-12, "n={n}");
            }
        }
    }

    #[test]
    fn braid_relation_by_direct_sum() {
        let n = 4;
        let area = closing_area(n);
        let psi = &probes(16 * 16 * 16, 1, 3)[0];
        let ap = |v: &[C], f: bool| brute_apply(n, area, v, f);
        let l = ap(&ap(&ap(psi, true), false), true);
        let r = ap(&ap(&ap(psi, false), true), false);
        assert!(max_diff(&l, &r) < 1e-12);
    }

    #[test]
    fn single_point_lattice_is_trivial() {
        assert_eq!(yang_baxter_residual(1).unwrap(), 0.0);
    }

    #[test]
    fn braid_relation_holds_on_small_lattices() {
        for n in [2, 3, 4] {
            assert!(yang_baxter_residual(n).unwrap() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn wrong_cell_area_breaks_the_relation() {
        assert!(braid_residual(3, 2.0 * PI / 3.0, 1).unwrap() > 1e-3);
    }

    #[test]
    fn oversized_lattice_is_rejected() {
        assert!(yang_baxter_residual(17).is_err());
    }

    #[test]
    fn haar_axioms_on_random_functions() {
        let f = LatticeFunction::random(0.7, 2, 1);
        let g = LatticeFunction::random(0.7, 2, 2);
        for q in [0.3, -1.1] {
            let r = haar_axiom_residuals(&f, &g, 1.0, q).unwrap();
            assert!(r.max_adopted() < 1e-12, "{r:?}");
        }
    }

    #[test]
    fn haar_axioms_on_point_mass_are_exact() {
        let f = LatticeFunction::point_mass(0.5, 1, [0, 0]);
        let g = LatticeFunction::point_mass(0.5, 1, [1, -1]);
        let r = haar_axiom_residuals(&f, &g, 2.0, 0.25).unwrap();
        assert_eq!(r.operator_left_invariance, 0.0);
        assert!(r.max_adopted() < 1e-15);
    }
}
