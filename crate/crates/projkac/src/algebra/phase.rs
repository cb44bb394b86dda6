//! Structured phase exponents.
//!
//! A phase is kept as a list of Θ-terms plus a q-free polynomial rather than
//! as an expanded polynomial, because the conjugation rule and the action on
//! the base point act on the Θ-form. Expansion happens only when comparing.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cocycle::{omega_poly, theta_poly_signed};
use crate::symbolic::{int, Lin, Poly, Sym, Vec2, Q};

/// `coeff · Θ(q + shift; arg)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTerm {
    pub coeff: Q,
    pub shift: Lin,
    pub arg: Vec2,
}

/// Which way a phase feels a translation of the base point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Action {
    /// q ↦ by⁻¹·q
    Inverse,
    /// q ↦ by·q
    Direct,
}

/// Exponent of a unimodular phase `e^{i ν^k (Σ cΘ + poly)}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PhaseExponent {
    pub theta_terms: Vec<ThetaTerm>,
    pub poly: Poly,
    pub nu_power: u32,
}

impl PhaseExponent {
    pub fn zero() -> Self {
        PhaseExponent::default()
    }

    /// Θ(q + shift; arg).
    pub fn theta(shift: Lin, arg: Vec2) -> Self {
        PhaseExponent {
            theta_terms: vec![ThetaTerm { coeff: Q::one(), shift, arg }],
            ..Default::default()
        }
    }

    /// Θ(q; arg).
    pub fn theta_at_q(arg: Vec2) -> Self {
        PhaseExponent::theta(Lin::zero(), arg)
    }

    /// Ω(x, y) as a plain polynomial term.
    pub fn omega(x: &Vec2, y: &Vec2) -> Self {
        PhaseExponent::from_poly(omega_poly(x, y))
    }

    pub fn from_poly(poly: Poly) -> Self {
        PhaseExponent { poly, ..Default::default() }
    }

    pub fn is_empty(&self) -> bool {
        self.theta_terms.is_empty() && self.poly.is_zero()
    }

    /// Marks the exponent as multiplied by ν^k.
    pub fn with_nu_power(mut self, k: u32) -> Self {
        self.nu_power = k;
        self
    }

    fn merged_power(&self, other: &Self) -> u32 {
        if self.is_empty() {
            return other.nu_power;
        }
        if other.is_empty() {
            return self.nu_power;
        }
        assert_eq!(
            self.nu_power, other.nu_power,
            "phases with different powers of nu cannot be merged structurally"
        );
        self.nu_power
    }

    pub fn plus(&self, other: &Self) -> Self {
        let nu_power = self.merged_power(other);
        let mut theta_terms = self.theta_terms.clone();
        theta_terms.extend(other.theta_terms.iter().cloned());
        PhaseExponent { theta_terms, poly: &self.poly + &other.poly, nu_power }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, k: &Q) -> Self {
        PhaseExponent {
            theta_terms: self
                .theta_terms
                .iter()
                .map(|t| ThetaTerm { coeff: &t.coeff * k, ..t.clone() })
                .collect(),
            poly: self.poly.scale(k),
            nu_power: self.nu_power,
        }
    }

    /// Conjugation of the phase factor.
    ///
    /// Θ-terms are conjugated structurally, `(c, s, v) ↦ (c, −s, −v)`, which is
    /// how `e^{iΘ(q;−x)}` conjugates to `e^{iΘ(q;x)}` and `e^{iΘ(x⁻¹·q;y)}` to
    /// `e^{iΘ(x·q;−y)}`. The q-free part is conjugated ordinarily.
    pub fn star(&self) -> Self {
        PhaseExponent {
            theta_terms: self
                .theta_terms
                .iter()
                .map(|t| ThetaTerm { coeff: t.coeff.clone(), shift: -&t.shift, arg: -&t.arg })
                .collect(),
            poly: -&self.poly,
            nu_power: self.nu_power,
        }
    }

    /// Ordinary complex conjugation, for comparison with [`star`](Self::star).
    pub fn conj(&self) -> Self {
        self.neg()
    }

    /// Translate the base point of every Θ-term by `by` in the given direction.
    pub fn shift(&self, by: &Vec2, dir: Action) -> Self {
        let step = match dir {
            Action::Inverse => -&by.c1,
            Action::Direct => by.c1.clone(),
        };
        PhaseExponent {
            theta_terms: self
                .theta_terms
                .iter()
                .map(|t| ThetaTerm { shift: &t.shift + &step, ..t.clone() })
                .collect(),
            poly: self.poly.clone(),
            nu_power: self.nu_power,
        }
    }

    /// Add a linear form to the base point of every Θ-term.
    pub fn shift_base(&self, by: &Lin) -> Self {
        PhaseExponent {
            theta_terms: self
                .theta_terms
                .iter()
                .map(|t| ThetaTerm { shift: &t.shift + by, ..t.clone() })
                .collect(),
            poly: self.poly.clone(),
            nu_power: self.nu_power,
        }
    }

    /// Simultaneous substitution of coordinate symbols.
    pub fn subs(&self, map: &BTreeMap<Sym, Lin>) -> Self {
        PhaseExponent {
            theta_terms: self
                .theta_terms
                .iter()
                .map(|t| ThetaTerm {
                    coeff: t.coeff.clone(),
                    shift: t.shift.subs(map),
                    arg: t.arg.subs(map),
                })
                .collect(),
            poly: self.poly.subs_lin(map),
            nu_power: self.nu_power,
        }
    }

    /// The polynomial this phase stands for.
    pub fn expand(&self) -> Poly {
        self.expand_with(&int(1))
    }

    /// Expansion with Θ replaced by `theta_sign · Θ`.
    pub fn expand_with(&self, theta_sign: &Q) -> Poly {
        let mut p = self.poly.clone();
        for t in &self.theta_terms {
            if t.coeff.is_zero() {
                continue;
            }
            p = p + theta_poly_signed(&t.shift, &t.arg, theta_sign).scale(&t.coeff);
        }
        if self.nu_power > 0 {
            p = &p * &Poly::var(Sym::nu()).pow(self.nu_power);
        }
        p
    }
}

impl fmt::Display for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for t in &self.theta_terms {
            let base = if t.shift.is_zero() { "q".to_string() } else { format!("q + {}", t.shift) };
            parts.push(format!("{}·Θ({}; {})", t.coeff, base, t.arg));
        }
        if !self.poly.is_zero() {
            parts.push(self.poly.to_string());
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        let body = parts.join(" + ");
        match self.nu_power {
            0 => f.write_str(&body),
            1 => write!(f, "nu·[{body}]"),
            k => write!(f, "nu^{k}·[{body}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Vec2 {
        Vec2::symbol("x")
    }
    fn y() -> Vec2 {
        Vec2::symbol("y")
    }

    #[test]
    fn star_of_theta_at_minus_x() {
        let p = PhaseExponent::theta_at_q(-&x());
        assert_eq!(p.star(), PhaseExponent::theta_at_q(x()));
    }

    #[test]
    fn star_of_shifted_theta() {
        // Θ(x⁻¹·q; y) ↦ Θ(x·q; −y)
        let p = PhaseExponent::theta(-&x().c1, y());
        assert_eq!(p.star(), PhaseExponent::theta(x().c1, -&y()));
    }

    #[test]
    fn star_negates_omega() {
        let p = PhaseExponent::omega(&x(), &y());
        assert_eq!(p.star().expand(), -&p.expand());
    }

    #[test]
    fn shift_by_x_inverse() {
        let p = PhaseExponent::theta_at_q(-&y());
        assert_eq!(p.shift(&x(), Action::Inverse), PhaseExponent::theta(-&x().c1, -&y()));
    }

    #[test]
    fn shifts_compose() {
        let p = PhaseExponent::theta_at_q(y());
        let a = p.shift(&x(), Action::Inverse).shift(&y(), Action::Inverse);
        let b = p.shift(&(&x() + &y()), Action::Inverse);
        assert_eq!(a.expand(), b.expand());
        assert_eq!(p.shift(&Vec2::zero(), Action::Direct), p);
    }

    #[test]
    fn nu_power_scales_expansion() {
        let p = PhaseExponent::omega(&x(), &y()).with_nu_power(1);
        let expect = &omega_poly(&x(), &y()) * &Poly::var(Sym::nu());
        assert_eq!(p.expand(), expect);
    }
}
