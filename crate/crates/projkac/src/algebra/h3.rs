//! The Heisenberg group H₃ as a reference layer, and the projection of its
//! generators onto the projective algebra of the plane.

use super::element::{AlgebraElement, Scale};
use super::phase::PhaseExponent;
use crate::cocycle::omega_poly;
use crate::symbolic::{Poly, Vec2};

/// `(x, α)` with `α = e^{i·alpha}`; `alpha` is a q-free exponent that may
/// contain free central symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Element {
    pub x: Vec2,
    pub alpha: Poly,
}

/// `L(a) ⊗ L(a)`, the coproduct of a group generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Pair(pub H3Element, pub H3Element);

impl H3Element {
    pub fn new(x: Vec2, alpha: Poly) -> Self {
        H3Element { x, alpha }
    }

    pub fn identity() -> Self {
        H3Element { x: Vec2::zero(), alpha: Poly::zero() }
    }

    /// `(x, e^{iα_x})` with symbolic coordinates and a free central symbol.
    pub fn symbol(name: &str) -> Self {
        H3Element { x: Vec2::symbol(name), alpha: Poly::named(&format!("alpha_{name}")) }
    }

    /// `(x,α)(y,β) = (x+y, αβ e^{iΩ(x,y)})`.
    pub fn multiply(&self, other: &Self) -> Self {
        H3Element {
            x: &self.x + &other.x,
            alpha: &(&self.alpha + &other.alpha) + &omega_poly(&self.x, &other.x),
        }
    }

    /// `(x,α)⁻¹ = (−x, α⁻¹)`, using Ω(x,−x) = 0.
    pub fn inverse(&self) -> Self {
        H3Element { x: -&self.x, alpha: -&self.alpha }
    }

    pub fn coproduct(&self) -> H3Pair {
        H3Pair(self.clone(), self.clone())
    }

    /// `κ̂(L(x,α)) = L((x,α)⁻¹)`.
    pub fn coinvolution(&self) -> Self {
        self.inverse()
    }

    /// `L(x,α) ↦ e^{iΘ(q;−x)} L_Ω(x)`; the central slot is discarded.
    pub fn project(&self, scale: Scale) -> AlgebraElement {
        AlgebraElement::phased(scale, PhaseExponent::theta_at_q(-&self.x), vec![self.x.clone()])
    }

    /// Dual functions: `f(x,α) ↦ e^{−iΘ(q;−x)} f(x)`.
    pub fn project_function(name: &str, slot: Vec2, scale: Scale) -> AlgebraElement {
        let phase = PhaseExponent::theta_at_q(-&slot).neg();
        AlgebraElement::dual_function(name, slot, scale).times_phase(&phase)
    }
}

impl H3Pair {
    pub fn project(&self, scale: Scale) -> AlgebraElement {
        let a = self.0.project(scale);
        let b = self.1.project(scale);
        AlgebraElement::phased(
            scale,
            a.terms[0].phase.plus(&b.terms[0].phase),
            vec![self.0.x.clone(), self.1.x.clone()],
        )
    }
}
