//! The 2-cocycle Ω of the translation group of the plane, the gauge cochain Θ
//! whose coboundary it is, and the action of the plane on base points.
//!
//! The scalar functions are generic so the exact layer (rationals) and the
//! numeric layer (`f64`) share one code path.

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::symbolic::{Lin, Poly, Vec2, Q};

/// A point `(x1, x2)` of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct PlanePoint<T> {
    pub x1: T,
    pub x2: T,
}

impl<T: Num + Clone> PlanePoint<T> {
    pub fn new(x1: T, x2: T) -> Self {
        PlanePoint { x1, x2 }
    }

    pub fn origin() -> Self {
        PlanePoint { x1: T::zero(), x2: T::zero() }
    }

    pub fn add(&self, o: &Self) -> Self {
        PlanePoint { x1: self.x1.clone() + o.x1.clone(), x2: self.x2.clone() + o.x2.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        PlanePoint { x1: self.x1.clone() - o.x1.clone(), x2: self.x2.clone() - o.x2.clone() }
    }

    pub fn neg(&self) -> Self {
        PlanePoint { x1: T::zero() - self.x1.clone(), x2: T::zero() - self.x2.clone() }
    }
}

fn half<T: Num>() -> T {
    T::one() / (T::one() + T::one())
}

/// Ω(x,y) = ½(x₁y₂ − y₁x₂).
pub fn omega<T: Num + Clone>(x: &PlanePoint<T>, y: &PlanePoint<T>) -> T {
    half::<T>() * (x.x1.clone() * y.x2.clone() - y.x1.clone() * x.x2.clone())
}

/// Θ(q;x) = −½(2q + x₁)x₂.
pub fn theta<T: Num + Clone>(q: &T, x: &PlanePoint<T>) -> T {
    let two = T::one() + T::one();
    T::zero() - half::<T>() * (two * q.clone() + x.x1.clone()) * x.x2.clone()
}

/// The left action y·q = q + y₁.
pub fn act<T: Num + Clone>(y: &PlanePoint<T>, q: &T) -> T {
    q.clone() + y.x1.clone()
}

/// Θ(y·q;x) − Θ(q;x+y) + Θ(q;y); equal to Ω(x,y) for every q.
pub fn coboundary_theta<T: Num + Clone>(q: &T, x: &PlanePoint<T>, y: &PlanePoint<T>) -> T {
    theta(&act(y, q), x) - theta(q, &x.add(y)) + theta(q, y)
}

/// Ω(y,z) − Ω(x+y,z) + Ω(x,y+z) − Ω(x,y); identically zero.
pub fn delta_omega<T: Num + Clone>(x: &PlanePoint<T>, y: &PlanePoint<T>, z: &PlanePoint<T>) -> T {
    omega(y, z) - omega(&x.add(y), z) + omega(x, &y.add(z)) - omega(x, y)
}

/// Symbolic Ω of two linear-form points.
pub fn omega_poly(x: &Vec2, y: &Vec2) -> Poly {
    let a = &x.c1.to_poly() * &y.c2.to_poly();
    let b = &y.c1.to_poly() * &x.c2.to_poly();
    (a - b).scale(&crate::symbolic::rat(1, 2))
}

/// Symbolic Θ(q + shift; x) scaled by `sign`; `sign = -1` is the mutation
/// used to show the catalog is sensitive to the cochain.
pub fn theta_poly_signed(shift: &Lin, x: &Vec2, sign: &Q) -> Poly {
    let base = &Poly::var(crate::symbolic::Sym::q()) + &shift.to_poly();
    let two = crate::symbolic::int(2);
    let lhs = &base.scale(&two) + &x.c1.to_poly();
    (&lhs * &x.c2.to_poly()).scale(&(crate::symbolic::rat(-1, 2) * sign))
}

/// Symbolic Θ(q + shift; x).
pub fn theta_poly(shift: &Lin, x: &Vec2) -> Poly {
    theta_poly_signed(shift, x, &crate::symbolic::int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{int, rat};

    fn p(a: i64, b: i64) -> PlanePoint<Q> {
        PlanePoint::new(int(a), int(b))
    }

    #[test]
    fn omega_of_basis_vectors() {
        assert_eq!(omega(&p(1, 0), &p(0, 1)), rat(1, 2));
    }

    #[test]
    fn theta_at_unit_diagonal() {
        assert_eq!(theta(&int(0), &p(1, 1)), rat(-1, 2));
    }

    #[test]
    fn action_example() {
        assert_eq!(act(&p(3, 7), &int(2)), int(5));
    }

    #[test]
    fn delta_omega_on_fixed_triple() {
        assert_eq!(delta_omega(&p(1, 2), &p(3, 4), &p(5, 6)), int(0));
    }

    #[test]
    fn coboundary_on_basis() {
        assert_eq!(coboundary_theta(&int(0), &p(1, 0), &p(0, 1)), rat(1, 2));
    }

    #[test]
    fn float_path_agrees() {
        let x = PlanePoint::new(0.3_f64, -1.25);
        let y = PlanePoint::new(2.0_f64, 0.5);
        let r = coboundary_theta(&0.7, &x, &y) - omega(&x, &y);
        assert!(r.abs() < 1e-15);
    }

    #[test]
    fn symbolic_coboundary_is_omega() {
        let x = Vec2::symbol("x");
        let y = Vec2::symbol("y");
        let lhs = theta_poly(&y.c1, &x) - theta_poly(&Lin::zero(), &(&x + &y))
            + theta_poly(&Lin::zero(), &y);
        assert_eq!(lhs, omega_poly(&x, &y));
    }
}
