//! Randomized invariants of the exact and numeric layers.

use proptest::prelude::*;

use projkac::algebra::{PhaseExponent, PointMapWithPhase};
use projkac::cocycle::{act, coboundary_theta, delta_omega, omega, theta, PlanePoint};
use projkac::numerics::fixtures::band_limited;
use projkac::numerics::{
    apply_projective_rep, fourier2d, plancherel_residual, twisted_convolution, weyl_quantize, wigner_recover, Direction,
    Grid2D, GridFunction2D, WaveFunction1D,
};
use projkac::numerics::grid::C;
use projkac::symbolic::{int, rat, Lin, Vec2, Q};

fn q() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..7).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = PlanePoint<Q>> {
    (q(), q()).prop_map(|(a, b)| PlanePoint::new(a, b))
}

/// A symbolic vector `k·(a₁, a₂) + c` over the named symbol pair.
fn vec2() -> impl Strategy<Value = Vec2> {
    (prop::sample::select(vec!["x", "y", "z"]), -3i64..4, q(), q()).prop_map(|(name, k, c1, c2)| {
        &Vec2::symbol(name).scale(&int(k)) + &Vec2::constant(c1, c2)
    })
}

fn phase() -> impl Strategy<Value = PhaseExponent> {
    let term = (vec2(), vec2(), -2i64..3, prop::bool::ANY).prop_map(|(a, b, k, with_omega)| {
        let shift = &a.c1 + &Lin::constant(int(k));
        let t = PhaseExponent::theta(shift, b.clone());
        if with_omega {
            t.plus(&PhaseExponent::omega(&a, &b))
        } else {
            t
        }
    });
    prop::collection::vec(term, 1..4).prop_map(|ts| ts.iter().fold(PhaseExponent::zero(), |acc, t| acc.plus(t)))
}

fn point_map() -> impl Strategy<Value = PointMapWithPhase> {
    let pairs = vec![(0, 1), (1, 2), (0, 2), (2, 0), (1, 0)];
    (0usize..8, prop::sample::select(pairs), vec2()).prop_map(|(kind, (i, j), v)| match kind {
        0 => PointMapWithPhase::w_theta(3, i, j),
        1 => PointMapWithPhase::w_theta_star(3, i, j),
        2 => PointMapWithPhase::w_omega(3, i, j),
        3 => PointMapWithPhase::w_omega_star(3, i, j),
        4 => PointMapWithPhase::v_theta(3, i, j),
        5 => PointMapWithPhase::v_omega_star(3, i, j),
        6 => PointMapWithPhase::translation(3, i, &v),
        _ => PointMapWithPhase::with_phase(3, PhaseExponent::theta_at_q(v)),
    })
}

proptest! {
    #[test]
    fn omega_is_antisymmetric_and_odd(x in point(), y in point()) {
        prop_assert_eq!(omega(&x, &y), -omega(&y, &x));
        prop_assert_eq!(omega(&x.neg(), &y), -omega(&x, &y));
    }

    #[test]
    fn theta_cobounds_omega(s in q(), x in point(), y in point(), z in point()) {
        prop_assert_eq!(coboundary_theta(&s, &x, &y), omega(&x, &y));
        prop_assert_eq!(theta(&s, &x) - theta(&act(&y, &s), &x), y.x1.clone() * x.x2.clone());
        prop_assert_eq!(delta_omega(&x, &y, &z), int(0));
    }

    #[test]
    fn expansion_is_additive(a in phase(), b in phase()) {
        prop_assert_eq!(a.plus(&b).expand(), a.expand() + b.expand());
    }

    #[test]
    fn star_is_an_involution(a in phase()) {
        prop_assert_eq!(a.star().star().expand(), a.expand());
    }

    #[test]
    fn point_map_composition_is_associative(a in point_map(), b in point_map(), c in point_map()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        let cmp = left.compare(&right);
        prop_assert!(cmp.equal, "phase difference {}", cmp.phase_difference);
    }
}

fn grid() -> Grid2D {
    Grid2D::new(64, 16.0).unwrap()
}

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn rel(a: &GridFunction2D, b: &GridFunction2D) -> f64 {
    a.rel_l2_error(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn numeric_maps_are_linear(s1 in 0u64..1000, s2 in 0u64..1000, re in -2.0..2.0f64, im in -2.0..2.0f64) {
        let g = grid();
        let (f, h) = (band_limited(g, s1, 3, 1.5, 1.2), band_limited(g, s2, 3, 1.5, 1.2));
        let k = c(re, im);
        let combo = f.scale(k).add(&h).unwrap();

        let lin_k = |a: &GridFunction2D, b: &GridFunction2D, ab: &GridFunction2D| rel(ab, &a.scale(k).add(b).unwrap());
        let (qf, qh, qc) = (weyl_quantize(&f, 1.0), weyl_quantize(&h, 1.0), weyl_quantize(&combo, 1.0));
        let (rf, rh, rc) = (wigner_recover(&qf, 1.0), wigner_recover(&qh, 1.0), wigner_recover(&qc, 1.0));
        prop_assert!(lin_k(&rf, &rh, &rc) < 1e-12);

        let fwd = |x: &GridFunction2D| fourier2d(x, 1.0, Direction::Forward).unwrap();
        prop_assert!(lin_k(&fwd(&f), &fwd(&h), &fwd(&combo)) < 1e-12);

        let w = band_limited(g, s1 ^ s2 ^ 0xff, 2, 1.0, 1.0);
        let tw = |x: &GridFunction2D| twisted_convolution(x, &w, 1.0).unwrap();
        prop_assert!(lin_k(&tw(&f), &tw(&h), &tw(&combo)) < 1e-12);

        let diff = qc.values.iter().zip(&qf.values).zip(&qh.values).map(|((a, b), d)| (a - k * b - d).norm_sqr()).sum::<f64>();
        prop_assert!(diff.sqrt() < 1e-12 * qc.frobenius());
    }

    #[test]
    fn round_trip_on_band_limited_inputs(seed in 0u64..10_000) {
        let f = band_limited(grid(), seed, 4, 1.5, 1.2);
        let e = rel(&wigner_recover(&weyl_quantize(&f, 1.0), 1.0), &f);
        prop_assert!(e <= 1e-8, "{e}");
    }

    #[test]
    fn plancherel_on_band_limited_inputs(seed in 0u64..10_000) {
        let r = plancherel_residual(&band_limited(grid(), seed, 4, 1.5, 1.2), 1.0);
        prop_assert!(r.value <= 1e-6, "{}", r.value);
    }

    #[test]
    fn projective_rep_is_unitary(k in -40i64..40, x2 in -3.0..3.0f64, nu in prop::sample::select(vec![1.0, 2.0, -1.0, 0.5])) {
        let g = grid();
        let xi = WaveFunction1D::from_fn(g, |q| c((-(q - 0.3).powi(2)).exp(), (q * 0.7).sin() * (-q * q / 4.0).exp()));
        let x = PlanePoint::new(k as f64 * g.spacing(), x2);
        let out = apply_projective_rep(x, &xi, nu).unwrap();
        prop_assert!((out.norm_sq() - xi.norm_sq()).abs() <= 1e-12 * xi.norm_sq());
    }
}
