//! Projective representation on a grid, Weyl quantization and its inverse,
//! twisted convolution and the Plancherel residual.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::fourier::{fourier2d, Direction};
use super::grid::{Grid2D, GridFunction2D, OperatorKernel, WaveFunction1D, C};
use crate::cocycle::PlanePoint;
use crate::error::{Error, Result};

/// `(S_ν(x)ξ)(q) = e^{−iν(q − x₁/2)x₂} ξ(q − x₁)`, periodic in `q`.
pub fn apply_projective_rep(x: PlanePoint<f64>, xi: &WaveFunction1D, nu: f64) -> Result<WaveFunction1D> {
    let g = xi.grid();
    let d = g.spacing();
    let s = x.x1 / d;
    if (s - s.round()).abs() > 1e-9 {
        return Err(Error::OffGrid(x.x1));
    }
    let n = g.n as i64;
    let s = s.round() as i64;
    let values = (0..g.n)
        .map(|a| {
            let q = g.point(a);
            let src = (a as i64 - s).rem_euclid(n) as usize;
            C::from_polar(1.0, -nu * (q - 0.5 * x.x1) * x.x2) * xi.values[src]
        })
        .collect();
    Ok(WaveFunction1D { values, ..xi.clone() })
}

/// `c(ν) = |ν|/2π`, fixed so that `Tr_ν(f̂) = f(0)` for every `ν`.
pub fn trace_constant(nu: f64) -> f64 {
    nu.abs() / (2.0 * PI)
}

/// `K(q,u) = Σ_v Δ e^{−iν(q+u)v/2} f(q − u, v)`, with `f` extended by zero
/// off the grid.
///
/// For each row of `f` the `v`-sums are tabulated once per value of `q + u`,
/// so assembly costs `2n³`.
pub fn weyl_quantize(f: &GridFunction2D, nu: f64) -> OperatorKernel {
    let g = f.grid;
    let n = g.n;
    let d = g.spacing();
    let half = (n / 2) as i64;
    let mut table = vec![C::new(0.0, 0.0); n * 2 * n];
    for i in 0..n {
        for t in 0..2 * n {
            let sum_qu = (t as f64 - n as f64) * d;
            let mut acc = C::new(0.0, 0.0);
            for j in 0..n {
                acc += C::from_polar(1.0, -0.5 * nu * sum_qu * g.point(j)) * f.at(i, j);
            }
            table[i * 2 * n + t] = acc * d;
        }
    }
    let mut k = OperatorKernel::zeros(g, nu);
    for a in 0..n {
        for b in 0..n {
            let i = a as i64 - b as i64 + half;
            if (0..n as i64).contains(&i) {
                k.values[a * n + b] = table[i as usize * 2 * n + a + b];
            }
        }
    }
    k
}

/// `Tr_ν K = c(ν) Δ Σ_q K(q,q)`.
pub fn operator_trace(k: &OperatorKernel) -> C {
    let d = k.grid().spacing();
    let diag: C = (0..k.n).map(|a| k.at(a, a)).sum();
    diag * d * trace_constant(k.nu)
}

/// `f(x) = Tr_ν[S_ν(x)† K] = c Σ_q Δ e^{iν(q + x₁/2)x₂} K(q + x₁, q)`.
pub fn wigner_recover(k: &OperatorKernel, nu: f64) -> GridFunction2D {
    let g = k.grid();
    let n = g.n;
    let d = g.spacing();
    let c = trace_constant(nu) * d;
    let mut out = GridFunction2D::zeros(g);
    for i in 0..n {
        let x1 = g.point(i);
        let s = i as i64 - (n / 2) as i64;
        let rows: Vec<(usize, usize)> = (0..n)
            .filter_map(|a| {
                let r = a as i64 + s;
                (0..n as i64).contains(&r).then_some((a, r as usize))
            })
            .collect();
        for j in 0..n {
            let x2 = g.point(j);
            let acc: C = rows
                .iter()
                .map(|&(a, r)| C::from_polar(1.0, nu * (g.point(a) + 0.5 * x1) * x2) * k.at(r, a))
                .sum();
            out.values[i * n + j] = acc * c;
        }
    }
    out
}

/// `e^{iν p_a p_b / 2}` for grid points `p`.
fn half_product_table(g: Grid2D, nu: f64) -> Vec<C> {
    let p = g.points();
    let mut t = Vec::with_capacity(g.n * g.n);
    for a in &p {
        for b in &p {
            t.push(C::from_polar(1.0, 0.5 * nu * a * b));
        }
    }
    t
}

/// `(f⊛g)(z) = Σ_x Δ² e^{iνΩ(x,z)} f(x) g(z − x)`, periodic in `z − x`.
pub fn twisted_convolution(f: &GridFunction2D, g: &GridFunction2D, nu: f64) -> Result<GridFunction2D> {
    f.grid.check_same(&g.grid)?;
    let grid = f.grid;
    let n = grid.n;
    let d = grid.spacing();
    let e = half_product_table(grid, nu);
    let mut out = GridFunction2D::zeros(grid);
    let wrap = |z: usize, x: usize| (z + n + n / 2 - x) % n;
    for z1 in 0..n {
        for z2 in 0..n {
            let mut acc = C::new(0.0, 0.0);
            for x1 in 0..n {
                let r1 = wrap(z1, x1);
                let e1 = e[x1 * n + z2];
                for x2 in 0..n {
                    let fx = f.values[x1 * n + x2];
                    if fx.re == 0.0 && fx.im == 0.0 {
                        continue;
                    }
                    // Ω(x,z) = ½(x₁z₂ − z₁x₂)
                    let phase = e1 * e[z1 * n + x2].conj();
                    acc += phase * fx * g.values[r1 * n + wrap(z2, x2)];
                }
            }
            out.values[z1 * n + z2] = acc * (d * d);
        }
    }
    Ok(out)
}

/// A residual that is relative when the reference is nonzero and absolute
/// otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub value: f64,
    pub relative: bool,
}

/// `|‖f‖² − Tr_ν[f̂†f̂]| / ‖f‖²`.
pub fn plancherel_residual(f: &GridFunction2D, nu: f64) -> Residual {
    let k = weyl_quantize(f, nu);
    let d = f.grid.spacing();
    let trace = trace_constant(nu) * d * d * k.values.iter().map(|v| v.norm_sqr()).sum::<f64>();
    let norm = f.norm_sq();
    if norm == 0.0 {
        return Residual { value: trace.abs(), relative: false };
    }
    Residual { value: (norm - trace).abs() / norm, relative: true }
}

/// Result of rewriting `f̂` over the self-adjoint family `S̃`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelfAdjointDecomposition {
    pub tilde_f: GridFunction2D,
    /// Relative Frobenius distance between the two kernel assemblies.
    pub check: f64,
    /// `‖f̂ − f̂†‖/‖f̂‖`.
    pub self_adjoint_defect: f64,
    /// `max|Im f̃| / max|f̃|`.
    pub imaginary_ratio: f64,
}

/// With `S̃(y) = (2πħ)⁻¹ Σ_x Δ² e^{(i/ħ)x·y} S(x)`, assembles `Σ_y f̃(y)S̃(y)`
/// directly from the `S̃` kernels and compares it with `Σ_x f(x)S(x)`.
pub fn weyl_selfadjoint_decompose(f: &GridFunction2D, hbar: f64) -> Result<SelfAdjointDecomposition> {
    let nu = 1.0 / hbar;
    let tilde_f = fourier2d(f, hbar, Direction::Forward)?;
    let direct = weyl_quantize(f, nu);

    let g = f.grid;
    let n = g.n;
    let d = g.spacing();
    let ty = tilde_f.grid;
    let dy = ty.spacing();
    let yp = ty.points();
    // p[t][y₂] = Σ_v Δ e^{i v (y₂/ħ − ν(q+u)/2)}, t indexes q + u
    let mut p = vec![C::new(0.0, 0.0); 2 * n * n];
    for t in 0..2 * n {
        let sum_qu = (t as f64 - n as f64) * d;
        for (l, y2) in yp.iter().enumerate() {
            let w = y2 / hbar - 0.5 * nu * sum_qu;
            p[t * n + l] = (0..n).map(|j| C::from_polar(1.0, w * g.point(j))).sum::<C>() * d;
        }
    }
    // r[i][y₂] = Σ_{y₁} f̃(y₁,y₂) e^{(i/ħ)(q − u)y₁}, i indexes q − u
    let mut r = vec![C::new(0.0, 0.0); n * n];
    for i in 0..n {
        let diff = g.point(i);
        for l in 0..n {
            r[i * n + l] = (0..n)
                .map(|m| C::from_polar(1.0, diff * yp[m] / hbar) * tilde_f.at(m, l))
                .sum();
        }
    }
    let pref = dy * dy / (2.0 * PI * hbar);
    let mut assembled = OperatorKernel::zeros(g, nu);
    for a in 0..n {
        for b in 0..n {
            let i = a as i64 - b as i64 + (n / 2) as i64;
            if !(0..n as i64).contains(&i) {
                continue;
            }
            let i = i as usize;
            let acc: C = (0..n).map(|l| p[(a + b) * n + l] * r[i * n + l]).sum();
            assembled.values[a * n + b] = acc * pref;
        }
    }

    let norm = direct.frobenius();
    let diff = assembled.sub(&direct)?.frobenius();
    let check = if norm == 0.0 { diff } else { diff / norm };
    let defect = direct.sub(&direct.adjoint())?.frobenius();
    let self_adjoint_defect = if norm == 0.0 { defect } else { defect / norm };
    let max = tilde_f.max_abs();
    let imag = tilde_f.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    let imaginary_ratio = if max == 0.0 { 0.0 } else { imag / max };
    Ok(SelfAdjointDecomposition { tilde_f, check, self_adjoint_defect, imaginary_ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::omega;

    fn grid() -> Grid2D {
        Grid2D::new(64, 16.0).unwrap()
    }

    fn gaussian(g: Grid2D, c: (f64, f64), w: f64) -> GridFunction2D {
        GridFunction2D::from_fn(g, |a, b| {
            C::new((-((a - c.0).powi(2) + (b - c.1).powi(2)) / (2.0 * w * w)).exp(), 0.0)
        })
    }

    fn packet(g: Grid2D) -> WaveFunction1D {
        WaveFunction1D::from_fn(g, |q| C::from_polar((-(q - 0.5).powi(2)).exp(), 0.7 * q))
    }

    #[test]
    fn projective_relation() {
        let g = Grid2D::new(64, 16.0).unwrap();
        let xi = packet(g);
        let nu = 1.3;
        let x = PlanePoint::new(0.5, -0.7);
        let y = PlanePoint::new(-0.75, 0.2);
        let lhs = apply_projective_rep(x, &apply_projective_rep(y, &xi, nu).unwrap(), nu).unwrap();
        let rhs = apply_projective_rep(x.add(&y), &xi, nu).unwrap();
        let ph = C::from_polar(1.0, nu * omega(&x, &y));
        for (a, b) in lhs.values.iter().zip(&rhs.values) {
            assert!((a - ph * b).norm() < 1e-12);
        }
        assert!((lhs.norm_sq() - xi.norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn off_grid_translation_is_rejected() {
        let g = Grid2D::new(32, 8.0).unwrap();
        assert!(matches!(
            apply_projective_rep(PlanePoint::new(0.1, 0.0), &packet(g), 1.0),
            Err(Error::OffGrid(_))
        ));
    }

    #[test]
    fn point_mass_quantizes_to_identity() {
        let g = Grid2D::new(16, 8.0).unwrap();
        let d = g.spacing();
        let mut f = GridFunction2D::zeros(g);
        f.values[8 * 16 + 8] = C::new(1.0 / (d * d), 0.0);
        let k = weyl_quantize(&f, 1.0);
        for a in 0..16 {
            for b in 0..16 {
                let e = if a == b { 1.0 / d } else { 0.0 };
                assert!((k.at(a, b) - e).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn kernel_matches_brute_force_sum() {
        let g = Grid2D::new(8, 4.0).unwrap();
        let f = GridFunction2D::from_fn(g, |a, b| C::new(a - 0.2 * b, a * b));
        let nu = 0.8;
        let k = weyl_quantize(&f, nu);
        let d = g.spacing();
        for a in 0..8 {
            for b in 0..8 {
                let (q, u) = (g.point(a), g.point(b));
                let mut acc = C::new(0.0, 0.0);
                if let Some(i) = g.index_of(q - u) {
                    for j in 0..8 {
                        let v = g.point(j);
                        let th = crate::cocycle::theta(&q, &PlanePoint::new(u - q, -v));
                        acc += C::from_polar(d, -nu * th) * f.at(i, j);
                    }
                }
                assert!((acc - k.at(a, b)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn trace_is_value_at_origin() {
        for nu in [1.0, 2.0, -1.0, -2.0] {
            let f = gaussian(grid(), (0.0, 0.0), 1.0);
            let t = operator_trace(&weyl_quantize(&f, nu));
            assert!((t - C::new(1.0, 0.0)).norm() < 1e-8, "nu={nu}: {t}");
        }
    }

    #[test]
    fn round_trip_gaussian() {
        let f = gaussian(grid(), (0.0, 0.0), 1.0);
        let back = wigner_recover(&weyl_quantize(&f, 1.0), 1.0);
        assert!(back.rel_l2_error(&f).unwrap() < 1e-8);
    }

    #[test]
    fn involution_quantizes_to_adjoint() {
        let f = gaussian(grid(), (0.5, -0.3), 0.8).scale(C::new(0.6, 0.8));
        let nu = 1.0;
        let lhs = weyl_quantize(&f.involution(), nu);
        let rhs = weyl_quantize(&f, nu).adjoint();
        assert!(lhs.sub(&rhs).unwrap().frobenius() / rhs.frobenius() < 1e-10);
    }

    #[test]
    fn point_mass_is_twisted_unit() {
        let g = Grid2D::new(16, 8.0).unwrap();
        let d = g.spacing();
        let mut delta = GridFunction2D::zeros(g);
        delta.values[8 * 16 + 8] = C::new(1.0 / (d * d), 0.0);
        let h = gaussian(g, (0.3, 0.1), 1.0);
        let out = twisted_convolution(&delta, &h, 1.0).unwrap();
        assert!(out.sub(&h).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn plancherel_on_gaussian_and_zero() {
        assert!(plancherel_residual(&gaussian(grid(), (0.0, 0.0), 1.0), 1.0).value < 1e-8);
        let z = plancherel_residual(&GridFunction2D::zeros(grid()), 1.0);
        assert_eq!(z, Residual { value: 0.0, relative: false });
    }

    #[test]
    fn real_even_gaussian_has_real_tilde() {
        let dec = weyl_selfadjoint_decompose(&gaussian(grid(), (0.0, 0.0), 1.0), 1.0).unwrap();
        assert!(dec.check < 1e-8, "check {}", dec.check);
        assert!(dec.imaginary_ratio < 1e-12);
        assert!(dec.self_adjoint_defect < 1e-12);
    }
}
