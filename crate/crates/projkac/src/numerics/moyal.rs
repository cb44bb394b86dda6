//! The Moyal product as the Fourier image of the twisted convolution, and its
//! classical limit.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::fourier::{fourier2d, inverse_fourier2d, poisson_bracket, Direction};
use super::grid::{GridFunction2D, C};
use super::weyl::twisted_convolution;
use crate::error::Result;

/// `F ∘^ħ G = 𝓕(𝓕⁻¹F ⊛_{1/ħ} 𝓕⁻¹G)`.
pub fn moyal_star(f: &GridFunction2D, g: &GridFunction2D, hbar: f64) -> Result<GridFunction2D> {
    f.grid.check_same(&g.grid)?;
    let a = inverse_fourier2d(f, hbar)?;
    let b = inverse_fourier2d(g, hbar)?;
    fourier2d(&twisted_convolution(&a, &b, 1.0 / hbar)?, hbar, Direction::Forward)
}

/// `F∘G − G∘F`.
pub fn moyal_commutator(f: &GridFunction2D, g: &GridFunction2D, hbar: f64) -> Result<GridFunction2D> {
    moyal_star(f, g, hbar)?.sub(&moyal_star(g, f, hbar)?)
}

/// The unit of `∘^ħ`: the transform of the point mass, the constant `(2πħ)⁻¹`.
pub fn moyal_unit(f: &GridFunction2D, hbar: f64) -> GridFunction2D {
    GridFunction2D::from_fn(f.grid, |_, _| C::new(1.0 / (2.0 * PI * hbar), 0.0))
}

/// `φ_x(z) = (2πħ)⁻¹ e^{−(i/ħ)x·z}`, the transform of the point mass at `x`.
pub fn character(f: &GridFunction2D, x: (f64, f64), hbar: f64) -> GridFunction2D {
    GridFunction2D::from_fn(f.grid, |z1, z2| C::from_polar(1.0 / (2.0 * PI * hbar), -(x.0 * z1 + x.1 * z2) / hbar))
}

/// `(F∘G)(z) = (2/πħ) Σ_a Σ_b Δ⁴ F(z+a) G(z+b) e^{−(4i/ħ)Ω(a,b)}` at the grid
/// point `(i, j)`, summed directly in phase space with `F`, `G` zero off the
/// grid. Costs `n⁴`; independent of the transform route.
pub fn moyal_star_at(f: &GridFunction2D, g: &GridFunction2D, hbar: f64, at: (usize, usize)) -> Result<C> {
    f.grid.check_same(&g.grid)?;
    let grid = f.grid;
    let n = grid.n;
    let d = grid.spacing();
    let z = (grid.point(at.0), grid.point(at.1));
    let off: Vec<f64> = grid.points();
    // e^{−(2i/ħ)s t} for offsets s = p_k − z₁ and t = p_l − z₂, and its mirror
    let table = |u: f64, v: f64| -> Vec<C> {
        let mut t = Vec::with_capacity(n * n);
        for a in &off {
            for b in &off {
                t.push(C::from_polar(1.0, -2.0 * (a - u) * (b - v) / hbar));
            }
        }
        t
    };
    let e12 = table(z.0, z.1);
    let e21 = table(z.1, z.0);
    let mut acc = C::new(0.0, 0.0);
    for a1 in 0..n {
        for a2 in 0..n {
            let fa = f.values[a1 * n + a2];
            if fa.re == 0.0 && fa.im == 0.0 {
                continue;
            }
            let mut inner = C::new(0.0, 0.0);
            for b1 in 0..n {
                // 4Ω(a,b) = 2(a₁b₂ − a₂b₁)
                let conj_part = e21[a2 * n + b1].conj();
                let row = &g.values[b1 * n..(b1 + 1) * n];
                for (b2, gb) in row.iter().enumerate() {
                    inner += e12[a1 * n + b2] * conj_part * gb;
                }
            }
            acc += fa * inner;
        }
    }
    Ok(acc * (2.0 / (PI * hbar)) * d.powi(4))
}

/// Residuals of `(F∘G − G∘F) − s·iħ{F,G}` over a range of `ħ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalLimit {
    pub hbars: Vec<f64>,
    /// The sign `s` that makes the leading term cancel.
    pub sign: f64,
    /// L² residuals for the chosen sign.
    pub residuals: Vec<f64>,
    /// L² residuals for the opposite sign.
    pub opposite: Vec<f64>,
    /// Least-squares slope of `log residual` against `log ħ`.
    pub slope: f64,
}

pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let m = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / m, ly.iter().sum::<f64>() / m);
    let num: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    num / den
}

/// `F` and `G` live on a fixed phase-space grid; only `ħ` varies.
///
/// `F ∘^ħ G → 2πħ·FG` as `ħ → 0`, so the commutator is compared after
/// division by `2πħ`.
pub fn classical_limit(f: &GridFunction2D, g: &GridFunction2D, hbars: &[f64]) -> Result<ClassicalLimit> {
    let pb = poisson_bracket(f, g)?;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &h in hbars {
        let comm = moyal_commutator(f, g, h)?.scale(C::new(1.0 / (2.0 * PI * h), 0.0));
        let lead = pb.scale(C::new(0.0, h));
        plus.push(comm.sub(&lead)?.norm_sq().sqrt());
        minus.push(comm.add(&lead)?.norm_sq().sqrt());
    }
    let last = hbars.len() - 1;
    let (sign, residuals, opposite) = if plus[last] <= minus[last] { (1.0, plus, minus) } else { (-1.0, minus, plus) };
    let slope = log_log_slope(hbars, &residuals);
    Ok(ClassicalLimit { hbars: hbars.to_vec(), sign, residuals, opposite, slope })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{omega, PlanePoint};
    use crate::numerics::grid::Grid2D;

    fn bump(g: Grid2D, c: (f64, f64)) -> GridFunction2D {
        GridFunction2D::from_fn(g, |a, b| C::new((-((a - c.0).powi(2) + (b - c.1).powi(2)) / 2.0).exp(), 0.0))
    }

    #[test]
    fn characters_multiply_projectively() {
        let g = Grid2D::new(16, 8.0).unwrap();
        let hbar = 0.5;
        let probe = GridFunction2D::zeros(g);
        let xg = g.reciprocal(hbar);
        let (x, y) = ((xg.point(9), xg.point(6)), (xg.point(7), xg.point(10)));
        let lhs = moyal_star(&character(&probe, x, hbar), &character(&probe, y, hbar), hbar).unwrap();
        let ph = omega(&PlanePoint::new(x.0, x.1), &PlanePoint::new(y.0, y.1)) / hbar;
        let xy = (x.0 + y.0, x.1 + y.1);
        let rhs = character(&probe, xy, hbar).scale(C::from_polar(1.0, ph));
        assert!(lhs.sub(&rhs).unwrap().max_abs() < 1e-12 * rhs.max_abs());
    }

    #[test]
    fn unit_is_neutral() {
        let g = Grid2D::new(32, 12.0).unwrap();
        let f = bump(g, (0.4, -0.2));
        let u = moyal_unit(&f, 0.5);
        let out = moyal_star(&u, &f, 0.5).unwrap();
        assert!(out.rel_l2_error(&f).unwrap() < 1e-12);
    }

    #[test]
    fn associativity() {
        let g = Grid2D::new(64, 16.0).unwrap();
        let (a, b, c) = (bump(g, (0.5, 0.0)), bump(g, (0.0, 0.5)), bump(g, (-0.3, -0.4)));
        let h = 0.4;
        let l = moyal_star(&moyal_star(&a, &b, h).unwrap(), &c, h).unwrap();
        let r = moyal_star(&a, &moyal_star(&b, &c, h).unwrap(), h).unwrap();
        let e = l.rel_l2_error(&r).unwrap();
        assert!(e < 1e-8, "{e}");
    }

    #[test]
    fn direct_phase_space_sum_matches_transform_route() {
        let g = Grid2D::new(32, 12.0).unwrap();
        let (a, b) = (bump(g, (0.5, 0.0)), bump(g, (0.0, 0.5)));
        let star = moyal_star(&a, &b, 1.0).unwrap();
        for at in [(16, 16), (14, 18), (19, 13)] {
            let direct = moyal_star_at(&a, &b, 1.0, at).unwrap();
            assert!((direct - star.at(at.0, at.1)).norm() < 1e-8 * star.max_abs());
        }
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [0.1, 0.05, 0.025];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 7.0 * x.powi(3)).collect();
        assert!((log_log_slope(&xs, &ys) - 3.0).abs() < 1e-12);
    }
}
