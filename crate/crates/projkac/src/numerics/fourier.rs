//! ħ-scaled phase-space Fourier transform and spectral derivatives.

use std::f64::consts::PI;

use rustfft::FftPlanner;

use super::grid::{GridFunction2D, C};
use crate::error::{Error, Result};

/// Sign of the exponent: `Forward` uses `e^{−(i/ħ)x·z}`, `Inverse` `e^{+(i/ħ)x·z}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub fn from_sign(sign: i32) -> Result<Self> {
        match sign {
            1 => Ok(Direction::Forward),
            -1 => Ok(Direction::Inverse),
            s => Err(Error::Parse(format!("direction must be ±1, got {s}"))),
        }
    }
}

/// 2D transform of every row then every column, `values[i·n + j]`.
fn fft2(values: &mut [C], n: usize, dir: Direction) {
    let mut planner = FftPlanner::new();
    let fft = match dir {
        Direction::Forward => planner.plan_fft_forward(n),
        Direction::Inverse => planner.plan_fft_inverse(n),
    };
    for row in values.chunks_mut(n) {
        fft.process(row);
    }
    let mut col = vec![C::new(0.0, 0.0); n];
    for j in 0..n {
        for i in 0..n {
            col[i] = values[i * n + j];
        }
        fft.process(&mut col);
        for i in 0..n {
            values[i * n + j] = col[i];
        }
    }
}

fn alternating(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `F(z) = (2πħ)⁻¹ Σ_x Δ² e^{∓(i/ħ)x·z} f(x)`, sampled on `f.grid.reciprocal(ħ)`.
///
/// On centred grids `x_k·z_m/ħ = (2π/n)(k − n/2)(m − n/2)`, so the sum is a
/// plain DFT conjugated by alternating signs.
pub fn fourier2d(f: &GridFunction2D, hbar: f64, dir: Direction) -> Result<GridFunction2D> {
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::InvalidGrid(format!("hbar = {hbar} must be positive")));
    }
    let n = f.grid.n;
    let d = f.grid.spacing();
    let sigma = match dir {
        Direction::Forward => 1.0,
        Direction::Inverse => -1.0,
    };
    // e^{−iσπn/2} per axis, squared for two axes
    let per_axis = C::from_polar(1.0, -sigma * PI * (n % 4) as f64 / 2.0);
    let global = per_axis * per_axis * (d * d / (2.0 * PI * hbar));
    let mut values: Vec<C> = f
        .values
        .iter()
        .enumerate()
        .map(|(idx, v)| v * alternating(idx / n + idx % n))
        .collect();
    fft2(&mut values, n, dir);
    for (idx, v) in values.iter_mut().enumerate() {
        *v *= global * alternating(idx / n + idx % n);
    }
    Ok(GridFunction2D { grid: f.grid.reciprocal(hbar), values })
}

pub fn inverse_fourier2d(f: &GridFunction2D, hbar: f64) -> Result<GridFunction2D> {
    fourier2d(f, hbar, Direction::Inverse)
}

/// Spectral partial derivative along axis 0 (`x₁`) or 1 (`x₂`); the Nyquist
/// mode is dropped.
pub fn spectral_derivative(f: &GridFunction2D, axis: usize) -> GridFunction2D {
    let n = f.grid.n;
    let mut values = f.values.clone();
    fft2(&mut values, n, Direction::Forward);
    let wave = |m: usize| -> f64 {
        if 2 * m == n {
            0.0
        } else if 2 * m < n {
            2.0 * PI * m as f64 / f.grid.extent
        } else {
            2.0 * PI * (m as f64 - n as f64) / f.grid.extent
        }
    };
    for (idx, v) in values.iter_mut().enumerate() {
        let m = if axis == 0 { idx / n } else { idx % n };
        *v *= C::new(0.0, wave(m)) / (n * n) as f64;
    }
    fft2(&mut values, n, Direction::Inverse);
    GridFunction2D { grid: f.grid, values }
}

/// `{F,G} = ∂₁F ∂₂G − ∂₂F ∂₁G` with spectral derivatives.
pub fn poisson_bracket(f: &GridFunction2D, g: &GridFunction2D) -> Result<GridFunction2D> {
    f.grid.check_same(&g.grid)?;
    let (f1, f2) = (spectral_derivative(f, 0), spectral_derivative(f, 1));
    let (g1, g2) = (spectral_derivative(g, 0), spectral_derivative(g, 1));
    let values = (0..f.values.len())
        .map(|i| f1.values[i] * g2.values[i] - f2.values[i] * g1.values[i])
        .collect();
    Ok(GridFunction2D { grid: f.grid, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::grid::Grid2D;

    fn gaussian(grid: Grid2D) -> GridFunction2D {
        GridFunction2D::from_fn(grid, |a, b| C::new((-(a * a + b * b) / 2.0).exp(), 0.0))
    }

    #[test]
    fn gaussian_is_self_dual_at_unit_hbar() {
        let g = Grid2D::new(64, 16.0).unwrap();
        let f = gaussian(g);
        let ft = fourier2d(&f, 1.0, Direction::Forward).unwrap();
        let expect = gaussian(ft.grid);
        assert!(ft.rel_l2_error(&expect).unwrap() < 1e-12);
    }

    #[test]
    fn direct_sum_agrees_with_fft() {
        let g = Grid2D::new(8, 5.0).unwrap();
        let f = GridFunction2D::from_fn(g, |a, b| C::new(a.sin() + b, a * b - 0.3));
        let hbar = 0.7;
        let ft = fourier2d(&f, hbar, Direction::Inverse).unwrap();
        let d = g.spacing();
        let zg = ft.grid;
        for m1 in 0..8 {
            for m2 in 0..8 {
                let (z1, z2) = (zg.point(m1), zg.point(m2));
                let mut acc = C::new(0.0, 0.0);
                for k1 in 0..8 {
                    for k2 in 0..8 {
                        let ph = (g.point(k1) * z1 + g.point(k2) * z2) / hbar;
                        acc += C::from_polar(1.0, ph) * f.at(k1, k2);
                    }
                }
                acc *= d * d / (2.0 * PI * hbar);
                assert!((acc - ft.at(m1, m2)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn round_trip() {
        let g = Grid2D::new(16, 6.0).unwrap();
        let f = GridFunction2D::from_fn(g, |a, b| C::new(a.cos() * b, (a - b).exp().min(3.0)));
        let back = inverse_fourier2d(&fourier2d(&f, 0.3, Direction::Forward).unwrap(), 0.3).unwrap();
        assert!(back.grid.same_as(&g));
        assert!(back.rel_l2_error(&f).unwrap() < 1e-13);
    }

    #[test]
    fn derivative_of_gaussian() {
        let g = Grid2D::new(64, 16.0).unwrap();
        let f = gaussian(g);
        let d1 = spectral_derivative(&f, 0);
        let expect = GridFunction2D::from_fn(g, |a, b| C::new(-a * (-(a * a + b * b) / 2.0).exp(), 0.0));
        assert!(d1.sub(&expect).unwrap().max_abs() < 1e-12);
    }
}
