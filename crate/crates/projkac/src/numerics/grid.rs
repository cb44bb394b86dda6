//! Uniform grids on the line and on phase space, and the sampled objects that
//! live on them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C = Complex64;

/// `n` points per axis covering `[−L/2, L/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid2D {
    pub n: usize,
    pub extent: f64,
}

impl Grid2D {
    pub fn new(n: usize, extent: f64) -> Result<Self> {
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!("n = {n} is not a power of two")));
        }
        if !(extent.is_finite() && extent > 0.0) {
            return Err(Error::InvalidGrid(format!("extent = {extent} must be positive")));
        }
        Ok(Grid2D { n, extent })
    }

    pub fn spacing(&self) -> f64 {
        self.extent / self.n as f64
    }

    pub fn point(&self, k: usize) -> f64 {
        -0.5 * self.extent + k as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|k| self.point(k)).collect()
    }

    /// The grid on which the ħ-scaled Fourier transform of a function on
    /// `self` is sampled exactly: spacing `2πħ/L`, extent `2πħn/L`.
    pub fn reciprocal(&self, hbar: f64) -> Grid2D {
        Grid2D { n: self.n, extent: 2.0 * std::f64::consts::PI * hbar * self.n as f64 / self.extent }
    }

    /// Index of the grid point nearest to `x`, if it lies on the grid.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let k = (x + 0.5 * self.extent) / self.spacing();
        let r = k.round();
        if (k - r).abs() > 1e-9 || r < 0.0 || r >= self.n as f64 {
            return None;
        }
        Some(r as usize)
    }

    pub fn same_as(&self, other: &Grid2D) -> bool {
        self.n == other.n && (self.extent - other.extent).abs() <= 1e-12 * self.extent
    }

    pub fn check_same(&self, other: &Grid2D) -> Result<()> {
        if !self.same_as(other) {
            return Err(Error::GridMismatch(format!(
                "n={} L={} vs n={} L={}",
                self.n, self.extent, other.n, other.extent
            )));
        }
        Ok(())
    }
}

/// Samples `f(x₁,x₂)` with `values[i·n + j] = f(x_i, x_j)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridFunction2D {
    pub grid: Grid2D,
    pub values: Vec<C>,
}

impl GridFunction2D {
    pub fn zeros(grid: Grid2D) -> Self {
        GridFunction2D { grid, values: vec![C::new(0.0, 0.0); grid.n * grid.n] }
    }

    pub fn from_fn(grid: Grid2D, f: impl Fn(f64, f64) -> C) -> Self {
        let pts = grid.points();
        let mut values = Vec::with_capacity(grid.n * grid.n);
        for &a in &pts {
            for &b in &pts {
                values.push(f(a, b));
            }
        }
        GridFunction2D { grid, values }
    }

    pub fn n(&self) -> usize {
        self.grid.n
    }

    pub fn at(&self, i: usize, j: usize) -> C {
        self.values[i * self.grid.n + j]
    }

    /// `Δ²·Σ|f|²`.
    pub fn norm_sq(&self) -> f64 {
        let d = self.grid.spacing();
        d * d * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == C::new(0.0, 0.0))
    }

    pub fn scale(&self, k: C) -> Self {
        GridFunction2D { grid: self.grid, values: self.values.iter().map(|v| v * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.grid.check_same(&other.grid)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(GridFunction2D { grid: self.grid, values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(C::new(-1.0, 0.0)))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `‖self − other‖₂ / ‖other‖₂`.
    pub fn rel_l2_error(&self, reference: &Self) -> Result<f64> {
        let d = self.sub(reference)?;
        Ok((d.norm_sq() / reference.norm_sq()).sqrt())
    }

    /// `f*(x) = \bar f(−x)`, with `−x` taken on the grid (index `n − k`).
    pub fn involution(&self) -> Self {
        let n = self.grid.n;
        let mut out = Self::zeros(self.grid);
        for i in 0..n {
            for j in 0..n {
                out.values[i * n + j] = self.at((n - i) % n, (n - j) % n).conj();
            }
        }
        out
    }
}

/// Samples `ξ(q)` on `n` points covering `[−L/2, L/2)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WaveFunction1D {
    pub n: usize,
    pub extent: f64,
    pub values: Vec<C>,
}

impl WaveFunction1D {
    pub fn from_fn(grid: Grid2D, f: impl Fn(f64) -> C) -> Self {
        WaveFunction1D { n: grid.n, extent: grid.extent, values: grid.points().into_iter().map(f).collect() }
    }

    pub fn grid(&self) -> Grid2D {
        Grid2D { n: self.n, extent: self.extent }
    }

    pub fn norm_sq(&self) -> f64 {
        self.grid().spacing() * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }
}

/// Matrix `K(q,u)` acting by `(Kξ)(q) = Σ_u Δ K(q,u) ξ(u)`; `values[a·n + b]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorKernel {
    pub n: usize,
    pub extent: f64,
    pub nu: f64,
    pub values: Vec<C>,
}

impl OperatorKernel {
    pub fn zeros(grid: Grid2D, nu: f64) -> Self {
        OperatorKernel { n: grid.n, extent: grid.extent, nu, values: vec![C::new(0.0, 0.0); grid.n * grid.n] }
    }

    pub fn grid(&self) -> Grid2D {
        Grid2D { n: self.n, extent: self.extent }
    }

    pub fn at(&self, a: usize, b: usize) -> C {
        self.values[a * self.n + b]
    }

    pub fn apply(&self, xi: &WaveFunction1D) -> Result<WaveFunction1D> {
        self.grid().check_same(&xi.grid())?;
        let d = self.grid().spacing();
        let n = self.n;
        let values = (0..n)
            .map(|a| (0..n).map(|b| self.at(a, b) * xi.values[b]).sum::<C>() * d)
            .collect();
        Ok(WaveFunction1D { n, extent: self.extent, values })
    }

    /// Operator product: `Σ_u Δ K₁(q,u) K₂(u,w)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.grid().check_same(&other.grid())?;
        let n = self.n;
        let d = self.grid().spacing();
        let mut out = Self::zeros(self.grid(), self.nu);
        for a in 0..n {
            for u in 0..n {
                let k = self.at(a, u) * d;
                if k == C::new(0.0, 0.0) {
                    continue;
                }
                let row = &other.values[u * n..(u + 1) * n];
                let dst = &mut out.values[a * n..(a + 1) * n];
                for (o, r) in dst.iter_mut().zip(row) {
                    *o += k * r;
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for a in 0..n {
            for b in 0..n {
                out.values[a * n + b] = self.at(b, a).conj();
            }
        }
        out
    }

    pub fn frobenius(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.grid().check_same(&other.grid())?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(OperatorKernel { values, ..self.clone() })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == C::new(0.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(Grid2D::new(48, 16.0).is_err());
        assert!(Grid2D::new(64, 0.0).is_err());
        assert!(Grid2D::new(64, 16.0).is_ok());
    }

    #[test]
    fn spacing_times_n_is_extent() {
        let g = Grid2D::new(64, 16.0).unwrap();
        assert_eq!(g.spacing() * 64.0, 16.0);
        assert_eq!(g.point(32), 0.0);
        assert_eq!(g.index_of(0.25), Some(33));
        assert_eq!(g.index_of(0.1), None);
    }

    #[test]
    fn reciprocal_of_reciprocal_is_identity() {
        let g = Grid2D::new(32, 10.0).unwrap();
        assert!(g.reciprocal(0.7).reciprocal(0.7).same_as(&g));
    }

    #[test]
    fn compose_with_scaled_identity() {
        let g = Grid2D::new(8, 4.0).unwrap();
        let mut id = OperatorKernel::zeros(g, 1.0);
        for a in 0..8 {
            id.values[a * 8 + a] = C::new(1.0 / g.spacing(), 0.0);
        }
        let mut k = OperatorKernel::zeros(g, 1.0);
        for (i, v) in k.values.iter_mut().enumerate() {
            *v = C::new(i as f64, -(i as f64) / 3.0);
        }
        let p = id.compose(&k).unwrap();
        assert!(p.sub(&k).unwrap().frobenius() < 1e-12);
    }
}
