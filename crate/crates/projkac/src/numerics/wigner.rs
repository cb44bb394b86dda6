//! Cross-ambiguity functions and Wigner distributions of wave functions.

use std::f64::consts::PI;

use rustfft::FftPlanner;

use super::fourier::{fourier2d, Direction};
use super::grid::{GridFunction2D, WaveFunction1D, C};
use crate::error::Result;

/// `ξ(q + s)` on the same grid by band-limited interpolation. The Nyquist
/// mode is shifted with `cos`, the symmetric choice.
pub fn fourier_shift(xi: &WaveFunction1D, s: f64) -> WaveFunction1D {
    let n = xi.n;
    let mut planner = FftPlanner::new();
    let (fwd, inv) = (planner.plan_fft_forward(n), planner.plan_fft_inverse(n));
    let mut buf = xi.values.clone();
    fwd.process(&mut buf);
    for (m, v) in buf.iter_mut().enumerate() {
        let k = 2.0 * PI / xi.extent;
        let factor = if 2 * m == n {
            C::new((k * m as f64 * s).cos(), 0.0)
        } else if 2 * m < n {
            C::from_polar(1.0, k * m as f64 * s)
        } else {
            C::from_polar(1.0, k * (m as f64 - n as f64) * s)
        };
        *v *= factor / n as f64;
    }
    inv.process(&mut buf);
    WaveFunction1D { values: buf, ..xi.clone() }
}

/// `ω(x) = Σ_q Δ e^{(i/ħ)q x₂} ξ(q + x₁/2) \bar χ(q − x₁/2)` on the q-grid.
pub fn cross_ambiguity(xi: &WaveFunction1D, chi: &WaveFunction1D, hbar: f64) -> Result<GridFunction2D> {
    let g = xi.grid();
    g.check_same(&chi.grid())?;
    let n = g.n;
    let d = g.spacing();
    let p = g.points();
    let mut phase = vec![C::new(0.0, 0.0); n * n];
    for a in 0..n {
        for j in 0..n {
            phase[a * n + j] = C::from_polar(d, p[a] * p[j] / hbar);
        }
    }
    let mut out = GridFunction2D::zeros(g);
    for i in 0..n {
        let half = 0.5 * p[i];
        let plus = fourier_shift(xi, half);
        let minus = fourier_shift(chi, -half);
        let prod: Vec<C> = plus.values.iter().zip(&minus.values).map(|(a, b)| a * b.conj()).collect();
        for j in 0..n {
            out.values[i * n + j] = (0..n).map(|a| phase[a * n + j] * prod[a]).sum();
        }
    }
    Ok(out)
}

/// `W = 𝓕ω`, sampled on the reciprocal grid.
pub fn wigner_distribution(xi: &WaveFunction1D, chi: &WaveFunction1D, hbar: f64) -> Result<GridFunction2D> {
    fourier2d(&cross_ambiguity(xi, chi, hbar)?, hbar, Direction::Forward)
}
