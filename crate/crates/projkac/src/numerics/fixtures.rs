//! Test inputs with known transforms: Gaussians, the two lowest oscillator
//! states and seeded band-limited functions.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::grid::{Grid2D, GridFunction2D, WaveFunction1D, C};

/// `e^{−|x − c|²/2w²}`.
pub fn gaussian(grid: Grid2D, center: (f64, f64), width: f64) -> GridFunction2D {
    GridFunction2D::from_fn(grid, |a, b| {
        C::new((-((a - center.0).powi(2) + (b - center.1).powi(2)) / (2.0 * width * width)).exp(), 0.0)
    })
}

/// `(πħ)^{−1/4} e^{−q²/2ħ}`.
pub fn ground_state(grid: Grid2D, hbar: f64) -> WaveFunction1D {
    let norm = (PI * hbar).powf(-0.25);
    WaveFunction1D::from_fn(grid, |q| C::new(norm * (-q * q / (2.0 * hbar)).exp(), 0.0))
}

/// `(πħ)^{−1/4} √(2/ħ) q e^{−q²/2ħ}`.
pub fn first_excited_state(grid: Grid2D, hbar: f64) -> WaveFunction1D {
    let norm = (PI * hbar).powf(-0.25) * (2.0 / hbar).sqrt();
    WaveFunction1D::from_fn(grid, |q| C::new(norm * q * (-q * q / (2.0 * hbar)).exp(), 0.0))
}

/// Closed-form Wigner distribution of the ground state: `2e^{−|z|²/ħ}`.
pub fn ground_state_wigner(grid: Grid2D, hbar: f64) -> GridFunction2D {
    GridFunction2D::from_fn(grid, |a, b| C::new(2.0 * (-(a * a + b * b) / hbar).exp(), 0.0))
}

/// Closed-form Wigner distribution of the first excited state:
/// `2e^{−|z|²/ħ}(2|z|²/ħ − 1)`, with minimum `−2` at the origin.
pub fn first_excited_wigner(grid: Grid2D, hbar: f64) -> GridFunction2D {
    GridFunction2D::from_fn(grid, |a, b| {
        let r = (a * a + b * b) / hbar;
        C::new(2.0 * (-r).exp() * (2.0 * r - 1.0), 0.0)
    })
}

/// A Gaussian window of width `width` around a random centre, times a sum of
/// `modes` random plane waves with frequencies below `band`.
pub fn band_limited(grid: Grid2D, seed: u64, modes: usize, band: f64, width: f64) -> GridFunction2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let waves: Vec<(C, f64, f64)> = (0..modes)
        .map(|_| {
            let amp = C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            (amp, rng.gen_range(-band..band), rng.gen_range(-band..band))
        })
        .collect();
    GridFunction2D::from_fn(grid, |a, b| {
        let window = (-((a - c.0).powi(2) + (b - c.1).powi(2)) / (2.0 * width * width)).exp();
        waves.iter().map(|(amp, k1, k2)| amp * C::from_polar(window, k1 * a + k2 * b)).sum()
    })
}
