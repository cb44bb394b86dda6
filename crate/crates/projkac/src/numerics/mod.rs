//! Grid realizations of the quantization maps and finite-lattice checks.

pub mod fixtures;
pub mod fourier;
pub mod grid;
pub mod lattice;
pub mod moyal;
pub mod weyl;
pub mod wigner;

pub use fourier::{fourier2d, inverse_fourier2d, poisson_bracket, spectral_derivative, Direction};
pub use grid::{Grid2D, GridFunction2D, OperatorKernel, WaveFunction1D};
pub use lattice::{haar_axiom_residuals, yang_baxter_residual, HaarResiduals, LatticeFunction};
pub use moyal::{classical_limit, moyal_commutator, moyal_star, moyal_star_at, moyal_unit, ClassicalLimit};
pub use weyl::{
    apply_projective_rep, operator_trace, plancherel_residual, trace_constant, twisted_convolution,
    weyl_quantize, weyl_selfadjoint_decompose, wigner_recover, Residual, SelfAdjointDecomposition,
};
pub use wigner::{cross_ambiguity, wigner_distribution};
