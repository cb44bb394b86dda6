//! Projective Kac algebras of the plane.
//!
//! The exact layer ([`symbolic`], [`cocycle`], [`algebra`]) verifies phase
//! identities with rational arithmetic. The numeric layer ([`numerics`])
//! realizes the same objects on a grid: Weyl quantization, the twisted
//! convolution, Moyal products, Wigner functions and finite-lattice checks of
//! the braid relation and the Haar-weight axioms.

pub mod algebra;
pub mod checks;
pub mod cocycle;
mod error;
pub mod io;
pub mod numerics;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
