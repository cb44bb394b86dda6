//! Exact phase calculus for the operator and dual algebras.

pub mod catalog;
mod element;
pub mod h3;
pub mod phase;
pub mod pointmap;

pub use catalog::{verify_all, verify_identity, verify_identity_with, CatalogOptions, Verification};
pub use element::{commutator, commutator_of, AlgebraElement, Comparison, Factor, Scale, Side, Term};
pub use h3::{H3Element, H3Pair};
pub use phase::{Action, PhaseExponent, ThetaTerm};
pub use pointmap::{FundamentalName, PointMapComparison, PointMapWithPhase};
