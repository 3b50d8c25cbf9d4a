//! Reduced dynamics of a qubit coupled to a bath through correlated state
//! preparation.
//!
//! The pipeline mirrors a tomography experiment: an [`assignment::AssignmentMap`]
//! fixes the composite state prepared for each tomography-basis input, a
//! composite unitary evolves it, the bath is traced out, and the resulting
//! channel is summarized by its Choi matrix and negativity.

pub mod assignment;
pub mod channel;
pub mod correlations;
pub mod energy;
pub mod error;
pub mod matrix;
pub mod qubit;
pub mod random;

pub use assignment::AssignmentMap;
pub use channel::{Channel, ChoiMatrix};
pub use energy::{HamiltonianSpec, LabeledSpectrum, Labeling};
pub use error::{Error, Result};
pub use matrix::{C64, CMatrix};
pub use qubit::{DensityMatrix, Gate, StateVector, TomographyBasis};

/// Default numerical tolerance wherever a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-10;
