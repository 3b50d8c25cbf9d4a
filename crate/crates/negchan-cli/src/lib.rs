//! Command-line front end for the channel-negativity library.
//!
//! Three subcommands: `report` prints the reconstructed Choi matrix and
//! negativity for one scenario file, `sweep` tabulates negativity over a
//! coupling/time grid, and `verify` runs the built-in cross-check suite.

pub mod error;
pub mod report;
pub mod scenario;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};
