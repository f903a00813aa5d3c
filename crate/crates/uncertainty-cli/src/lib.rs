//! Command-line front end for the uncertainty-relation laboratory: the
//! θ-sweep experiment, bound evaluation on user-supplied states/operators,
//! the continuous-variable Gaussian checks and the Haar-sampler audit.
//!
//! All file parsing and serialization lives here; the numerics live in
//! `uncertainty-core`.

pub mod audit;
pub mod bounds;
pub mod cvcheck;
pub mod error;
pub mod io;
pub mod sweep;

pub use error::{CliError, Result};
