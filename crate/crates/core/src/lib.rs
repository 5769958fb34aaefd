//! Coherent local systems, integrable ideals and rank varieties for the
//! finitary Lie algebras `sl∞`, `so∞` and `sp∞`.
//!
//! All arithmetic is exact. The [`guide`] module carries the narrative
//! documentation; [`verify`] runs the acceptance suites.

pub mod cls;
pub mod error;
pub mod guide;
pub mod ideals;
pub mod matgeo;
pub mod rep_oracle;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
