//! Combinatorics of monomial Jacobian ideals: decide when a finite exponent
//! set has a Jacobian semigroup ideal, reconstruct a Thom-Sebastiani
//! polynomial with the same Jacobian ideal, compute quasihomogeneous weights,
//! classify the singularity, and enumerate logarithmic strata.

pub mod error;
pub mod exponent;
pub mod matroid;
pub mod oracle;
pub mod reconstruct;
pub mod weights;

pub use error::{Error, Result};
