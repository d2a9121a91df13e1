//! Exact computation of the first Cheeger constant of the simplex `Δ^[n]`
//! through cut-minimal graphs, together with the staircase-partition
//! calculus, GF(2) cochain oracles and the complex of cut-minimal graphs.
//!
//! Every reported value is an exact [`Rational`].

pub mod cmcomplex;
pub mod cochains;
pub mod error;
pub mod gf2;
pub mod graphs;
pub mod partitions;
pub mod rational;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::{CanonicalForm, Graph};
pub use partitions::Partition;
pub use rational::Rational;
