//! Lattice discretization of Hitchin's self-duality equations on a flat
//! torus, with the hyperKähler tangent-space structure, a gradient-flow
//! solver, and the spectral-parameter family of complex connections.
//!
//! Fields are complex `n × n` matrices on an `N × N` periodic grid. Forms are
//! stored as coefficient pairs in the `dz`, `dz̄` basis and 2-forms as their
//! `dz∧dz̄` coefficient, with `dz∧dz̄ = −2i dx∧dy`.

pub mod cli;
pub mod compare;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod hitchin;
pub mod hk;
pub mod lattice;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
