//! Exact tools for Hamilton decompositions of line graphs: graph families
//! built by edge insertion, transitions and separating transitions,
//! Euler-tour-compatible decompositions, the decomposition splice, and
//! backtracking solvers that produce or refute certificates.

pub mod cert;
pub mod cli;
pub mod dot;
pub mod error;
pub mod families;
pub mod graph;
pub mod line;
pub mod solvers;
pub mod tours;

pub use error::{Error, Result};
