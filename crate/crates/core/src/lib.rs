//! Deletion-ball combinatorics for binary sequence reconstruction.
//!
//! - [`combinatorics`]: exact `D(n, t)` and `N_ℓ(n, t)`.
//! - [`bitseq`]: binary words, deletion/insertion balls, prefix machinery.
//! - [`extremal`]: extremal families and exhaustive maximization.
//! - [`reconstruct`]: read sets, list decoding, threshold checks.
//! - [`cli`]: the `seqrecon` command line.

pub mod bitseq;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod extremal;
pub mod reconstruct;

pub use bitseq::{BitWord, SequenceSet};
pub use error::{Error, Result};
