//! Exact ground-state entanglement entropy for the toric code.
//!
//! The model lives on the links of a surface cell complex, stabilized by
//! star (X-type) and plaquette (Z-type) operators. For any bipartition
//! (A, B) of the links the entropy of a ground-space basis state is
//! `S = log₂|𝒜| − log₂(d_A d_B)` bits, which [`engine`] evaluates exactly
//! from two GF(2) ranks. [`oracle`] rebuilds the same numbers the hard
//! way — explicit ground states, reduced density matrices, eigenvalues —
//! so the two routes cross-check each other.
//!
//! Modules:
//! - [`gf2`]: word-packed bit vectors/matrices, rank, row-space enumeration
//! - [`surface`]: the k×k torus and generic genus-g complexes
//! - [`region`]: bipartitions, geometric statistics, the region DSL
//! - [`engine`]: the rank-based entropy calculator
//! - [`oracle`]: brute-force spectra, concurrence, isospectrality checks
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod jacobi;
pub mod oracle;
pub mod region;
pub mod surface;

pub use error::{Error, Result};
