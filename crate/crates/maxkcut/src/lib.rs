//! Weighted MAX k-CUT via the quantum approximate optimization algorithm,
//! simulated exactly on a dense statevector.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`]: weighted undirected graphs, generators, and an edge-list file format
//! - [`cut`]: cut values, exhaustive search, and classical baselines
//! - [`hamiltonian`]: diagonal cost operators for the binary and one-hot encodings
//! - [`sim`]: the statevector simulator (gates, expectations, sampling)
//! - [`circuit`]: gate-level compilation to {U3, CX}, verification, resource counts
//! - [`qaoa`]: parameter optimization (grid search, interpolation, Nelder–Mead)
//!   and the full solve pipeline
//!
//! The binary encoding packs each vertex color into ⌈log₂ k⌉ qubits so every
//! basis state decodes to a valid color assignment; the one-hot encodings use
//! k qubits per vertex and either penalize or structurally preserve the
//! feasible subspace. All angle and bit-order conventions are documented on
//! the operations that define them and enforced by unitary verification tests.

#![forbid(unsafe_code)]

pub mod circuit;
pub mod cut;
mod error;
pub mod graph;
pub mod hamiltonian;
pub mod qaoa;
pub mod sim;

pub use error::{Error, Result};
