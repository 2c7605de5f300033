//! Few-qubit scrambling diagnostics.
//!
//! Two witnesses of quantum information scrambling are computed side by side
//! for a unitary channel acting on `N` qubits:
//!
//! - the tripartite mutual information `-I3 = I(A:CD) - I(A:C) - I(A:D)` of the
//!   channel's Choi state, where `A` is a reference purifying input qubit `q1`
//!   and `C`, `D` partition the outputs;
//! - the temporal-steering witness `-T3 = TSW(tot) - TSW(C) - TSW(D)`, built
//!   from the temporal steerable weight of the assemblage obtained by
//!   measuring `q1` of a maximally mixed register, evolving, and reducing to
//!   each output region.
//!
//! The steerable weight is the optimum of a small semidefinite program, solved
//! here by a primal-dual interior-point method ([`sdp`]).
//!
//! Qubit ordering convention: in every register the first label is the
//! leftmost tensor factor, i.e. the most significant bit of a basis index.

pub mod channels;
pub mod error;
pub mod models;
pub mod qla;
pub mod sdp;
pub mod steering;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
