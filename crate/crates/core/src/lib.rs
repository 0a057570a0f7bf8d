//! Exact-arithmetic computational group theory for quantum gate symmetries.
//!
//! The crate reconstructs, with no floating point anywhere, the finite
//! groups that organize multi-qubit gate sets — Pauli, Clifford and Bell
//! groups, their automorphism groups, the reflection groups and incidence
//! geometries they map onto — and re-derives their structural invariants
//! (orders, centers, derived subgroups, quotients, Coxeter presentations,
//! Yang–Baxter identities). A claim registry drives all of it and emits an
//! auditable PASS/FAIL/REPORT ledger; see the `verify` module and the CLI.

pub mod error;
pub mod aut;
pub mod coxeter;
pub mod exact;
pub mod geometry;
pub mod imprimitive;
pub mod matrix;
pub mod pauli;
pub mod perm;
pub mod table;
mod util;

pub use exact::{CycEight, Rational};
pub use matrix::ExactMatrix;
