//! Exact double covers of O(3) and O(3)×Z2 acting on Pauli spinors.
//!
//! * [`scalar`]: Gaussian rationals (exact) and a tolerance-compared float
//!   backend.
//! * [`cover`]: SU(2), S±U(2), O(3) and the covering maps `π`, `Π`.
//! * [`semidirect`]: SU(2) ⊙ Z2 and its isomorphism with S±U(2).
//! * [`pt`]: Ĝ₀ = S±U(2) × Z2, the spinor parity and time-reversal
//!   operators and their actions on sampled spinor fields.
//! * [`finite`]: closure of finite matrix groups, Cayley tables and
//!   isomorphism search, including the double-group experiment.
//! * [`verify`]: seeded invariant suites used by the CLI.

pub mod cover;
pub mod error;
pub mod finite;
pub mod matrix;
pub mod pt;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod semidirect;
pub mod sign;
pub mod verify;

pub use error::{Error, Result};
pub use sign::Sign;

/// Version of every JSON document emitted by this crate.
pub const SCHEMA_VERSION: u32 = 1;
