//! Exact computations around quaternionic Kähler symmetric spaces.
//!
//! * [`exact`]: rationals, polynomials, binomials, Bernoulli polynomials.
//! * [`rootsys`]: root systems of the simple Lie algebras, the five-grading by
//!   the highest root, Casimir values and the Weyl dimension formula.
//! * [`hilbert`]: Hilbert polynomials of the Wolf spaces with their derived
//!   invariants and the identity/bound checks.
//! * [`linalg`] and [`prolong`]: exact sparse elimination and the Spencer
//!   prolongation machinery for constant-coefficient symbols.
//! * [`cli`]: the command-line front end and its report formats.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hilbert;
pub mod linalg;
pub mod prolong;
pub mod rootsys;

pub use error::{Error, Result};
