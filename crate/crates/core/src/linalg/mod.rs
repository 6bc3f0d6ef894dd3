//! Exact linear algebra over the rationals.
//!
//! [`LinearMap`] stores matrices row-sparse: the maps built by the prolongation
//! engine have a handful of nonzeros per row even when they have thousands of
//! rows. [`Elimination`] is an incremental Gaussian elimination that keeps
//! its lower-triangular multipliers, so the same factorization yields rank,
//! a canonical kernel basis and a linear partial inverse. [`bareiss`] is a
//! dense fraction-free elimination used for small matrices and as a
//! cross-check of the sparse path.

pub mod bareiss;
mod elimination;
mod map;
mod subspace;

pub use elimination::Elimination;
pub use map::{LinearMap, SparseVec};
pub use subspace::SubspaceBasis;
