//! Exact Lawrence-Krammer and Burau braid group representations, their
//! invariant Hermitian forms, eigenvalue spectra, the Lie-theoretic dimension
//! bookkeeping used to rule out proper subgroups, and a conjugacy-class trace
//! experiment.

pub mod braid;
pub mod density;
pub mod error;
pub mod forms;
pub mod laurent;
pub mod lie;
pub mod matrix;
pub mod numeric;
pub mod reps;
pub mod spectra;
pub mod tol;
pub mod verify;

pub use braid::{full_twist, parse_braid, BraidWord, Letter, Permutation};
pub use error::{Error, Result};
pub use laurent::LaurentPoly2;
pub use matrix::PolyMatrix;
pub use reps::{RepKind, RepMatrix};
