//! Numerical tolerances used across the crate.
//!
//! Every threshold that decides a yes/no answer lives here so that the
//! acceptance suite and the library agree on the same numbers.

/// Relative singular-value cutoff for numerical nullspaces (invariant forms
/// and commutants).
pub const NULLSPACE_REL: f64 = 1e-8;

/// A form normalized to unit norm is definite iff its smallest eigenvalue
/// exceeds this.
pub const DEFINITE_MIN_EIG: f64 = 1e-10;

/// Largest acceptable invariance defect for a returned form.
pub const FORM_MAX_RESIDUAL: f64 = 1e-6;

/// Hermitian symmetry of a returned Gram matrix.
pub const HERMITIAN: f64 = 1e-12;

/// Unit-modulus check on the parameters of the invariant-form solver.
pub const UNIT_MODULUS: f64 = 1e-12;

/// Default tolerance for eigenvalue multiset clustering and comparison.
pub const MULTISET: f64 = 1e-9;

/// Distinctness of stabilized traces.
pub const TRACE_DISTINCT: f64 = 1e-9;

/// Unitarity of unitarized matrices.
pub const UNITARY: f64 = 1e-8;

/// Scalar-matrix test for Burau images.
pub const SCALAR: f64 = 1e-9;

/// Determinant of SU-normalized matrices.
pub const SU_DET: f64 = 1e-10;

/// Largest ambient dimension accepted by the exhaustive multiset searches.
pub const SEARCH_MAX_DIM: usize = 21;

/// Invariance defect below which a scanned form counts as certified.
pub const FORM_CERTIFIED_RESIDUAL: f64 = 1e-8;
