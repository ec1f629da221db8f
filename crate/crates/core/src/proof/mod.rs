//! The machinery behind `(√0)^n = 0` when `(0)` is n-absorbing: monomials
//! and multi-degrees, the matrix `C`, the zero-diagonal search, and proof
//! traces with their verifier.

pub mod lemma;
pub mod matrix;
pub mod monomial;
pub mod trace;
pub mod verify;

pub use lemma::{find_zero_diagonal, ZeroDiagonal, ZeroDiagonalError};
pub use matrix::{
    build_c_matrix, is_projectively_zero, is_upper_triangular, CMatrix, ProjectiveZeroReport,
    SquareMatrix, VectorScan,
};
pub use monomial::{
    delta_set, eval_monomial, j_k_alpha, monomials_with_multideg, order_compare, partitions,
    Monomial, MultiDegree, OrderMode,
};
pub use trace::{
    prove_radical_power_zero, prove_radical_power_zero_with, ProofTrace, StepKind, TraceOptions,
    TraceStep,
};
pub use verify::{verify_trace, TraceVerdict};
