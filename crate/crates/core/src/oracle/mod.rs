//! Numerical ground truth over `Z/pZ`: direct evaluation of `ST(a)` at
//! explicit matrices, tensor operators for permutations, and certificates
//! comparing both against the symbolic results.

pub mod alternating;
pub mod certify;
pub mod field;
pub mod matrix;
pub mod operators;

pub use alternating::{det_vec, evaluate_st, evaluate_st_with, evaluate_t_wedge, standard_polynomial, Strategy};
pub use certify::{certify, certify_combination, CertificateReport, CertifyOptions, Check, Verdict};
pub use field::{Integers, PrimeField, Ring, DEFAULT_PRIME};
pub use matrix::{Matrix, ModMatrix, ModTensorOperator};
pub use operators::{eval_group_algebra, permutation_operator};
