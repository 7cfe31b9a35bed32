//! Alternating tensor polynomials on `d×d` matrices.
//!
//! `ST(λ)` alternates the tensor monomial whose `i`-th tensor factor carries
//! `λ_i` consecutive matrix variables. This crate decides whether `ST(λ)`
//! vanishes identically on `M_d`, computes its exact value
//! `ST(λ) = det(x_1..x_{d²}) · J_λ` as an element of `Q[S_n]`, and checks
//! both against brute-force evaluation over a prime field.

pub mod error;
pub mod evaluator;
pub mod lattice;
pub mod limits;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod render;
pub mod symmetric_group;
pub mod tpi;

pub use error::{Error, Result};
pub use limits::Limits;
pub use partition::{Composition, Partition, RefinementWitness};
pub use perm::Permutation;
pub use symmetric_group::{CentralElement, GroupAlgebraElement};
