//! Exact arithmetic in `Q[S_n]`: characters, central idempotents, class
//! sums, the map `Φ` and the Weingarten operator.

pub mod algebra;
pub mod central;
pub mod characters;
pub mod weingarten;

pub use algebra::{coefficient_content, integer, rational, GroupAlgebraElement};
pub use central::{class_function_element, class_sum, expand_central, omega, CentralElement};
pub use characters::{chi_dim, class_size, mn_character, schur_dim, CharacterTable};
pub use weingarten::{multiply_by_central, phi, tr_d, weingarten, weingarten_central};
