//! Transformed and integral Macdonald polynomials, degenerate Macdonald
//! polynomials and Kostka–Foulkes t-analogues.

mod degen;
mod htilde;
mod integral;
mod lusztig;

pub use degen::{a_tilde, degen_macdonald, DegenMacExpansion, DegenVariant, DEGEN_RANK_CAP};
pub use htilde::{modified_macdonald, satisfies_axioms, KostkaMacdonaldTable, DEFAULT_DEGREE_CAP};
pub use integral::{hook_product_qt, integral_form, k_coeffs, kostka_k, kostka_k_diag, IntegralForm};
pub use lusztig::lusztig_t_analog;
