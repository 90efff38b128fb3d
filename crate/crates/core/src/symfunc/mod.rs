//! Symmetric functions in the Schur basis over Q(q,t).

mod chars;
mod lr;
mod pleth;
mod schur;

pub use chars::{char_table, character, z_rho, CharTable};
pub use lr::{lr_coeff, lr_product, lr_tableaux};
pub use pleth::{pleth_coeff, pleth_matrix, PlethFactor};
pub use schur::{schur_at, SchurExpansion};
