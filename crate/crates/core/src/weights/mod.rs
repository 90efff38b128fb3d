//! GL_n weights, type A root data, the maps ψ, φ, ⋆, † and Kostant
//! partition functions.

mod kostant;
mod pieri;
mod weight;

pub use kostant::{kostant, KostantKind, KostantTable};
pub use pieri::{
    dagger, horizontal_strip_below, inverse_pieri_set, phi, phi_combo, psi, psi_combo, star, ZCombo,
};
pub use weight::{dominant_rep, dot_dominant, permutations, sort_sign, weight_entries, RootDataA, Weight};
