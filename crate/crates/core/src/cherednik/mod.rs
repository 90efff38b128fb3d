//! Graded characters of simple modules for the rational Cherednik algebra of
//! S_m, and the identities obtained by comparing them with ℛ^nil.

mod gpoly;
mod identities;

pub use gpoly::{
    delta_coeff, g_poly, gordon_closed_form, kappa, script_g, simple_module_character, t_power, CherednikParam,
};
pub use identities::{hesselink_check, hesselink_sides, thm_identities_check, IdentitySides};
