//! Bigraded character formulas.

mod mpoly;
mod pnp;
mod polygraph;
mod section2;

pub use mpoly::ZPoly;
pub use pnp::{
    arm_leg_product, garsia_haiman_character, gamma, gh_lemma_checks, gh_step, gh_term, pnp_character, pnp_prefactor,
    pnp_term,
};
pub use polygraph::{
    b_coeff, b_isotypic, fake_degree_character, phi_at, polygraph_character, rnil_isotypic, rnil_specialized,
    CharacterKind, GCharacterExpansion, PolygraphCharacter,
};
pub use section2::{biv_kostant, chi_r_atiyah_bott, chi_r_thm, schur_monomials, TCharacterSeries, SERIES_RANK_CAP};
