//! Exact arithmetic in Q(q,t) with half-integer exponents.

mod cyclo;
mod factored;
mod gcd;
pub mod json;
mod laurent;
pub mod modp;
mod omega;
mod rational;
mod series;

pub use cyclo::{cyclotomic, mobius, CycloFactor};
pub use factored::{sum_factored, Factored};
pub use gcd::{normalize_poly, poly_gcd};
pub use json::{fmt_coeff, parse_coeff, TermJson};
pub use laurent::{Coeff, Mono, QTLaurent};
pub use omega::{omega_zero, omega_zero_factored, pleth_power};
pub use rational::QTRational;
pub use series::{series_expand, QTSeries};

/// Shorthand for an integer coefficient.
pub fn c(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}
