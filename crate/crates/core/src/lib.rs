pub mod characters;
pub mod cli;
pub mod cherednik;
pub mod error;
pub mod macdonald;
pub mod partitions;
pub mod pnp_degenerations;
pub mod qtfield;
pub mod symfunc;
pub mod weights;

pub use error::{Error, Result};
