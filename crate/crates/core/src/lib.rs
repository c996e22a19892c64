pub mod algebra;
pub mod error;
pub mod lattice;
pub mod norton;
mod serde_big;
pub mod spectral;
pub mod suite;

pub use error::{Error, Result};
