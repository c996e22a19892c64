//! Eigenspaces of the adjacency operator, built from the lattice embedding.

pub mod constants;
mod context;
mod eigen;
mod frame;

pub use constants::{constants, LevelConstants};
pub use context::SpectralContext;
pub use eigen::{SpectralRow, SpectralTable};
pub use frame::FrameReport;
