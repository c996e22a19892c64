//! The three graph families and their ranked lattices.
//!
//! Level `Omega_l` holds the rank-`l` elements: `l`-subsets (Johnson),
//! `l`-dimensional subspaces (Grassmann) or partial signed words with `l` set
//! coordinates (Hamming). Level `d` is the vertex set of the graph and level
//! `d + 1` is the adjoined top element.

mod element;
mod family;
mod graph;

pub use element::LatticeElement;
pub use family::{Family, SizeCaps};
pub use graph::{level_count_closed_form, ElementId, GraphLattice, LatticeExport};
