//! Decompositions of a Young diagram into skew pieces cut out by a pair in
//! the closure of the torus orbit of a principal nilpotent pair.

mod config;
mod merge;

pub use config::{bond_list, square_allowed, Bond, CutConfig, SquareBonds};
pub use merge::{
    boundary_segments, degeneration_connected, merge_graph, merge_moves, MergeGraph, Segment, MERGE_BOND_CAP,
};
