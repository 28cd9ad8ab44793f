//! Orientations of 3-edge-connected multigraphs: exact Frank numbers,
//! certified upper-bound constructions and the deletability reduction.

pub mod multigraph;
pub mod exact;
pub mod orientation;
pub mod pipelines;
pub mod reduction;
pub mod structures;
