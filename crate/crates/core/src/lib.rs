//! Constructive pipeline for finding large sets of pairwise disjoint
//! edges in simple drawings of complete graphs.
//!
//! The pipeline grows a crossing-free subgraph around a root vertex,
//! reduces a dense piece of it to an angularly monotone cylindrical
//! drawing, cuts the cylinder open into an x-monotone drawing, and
//! extracts a long chain in one of four geometric partial orders. An
//! exact branch-and-bound oracle provides ground truth at small sizes.

pub mod cylinder;
pub mod error;
pub mod gen;
pub mod geom;
pub mod grower;
pub mod matching;
pub mod model;
pub mod oracle;
pub mod svg;

pub use error::{Error, Result};
