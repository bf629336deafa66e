//! Tropical cubic surfaces: triangulations of 3Δ3, secondary cones, tropical lines,
//! motif occurrences and Schläfli walls, in exact rational arithmetic.

pub mod canon;
pub mod cli;
pub mod data;
pub mod delta2;
pub mod error;
pub mod incidence;
pub mod lattice;
pub mod lines;
pub mod motifs;
pub mod ratgeom;
pub mod records;
pub mod schlaefli;
pub mod surface;
pub mod triangulation;

pub use error::{Error, Result};
