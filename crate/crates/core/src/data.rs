//! Reference triangulations and height vectors.

use crate::triangulation::{Tet, Triangulation};

pub const TYPICAL_FACETS: [Tet; 27] = [
    [0, 1, 4, 10],
    [1, 2, 5, 11],
    [1, 4, 7, 13],
    [1, 4, 10, 16],
    [1, 4, 13, 19],
    [1, 4, 16, 19],
    [1, 5, 9, 11],
    [1, 7, 9, 15],
    [1, 7, 13, 18],
    [1, 7, 15, 18],
    [1, 9, 11, 15],
    [1, 11, 15, 18],
    [1, 11, 18, 19],
    [1, 13, 18, 19],
    [2, 3, 6, 14],
    [2, 3, 11, 14],
    [2, 5, 9, 11],
    [2, 6, 8, 14],
    [2, 8, 9, 14],
    [2, 9, 11, 15],
    [2, 9, 14, 15],
    [2, 11, 14, 15],
    [3, 11, 12, 14],
    [11, 12, 14, 17],
    [11, 14, 15, 17],
    [11, 15, 17, 18],
    [11, 17, 18, 19],
];

pub const HONEYCOMB_FACETS: [Tet; 27] = [
    [0, 1, 4, 10],
    [1, 2, 5, 11],
    [1, 4, 5, 13],
    [1, 4, 10, 13],
    [1, 5, 11, 13],
    [1, 10, 11, 13],
    [2, 3, 6, 12],
    [2, 5, 6, 14],
    [2, 5, 11, 14],
    [2, 6, 12, 14],
    [2, 11, 12, 14],
    [4, 5, 7, 13],
    [5, 6, 8, 14],
    [5, 7, 8, 15],
    [5, 7, 13, 15],
    [5, 8, 14, 15],
    [5, 11, 13, 14],
    [5, 13, 14, 15],
    [7, 8, 9, 15],
    [10, 11, 13, 16],
    [11, 12, 14, 17],
    [11, 13, 14, 18],
    [11, 13, 16, 18],
    [11, 14, 17, 18],
    [11, 16, 17, 18],
    [13, 14, 15, 18],
    [16, 17, 18, 19],
];

/// Heights inducing the typical triangulation.
pub const TYPICAL_HEIGHTS: [i64; 20] = [44, 0, 1, 15, 19, 0, 9, 2, 4, 0, 38, 0, 15, 16, 4, 1, 33, 16, 14, 29];

/// Heights inducing the honeycomb triangulation.
pub const HONEYCOMB_HEIGHTS: [i64; 20] = [32, 17, 20, 41, 26, 17, 32, 33, 36, 54, 8, 1, 14, 4, 7, 18, 0, 0, 0, 0];

pub fn typical() -> Triangulation {
    Triangulation::from_tets(&TYPICAL_FACETS).expect("reference triangulation is valid")
}

pub fn honeycomb() -> Triangulation {
    Triangulation::from_tets(&HONEYCOMB_FACETS).expect("reference triangulation is valid")
}
