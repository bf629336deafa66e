//! The twenty lattice points of 3Δ3, their monomial order, and the S4 action.
//!
//! Coordinates are `(x0, x1, x2, x3)`, the exponents of `(w, x, y, z)`.

use crate::error::Error;

pub const NPTS: usize = 20;

pub type Exponent = [u8; 4];

pub const EXPONENTS: [Exponent; NPTS] = [
    [3, 0, 0, 0],
    [2, 0, 0, 1],
    [1, 0, 0, 2],
    [0, 0, 0, 3],
    [2, 0, 1, 0],
    [1, 0, 1, 1],
    [0, 0, 1, 2],
    [1, 0, 2, 0],
    [0, 0, 2, 1],
    [0, 0, 3, 0],
    [2, 1, 0, 0],
    [1, 1, 0, 1],
    [0, 1, 0, 2],
    [1, 1, 1, 0],
    [0, 1, 1, 1],
    [0, 1, 2, 0],
    [1, 2, 0, 0],
    [0, 2, 0, 1],
    [0, 2, 1, 0],
    [0, 3, 0, 0],
];

/// Corner points w^3, z^3, y^3, x^3.
pub const CORNERS: [usize; 4] = [0, 3, 9, 19];

pub fn exponent(i: usize) -> Result<Exponent, Error> {
    EXPONENTS
        .get(i)
        .copied()
        .ok_or(Error::PointOutOfRange(i))
}

pub fn index_of(e: Exponent) -> Option<usize> {
    EXPONENTS.iter().position(|&x| x == e)
}

/// A permutation of the four coordinates. `p[a] = b` sends coordinate `a` to `b`.
pub type Perm = [usize; 4];

pub const IDENTITY: Perm = [0, 1, 2, 3];

pub fn all_perms() -> Vec<Perm> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

pub fn transposition(a: usize, b: usize) -> Perm {
    let mut p = IDENTITY;
    p.swap(a, b);
    p
}

pub fn compose(p: &Perm, q: &Perm) -> Perm {
    // p after q
    [p[q[0]], p[q[1]], p[q[2]], p[q[3]]]
}

pub fn inverse(p: &Perm) -> Perm {
    let mut inv = [0; 4];
    for (a, &b) in p.iter().enumerate() {
        inv[b] = a;
    }
    inv
}

pub fn permute_exponent(p: &Perm, e: &Exponent) -> Exponent {
    let mut out = [0u8; 4];
    for a in 0..4 {
        out[p[a]] = e[a];
    }
    out
}

pub fn apply_permutation(p: &Perm, i: usize) -> usize {
    index_of(permute_exponent(p, &EXPONENTS[i])).expect("permuted exponent lies in 3Δ3")
}

/// The induced map on point indices, as a table.
pub fn point_map(p: &Perm) -> [usize; NPTS] {
    let mut m = [0; NPTS];
    for (i, slot) in m.iter_mut().enumerate() {
        *slot = apply_permutation(p, i);
    }
    m
}

pub fn on_facet(i: usize, f: usize) -> bool {
    EXPONENTS[i][f] == 0
}

pub fn on_plane_sum(coords: &[usize], c: u8, i: usize) -> bool {
    coords.iter().map(|&m| EXPONENTS[i][m]).sum::<u8>() == c
}

/// Points of the facet `F_f`, i.e. with coordinate `f` equal to zero.
pub fn facet_points(f: usize) -> Vec<usize> {
    (0..NPTS).filter(|&i| on_facet(i, f)).collect()
}

/// Representative of the ray direction ω_f with `x0 = 0`.
pub fn omega(f: usize) -> [i64; 4] {
    match f {
        0 => [0, -1, -1, -1],
        1 => [0, 1, 0, 0],
        2 => [0, 0, 1, 0],
        3 => [0, 0, 0, 1],
        _ => panic!("direction index {f} out of range"),
    }
}

/// Equality of integer 4-vectors modulo the all-ones vector.
pub fn eq_mod_ones(a: &[i64; 4], b: &[i64; 4]) -> bool {
    let d = a[0] - b[0];
    (1..4).all(|m| a[m] - b[m] == d)
}
