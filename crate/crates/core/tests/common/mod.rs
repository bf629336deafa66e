//! Published reference data shared by the integration tests.
#![allow(dead_code)]

/// Occurrences on the typical triangulation that are visible in every smooth cell.
pub const GLOBAL: &[(&str, &[usize], [usize; 4])] = &[
    ("3B", &[9, 15, 7, 1, 18, 19], [0, 1, 2, 3]),
    ("3D", &[9, 15, 2, 11, 1, 9, 15], [1, 0, 2, 3]),
    ("3D", &[3, 14, 2, 11, 1, 15, 18], [1, 0, 2, 3]),
    ("3D", &[9, 15, 2, 11, 1, 15, 18], [1, 0, 2, 3]),
    ("3D", &[14, 15, 2, 11, 1, 15, 18], [1, 0, 2, 3]),
    ("3D", &[3, 14, 2, 11, 1, 18, 19], [1, 0, 2, 3]),
    ("3D", &[9, 15, 2, 11, 1, 18, 19], [1, 0, 2, 3]),
    ("3D", &[14, 15, 2, 11, 1, 18, 19], [1, 0, 2, 3]),
    ("3D", &[9, 15, 1, 11, 2, 3, 14], [1, 3, 2, 0]),
    ("3D", &[9, 15, 1, 11, 2, 14, 15], [1, 3, 2, 0]),
    ("3D", &[9, 15, 1, 11, 2, 9, 15], [1, 3, 2, 0]),
    ("3D", &[2, 3, 14, 11, 17, 15, 18], [0, 1, 2, 3]),
    ("3D", &[2, 3, 14, 11, 17, 18, 19], [0, 1, 2, 3]),
    ("3F", &[15, 18, 11, 17, 14, 15, 2, 9], [2, 3, 0, 1]),
    ("3F", &[18, 19, 11, 17, 14, 15, 2, 9], [2, 3, 0, 1]),
    ("3G", &[9, 15, 2, 11, 3, 14], [1, 3, 2, 0]),
    ("3G", &[9, 15, 2, 11, 14, 15], [1, 3, 2, 0]),
    ("3G", &[9, 15, 1, 11, 15, 18], [0, 1, 2, 3]),
    ("3G", &[9, 15, 1, 11, 18, 19], [0, 1, 2, 3]),
    ("3H", &[7, 15, 1, 18, 19], [0, 1, 2, 3]),
    ("3H", &[9, 15, 2, 14, 3], [1, 3, 2, 0]),
    ("3I", &[1, 11, 9, 15], [1, 2, 0, 3]),
    ("3I", &[2, 11, 9, 15], [1, 2, 0, 3]),
    ("3J", &[11, 9, 15, 1, 2], [0, 3, 1, 2]),
];

/// Occurrences visible on part of the cone.
pub const PARTIAL: &[(&str, &[usize], [usize; 4])] = &[
    ("3A", &[18, 17, 15, 11, 2, 9], [0, 2, 3, 1]),
    ("3A", &[18, 19, 15, 11, 2, 9], [3, 2, 0, 1]),
    ("3A", &[18, 19, 15, 11, 2, 9], [0, 2, 3, 1]),
    ("3A", &[18, 17, 15, 11, 1, 9], [0, 2, 3, 1]),
    ("3A", &[18, 19, 15, 11, 1, 9], [3, 2, 0, 1]),
    ("3A", &[18, 19, 15, 11, 1, 9], [0, 2, 3, 1]),
    ("3B", &[17, 18, 11, 1, 15, 7], [0, 2, 1, 3]),
    ("3B", &[17, 18, 11, 1, 15, 9], [0, 2, 1, 3]),
    ("3B", &[19, 18, 11, 1, 15, 7], [0, 2, 1, 3]),
    ("3B", &[19, 18, 11, 1, 15, 9], [0, 2, 1, 3]),
    ("3D", &[1, 9, 15, 11, 17, 15, 18], [0, 1, 2, 3]),
    ("3D", &[2, 9, 15, 11, 17, 15, 18], [0, 1, 2, 3]),
    ("3D", &[1, 9, 15, 11, 17, 18, 19], [0, 1, 2, 3]),
    ("3D", &[2, 9, 15, 11, 17, 18, 19], [0, 1, 2, 3]),
    ("3H", &[18, 19, 1, 13, 4], [0, 2, 1, 3]),
    ("3H", &[11, 18, 1, 15, 9], [0, 2, 1, 3]),
    ("3H", &[18, 19, 1, 13, 7], [0, 2, 1, 3]),
    ("3H", &[11, 18, 1, 15, 7], [0, 2, 1, 3]),
];

/// Occurrences visible only on a lower-dimensional part of the cone.
pub const HARDLY: &[(&str, &[usize], [usize; 4])] = &[
    ("3D", &[3, 14, 2, 11, 1, 9, 15], [1, 0, 2, 3]),
    ("3D", &[14, 15, 2, 11, 1, 9, 15], [1, 0, 2, 3]),
    ("3D", &[15, 18, 1, 11, 2, 3, 14], [1, 3, 2, 0]),
    ("3D", &[18, 19, 1, 11, 2, 3, 14], [1, 3, 2, 0]),
    ("3D", &[15, 18, 1, 11, 2, 9, 15], [1, 3, 2, 0]),
    ("3D", &[18, 19, 1, 11, 2, 9, 15], [1, 3, 2, 0]),
    ("3D", &[15, 18, 1, 11, 2, 14, 15], [1, 3, 2, 0]),
    ("3D", &[18, 19, 1, 11, 2, 14, 15], [1, 3, 2, 0]),
    ("3H", &[9, 11, 1, 15, 7], [0, 2, 1, 3]),
];

/// Motif counts on the typical triangulation, in catalog order.
pub const TYPICAL_COUNTS: [usize; 10] = [6, 5, 0, 24, 0, 2, 4, 7, 2, 1];

/// Schläfli walls of the partially visible occurrences, aligned with [`PARTIAL`].
pub const PARTIAL_WALLS: &[&[&str]] = &[
    &["-c2+c9+c11-c15+c17-c18", "c2-c9-c11+2c15-c17-c18+c19"],
    &["-c2+c9+c11-c15+c17-c18"],
    &["-c2+c9+c11-2c15+c17+c18-c19"],
    &["c1-c9-2c11+2c15+c17-c18", "-c1+c9+2c11-c15-c17-c18+c19"],
    &["c1-c9-2c11+2c15+c17-c18"],
    &["c1-c9-2c11+c15+c17+c18-c19"],
    &["c1-c7+c9-c11-c15+c18", "-c1+2c11+c15-c17-2c18+c19"],
    &["-c1+c7-c9+c11+c15-c18", "-c1+2c11+c15-c17-2c18+c19"],
    &["c1-c7+c9-c11-c15+c18", "c1-2c11-c15+c17+2c18-c19"],
    &["-c1+c7-c9+c11+c15-c18", "c1-2c11-c15+c17+2c18-c19"],
    &["-c1+c9+2c11-2c15-c17+c18"],
    &["c2-c9-c11+c15-c17+c18"],
    &["-c1+c9+2c11-2c15-c17+c18"],
    &["c2-c9-c11+c15-c17+c18"],
    &["-c4+c7+c13-2c18+c19"],
    &["-c1+c7-c9+c11+c15-c18"],
    &["c4-c7-c13+2c18-c19"],
    &["c1-c7+c9-c11-c15+c18"],
];

/// The seven forms spanning the wall arrangement of the typical triangulation.
pub const ARRANGEMENT: [&str; 7] = [
    "c2-c9-c11+c15-c17+c18",
    "c2-c9-c11+2c15-c17-c18+c19",
    "c1-c9-2c11+2c15+c17-c18",
    "c1-c9-2c11+c15+c17+c18-c19",
    "c1-c7+c9-c11-c15+c18",
    "c1-2c11-c15+c17+2c18-c19",
    "c4-c7-c13+2c18-c19",
];

/// Interior edges of the typical triangulation with their links, as printed.
pub const LINKS: [([usize; 2], &[usize]); 10] = [
    ([1, 13], &[4, 7, 18, 19]),
    ([1, 15], &[7, 9, 18, 11]),
    ([1, 18], &[7, 13, 19, 11, 15]),
    ([2, 14], &[3, 6, 8, 9, 15, 11]),
    ([2, 15], &[9, 11, 14]),
    ([9, 11], &[1, 5, 2, 15]),
    ([11, 18], &[1, 15, 17, 19]),
    ([11, 14], &[2, 3, 12, 17, 15]),
    ([11, 15], &[1, 9, 2, 14, 17, 18]),
    ([5, 11], &[1, 2, 9]),
];

/// Equation of the hardly visible 3H occurrence (last entry of [`HARDLY`]).
pub const HARDLY_3H_EQUATION: &str = "c1-c7-c11+c15";

/// Which of the sign cells of (H4, H5) shows each 3B partial occurrence, as described in words
/// for the typical triangulation: 8, 6, 7, 9 for ++, +-, -+, --.
pub const B_CELLS_TEXT: [(usize, [bool; 2]); 4] = [(8, [true, true]), (6, [true, false]), (7, [false, true]), (9, [false, false])];

use std::sync::OnceLock;
use trop3::motifs::{motif_by_name, Occurrence};
use trop3::ratgeom::{parse_form, Form};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::Rng;
use trop3::ratgeom::linalg::to_q;
use trop3::ratgeom::Q;
use trop3::schlaefli::{schlaefli_fan_of, visibility_cones, wall_arrangement_of, SchlaefliCell, VisibilityCone};
use trop3::surface::lineality_vectors;

pub fn occ(entry: &(&str, &[usize], [usize; 4])) -> Occurrence {
    motif_by_name(entry.0).unwrap().canonical(entry.1, &entry.2)
}

pub fn form(s: &str) -> Form {
    parse_form(s, 20).unwrap_or_else(|| panic!("bad form {s}"))
}

/// Visibility cones of the typical triangulation, computed once per test binary.
pub fn typical_cones() -> &'static [VisibilityCone] {
    static CONES: OnceLock<Vec<VisibilityCone>> = OnceLock::new();
    CONES.get_or_init(|| visibility_cones(&trop3::data::typical()))
}

pub fn cone_of<'a>(cones: &'a [VisibilityCone], o: &Occurrence) -> &'a VisibilityCone {
    cones.iter().find(|v| &v.occurrence == o).unwrap_or_else(|| panic!("no cone for {o}"))
}

/// Whether `cycle` equals `want` up to rotation and reflection.
pub fn same_cycle(cycle: &[usize], want: &[usize]) -> bool {
    let n = want.len();
    if cycle.len() != n {
        return false;
    }
    let mut rev = want.to_vec();
    rev.reverse();
    (0..n).any(|r| {
        (0..n).all(|i| cycle[i] == want[(i + r) % n]) || (0..n).all(|i| cycle[i] == rev[(i + r) % n])
    })
}

pub fn arrangement() -> Vec<Form> {
    wall_arrangement_of(typical_cones())
}

/// Position of a published form in our arrangement and whether its sign agrees.
pub fn locate(arr: &[Form], f: &Form) -> (usize, bool) {
    for (i, w) in arr.iter().enumerate() {
        if w == f {
            return (i, true);
        }
        if w.iter().zip(f).all(|(a, b)| a == &-b) {
            return (i, false);
        }
    }
    panic!("form not in arrangement")
}

pub fn fan() -> &'static [SchlaefliCell] {
    static FAN: std::sync::OnceLock<Vec<SchlaefliCell>> = std::sync::OnceLock::new();
    FAN.get_or_init(|| schlaefli_fan_of(&trop3::data::typical(), typical_cones()))
}

/// Side of a cell with respect to the published wall `h`, in the published orientation.
pub fn side(arr: &[Form], cell: &SchlaefliCell, h: usize) -> bool {
    let (i, same) = locate(arr, &form(ARRANGEMENT[h]));
    cell.signs[i] == same
}

/// Random positive combination of a few cell points plus a lineality shift.
pub fn sample(rng: &mut StdRng, anchors: &[Vec<BigInt>]) -> Vec<Q> {
    let mut x = vec![BigInt::zero(); 20];
    for _ in 0..rng.gen_range(1..=3) {
        let p = &anchors[rng.gen_range(0..anchors.len())];
        let w = BigInt::from(rng.gen_range(1..=1000));
        for i in 0..20 {
            x[i] += &p[i] * &w;
        }
    }
    let mut c = to_q(&x);
    for v in lineality_vectors() {
        let s = Q::from_integer(rng.gen_range(-500..=500).into());
        for i in 0..20 {
            c[i] += &v[i] * &s;
        }
    }
    c
}

