//! Tropical lines in 3-space via tropical Plücker vectors.

use crate::error::{Error, Result};
use crate::lattice::{self, Perm};
use crate::ratgeom::linalg::{qi, Q};
use serde::{Deserialize, Serialize};

/// Coordinates in the order `P01, P02, P03, P12, P13, P23`.
pub type Pluecker = [Q; 6];

pub type Point = [Q; 4];

pub fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("invalid pair ({a},{b})"),
    }
}

fn p(v: &Pluecker, a: usize, b: usize) -> &Q {
    &v[pair_index(a, b)]
}

pub fn pluecker_from_ints(v: [i64; 6]) -> Pluecker {
    v.map(qi)
}

fn pair_sums(v: &Pluecker) -> [Q; 3] {
    [
        p(v, 0, 1) + p(v, 2, 3),
        p(v, 0, 2) + p(v, 1, 3),
        p(v, 0, 3) + p(v, 1, 2),
    ]
}

pub fn is_pluecker(v: &Pluecker) -> bool {
    let s = pair_sums(v);
    let m = s.iter().min().unwrap();
    s.iter().filter(|x| *x == m).count() >= 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabeledType {
    /// `ij|kl` with `i < j`, `k < l`, and `0 ∈ {i, j}`.
    Split([usize; 2], [usize; 2]),
    Degenerate,
}

impl std::fmt::Display for LabeledType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LabeledType::Split(a, b) => write!(f, "{}{}|{}{}", a[0], a[1], b[0], b[1]),
            LabeledType::Degenerate => write!(f, "degenerate"),
        }
    }
}

pub fn labeled_type(v: &Pluecker) -> Result<LabeledType> {
    if !is_pluecker(v) {
        return Err(Error::NotPluecker);
    }
    let s = pair_sums(v);
    let max = s.iter().max().unwrap();
    if s.iter().all(|x| x == max) {
        return Ok(LabeledType::Degenerate);
    }
    let k = s.iter().position(|x| x == max).unwrap();
    Ok(match k {
        0 => LabeledType::Split([0, 1], [2, 3]),
        1 => LabeledType::Split([0, 2], [1, 3]),
        _ => LabeledType::Split([0, 3], [1, 2]),
    })
}

/// The two vertices of a non-degenerate line: `q_ij` carries the rays `ω_i, ω_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePair {
    pub ij: [usize; 2],
    pub kl: [usize; 2],
    pub q_ij: Point,
    pub q_kl: Point,
}

fn base_vertices(v: &Pluecker) -> (Point, Point) {
    let q03 = [
        p(v, 0, 2) + p(v, 0, 3),
        p(v, 0, 2) + p(v, 1, 3),
        p(v, 0, 2) + p(v, 2, 3),
        p(v, 0, 3) + p(v, 2, 3),
    ];
    let q12 = [
        p(v, 0, 2) + p(v, 1, 3),
        p(v, 1, 2) + p(v, 1, 3),
        p(v, 1, 2) + p(v, 2, 3),
        p(v, 1, 3) + p(v, 2, 3),
    ];
    (q03, q12)
}

pub fn permute_pluecker(s: &Perm, v: &Pluecker) -> Pluecker {
    // (s·P)_{s(a) s(b)} = P_ab
    let mut out = v.clone();
    for a in 0..4 {
        for b in a + 1..4 {
            out[pair_index(s[a], s[b])] = v[pair_index(a, b)].clone();
        }
    }
    out
}

pub fn permute_point(s: &Perm, x: &Point) -> Point {
    let mut out = x.clone();
    for a in 0..4 {
        out[s[a]] = x[a].clone();
    }
    out
}

pub fn line_vertices(v: &Pluecker) -> Result<LinePair> {
    let LabeledType::Split(ij, kl) = labeled_type(v)? else {
        return Err(Error::DegenerateLine);
    };
    // conjugate so that the type becomes 03|12
    let s: Perm = match ij {
        [0, 3] => lattice::IDENTITY,
        [0, 1] => lattice::transposition(1, 3),
        _ => lattice::transposition(2, 3),
    };
    // P'_ab = P_{s(a) s(b)}, i.e. P' = s^{-1}·P; s is an involution
    let vp = permute_pluecker(&s, v);
    let (q03, q12) = base_vertices(&vp);
    Ok(LinePair {
        ij,
        kl,
        q_ij: permute_point(&s, &q03),
        q_kl: permute_point(&s, &q12),
    })
}

pub fn pluecker_from_vertices(u: &Point, w: &Point) -> Pluecker {
    let m = |a: usize, b: usize| -> Q {
        let x = &u[a] + &w[b];
        let y = &u[b] + &w[a];
        x.min(y)
    };
    [m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)]
}

/// Representative with third coordinate zero.
pub fn normalize_point(x: &Point) -> Point {
    let s = x[2].clone();
    [&x[0] - &s, &x[1] - &s, Q::from_integer(0.into()), &x[3] - &s]
}

pub fn eq_mod_ones(a: &Point, b: &Point) -> bool {
    let d = &a[0] - &b[0];
    (1..4).all(|m| &a[m] - &b[m] == d)
}

pub fn eq_up_to_constant(a: &Pluecker, b: &Pluecker) -> bool {
    let d = &a[0] - &b[0];
    (1..6).all(|m| &a[m] - &b[m] == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(v: [i64; 4]) -> Point {
        v.map(qi)
    }

    #[test]
    fn relation_and_types() {
        let ex = pluecker_from_ints([26, 6, 17, 7, 18, 0]);
        assert!(is_pluecker(&ex));
        assert_eq!(labeled_type(&ex).unwrap(), LabeledType::Split([0, 1], [2, 3]));
        let z = pluecker_from_ints([0; 6]);
        assert!(is_pluecker(&z));
        assert_eq!(labeled_type(&z).unwrap(), LabeledType::Degenerate);
        assert!(!is_pluecker(&pluecker_from_ints([0, 1, 1, 1, 1, 1])));
        assert_eq!(
            labeled_type(&pluecker_from_ints([0, 0, 1, 1, 0, 0])).unwrap(),
            LabeledType::Split([0, 3], [1, 2])
        );
    }

    #[test]
    fn vertices_of_example_line() {
        let l = line_vertices(&pluecker_from_ints([26, 6, 17, 7, 18, 0])).unwrap();
        assert_eq!(l.ij, [0, 1]);
        assert!(eq_mod_ones(&l.q_ij, &pt([19, 20, 0, 11])));
        assert!(eq_mod_ones(&l.q_kl, &pt([17, 18, 0, 11])));
        assert_eq!(normalize_point(&l.q_ij), pt([19, 20, 0, 11]));
    }

    #[test]
    fn base_case_substitution() {
        let l = line_vertices(&pluecker_from_ints([0, 0, 1, 1, 0, 0])).unwrap();
        assert_eq!(l.q_ij, pt([1, 0, 0, 1]));
        assert_eq!(l.q_kl, pt([0, 1, 1, 0]));
        assert_eq!(line_vertices(&pluecker_from_ints([0; 6])), Err(Error::DegenerateLine));
    }

    #[test]
    fn minors_of_example_vertices() {
        let p = pluecker_from_vertices(&pt([19, 20, 0, 11]), &pt([17, 18, 0, 11]));
        assert_eq!(p, pluecker_from_ints([37, 17, 28, 18, 29, 11]));
        assert!(eq_up_to_constant(&p, &pluecker_from_ints([26, 6, 17, 7, 18, 0])));
    }

    fn arb_pluecker() -> impl Strategy<Value = Pluecker> {
        // min(u_a+w_b, u_b+w_a) always satisfies the relation
        (proptest::array::uniform4(-20i64..20), proptest::array::uniform4(-20i64..20))
            .prop_map(|(u, w)| pluecker_from_vertices(&u.map(qi), &w.map(qi)))
    }

    proptest! {
        #[test]
        fn round_trip(p in arb_pluecker()) {
            prop_assert!(is_pluecker(&p));
            if let Ok(l) = line_vertices(&p) {
                let back = pluecker_from_vertices(&l.q_ij, &l.q_kl);
                prop_assert!(eq_up_to_constant(&back, &p));
            }
        }

        #[test]
        fn scaling_invariance(p in arb_pluecker(), c in -50i64..50) {
            let shifted: Pluecker = p.clone().map(|x| x + qi(c));
            prop_assert_eq!(is_pluecker(&shifted), is_pluecker(&p));
            prop_assert_eq!(labeled_type(&shifted).unwrap(), labeled_type(&p).unwrap());
        }

        #[test]
        fn bounded_edge_direction(p in arb_pluecker()) {
            if let Ok(l) = line_vertices(&p) {
                let d: Vec<Q> = (0..4).map(|m| &l.q_kl[m] - &l.q_ij[m]).collect();
                let [k, m] = l.kl;
                let [i, j] = l.ij;
                prop_assert_eq!(&d[k], &d[m]);
                prop_assert_eq!(&d[i], &d[j]);
                prop_assert!(d[k] >= d[i]);
            }
        }

        #[test]
        fn equivariance(p in arb_pluecker(), k in 0usize..24) {
            let s = lattice::all_perms()[k];
            if let (Ok(l), Ok(lp)) = (line_vertices(&p), line_vertices(&permute_pluecker(&s, &p))) {
                let a = permute_point(&s, &l.q_ij);
                let b = permute_point(&s, &l.q_kl);
                let same = (eq_mod_ones(&a, &lp.q_ij) && eq_mod_ones(&b, &lp.q_kl))
                    || (eq_mod_ones(&a, &lp.q_kl) && eq_mod_ones(&b, &lp.q_ij));
                prop_assert!(same);
            }
        }
    }
}
