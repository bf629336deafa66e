//! Tropical cubic polynomials, their dual subdivisions and secondary cones.

use crate::error::{Error, Result};
use crate::lattice::{EXPONENTS, NPTS};
use crate::ratgeom::linalg::{qi, solve_linear, Solution, Q};
use crate::ratgeom::{Cone, Form};
use crate::triangulation::{signed_volume, Tet, Triangulation};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;

pub type Heights = Vec<Q>;

pub fn heights_from_ints(v: &[i64]) -> Heights {
    v.iter().map(|&x| qi(x)).collect()
}

/// Value of the monomial `i` at `x`: `C_i + <exponent(i), x>`.
pub fn monomial(c: &[Q], i: usize, x: &[Q; 4]) -> Q {
    let e = EXPONENTS[i];
    let mut v = c[i].clone();
    for m in 0..4 {
        if e[m] != 0 && !x[m].is_zero() {
            v += &x[m] * BigInt::from(e[m]);
        }
    }
    v
}

/// Minimum over the 20 monomials and the set of indices attaining it.
pub fn evaluate(c: &[Q], x: &[Q; 4]) -> (Q, Vec<usize>) {
    let vals: Vec<Q> = (0..NPTS).map(|i| monomial(c, i, x)).collect();
    let min = vals.iter().min().unwrap().clone();
    let arg = (0..NPTS).filter(|&i| vals[i] == min).collect();
    (min, arg)
}

/// Affine interpolation of the heights on four affinely independent points, as
/// `(a0, a1, a2, a3)` with `l(p) = a0 + a1 p1 + a2 p2 + a3 p3`.
fn interpolate(c: &[Q], q: &[usize; 4]) -> Option<[Q; 4]> {
    let a: Vec<Vec<Q>> = q
        .iter()
        .map(|&i| {
            let e = EXPONENTS[i];
            vec![Q::one(), qi(e[1] as i64), qi(e[2] as i64), qi(e[3] as i64)]
        })
        .collect();
    let b: Vec<Q> = q.iter().map(|&i| c[i].clone()).collect();
    match solve_linear(&a, &b) {
        Solution::Unique(x) => Some([x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()]),
        _ => None,
    }
}

fn affine_at(l: &[Q; 4], i: usize) -> Q {
    let e = EXPONENTS[i];
    let mut v = l[0].clone();
    for m in 1..4 {
        if e[m] != 0 {
            v += &l[m] * BigInt::from(e[m]);
        }
    }
    v
}

/// Maximal cells of the regular subdivision induced by `c`, sorted.
pub fn dual_subdivision(c: &[Q]) -> Vec<Vec<usize>> {
    let mut quads = Vec::with_capacity(4845);
    for a in 0..NPTS {
        for b in a + 1..NPTS {
            for cc in b + 1..NPTS {
                for d in cc + 1..NPTS {
                    if signed_volume(&[a, b, cc, d]) != 0 {
                        quads.push([a, b, cc, d]);
                    }
                }
            }
        }
    }
    let cells: BTreeSet<Vec<usize>> = quads
        .par_iter()
        .filter_map(|q| {
            let l = interpolate(c, q)?;
            let mut cell = Vec::new();
            for e in 0..NPTS {
                let v = affine_at(&l, e);
                if c[e] < v {
                    return None;
                }
                if c[e] == v {
                    cell.push(e);
                }
            }
            Some(cell)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    cells.into_iter().collect()
}

pub fn is_smooth(c: &[Q]) -> bool {
    let cells = dual_subdivision(c);
    cells.len() == 27
        && cells
            .iter()
            .all(|s| s.len() == 4 && signed_volume(&[s[0], s[1], s[2], s[3]]).abs() == 1)
}

/// The triangulation induced by generic heights.
pub fn triangulation_of(c: &[Q]) -> Result<Triangulation> {
    let cells = dual_subdivision(c);
    if let Some(bad) = cells.iter().find(|s| s.len() != 4) {
        return Err(Error::NotACell(bad.clone()));
    }
    Triangulation::validate(&cells)
}

/// Integer barycentric coordinates of point `b` in the unimodular tetrahedron `t`.
pub fn barycentric(t: &Tet, b: usize) -> [i64; 4] {
    let vol = signed_volume(t);
    let mut lam = [0; 4];
    for (m, slot) in lam.iter_mut().enumerate() {
        let mut u = *t;
        u[m] = b;
        *slot = signed_volume(&u) / vol;
    }
    lam
}

/// One fold inequality per interior triangle, oriented so that heights inducing `t` are positive.
pub fn secondary_forms(t: &Triangulation) -> Vec<Form> {
    t.interior_triangles()
        .into_iter()
        .map(|(tri, a, b)| {
            let tet = [tri[0], tri[1], tri[2], a];
            let lam = barycentric(&tet, b);
            let mut f = vec![BigInt::zero(); NPTS];
            f[b] += 1;
            for m in 0..4 {
                f[tet[m]] -= lam[m];
            }
            f
        })
        .collect()
}

pub fn secondary_cone(t: &Triangulation) -> Cone {
    Cone::from_forms(NPTS, secondary_forms(t), Vec::new())
}

/// The four lineality vectors `(exponent(i)_f)_i`.
pub fn lineality_vectors() -> Vec<Heights> {
    (0..4)
        .map(|f| (0..NPTS).map(|i| qi(EXPONENTS[i][f] as i64)).collect())
        .collect()
}

/// The point (with `x0 = 0`) where the four monomials of `tet` agree; it must be a global minimum.
pub fn vertex_of_tetra(c: &[Q], tet: &Tet) -> Result<[Q; 4]> {
    let row = |i: usize| -> Vec<Q> {
        let e = EXPONENTS[i];
        vec![qi(e[1] as i64), qi(e[2] as i64), qi(e[3] as i64)]
    };
    let r0 = row(tet[0]);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &m in &tet[1..] {
        let rm = row(m);
        a.push((0..3).map(|k| &r0[k] - &rm[k]).collect::<Vec<Q>>());
        b.push(&c[m] - &c[tet[0]]);
    }
    let Solution::Unique(x) = solve_linear(&a, &b) else {
        return Err(Error::NotACell(tet.to_vec()));
    };
    let p = [Q::zero(), x[0].clone(), x[1].clone(), x[2].clone()];
    let (_, arg) = evaluate(c, &p);
    if tet.iter().all(|i| arg.contains(i)) {
        Ok(p)
    } else {
        Err(Error::NotACell(tet.to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::ratgeom::linalg::dot;

    #[test]
    fn round_trips() {
        let t = triangulation_of(&heights_from_ints(&data::TYPICAL_HEIGHTS)).unwrap();
        assert_eq!(t, data::typical());
        let h = triangulation_of(&heights_from_ints(&data::HONEYCOMB_HEIGHTS)).unwrap();
        assert_eq!(h, data::honeycomb());
        assert!(is_smooth(&heights_from_ints(&data::TYPICAL_HEIGHTS)));
        assert!(is_smooth(&heights_from_ints(&data::HONEYCOMB_HEIGHTS)));
    }

    #[test]
    fn zero_heights_give_one_cell() {
        let z = vec![Q::zero(); NPTS];
        let cells = dual_subdivision(&z);
        assert_eq!(cells, vec![(0..NPTS).collect::<Vec<_>>()]);
        assert!(!is_smooth(&z));
        let (v, arg) = evaluate(&z, &[Q::zero(), Q::zero(), Q::zero(), Q::zero()]);
        assert!(v.is_zero());
        assert_eq!(arg.len(), 20);
    }

    #[test]
    fn secondary_forms_contain_inducing_heights() {
        let t = data::typical();
        let forms = secondary_forms(&t);
        assert_eq!(forms.len(), 36);
        let c = heights_from_ints(&data::TYPICAL_HEIGHTS);
        for f in &forms {
            assert!(dot(f, &c) > Q::zero());
            for v in lineality_vectors() {
                assert!(dot(f, &v).is_zero());
            }
        }
    }

    #[test]
    fn honeycomb_vertices() {
        let c = heights_from_ints(&data::HONEYCOMB_HEIGHTS);
        let v = vertex_of_tetra(&c, &[5, 8, 14, 15]).unwrap();
        assert_eq!(v, [qi(0), qi(10), qi(-19), qi(-8)]);
        let (_, arg) = evaluate(&c, &v);
        assert_eq!(arg, vec![5, 8, 14, 15]);
        assert!(vertex_of_tetra(&c, &[0, 1, 2, 5]).is_err());
    }

    #[test]
    fn invariant_under_lineality_shift() {
        let mut c = heights_from_ints(&data::TYPICAL_HEIGHTS);
        let base = dual_subdivision(&c);
        for (k, v) in lineality_vectors().iter().enumerate() {
            for i in 0..NPTS {
                c[i] += &v[i] * BigInt::from(k as i64 + 2);
            }
        }
        for x in c.iter_mut() {
            *x += qi(7);
        }
        assert_eq!(dual_subdivision(&c), base);
    }
}
