//! Unimodular triangulations of the plane cubic configuration 3Δ2.

use crate::ratgeom::linalg::{qi, Q};
use crate::ratgeom::lp::{Lp, Rel};
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};

/// The ten points `(a, b, c)` with `a + b + c = 3`, in lexicographic order.
pub fn points() -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in (0..=3).rev() {
        for b in (0..=3 - a).rev() {
            out.push([a, b, 3 - a - b]);
        }
    }
    out
}

pub type Tri = [usize; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneTriangulation {
    pub triangles: Vec<Tri>,
    pub regular: bool,
}

fn xy(p: &[i64; 3]) -> [i64; 2] {
    [p[0], p[1]]
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

pub fn unit_triangles(pts: &[[i64; 3]]) -> Vec<Tri> {
    let n = pts.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if cross(xy(&pts[a]), xy(&pts[b]), xy(&pts[c])).abs() == 1 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Interiors disjoint iff some edge line of one triangle weakly separates the two.
fn interior_disjoint(pts: &[[i64; 3]], s: &Tri, t: &Tri) -> bool {
    let sep = |u: &Tri, v: &Tri| {
        (0..3).any(|e| {
            let (p, q, r) = (xy(&pts[u[e]]), xy(&pts[u[(e + 1) % 3]]), xy(&pts[u[(e + 2) % 3]]));
            let own = cross(p, q, r).signum();
            v.iter().all(|&w| cross(p, q, xy(&pts[w])) * own <= 0)
        })
    };
    sep(s, t) || sep(t, s)
}

fn cliques(compat: &[u128], n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(compat: &[u128], cand: u128, cur: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        if (cand.count_ones() as usize) < size - cur.len() {
            return;
        }
        let mut c = cand;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            c &= c - 1;
            cur.push(i);
            rec(compat, c & compat[i], cur, size, out);
            cur.pop();
        }
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut out = Vec::new();
    rec(compat, all, &mut Vec::new(), size, &mut out);
    out
}

/// Regular iff heights exist with every interior edge folding upward by at least one.
fn is_regular(pts: &[[i64; 3]], tris: &[Tri]) -> bool {
    let mut owners: HashMap<[usize; 2], Vec<(Tri, usize)>> = HashMap::new();
    for t in tris {
        for e in 0..3 {
            let mut edge = [t[e], t[(e + 1) % 3]];
            edge.sort();
            owners.entry(edge).or_default().push((*t, t[(e + 2) % 3]));
        }
    }
    let n = pts.len();
    let mut lp = Lp::new(n);
    for pair in owners.values().filter(|v| v.len() == 2) {
        let (t, _) = pair[0];
        let d = pair[1].1;
        // barycentric coordinates of d with respect to t
        let (a, b, c) = (xy(&pts[t[0]]), xy(&pts[t[1]]), xy(&pts[t[2]]));
        let p = xy(&pts[d]);
        let det = cross(a, b, c);
        let la = cross(p, b, c);
        let lb = cross(a, p, c);
        let lc = cross(a, b, p);
        let mut row = vec![Q::zero(); n];
        row[d] += qi(1);
        row[t[0]] -= Q::new(la.into(), det.into());
        row[t[1]] -= Q::new(lb.into(), det.into());
        row[t[2]] -= Q::new(lc.into(), det.into());
        lp.push(row, Rel::Ge, qi(1));
    }
    lp.solve().is_feasible()
}

fn s3_images(pts: &[[i64; 3]], tris: &[Tri]) -> Vec<Vec<Tri>> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    perms
        .iter()
        .map(|p| {
            let map: Vec<usize> = pts
                .iter()
                .map(|x| {
                    let mut y = [0; 3];
                    for a in 0..3 {
                        y[p[a]] = x[a];
                    }
                    pts.iter().position(|z| *z == y).unwrap()
                })
                .collect();
            let mut img: Vec<Tri> = tris
                .iter()
                .map(|t| {
                    let mut u = [map[t[0]], map[t[1]], map[t[2]]];
                    u.sort();
                    u
                })
                .collect();
            img.sort();
            img
        })
        .collect()
}

pub struct Census {
    pub triangulations: Vec<PlaneTriangulation>,
    pub orbits: usize,
}

pub fn enumerate_3delta2() -> Census {
    let pts = points();
    let tris = unit_triangles(&pts);
    let n = tris.len();
    assert!(n <= 128);
    let compat: Vec<u128> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && interior_disjoint(&pts, &tris[i], &tris[j]))
                .fold(0u128, |m, j| m | 1 << j)
        })
        .collect();
    let mut triangulations: Vec<PlaneTriangulation> = cliques(&compat, n, 9)
        .into_iter()
        .map(|c| {
            let mut ts: Vec<Tri> = c.iter().map(|&i| tris[i]).collect();
            ts.sort();
            let regular = is_regular(&pts, &ts);
            PlaneTriangulation { triangles: ts, regular }
        })
        .collect();
    triangulations.sort_by(|a, b| a.triangles.cmp(&b.triangles));
    let orbits: BTreeSet<Vec<Tri>> = triangulations
        .iter()
        .map(|t| s3_images(&pts, &t.triangles).into_iter().min().unwrap())
        .collect();
    Census {
        orbits: orbits.len(),
        triangulations,
    }
}
