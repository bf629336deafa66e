//! Unimodular triangulations of 3Δ3 as combinatorial objects.

use crate::canon;
use crate::error::{Error, Result};
use crate::lattice::{self, Perm, EXPONENTS, NPTS};
use crate::ratgeom::linalg::det_bareiss;
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

pub type Tet = [usize; 4];

pub const NFACETS: usize = 27;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangulation {
    facets: Vec<Tet>,
}

/// Signed determinant of the edge vectors of `t` in the coordinates x1, x2, x3.
pub fn signed_volume(t: &Tet) -> i64 {
    let p = |i: usize| -> [i64; 3] {
        let e = EXPONENTS[t[i]];
        [e[1] as i64, e[2] as i64, e[3] as i64]
    };
    let o = p(0);
    let v: Vec<[i64; 3]> = (1..4)
        .map(|i| {
            let q = p(i);
            [q[0] - o[0], q[1] - o[1], q[2] - o[2]]
        })
        .collect();
    v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) - v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0])
        + v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0])
}

/// Side of the plane through triangle `tri` on which point `p` lies (sign of the volume).
fn side(tri: &[usize; 3], p: usize) -> i64 {
    signed_volume(&[tri[0], tri[1], tri[2], p]).signum()
}

/// Whether all points share a facet `F_f` of 3Δ3.
pub fn on_common_facet(pts: &[usize]) -> bool {
    (0..4).any(|f| pts.iter().all(|&i| lattice::on_facet(i, f)))
}

pub fn sorted_tet(mut t: Tet) -> Tet {
    t.sort_unstable();
    t
}

impl Triangulation {
    pub fn validate(facets: &[Vec<usize>]) -> Result<Self> {
        if facets.len() != NFACETS {
            return Err(Error::FacetCount {
                expected: NFACETS,
                got: facets.len(),
            });
        }
        let mut tets: Vec<Tet> = Vec::with_capacity(NFACETS);
        for f in facets {
            if f.len() != 4 {
                return Err(Error::MalformedFacet(f.clone()));
            }
            if let Some(&bad) = f.iter().find(|&&i| i >= NPTS) {
                return Err(Error::PointOutOfRange(bad));
            }
            let t = sorted_tet([f[0], f[1], f[2], f[3]]);
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedFacet(f.clone()));
            }
            tets.push(t);
        }
        let mut total = 0;
        for t in &tets {
            let v = signed_volume(t).abs();
            if v == 0 {
                return Err(Error::DegenerateFacet(*t));
            }
            if v != 1 {
                return Err(Error::NotUnimodular {
                    facet: *t,
                    volume: v,
                });
            }
            total += v;
        }
        tets.sort_unstable();
        let mut tri_owners: HashMap<[usize; 3], Vec<usize>> = HashMap::new();
        for t in &tets {
            for drop in 0..4 {
                tri_owners.entry(triangle_without(t, drop)).or_default().push(t[drop]);
            }
        }
        let mut tris: Vec<_> = tri_owners.into_iter().collect();
        tris.sort();
        for (tri, opp) in tris {
            let ok = if on_common_facet(&tri) {
                opp.len() == 1
            } else {
                opp.len() == 2 && side(&tri, opp[0]) * side(&tri, opp[1]) < 0
            };
            if !ok {
                return Err(Error::Overlap(tri));
            }
        }
        if total != NFACETS as i64 {
            return Err(Error::Volume(total));
        }
        Ok(Triangulation { facets: tets })
    }

    pub fn from_tets(tets: &[Tet]) -> Result<Self> {
        let v: Vec<Vec<usize>> = tets.iter().map(|t| t.to_vec()).collect();
        Self::validate(&v)
    }

    pub fn facets(&self) -> &[Tet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|t| t.to_vec()).collect()
    }

    /// All faces of the complex, grouped by size 1..=4.
    pub fn faces(&self) -> [BTreeSet<Vec<usize>>; 4] {
        let mut out: [BTreeSet<Vec<usize>>; 4] = Default::default();
        for t in &self.facets {
            for mask in 1u32..16 {
                let face: Vec<usize> = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| t[b]).collect();
                out[face.len() - 1].insert(face);
            }
        }
        out
    }

    pub fn face_set(&self) -> HashSet<Vec<usize>> {
        self.faces().into_iter().flatten().collect()
    }

    pub fn f_vector(&self) -> [usize; 4] {
        let f = self.faces();
        [f[0].len(), f[1].len(), f[2].len(), f[3].len()]
    }

    pub fn boundary_f_vector(&self) -> [usize; 3] {
        let f = self.faces();
        let count = |k: usize| f[k].iter().filter(|s| on_common_facet(s)).count();
        [count(0), count(1), count(2)]
    }

    pub fn gkz(&self) -> [usize; NPTS] {
        let mut g = [0; NPTS];
        for t in &self.facets {
            for &i in t {
                g[i] += 1;
            }
        }
        g
    }

    /// Interior triangles with the two opposite vertices `(tri, a, b)`, `a < b`.
    pub fn interior_triangles(&self) -> Vec<([usize; 3], usize, usize)> {
        let mut owners: HashMap<[usize; 3], Vec<usize>> = HashMap::new();
        for t in &self.facets {
            for drop in 0..4 {
                owners.entry(triangle_without(t, drop)).or_default().push(t[drop]);
            }
        }
        let mut out: Vec<_> = owners
            .into_iter()
            .filter(|(_, o)| o.len() == 2)
            .map(|(tri, o)| (tri, o[0].min(o[1]), o[0].max(o[1])))
            .collect();
        out.sort();
        out
    }

    /// Interior edges with their link cycles, each starting at its smallest vertex and
    /// continuing to the smaller neighbour.
    pub fn interior_edges(&self) -> Result<Vec<([usize; 2], Vec<usize>)>> {
        let f = self.faces();
        let mut out = Vec::new();
        for e in &f[1] {
            if on_common_facet(e) {
                continue;
            }
            let (a, b) = (e[0], e[1]);
            let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
            for t in &self.facets {
                if t.contains(&a) && t.contains(&b) {
                    let rest: Vec<usize> = t.iter().copied().filter(|&x| x != a && x != b).collect();
                    adj.entry(rest[0]).or_default().push(rest[1]);
                    adj.entry(rest[1]).or_default().push(rest[0]);
                }
            }
            let edge = [a, b];
            if adj.len() < 3 || adj.values().any(|n| n.len() != 2) {
                return Err(Error::OpenLink(edge));
            }
            let start = *adj.keys().min().unwrap();
            let mut cycle = vec![start];
            let mut prev = start;
            let mut cur = *adj[&start].iter().min().unwrap();
            while cur != start {
                cycle.push(cur);
                let n = &adj[&cur];
                let next = if n[0] == prev { n[1] } else { n[0] };
                prev = cur;
                cur = next;
                if cycle.len() > adj.len() {
                    return Err(Error::OpenLink(edge));
                }
            }
            if cycle.len() != adj.len() {
                return Err(Error::OpenLink(edge));
            }
            out.push((edge, cycle));
        }
        Ok(out)
    }

    /// Histogram `(b3, b4, ...)` of link lengths of interior edges.
    pub fn b_vector(&self) -> Result<Vec<usize>> {
        let edges = self.interior_edges()?;
        let max = edges.iter().map(|(_, c)| c.len()).max().unwrap_or(3);
        let mut b = vec![0; max - 2];
        for (_, c) in &edges {
            b[c.len() - 3] += 1;
        }
        Ok(b)
    }

    pub fn permuted(&self, p: &Perm) -> Triangulation {
        let m = lattice::point_map(p);
        let mut facets: Vec<Tet> = self
            .facets
            .iter()
            .map(|t| sorted_tet([m[t[0]], m[t[1]], m[t[2]], m[t[3]]]))
            .collect();
        facets.sort_unstable();
        Triangulation { facets }
    }

    /// Orbit size under S4 and the image with lexicographically least GKZ vector
    /// (ties broken by the sorted facet list).
    pub fn orbit(&self) -> (usize, Triangulation) {
        let images: BTreeSet<Triangulation> = lattice::all_perms().iter().map(|p| self.permuted(p)).collect();
        let rep = images
            .iter()
            .min_by(|a, b| a.gkz().cmp(&b.gkz()).then_with(|| a.facets.cmp(&b.facets)))
            .unwrap()
            .clone();
        (images.len(), rep)
    }

    pub fn altshuler(&self) -> BigInt {
        altshuler_of(&self.facets.iter().map(|t| t.to_vec()).collect::<Vec<_>>())
    }

    pub fn canonical_key(&self) -> u64 {
        canon::canonical_hash(&self.facet_lists())
    }
}

fn triangle_without(t: &Tet, drop: usize) -> [usize; 3] {
    let v: Vec<usize> = (0..4).filter(|&i| i != drop).map(|i| t[i]).collect();
    [v[0], v[1], v[2]]
}

/// `max(|det(J Jᵀ)|, |det(Jᵀ J)|)` for the vertex–facet incidence matrix `J`.
pub fn altshuler_of(facets: &[Vec<usize>]) -> BigInt {
    let mut verts: Vec<usize> = facets.iter().flatten().copied().collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    let m = facets.len();
    let idx: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut j = vec![vec![0i64; m]; n];
    for (c, f) in facets.iter().enumerate() {
        for v in f {
            j[idx[v]][c] = 1;
        }
    }
    let jjt: Vec<Vec<BigInt>> = (0..n)
        .map(|a| (0..n).map(|b| BigInt::from((0..m).map(|c| j[a][c] * j[b][c]).sum::<i64>())).collect())
        .collect();
    let jtj: Vec<Vec<BigInt>> = (0..m)
        .map(|a| (0..m).map(|b| BigInt::from((0..n).map(|r| j[r][a] * j[r][b]).sum::<i64>())).collect())
        .collect();
    det_bareiss(jjt).abs().max(det_bareiss(jtj).abs())
}
