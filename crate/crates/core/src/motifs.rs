//! The ten motifs for tropical lines on smooth tropical cubic surfaces and the
//! enumeration of their occurrences in a triangulation.
//!
//! Vertex labels `A, B, C, ...` are `0, 1, 2, ...`; exit slots `i, j, k, l` are `0..4`.
//! An occurrence assigns a point of 3Δ3 to every label and a facet to every slot.

use crate::error::{Error, Result};
use crate::lattice::{self, Perm, EXPONENTS, NPTS};
use crate::triangulation::{on_common_facet, Tet, Triangulation};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};

pub const NAMES: [&str; 10] = ["3A", "3B", "3C", "3D", "3E", "3F", "3G", "3H", "3I", "3J"];

/// Where a tetrahedron of the motif sits on the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anchor {
    /// On the ray from the `ij` vertex in the direction of the given slot.
    Ij(usize),
    /// On the ray from the `kl` vertex in the direction of the given slot.
    Kl(usize),
    /// On the bounded edge.
    Bounded,
}

/// Which cells of the motif are dual to the two line vertices, and which tetrahedra
/// have their dual vertex on an edge or ray of the line.
#[derive(Clone, Debug)]
pub struct LineSpec {
    pub ij_cell: Vec<usize>,
    pub kl_cell: Vec<usize>,
    pub passes: Vec<(Anchor, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct MotifDef {
    pub name: &'static str,
    pub nv: usize,
    pub cells: Vec<Vec<usize>>,
    /// `(labels, slot)`: an edge inside `F_slot`, or for a tetrahedron some edge inside `F_slot`.
    pub exits: Vec<(Vec<usize>, usize)>,
    /// `(labels, slots)`: every listed point satisfies `sum of x_exit(slot) = 1`.
    pub planes: Vec<(Vec<usize>, Vec<usize>)>,
    pub distinct: Vec<(usize, usize)>,
    /// Generators of the symmetry group: vertex permutation and slot permutation.
    pub symmetries: Vec<(Vec<usize>, Perm)>,
    /// Slot permutations that give the same line.
    pub exit_swaps: Vec<Perm>,
    pub family: bool,
    pub group_order: usize,
    pub line: LineSpec,
}

fn labels(s: &str) -> Vec<usize> {
    s.bytes().map(|b| (b - b'A') as usize).collect()
}

fn slot(c: char) -> usize {
    match c {
        'i' => 0,
        'j' => 1,
        'k' => 2,
        'l' => 3,
        _ => panic!("bad slot {c}"),
    }
}

/// Parses a generator such as `"AF BD CE|ik jl"` into vertex and slot permutations.
fn generator(nv: usize, s: &str) -> (Vec<usize>, Perm) {
    let (v, e) = s.split_once('|').unwrap_or((s, ""));
    let mut vp: Vec<usize> = (0..nv).collect();
    for cyc in v.split_whitespace() {
        let l = labels(cyc);
        vp.swap(l[0], l[1]);
    }
    let mut ep = lattice::IDENTITY;
    for cyc in e.split_whitespace() {
        let c: Vec<char> = cyc.chars().collect();
        ep.swap(slot(c[0]), slot(c[1]));
    }
    (vp, ep)
}

fn anchor(s: &str) -> Anchor {
    match s.as_bytes() {
        b"b" => Anchor::Bounded,
        [b'i', b'j', b':', c] => Anchor::Ij(slot(*c as char)),
        [b'k', b'l', b':', c] => Anchor::Kl(slot(*c as char)),
        _ => panic!("bad anchor {s}"),
    }
}

#[allow(clippy::too_many_arguments)]
fn motif(
    name: &'static str,
    nv: usize,
    cells: &[&str],
    exits: &[&str],
    planes: &[&str],
    distinct: &[&str],
    sym: &[&str],
    swaps: &[&str],
    group_order: usize,
    line: (&str, &str, &[(&str, &str)]),
) -> MotifDef {
    let exits = exits
        .iter()
        .map(|e| {
            let (l, s) = e.split_once(':').unwrap();
            (labels(l), slot(s.chars().next().unwrap()))
        })
        .collect();
    let planes = planes
        .iter()
        .map(|p| {
            let (l, s) = p.split_once(':').unwrap();
            (labels(l), s.chars().map(slot).collect())
        })
        .collect();
    let distinct = distinct
        .iter()
        .map(|d| {
            let l = labels(d);
            (l[0], l[1])
        })
        .collect();
    let symmetries = sym.iter().map(|g| generator(nv, g)).collect();
    let exit_swaps = swaps.iter().map(|g| generator(nv, &format!("|{g}")).1).collect();
    MotifDef {
        name,
        nv,
        cells: cells.iter().map(|c| labels(c)).collect(),
        exits,
        planes,
        distinct,
        symmetries,
        exit_swaps,
        family: name == "3I" || name == "3J",
        group_order,
        line: LineSpec {
            ij_cell: labels(line.0),
            kl_cell: labels(line.1),
            passes: line.2.iter().map(|(a, c)| (anchor(a), labels(c))).collect(),
        },
    }
}

pub fn catalog() -> Vec<MotifDef> {
    vec![
        motif(
            "3A", 6,
            &["ABD", "ACD", "CDEF"],
            &["AB:i", "BD:j", "AC:k", "EF:l"],
            &["AD:ij", "CD:l"],
            &["AE", "AF", "BC"],
            &["EF"], &[], 2,
            ("ABD", "ACD", &[("kl:l", "CDEF")]),
        ),
        motif(
            "3B", 6,
            &["ABC", "DEF", "BCDE"],
            &["AB:i", "AC:j", "DF:k", "EF:l"],
            &["BC:ij", "DE:kl"],
            &["AD", "AE", "FB", "FC", "AF"],
            &["BC|ij", "AF BD CE|ik jl"], &[], 8,
            ("ABC", "DEF", &[("b", "BCDE")]),
        ),
        motif(
            "3C", 7,
            &["ABC", "BCDE", "DEFG"],
            &["AB:i", "AC:j", "DE:k", "FG:l"],
            &["BC:ij", "DE:l"],
            &["AD", "AE"],
            &["BC|ij", "DE", "FG"], &[], 8,
            ("ABC", "DE", &[("b", "BCDE"), ("kl:l", "DEFG")]),
        ),
        motif(
            "3D", 7,
            &["ABCD", "CDE", "DEFG"],
            &["CE:i", "AB:j", "DE:k", "FG:l"],
            &["CD:j", "DE:l"],
            &["EA", "EB"],
            &["AB", "FG"], &[], 4,
            ("CDE", "DE", &[("ij:j", "ABCD"), ("kl:l", "DEFG")]),
        ),
        motif(
            "3E", 7,
            &["ABC", "BCDE", "BCFG"],
            &["AB:i", "AC:j", "DE:k", "FG:l"],
            &["BC:k", "BC:l"],
            &[],
            &["BC|ij", "DE", "BC DF EG|ij kl"], &[], 16,
            ("ABC", "BC", &[("kl:k", "BCDE"), ("kl:l", "BCFG")]),
        ),
        motif(
            "3F", 8,
            &["ABCD", "CDEF", "EFGH"],
            &["CD:i", "AB:j", "EF:k", "GH:l"],
            &["CD:j", "EF:l"],
            &[],
            &["AB", "CD", "EF", "GH", "AH BG CF DE|ik jl"], &[], 32,
            ("CD", "EF", &[("ij:j", "ABCD"), ("b", "CDEF"), ("kl:l", "EFGH")]),
        ),
        motif(
            "3G", 6,
            &["ABCD", "CDEF"],
            &["CD:k", "EF:l", "ABCD:i", "ABCD:j"],
            &["CD:l"],
            &[],
            &["AB", "CD", "EF"], &["ij"], 8,
            ("ABCD", "CD", &[("kl:l", "CDEF")]),
        ),
        motif(
            "3H", 5,
            &["ABCD", "CDE"],
            &["CE:k", "DE:l", "ABCD:i", "ABCD:j"],
            &["CD:kl"],
            &["EA", "EB"],
            &["AB", "CD|kl"], &["ij"], 4,
            ("ABCD", "CDE", &[]),
        ),
        motif(
            "3I", 4,
            &["ABCD"],
            &["CD:k", "CD:l", "ABCD:i", "ABCD:j"],
            &[],
            &[],
            &["AB", "CD"], &["ij", "kl"], 4,
            ("ABCD", "CD", &[]),
        ),
        motif(
            "3J", 5,
            &["ABCD", "ABCE", "ADE"],
            &["BC:i", "BC:j", "DE:k", "DE:l"],
            &["AD:j", "AE:i"],
            &[],
            &["BC", "DE|ij"], &["kl"], 4,
            ("ADE", "DE", &[("ij:j", "ABCD"), ("ij:i", "ABCE")]),
        ),
    ]
}

pub fn motif_by_name(name: &str) -> Result<MotifDef> {
    catalog()
        .into_iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownMotif(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Occurrence {
    pub motif: String,
    pub points: Vec<usize>,
    pub exits: [usize; 4],
}

type Key = (Vec<usize>, [usize; 4]);

fn act(g: &(Vec<usize>, Perm), k: &Key) -> Key {
    let (vp, ep) = g;
    let pts = (0..k.0.len()).map(|x| k.0[vp[x]]).collect();
    let ex = std::array::from_fn(|s| k.1[ep[s]]);
    (pts, ex)
}

impl MotifDef {
    fn all_generators(&self) -> Vec<(Vec<usize>, Perm)> {
        let id: Vec<usize> = (0..self.nv).collect();
        let mut g = self.symmetries.clone();
        g.extend(self.exit_swaps.iter().map(|e| (id.clone(), *e)));
        g
    }

    /// Closure of `generators` acting on label/slot assignments.
    fn closure(&self, generators: &[(Vec<usize>, Perm)]) -> Vec<(Vec<usize>, Perm)> {
        let id = ((0..self.nv).collect::<Vec<_>>(), lattice::IDENTITY);
        let compose = |a: &(Vec<usize>, Perm), b: &(Vec<usize>, Perm)| -> (Vec<usize>, Perm) {
            // act(a, act(b, k))
            let vp = (0..self.nv).map(|x| b.0[a.0[x]]).collect();
            let ep = std::array::from_fn(|s| b.1[a.1[s]]);
            (vp, ep)
        };
        let mut seen: BTreeSet<(Vec<usize>, Perm)> = BTreeSet::from([id.clone()]);
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for g in generators {
                let y = compose(g, &x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Order of the group generated by the listed symmetries.
    pub fn symmetry_order(&self) -> usize {
        self.closure(&self.symmetries).len()
    }

    /// All assignments equivalent to `k`, including the slot swaps that fix the line.
    pub fn orbit(&self, points: &[usize], exits: &[usize; 4]) -> BTreeSet<Key> {
        let k = (points.to_vec(), *exits);
        self.closure(&self.all_generators())
            .iter()
            .map(|g| act(g, &k))
            .collect()
    }

    pub fn canonical(&self, points: &[usize], exits: &[usize; 4]) -> Occurrence {
        let (p, e) = self.orbit(points, exits).into_iter().next().unwrap();
        Occurrence {
            motif: self.name.to_string(),
            points: p,
            exits: e,
        }
    }

    /// Whether every generator maps the constraint set onto itself.
    pub fn generators_preserve_constraints(&self) -> bool {
        let norm_set = |v: &[usize]| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s
        };
        let constraints = |vp: &[usize], ep: &Perm| {
            // relabel label x as the label mapped onto it
            let inv_v: Vec<usize> = {
                let mut inv = vec![0; self.nv];
                for (x, &y) in vp.iter().enumerate() {
                    inv[y] = x;
                }
                inv
            };
            let inv_e = lattice::inverse(ep);
            let map_l = |l: &[usize]| norm_set(&l.iter().map(|&x| inv_v[x]).collect::<Vec<_>>());
            let cells: BTreeSet<Vec<usize>> = self.cells.iter().map(|c| map_l(c)).collect();
            let exits: BTreeSet<(Vec<usize>, usize)> = self.exits.iter().map(|(l, s)| (map_l(l), inv_e[*s])).collect();
            let planes: BTreeSet<(Vec<usize>, Vec<usize>)> = self
                .planes
                .iter()
                .map(|(l, s)| (map_l(l), norm_set(&s.iter().map(|&x| inv_e[x]).collect::<Vec<_>>())))
                .collect();
            let distinct: BTreeSet<Vec<usize>> = self.distinct.iter().map(|&(a, b)| map_l(&[a, b])).collect();
            (cells, exits, planes, distinct)
        };
        let base = constraints(&(0..self.nv).collect::<Vec<_>>(), &lattice::IDENTITY);
        self.all_generators().iter().all(|(vp, ep)| constraints(vp, ep) == base)
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

/// Checks every condition of `m` for a full assignment.
pub fn check(m: &MotifDef, faces: &HashSet<Vec<usize>>, pts: &[usize], ex: &[usize; 4]) -> bool {
    let mut images = Vec::with_capacity(m.cells.len());
    for c in &m.cells {
        let im = sorted(&c.iter().map(|&x| pts[x]).collect::<Vec<_>>());
        if im.windows(2).any(|w| w[0] == w[1]) || !faces.contains(&im) {
            return false;
        }
        if images.contains(&im) {
            return false;
        }
        images.push(im);
    }
    exits_hold(m, pts, ex) && planes_hold(m, pts, ex) && m.distinct.iter().all(|&(a, b)| pts[a] != pts[b])
}

fn exits_hold(m: &MotifDef, pts: &[usize], ex: &[usize; 4]) -> bool {
    m.exits.iter().all(|(l, s)| {
        let f = ex[*s];
        let on = l.iter().filter(|&&x| lattice::on_facet(pts[x], f)).count();
        if l.len() == 2 {
            on == 2
        } else {
            on >= 2
        }
    })
}

fn planes_hold(m: &MotifDef, pts: &[usize], ex: &[usize; 4]) -> bool {
    m.planes.iter().all(|(l, ss)| {
        l.iter()
            .all(|&x| ss.iter().map(|&s| EXPONENTS[pts[x]][ex[s]] as u32).sum::<u32>() == 1)
    })
}

fn all_exit_assignments() -> Vec<[usize; 4]> {
    lattice::all_perms()
}

/// Label-by-label search over all 20 points with pruning on completed cells.
pub fn occurrences_naive(t: &Triangulation, m: &MotifDef) -> Vec<Occurrence> {
    let faces = t.face_set();
    let mut found: BTreeSet<Occurrence> = BTreeSet::new();
    // cells completed once their largest label is placed
    let due: Vec<Vec<&Vec<usize>>> = (0..m.nv)
        .map(|x| m.cells.iter().filter(|c| c.iter().max() == Some(&x)).collect())
        .collect();
    fn rec(
        m: &MotifDef,
        faces: &HashSet<Vec<usize>>,
        due: &[Vec<&Vec<usize>>],
        pts: &mut Vec<usize>,
        found: &mut BTreeSet<Occurrence>,
    ) {
        if pts.len() == m.nv {
            for ex in all_exit_assignments() {
                if check(m, faces, pts, &ex) {
                    found.insert(m.canonical(pts, &ex));
                }
            }
            return;
        }
        let x = pts.len();
        for v in 0..NPTS {
            pts.push(v);
            let ok = due[x].iter().all(|c| {
                let im = sorted(&c.iter().map(|&y| pts[y]).collect::<Vec<_>>());
                im.windows(2).all(|w| w[0] != w[1]) && faces.contains(&im)
            });
            if ok {
                rec(m, faces, due, pts, found);
            }
            pts.pop();
        }
    }
    rec(m, &faces, &due, &mut Vec::new(), &mut found);
    found.into_iter().collect()
}

/// Search that maps the motif's cells onto faces of `t` one at a time.
pub fn occurrences_of(t: &Triangulation, m: &MotifDef) -> Vec<Occurrence> {
    let faces = t.face_set();
    let by_size: Vec<Vec<Vec<usize>>> = (0..=4)
        .map(|k| faces.iter().filter(|f| f.len() == k).cloned().collect())
        .collect();
    let mut order: Vec<&Vec<usize>> = m.cells.iter().collect();
    order.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut found: BTreeSet<Occurrence> = BTreeSet::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        m: &MotifDef,
        faces: &HashSet<Vec<usize>>,
        by_size: &[Vec<Vec<usize>>],
        order: &[&Vec<usize>],
        depth: usize,
        pts: &mut Vec<Option<usize>>,
        found: &mut BTreeSet<Occurrence>,
    ) {
        if depth == order.len() {
            let full: Vec<usize> = pts.iter().map(|p| p.expect("every label lies in a cell")).collect();
            for ex in all_exit_assignments() {
                if check(m, faces, &full, &ex) {
                    found.insert(m.canonical(&full, &ex));
                }
            }
            return;
        }
        let cell = order[depth];
        let fixed: Vec<usize> = cell.iter().filter_map(|&x| pts[x]).collect();
        let free: Vec<usize> = cell.iter().copied().filter(|&x| pts[x].is_none()).collect();
        for face in &by_size[cell.len()] {
            if !fixed.iter().all(|v| face.contains(v)) || sorted(&fixed).windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let rest: Vec<usize> = face.iter().copied().filter(|v| !fixed.contains(v)).collect();
            if rest.len() != free.len() {
                continue;
            }
            permute_into(&rest, &free, pts, &mut |pts| rec(m, faces, by_size, order, depth + 1, pts, found));
        }
    }
    rec(m, &faces, &by_size, &order, 0, &mut vec![None; m.nv], &mut found);
    found.into_iter().collect()
}

fn permute_into(
    values: &[usize],
    slots: &[usize],
    pts: &mut Vec<Option<usize>>,
    f: &mut dyn FnMut(&mut Vec<Option<usize>>),
) {
    if slots.is_empty() {
        f(pts);
        return;
    }
    for (i, &v) in values.iter().enumerate() {
        pts[slots[0]] = Some(v);
        let rest: Vec<usize> = values.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &w)| w).collect();
        permute_into(&rest, &slots[1..], pts, f);
    }
    pts[slots[0]] = None;
}

/// All occurrences of all motifs, ordered by motif and then lexicographically.
pub fn occurrences(t: &Triangulation) -> Vec<Occurrence> {
    catalog()
        .par_iter()
        .map(|m| occurrences_of(t, m))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn counts(occ: &[Occurrence]) -> [usize; 10] {
    let mut c = [0; 10];
    for o in occ {
        c[NAMES.iter().position(|n| *n == o.motif).unwrap()] += 1;
    }
    c
}

impl Occurrence {
    pub fn def(&self) -> MotifDef {
        motif_by_name(&self.motif).expect("occurrence of a catalog motif")
    }

    pub fn permuted(&self, p: &Perm) -> Occurrence {
        let m = self.def();
        let pts: Vec<usize> = self.points.iter().map(|&i| lattice::apply_permutation(p, i)).collect();
        let ex = self.exits.map(|f| p[f]);
        m.canonical(&pts, &ex)
    }

    /// Image points of a list of labels, deduplicated and sorted.
    pub fn image(&self, labels: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = labels.iter().map(|&x| self.points[x]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl std::fmt::Display for Occurrence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p: Vec<String> = self.points.iter().map(|x| x.to_string()).collect();
        let e: Vec<String> = self.exits.iter().map(|x| x.to_string()).collect();
        write!(f, "{} ({} | {})", self.motif, p.join(","), e.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FeatureIndex {
    /// `(tetrahedron, direction f, edge in F_f)`: the opposite edge lies on `x_f = 1`.
    pub sided: Vec<(Tet, usize, [usize; 2])>,
    /// `(tetrahedron, edge, facet, opposite edge, facet)` with distinct facets.
    pub split: Vec<(Tet, [usize; 2], usize, [usize; 2], usize)>,
    /// `(tetrahedron, edge on x_a + x_b = 1, opposite edge on x_c + x_d = 1, {a, b})`.
    pub centered: Vec<(Tet, [usize; 2], [usize; 2], [usize; 2])>,
    /// `(triangle, f, g)`: two of its edges lie in distinct facets `F_f`, `F_g`.
    pub dangling: Vec<([usize; 3], usize, usize)>,
}

fn edge_pairs(t: &Tet) -> [([usize; 2], [usize; 2]); 6] {
    [
        ([t[0], t[1]], [t[2], t[3]]),
        ([t[2], t[3]], [t[0], t[1]]),
        ([t[0], t[2]], [t[1], t[3]]),
        ([t[1], t[3]], [t[0], t[2]]),
        ([t[0], t[3]], [t[1], t[2]]),
        ([t[1], t[2]], [t[0], t[3]]),
    ]
}

pub fn features(t: &Triangulation) -> FeatureIndex {
    let mut fi = FeatureIndex::default();
    let facets_of = |e: &[usize]| -> Vec<usize> { (0..4).filter(|&f| e.iter().all(|&p| lattice::on_facet(p, f))).collect() };
    for tet in t.facets() {
        for (e, o) in edge_pairs(tet) {
            for f in facets_of(&e) {
                if o.iter().all(|&p| EXPONENTS[p][f] == 1) {
                    fi.sided.push((*tet, f, e));
                }
            }
        }
        for (e, o) in edge_pairs(tet).into_iter().step_by(2) {
            for f in facets_of(&e) {
                for g in facets_of(&o) {
                    if f != g {
                        fi.split.push((*tet, e, f, o, g));
                    }
                }
            }
        }
        for (e, o) in edge_pairs(tet).into_iter().step_by(2) {
            for a in 0..4 {
                for b in a + 1..4 {
                    let rest: Vec<usize> = (0..4).filter(|&x| x != a && x != b).collect();
                    let on = |pts: &[usize; 2], s: &[usize]| pts.iter().all(|&p| s.iter().map(|&m| EXPONENTS[p][m]).sum::<u8>() == 1);
                    if on(&e, &[a, b]) && on(&o, &rest) {
                        fi.centered.push((*tet, e, o, [a, b]));
                    }
                }
            }
        }
    }
    let faces = t.faces();
    for tri in &faces[2] {
        if on_common_facet(tri) {
            continue;
        }
        let tri = [tri[0], tri[1], tri[2]];
        let edges = [[tri[0], tri[1]], [tri[0], tri[2]], [tri[1], tri[2]]];
        let mut pairs = BTreeSet::new();
        for x in 0..3 {
            for y in x + 1..3 {
                for f in facets_of(&edges[x]) {
                    for g in facets_of(&edges[y]) {
                        if f != g {
                            pairs.insert((f.min(g), f.max(g)));
                        }
                    }
                }
            }
        }
        for (f, g) in pairs {
            fi.dangling.push((tri, f, g));
        }
    }
    fi
}

impl FeatureIndex {
    /// Labeled choices `(C, D, E, F, l)` of a sided tetrahedron CDEF with `EF ⊆ F_l`.
    pub fn labeled_sided_choices(&self) -> usize {
        self.sided.len() * 4
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn catalog_shape() {
        let c = catalog();
        assert_eq!(c.len(), 10);
        let orders: Vec<usize> = c.iter().map(|m| m.group_order).collect();
        assert_eq!(orders, vec![2, 8, 8, 4, 16, 32, 8, 4, 4, 4]);
        for m in &c {
            assert_eq!(m.symmetry_order(), m.group_order, "{}", m.name);
            assert!(m.generators_preserve_constraints(), "{}", m.name);
            assert_eq!(m.exits.len(), 4);
            let covered: BTreeSet<usize> = m.cells.iter().flatten().copied().collect();
            assert_eq!(covered.len(), m.nv);
        }
    }

    #[test]
    fn guided_matches_naive_on_small_motifs() {
        let t = data::typical();
        for name in ["3H", "3I", "3J"] {
            let m = motif_by_name(name).unwrap();
            assert_eq!(occurrences_of(&t, &m), occurrences_naive(&t, &m), "{name}");
        }
        let h = data::honeycomb();
        let m = motif_by_name("3D").unwrap();
        assert_eq!(occurrences_of(&h, &m), occurrences_naive(&h, &m));
    }

    #[test]
    fn a_is_off_the_sided_tetrahedron() {
        for o in occurrences(&data::typical()).iter().filter(|o| o.motif == "3A") {
            assert_ne!(o.points[0], o.points[4]);
            assert_ne!(o.points[0], o.points[5]);
        }
    }

    #[test]
    fn sided_choices_match_brute_force() {
        let t = data::typical();
        let fi = features(&t);
        let faces = t.face_set();
        let mut brute = 0;
        for c in 0..NPTS {
            for d in 0..NPTS {
                for e in 0..NPTS {
                    for f in 0..NPTS {
                        let q = sorted(&[c, d, e, f]);
                        if q.windows(2).any(|w| w[0] == w[1]) || !faces.contains(&q) {
                            continue;
                        }
                        for l in 0..4 {
                            if lattice::on_facet(e, l)
                                && lattice::on_facet(f, l)
                                && EXPONENTS[c][l] == 1
                                && EXPONENTS[d][l] == 1
                            {
                                brute += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(fi.labeled_sided_choices(), brute);
    }

    #[test]
    fn honeycomb_split_tetra() {
        let fi = features(&data::honeycomb());
        assert!(fi
            .split
            .iter()
            .any(|(t, e, f, o, g)| *t == [5, 8, 14, 15] && *e == [5, 8] && *f == 1 && *o == [14, 15] && *g == 0));
    }
}
