//! Visibility cones of motif occurrences, Schläfli walls and the Schläfli fan.

use crate::error::{Error, Result};
use crate::incidence::{line_pair_on_surface, IncidenceResult};
use crate::lattice::{omega, EXPONENTS, NPTS};
use crate::lines::LinePair;
use crate::motifs::{occurrences, Anchor, Occurrence};
use crate::ratgeom::linalg::{self, dot, normalize_sign, primitive_int, qi, rank_int, Q};
use crate::ratgeom::{format_form, Cone, Form, Lp, LpOutcome, Rel};
use crate::surface::secondary_cone;
use crate::triangulation::Triangulation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Visibility {
    Global,
    Partial,
    Hardly,
}

impl std::fmt::Display for Visibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Visibility::Global => "global",
            Visibility::Partial => "partial",
            Visibility::Hardly => "hardly",
        })
    }
}

/// Which points of the line carry constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Model {
    /// Only the two vertices of the line.
    Vertices,
    /// The vertices and every point where the line crosses a dual vertex of a motif tetrahedron.
    #[default]
    FullLine,
}

/// Constraints on `(C, x1, x2, x3, t, r...)` describing the line of an occurrence.
///
/// `x` is the `ij` vertex with `x0 = 0`, the `kl` vertex is `x + t (ω_k + ω_l)`,
/// and every `r` places a crossing point along an edge or ray.
#[derive(Clone, Debug)]
pub struct LineSystem {
    pub occurrence: Occurrence,
    pub nvars: usize,
    pub ineqs: Vec<Form>,
    pub eqs: Vec<Form>,
}

const X: usize = NPTS;
const T: usize = NPTS + 3;

type Expr = [Form; 3];

fn unit(n: usize, i: usize) -> Form {
    let mut f = vec![BigInt::zero(); n];
    f[i] = BigInt::one();
    f
}

fn add_scaled(a: &Form, b: &Form, k: i64) -> Form {
    a.iter().zip(b).map(|(x, y)| x + y * k).collect()
}

fn sub(a: &Form, b: &Form) -> Form {
    add_scaled(a, b, -1)
}

/// `C_p + <exponent(p), P>` as a form in all variables.
fn monomial_form(n: usize, p: usize, pt: &Expr) -> Form {
    let mut f = unit(n, p);
    for m in 0..3 {
        let e = EXPONENTS[p][m + 1] as i64;
        if e != 0 {
            f = add_scaled(&f, &pt[m], e);
        }
    }
    f
}

/// `base + var * dir` where `dir` has `x0 = 0`.
fn along(n: usize, base: &Expr, var: usize, dir: [i64; 4]) -> Expr {
    std::array::from_fn(|m| add_scaled(&base[m], &unit(n, var), dir[m + 1]))
}

impl LineSystem {
    pub fn new(o: &Occurrence, model: Model) -> LineSystem {
        let m = o.def();
        let passes = if model == Model::FullLine { m.line.passes.clone() } else { Vec::new() };
        let n = NPTS + 4 + passes.len();
        let ex = o.exits;
        let w: [i64; 4] = std::array::from_fn(|c| omega(ex[2])[c] + omega(ex[3])[c]);
        let v_ij: Expr = std::array::from_fn(|c| unit(n, X + c));
        let v_kl = along(n, &v_ij, T, w);
        let mut sys = LineSystem {
            occurrence: o.clone(),
            nvars: n,
            ineqs: vec![unit(n, T)],
            eqs: Vec::new(),
        };
        sys.place(&o.image(&m.line.ij_cell), &v_ij);
        sys.place(&o.image(&m.line.kl_cell), &v_kl);
        for (p, (anchor, cell)) in passes.iter().enumerate() {
            let r = NPTS + 4 + p;
            sys.ineqs.push(unit(n, r));
            let pt = match *anchor {
                Anchor::Ij(s) => along(n, &v_ij, r, omega(ex[s])),
                Anchor::Kl(s) => along(n, &v_kl, r, omega(ex[s])),
                Anchor::Bounded => {
                    sys.ineqs.push(sub(&unit(n, T), &unit(n, r)));
                    along(n, &v_ij, r, w)
                }
            };
            sys.place(&o.image(cell), &pt);
        }
        sys
    }

    /// The monomials of `cell` tie at `pt` and no other monomial is smaller there.
    fn place(&mut self, cell: &[usize], pt: &Expr) {
        let n = self.nvars;
        let base = monomial_form(n, cell[0], pt);
        for &q in &cell[1..] {
            self.eqs.push(sub(&monomial_form(n, q, pt), &base));
        }
        for q in (0..NPTS).filter(|q| !cell.contains(q)) {
            self.ineqs.push(sub(&monomial_form(n, q, pt), &base));
        }
    }

    /// The set of coefficient vectors for which the line exists.
    pub fn projection(&self) -> Cone {
        let aux: Vec<usize> = (NPTS..self.nvars).collect();
        Cone::from_forms(self.nvars, self.ineqs.clone(), self.eqs.clone()).fm_project(&aux)
    }

    /// The line at `c`, if the constraints are satisfiable there.
    pub fn line_at(&self, c: &[Q]) -> Option<LinePair> {
        let k = self.nvars - NPTS;
        let split = |f: &Form| -> (Vec<Q>, Q) {
            let coeffs = f[NPTS..].iter().map(|x| Q::from_integer(x.clone())).collect();
            (coeffs, -dot(&f[..NPTS], c))
        };
        let mut lp = Lp::new(k);
        for e in &self.eqs {
            let (a, b) = split(e);
            lp.push(a, Rel::Eq, b);
        }
        for f in &self.ineqs {
            let (a, b) = split(f);
            lp.push(a, Rel::Ge, b);
        }
        lp.objective[T - NPTS] = Q::one();
        let x = match lp.solve() {
            LpOutcome::Optimal { x, .. } => x,
            LpOutcome::Infeasible => return None,
            LpOutcome::Unbounded => {
                let mut row = vec![Q::zero(); k];
                row[T - NPTS] = Q::one();
                lp.push(row, Rel::Le, Q::one());
                match lp.solve() {
                    LpOutcome::Optimal { x, .. } => x,
                    _ => return None,
                }
            }
        };
        let ex = self.occurrence.exits;
        let q_ij = [Q::zero(), x[0].clone(), x[1].clone(), x[2].clone()];
        let t = &x[3];
        let q_kl = std::array::from_fn(|m| &q_ij[m] + t * qi(omega(ex[2])[m] + omega(ex[3])[m]));
        Some(LinePair {
            ij: [ex[0], ex[1]],
            kl: [ex[2], ex[3]],
            q_ij,
            q_kl,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VisibilityCone {
    pub occurrence: Occurrence,
    pub cone: Cone,
    pub classification: Visibility,
    /// Irredundant inequalities beyond the secondary cone, oriented towards the visible side.
    pub walls: Vec<Form>,
    /// Nonempty exactly for hardly visible occurrences.
    pub equations: Vec<Form>,
}

impl VisibilityCone {
    pub fn contains(&self, c: &[Q]) -> bool {
        self.cone.contains(c)
    }

    pub fn wall_strings(&self) -> Vec<String> {
        self.walls.iter().map(|w| format_form(w)).collect()
    }

    pub fn equation_strings(&self) -> Vec<String> {
        self.equations.iter().map(|w| format_form(w)).collect()
    }
}

/// The irredundant facets of the secondary cone.
pub fn secondary_facets(t: &Triangulation) -> Vec<Form> {
    secondary_cone(t).remove_redundant().ineqs
}

pub fn visibility_cone(t: &Triangulation, o: &Occurrence) -> Result<VisibilityCone> {
    visibility_cone_with(t, o, &secondary_facets(t), Model::default())
}

pub fn visibility_cone_with(t: &Triangulation, o: &Occurrence, sec: &[Form], model: Model) -> Result<VisibilityCone> {
    let m = o.def();
    let faces = t.face_set();
    let canon = m.canonical(&o.points, &o.exits);
    if o.points.len() != m.nv || !crate::motifs::check(&m, &faces, &o.points, &o.exits) {
        return Err(Error::BadOccurrence(o.to_string()));
    }
    let proj = LineSystem::new(o, model).projection();
    let mut ineqs = sec.to_vec();
    ineqs.extend(proj.ineqs.iter().cloned());
    let k = Cone::from_forms(NPTS, ineqs, proj.eqs.clone());
    let info = k.analyze();
    let is_sec = |f: &Form| sec.iter().any(|s| primitive_int(s) == primitive_int(f));
    if info.dim < NPTS {
        let equations = k.equations_basis();
        let mut rest: Vec<Form> = Vec::new();
        for (i, f) in k.ineqs.iter().enumerate() {
            if !info.implicit.contains(&i) {
                rest.push(f.clone());
            }
        }
        let reduced = Cone::from_forms(NPTS, rest, equations.clone()).remove_redundant();
        // inequalities are reported modulo the equations; those that change are new
        let mut walls: Vec<Form> = Vec::new();
        for f in &reduced.ineqs {
            let r = reduce_modulo(f, &equations);
            if !is_sec(&r) && !walls.contains(&r) {
                walls.push(r);
            }
        }
        return Ok(VisibilityCone {
            occurrence: canon,
            cone: reduced,
            classification: Visibility::Hardly,
            walls,
            equations,
        });
    }
    let reduced = k.remove_redundant();
    let walls: Vec<Form> = reduced
        .ineqs
        .iter()
        .filter(|f| !is_sec(f))
        .cloned()
        .collect();
    let classification = if walls.is_empty() { Visibility::Global } else { Visibility::Partial };
    Ok(VisibilityCone {
        occurrence: canon,
        cone: reduced,
        classification,
        walls,
        equations: Vec::new(),
    })
}

/// Visibility cones of all occurrences, in the order of [`occurrences`].
pub fn visibility_cones(t: &Triangulation) -> Vec<VisibilityCone> {
    visibility_cones_with(t, Model::default())
}

pub fn visibility_cones_with(t: &Triangulation, model: Model) -> Vec<VisibilityCone> {
    let sec = secondary_facets(t);
    occurrences(t)
        .par_iter()
        .map(|o| visibility_cone_with(t, o, &sec, model).expect("enumerated occurrences are consistent"))
        .collect()
}

pub struct Classification {
    pub global: Vec<VisibilityCone>,
    pub partial: Vec<VisibilityCone>,
    pub hardly: Vec<VisibilityCone>,
}

pub fn classify_all(t: &Triangulation) -> Classification {
    let mut c = Classification {
        global: Vec::new(),
        partial: Vec::new(),
        hardly: Vec::new(),
    };
    for v in visibility_cones(t) {
        match v.classification {
            Visibility::Global => c.global.push(v),
            Visibility::Partial => c.partial.push(v),
            Visibility::Hardly => c.hardly.push(v),
        }
    }
    c
}

/// Walls of the partially visible occurrences, primitive with first nonzero coefficient positive,
/// in order of first appearance.
pub fn wall_arrangement_of(cones: &[VisibilityCone]) -> Vec<Form> {
    let mut out: Vec<Form> = Vec::new();
    for v in cones.iter().filter(|v| v.classification == Visibility::Partial) {
        for w in &v.walls {
            let h = normalize_sign(&primitive_int(w));
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

pub fn wall_arrangement(t: &Triangulation) -> Vec<Form> {
    wall_arrangement_of(&visibility_cones(t))
}

#[derive(Clone, Debug, Serialize)]
pub struct SchlaefliCell {
    /// `true` for the positive side of each wall.
    pub signs: Vec<bool>,
    pub point: Vec<BigInt>,
    /// Indices into the occurrence list.
    pub visible: Vec<usize>,
}

/// Clears denominators of a rational vector.
pub fn integer_point(x: &[Q]) -> Vec<BigInt> {
    let l = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    x.iter().map(|q| (q * Q::from_integer(l.clone())).to_integer()).collect()
}

pub fn to_q_point(x: &[BigInt]) -> Vec<Q> {
    x.iter().map(|v| Q::from_integer(v.clone())).collect()
}

pub fn visible_in(cones: &[VisibilityCone], c: &[Q]) -> Vec<usize> {
    (0..cones.len()).filter(|&i| cones[i].contains(c)).collect()
}

/// Full-dimensional cells of the secondary cone cut by the wall arrangement.
pub fn schlaefli_fan_of(t: &Triangulation, cones: &[VisibilityCone]) -> Vec<SchlaefliCell> {
    let sec = secondary_facets(t);
    let walls = wall_arrangement_of(cones);
    let nw = walls.len();
    (0u64..1 << nw)
        .into_par_iter()
        .filter_map(|mask| {
            let signs: Vec<bool> = (0..nw).map(|i| mask >> i & 1 == 0).collect();
            let mut ineqs = sec.clone();
            for (w, &s) in walls.iter().zip(&signs) {
                ineqs.push(if s { w.clone() } else { w.iter().map(|x| -x).collect() });
            }
            let p = Cone::from_forms(NPTS, ineqs, Vec::new()).interior_point()?;
            let point = integer_point(&p);
            let visible = visible_in(cones, &to_q_point(&point));
            Some(SchlaefliCell { signs, point, visible })
        })
        .collect()
}

pub fn schlaefli_fan(t: &Triangulation) -> Vec<SchlaefliCell> {
    schlaefli_fan_of(t, &visibility_cones(t))
}

pub fn visible_motifs(t: &Triangulation, c: &[Q]) -> Result<Vec<usize>> {
    if !secondary_cone(t).contains_strictly(c) {
        return Err(Error::NotInterior);
    }
    Ok(visible_in(&visibility_cones(t), c))
}

#[derive(Clone, Debug, Serialize)]
pub struct Genericity {
    pub generic: bool,
    /// Indices into the wall arrangement of walls vanishing at the point.
    pub walls: Vec<usize>,
    /// Hardly visible occurrences whose cone contains the point.
    pub hardly: Vec<usize>,
}

pub fn is_generic_of(t: &Triangulation, cones: &[VisibilityCone], c: &[Q]) -> Result<Genericity> {
    if !secondary_cone(t).contains_strictly(c) {
        return Err(Error::NotInterior);
    }
    let walls: Vec<usize> = wall_arrangement_of(cones)
        .iter()
        .enumerate()
        .filter(|(_, w)| dot(w, c).is_zero())
        .map(|(i, _)| i)
        .collect();
    let hardly: Vec<usize> = (0..cones.len())
        .filter(|&i| cones[i].classification == Visibility::Hardly && cones[i].contains(c))
        .collect();
    Ok(Genericity {
        generic: walls.is_empty() && hardly.is_empty(),
        walls,
        hardly,
    })
}

pub fn is_generic(t: &Triangulation, c: &[Q]) -> Result<Genericity> {
    is_generic_of(t, &visibility_cones(t), c)
}

/// Reduces `f` modulo the row space of `eqs`, then makes it primitive.
pub fn reduce_modulo(f: &Form, eqs: &[Form]) -> Form {
    let mut basis: Vec<Vec<Q>> = eqs.iter().map(|e| linalg::to_q(e)).collect();
    let pivots = linalg::rref(&mut basis);
    let mut v = linalg::to_q(f);
    for (row, &p) in basis.iter().zip(&pivots) {
        if !v[p].is_zero() {
            let k = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &k * r;
            }
        }
    }
    linalg::primitive(&v)
}

/// Whether `a` and `b` agree up to a positive multiple modulo the span of `eqs`.
pub fn same_modulo(a: &Form, b: &Form, eqs: &[Form]) -> bool {
    let (x, y) = (reduce_modulo(a, eqs), reduce_modulo(b, eqs));
    x == y && x.iter().any(|v| !v.is_zero())
}

/// Whether `a` and `b` agree up to a nonzero multiple.
pub fn same_up_to_sign(a: &Form, b: &Form) -> bool {
    rank_int(&[a.clone(), b.clone()]) == 1 && a.iter().any(|x| !x.is_zero())
}

/// The line pinned down by the cells at its two vertices alone, ignoring every inequality.
/// `None` when those equations do not determine a line with a nonnegative edge length.
pub fn candidate_line(o: &Occurrence, c: &[Q]) -> Option<LinePair> {
    let sys = LineSystem::new(o, Model::Vertices);
    let a: Vec<Vec<Q>> = sys.eqs.iter().map(|e| linalg::to_q(&e[NPTS..])).collect();
    let b: Vec<Q> = sys.eqs.iter().map(|e| -dot(&e[..NPTS], c)).collect();
    let linalg::Solution::Unique(x) = linalg::solve_linear(&a, &b) else {
        return None;
    };
    if x[3].is_negative() {
        return None;
    }
    let ex = o.exits;
    let q_ij = [Q::zero(), x[0].clone(), x[1].clone(), x[2].clone()];
    let q_kl = std::array::from_fn(|m| &q_ij[m] + &x[3] * qi(omega(ex[2])[m] + omega(ex[3])[m]));
    Some(LinePair {
        ij: [ex[0], ex[1]],
        kl: [ex[2], ex[3]],
        q_ij,
        q_kl,
    })
}

/// Whether the line of `o` at `c`, judged by the incidence test alone, lies on the surface.
/// `None` when the vertex equations leave a family of candidates.
pub fn oracle_visible(o: &Occurrence, c: &[Q]) -> Option<bool> {
    let sys = LineSystem::new(o, Model::Vertices);
    let a: Vec<Vec<Q>> = sys.eqs.iter().map(|e| linalg::to_q(&e[NPTS..])).collect();
    if linalg::rank(&a) < 4 {
        return None;
    }
    Some(match candidate_line(o, c) {
        Some(line) => matches!(line_pair_on_surface(&line, c), Ok(IncidenceResult::Contained { .. })),
        None => false,
    })
}

/// The reconstructed line lies on the surface.
pub fn line_contained(o: &Occurrence, c: &[Q], model: Model) -> Result<bool> {
    let sys = LineSystem::new(o, model);
    let Some(line) = sys.line_at(c) else {
        return Ok(false);
    };
    Ok(matches!(line_pair_on_surface(&line, c)?, IncidenceResult::Contained { .. }))
}

/// Interior sample points of a full-dimensional cone: the LP interior point and its
/// integer perturbations along the coordinate axes that stay strictly inside.
pub fn interior_samples(k: &Cone, count: usize) -> Vec<Vec<BigInt>> {
    let Some(p) = k.interior_point() else {
        return Vec::new();
    };
    let base: Vec<BigInt> = integer_point(&p).iter().map(|x| x * 8).collect();
    let mut out = vec![base.clone()];
    let mut step = 0usize;
    while out.len() < count && step < 40 * count {
        let i = step % NPTS;
        let mag = 1 + (step / NPTS) as i64 % 3;
        let sign = if (step / (3 * NPTS)) % 2 == 0 { 1 } else { -1 };
        let mut c = base.clone();
        c[i] += sign * mag;
        if k.contains_strictly(&to_q_point(&c)) && !out.contains(&c) {
            out.push(c);
        }
        step += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::ratgeom::parse_form;

    fn occ(motif: &str, pts: &[usize], ex: [usize; 4]) -> Occurrence {
        crate::motifs::motif_by_name(motif).unwrap().canonical(pts, &ex)
    }

    #[test]
    fn single_wall_of_a_partial_motif() {
        let t = data::typical();
        let v = visibility_cone(&t, &occ("3A", &[18, 19, 15, 11, 2, 9], [3, 2, 0, 1])).unwrap();
        assert_eq!(v.classification, Visibility::Partial);
        assert_eq!(v.walls.len(), 1);
        let expect = parse_form("-c2+c9+c11-c15+c17-c18", NPTS).unwrap();
        assert!(same_up_to_sign(&v.walls[0], &expect), "{:?}", v.wall_strings());
    }

    #[test]
    fn global_and_hardly_examples() {
        let t = data::typical();
        let g = visibility_cone(&t, &occ("3B", &[9, 15, 7, 1, 18, 19], [0, 1, 2, 3])).unwrap();
        assert_eq!(g.classification, Visibility::Global);
        let h = visibility_cone(&t, &occ("3H", &[9, 11, 1, 15, 7], [0, 2, 1, 3])).unwrap();
        assert_eq!(h.classification, Visibility::Hardly);
        let e = parse_form("c1-c7-c11+c15", NPTS).unwrap();
        assert_eq!(h.equations, vec![e.clone()]);
        let i = parse_form("c2-3c5+c7+c9+c11-c15", NPTS).unwrap();
        assert!(h.walls.iter().any(|w| same_modulo(w, &i, &h.equations)), "{:?}", h.wall_strings());
    }

    #[test]
    fn rejects_foreign_occurrence() {
        let t = data::typical();
        let bogus = Occurrence {
            motif: "3I".into(),
            points: vec![0, 1, 2, 3],
            exits: [0, 1, 2, 3],
        };
        assert!(visibility_cone(&t, &bogus).is_err());
    }
}
