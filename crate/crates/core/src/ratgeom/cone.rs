//! Polyhedral cones `{x : a·x ≥ 0 for a in ineqs, e·x = 0 for e in eqs}` with integer forms.

use super::linalg::{self, dot, primitive, primitive_int, rank_int, to_q, Q};
use super::lp::{Lp, LpOutcome, Rel};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Form = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    pub dim: usize,
    pub ineqs: Vec<Form>,
    pub eqs: Vec<Form>,
}

#[derive(Clone, Debug)]
pub struct ConeInfo {
    /// Indices of inequalities that vanish on the whole cone.
    pub implicit: Vec<usize>,
    pub dim: usize,
    pub lineality_dim: usize,
    /// A point of the relative interior.
    pub relint: Vec<Q>,
}

impl Cone {
    pub fn new(dim: usize) -> Self {
        Cone {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn from_forms(dim: usize, ineqs: Vec<Form>, eqs: Vec<Form>) -> Self {
        Cone { dim, ineqs, eqs }
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.eqs.iter().all(|e| dot(e, x).is_zero())
            && self.ineqs.iter().all(|a| !dot(a, x).is_negative())
    }

    pub fn contains_strictly(&self, x: &[Q]) -> bool {
        self.eqs.iter().all(|e| dot(e, x).is_zero())
            && self.ineqs.iter().all(|a| dot(a, x).is_positive())
    }

    fn base_lp(&self, extra: usize) -> Lp {
        let mut lp = Lp::new(self.dim + extra);
        for e in &self.eqs {
            let mut row = to_q(e);
            row.resize(self.dim + extra, Q::zero());
            lp.push(row, Rel::Eq, Q::zero());
        }
        lp
    }

    /// Whether inequality `i` is implied by the active others and the equations, i.e. whether
    /// it lies in the cone they generate together with the span of the equations.
    pub fn is_redundant(&self, i: usize, active: &[bool]) -> bool {
        let gens: Vec<&Form> = self
            .ineqs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && active[j])
            .map(|(_, a)| a)
            .collect();
        let k = gens.len() + self.eqs.len();
        let mut lp = Lp::new(k);
        for j in 0..gens.len() {
            lp.nonneg[j] = true;
        }
        for c in 0..self.dim {
            let row: Vec<Q> = gens
                .iter()
                .chain(self.eqs.iter().collect::<Vec<_>>().iter())
                .map(|g| Q::from_integer(g[c].clone()))
                .collect();
            lp.push(row, Rel::Eq, Q::from_integer(self.ineqs[i][c].clone()));
        }
        lp.solve().is_feasible()
    }

    /// Minimal inequality description. Zero forms and repeated rays are dropped first,
    /// keeping the earliest copy; survivors keep their relative order.
    pub fn remove_redundant(&self) -> Cone {
        let mut k = self.clone().dedup();
        let mut active = vec![true; k.ineqs.len()];
        for i in 0..k.ineqs.len() {
            if k.is_redundant(i, &active) {
                active[i] = false;
            }
        }
        let mut it = active.iter();
        k.ineqs.retain(|_| *it.next().unwrap());
        k
    }

    pub fn analyze(&self) -> ConeInfo {
        self.analyze_common_slack().unwrap_or_else(|| self.analyze_per_form())
    }

    /// One shared slack; succeeds when every inequality can be strict at once.
    fn analyze_common_slack(&self) -> Option<ConeInfo> {
        let n = self.dim;
        let mut lp = self.base_lp(1);
        for a in &self.ineqs {
            let mut row = to_q(a);
            row.push(-Q::one());
            lp.push(row, Rel::Ge, Q::zero());
        }
        let mut ub = vec![Q::zero(); n + 1];
        ub[n] = Q::one();
        lp.push(ub, Rel::Le, Q::one());
        lp.objective[n] = Q::one();
        let LpOutcome::Optimal { x, value } = lp.solve() else {
            unreachable!("the slack LP is feasible and bounded")
        };
        if !value.is_positive() {
            return None;
        }
        let dim = n - rank_int(&self.eqs);
        let mut all = self.eqs.clone();
        all.extend(self.ineqs.iter().cloned());
        Some(ConeInfo {
            implicit: Vec::new(),
            dim,
            lineality_dim: n - rank_int(&all),
            relint: x[..n].to_vec(),
        })
    }

    fn analyze_per_form(&self) -> ConeInfo {
        let n = self.dim;
        let m = self.ineqs.len();
        let mut lp = self.base_lp(m);
        for i in 0..m {
            lp.nonneg[n + i] = true;
            let mut row = to_q(&self.ineqs[i]);
            row.resize(n + m, Q::zero());
            row[n + i] = -Q::one();
            lp.push(row, Rel::Ge, Q::zero());
            let mut ub = vec![Q::zero(); n + m];
            ub[n + i] = Q::one();
            lp.push(ub, Rel::Le, Q::one());
            lp.objective[n + i] = Q::one();
        }
        let LpOutcome::Optimal { x, .. } = lp.solve() else {
            unreachable!("the slack LP is feasible and bounded")
        };
        let implicit: Vec<usize> = (0..m).filter(|&i| x[n + i].is_zero()).collect();
        let mut eq_rows = self.eqs.clone();
        eq_rows.extend(implicit.iter().map(|&i| self.ineqs[i].clone()));
        let dim = n - rank_int(&eq_rows);
        let mut all = self.eqs.clone();
        all.extend(self.ineqs.iter().cloned());
        let lineality_dim = n - rank_int(&all);
        ConeInfo {
            implicit,
            dim,
            lineality_dim,
            relint: x[..n].to_vec(),
        }
    }

    pub fn cone_dim(&self) -> usize {
        self.analyze().dim
    }

    pub fn lineality_dim(&self) -> usize {
        self.analyze().lineality_dim
    }

    /// A point where every inequality is strictly positive, if one exists.
    pub fn interior_point(&self) -> Option<Vec<Q>> {
        let info = self.analyze();
        info.implicit.is_empty().then_some(info.relint)
    }

    /// Primitive echelon basis of the linear span of explicit and implicit equations.
    pub fn equations_basis(&self) -> Vec<Form> {
        let info = self.analyze();
        let mut rows = self.eqs.clone();
        rows.extend(info.implicit.iter().map(|&i| self.ineqs[i].clone()));
        linalg::row_basis(&rows)
    }

    /// Projection onto the coordinates not in `drop`. Coordinates fixed by an equation are
    /// substituted first; the rest go by Fourier–Motzkin, cheapest pairing first, with
    /// redundancy removal after each step.
    pub fn fm_project(&self, drop: &[usize]) -> Cone {
        let mut k = self.clone();
        let mut left: Vec<usize> = drop.to_vec();
        while !left.is_empty() {
            let by_eq = left.iter().position(|&v| k.eqs.iter().any(|e| !e[v].is_zero()));
            let pos = by_eq.unwrap_or_else(|| {
                let cost = |v: usize| {
                    let p = k.ineqs.iter().filter(|a| a[v].is_positive()).count();
                    let n = k.ineqs.iter().filter(|a| a[v].is_negative()).count();
                    p * n
                };
                (0..left.len()).min_by_key(|&i| cost(left[i])).unwrap()
            });
            let v = left.swap_remove(pos);
            k = k.eliminate(v);
            k = if by_eq.is_some() { k.dedup() } else { k.remove_redundant() };
        }
        let keep: Vec<usize> = (0..self.dim).filter(|c| !drop.contains(c)).collect();
        let shrink = |f: &Form| keep.iter().map(|&c| f[c].clone()).collect::<Form>();
        Cone {
            dim: keep.len(),
            ineqs: k.ineqs.iter().map(shrink).collect(),
            eqs: k.eqs.iter().map(shrink).collect(),
        }
    }

    /// Drops zero forms and repeated rays, keeping the first copy.
    fn dedup(mut self) -> Cone {
        let mut seen = std::collections::HashSet::new();
        self.ineqs.retain(|a| a.iter().any(|x| !x.is_zero()) && seen.insert(primitive_int(a)));
        self
    }

    /// Eliminates coordinate `v`, leaving a cone in the same ambient space with zero column `v`.
    fn eliminate(&self, v: usize) -> Cone {
        let combine = |a: &Form, ca: &BigInt, b: &Form, cb: &BigInt| -> Form {
            let f: Form = a.iter().zip(b).map(|(x, y)| x * ca + y * cb).collect();
            primitive_int(&f)
        };
        if let Some(p) = self.eqs.iter().position(|e| !e[v].is_zero()) {
            let piv = self.eqs[p].clone();
            let pv = piv[v].clone();
            let sub = |f: &Form| -> Form {
                if f[v].is_zero() {
                    f.clone()
                } else {
                    // f·pv − f_v·piv, with the sign of pv folded in to keep orientation
                    let (ca, cb) = if pv.is_positive() {
                        (pv.clone(), -f[v].clone())
                    } else {
                        (-pv.clone(), f[v].clone())
                    };
                    combine(f, &ca, &piv, &cb)
                }
            };
            let eqs: Vec<Form> = self
                .eqs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != p)
                .map(|(_, e)| sub(e))
                .filter(|e| e.iter().any(|x| !x.is_zero()))
                .collect();
            let ineqs = self.ineqs.iter().map(sub).collect();
            return Cone::from_forms(self.dim, ineqs, eqs);
        }
        let mut out = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for a in &self.ineqs {
            if a[v].is_zero() {
                out.push(a.clone());
            } else if a[v].is_positive() {
                pos.push(a);
            } else {
                neg.push(a);
            }
        }
        for p in &pos {
            for n in &neg {
                out.push(combine(p, &-n[v].clone(), n, &p[v]));
            }
        }
        Cone::from_forms(self.dim, out, self.eqs.clone())
    }
}

/// Orients and scales a rational form to a primitive integer form.
pub fn form_from_q(v: &[Q]) -> Form {
    primitive(v)
}

/// Renders a form over `c0..c{n-1}` as in `-c2+c9+c11`.
pub fn format_form(f: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if !mag.is_one() {
            s.push_str(&mag.to_string());
        }
        s.push_str(&format!("c{i}"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Parses the notation produced by [`format_form`] into a vector of length `n`.
pub fn parse_form(s: &str, n: usize) -> Option<Form> {
    let mut f = vec![BigInt::zero(); n];
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.replace('−', "-");
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (sign, r) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let cpos = r.find('c')?;
        let coef: BigInt = if cpos == 0 {
            BigInt::one()
        } else {
            r[..cpos].parse().ok()?
        };
        let r = &r[cpos + 1..];
        let end = r.find(['+', '-']).unwrap_or(r.len());
        let idx: usize = r[..end].parse().ok()?;
        if idx >= n {
            return None;
        }
        f[idx] += coef * sign;
        rest = &r[end..];
    }
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::linalg::{ints, qi};

    fn cone(dim: usize, ineqs: &[&[i64]], eqs: &[&[i64]]) -> Cone {
        Cone::from_forms(
            dim,
            ineqs.iter().map(|a| ints(a)).collect(),
            eqs.iter().map(|a| ints(a)).collect(),
        )
    }

    #[test]
    fn dims() {
        let k = cone(1, &[&[1], &[-1]], &[]);
        assert_eq!(k.cone_dim(), 0);
        assert_eq!(k.lineality_dim(), 0);
        assert!(k.interior_point().is_none());
        let h = cone(2, &[], &[&[1, 0]]);
        assert_eq!(h.cone_dim(), 1);
        let full = Cone::new(20);
        assert_eq!(full.cone_dim(), 20);
        assert_eq!(full.lineality_dim(), 20);
    }

    #[test]
    fn redundancy() {
        let k = cone(2, &[&[1, 0], &[2, 0], &[1, 1], &[0, 1]], &[]);
        assert_eq!(k.remove_redundant().ineqs, vec![ints(&[1, 0]), ints(&[0, 1])]);
        let d = cone(2, &[&[1, 2], &[1, 2], &[3, -1]], &[]);
        assert_eq!(d.remove_redundant().ineqs, vec![ints(&[1, 2]), ints(&[3, -1])]);
    }

    #[test]
    fn projection() {
        // {x - t >= 0, t >= 0} over t
        let k = cone(2, &[&[1, -1], &[0, 1]], &[]);
        let p = k.fm_project(&[1]);
        assert_eq!(p.dim, 1);
        assert_eq!(p.ineqs, vec![ints(&[1])]);
        assert_eq!(k.fm_project(&[]), k.remove_redundant());
        // through an equation: {x = t, t >= 0, y - t >= 0}
        let k = cone(3, &[&[0, 0, 1], &[0, 1, -1]], &[&[1, 0, -1]]);
        let p = k.fm_project(&[2]);
        assert!(p.contains(&[qi(1), qi(2)]));
        assert!(!p.contains(&[qi(2), qi(1)]));
        assert!(!p.contains(&[qi(-1), qi(2)]));
    }

    #[test]
    fn interior_point_is_strict() {
        let k = cone(3, &[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]], &[]);
        let p = k.interior_point().unwrap();
        assert!(k.contains_strictly(&p));
    }

    #[test]
    fn form_text_roundtrip() {
        let f = ints(&[0, 1, -2, 0, 3]);
        assert_eq!(format_form(&f), "c1-2c2+3c4");
        assert_eq!(parse_form("c1-2c2+3c4", 5).unwrap(), f);
        assert_eq!(parse_form("−c2+c9", 10).unwrap()[2], BigInt::from(-1));
    }
}
