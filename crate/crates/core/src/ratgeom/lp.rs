//! Dense two-phase simplex over exact rationals.

use super::linalg::Q;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

impl Rel {
    fn flip(self) -> Rel {
        match self {
            Rel::Le => Rel::Ge,
            Rel::Ge => Rel::Le,
            Rel::Eq => Rel::Eq,
        }
    }
}

/// `maximize objective·x` subject to `rows`; variables flagged in `nonneg` are `≥ 0`, others free.
#[derive(Clone, Debug)]
pub struct Lp {
    pub n: usize,
    pub nonneg: Vec<bool>,
    pub rows: Vec<(Vec<Q>, Rel, Q)>,
    pub objective: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Lp {
            n,
            nonneg: vec![false; n],
            rows: Vec::new(),
            objective: vec![Q::zero(); n],
        }
    }

    pub fn push(&mut self, a: Vec<Q>, rel: Rel, b: Q) {
        debug_assert_eq!(a.len(), self.n);
        self.rows.push((a, rel, b));
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(self)
    }
}

struct Tableau {
    t: Vec<Vec<Q>>,
    basis: Vec<usize>,
    ncols: usize,
    first_art: usize,
    // structural column layout: (positive column, optional negative column) per variable
    cols: Vec<(usize, Option<usize>)>,
}

impl Tableau {
    fn build(lp: &Lp) -> Tableau {
        let mut cols = Vec::with_capacity(lp.n);
        let mut nstruct = 0;
        for j in 0..lp.n {
            if lp.nonneg[j] {
                cols.push((nstruct, None));
                nstruct += 1;
            } else {
                cols.push((nstruct, Some(nstruct + 1)));
                nstruct += 2;
            }
        }
        let mut rows: Vec<(Vec<Q>, Rel, Q)> = Vec::with_capacity(lp.rows.len());
        for (a, rel, b) in &lp.rows {
            let mut r = vec![Q::zero(); nstruct];
            for (j, v) in a.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let (p, n) = cols[j];
                r[p] = v.clone();
                if let Some(n) = n {
                    r[n] = -v.clone();
                }
            }
            // a zero right-hand side lets `≥` rows start feasible with their slack basic
            if b.is_negative() || (b.is_zero() && *rel == Rel::Ge) {
                for x in r.iter_mut() {
                    *x = -x.clone();
                }
                rows.push((r, rel.flip(), -b.clone()));
            } else {
                rows.push((r, *rel, b.clone()));
            }
        }
        let nslack = rows.iter().filter(|r| r.1 != Rel::Eq).count();
        let nart = rows.iter().filter(|r| r.1 != Rel::Le).count();
        let first_art = nstruct + nslack;
        let ncols = first_art + nart;
        let m = rows.len();
        let mut t = vec![vec![Q::zero(); ncols + 1]; m];
        let mut basis = vec![0; m];
        let (mut s, mut a) = (nstruct, first_art);
        for (i, (r, rel, b)) in rows.into_iter().enumerate() {
            for (j, v) in r.into_iter().enumerate() {
                t[i][j] = v;
            }
            t[i][ncols] = b;
            match rel {
                Rel::Le => {
                    t[i][s] = Q::one();
                    basis[i] = s;
                    s += 1;
                }
                Rel::Ge => {
                    t[i][s] = -Q::one();
                    s += 1;
                    t[i][a] = Q::one();
                    basis[i] = a;
                    a += 1;
                }
                Rel::Eq => {
                    t[i][a] = Q::one();
                    basis[i] = a;
                    a += 1;
                }
            }
        }
        Tableau {
            t,
            basis,
            ncols,
            first_art,
            cols,
        }
    }

    fn pivot(&mut self, w: &mut [Q], r: usize, e: usize) {
        let inv = self.t[r][e].recip();
        for x in self.t[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let nz: Vec<usize> = (0..=self.ncols)
            .filter(|&k| !self.t[r][k].is_zero())
            .collect();
        let prow = std::mem::take(&mut self.t[r]);
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for &k in &nz {
                row[k] -= &f * &prow[k];
            }
        }
        if !w[e].is_zero() {
            let f = w[e].clone();
            for &k in &nz {
                w[k] -= &f * &prow[k];
            }
        }
        self.t[r] = prow;
        self.basis[r] = e;
    }

    /// Reduced-cost row for cost vector `c` over all columns; last entry is minus the objective value.
    fn cost_row(&self, c: &[Q]) -> Vec<Q> {
        let mut w: Vec<Q> = c.to_vec();
        w.push(Q::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if c[b].is_zero() {
                continue;
            }
            let cb = c[b].clone();
            for (k, x) in self.t[i].iter().enumerate() {
                if !x.is_zero() {
                    w[k] -= &cb * x;
                }
            }
        }
        w
    }

    /// Dantzig pricing, switching to Bland's rule after a run of degenerate pivots.
    /// Returns false when unbounded.
    fn optimize(&mut self, w: &mut [Q], allowed: usize) -> bool {
        let mut degenerate = 0usize;
        let mut bland = false;
        loop {
            let entering = if bland {
                (0..allowed).find(|&j| w[j].is_positive())
            } else {
                (0..allowed)
                    .filter(|&j| w[j].is_positive())
                    .max_by(|&a, &b| w[a].cmp(&w[b]).then(b.cmp(&a)))
            };
            let Some(e) = entering else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.t[i][self.ncols] / a;
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                None => return false,
                Some((r, ratio)) => {
                    if ratio.is_zero() {
                        degenerate += 1;
                        bland |= degenerate > 50;
                    } else {
                        degenerate = 0;
                    }
                    self.pivot(w, r, e)
                }
            }
        }
    }

    fn run(mut self, lp: &Lp) -> LpOutcome {
        if self.ncols > self.first_art {
            let mut c = vec![Q::zero(); self.ncols];
            for x in c.iter_mut().skip(self.first_art) {
                *x = -Q::one();
            }
            let mut w = self.cost_row(&c);
            self.optimize(&mut w, self.ncols);
            if !w[self.ncols].is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive artificial variables out of the basis
            let mut i = 0;
            while i < self.t.len() {
                if self.basis[i] >= self.first_art {
                    match (0..self.first_art).find(|&j| !self.t[i][j].is_zero()) {
                        Some(j) => {
                            let mut dummy = vec![Q::zero(); self.ncols + 1];
                            self.pivot(&mut dummy, i, j);
                            i += 1;
                        }
                        None => {
                            self.t.swap_remove(i);
                            self.basis.swap_remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let mut c = vec![Q::zero(); self.ncols];
        for (j, v) in lp.objective.iter().enumerate() {
            let (p, n) = self.cols[j];
            c[p] = v.clone();
            if let Some(n) = n {
                c[n] = -v.clone();
            }
        }
        let mut w = self.cost_row(&c);
        if !self.optimize(&mut w, self.first_art) {
            return LpOutcome::Unbounded;
        }
        let mut vals = vec![Q::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            vals[b] = self.t[i][self.ncols].clone();
        }
        let x = self
            .cols
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => &vals[p] - &vals[n],
                None => vals[p].clone(),
            })
            .collect();
        LpOutcome::Optimal {
            x,
            value: -w[self.ncols].clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::linalg::qi;
    use super::*;

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn textbook_max() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18
        let mut lp = Lp::new(2);
        lp.nonneg = vec![true, true];
        lp.objective = qv(&[3, 5]);
        lp.push(qv(&[1, 0]), Rel::Le, qi(4));
        lp.push(qv(&[0, 2]), Rel::Le, qi(12));
        lp.push(qv(&[3, 2]), Rel::Le, qi(18));
        match lp.solve() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, qi(36));
                assert_eq!(x, qv(&[2, 6]));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = Lp::new(1);
        lp.push(qv(&[1]), Rel::Ge, qi(1));
        lp.push(qv(&[1]), Rel::Le, qi(0));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = Lp::new(2);
        lp.objective = qv(&[1, 0]);
        lp.push(qv(&[1, -1]), Rel::Eq, qi(3));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // min x + y (max -x - y) with x - y = -5, x >= -10, y free, y <= 7
        let mut lp = Lp::new(2);
        lp.objective = qv(&[-1, -1]);
        lp.push(qv(&[1, -1]), Rel::Eq, qi(-5));
        lp.push(qv(&[1, 0]), Rel::Ge, qi(-10));
        lp.push(qv(&[0, 1]), Rel::Le, qi(7));
        match lp.solve() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, qv(&[-10, -5]));
                assert_eq!(value, qi(15));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = Lp::new(2);
        lp.nonneg = vec![true, true];
        lp.objective = qv(&[1, 1]);
        lp.push(qv(&[1, 1]), Rel::Eq, qi(2));
        lp.push(qv(&[2, 2]), Rel::Eq, qi(4));
        lp.push(qv(&[1, 0]), Rel::Le, qi(1));
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, qi(2)),
            o => panic!("{o:?}"),
        }
    }
}
