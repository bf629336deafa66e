//! Minimum coordinate sum over integer points with `a·c ≥ 1` and `c ≥ 0`, by branch and bound.

use super::cone::Form;
use super::linalg::{to_q, Q};
use super::lp::{Lp, LpOutcome, Rel};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
struct Node {
    lower: Vec<Option<BigInt>>,
    upper: Vec<Option<BigInt>>,
}

fn relax(forms: &[Form], n: usize, node: &Node) -> LpOutcome {
    let mut lp = Lp::new(n);
    lp.nonneg = vec![true; n];
    lp.objective = vec![-Q::one(); n];
    for a in forms {
        lp.push(to_q(a), Rel::Ge, Q::one());
    }
    for j in 0..n {
        let mut e = vec![Q::zero(); n];
        e[j] = Q::one();
        if let Some(l) = &node.lower[j] {
            lp.push(e.clone(), Rel::Ge, Q::from_integer(l.clone()));
        }
        if let Some(u) = &node.upper[j] {
            lp.push(e, Rel::Le, Q::from_integer(u.clone()));
        }
    }
    lp.solve()
}

/// Returns an optimal integer point and its coordinate sum.
pub fn min_sum_integer_point(forms: &[Form], n: usize) -> Result<(Vec<BigInt>, BigInt)> {
    let root = Node {
        lower: vec![None; n],
        upper: vec![None; n],
    };
    let mut best: Option<(Vec<BigInt>, BigInt)> = None;
    let mut stack = vec![root];
    let mut root_seen = false;
    while let Some(node) = stack.pop() {
        let (x, value) = match relax(forms, n, &node) {
            LpOutcome::Optimal { x, value } => (x, -value),
            LpOutcome::Infeasible => {
                if !root_seen {
                    return Err(Error::Lp("infeasible"));
                }
                continue;
            }
            LpOutcome::Unbounded => return Err(Error::Lp("unbounded")),
        };
        root_seen = true;
        let bound = value.ceil().to_integer();
        if let Some((_, b)) = &best {
            if &bound >= b {
                continue;
            }
        }
        match x.iter().position(|v| !v.is_integer()) {
            None => {
                let pt: Vec<BigInt> = x.iter().map(|v| v.to_integer()).collect();
                let s: BigInt = pt.iter().sum();
                best = Some((pt, s));
            }
            Some(j) => {
                let fl = x[j].floor().to_integer();
                let mut down = node.clone();
                down.upper[j] = Some(fl.clone());
                let mut up = node;
                up.lower[j] = Some(fl + 1);
                // explore the rounding-up side first
                stack.push(down);
                stack.push(up);
            }
        }
    }
    best.ok_or(Error::Lp("infeasible"))
}
