//! Deciding whether a tropical line lies on a tropical cubic surface.

use crate::error::{Error, Result};
use crate::lattice::{omega, EXPONENTS, NPTS};
use crate::lines::{line_vertices, LinePair, Pluecker, Point};
use crate::ratgeom::linalg::{qi, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

/// `alpha * t + beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Linear {
    pub alpha: Q,
    pub beta: Q,
}

impl Linear {
    pub fn new(alpha: Q, beta: Q) -> Self {
        Linear { alpha, beta }
    }

    pub fn at(&self, t: &Q) -> Q {
        &self.alpha * t + &self.beta
    }
}

/// Closed interval `[lo, hi]`, unbounded above when `hi` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Option<Q>,
}

impl Interval {
    pub fn bounded(lo: Q, hi: Q) -> Self {
        Interval { lo, hi: Some(hi) }
    }
    pub fn ray(lo: Q) -> Self {
        Interval { lo, hi: None }
    }
}

fn ser_q<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_opt_q<S: Serializer>(q: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    #[serde(serialize_with = "ser_q")]
    pub lo: Q,
    #[serde(serialize_with = "ser_opt_q")]
    pub hi: Option<Q>,
    pub block: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub pieces: Vec<Piece>,
}

impl Certificate {
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.pieces.iter().map(|p| p.block.clone()).collect()
    }
    pub fn breakpoints(&self) -> Vec<Q> {
        self.pieces.iter().skip(1).map(|p| p.lo.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Covering {
    Yes(Certificate),
    No(Q),
}

/// Blocks of identical functions, each listed in increasing index order, ordered by first index.
pub fn coincidence_partition(l: &[Linear]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, f) in l.iter().enumerate() {
        match blocks.iter_mut().find(|b| &l[b[0]] == f) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    blocks
}

pub fn covering_subroutine(u: &Interval, l: &[Linear]) -> Result<Covering> {
    if let Some(hi) = &u.hi {
        if hi < &u.lo {
            return Err(Error::EmptyInterval);
        }
    }
    if l.is_empty() {
        return Err(Error::EmptyInterval);
    }
    let blocks = coincidence_partition(l);
    let f = |b: &Vec<usize>| &l[b[0]];
    if u.hi.as_ref() == Some(&u.lo) {
        let t = &u.lo;
        let min = blocks.iter().map(|b| f(b).at(t)).min().unwrap();
        let mut block: Vec<usize> = blocks.iter().filter(|b| f(b).at(t) == min).flatten().copied().collect();
        block.sort_unstable();
        if block.len() < 2 {
            return Ok(Covering::No(t.clone()));
        }
        return Ok(Covering::Yes(Certificate {
            pieces: vec![Piece {
                lo: t.clone(),
                hi: Some(t.clone()),
                block,
            }],
        }));
    }
    let mut pieces = Vec::new();
    let mut t = u.lo.clone();
    loop {
        let min = blocks.iter().map(|b| f(b).at(&t)).min().unwrap();
        let active = blocks
            .iter()
            .filter(|b| f(b).at(&t) == min)
            .min_by(|a, b| f(a).alpha.cmp(&f(b).alpha))
            .unwrap();
        let fa = f(active);
        let next = blocks
            .iter()
            .filter(|b| f(b).alpha < fa.alpha)
            .map(|b| {
                let g = f(b);
                (&g.beta - &fa.beta) / (&fa.alpha - &g.alpha)
            })
            .filter(|s| s > &t)
            .min();
        let end = match (&next, &u.hi) {
            (Some(n), Some(h)) => Some(n.clone().min(h.clone())),
            (Some(n), None) => Some(n.clone()),
            (None, h) => h.clone(),
        };
        if active.len() < 2 {
            let w = match &end {
                Some(e) => (&t + e) / qi(2),
                None => &t + Q::one(),
            };
            return Ok(Covering::No(w));
        }
        pieces.push(Piece {
            lo: t.clone(),
            hi: end.clone(),
            block: active.clone(),
        });
        match end {
            Some(e) if Some(&e) != u.hi.as_ref() => t = e,
            _ => break,
        }
    }
    Ok(Covering::Yes(Certificate { pieces }))
}

/// Restriction of the 20 monomials to `x(s) = base + s * dir`.
pub fn substitute(c: &[Q], base: &Point, dir: &Point) -> Vec<Linear> {
    (0..NPTS)
        .map(|i| {
            let e = EXPONENTS[i];
            let mut alpha = Q::zero();
            let mut beta = c[i].clone();
            for m in 0..4 {
                if e[m] == 0 {
                    continue;
                }
                let k = BigInt::from(e[m]);
                alpha += &dir[m] * &k;
                beta += &base[m] * &k;
            }
            Linear::new(alpha, beta)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    Bounded,
    Ray(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncidenceResult {
    /// Certificates for the bounded edge and the rays `ω_i, ω_j, ω_k, ω_l`.
    Contained {
        line: LinePair,
        certificates: Vec<(Segment, Certificate)>,
    },
    Witness { segment: Segment, point: Point },
}

pub fn omega_q(f: usize) -> Point {
    omega(f).map(qi)
}

/// The five pieces of a line: bounded edge over `[0, 1]`, then the rays over `[0, ∞)`.
pub fn line_segments(line: &LinePair) -> Vec<(Segment, Point, Point, Interval)> {
    let d: Point = std::array::from_fn(|m| &line.q_kl[m] - &line.q_ij[m]);
    let mut out = vec![(
        Segment::Bounded,
        line.q_ij.clone(),
        d,
        Interval::bounded(Q::zero(), Q::one()),
    )];
    for (q, f) in [
        (&line.q_ij, line.ij[0]),
        (&line.q_ij, line.ij[1]),
        (&line.q_kl, line.kl[0]),
        (&line.q_kl, line.kl[1]),
    ] {
        out.push((Segment::Ray(f), q.clone(), omega_q(f), Interval::ray(Q::zero())));
    }
    out
}

pub fn line_pair_on_surface(line: &LinePair, c: &[Q]) -> Result<IncidenceResult> {
    let mut certificates = Vec::new();
    for (seg, base, dir, u) in line_segments(line) {
        let l = substitute(c, &base, &dir);
        match covering_subroutine(&u, &l)? {
            Covering::Yes(cert) => certificates.push((seg, cert)),
            Covering::No(s) => {
                let point = std::array::from_fn(|m| &base[m] + &s * &dir[m]);
                return Ok(IncidenceResult::Witness { segment: seg, point });
            }
        }
    }
    Ok(IncidenceResult::Contained {
        line: line.clone(),
        certificates,
    })
}

pub fn line_on_surface(p: &Pluecker, c: &[Q]) -> Result<IncidenceResult> {
    let line = line_vertices(p)?;
    line_pair_on_surface(&line, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::lines::pluecker_from_ints;
    use crate::surface::{evaluate, heights_from_ints};

    fn lin(a: i64, b: i64) -> Linear {
        Linear::new(qi(a), qi(b))
    }

    #[test]
    fn partitions() {
        assert_eq!(coincidence_partition(&[lin(1, 0), lin(1, 0), lin(2, 1)]), vec![vec![0, 1], vec![2]]);
        assert_eq!(coincidence_partition(&[lin(1, 0), lin(2, 0)]), vec![vec![0], vec![1]]);
    }

    #[test]
    fn small_coverings() {
        let yes = covering_subroutine(&Interval::ray(qi(0)), &[lin(1, 0), lin(1, 0), lin(2, 1)]).unwrap();
        match yes {
            Covering::Yes(c) => assert_eq!(c.blocks(), vec![vec![0, 1]]),
            o => panic!("{o:?}"),
        }
        let no = covering_subroutine(&Interval::bounded(qi(0), qi(1)), &[lin(1, 0), lin(2, 1)]).unwrap();
        match no {
            // the witness lies where l0 alone is minimal
            Covering::No(u) => assert!(u >= qi(0) && u <= qi(1)),
            o => panic!("{o:?}"),
        }
        assert!(covering_subroutine(&Interval::bounded(qi(1), qi(0)), &[lin(1, 0)]).is_err());
    }

    #[test]
    fn breakpoint_changes_block() {
        // {0,1} = t, {2,3} = 4 - t: minimum switches at t = 2
        let l = [lin(1, 0), lin(1, 0), lin(-1, 4), lin(-1, 4), lin(0, 10)];
        match covering_subroutine(&Interval::ray(qi(0)), &l).unwrap() {
            Covering::Yes(c) => {
                assert_eq!(c.blocks(), vec![vec![0, 1], vec![2, 3]]);
                assert_eq!(c.breakpoints(), vec![qi(2)]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn honeycomb_line() {
        let c = heights_from_ints(&data::HONEYCOMB_HEIGHTS);
        let p = pluecker_from_ints([26, 6, 17, 7, 18, 0]);
        let IncidenceResult::Contained { certificates, line } = line_on_surface(&p, &c).unwrap() else {
            panic!("line should be contained");
        };
        let blocks: Vec<Vec<Vec<usize>>> = certificates.iter().map(|(_, c)| c.blocks()).collect();
        assert_eq!(
            blocks,
            vec![
                vec![vec![14, 15]],
                vec![vec![14, 15]],
                vec![vec![14, 15], vec![5, 8]],
                vec![vec![14, 18], vec![11, 17]],
                vec![vec![15, 18]],
            ]
        );
        assert_eq!(certificates[2].1.breakpoints(), vec![qi(9)]);
        let (_, arg) = evaluate(&c, &line.q_kl);
        assert_eq!(arg, vec![14, 15, 18]);
    }

    #[test]
    fn perturbed_line_witness_is_sound() {
        let c = heights_from_ints(&data::HONEYCOMB_HEIGHTS);
        let p = pluecker_from_ints([27, 6, 17, 7, 18, 0]);
        if let IncidenceResult::Witness { point, .. } = line_on_surface(&p, &c).unwrap() {
            assert_eq!(evaluate(&c, &point).1.len(), 1);
        }
        assert_eq!(line_on_surface(&pluecker_from_ints([0; 6]), &c), Err(Error::DegenerateLine));
    }
}
