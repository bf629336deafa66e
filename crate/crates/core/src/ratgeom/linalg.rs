use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn to_q(v: &[BigInt]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], x: &[Q]) -> Q {
    let mut s = Q::zero();
    for (c, v) in a.iter().zip(x) {
        if !c.is_zero() && !v.is_zero() {
            s += v * c;
        }
    }
    s
}

pub fn dot_q(a: &[Q], x: &[Q]) -> Q {
    let mut s = Q::zero();
    for (c, v) in a.iter().zip(x) {
        if !c.is_zero() && !v.is_zero() {
            s += c * v;
        }
    }
    s
}

/// Reduced row echelon form in place. Zero rows are dropped; returns pivot columns.
pub fn rref(m: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let nz: Vec<usize> = (0..ncols).filter(|&k| !m[r][k].is_zero()).collect();
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &k in &nz {
                row[k] -= &f * &prow[k];
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

pub fn rank_int(m: &[Vec<BigInt>]) -> usize {
    let a: Vec<Vec<Q>> = m.iter().map(|r| to_q(r)).collect();
    rank(&a)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Q>),
    /// `particular + span(kernel)`.
    Family { particular: Vec<Q>, kernel: Vec<Vec<Q>> },
    Infeasible,
}

pub fn solve_linear(a: &[Vec<Q>], b: &[Q]) -> Solution {
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&n) {
        return Solution::Infeasible;
    }
    let mut x = vec![Q::zero(); n];
    for (row, &c) in aug.iter().zip(&piv) {
        x[c] = row[n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    if free.is_empty() {
        return Solution::Unique(x);
    }
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (row, &c) in aug.iter().zip(&piv) {
                v[c] = -row[f].clone();
            }
            v
        })
        .collect();
    Solution::Family { particular: x, kernel }
}

/// Fraction-free determinant.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    primitive_int(&ints)
}

pub fn primitive_int(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Primitive with the first nonzero entry positive.
pub fn normalize_sign(v: &[BigInt]) -> Vec<BigInt> {
    let p = primitive_int(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => p.iter().map(|y| -y).collect(),
        _ => p,
    }
}

/// Primitive integer basis of a row space, in reduced echelon form.
pub fn row_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<Q>> = rows.iter().map(|r| to_q(r)).collect();
    rref(&mut a);
    a.iter().map(|r| primitive(r)).collect()
}
