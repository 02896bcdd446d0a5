//! Reference algorithms for tests. Deliberately naive and independent of
//! the library's elimination-based implementations.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(big(n), big(d))
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Sum over perfect matchings, expanding along the first index.
pub fn matching_pfaffian(a: &[Vec<BigInt>]) -> BigInt {
    let idx: Vec<usize> = (0..a.len()).collect();
    fn go(a: &[Vec<BigInt>], idx: &[usize]) -> BigInt {
        if idx.is_empty() {
            return BigInt::one();
        }
        if idx.len() % 2 == 1 {
            return BigInt::zero();
        }
        let first = idx[0];
        let mut total = BigInt::zero();
        for pos in 1..idx.len() {
            let partner = idx[pos];
            if a[first][partner].is_zero() {
                continue;
            }
            let rest: Vec<usize> =
                idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != pos).map(|(_, &v)| v).collect();
            let term = &a[first][partner] * go(a, &rest);
            if pos % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    go(a, &idx)
}

/// Invariant factors from determinantal divisors: `D_k = gcd of k x k
/// minors`, `d_k = D_k / D_{k-1}`. Exponential; small matrices only.
pub fn determinantal_factors(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let n = rows.min(cols);
    let mut divisors = vec![BigInt::one()];
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect()).collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        divisors.push(g);
    }
    (1..=n)
        .map(|k| {
            if divisors[k].is_zero() {
                BigInt::zero()
            } else {
                &divisors[k] / &divisors[k - 1]
            }
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

// ---- univariate rational polynomials, ascending coefficients ----

pub type Poly = Vec<BigRational>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn eval(p: &Poly, t: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
}

pub fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(big(i as i64))).collect())
}

pub fn rem(a: &Poly, b: &Poly) -> Poly {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &q * c;
        }
        r = trim(r);
    }
    r
}

pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Distinct real roots in the half-open interval (lo, hi] via Sturm.
pub fn sturm_distinct(p: &Poly, lo: &BigRational, hi: &BigRational) -> usize {
    let p = trim(p.clone());
    if p.len() <= 1 {
        return 0;
    }
    let mut seq = vec![p.clone(), derivative(&p)];
    loop {
        let n = seq.len();
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let changes = |t: &BigRational| {
        let signs: Vec<bool> = seq.iter().map(|q| eval(q, t)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(lo) - changes(hi)
}

/// Real roots in (lo, hi] counted with multiplicity.
pub fn roots_with_multiplicity(p: &Poly, lo: &BigRational, hi: &BigRational) -> usize {
    let mut total = 0;
    let mut g = trim(p.clone());
    while g.len() > 1 {
        total += sturm_distinct(&g, lo, hi);
        g = gcd(&g, &derivative(&g));
    }
    total
}

/// Cauchy bound on the absolute value of the roots.
pub fn root_bound(p: &Poly) -> BigRational {
    let p = trim(p.clone());
    let lead = p.last().unwrap().abs();
    p.iter().fold(BigRational::one(), |m, c| {
        let v = BigRational::one() + c.abs() / &lead;
        if v > m { v } else { m }
    })
}

/// Rational determinant by plain Gaussian elimination.
pub fn rational_det(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= &m[k][k];
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let v = &m[i][j] - &f * &m[k][j];
                m[i][j] = v;
            }
        }
    }
    det
}

/// Characteristic polynomial det(tI - A) by Lagrange interpolation at
/// t = 0..=n.
pub fn charpoly_by_interpolation(a: &[Vec<BigRational>]) -> Poly {
    let n = a.len();
    let points: Vec<BigRational> = (0..=n).map(|t| BigRational::from_integer(big(t as i64))).collect();
    let values: Vec<BigRational> = points
        .iter()
        .map(|t| {
            let shifted: Vec<Vec<BigRational>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { t - &a[i][j] } else { -a[i][j].clone() }).collect())
                .collect();
            rational_det(&shifted)
        })
        .collect();
    let mut result: Poly = vec![BigRational::zero(); n + 1];
    for (i, (xi, yi)) in points.iter().zip(&values).enumerate() {
        let mut basis: Poly = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        for (k, c) in basis.iter().enumerate() {
            result[k] += c * yi / &denom;
        }
    }
    trim(result)
}

/// (positive, negative, zero) eigenvalue counts via Sturm root counting.
pub fn sturm_inertia(a: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let p = charpoly_by_interpolation(a);
    let bound = root_bound(&p);
    let zero = BigRational::zero();
    let pos = roots_with_multiplicity(&p, &zero, &bound);
    let neg_or_zero = roots_with_multiplicity(&p, &-bound.clone(), &zero);
    let z = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    (pos, neg_or_zero - z, z)
}

/// Rank of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, rank);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in c..cols {
                    let v = &m[i][j] - &f * &m[rank][j];
                    m[i][j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}
