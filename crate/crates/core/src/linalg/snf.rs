use std::cmp::min;
use std::fmt;

use crate::linalg::Matrix;
use crate::scalar::Int;

/// Invariant factors of an integer matrix.
///
/// `invariant_factors` has length `min(rows, cols)`: the nonzero factors
/// `d1 | d2 | ... | d_rank` (all positive) followed by zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm<T> {
    pub invariant_factors: Vec<T>,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
}

/// Presentation of `Z^rows / (column span)`: a torsion part and a free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel<T> {
    /// Torsion orders, each > 1, in divisibility order.
    pub torsion: Vec<T>,
    pub free_rank: usize,
}

impl<T: Int> SmithNormalForm<T> {
    /// Nonzero invariant factors only.
    pub fn nonzero_factors(&self) -> &[T] {
        &self.invariant_factors[..self.rank]
    }

    /// All factors are 1 and the matrix has full rank, i.e. a square
    /// unimodular matrix.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols
            && self.rank == self.rows
            && self.invariant_factors.iter().all(|d| d.is_one())
    }

    /// Cokernel under the convention that columns are images of the domain
    /// generators, so the codomain is `Z^rows`.
    pub fn cokernel(&self) -> Cokernel<T> {
        Cokernel {
            torsion: self.nonzero_factors().iter().filter(|d| !d.is_one()).cloned().collect(),
            free_rank: self.rows - self.rank,
        }
    }
}

impl<T: Int> Cokernel<T> {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl<T: fmt::Display> fmt::Display for Cokernel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".into()),
            r => parts.push(format!("ℤ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("ℤ/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// Smith normal form by unimodular row and column operations.
///
/// Pivots are chosen as the nonzero entry of smallest absolute value,
/// ties broken leftmost column first, then uppermost row, which makes the
/// elimination sequence reproducible.
pub fn smith_normal_form<T: Int>(m: &Matrix<T>) -> SmithNormalForm<T> {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let n = min(rows, cols);
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = smallest_entry(&a, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut cleared = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].clone() / a[(t, t)].clone();
                for j in t..cols {
                    let v = a[(i, j)].clone() - q.clone() * a[(t, j)].clone();
                    a[(i, j)] = v;
                }
                cleared &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].clone() / a[(t, t)].clone();
                for i in t..rows {
                    let v = a[(i, j)].clone() - q.clone() * a[(i, t)].clone();
                    a[(i, j)] = v;
                }
                cleared &= a[(t, j)].is_zero();
            }
            if !cleared {
                // a remainder is now smaller than the pivot; bring it to (t, t)
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = smallest_entry(&a, line).expect("pivot is nonzero");
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..cols)
                .flat_map(|j| (t + 1..rows).map(move |i| (i, j)))
                .find(|&(i, j)| !(a[(i, j)].clone() % pivot.clone()).is_zero());
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[(t, j)].clone() + a[(i, j)].clone();
                        a[(t, j)] = v;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    let invariant_factors: Vec<T> = (0..n).map(|i| a[(i, i)].abs()).collect();
    let rank = invariant_factors.iter().take_while(|d| !d.is_zero()).count();
    SmithNormalForm { invariant_factors, rank, rows, cols }
}

fn smallest_entry<T: Int>(
    a: &Matrix<T>,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for (i, j) in cells {
        let v = a[(i, j)].abs();
        if v.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some(((i, j), v));
        }
    }
    best.map(|(pos, _)| pos)
}
