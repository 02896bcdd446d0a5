use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Int;

/// Exact Pfaffian of an even-size skew-symmetric matrix.
///
/// Skew-symmetric analogue of Bareiss elimination: each stage eliminates a
/// pair of indices against the 2x2 pivot block `(k, k+1)`, updating
///
/// `a[i][j] <- (p*a[i][j] - a[i][k+1]*a[k][j] + a[i][k]*a[k+1][j]) / prev`
///
/// where `p = a[k][k+1]` and `prev` is the pivot of the previous stage.
/// After a stage the entries are Pfaffians of principal submatrices, so
/// the division is exact. The last pivot is the Pfaffian, up to the sign
/// of the index transpositions used to find nonzero pivots.
pub fn pfaffian<T: Int>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::Structure(format!(
            "Pfaffian needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_skew_symmetric() {
        return Err(Error::Structure("Pfaffian needs a skew-symmetric matrix".into()));
    }
    let n = m.rows();
    if n % 2 == 1 {
        return Err(Error::Structure(format!("Pfaffian undefined for odd size {n}")));
    }
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    let mut k = 0;
    loop {
        let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) else {
            return Ok(T::zero());
        };
        if j != k + 1 {
            a.swap_rows(j, k + 1);
            a.swap_cols(j, k + 1);
            negate = !negate;
        }
        let p = a[(k, k + 1)].clone();
        if k + 2 == n {
            return Ok(if negate { -p } else { p });
        }
        for i in k + 2..n {
            for j in k + 2..n {
                if i == j {
                    continue;
                }
                let v = p.clone() * a[(i, j)].clone() - a[(i, k + 1)].clone() * a[(k, j)].clone()
                    + a[(i, k)].clone() * a[(k + 1, j)].clone();
                debug_assert!((v.clone() % prev.clone()).is_zero(), "inexact Pfaffian step");
                a[(i, j)] = v / prev.clone();
            }
        }
        prev = p;
        k += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows).unwrap().map(|&x| BigInt::from(x))
    }

    #[test]
    fn elementary_blocks() {
        assert_eq!(pfaffian(&m(vec![vec![0, 1], vec![-1, 0]])).unwrap(), BigInt::from(1));
        assert_eq!(pfaffian(&m(vec![vec![0, 2], vec![-2, 0]])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn four_by_four_formula() {
        // Pf = a01 a23 - a02 a13 + a03 a12
        let (a01, a02, a03, a12, a13, a23) = (2, -3, 5, 7, 1, -4);
        let a = m(vec![
            vec![0, a01, a02, a03],
            vec![-a01, 0, a12, a13],
            vec![-a02, -a12, 0, a23],
            vec![-a03, -a13, -a23, 0],
        ]);
        let expected = a01 * a23 - a02 * a13 + a03 * a12;
        assert_eq!(pfaffian(&a).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn pivot_swap_changes_sign() {
        // a01 = 0 forces a transposition; Pf = -a02 a13 = -(1)(1) = -1
        let a = m(vec![
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![-1, 0, 0, 0],
            vec![0, -1, 0, 0],
        ]);
        assert_eq!(pfaffian(&a).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn zero_row_gives_zero() {
        let a = m(vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 3, 1],
            vec![0, -3, 0, 2],
            vec![0, -1, -2, 0],
        ]);
        assert_eq!(pfaffian(&a).unwrap(), BigInt::from(0));
    }

    #[test]
    fn structure_errors() {
        assert!(matches!(pfaffian(&m(vec![vec![0]])), Err(Error::Structure(_))));
        assert!(matches!(pfaffian(&m(vec![vec![0, 1], vec![1, 0]])), Err(Error::Structure(_))));
        assert!(matches!(pfaffian(&m(vec![vec![1, 1], vec![-1, 0]])), Err(Error::Structure(_))));
    }
}
