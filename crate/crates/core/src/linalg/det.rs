use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Int;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions by
/// the previous pivot are exact and entry growth stays polynomial.
pub fn determinant<T: Int>(m: &Matrix<T>) -> Result<T> {
    m.require_square("determinant")?;
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(i, k);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let v = a[(i, j)].clone() * pivot.clone() - lead.clone() * a[(k, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}
