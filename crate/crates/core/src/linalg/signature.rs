use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// Inertia of a real symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactSignature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl ExactSignature {
    /// `positive - negative`.
    pub fn value(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Characteristic polynomial `det(t I - m)`, coefficients in ascending
/// order (the last one is 1). Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial<F: Field>(m: &Matrix<F>) -> Result<Vec<F>> {
    m.require_square("characteristic polynomial")?;
    let n = m.rows();
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut acc: Matrix<F> = Matrix::zeros(n, n);
    for k in 1..=n {
        // acc <- m * acc + c_{n-k+1} I
        let mut next = m.mul(&acc);
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
        }
        let prod = m.mul(&next);
        let trace = (0..n).fold(F::zero(), |s, i| s + prod[(i, i)].clone());
        let k_f = F::from_usize(k).expect("size fits the field");
        coeffs[n - k] = -(trace / k_f);
        acc = next;
    }
    Ok(coeffs)
}

/// Exact inertia of a symmetric matrix over an ordered field.
///
/// The characteristic polynomial of a symmetric matrix has only real
/// roots, so Descartes' rule of signs counts the positive roots exactly;
/// applying it to `p(-t)` counts the negative ones, and the multiplicity of
/// 0 is the index of the lowest nonzero coefficient.
pub fn exact_signature<F: Field>(m: &Matrix<F>) -> Result<ExactSignature> {
    if !m.is_square() {
        return Err(Error::Structure(format!(
            "signature needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_symmetric() {
        return Err(Error::Structure("signature needs a symmetric matrix".into()));
    }
    let coeffs = characteristic_polynomial(m)?;
    let zero = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len() - 1);
    let positive = sign_changes(coeffs.iter().cloned());
    let negative = sign_changes(
        coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }),
    );
    debug_assert_eq!(positive + negative + zero, m.rows());
    Ok(ExactSignature { positive, negative, zero })
}

fn sign_changes<F: Field>(coeffs: impl Iterator<Item = F>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for c in coeffs.filter(|c| !c.is_zero()) {
        let pos = c.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}
