use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::germ::local::{local_cmp, LocalAlgebra};
use crate::germ::poly::{total_degree, Polynomial};
use crate::germ::{Germ, Gradient};
use crate::linalg::{exact_signature, Matrix};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeMethod {
    Elk,
    Winding,
}

impl fmt::Display for DegreeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeMethod::Elk => "ELK signature",
            DegreeMethod::Winding => "winding number",
        })
    }
}

/// Local degree of a gradient at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeResult {
    pub degree: i64,
    pub local_algebra_dim: usize,
    pub method: DegreeMethod,
    pub certificate: String,
}

/// Determinant of the Jacobian of the gradient, by cofactor expansion.
pub fn hessian_determinant<C: Field>(grad: &Gradient<C>) -> Polynomial<C> {
    let n = grad.nvars();
    let entries: Vec<Vec<Polynomial<C>>> = grad
        .components()
        .iter()
        .map(|c| (0..n).map(|j| c.derivative(j)).collect())
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    cofactor(&entries, 0, &cols, n)
}

fn cofactor<C: Field>(m: &[Vec<Polynomial<C>>], row: usize, cols: &[usize], n: usize) -> Polynomial<C> {
    if cols.is_empty() {
        return Polynomial::one(n);
    }
    let mut acc = Polynomial::zero(n);
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[row][c] * &cofactor(m, row + 1, &rest, n);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Local degree of `∇g` at the origin as the signature of the
/// Eisenbud-Levine-Khimshiashvili form.
///
/// With `Q` the local algebra of the gradient ideal and `J` the class of
/// the Hessian determinant, `φ` is the coordinate functional of the
/// highest-degree basis monomial occurring in `J`, signed so `φ(J) > 0`;
/// the degree is the signature of `(a, b) ↦ φ(ab)` on `Q`.
pub fn elk_degree<C: Field>(g: &Germ<C>) -> Result<DegreeResult> {
    let grad = g.gradient();
    if grad.is_zero() {
        return Err(Error::Degenerate("the gradient is identically zero".into()));
    }
    let alg = LocalAlgebra::new(grad.components())?;
    let names = g.variables();
    let show = |e: &[u32]| Polynomial::<C>::monomial(e.to_vec(), C::one()).format_with(names);
    if alg.dim() == 0 {
        return Ok(DegreeResult {
            degree: 0,
            local_algebra_dim: 0,
            method: DegreeMethod::Elk,
            certificate: "gradient does not vanish at the origin".into(),
        });
    }
    let basis = alg.basis();
    let j = alg.normal_form(&hessian_determinant(&grad));
    let pick = (0..basis.len())
        .filter(|&i| !j[i].is_zero())
        .max_by(|&a, &b| {
            total_degree(&basis[a])
                .cmp(&total_degree(&basis[b]))
                .then_with(|| local_cmp(&basis[a], &basis[b]))
        })
        .ok_or_else(|| Error::Degenerate("Hessian determinant lies in the gradient ideal".into()))?;
    let sign = if j[pick].is_negative() { -C::one() } else { C::one() };
    let size = basis.len();
    let mut form = Matrix::zeros(size, size);
    for a in 0..size {
        for b in a..size {
            let prod: Vec<u32> = basis[a].iter().zip(&basis[b]).map(|(x, y)| x + y).collect();
            let nf = alg.normal_form(&Polynomial::monomial(prod, C::one()));
            let v = sign.clone() * nf[pick].clone();
            form[(a, b)] = v.clone();
            form[(b, a)] = v;
        }
    }
    let sig = exact_signature(&form)?;
    if sig.zero != 0 {
        return Err(Error::Degenerate("bilinear form is degenerate".into()));
    }
    let basis_text: Vec<String> = basis.iter().map(|e| show(e)).collect();
    let certificate = format!(
        "basis [{}]; φ = {}coefficient of {} (Hessian residue coefficient {}); inertia (+{}, -{})",
        basis_text.join(", "),
        if sign.is_negative() { "-" } else { "" },
        show(&basis[pick]),
        j[pick],
        sig.positive,
        sig.negative
    );
    Ok(DegreeResult {
        degree: sig.value(),
        local_algebra_dim: size,
        method: DegreeMethod::Elk,
        certificate,
    })
}
