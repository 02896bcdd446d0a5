//! Linking matrices of Hopf-dual spheres and the NS-pair criterion.
//!
//! A bundle `S³_(k+1) → E⁵ → S²` trivial on the boundary is encoded by the
//! k×k skew-symmetric matrix of linking numbers `a_ij = lk(S²_j, S²_i)` of
//! the Hopf-dual spheres, each of which links the core sphere `S²_0` once.
//! Gluing in the tubular neighbourhoods of the boundary spheres yields a
//! closed 5-manifold `X⁵`; the bundle comes from an NS-pair exactly when
//! `X⁵` is a homotopy sphere, i.e. when the Mayer-Vietoris matrix `R`
//! presenting `H₂(X⁵)` is unimodular, i.e. when `det A = ±1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::FiberDescriptor;
use crate::json;
use crate::linalg::{determinant, pfaffian, smith_normal_form, Matrix};
use crate::notation::{sub, sup};
use crate::{IntMatrix, Integer};
use num_traits::{One, Signed, Zero};

/// Symmetry type `(-1)^n` of a linking matrix: skew for odd `n`,
/// symmetric for even `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum SymmetrySign {
    Skew,
    Symmetric,
}

impl SymmetrySign {
    pub fn value(self) -> i8 {
        match self {
            SymmetrySign::Skew => -1,
            SymmetrySign::Symmetric => 1,
        }
    }

    /// `(-1)^n`.
    pub fn for_dimension(n: u32) -> Self {
        if n % 2 == 1 {
            SymmetrySign::Skew
        } else {
            SymmetrySign::Symmetric
        }
    }

    /// Smallest admissible `n >= 3` with `(-1)^n` equal to this sign.
    pub fn default_dimension(self) -> u32 {
        match self {
            SymmetrySign::Skew => 3,
            SymmetrySign::Symmetric => 4,
        }
    }
}

impl From<SymmetrySign> for i8 {
    fn from(s: SymmetrySign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for SymmetrySign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Self> {
        match v {
            -1 => Ok(SymmetrySign::Skew),
            1 => Ok(SymmetrySign::Symmetric),
            other => Err(Error::InvalidArgument(format!("symmetry sign must be ±1, got {other}"))),
        }
    }
}

/// `(-1)^n`-symmetric integer matrix with vanishing diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLinking", into = "RawLinking")]
pub struct LinkingMatrix {
    sign: SymmetrySign,
    entries: IntMatrix,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawLinking {
    symmetry_sign: SymmetrySign,
    size: usize,
    #[serde(with = "json::exact_rows")]
    entries: Vec<Vec<Integer>>,
}

impl TryFrom<RawLinking> for LinkingMatrix {
    type Error = Error;

    fn try_from(raw: RawLinking) -> Result<Self> {
        if raw.entries.len() != raw.size {
            return Err(Error::Dimension(format!(
                "declared size {} but {} rows given",
                raw.size,
                raw.entries.len()
            )));
        }
        let m = if raw.size == 0 { IntMatrix::zeros(0, 0) } else { Matrix::from_rows(raw.entries)? };
        LinkingMatrix::new(raw.symmetry_sign, m)
    }
}

impl From<LinkingMatrix> for RawLinking {
    fn from(l: LinkingMatrix) -> Self {
        RawLinking { symmetry_sign: l.sign, size: l.k(), entries: l.entries.to_rows() }
    }
}

impl LinkingMatrix {
    pub fn new(sign: SymmetrySign, entries: IntMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::Dimension(format!(
                "linking matrix must be square, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let k = entries.rows();
        for i in 0..k {
            if !entries[(i, i)].is_zero() {
                return Err(Error::Structure(format!(
                    "diagonal entry ({}, {}) is {}, linking matrices have zero diagonal",
                    i + 1,
                    i + 1,
                    entries[(i, i)]
                )));
            }
            for j in i + 1..k {
                let mirrored = match sign {
                    SymmetrySign::Skew => -entries[(j, i)].clone(),
                    SymmetrySign::Symmetric => entries[(j, i)].clone(),
                };
                if entries[(i, j)] != mirrored {
                    return Err(Error::Structure(format!(
                        "entries ({}, {}) = {} and ({}, {}) = {} violate {}-symmetry",
                        i + 1,
                        j + 1,
                        entries[(i, j)],
                        j + 1,
                        i + 1,
                        entries[(j, i)],
                        if sign == SymmetrySign::Skew { "skew" } else { "plain" }
                    )));
                }
            }
        }
        Ok(LinkingMatrix { sign, entries })
    }

    /// Convenience constructor from small integer rows.
    pub fn from_i64(sign: SymmetrySign, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Integer>> =
            rows.iter().map(|r| r.iter().map(|&x| Integer::from(x)).collect()).collect();
        let m = if rows.is_empty() { IntMatrix::zeros(0, 0) } else { Matrix::from_rows(rows)? };
        Self::new(sign, m)
    }

    pub fn k(&self) -> usize {
        self.entries.rows()
    }

    pub fn sign(&self) -> SymmetrySign {
        self.sign
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    /// Relabels the dual spheres: sphere `i` of the result is sphere
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.k()];
        if perm.len() != self.k() || perm.iter().any(|&p| p >= self.k() || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("not a permutation of the dual spheres".into()));
        }
        Self::new(self.sign, self.entries.permute_symmetric(perm))
    }

    /// Reverses the orientation of dual sphere `i`.
    pub fn with_reversed_sphere(&self, i: usize) -> Result<Self> {
        if i >= self.k() {
            return Err(Error::InvalidArgument(format!("no dual sphere {i}")));
        }
        let k = self.k();
        let m = Matrix::from_fn(k, k, |r, c| {
            let v = self.entries[(r, c)].clone();
            if (r == i) != (c == i) {
                -v
            } else {
                v
            }
        });
        Self::new(self.sign, m)
    }
}

/// Mayer-Vietoris matrix `R` of a skew linking matrix.
///
/// Layout, for `k` dual spheres (size `2k + 2`):
/// rows `μ0..μk, δ0..δk`; columns `[K0×*]..[Kk×*], [y0×∂B³]..[yk×∂B³]`.
/// Column `[K0×*]` is `μ1 + … + μk − δ0`, column `[Ki×*]` is `μi − δi`,
/// column `[y0×∂B³]` is `μ0`, and column `[yj×∂B³]` is
/// `μ0 + Σ_i a_ij μi` (every dual sphere links `S²_0` with `+1`).
pub fn build_r(l: &LinkingMatrix) -> Result<IntMatrix> {
    if l.sign != SymmetrySign::Skew {
        return Err(Error::Unsupported(
            "the Mayer-Vietoris matrix R is defined for skew-symmetric linking matrices".into(),
        ));
    }
    let k = l.k();
    let size = 2 * k + 2;
    let mu = |i: usize| i;
    let delta = |i: usize| k + 1 + i;
    let kcol = |j: usize| j;
    let ycol = |j: usize| k + 1 + j;
    let mut r = IntMatrix::zeros(size, size);
    let one = Integer::one();
    for j in 0..=k {
        r[(delta(j), kcol(j))] = -one.clone();
        r[(mu(0), ycol(j))] = one.clone();
    }
    for i in 1..=k {
        r[(mu(i), kcol(0))] = one.clone();
        r[(mu(i), kcol(i))] = one.clone();
        for j in 1..=k {
            r[(mu(i), ycol(j))] = l.entries[(i - 1, j - 1)].clone();
        }
    }
    Ok(r)
}

/// Outcome of the NS-pair criterion for one linking matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: u64,
    pub symmetry_sign: SymmetrySign,
    /// `n`: the fiber is `S^n_(k+1)` and the ambient sphere `S^(2n-1)`.
    pub dimension: u32,
    #[serde(with = "json::exact")]
    pub det_a: Integer,
    #[serde(with = "json::exact_opt")]
    pub pfaffian_a: Option<Integer>,
    #[serde(with = "json::exact_opt")]
    pub det_r: Option<Integer>,
    /// Invariant factors of the presentation matrix of `H_(n-1)(X^(2n-1))`:
    /// `R` in the skew case, `A` itself in the symmetric case.
    #[serde(with = "json::exact_vec")]
    pub h2_invariant_factors: Vec<Integer>,
    /// Name of the obstruction group, e.g. `H₂(X⁵)`.
    pub homology_label: String,
    /// The obstruction group as a direct sum, `0` when it vanishes.
    pub homology: String,
    pub is_ns_pair: bool,
    pub link_components: u64,
    pub fiber: FiberDescriptor,
}

impl ClassificationReport {
    /// One-line summary used by the command-line front end.
    pub fn summary(&self) -> String {
        let n = self.dimension as u64;
        if self.is_ns_pair {
            format!(
                "NS-pair: yes; link: {} × S{}; fiber: S{}_({})",
                self.link_components,
                sup(n - 1),
                sup(n),
                self.link_components
            )
        } else if self.symmetry_sign == SymmetrySign::Skew && self.k % 2 == 1 {
            "NS-pair: no (odd k)".into()
        } else {
            format!("NS-pair: no; {} = {}", self.homology_label, self.homology)
        }
    }
}

/// Classifies with the smallest dimension matching the symmetry sign
/// (`n = 3` for skew matrices, `n = 4` for symmetric ones).
pub fn classify(l: &LinkingMatrix) -> ClassificationReport {
    classify_in_dimension(l, l.sign.default_dimension())
        .expect("default dimension matches the symmetry sign")
}

/// Classifies the bundle `S^n_(k+1) → E^(2n-1) → S^(n-1)` encoded by `l`.
pub fn classify_in_dimension(l: &LinkingMatrix, n: u32) -> Result<ClassificationReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dimension n must be at least 3, got {n}")));
    }
    if SymmetrySign::for_dimension(n) != l.sign {
        return Err(Error::InvalidArgument(format!(
            "a {}-symmetric linking matrix does not occur for n = {n}",
            l.sign.value()
        )));
    }
    let k = l.k();
    let det_a = determinant(&l.entries)?;
    let (pfaffian_a, det_r, presentation) = match l.sign {
        SymmetrySign::Skew => {
            let pf = if k.is_multiple_of(2) { Some(pfaffian(&l.entries)?) } else { None };
            let r = build_r(l)?;
            (pf, Some(determinant(&r)?), r)
        }
        SymmetrySign::Symmetric => (None, None, l.entries.clone()),
    };
    let snf = smith_normal_form(&presentation);
    let is_ns_pair = det_a.abs().is_one();
    debug_assert_eq!(is_ns_pair, snf.is_unimodular());
    let link_components = k as u64 + 1;
    Ok(ClassificationReport {
        k: k as u64,
        symmetry_sign: l.sign,
        dimension: n,
        det_a,
        pfaffian_a,
        det_r,
        homology_label: format!("H{}(X{})", sub(n as u64 - 1), sup(2 * n as u64 - 1)),
        homology: snf.cokernel().to_string(),
        h2_invariant_factors: snf.invariant_factors,
        is_ns_pair,
        link_components,
        fiber: FiberDescriptor::punctured_sphere(n, link_components)?,
    })
}

/// Direct sum of `half` elementary blocks `[[0, 1], [-1, 0]]`, a
/// unimodular skew matrix of size `2 * half`.
pub fn generate_unimodular_blocks(half: usize) -> LinkingMatrix {
    let block = IntMatrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 1) => Integer::one(),
        (1, 0) => -Integer::one(),
        _ => Integer::zero(),
    });
    let m = (0..half).fold(IntMatrix::zeros(0, 0), |acc, _| acc.direct_sum(&block));
    LinkingMatrix::new(SymmetrySign::Skew, m).expect("block sums are skew")
}
