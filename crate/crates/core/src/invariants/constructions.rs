use serde::Serialize;

use super::fiber::{BouquetSummand, FiberDescriptor, TriState};
use super::record::{NSInvariantRecord, RecordKind};
use crate::error::{Error, Result};
use crate::linking::{classify_in_dimension, LinkingMatrix, SymmetrySign};

/// Looijenga connected sum of a record with its mirror image.
///
/// An NS-pair `(S^m, K)` over `S^q` yields the germ `(R^(m+1), 0) → (R^(q+1), 0)`
/// whose pair is `(S^m, K ♯ ±K)`; a germ record is doubled in place. The
/// link goes from `c` to `2c - 1` components and the fiber becomes the
/// boundary connected sum `F ♮ ±F`, doubling reduced homology.
pub fn looijenga_sum(rec: &NSInvariantRecord) -> Result<NSInvariantRecord> {
    let (source_dim, target_dim) = match rec.kind {
        RecordKind::NsPair => (rec.source_dim + 1, rec.target_dim + 1),
        RecordKind::Germ => (rec.source_dim, rec.target_dim),
    };
    let out = self_sum(rec, RecordKind::Germ, source_dim, target_dim)?;
    let from = match rec.kind {
        RecordKind::NsPair => "NS-pair",
        RecordKind::Germ => "germ",
    };
    out.with_note(format!(
        "looijenga_sum: {from} ({}, {}) → germ ({source_dim}, {target_dim})",
        rec.source_dim, rec.target_dim
    ))
    .finish()
}

fn self_sum(
    rec: &NSInvariantRecord,
    kind: RecordKind,
    source_dim: u32,
    target_dim: u32,
) -> Result<NSInvariantRecord> {
    let c = rec.link_components.ok_or_else(|| {
        Error::InsufficientData("connected sum needs the number of link components".into())
    })?;
    if c == 0 {
        return Err(Error::Hypothesis("connected sum needs a non-empty link".into()));
    }
    let comps = c
        .checked_mul(2)
        .and_then(|d| d.checked_sub(1))
        .ok_or(Error::Overflow("link components"))?;
    let f = &rec.fiber;
    let mut betti = Vec::with_capacity(f.betti.len());
    for (i, b) in f.betti.iter().enumerate() {
        betti.push(match (i, b) {
            (0, _) => Some(1),
            (_, Some(b)) => Some(b.checked_mul(2).ok_or(Error::Overflow("betti"))?),
            (_, None) => None,
        });
    }
    let bouquet = match &f.bouquet {
        None => None,
        Some(s) => Some(
            s.iter()
                .map(|t| {
                    let multiplicity = match t.multiplicity {
                        Some(m) => Some(m.checked_mul(2).ok_or(Error::Overflow("bouquet"))?),
                        None => None,
                    };
                    Ok(BouquetSummand { sphere_dim: t.sphere_dim, multiplicity })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    let fiber = FiberDescriptor {
        dim: f.dim,
        betti,
        boundary_components: Some(comps),
        bouquet,
        torsion_free_middle: f.torsion_free_middle,
        simply_connected: f.simply_connected,
    };
    let mut out = NSInvariantRecord {
        kind,
        source_dim,
        target_dim,
        link_components: Some(comps),
        fiber,
        degree: None,
        trivial: TriState::Unknown,
        provenance: rec.provenance.clone(),
    };
    out.trivial = match rec.trivial {
        // D ♮ D = D
        TriState::True => TriState::True,
        _ => out.implied_triviality(),
    };
    Ok(out)
}

/// Artin spinning: `(S^m, K)` over `S^q` becomes `(S^(m+1), K̃)` over the
/// same base. Only connectivity and the fundamental group of the fiber are
/// carried over; the remaining Betti numbers become unknown.
pub fn spun(rec: &NSInvariantRecord) -> Result<NSInvariantRecord> {
    match rec.link_components {
        Some(0) => return Err(Error::SpunUndefined("the link is empty".into())),
        None => {
            return Err(Error::InsufficientData(
                "spinning needs a link known to be non-empty".into(),
            ))
        }
        Some(_) => {}
    }
    let mut fiber = FiberDescriptor::unknown(rec.fiber.dim + 1);
    fiber.boundary_components = rec.link_components;
    fiber.simply_connected = rec.fiber.simply_connected;
    let trivial = match (rec.trivial, rec.fiber.simply_connected) {
        (TriState::True, _) => TriState::True,
        (_, TriState::False) => TriState::False,
        _ => TriState::Unknown,
    };
    let source_dim = rec.source_dim + 1;
    NSInvariantRecord {
        kind: rec.kind,
        source_dim,
        target_dim: rec.target_dim,
        link_components: rec.link_components,
        fiber,
        degree: None,
        trivial,
        provenance: rec.provenance.clone(),
    }
    .with_note(format!(
        "spun: ({}, {}) → ({source_dim}, {})",
        rec.source_dim, rec.target_dim, rec.target_dim
    ))
    .finish()
}

/// Composes a germ `(R^n, 0) → (R^p, 0)` with a generic linear projection
/// to `R^(p-1)`. The new fiber is `F × [0, 1]`, so its homotopy data is
/// copied verbatim; its boundary, the new link, is connected.
///
/// Projecting from `p = 2` to a function germ is allowed but flagged: the
/// fiber is then read as a ball intersected with a regular level set.
pub fn compose_projection(rec: &NSInvariantRecord) -> Result<NSInvariantRecord> {
    if rec.kind != RecordKind::Germ {
        return Err(Error::InvalidArgument("projection applies to germ records only".into()));
    }
    if rec.target_dim < 2 {
        return Err(Error::InvalidArgument(format!(
            "cannot project a germ with target dimension {}",
            rec.target_dim
        )));
    }
    let f = &rec.fiber;
    let mut betti = f.betti.clone();
    betti.push(Some(0));
    let function_germ = rec.target_dim == 2;
    let connected = f.betti[0] == Some(1);
    let boundary = connected.then_some(1);
    let fiber = FiberDescriptor {
        dim: f.dim + 1,
        betti,
        boundary_components: boundary,
        bouquet: f.bouquet.clone(),
        torsion_free_middle: f.torsion_free_middle,
        simply_connected: f.simply_connected,
    };
    let target_dim = rec.target_dim - 1;
    let mut out = NSInvariantRecord {
        kind: RecordKind::Germ,
        source_dim: rec.source_dim,
        target_dim,
        link_components: if function_germ { None } else { boundary },
        fiber,
        degree: rec.degree,
        trivial: rec.trivial,
        provenance: rec.provenance.clone(),
    }
    .with_note(format!(
        "compose_projection: ({}, {}) → ({}, {target_dim})",
        rec.source_dim, rec.target_dim, rec.source_dim
    ));
    if function_germ {
        out = out.with_note("compose_projection: target R, fiber taken as ball ∩ regular level set");
    }
    if out.trivial == TriState::Unknown {
        out.trivial = out.implied_triviality();
    }
    out.finish()
}

/// Germ `(R^2n, 0) → (R^n, 0)` built from an `ℓ × ℓ` unimodular
/// `(-1)^n`-symmetric linking matrix: the resulting homotopy sphere is
/// summed with its mirror to give `(S^(2n-1), L_k)` with `k = 2ℓ + 1`, then
/// doubled by the Looijenga sum to `2k - 1` components.
pub fn higher_dim_construct(n: u32, l: &LinkingMatrix) -> Result<NSInvariantRecord> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need n >= 3, got {n}")));
    }
    if l.sign() != SymmetrySign::for_dimension(n) {
        return Err(Error::InvalidArgument(format!(
            "dimension {n} needs a {}-symmetric matrix",
            SymmetrySign::for_dimension(n).value()
        )));
    }
    let ell = l.k();
    if ell % 2 == 1 {
        return Err(Error::Hypothesis(format!("matrix size ℓ = {ell} must be even")));
    }
    let report = classify_in_dimension(l, n)?;
    let x = NSInvariantRecord::from_classification(&report)?;
    let k = self_sum(&x, RecordKind::NsPair, x.source_dim, x.target_dim)?
        .with_note(format!("self connected sum: X ♯ -X ≅ S^{}", 2 * n - 1))
        .finish()?;
    let germ = looijenga_sum(&k)?;
    debug_assert_eq!(k.link_components.map(|c| c % 4), Some(1));
    Ok(germ)
}

/// Outcome of [`triviality_check`] with the evidence consulted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityVerdict {
    pub status: TriState,
    pub reasons: Vec<String>,
}

/// Decides triviality of the Milnor fiber for the dimension pairs
/// `(6, 3)`, `(8, 5)` and `(5, 2)` from whatever data the record carries,
/// failing when two pieces of evidence disagree.
pub fn triviality_check(rec: &NSInvariantRecord) -> Result<TrivialityVerdict> {
    if rec.kind != RecordKind::Germ {
        return Err(Error::Unsupported("triviality criteria apply to germ records".into()));
    }
    let mut evidence: Vec<(bool, String)> = Vec::new();
    match rec.dims() {
        (6, 3) | (8, 5) => {
            if let Some(d) = rec.degree {
                evidence.push((d == 0, format!("gradient degree {d}")));
            }
            if let Some(c) = rec.link_components {
                let trivial = if rec.source_dim == 6 { c == 1 } else { c >= 1 };
                evidence.push((trivial, format!("link has {c} component(s)")));
            }
        }
        (5, 2) => {
            if let Some(sc) = rec.fiber.simply_connected.known() {
                evidence.push((sc, format!("fiber simply connected: {sc}")));
            }
        }
        (n, p) => {
            return Err(Error::Unsupported(format!(
                "no triviality criterion for dimensions ({n}, {p})"
            )))
        }
    }
    if rec.fiber.has_reduced_homology() {
        evidence.push((false, "fiber has reduced homology".into()));
    }
    if let Some(t) = rec.trivial.known() {
        evidence.push((t, format!("record marked trivial: {t}")));
    }
    let status = match evidence.first() {
        None => TriState::Unknown,
        Some((first, _)) => {
            if let Some((_, other)) = evidence.iter().find(|(v, _)| v != first) {
                return Err(Error::Contradiction(format!(
                    "{} says trivial = {first}, but {other} says otherwise",
                    evidence[0].1
                )));
            }
            TriState::from(*first)
        }
    };
    let reasons = if evidence.is_empty() {
        vec!["insufficient data".to_string()]
    } else {
        evidence.into_iter().map(|(_, r)| r).collect()
    };
    Ok(TrivialityVerdict { status, reasons })
}

/// Bouquet structure guaranteed for a germ `(R^n, 0) → (R^p, 0)` that
/// extends to a germ with target of half the source dimension by a stairs
/// map. The existence of that extension is an input, never inferred.
///
/// Even `n`: a wedge of `(n/2 - 1)`-spheres, counted when the gradient
/// degree is supplied. Odd `n` with torsion-free middle homology: wedges of
/// `((n-1)/2 - 1)`- and `((n-1)/2)`-spheres in equal (unknown) number.
pub fn stairs_conclude(
    n: u32,
    p: u32,
    stairs_available: bool,
    torsion_free: TriState,
    degree: Option<i64>,
) -> Option<FiberDescriptor> {
    if p < 2 || 2 * p > n || !stairs_available {
        return None;
    }
    let m = n / 2;
    if m < 2 {
        return None;
    }
    let summands = if n.is_multiple_of(2) {
        let multiplicity = match degree {
            Some(d) => {
                let beta = if m.is_multiple_of(2) { d } else { d.checked_neg()? };
                Some(u64::try_from(beta).ok()?)
            }
            None => None,
        };
        vec![BouquetSummand { sphere_dim: m - 1, multiplicity }]
    } else {
        if torsion_free != TriState::True {
            return None;
        }
        vec![
            BouquetSummand { sphere_dim: m - 1, multiplicity: None },
            BouquetSummand { sphere_dim: m, multiplicity: None },
        ]
    };
    FiberDescriptor::bouquet(n - p, summands).ok()
}
