use std::fmt;

use serde::{Deserialize, Serialize};

use super::fiber::{FiberDescriptor, TriState};
use super::euler_from_degree;
use crate::error::{Error, Result};
use crate::json;
use crate::linking::ClassificationReport;

/// How the two dimensions of a record are to be read.
///
/// * `NsPair`: a bare pair `(S^m, K)` fibering over `S^q`, recorded as
///   `source_dim = m`, `target_dim = q`.
/// * `Germ`: the NS-pair of a polynomial germ `(R^n, 0) → (R^p, 0)`,
///   recorded as `source_dim = n`, `target_dim = p`; it lives in `S^(n-1)`
///   and fibers over `S^(p-1)`.
///
/// Either way the link has dimension `source_dim - target_dim - 1` and the
/// fiber dimension `source_dim - target_dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    NsPair,
    Germ,
}

/// Symbolic invariants of an NS-pair or of the NS-pair of a map germ.
///
/// Records are immutable; constructions produce new records and append a
/// line to `provenance`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRecord", into = "RawRecord")]
pub struct NSInvariantRecord {
    pub(super) kind: RecordKind,
    pub(super) source_dim: u32,
    pub(super) target_dim: u32,
    pub(super) link_components: Option<u64>,
    pub(super) fiber: FiberDescriptor,
    pub(super) degree: Option<i64>,
    pub(super) trivial: TriState,
    pub(super) provenance: Vec<String>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawRecord {
    kind: RecordKind,
    source_dim: u32,
    target_dim: u32,
    #[serde(with = "json::exact_opt")]
    link_components: Option<u64>,
    link_dim: i64,
    fiber: FiberDescriptor,
    #[serde(with = "json::exact_opt")]
    degree: Option<i64>,
    trivial: TriState,
    provenance: Vec<String>,
}

impl From<NSInvariantRecord> for RawRecord {
    fn from(r: NSInvariantRecord) -> Self {
        RawRecord {
            kind: r.kind,
            source_dim: r.source_dim,
            target_dim: r.target_dim,
            link_components: r.link_components,
            link_dim: r.link_dim(),
            fiber: r.fiber,
            degree: r.degree,
            trivial: r.trivial,
            provenance: r.provenance,
        }
    }
}

impl TryFrom<RawRecord> for NSInvariantRecord {
    type Error = Error;

    fn try_from(raw: RawRecord) -> Result<Self> {
        let rec = NSInvariantRecord {
            kind: raw.kind,
            source_dim: raw.source_dim,
            target_dim: raw.target_dim,
            link_components: raw.link_components,
            fiber: raw.fiber,
            degree: raw.degree,
            trivial: raw.trivial,
            provenance: raw.provenance,
        };
        if raw.link_dim != rec.link_dim() {
            return Err(Error::Structure(format!(
                "link_dim {} should be source_dim - target_dim - 1 = {}",
                raw.link_dim,
                rec.link_dim()
            )));
        }
        rec.validate()?;
        Ok(rec)
    }
}

impl NSInvariantRecord {
    /// Record for a bare NS-pair `(S^sphere_dim, K)` over `S^base_dim`.
    pub fn ns_pair(
        sphere_dim: u32,
        base_dim: u32,
        link_components: Option<u64>,
        fiber: FiberDescriptor,
    ) -> Result<Self> {
        Self::build(RecordKind::NsPair, sphere_dim, base_dim, link_components, fiber, None)
    }

    /// Record for a germ `(R^n, 0) → (R^p, 0)` with an isolated singularity.
    ///
    /// For odd `n` the gradient degree is forced to 0; for even `n` a missing
    /// degree is filled in from the fiber's Euler characteristic when all
    /// Betti numbers are known.
    pub fn germ(
        n: u32,
        p: u32,
        link_components: Option<u64>,
        fiber: FiberDescriptor,
        degree: Option<i64>,
    ) -> Result<Self> {
        Self::build(RecordKind::Germ, n, p, link_components, fiber, degree)
    }

    fn build(
        kind: RecordKind,
        source_dim: u32,
        target_dim: u32,
        link_components: Option<u64>,
        fiber: FiberDescriptor,
        degree: Option<i64>,
    ) -> Result<Self> {
        let mut rec = NSInvariantRecord {
            kind,
            source_dim,
            target_dim,
            link_components,
            fiber,
            degree,
            trivial: TriState::Unknown,
            provenance: Vec::new(),
        };
        rec.validate()?;
        if kind == RecordKind::Germ && rec.degree.is_none() {
            rec.degree = rec.implied_degree();
        }
        rec.trivial = rec.implied_triviality();
        Ok(rec)
    }

    /// NS-pair record of a classified linking matrix; fails unless the
    /// bundle actually arises from an NS-pair.
    pub fn from_classification(report: &ClassificationReport) -> Result<Self> {
        if !report.is_ns_pair {
            return Err(Error::Hypothesis(format!(
                "det A = {} is not ±1, so the bundle does not arise from an NS-pair",
                report.det_a
            )));
        }
        let n = report.dimension;
        let mut rec = Self::ns_pair(2 * n - 1, n - 1, Some(report.link_components), report.fiber.clone())?;
        if report.link_components == 1 {
            // S^n minus one open ball is a disk
            rec.trivial = TriState::True;
        }
        Ok(rec.with_note(format!(
            "classify: k = {} linking matrix (sign {}), det A = {}",
            report.k,
            report.symmetry_sign.value(),
            report.det_a
        )))
    }

    pub fn kind(&self) -> RecordKind {
        self.kind
    }

    pub fn source_dim(&self) -> u32 {
        self.source_dim
    }

    pub fn target_dim(&self) -> u32 {
        self.target_dim
    }

    pub fn link_dim(&self) -> i64 {
        self.source_dim as i64 - self.target_dim as i64 - 1
    }

    pub fn link_components(&self) -> Option<u64> {
        self.link_components
    }

    pub fn fiber(&self) -> &FiberDescriptor {
        &self.fiber
    }

    pub fn degree(&self) -> Option<i64> {
        self.degree
    }

    pub fn trivial(&self) -> TriState {
        self.trivial
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    /// Appends a provenance line.
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }

    /// Overrides the triviality flag; the result must stay consistent with
    /// the fiber data.
    pub fn with_trivial(mut self, trivial: TriState) -> Result<Self> {
        self.trivial = trivial;
        self.validate()?;
        Ok(self)
    }

    /// Overrides the simple-connectivity flag of the fiber.
    pub fn with_simply_connected(mut self, flag: TriState) -> Result<Self> {
        self.fiber.simply_connected = flag;
        if flag == TriState::False && self.trivial == TriState::Unknown {
            self.trivial = TriState::False;
        }
        self.validate()?;
        Ok(self)
    }

    /// `(source_dim, target_dim)`.
    pub fn dims(&self) -> (u32, u32) {
        (self.source_dim, self.target_dim)
    }

    /// Validates a freshly assembled record and fills in a germ degree
    /// implied by the fiber.
    pub(super) fn finish(mut self) -> Result<Self> {
        self.validate()?;
        if self.kind == RecordKind::Germ && self.degree.is_none() {
            self.degree = self.implied_degree();
        }
        Ok(self)
    }

    fn implied_degree(&self) -> Option<i64> {
        if self.source_dim % 2 == 1 {
            Some(0)
        } else {
            self.fiber.euler_characteristic().map(|chi| 1 - chi)
        }
    }

    pub(super) fn implied_triviality(&self) -> TriState {
        if self.fiber.has_reduced_homology() || self.fiber.simply_connected == TriState::False {
            TriState::False
        } else if self.fiber.dim <= 3 && self.fiber.is_contractible() {
            // compact contractible manifolds of dimension <= 3 are disks
            TriState::True
        } else {
            TriState::Unknown
        }
    }

    /// Checks dimensions, fiber consistency, and the Euler characteristic
    /// relation `χ(F) = 1 - deg` (even source) or `χ(F) = 1` with degree 0
    /// (odd source) for germ records.
    pub fn validate(&self) -> Result<()> {
        if self.target_dim < 1 || self.source_dim <= self.target_dim {
            return Err(Error::Structure(format!(
                "need source_dim > target_dim >= 1, got ({}, {})",
                self.source_dim, self.target_dim
            )));
        }
        if self.fiber.dim != self.source_dim - self.target_dim {
            return Err(Error::Structure(format!(
                "fiber dimension {} should be {}",
                self.fiber.dim,
                self.source_dim - self.target_dim
            )));
        }
        self.fiber.validate()?;
        if self.trivial == TriState::True
            && (self.fiber.has_reduced_homology() || self.fiber.simply_connected == TriState::False)
        {
            return Err(Error::Contradiction(
                "a trivial (disk) fiber cannot carry reduced homology or fundamental group".into(),
            ));
        }
        match self.kind {
            RecordKind::NsPair => {
                if self.degree.is_some() {
                    return Err(Error::Structure(
                        "the gradient degree is recorded on germ records only".into(),
                    ));
                }
            }
            RecordKind::Germ => {
                if let Some(d) = self.degree {
                    let chi = euler_from_degree(self.source_dim, d)?;
                    if let Some(actual) = self.fiber.euler_characteristic() {
                        if actual != chi {
                            return Err(Error::Contradiction(format!(
                                "fiber Euler characteristic {actual} but degree {d} forces {chi}"
                            )));
                        }
                    }
                } else if self.source_dim % 2 == 1 {
                    if let Some(actual) = self.fiber.euler_characteristic() {
                        if actual != 1 {
                            return Err(Error::Contradiction(format!(
                                "odd source dimension forces χ(F) = 1, fiber has {actual}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// One-line summary, e.g. `germ (6, 3): link 5 × S^2, fiber S^3_(5) ≃ ∨^4 S^2`.
    pub fn summary(&self) -> String {
        let link = match self.link_components {
            Some(c) => format!("{c} component(s) of dim {}", self.link_dim()),
            None => format!("? components of dim {}", self.link_dim()),
        };
        let head = match self.kind {
            RecordKind::NsPair => {
                format!("NS-pair (S^{}, K) over S^{}", self.source_dim, self.target_dim)
            }
            RecordKind::Germ => format!("germ (R^{}, 0) → (R^{}, 0)", self.source_dim, self.target_dim),
        };
        let degree = self.degree.map_or("?".to_string(), |d| d.to_string());
        format!(
            "{head}: link {link}; fiber {}; degree {degree}; trivial {}",
            self.fiber, self.trivial
        )
    }
}

impl fmt::Display for NSInvariantRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}
