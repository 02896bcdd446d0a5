use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;

/// Three-valued truth for properties the tool cannot always decide.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    True,
    False,
    #[default]
    Unknown,
}

impl TriState {
    pub fn known(self) -> Option<bool> {
        match self {
            TriState::True => Some(true),
            TriState::False => Some(false),
            TriState::Unknown => None,
        }
    }

    pub fn is_unknown(self) -> bool {
        self == TriState::Unknown
    }
}

impl From<bool> for TriState {
    fn from(b: bool) -> Self {
        if b {
            TriState::True
        } else {
            TriState::False
        }
    }
}

impl From<Option<bool>> for TriState {
    fn from(b: Option<bool>) -> Self {
        b.map_or(TriState::Unknown, TriState::from)
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::True => "yes",
            TriState::False => "no",
            TriState::Unknown => "unknown",
        })
    }
}

/// `multiplicity` copies of the sphere of dimension `sphere_dim`, as one
/// wedge summand. `None` means the count is not determined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BouquetSummand {
    pub sphere_dim: u32,
    #[serde(with = "json::exact_opt")]
    pub multiplicity: Option<u64>,
}

/// Homotopy-level description of a Milnor fiber (or NS-pair fiber).
///
/// `betti` has `dim + 1` entries; `bouquet: Some(vec![])` means the fiber
/// is contractible, `None` means no bouquet structure is asserted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFiber")]
pub struct FiberDescriptor {
    pub dim: u32,
    #[serde(with = "json::exact_opt_vec")]
    pub betti: Vec<Option<u64>>,
    #[serde(with = "json::exact_opt")]
    pub boundary_components: Option<u64>,
    pub bouquet: Option<Vec<BouquetSummand>>,
    pub torsion_free_middle: TriState,
    pub simply_connected: TriState,
}

#[derive(Deserialize)]
struct RawFiber {
    dim: u32,
    #[serde(with = "json::exact_opt_vec")]
    betti: Vec<Option<u64>>,
    #[serde(with = "json::exact_opt")]
    boundary_components: Option<u64>,
    bouquet: Option<Vec<BouquetSummand>>,
    torsion_free_middle: TriState,
    simply_connected: TriState,
}

impl TryFrom<RawFiber> for FiberDescriptor {
    type Error = Error;

    fn try_from(r: RawFiber) -> Result<Self> {
        let f = FiberDescriptor {
            dim: r.dim,
            betti: r.betti,
            boundary_components: r.boundary_components,
            bouquet: r.bouquet,
            torsion_free_middle: r.torsion_free_middle,
            simply_connected: r.simply_connected,
        };
        f.validate()?;
        Ok(f)
    }
}

impl FiberDescriptor {
    /// Fiber with only connectivity known: `β0 = 1`, everything else unknown.
    pub fn unknown(dim: u32) -> Self {
        let mut betti = vec![None; dim as usize + 1];
        betti[0] = Some(1);
        FiberDescriptor {
            dim,
            betti,
            boundary_components: None,
            bouquet: None,
            torsion_free_middle: TriState::Unknown,
            simply_connected: TriState::Unknown,
        }
    }

    /// Wedge of spheres in a `dim`-manifold; Betti numbers are read off the
    /// summands. An empty summand list is a contractible fiber.
    pub fn bouquet(dim: u32, summands: Vec<BouquetSummand>) -> Result<Self> {
        let mut betti: Vec<Option<u64>> = vec![Some(0); dim as usize + 1];
        betti[0] = Some(1);
        let mut summands: Vec<BouquetSummand> =
            summands.into_iter().filter(|s| s.multiplicity != Some(0)).collect();
        summands.sort_by_key(|s| s.sphere_dim);
        for s in &summands {
            if s.sphere_dim == 0 || s.sphere_dim > dim {
                return Err(Error::InvalidArgument(format!(
                    "sphere dimension {} does not fit a {dim}-dimensional fiber",
                    s.sphere_dim
                )));
            }
            let slot = &mut betti[s.sphere_dim as usize];
            *slot = match (*slot, s.multiplicity) {
                (Some(a), Some(b)) => Some(a.checked_add(b).ok_or(Error::Overflow("betti"))?),
                _ => None,
            };
        }
        let simply_connected = match summands.iter().find(|s| s.sphere_dim == 1) {
            None => TriState::True,
            Some(s) => TriState::from(s.multiplicity.map(|m| m == 0)),
        };
        Ok(FiberDescriptor {
            dim,
            betti,
            boundary_components: None,
            bouquet: Some(summands),
            torsion_free_middle: TriState::True,
            simply_connected,
        })
    }

    /// `S^n` with the interiors of `punctures` disjoint balls removed,
    /// homotopy equivalent to a wedge of `punctures - 1` copies of `S^(n-1)`.
    pub fn punctured_sphere(n: u32, punctures: u64) -> Result<Self> {
        if n < 2 || punctures == 0 {
            return Err(Error::InvalidArgument(format!(
                "punctured sphere needs n >= 2 and at least one puncture (n = {n}, punctures = {punctures})"
            )));
        }
        let mut f = Self::bouquet(
            n,
            vec![BouquetSummand { sphere_dim: n - 1, multiplicity: Some(punctures - 1) }],
        )?;
        f.boundary_components = Some(punctures);
        Ok(f)
    }

    /// Alternating sum of the Betti numbers, when all are known.
    pub fn euler_characteristic(&self) -> Option<i64> {
        let mut chi: i64 = 0;
        for (i, b) in self.betti.iter().enumerate() {
            let b = i64::try_from((*b)?).ok()?;
            chi = if i % 2 == 0 { chi.checked_add(b)? } else { chi.checked_sub(b)? };
        }
        Some(chi)
    }

    pub fn betti_known(&self) -> bool {
        self.betti.iter().all(Option::is_some)
    }

    /// True when some reduced Betti number is known to be positive.
    pub fn has_reduced_homology(&self) -> bool {
        self.betti.iter().skip(1).any(|b| b.is_some_and(|b| b > 0))
    }

    /// Known to have the homotopy type of a point.
    pub fn is_contractible(&self) -> bool {
        matches!(&self.bouquet, Some(s) if s.is_empty())
    }

    pub fn validate(&self) -> Result<()> {
        if self.betti.len() != self.dim as usize + 1 {
            return Err(Error::Structure(format!(
                "fiber of dimension {} needs {} Betti numbers, got {}",
                self.dim,
                self.dim + 1,
                self.betti.len()
            )));
        }
        if let Some(b0) = self.betti[0] {
            if b0 != 1 {
                return Err(Error::Structure(format!("fiber must be connected, got b0 = {b0}")));
            }
        }
        if let Some(summands) = &self.bouquet {
            let rebuilt = Self::bouquet(self.dim, summands.clone())?;
            for (i, (have, want)) in self.betti.iter().zip(&rebuilt.betti).enumerate() {
                if let (Some(h), Some(w)) = (have, want) {
                    if h != w {
                        return Err(Error::Structure(format!(
                            "b{i} = {h} disagrees with the bouquet, which gives {w}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Short human-readable homotopy type, e.g. `∨^4 S^2` or `point`.
    pub fn homotopy_summary(&self) -> String {
        match &self.bouquet {
            None => "unknown homotopy type".into(),
            Some(s) if s.is_empty() => "point".into(),
            Some(s) => s
                .iter()
                .map(|t| match t.multiplicity {
                    Some(m) => format!("∨^{m} S^{}", t.sphere_dim),
                    None => format!("∨^? S^{}", t.sphere_dim),
                })
                .collect::<Vec<_>>()
                .join(" ∨ "),
        }
    }

    /// `S^n_(c)` when the descriptor is a punctured sphere with known
    /// boundary count.
    pub fn punctured_sphere_label(&self) -> Option<String> {
        let c = self.boundary_components?;
        let expected = Self::punctured_sphere(self.dim, c).ok()?;
        (expected.betti == self.betti && expected.bouquet == self.bouquet)
            .then(|| format!("S^{}_({c})", self.dim))
    }
}

impl fmt::Display for FiberDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = self.punctured_sphere_label() {
            return write!(f, "{label} ≃ {}", self.homotopy_summary());
        }
        let betti: Vec<String> =
            self.betti.iter().map(|b| b.map_or("?".to_string(), |b| b.to_string())).collect();
        write!(f, "dim {}, betti [{}], {}", self.dim, betti.join(", "), self.homotopy_summary())
    }
}
