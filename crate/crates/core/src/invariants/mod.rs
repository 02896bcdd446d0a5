//! Bookkeeping of NS-pair and Milnor fiber invariants.
//!
//! Nothing here constructs manifolds; records carry exactly the data the
//! constructions and criteria determine, with tri-state flags wherever the
//! answer depends on information (fundamental groups, torsion) the tool
//! cannot compute.

mod constructions;
mod fiber;
mod record;

pub use constructions::{
    compose_projection, higher_dim_construct, looijenga_sum, spun, stairs_conclude, triviality_check,
    TrivialityVerdict,
};
pub use fiber::{BouquetSummand, FiberDescriptor, TriState};
pub use record::{NSInvariantRecord, RecordKind};

use crate::error::{Error, Result};

/// Euler characteristic of the Milnor fiber of a germ `(R^n, 0) → (R^p, 0)`
/// from the local degree of the gradient of its first component:
/// `1 - degree` for even `n`, `1` for odd `n` (where the degree must vanish).
pub fn euler_from_degree(n: u32, degree: i64) -> Result<i64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "source dimension must be at least 3 (n > p >= 2), got {n}"
        )));
    }
    if n.is_multiple_of(2) {
        1i64.checked_sub(degree).ok_or(Error::Overflow("euler characteristic"))
    } else if degree != 0 {
        Err(Error::Contradiction(format!(
            "gradient degrees vanish for odd source dimension, got {degree} with n = {n}"
        )))
    } else {
        Ok(1)
    }
}

/// Milnor fiber of a germ `(R^2n, 0) → (R^n, 0)`: a wedge of
/// `(-1)^n · degree` spheres of dimension `n - 1`.
pub fn bouquet_even(n: u32, degree: i64) -> Result<FiberDescriptor> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    let beta = if n.is_multiple_of(2) { degree } else { degree.checked_neg().ok_or(Error::Overflow("degree"))? };
    if beta < 0 {
        return Err(Error::ImpossibleDegree(format!(
            "degree {degree} would give b{} = {beta} < 0",
            n - 1
        )));
    }
    FiberDescriptor::bouquet(
        n,
        vec![BouquetSummand { sphere_dim: n - 1, multiplicity: Some(beta as u64) }],
    )
}

/// Milnor fiber of a germ `(R^(2n+1), 0) → (R^n, 0)` with `b(n-1) = beta`.
///
/// `b(n) = b(n-1)` always; the fiber is the wedge of `beta` copies of
/// `S^(n-1) ∨ S^n` exactly when `H_(n-1)` is torsion free, otherwise no
/// bouquet is asserted.
pub fn bouquet_odd(n: u32, beta: i64, torsion_free: bool) -> Result<FiberDescriptor> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need n >= 3, got {n}")));
    }
    if beta < 0 {
        return Err(Error::InvalidArgument(format!("Betti number {beta} is negative")));
    }
    let beta = beta as u64;
    if torsion_free {
        return FiberDescriptor::bouquet(
            n + 1,
            vec![
                BouquetSummand { sphere_dim: n - 1, multiplicity: Some(beta) },
                BouquetSummand { sphere_dim: n, multiplicity: Some(beta) },
            ],
        );
    }
    let mut betti = vec![Some(0); n as usize + 2];
    betti[0] = Some(1);
    betti[n as usize - 1] = Some(beta);
    betti[n as usize] = Some(beta);
    Ok(FiberDescriptor {
        dim: n + 1,
        betti,
        boundary_components: None,
        bouquet: None,
        torsion_free_middle: TriState::False,
        simply_connected: TriState::True,
    })
}
