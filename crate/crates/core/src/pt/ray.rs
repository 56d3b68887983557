//! Ray space CP¹: spinor values modulo a global phase.

use super::SpinorValue;
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// A ray, held by an unnormalized representative. Two rays are equal iff
/// `|⟨ψ, φ⟩|² = |ψ|²·|φ|²`, which is exact and needs no square roots.
#[derive(Clone, Debug)]
pub struct RayPoint {
    representative: SpinorValue,
}

impl RayPoint {
    pub fn representative(&self) -> &SpinorValue {
        &self.representative
    }
}

fn inner(a: &SpinorValue, b: &SpinorValue) -> GaussianRational {
    &(&a.u.conj() * &b.u) + &(&a.v.conj() * &b.v)
}

impl PartialEq for RayPoint {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&self.representative, &other.representative);
        inner(a, b).norm_sq() == a.norm_sq() * b.norm_sq()
    }
}

impl Eq for RayPoint {}

pub fn ray_project(v: &SpinorValue) -> Result<RayPoint> {
    if v.is_zero() {
        return Err(Error::ZeroSpinor);
    }
    Ok(RayPoint { representative: v.clone() })
}
