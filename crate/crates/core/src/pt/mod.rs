//! Ĝ₀ = S±U(2) × Z2, the double cover of O(3) × Z2, with the spinor parity
//! `P̂` and time reversal `T̂`.

mod field;
mod ray;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cover::{big_pi, covering_map, parity_operator, OrthogonalMat3, UnitaryMat2};
use crate::error::{Error, Result};
use crate::semidirect::{compose, psi, psi_inverse, SemidirectElement};
use crate::sign::Sign;

pub use field::{
    act_g0, act_parity, act_parity_time, act_proper, act_time_reversal, composition_defect, DefectReport, Event,
    SpinorSampleField, SpinorValue,
};
pub use ray::{ray_project, RayPoint};

/// `(C, a)` with `C ∈ S±U(2)` and `a ∈ {+1, −1}`; `a = −1` reverses time.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct G0Element {
    pub c_part: UnitaryMat2,
    pub a_part: Sign,
}

impl G0Element {
    pub fn new(c_part: UnitaryMat2, a_part: Sign) -> Self {
        G0Element { c_part, a_part }
    }

    pub fn identity() -> Self {
        G0Element::new(UnitaryMat2::identity(), Sign::Plus)
    }

    pub fn mul(&self, rhs: &G0Element) -> G0Element {
        G0Element::new(self.c_part.mul(&rhs.c_part), self.a_part * rhs.a_part)
    }

    pub fn inverse(&self) -> G0Element {
        G0Element::new(self.c_part.inverse(), self.a_part)
    }

    /// `(P̂, +1)`
    pub fn parity() -> Self {
        G0Element::new(parity_operator(), Sign::Plus)
    }

    /// `(T̂, −1)`
    pub fn time_reversal() -> Self {
        G0Element::new(time_reversal_operator(), Sign::Minus)
    }

    /// `(P̂T̂, −1)`
    pub fn parity_time() -> Self {
        G0Element::new(parity_operator().mul(&time_reversal_operator()), Sign::Minus)
    }
}

impl fmt::Display for G0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.c_part, self.a_part)
    }
}

impl FromStr for G0Element {
    type Err = Error;

    /// `MATRIX@a`, e.g. `0,-1;1,0@-1`. A bare matrix means `a = +1`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().rsplit_once('@') {
            Some((m, a)) => Ok(G0Element::new(m.parse()?, a.parse()?)),
            None => Ok(G0Element::new(s.parse()?, Sign::Plus)),
        }
    }
}

impl Serialize for G0Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(𝒪, a) ∈ O(3) × Z2`, acting as `x ↦ 𝒪x`, `t ↦ a·t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpacetimeSymmetry {
    pub spatial: OrthogonalMat3,
    pub time_sign: Sign,
}

impl SpacetimeSymmetry {
    pub fn new(spatial: OrthogonalMat3, time_sign: Sign) -> Self {
        SpacetimeSymmetry { spatial, time_sign }
    }

    pub fn identity() -> Self {
        SpacetimeSymmetry::new(OrthogonalMat3::identity(), Sign::Plus)
    }

    /// `P = (−I₃, +1)`
    pub fn parity() -> Self {
        SpacetimeSymmetry::new(OrthogonalMat3::inversion(), Sign::Plus)
    }

    /// `T = (I₃, −1)`
    pub fn time_reversal() -> Self {
        SpacetimeSymmetry::new(OrthogonalMat3::identity(), Sign::Minus)
    }

    pub fn mul(&self, rhs: &SpacetimeSymmetry) -> SpacetimeSymmetry {
        SpacetimeSymmetry::new(self.spatial.mul(&rhs.spatial), self.time_sign * rhs.time_sign)
    }
}

impl fmt::Display for SpacetimeSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.spatial, self.time_sign)
    }
}

impl Serialize for SpacetimeSymmetry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `T̂ = ((0, −1), (1, 0)) = −iσ₂`, with `T̂² = −I` and `π(T̂) = R_y(π)`.
pub fn time_reversal_operator() -> UnitaryMat2 {
    UnitaryMat2::sigma2().times_i().neg()
}

/// The 2→1 projection `q: Ĝ₀ → O(3) × Z2`:
///
/// ```text
/// q(A, 1)  = (π(A), 1)      q(A, −1)  = (π(A)·R_y(π), −1)
/// q(AP̂, 1) = (−π(A), 1)     q(AP̂, −1) = (−π(A)·R_y(π), −1)
/// ```
///
/// `q` respects products only when the right-hand factor's spatial image
/// commutes with `R_y(π)` or the left factor preserves time; see
/// [`q_product_law_holds`].
pub fn q_projection(g: &G0Element) -> SpacetimeSymmetry {
    let (a, improper) = match g.c_part.det_sign() {
        Sign::Plus => (g.c_part.clone(), false),
        Sign::Minus => (g.c_part.mul(&parity_operator().inverse()), true),
    };
    let rot = covering_map(&a).expect("factor has det +1");
    let rot = if improper { rot.neg() } else { rot };
    let spatial = match g.a_part {
        Sign::Plus => rot,
        Sign::Minus => rot.mul(&OrthogonalMat3::rotation_y_pi()),
    };
    SpacetimeSymmetry::new(spatial, g.a_part)
}

/// Whether `q(g·h) = q(g)·q(h)` is guaranteed by the algebra of `q`: true
/// when `g` preserves time or `Π(c_h)` commutes with `R_y(π)`.
pub fn q_product_law_holds(g: &G0Element, h: &G0Element) -> bool {
    let r = OrthogonalMat3::rotation_y_pi();
    let ph = big_pi(&h.c_part);
    g.a_part == Sign::Plus || r.mul(&ph) == ph.mul(&r)
}

/// The 16 elements `{±I, ±P̂, ±T̂, ±P̂T̂} × {±1}`.
pub fn lifted_subgroup() -> Vec<G0Element> {
    let p = parity_operator();
    let t = time_reversal_operator();
    let pt = p.mul(&t);
    let mats: Vec<UnitaryMat2> =
        [UnitaryMat2::identity(), p, t, pt].into_iter().flat_map(|m| [m.neg(), m]).collect();
    Sign::BOTH
        .iter()
        .flat_map(|&a| mats.iter().map(move |m| G0Element::new(m.clone(), a)))
        .collect()
}

/// `((A, B), a) ∈ (SU(2) ⊙ Z2) × Z2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemidirectPair {
    pub inner: SemidirectElement,
    pub time: Sign,
}

impl SemidirectPair {
    pub fn new(inner: SemidirectElement, time: Sign) -> Self {
        SemidirectPair { inner, time }
    }

    /// `((A′, B′), a′)·((A, B), a) = ((A′B′AB′⁻¹, B′B), a′a)`.
    pub fn mul(&self, rhs: &SemidirectPair) -> SemidirectPair {
        SemidirectPair::new(compose(&self.inner, &rhs.inner), self.time * rhs.time)
    }
}

impl fmt::Display for SemidirectPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.inner, self.time)
    }
}

/// `Φ((A, B), a) = (AB, a)`.
pub fn phi_iso(e: &SemidirectElement, a: Sign) -> G0Element {
    G0Element::new(psi(e), a)
}

pub fn phi_iso_inverse(g: &G0Element) -> SemidirectPair {
    SemidirectPair::new(psi_inverse(&g.c_part), g.a_part)
}

/// `Q = q∘Φ`.
pub fn big_q(e: &SemidirectElement, a: Sign) -> SpacetimeSymmetry {
    q_projection(&phi_iso(e, a))
}
