//! Spinor double groups of `C_nv` and `D_n`, and the isomorphism verdict
//! under both conventions for `P̂²`.
//!
//! Principal generator: `a = diag(e^{−iπ/n}, e^{iπ/n})`, the lift of a
//! rotation by `2π/n` about z. For `D_n` the second generator lifts a π
//! rotation about an in-plane axis (`−iσ₁` for x, `−iσ₂` for y). A vertical
//! mirror is parity times that rotation, so for `C_nv` the second generator
//! is `P̂_conv` times the same lift, with `P̂_conv = iI` when `P̂² = −I` and
//! `P̂_conv = I` when `P̂² = +I`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{ApproxMat2, Mat2};
use crate::scalar::ApproxComplex;
use crate::sign::Sign;
use crate::SCHEMA_VERSION;

use super::closure::{generate_approx_closure, ClosureOptions};
use super::iso::find_isomorphism;
use super::FiniteGroup;

/// Allowed range of `n`.
pub const N_RANGE: std::ops::RangeInclusive<usize> = 2..=12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointGroup {
    Cnv(usize),
    Dn(usize),
}

impl PointGroup {
    pub fn n(self) -> usize {
        match self {
            PointGroup::Cnv(n) | PointGroup::Dn(n) => n,
        }
    }
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointGroup::Cnv(n) => write!(f, "C{n}v"),
            PointGroup::Dn(n) => write!(f, "D{n}"),
        }
    }
}

/// In-plane axis of the π rotation behind the second generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReflectionAxis {
    #[default]
    X,
    Y,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleGroupConfig {
    pub axis: ReflectionAxis,
    pub closure: ClosureOptions,
}

const ZERO: ApproxComplex = ApproxComplex::new(0.0, 0.0);
const ONE: ApproxComplex = ApproxComplex::new(1.0, 0.0);
const I: ApproxComplex = ApproxComplex::new(0.0, 1.0);

fn principal_lift(n: usize) -> ApproxMat2 {
    let theta = PI / n as f64;
    Mat2::new(ApproxComplex::cis(-theta), ZERO, ZERO, ApproxComplex::cis(theta))
}

/// `−iσ₁` or `−iσ₂`.
fn half_turn_lift(axis: ReflectionAxis) -> ApproxMat2 {
    let minus_i = ApproxComplex::new(0.0, -1.0);
    let minus_one = ApproxComplex::new(-1.0, 0.0);
    match axis {
        ReflectionAxis::X => Mat2::new(ZERO, minus_i, minus_i, ZERO),
        ReflectionAxis::Y => Mat2::new(ZERO, minus_one, ONE, ZERO),
    }
}

/// `P̂_conv`: `iI` when `P̂² = −I`, `I` when `P̂² = +I`.
pub fn conventional_parity(parity_square: Sign) -> ApproxMat2 {
    match parity_square {
        Sign::Minus => Mat2::new(I, ZERO, ZERO, I),
        Sign::Plus => Mat2::identity(),
    }
}

/// The two generators used for `point_group`.
pub fn double_group_generators(point_group: PointGroup, parity_square: Sign, axis: ReflectionAxis) -> [ApproxMat2; 2] {
    let half_turn = half_turn_lift(axis);
    let second = match point_group {
        PointGroup::Dn(_) => half_turn,
        PointGroup::Cnv(_) => conventional_parity(parity_square).mul(&half_turn),
    };
    [principal_lift(point_group.n()), second]
}

/// Closure of the double-group generators over the approx backend. The
/// parity convention only affects `C_nv`.
pub fn double_group(point_group: PointGroup, parity_square: Sign, config: DoubleGroupConfig) -> Result<FiniteGroup> {
    let n = point_group.n();
    if !N_RANGE.contains(&n) {
        return Err(Error::ParameterRange(format!("n = {n} outside {}..={}", N_RANGE.start(), N_RANGE.end())));
    }
    generate_approx_closure(&double_group_generators(point_group, parity_square, config.axis), config.closure)
}

/// Outcome for one parity convention.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub n: usize,
    /// The value of `P̂²` assumed for the reflection lift.
    pub convention: Sign,
    pub isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_used: Option<String>,
    pub order: usize,
    /// Element order → count, for `C_nv` then `D_n`.
    pub cnv_order_profile: BTreeMap<usize, usize>,
    pub dn_order_profile: BTreeMap<usize, usize>,
    /// Claimed: isomorphic when `P̂² = +I`, non-isomorphic when `P̂² = −I`.
    #[serde(rename = "paper_claim_match")]
    pub claim_match: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictReport {
    pub schema_version: u32,
    pub n: usize,
    pub results: Vec<Verdict>,
}

impl VerdictReport {
    pub fn all_match_claim(&self) -> bool {
        self.results.iter().all(|v| v.claim_match)
    }
}

fn claimed_isomorphic(parity_square: Sign) -> bool {
    parity_square == Sign::Plus
}

/// Verdict for one convention.
pub fn double_group_verdict_for(n: usize, parity_square: Sign, config: DoubleGroupConfig) -> Result<Verdict> {
    let cnv = double_group(PointGroup::Cnv(n), parity_square, config)?;
    let dn = double_group(PointGroup::Dn(n), parity_square, config)?;
    let witness = find_isomorphism(&cnv, &dn)?;
    let (cp, dp) = (cnv.order_profile(), dn.order_profile());
    let invariant_used = match &witness {
        Some(_) => None,
        None if cnv.order() != dn.order() => Some("group order".to_string()),
        None if cp != dp => Some(format!(
            "element-order multiset (involutions: {} vs {})",
            cnv.involution_count(),
            dn.involution_count()
        )),
        None => Some("exhaustive generator-image search".to_string()),
    };
    let isomorphic = witness.is_some();
    Ok(Verdict {
        n,
        convention: parity_square,
        isomorphic,
        witness: witness.map(|w| w.mapping),
        invariant_used,
        order: cnv.order(),
        cnv_order_profile: cp,
        dn_order_profile: dp,
        claim_match: isomorphic == claimed_isomorphic(parity_square),
    })
}

/// Both conventions, `P̂² = +I` first.
pub fn double_group_verdict(n: usize) -> Result<VerdictReport> {
    double_group_verdict_with(n, DoubleGroupConfig::default())
}

pub fn double_group_verdict_with(n: usize, config: DoubleGroupConfig) -> Result<VerdictReport> {
    let results = [Sign::Plus, Sign::Minus]
        .into_iter()
        .map(|s| double_group_verdict_for(n, s, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerdictReport { schema_version: SCHEMA_VERSION, n, results })
}
