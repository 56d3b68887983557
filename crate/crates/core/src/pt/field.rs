//! Spinor fields sampled on a finite set of spacetime events, and the
//! actions of the four components of Ĝ₀ on them:
//!
//! ```text
//! (A, 1):  ψ(t, x) ↦ A·ψ(t, π(A)x)
//! (A, −1): ψ(t, x) ↦ A·ψ(−t, x)*
//! (B, 1):  ψ(t, −x) ↦ B·ψ(t, x)
//! (B, −1): ψ(t, −x) ↦ B·T̂·ψ(−t, x)*
//! ```
//!
//! Arguments are rebound literally as written above, including the
//! `π(A)x` (not `π(A)⁻¹x`) of the proper-rotation action.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{time_reversal_operator, G0Element};
use crate::cover::{covering_map, OrthogonalMat3, UnitaryMat2};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational};
use crate::sign::Sign;
use crate::SCHEMA_VERSION;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Event {
    pub t: Rational,
    pub x: [Rational; 3],
}

impl Event {
    pub fn new(t: Rational, x: [Rational; 3]) -> Self {
        Event { t, x }
    }

    pub fn from_ints(t: i64, x: [i64; 3]) -> Self {
        Event::new(t.into(), x.map(Rational::from))
    }

    pub fn time_flipped(&self) -> Event {
        Event::new(-&self.t, self.x.clone())
    }

    pub fn space_flipped(&self) -> Event {
        Event::new(self.t.clone(), self.x.clone().map(|c| -c))
    }

    pub fn rotated(&self, r: &OrthogonalMat3) -> Event {
        Event::new(self.t.clone(), r.apply(&self.x))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {},{},{}", self.t, self.x[0], self.x[1], self.x[2])
    }
}

impl Serialize for Event {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A two-component spinor value `(u, v)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpinorValue {
    pub u: GaussianRational,
    pub v: GaussianRational,
}

impl SpinorValue {
    pub fn new(u: GaussianRational, v: GaussianRational) -> Self {
        SpinorValue { u, v }
    }

    pub fn zero() -> Self {
        SpinorValue::new(GaussianRational::zero(), GaussianRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn conj(&self) -> SpinorValue {
        SpinorValue::new(self.u.conj(), self.v.conj())
    }

    pub fn neg(&self) -> SpinorValue {
        SpinorValue::new(-&self.u, -&self.v)
    }

    pub fn scale(&self, k: &GaussianRational) -> SpinorValue {
        SpinorValue::new(k * &self.u, k * &self.v)
    }

    pub fn norm_sq(&self) -> Rational {
        self.u.norm_sq() + self.v.norm_sq()
    }

    pub fn transformed(&self, m: &UnitaryMat2) -> SpinorValue {
        let [u, v] = m.apply(&[self.u.clone(), self.v.clone()]);
        SpinorValue::new(u, v)
    }

    pub fn components(&self) -> [GaussianRational; 2] {
        [self.u.clone(), self.v.clone()]
    }
}

impl fmt::Display for SpinorValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.u, self.v)
    }
}

/// A spinor field known exactly on a finite set of events.
///
/// The domain is closed under `t ↦ −t`, `x ↦ −x` and `x ↦ Rx` for every `R`
/// in `closure_group`; samples iterate in lexicographic event order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorSampleField {
    samples: BTreeMap<Event, SpinorValue>,
    closure_group: Vec<OrthogonalMat3>,
}

impl SpinorSampleField {
    pub fn new(samples: BTreeMap<Event, SpinorValue>) -> Result<Self> {
        SpinorSampleField::with_closure_group(samples, Vec::new())
    }

    pub fn with_closure_group(
        samples: BTreeMap<Event, SpinorValue>,
        closure_group: Vec<OrthogonalMat3>,
    ) -> Result<Self> {
        for event in samples.keys() {
            let mut needed = vec![event.time_flipped(), event.space_flipped()];
            needed.extend(closure_group.iter().map(|r| event.rotated(r)));
            if let Some(missing) = needed.into_iter().find(|e| !samples.contains_key(e)) {
                return Err(Error::DomainNotClosed(missing.to_string()));
            }
        }
        Ok(SpinorSampleField { samples, closure_group })
    }

    /// Same value at every event of `domain`, closed under both flips.
    pub fn constant(value: SpinorValue, domain: &[Event]) -> Result<Self> {
        let mut samples = BTreeMap::new();
        for e in domain {
            for d in [e.clone(), e.time_flipped(), e.space_flipped(), e.time_flipped().space_flipped()] {
                samples.insert(d, value.clone());
            }
        }
        SpinorSampleField::new(samples)
    }

    pub fn samples(&self) -> &BTreeMap<Event, SpinorValue> {
        &self.samples
    }

    pub fn closure_group(&self) -> &[OrthogonalMat3] {
        &self.closure_group
    }

    pub fn get(&self, e: &Event) -> Option<&SpinorValue> {
        self.samples.get(e)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn negated(&self) -> SpinorSampleField {
        self.map_values(SpinorValue::neg)
    }

    pub fn map_values(&self, f: impl Fn(&SpinorValue) -> SpinorValue) -> SpinorSampleField {
        SpinorSampleField {
            samples: self.samples.iter().map(|(e, v)| (e.clone(), f(v))).collect(),
            closure_group: self.closure_group.clone(),
        }
    }

    /// `g(e) = value(f(source(e)))` for every event of the domain.
    fn rebind(
        &self,
        source: impl Fn(&Event) -> Event,
        value: impl Fn(&SpinorValue) -> SpinorValue,
    ) -> Result<SpinorSampleField> {
        let mut samples = BTreeMap::new();
        for event in self.samples.keys() {
            let from = source(event);
            let v = self.samples.get(&from).ok_or_else(|| Error::DomainNotClosed(from.to_string()))?;
            samples.insert(event.clone(), value(v));
        }
        Ok(SpinorSampleField { samples, closure_group: self.closure_group.clone() })
    }
}

impl fmt::Display for SpinorSampleField {
    /// One `t; x1,x2,x3; u; v` line per sample.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, v) in &self.samples {
            writeln!(f, "{e}; {v}")?;
        }
        Ok(())
    }
}

impl FromStr for SpinorSampleField {
    type Err = Error;

    /// Blank lines and lines starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut samples = BTreeMap::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (event, value) = parse_sample(line).map_err(|e| e.at_line(idx + 1))?;
            if samples.insert(event.clone(), value).is_some() {
                return Err(Error::parse(format!("duplicate event {event}")).at_line(idx + 1));
            }
        }
        SpinorSampleField::new(samples)
    }
}

fn parse_sample(line: &str) -> Result<(Event, SpinorValue)> {
    let parts: Vec<&str> = line.split(';').map(str::trim).collect();
    let [t, x, u, v] = parts.as_slice() else {
        return Err(Error::parse(format!("expected `t; x1,x2,x3; u; v`, got `{line}`")));
    };
    let coords = x.split(',').map(str::parse).collect::<Result<Vec<Rational>>>()?;
    let x: [Rational; 3] = coords
        .try_into()
        .map_err(|_| Error::parse(format!("expected three coordinates in `{x}`")))?;
    Ok((Event::new(t.parse()?, x), SpinorValue::new(u.parse()?, v.parse()?)))
}

fn require_det(m: &UnitaryMat2, expected: Sign) -> Result<()> {
    if m.det_sign() == expected {
        Ok(())
    } else {
        Err(Error::DeterminantMismatch { expected: expected.value(), actual: m.det_sign().value() })
    }
}

/// `(A, 1)`: `g(t, x) = A·f(t, π(A)x)`.
pub fn act_proper(a: &UnitaryMat2, f: &SpinorSampleField) -> Result<SpinorSampleField> {
    require_det(a, Sign::Plus)?;
    let rot = covering_map(a)?;
    f.rebind(|e| e.rotated(&rot), |v| v.transformed(a))
}

/// `(A, −1)`: `g(t, x) = A·conj(f(−t, x))`.
pub fn act_time_reversal(a: &UnitaryMat2, f: &SpinorSampleField) -> Result<SpinorSampleField> {
    require_det(a, Sign::Plus)?;
    f.rebind(Event::time_flipped, |v| v.conj().transformed(a))
}

/// `(B, 1)`: `g(t, y) = B·f(t, −y)`.
pub fn act_parity(b: &UnitaryMat2, f: &SpinorSampleField) -> Result<SpinorSampleField> {
    require_det(b, Sign::Minus)?;
    f.rebind(Event::space_flipped, |v| v.transformed(b))
}

/// `(B, −1)`: `g(t, y) = B·T̂·conj(f(−t, −y))`.
pub fn act_parity_time(b: &UnitaryMat2, f: &SpinorSampleField) -> Result<SpinorSampleField> {
    require_det(b, Sign::Minus)?;
    let bt = b.mul(&time_reversal_operator());
    f.rebind(|e| e.time_flipped().space_flipped(), |v| v.conj().transformed(&bt))
}

/// Dispatch on `(det c, a)`.
pub fn act_g0(g: &G0Element, f: &SpinorSampleField) -> Result<SpinorSampleField> {
    match (g.c_part.det_sign(), g.a_part) {
        (Sign::Plus, Sign::Plus) => act_proper(&g.c_part, f),
        (Sign::Plus, Sign::Minus) => act_time_reversal(&g.c_part, f),
        (Sign::Minus, Sign::Plus) => act_parity(&g.c_part, f),
        (Sign::Minus, Sign::Minus) => act_parity_time(&g.c_part, f),
    }
}

/// The matrix multiplying the (possibly conjugated) spinor value under `g`.
fn value_matrix(g: &G0Element) -> UnitaryMat2 {
    match (g.c_part.det_sign(), g.a_part) {
        (Sign::Minus, Sign::Minus) => g.c_part.mul(&time_reversal_operator()),
        _ => g.c_part.clone(),
    }
}

/// How acting with `h` then `g` compares with acting with `g·h`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DefectReport {
    pub schema_version: u32,
    pub pair: [G0Element; 2],
    /// `act(g, act(h, f)) = act(g·h, f)` at every event.
    pub law_holds: bool,
    /// `λ` with `act(g, act(h, f)) = λ·act(g·h, f)` everywhere, when the law
    /// fails and such a uniform factor exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign_defect: Option<GaussianRational>,
    /// Events where the two sides differ.
    pub witnesses: Vec<Event>,
    /// Value matrix of the double action: `M(g)·M(h)`, with `M(h)`
    /// conjugated when `g` reverses time.
    pub twisted_matrix: UnitaryMat2,
    /// Value matrix of the single action by `g·h`.
    pub product_matrix: UnitaryMat2,
}

pub fn composition_defect(g: &G0Element, h: &G0Element, f: &SpinorSampleField) -> Result<DefectReport> {
    let twice = act_g0(g, &act_g0(h, f)?)?;
    let once = act_g0(&g.mul(h), f)?;

    let witnesses: Vec<Event> = twice
        .samples
        .iter()
        .filter(|(e, v)| once.samples.get(e) != Some(v))
        .map(|(e, _)| e.clone())
        .collect();
    let law_holds = witnesses.is_empty();
    let sign_defect = if law_holds { None } else { uniform_ratio(&twice, &once) };

    let mh = value_matrix(h);
    let mh = if g.a_part == Sign::Minus { mh.conj() } else { mh };
    Ok(DefectReport {
        schema_version: SCHEMA_VERSION,
        pair: [g.clone(), h.clone()],
        law_holds,
        sign_defect,
        witnesses,
        twisted_matrix: value_matrix(g).mul(&mh),
        product_matrix: value_matrix(&g.mul(h)),
    })
}

/// `λ` with `lhs = λ·rhs` at every event, if one exists.
fn uniform_ratio(lhs: &SpinorSampleField, rhs: &SpinorSampleField) -> Option<GaussianRational> {
    let (num, den) = rhs.samples.iter().find_map(|(e, v)| {
        let l = lhs.samples.get(e)?;
        if !v.u.is_zero() {
            Some((l.u.clone(), v.u.clone()))
        } else if !v.v.is_zero() {
            Some((l.v.clone(), v.v.clone()))
        } else {
            None
        }
    })?;
    let lambda = &num * &den.inv()?;
    let uniform = rhs.samples.iter().all(|(e, v)| lhs.samples.get(e) == Some(&v.scale(&lambda)));
    uniform.then_some(lambda)
}
