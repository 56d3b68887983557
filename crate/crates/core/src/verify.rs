//! Seeded invariant suites. Every sample is drawn from a ChaCha stream keyed
//! by the seed, so a report is a pure function of `(suite, seed, samples)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cover::{big_pi, covering_map, parity_operator, verify_exact_sequence, OrthogonalMat3, UnitaryMat2};
use crate::error::{Error, Result};
use crate::finite::{
    abstract_group, double_group_verdict, find_isomorphism, gpt_hat, gpt_spacetime, verify_isomorphism, GroupKind,
};
use crate::pt::{
    act_parity, act_proper, act_time_reversal, lifted_subgroup, q_product_law_holds, q_projection, ray_project,
    time_reversal_operator, Event, G0Element, SpacetimeSymmetry, SpinorSampleField, SpinorValue,
};
use crate::report::Assertion;
use crate::scalar::GaussianRational;
use crate::sampling::Sampler;
use crate::semidirect::{compose, pi_odot, psi, psi_inverse, SemidirectElement};
use crate::sign::Sign;
use crate::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Cover,
    Semidirect,
    PtGroup,
    Finite,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Cover => "cover",
            Suite::Semidirect => "semidirect",
            Suite::PtGroup => "ptgroup",
            Suite::Finite => "finite",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Suite::Cover, Suite::Semidirect, Suite::PtGroup, Suite::Finite, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub all_pass: bool,
    pub assertions: Vec<Assertion>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.pass)
    }
}

/// Runs `suite`; each sub-suite gets its own stream derived from `seed`.
pub fn run_suite(suite: Suite, seed: u64, samples: usize) -> VerifyReport {
    let parts: &[Suite] = match suite {
        Suite::All => &[Suite::Cover, Suite::Semidirect, Suite::PtGroup, Suite::Finite],
        _ => std::slice::from_ref(&suite),
    };
    let mut assertions = Vec::new();
    for (k, &part) in parts.iter().enumerate() {
        let mut rng = Sampler::new(seed.wrapping_add(k as u64));
        let found = match part {
            Suite::Cover => cover_suite(&mut rng, samples),
            Suite::Semidirect => semidirect_suite(&mut rng, samples),
            Suite::PtGroup => ptgroup_suite(&mut rng, samples),
            Suite::Finite => finite_suite(),
            Suite::All => unreachable!(),
        };
        assertions.extend(found.into_iter().map(|mut a| {
            a.assertion = format!("{}: {}", part.name(), a.assertion);
            a
        }));
    }
    VerifyReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.name().to_string(),
        seed,
        samples,
        all_pass: assertions.iter().all(|a| a.pass),
        assertions,
    }
}

/// S±U(2) elements `{±I, ±P̂, ±T̂, ±P̂T̂}`.
pub fn order_eight_group() -> Vec<UnitaryMat2> {
    let p = parity_operator();
    let t = time_reversal_operator();
    let pt = p.mul(&t);
    [UnitaryMat2::identity(), p, t, pt].into_iter().flat_map(|m| [m.clone(), m.neg()]).collect()
}

fn first<T>(items: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> bool, show: impl Fn(&T) -> String) -> Option<String> {
    items.into_iter().find(|x| bad(x)).map(|x| show(&x))
}

fn cover_suite(rng: &mut Sampler, samples: usize) -> Vec<Assertion> {
    let pairs: Vec<(UnitaryMat2, UnitaryMat2)> = (0..samples).map(|_| (rng.su2(), rng.su2())).collect();
    let pi = |a: &UnitaryMat2| covering_map(a).expect("SU(2) sample");
    let mut out = Vec::new();

    out.push(Assertion::from_counterexample(
        "pi(AB) = pi(A)pi(B)",
        first(&pairs, |(a, b)| pi(&a.mul(b)) != pi(a).mul(&pi(b)), |(a, b)| format!("A = {a}, B = {b}")),
    ));
    out.push(Assertion::from_counterexample(
        "pi(A) = pi(-A)",
        first(&pairs, |(a, _)| pi(a) != pi(&a.neg()), |(a, _)| format!("A = {a}")),
    ));
    out.push(Assertion::from_counterexample(
        "pi(A) orthogonal with det +1",
        first(
            &pairs,
            |(a, _)| {
                let r = pi(a);
                r.det_sign() != Sign::Plus || !r.matrix().mul(&r.matrix().transpose()).is_identity()
            },
            |(a, _)| format!("A = {a}"),
        ),
    ));

    let spm: Vec<(UnitaryMat2, UnitaryMat2)> = (0..samples).map(|_| (rng.spm_u2(), rng.spm_u2())).collect();
    out.push(Assertion::from_counterexample(
        "Pi(CD) = Pi(C)Pi(D) on S+-U(2)",
        first(
            &spm,
            |(c, d)| big_pi(&c.mul(d)) != big_pi(c).mul(&big_pi(d)),
            |(c, d)| format!("C = {c}, D = {d}"),
        ),
    ));

    let pool: Vec<UnitaryMat2> = spm.iter().map(|(c, _)| c.clone()).chain(order_eight_group()).collect();
    let kernel: Vec<&UnitaryMat2> = pool.iter().filter(|c| big_pi(c).is_identity()).collect();
    let kernel_ok = kernel.iter().all(|c| **c == UnitaryMat2::identity() || **c == UnitaryMat2::minus_identity())
        && kernel.contains(&&UnitaryMat2::identity())
        && kernel.contains(&&UnitaryMat2::minus_identity());
    out.push(Assertion::check("ker(Pi) = {I, -I} on samples and the order-8 group", kernel_ok, || {
        kernel.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ; ")
    }));

    out.push(Assertion::check(
        "Pi(P) = -I3",
        big_pi(&parity_operator()) == OrthogonalMat3::inversion(),
        || big_pi(&parity_operator()).to_string(),
    ));

    let seq: Vec<UnitaryMat2> = spm.iter().flat_map(|(c, d)| [c.clone(), d.clone()]).collect();
    out.extend(verify_exact_sequence(&seq));
    out
}

fn semidirect_suite(rng: &mut Sampler, samples: usize) -> Vec<Assertion> {
    let mut draw = || psi_inverse(&rng.spm_u2());
    let pairs: Vec<(SemidirectElement, SemidirectElement)> = (0..samples).map(|_| (draw(), draw())).collect();
    let mut out = Vec::new();

    out.push(Assertion::from_counterexample(
        "Psi(e1 e2) = Psi(e1)Psi(e2)",
        first(&pairs, |(x, y)| psi(&compose(x, y)) != psi(x).mul(&psi(y)), |(x, y)| format!("{x} * {y}")),
    ));
    out.push(Assertion::from_counterexample(
        "Psi^-1(Psi(e)) = e on samples",
        first(&pairs, |(x, _)| psi_inverse(&psi(x)) != *x, |(x, _)| x.to_string()),
    ));
    let group = order_eight_group();
    out.push(Assertion::from_counterexample(
        "Psi(Psi^-1(C)) = C on the order-8 group",
        first(&group, |c| psi(&psi_inverse(c)) != **c, |c| c.to_string()),
    ));
    out.push(Assertion::from_counterexample(
        "Pi_odot = Pi o Psi on the order-8 group",
        first(&group, |c| pi_odot(&psi_inverse(c)) != big_pi(c), |c| c.to_string()),
    ));
    out.push(Assertion::from_counterexample(
        "Pi_odot = Pi o Psi on samples",
        first(&pairs, |(x, _)| pi_odot(x) != big_pi(&psi(x)), |(x, _)| x.to_string()),
    ));
    out
}

fn sample_g0(rng: &mut Sampler) -> G0Element {
    let c = rng.spm_u2();
    let a = if rng.coin() { Sign::Plus } else { Sign::Minus };
    G0Element::new(c, a)
}

/// A random field on a domain closed under `t ↦ −t` and `x ↦ −x`.
pub fn sample_field(rng: &mut Sampler, points: usize) -> SpinorSampleField {
    let mut samples = BTreeMap::new();
    for _ in 0..points {
        let e = Event::new(rng.rational(), [rng.rational(), rng.rational(), rng.rational()]);
        for ev in [e.clone(), e.time_flipped(), e.space_flipped(), e.time_flipped().space_flipped()] {
            let value = SpinorValue::new(rng.gaussian(), rng.gaussian());
            samples.entry(ev).or_insert(value);
        }
    }
    SpinorSampleField::new(samples).expect("domain closed under both flips")
}

fn ptgroup_suite(rng: &mut Sampler, samples: usize) -> Vec<Assertion> {
    let mut out = Vec::new();
    let hom_fails = |g: &G0Element, h: &G0Element| q_projection(&g.mul(h)) != q_projection(g).mul(&q_projection(h));

    let lifted = lifted_subgroup();
    let bad = lifted
        .iter()
        .flat_map(|g| lifted.iter().map(move |h| (g, h)))
        .find(|(g, h)| hom_fails(g, h))
        .map(|(g, h)| format!("g = {g}, h = {h}"));
    out.push(Assertion::from_counterexample("q(gh) = q(g)q(h) on the lifted subgroup", bad));

    let pairs: Vec<(G0Element, G0Element)> = (0..samples).map(|_| (sample_g0(rng), sample_g0(rng))).collect();
    out.push(Assertion::from_counterexample(
        "q(gh) = q(g)q(h) on sampled pairs",
        first(&pairs, |(g, h)| hom_fails(g, h), |(g, h)| {
            format!("g = {g}, h = {h}: q(gh) = {}, q(g)q(h) = {}", q_projection(&g.mul(h)), q_projection(g).mul(&q_projection(h)))
        }),
    ));
    out.push(Assertion::from_counterexample(
        "q(gh) = q(g)q(h) exactly when a_g = +1 or Pi(c_h) commutes with R_y(pi)",
        first(&pairs, |(g, h)| hom_fails(g, h) == q_product_law_holds(g, h), |(g, h)| format!("g = {g}, h = {h}")),
    ));

    out.push(Assertion::check(
        "q(T, -1) = (I3, -1)",
        q_projection(&G0Element::time_reversal()) == SpacetimeSymmetry::time_reversal(),
        || q_projection(&G0Element::time_reversal()).to_string(),
    ));
    let pt_image = SpacetimeSymmetry::new(OrthogonalMat3::inversion(), Sign::Minus);
    out.push(Assertion::check(
        "q(PT, -1) = (-I3, -1)",
        q_projection(&G0Element::parity_time()) == pt_image,
        || q_projection(&G0Element::parity_time()).to_string(),
    ));

    let fields: Vec<SpinorSampleField> = (0..8).map(|_| sample_field(rng, 4)).collect();
    let p = parity_operator();
    let t = time_reversal_operator();
    let minus = UnitaryMat2::minus_identity();
    type Action = fn(&UnitaryMat2, &SpinorSampleField) -> Result<SpinorSampleField>;
    let twice_negates = |name: &str, act: Action, m: &UnitaryMat2| {
        let bad = fields.iter().position(|f| {
            let twice = act(m, f).and_then(|g| act(m, &g));
            twice.map(|g| g != f.negated()).unwrap_or(true)
        });
        Assertion::from_counterexample(name, bad.map(|i| format!("field #{i}")))
    };
    out.push(twice_negates("applying P twice negates the field", act_parity, &p));
    out.push(twice_negates("applying T twice negates the field", act_time_reversal, &t));
    let bad = fields.iter().position(|f| act_proper(&minus, f).map(|g| g != f.negated()).unwrap_or(true));
    out.push(Assertion::from_counterexample("(-I, +1) negates the field", bad.map(|i| format!("field #{i}"))));

    let spinors: Vec<SpinorValue> = (0..samples.max(1))
        .map(|_| {
            let [u, v] = rng.unit_spinor();
            SpinorValue::new(u, v)
        })
        .collect();
    out.push(Assertion::from_counterexample(
        "P psi and psi are the same ray",
        first(
            &spinors,
            |s| ray_project(&s.transformed(&p)).ok() != ray_project(s).ok(),
            |s| s.to_string(),
        ),
    ));
    let up = SpinorValue::new(GaussianRational::one(), GaussianRational::zero());
    let down = SpinorValue::new(GaussianRational::zero(), GaussianRational::one());
    out.push(Assertion::check("(1,0) and (0,1) are different rays", ray_project(&up).ok() != ray_project(&down).ok(), || {
        "rays coincide".to_string()
    }));
    out
}

fn finite_suite() -> Vec<Assertion> {
    let mut out = Vec::new();
    let iso_check = |name: &str, g: Result<crate::finite::FiniteGroup>, kind: GroupKind| {
        let verdict = g.and_then(|g| {
            let h = abstract_group(&kind)?;
            Ok(find_isomorphism(&g, &h)?.is_some_and(|w| verify_isomorphism(&g, &h, &w.mapping)))
        });
        match verdict {
            Ok(ok) => Assertion::check(name, ok, || "no isomorphism found".into()),
            Err(e) => Assertion::fail(name, e.to_string()),
        }
    };
    let z = |n| Box::new(GroupKind::Cyclic(n));
    out.push(iso_check("G_PT-hat is isomorphic to Z4xZ2", gpt_hat(), GroupKind::DirectProduct(z(4), z(2))));
    out.push(iso_check("G_PT is isomorphic to Z2xZ2", gpt_spacetime(), GroupKind::DirectProduct(z(2), z(2))));

    for n in [2, 3, 4, 6] {
        let name = format!("double groups C{n}v / D{n} match the claimed verdicts");
        out.push(match double_group_verdict(n) {
            Ok(r) => Assertion::check(name, r.all_match_claim(), || {
                serde_json::to_string(&r.results).unwrap_or_default()
            }),
            Err(e) => Assertion::fail(name, e.to_string()),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        assert_eq!("ptgroup".parse::<Suite>().unwrap(), Suite::PtGroup);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn cover_and_semidirect_pass() {
        for s in [Suite::Cover, Suite::Semidirect, Suite::Finite] {
            let r = run_suite(s, 7, 50);
            assert!(r.all_pass, "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn only_sampled_q_law_fails_in_ptgroup() {
        let r = run_suite(Suite::PtGroup, 42, 200);
        let failing: Vec<&str> = r.failures().map(|a| a.assertion.as_str()).collect();
        assert_eq!(failing, ["ptgroup: q(gh) = q(g)q(h) on sampled pairs"]);
    }

    #[test]
    fn deterministic() {
        let a = serde_json::to_string(&run_suite(Suite::All, 42, 30)).unwrap();
        let b = serde_json::to_string(&run_suite(Suite::All, 42, 30)).unwrap();
        assert_eq!(a, b);
    }
}
