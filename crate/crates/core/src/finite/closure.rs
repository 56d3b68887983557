//! Breadth-first closure of a generating set.
//!
//! Element order: the identity first, then each breadth-first layer (words
//! of length k that were not reached earlier) sorted lexicographically.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{ApproxMat2, ExactMat2, Mat2};
use crate::pt::SpacetimeSymmetry;
use crate::scalar::{Scalar, DEFAULT_TOLERANCE};

use super::{ElementSource, FiniteGroup};

pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// Factor applied to the tolerance for the minimum allowed distance between
/// distinct approx elements.
const SEPARATION_FACTOR: f64 = 100.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosureOptions {
    pub max_order: usize,
    pub tolerance: f64,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { max_order: DEFAULT_MAX_ORDER, tolerance: DEFAULT_TOLERANCE }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Approx,
}

/// What the closure engine needs from a group element.
pub trait ClosureElement: Clone {
    fn product(&self, rhs: &Self) -> Self;
    fn same_as(&self, other: &Self, tol: f64) -> bool;
    fn order_cmp(&self, other: &Self, tol: f64) -> Ordering;
    /// Hashable key when equality is exact; `None` forces linear lookup.
    fn exact_key(&self) -> Option<String>;
    /// Distance used by the separation audit; `None` skips the audit.
    fn separation(&self, other: &Self) -> Option<f64>;
    fn label(&self) -> String;
}

impl<S: Scalar> ClosureElement for Mat2<S> {
    fn product(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn same_as(&self, other: &Self, tol: f64) -> bool {
        self.close_to(other, tol)
    }
    fn order_cmp(&self, other: &Self, tol: f64) -> Ordering {
        self.lex_cmp(other, tol)
    }
    fn exact_key(&self) -> Option<String> {
        S::EXACT.then(|| self.to_string())
    }
    fn separation(&self, other: &Self) -> Option<f64> {
        (!S::EXACT).then(|| self.distance(other))
    }
    fn label(&self) -> String {
        self.to_string()
    }
}

impl ClosureElement for SpacetimeSymmetry {
    fn product(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn same_as(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn order_cmp(&self, other: &Self, _tol: f64) -> Ordering {
        (self.spatial.matrix(), self.time_sign.value()).cmp(&(other.spatial.matrix(), other.time_sign.value()))
    }
    fn exact_key(&self) -> Option<String> {
        Some(self.to_string())
    }
    fn separation(&self, _other: &Self) -> Option<f64> {
        None
    }
    fn label(&self) -> String {
        self.to_string()
    }
}

struct Index<T> {
    elements: Vec<T>,
    keys: HashMap<String, usize>,
    tol: f64,
}

impl<T: ClosureElement> Index<T> {
    fn find(&self, x: &T) -> Option<usize> {
        match x.exact_key() {
            Some(k) => self.keys.get(&k).copied(),
            None => self.elements.iter().position(|e| e.same_as(x, self.tol)),
        }
    }

    fn push(&mut self, x: T) -> usize {
        if let Some(k) = x.exact_key() {
            self.keys.insert(k, self.elements.len());
        }
        self.elements.push(x);
        self.elements.len() - 1
    }
}

/// Closes `generators` under multiplication and returns the elements in
/// canonical order together with the index table.
pub fn close<T: ClosureElement>(generators: &[T], identity: T, opts: ClosureOptions) -> Result<(Vec<T>, Vec<Vec<usize>>)> {
    if opts.max_order == 0 {
        return Err(Error::MaxOrderExceeded { limit: 0 });
    }
    let tol = opts.tolerance;
    let mut index = Index { elements: Vec::new(), keys: HashMap::new(), tol };
    index.push(identity);
    let mut layer: Vec<usize> = vec![0];

    while !layer.is_empty() {
        let mut fresh: Vec<T> = Vec::new();
        for &x in &layer {
            for g in generators {
                let y = index.elements[x].product(g);
                if index.find(&y).is_none() && !fresh.iter().any(|f| f.same_as(&y, tol)) {
                    fresh.push(y);
                }
            }
        }
        fresh.sort_by(|a, b| a.order_cmp(b, tol));
        if index.elements.len() + fresh.len() > opts.max_order {
            return Err(Error::MaxOrderExceeded { limit: opts.max_order });
        }
        layer = fresh.into_iter().map(|y| index.push(y)).collect();
    }

    let elements = index.elements;
    audit_separation(&elements, tol)?;

    let n = elements.len();
    let lookup = Index { keys: index.keys, elements, tol };
    let mut table = vec![vec![0; n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let p = lookup.elements[i].product(&lookup.elements[j]);
            // Closed by construction for exact elements; approx products
            // could in principle drift outside every tolerance ball.
            *cell = lookup.find(&p).ok_or(Error::SeparationAuditFailed {
                min_distance: f64::NAN,
                threshold: SEPARATION_FACTOR * tol,
            })?;
        }
    }
    Ok((lookup.elements, table))
}

fn audit_separation<T: ClosureElement>(elements: &[T], tol: f64) -> Result<()> {
    let threshold = SEPARATION_FACTOR * tol;
    let mut min = f64::INFINITY;
    for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            match a.separation(b) {
                Some(d) => min = min.min(d),
                None => return Ok(()),
            }
        }
    }
    if min > threshold {
        Ok(())
    } else {
        Err(Error::SeparationAuditFailed { min_distance: min, threshold })
    }
}

fn into_group<T: ClosureElement>(elements: &[T], table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    FiniteGroup::from_table(elements.iter().map(ClosureElement::label).collect(), table)
}

/// Group generated by 2×2 matrices, using the chosen arithmetic.
pub fn generate_closure(generators: &[ExactMat2], backend: Backend, opts: ClosureOptions) -> Result<FiniteGroup> {
    for g in generators {
        g.inverse()?;
    }
    match backend {
        Backend::Exact => {
            let (elements, table) = close(generators, ExactMat2::identity(), opts)?;
            Ok(into_group(&elements, table)?.with_source(ElementSource::Exact(elements)))
        }
        Backend::Approx => {
            let gens: Vec<ApproxMat2> = generators.iter().map(ExactMat2::to_approx).collect();
            generate_approx_closure(&gens, opts)
        }
    }
}

/// Group generated by floating-point matrices (entries need not be rational).
pub fn generate_approx_closure(generators: &[ApproxMat2], opts: ClosureOptions) -> Result<FiniteGroup> {
    let singular = generators.iter().any(|g| {
        let d = g.det();
        d.re.hypot(d.im) <= opts.tolerance
    });
    if singular {
        return Err(Error::Singular);
    }
    let (elements, table) = close(generators, ApproxMat2::identity(), opts)?;
    Ok(into_group(&elements, table)?.with_source(ElementSource::Approx(elements)))
}

/// Group generated by spacetime symmetries `(𝒪, a)`.
pub fn generate_spacetime_closure(generators: &[SpacetimeSymmetry], opts: ClosureOptions) -> Result<FiniteGroup> {
    let (elements, table) = close(generators, SpacetimeSymmetry::identity(), opts)?;
    Ok(into_group(&elements, table)?.with_source(ElementSource::Spacetime(elements)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ApproxComplex;

    fn m(s: &str) -> ExactMat2 {
        s.parse().unwrap()
    }

    #[test]
    fn parity_and_time_reversal_give_order_eight() {
        let g = generate_closure(&[m("i,0;0,i"), m("0,-1;1,0")], Backend::Exact, ClosureOptions::default()).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.label(0), "1,0;0,1");
        assert_eq!(g.order_multiset(), vec![1, 2, 2, 2, 4, 4, 4, 4]);
    }

    #[test]
    fn minus_identity_gives_order_two() {
        let g = generate_closure(&[m("-1,0;0,-1")], Backend::Exact, ClosureOptions::default()).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn quaternion_group() {
        let g = generate_closure(&[m("0,-i;-i,0"), m("0,-1;1,0")], Backend::Exact, ClosureOptions::default()).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!(g.involution_count(), 1);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = generate_closure(&[], Backend::Exact, ClosureOptions::default()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn max_order_enforced() {
        let opts = ClosureOptions { max_order: 4, ..Default::default() };
        let err = generate_closure(&[m("i,0;0,i"), m("0,-1;1,0")], Backend::Exact, opts).unwrap_err();
        assert_eq!(err, Error::MaxOrderExceeded { limit: 4 });
        // Infinite order: diag(2, 1/2) never closes.
        let opts = ClosureOptions { max_order: 50, ..Default::default() };
        assert!(generate_closure(&[m("2,0;0,1/2")], Backend::Exact, opts).is_err());
    }

    #[test]
    fn singular_generator_rejected() {
        assert_eq!(
            generate_closure(&[m("1,1;1,1")], Backend::Exact, ClosureOptions::default()),
            Err(Error::Singular)
        );
    }

    #[test]
    fn separation_audit_trips_on_near_duplicates() {
        // Order 100; neighbours differ by about 6e-2, inside 100 * 1e-3.
        let theta = std::f64::consts::PI / 50.0;
        let zero = ApproxComplex::new(0.0, 0.0);
        let a = Mat2::new(ApproxComplex::cis(-theta), zero, zero, ApproxComplex::cis(theta));
        let opts = ClosureOptions { max_order: 1000, tolerance: 1e-3 };
        let err = generate_approx_closure(std::slice::from_ref(&a), opts).unwrap_err();
        assert!(matches!(err, Error::SeparationAuditFailed { .. }), "{err}");
        let loose = ClosureOptions { max_order: 1000, tolerance: 1e-5 };
        assert_eq!(generate_approx_closure(&[a], loose).unwrap().order(), 100);
    }

    #[test]
    fn backends_agree_on_exact_generators() {
        let gens = [m("i,0;0,i"), m("0,-1;1,0")];
        let exact = generate_closure(&gens, Backend::Exact, ClosureOptions::default()).unwrap();
        let approx = generate_closure(&gens, Backend::Approx, ClosureOptions::default()).unwrap();
        assert_eq!(exact.table(), approx.table());
        let (Some(ElementSource::Exact(e)), Some(ElementSource::Approx(a))) = (exact.source(), approx.source()) else {
            panic!("missing element sources");
        };
        for (x, y) in e.iter().zip(a) {
            assert!(x.to_approx().close_to(y, 1e-12));
        }
    }

    #[test]
    fn deterministic() {
        let gens = [m("0,-i;-i,0"), m("i,0;0,i"), m("0,-1;1,0")];
        let a = generate_closure(&gens, Backend::Exact, ClosureOptions::default()).unwrap();
        let b = generate_closure(&gens, Backend::Exact, ClosureOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
