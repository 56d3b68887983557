//! Scalar backends for matrix entries.
//!
//! [`GaussianRational`] is exact and is what every covering-map and
//! homomorphism check runs on. [`ApproxComplex`] is a binary64 stand-in for
//! groups whose entries are irrational (e.g. `cos(π/n)`), compared with a
//! tolerance.

mod approx;
mod gaussian;
mod rational;

use std::cmp::Ordering;
use std::fmt;

pub use approx::{ApproxComplex, DEFAULT_TOLERANCE};
pub use gaussian::GaussianRational;
pub use rational::Rational;

/// Arithmetic shared by both backends.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// `true` for exact backends; equality then ignores the tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn close_to(&self, other: &Self, tol: f64) -> bool;
    /// Lexicographic on `(re, im)`; values within `tol` compare equal.
    fn lex_cmp(&self, other: &Self, tol: f64) -> Ordering;
    fn distance(&self, other: &Self) -> f64;
    fn to_approx(&self) -> ApproxComplex;
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn close_to(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn lex_cmp(&self, other: &Self, _tol: f64) -> Ordering {
        self.cmp(other)
    }
    fn distance(&self, other: &Self) -> f64 {
        GaussianRational::to_approx(self).distance(&GaussianRational::to_approx(other))
    }
    fn to_approx(&self) -> ApproxComplex {
        GaussianRational::to_approx(self)
    }
}

fn cmp_with_tol(a: f64, b: f64, tol: f64) -> Ordering {
    if (a - b).abs() <= tol {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl Scalar for ApproxComplex {
    const EXACT: bool = false;

    fn zero() -> Self {
        ApproxComplex::new(0.0, 0.0)
    }
    fn one() -> Self {
        ApproxComplex::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        ApproxComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ApproxComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ApproxComplex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
    fn neg(&self) -> Self {
        ApproxComplex::new(-self.re, -self.im)
    }
    fn conj(&self) -> Self {
        ApproxComplex::new(self.re, -self.im)
    }
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.approx_eq(other, tol)
    }
    fn lex_cmp(&self, other: &Self, tol: f64) -> Ordering {
        cmp_with_tol(self.re, other.re, tol).then_with(|| cmp_with_tol(self.im, other.im, tol))
    }
    fn distance(&self, other: &Self) -> f64 {
        ApproxComplex::distance(self, other)
    }
    fn to_approx(&self) -> ApproxComplex {
        *self
    }
}
