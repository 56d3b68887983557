use std::fmt;

/// Default componentwise equality tolerance of the floating backend.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Binary64 complex number. Equality is tolerance based and only used by the
/// approximate closure backend.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ApproxComplex {
    pub re: f64,
    pub im: f64,
}

impl ApproxComplex {
    pub const fn new(re: f64, im: f64) -> Self {
        ApproxComplex { re, im }
    }

    /// `e^{iθ}`
    pub fn cis(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        ApproxComplex::new(c, s)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }

    /// Largest componentwise deviation.
    pub fn distance(&self, other: &Self) -> f64 {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }
}

impl fmt::Debug for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Fixed precision keeps labels stable across runs and platforms.
        let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
        write!(f, "{:.12}{:+.12}i", clean(self.re), clean(self.im))
    }
}
