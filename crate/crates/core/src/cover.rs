//! SU(2), S±U(2) = SU(2) ∪ SU(2)·P̂ and O(3), with the covering
//! homomorphisms `π: SU(2) → SO(3)` and `Π: S±U(2) → O(3)`.
//!
//! The determinant splits S±U(2) into two sheets. `Π` on the det = −1 sheet
//! is computed by factoring `C = A·P̂` on every call.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{ExactMat2, Mat3};
use crate::report::Assertion;
use crate::scalar::{GaussianRational, Rational};
use crate::sign::Sign;

/// Element of S±U(2): a 2×2 unitary matrix with determinant ±1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnitaryMat2 {
    mat: ExactMat2,
    det_sign: Sign,
}

impl UnitaryMat2 {
    /// Checks `M·M† = I` and `det M = ±1` exactly.
    pub fn new(mat: ExactMat2) -> Result<Self> {
        if mat.mul(&mat.adjoint()) != ExactMat2::identity() {
            return Err(Error::NotUnitary(mat.to_string()));
        }
        let det = mat.det();
        let det_sign = if det == GaussianRational::one() {
            Sign::Plus
        } else if det == -GaussianRational::one() {
            Sign::Minus
        } else {
            return Err(Error::BadDeterminant { det: det.to_string() });
        };
        Ok(UnitaryMat2 { mat, det_sign })
    }

    /// `((z, w), (−w̄, z̄))`, requiring `|z|² + |w|² = 1`.
    pub fn from_su2(z: GaussianRational, w: GaussianRational) -> Result<Self> {
        let norm = z.norm_sq() + w.norm_sq();
        if !norm.is_one() {
            return Err(Error::NotUnitary(format!("|z|^2 + |w|^2 = {norm}")));
        }
        let mat = ExactMat2::new(z.clone(), w.clone(), -w.conj(), z.conj());
        Ok(UnitaryMat2 { mat, det_sign: Sign::Plus })
    }

    fn from_ints(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        UnitaryMat2::new(ExactMat2::from_ints(a, b, c, d)).expect("constant is in S±U(2)")
    }

    pub fn identity() -> Self {
        UnitaryMat2 { mat: ExactMat2::identity(), det_sign: Sign::Plus }
    }

    pub fn minus_identity() -> Self {
        UnitaryMat2::identity().neg()
    }

    pub fn sigma1() -> Self {
        UnitaryMat2::from_ints((0, 0), (1, 0), (1, 0), (0, 0))
    }

    pub fn sigma2() -> Self {
        UnitaryMat2::from_ints((0, 0), (0, -1), (0, 1), (0, 0))
    }

    pub fn sigma3() -> Self {
        UnitaryMat2::from_ints((1, 0), (0, 0), (0, 0), (-1, 0))
    }

    /// `i·I` as a scalar multiple; useful for building `±iσ_k`.
    pub fn times_i(&self) -> Self {
        UnitaryMat2::new(self.mat.scale(&GaussianRational::i())).expect("i·U stays in S±U(2)")
    }

    pub fn matrix(&self) -> &ExactMat2 {
        &self.mat
    }

    pub fn det_sign(&self) -> Sign {
        self.det_sign
    }

    pub fn is_special(&self) -> bool {
        self.det_sign == Sign::Plus
    }

    pub fn mul(&self, rhs: &UnitaryMat2) -> UnitaryMat2 {
        UnitaryMat2 { mat: self.mat.mul(&rhs.mat), det_sign: self.det_sign * rhs.det_sign }
    }

    /// `M⁻¹ = M†`.
    pub fn inverse(&self) -> UnitaryMat2 {
        UnitaryMat2 { mat: self.mat.adjoint(), det_sign: self.det_sign }
    }

    /// `det(−M) = det(M)` for 2×2 matrices.
    pub fn neg(&self) -> UnitaryMat2 {
        UnitaryMat2 { mat: self.mat.neg(), det_sign: self.det_sign }
    }

    /// Entrywise complex conjugate; the determinant stays real so the sheet
    /// is unchanged.
    pub fn conj(&self) -> UnitaryMat2 {
        UnitaryMat2 { mat: self.mat.conj(), det_sign: self.det_sign }
    }

    pub fn apply(&self, v: &[GaussianRational; 2]) -> [GaussianRational; 2] {
        self.mat.apply(v)
    }

    /// Whether the entries have the `((z, w), (−w̄, z̄))` shape.
    pub fn has_su2_shape(&self) -> bool {
        let m = &self.mat.m;
        m[1][0] == -m[0][1].conj() && m[1][1] == m[0][0].conj()
    }
}

impl fmt::Display for UnitaryMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mat.fmt(f)
    }
}

impl FromStr for UnitaryMat2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        UnitaryMat2::new(s.parse()?)
    }
}

impl Serialize for UnitaryMat2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Element of O(3) with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrthogonalMat3 {
    mat: Mat3,
    det_sign: Sign,
}

impl OrthogonalMat3 {
    pub fn new(mat: Mat3) -> Result<Self> {
        if mat.mul(&mat.transpose()) != Mat3::identity() {
            return Err(Error::NotOrthogonal(mat.to_string()));
        }
        let det = mat.det();
        let det_sign = if det.is_one() { Sign::Plus } else { Sign::Minus };
        Ok(OrthogonalMat3 { mat, det_sign })
    }

    pub fn identity() -> Self {
        OrthogonalMat3 { mat: Mat3::identity(), det_sign: Sign::Plus }
    }

    /// Spatial inversion `x ↦ −x`.
    pub fn inversion() -> Self {
        OrthogonalMat3::identity().neg()
    }

    /// π rotation about the y axis, `diag(−1, 1, −1)`.
    pub fn rotation_y_pi() -> Self {
        OrthogonalMat3 { mat: Mat3::diag(-1, 1, -1), det_sign: Sign::Plus }
    }

    /// Reflection through the xy plane, `diag(1, 1, −1)`.
    pub fn reflection_z() -> Self {
        OrthogonalMat3 { mat: Mat3::diag(1, 1, -1), det_sign: Sign::Minus }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.mat
    }

    pub fn det_sign(&self) -> Sign {
        self.det_sign
    }

    pub fn mul(&self, rhs: &OrthogonalMat3) -> OrthogonalMat3 {
        OrthogonalMat3 { mat: self.mat.mul(&rhs.mat), det_sign: self.det_sign * rhs.det_sign }
    }

    /// `det(−R) = −det(R)` in three dimensions.
    pub fn neg(&self) -> OrthogonalMat3 {
        OrthogonalMat3 { mat: self.mat.neg(), det_sign: self.det_sign * Sign::Minus }
    }

    pub fn inverse(&self) -> OrthogonalMat3 {
        OrthogonalMat3 { mat: self.mat.transpose(), det_sign: self.det_sign }
    }

    pub fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        self.mat.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }
}

impl fmt::Display for OrthogonalMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mat.fmt(f)
    }
}

impl FromStr for OrthogonalMat3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OrthogonalMat3::new(s.parse()?)
    }
}

impl Serialize for OrthogonalMat3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The 2→1 homomorphism SU(2) → SO(3). For `A = ((z, w), (−w̄, z̄))`:
///
/// ```text
/// ⎡ Re(z²−w²)   Im(z²+w²)  −2Re(zw) ⎤
/// ⎢ −Im(z²−w²)  Re(z²+w²)   2Im(zw) ⎥
/// ⎣ 2Re(zw̄)     2Im(zw̄)    |z|²−|w|² ⎦
/// ```
pub fn covering_map(a: &UnitaryMat2) -> Result<OrthogonalMat3> {
    if !a.is_special() {
        return Err(Error::WrongSheet);
    }
    let z = a.matrix().get(0, 0);
    let w = a.matrix().get(0, 1);
    let z2 = z * z;
    let w2 = w * w;
    let diff = &z2 - &w2;
    let sum = &z2 + &w2;
    let zw = z * w;
    let zwbar = z * &w.conj();
    let two = Rational::from_integer(2);
    let mat = Mat3 {
        m: [
            [diff.re.clone(), sum.im.clone(), -(&two * &zw.re)],
            [-diff.im, sum.re, &two * &zw.im],
            [&two * &zwbar.re, &two * &zwbar.im, z.norm_sq() - w.norm_sq()],
        ],
    };
    Ok(OrthogonalMat3 { mat, det_sign: Sign::Plus })
}

/// `Π: S±U(2) → O(3)`. On the det = −1 sheet, `C = A·P̂` with
/// `A = C·P̂⁻¹ ∈ SU(2)` and `Π(C) = −π(A)`.
pub fn big_pi(c: &UnitaryMat2) -> OrthogonalMat3 {
    match c.det_sign() {
        Sign::Plus => covering_map(c).expect("det +1"),
        Sign::Minus => {
            let a = c.mul(&parity_operator().inverse());
            covering_map(&a).expect("C·P̂⁻¹ has det +1").neg()
        }
    }
}

/// Spinor parity `P̂ = iI` (the + sign choice). `P̂² = −I`, `det P̂ = −1`.
pub fn parity_operator() -> UnitaryMat2 {
    UnitaryMat2::identity().times_i()
}

/// Splitting `γ: Z2 → S±U(2)`, `γ(+1) = I`, `γ(−1) = −σ₃`.
pub fn splitting_gamma(s: Sign) -> UnitaryMat2 {
    match s {
        Sign::Plus => UnitaryMat2::identity(),
        Sign::Minus => UnitaryMat2::sigma3().neg(),
    }
}

/// Checks the split short exact sequence `1 → SU(2) → S±U(2) → Z2 → 1`
/// on a finite sample.
pub fn verify_exact_sequence(samples: &[UnitaryMat2]) -> Vec<Assertion> {
    let mut out = Vec::new();

    let bad_kernel = samples
        .iter()
        .find(|c| (c.det_sign() == Sign::Plus) != c.has_su2_shape())
        .map(|c| c.to_string());
    out.push(Assertion::from_counterexample("ker(det) = Im(inclusion of SU(2)) on samples", bad_kernel));

    let witnesses = [UnitaryMat2::identity(), parity_operator()];
    let surjective = witnesses[0].det_sign() == Sign::Plus && witnesses[1].det_sign() == Sign::Minus;
    out.push(Assertion::check("det is surjective onto {+1,-1} (witnesses I, P)", surjective, || {
        format!("det(I) = {}, det(P) = {}", witnesses[0].det_sign(), witnesses[1].det_sign())
    }));

    let bad_hom = Sign::BOTH
        .iter()
        .flat_map(|&s| Sign::BOTH.iter().map(move |&t| (s, t)))
        .find(|&(s, t)| splitting_gamma(s * t) != splitting_gamma(s).mul(&splitting_gamma(t)))
        .map(|(s, t)| format!("gamma({s})gamma({t}) = {}", splitting_gamma(s).mul(&splitting_gamma(t))));
    out.push(Assertion::from_counterexample("gamma is a homomorphism on Z2", bad_hom));

    let bad_section = Sign::BOTH
        .iter()
        .find(|&&s| splitting_gamma(s).det_sign() != s)
        .map(|s| splitting_gamma(*s).to_string());
    out.push(Assertion::from_counterexample("det o gamma = Id on Z2", bad_section));

    let image = [splitting_gamma(Sign::Plus), splitting_gamma(Sign::Minus)];
    let expected = [UnitaryMat2::identity(), UnitaryMat2::sigma3().neg()];
    out.push(Assertion::check("gamma(Z2) = {I, -sigma3}", image == expected, || {
        format!("{}, {}", image[0], image[1])
    }));

    out
}

/// A point on S³ with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct UnitQuaternion {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl UnitQuaternion {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Result<Self> {
        let norm = alpha.square() + beta.square() + gamma.square() + delta.square();
        if !norm.is_one() {
            return Err(Error::NotUnitary(format!("quaternion norm {norm}")));
        }
        Ok(UnitQuaternion { alpha, beta, gamma, delta })
    }
}

/// Inverse stereographic projection `R³ → S³`:
/// `((1−s), 2x, 2y, 2z) / (1+s)` with `s = x² + y² + z²`.
pub fn rational_unit_quaternion(x: &Rational, y: &Rational, z: &Rational) -> UnitQuaternion {
    let s = x.square() + y.square() + z.square();
    let denom = Rational::one() + &s;
    let two = Rational::from_integer(2);
    UnitQuaternion::new(
        &(Rational::one() - &s) / &denom,
        &(&two * x) / &denom,
        &(&two * y) / &denom,
        &(&two * z) / &denom,
    )
    .expect("stereographic image lies on S³")
}

/// `z = α + βi`, `w = γ + δi`.
pub fn quaternion_to_su2(q: &UnitQuaternion) -> UnitaryMat2 {
    UnitaryMat2::from_su2(
        GaussianRational::new(q.alpha.clone(), q.beta.clone()),
        GaussianRational::new(q.gamma.clone(), q.delta.clone()),
    )
    .expect("unit quaternion")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3(s: &str) -> Mat3 {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn covering_map_examples() {
        assert!(covering_map(&UnitaryMat2::identity()).unwrap().is_identity());

        let a: UnitaryMat2 = "0,-1;1,0".parse().unwrap();
        assert_eq!(covering_map(&a).unwrap(), OrthogonalMat3::rotation_y_pi());

        let a = UnitaryMat2::from_su2("3/5+4/5i".parse().unwrap(), GaussianRational::zero()).unwrap();
        let r = covering_map(&a).unwrap();
        assert_eq!(*r.matrix(), m3("-7/25,24/25,0;-24/25,-7/25,0;0,0,1"));
        assert_eq!(r.matrix().mul(&r.matrix().transpose()), Mat3::identity());
        assert!(r.matrix().det().is_one());
    }

    #[test]
    fn covering_map_rejects_lower_sheet() {
        assert_eq!(covering_map(&parity_operator()), Err(Error::WrongSheet));
    }

    #[test]
    fn big_pi_examples() {
        assert_eq!(big_pi(&parity_operator()), OrthogonalMat3::inversion());
        assert!(big_pi(&UnitaryMat2::minus_identity()).is_identity());
        let a: UnitaryMat2 = "3/5,4/5i;4/5i,3/5".parse().unwrap();
        assert_eq!(big_pi(&a), covering_map(&a).unwrap());
        assert_eq!(big_pi(&a.mul(&parity_operator())).det_sign(), Sign::Minus);
    }

    #[test]
    fn parity_properties() {
        let p = parity_operator();
        assert_eq!(p.to_string(), "i,0;0,i");
        assert_eq!(p.mul(&p), UnitaryMat2::minus_identity());
        assert_eq!(p.det_sign(), Sign::Minus);
    }

    #[test]
    fn splitting() {
        assert_eq!(splitting_gamma(Sign::Plus), UnitaryMat2::identity());
        assert_eq!(splitting_gamma(Sign::Minus).to_string(), "-1,0;0,1");
        for s in Sign::BOTH {
            assert_eq!(splitting_gamma(s).det_sign(), s);
        }
        let g = splitting_gamma(Sign::Minus);
        assert_eq!(g.mul(&g), UnitaryMat2::identity());
    }

    #[test]
    fn exact_sequence_on_order_eight_sample() {
        let samples = [
            UnitaryMat2::identity(),
            UnitaryMat2::minus_identity(),
            parity_operator(),
            UnitaryMat2::sigma3().neg(),
        ];
        let report = verify_exact_sequence(&samples);
        assert_eq!(report.len(), 5);
        assert!(report.iter().all(|a| a.pass), "{report:?}");
    }

    #[test]
    fn stereographic_quaternions() {
        let zero = Rational::zero();
        let q0 = rational_unit_quaternion(&zero, &zero, &zero);
        assert_eq!((q0.alpha.clone(), q0.beta.clone()), (Rational::one(), zero.clone()));
        assert_eq!(quaternion_to_su2(&q0), UnitaryMat2::identity());

        let q1 = rational_unit_quaternion(&Rational::one(), &zero, &zero);
        assert_eq!(q1, UnitQuaternion::new(zero.clone(), Rational::one(), zero.clone(), zero.clone()).unwrap());
        assert_eq!(quaternion_to_su2(&q1).to_string(), "i,0;0,-i");
        assert_eq!(quaternion_to_su2(&q1).det_sign(), Sign::Plus);

        let q2 = rational_unit_quaternion(&q("1/2"), &zero, &zero);
        assert_eq!((q2.alpha.clone(), q2.beta.clone()), (q("3/5"), q("4/5")));
        let a = quaternion_to_su2(&q2);
        assert_eq!(a.matrix().get(0, 0).to_string(), "3/5+4/5i");
        assert!(a.matrix().get(0, 1).is_zero());
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!("1,1;0,1".parse::<UnitaryMat2>(), Err(Error::NotUnitary(_))));
        // diag(i, 1) is unitary with det i.
        assert!(matches!("i,0;0,1".parse::<UnitaryMat2>(), Err(Error::BadDeterminant { .. })));
        assert!(matches!("1,1,0;0,1,0;0,0,1".parse::<OrthogonalMat3>(), Err(Error::NotOrthogonal(_))));
    }
}
