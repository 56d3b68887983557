//! The semidirect product SU(2) ⊙ Z2 with Z2 realized as `{I, −σ₃}`.
//!
//! Composition is `(A′, B′)·(A, B) = (A′·B′AB′⁻¹, B′B)`, evaluated by literal
//! matrix conjugation. `Ψ(A, B) = AB` identifies it with S±U(2).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cover::{big_pi, covering_map, splitting_gamma, OrthogonalMat3, UnitaryMat2};
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;
use crate::sign::Sign;

/// One of the two matrices `I`, `−σ₃`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Z2Rep(UnitaryMat2);

impl Z2Rep {
    pub fn identity() -> Self {
        Z2Rep(splitting_gamma(Sign::Plus))
    }

    /// `−σ₃`
    pub fn flip() -> Self {
        Z2Rep(splitting_gamma(Sign::Minus))
    }

    pub fn from_sign(s: Sign) -> Self {
        Z2Rep(splitting_gamma(s))
    }

    pub fn from_matrix(m: UnitaryMat2) -> Result<Self> {
        if m == splitting_gamma(Sign::Plus) || m == splitting_gamma(Sign::Minus) {
            Ok(Z2Rep(m))
        } else {
            Err(Error::parse(format!("`{m}` is neither I nor -sigma3")))
        }
    }

    pub fn matrix(&self) -> &UnitaryMat2 {
        &self.0
    }

    /// The abstract ±1, read off the determinant.
    pub fn sign(&self) -> Sign {
        self.0.det_sign()
    }

    pub fn mul(&self, rhs: &Z2Rep) -> Z2Rep {
        Z2Rep(self.0.mul(&rhs.0))
    }
}

/// `φ(B)(A) = B·A·B⁻¹`.
pub fn phi_action(b: &Z2Rep, a: &UnitaryMat2) -> UnitaryMat2 {
    b.matrix().mul(a).mul(&b.matrix().inverse())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemidirectElement {
    a_part: UnitaryMat2,
    b_part: Z2Rep,
}

impl SemidirectElement {
    pub fn new(a_part: UnitaryMat2, b_part: Z2Rep) -> Result<Self> {
        if !a_part.is_special() {
            return Err(Error::DeterminantMismatch { expected: 1, actual: -1 });
        }
        Ok(SemidirectElement { a_part, b_part })
    }

    pub fn identity() -> Self {
        SemidirectElement { a_part: UnitaryMat2::identity(), b_part: Z2Rep::identity() }
    }

    pub fn a_part(&self) -> &UnitaryMat2 {
        &self.a_part
    }

    pub fn b_part(&self) -> &Z2Rep {
        &self.b_part
    }

    pub fn inverse(&self) -> Self {
        // B² = I, so (A, B)⁻¹ = (B·A⁻¹·B⁻¹, B).
        SemidirectElement {
            a_part: phi_action(&self.b_part, &self.a_part.inverse()),
            b_part: self.b_part.clone(),
        }
    }
}

/// `(A′, B′)·(A, B) = (A′·φ(B′)(A), B′B)`.
pub fn compose(lhs: &SemidirectElement, rhs: &SemidirectElement) -> SemidirectElement {
    SemidirectElement {
        a_part: lhs.a_part.mul(&phi_action(&lhs.b_part, &rhs.a_part)),
        b_part: lhs.b_part.mul(&rhs.b_part),
    }
}

/// `Ψ(A, B) = AB`.
pub fn psi(e: &SemidirectElement) -> UnitaryMat2 {
    e.a_part.mul(e.b_part.matrix())
}

/// `Ψ⁻¹(C) = (C, I)` for det C = +1, `(C·(−σ₃), −σ₃)` otherwise.
pub fn psi_inverse(c: &UnitaryMat2) -> SemidirectElement {
    let b = Z2Rep::from_sign(c.det_sign());
    // (−σ₃)⁻¹ = −σ₃
    let a = c.mul(b.matrix());
    SemidirectElement { a_part: a, b_part: b }
}

/// `Π_⊙ = Π∘Ψ`: `π(A)` when B = I, `π(A)·diag(1, 1, −1)` when B = −σ₃.
pub fn pi_odot(e: &SemidirectElement) -> OrthogonalMat3 {
    let rot = covering_map(&e.a_part).expect("a_part is in SU(2)");
    match e.b_part.sign() {
        Sign::Plus => rot,
        Sign::Minus => rot.mul(&OrthogonalMat3::reflection_z()),
    }
}

/// `P̂_⊙ = Ψ⁻¹(iI) = (−iσ₃, −σ₃)`.
pub fn parity_odot() -> SemidirectElement {
    SemidirectElement { a_part: UnitaryMat2::sigma3().times_i().neg(), b_part: Z2Rep::flip() }
}

/// Action on a spinor value through `Ψ`.
pub fn act_on_spinor(e: &SemidirectElement, v: &[GaussianRational; 2]) -> [GaussianRational; 2] {
    psi(e).apply(v)
}

/// Checks `Π_⊙(e) = Π(Ψ(e))` for one element.
pub fn projection_agrees(e: &SemidirectElement) -> bool {
    pi_odot(e) == big_pi(&psi(e))
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.a_part, self.b_part.matrix())
    }
}

impl FromStr for SemidirectElement {
    type Err = Error;

    /// `(A | B)` with both parts in the matrix grammar.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("expected `(A | B)`, got `{s}`")))?;
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::parse(format!("missing `|` in `{s}`")))?;
        SemidirectElement::new(a.trim().parse()?, Z2Rep::from_matrix(b.trim().parse()?)?)
    }
}

impl Serialize for SemidirectElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::parity_operator;

    fn u(s: &str) -> UnitaryMat2 {
        s.parse().unwrap()
    }

    fn order_eight() -> Vec<UnitaryMat2> {
        let p = parity_operator();
        let t = u("0,-1;1,0");
        let pt = p.mul(&t);
        [UnitaryMat2::identity(), p, t, pt].iter().flat_map(|m| [m.clone(), m.neg()]).collect()
    }

    #[test]
    fn phi_examples() {
        let a = u("3/5,4/5i;4/5i,3/5");
        assert_eq!(phi_action(&Z2Rep::identity(), &a), a);
        // (z, w) ↦ (z, −w) under conjugation by −σ₃
        assert_eq!(phi_action(&Z2Rep::flip(), &a), u("3/5,-4/5i;-4/5i,3/5"));
        assert_eq!(phi_action(&Z2Rep::flip(), &phi_action(&Z2Rep::flip(), &a)), a);
    }

    #[test]
    fn compose_examples() {
        let a = SemidirectElement::new(u("0,-1;1,0"), Z2Rep::flip()).unwrap();
        assert_eq!(compose(&SemidirectElement::identity(), &a), a);

        let p = parity_odot();
        let pp = compose(&p, &p);
        assert_eq!(pp, SemidirectElement::new(UnitaryMat2::minus_identity(), Z2Rep::identity()).unwrap());

        let x = SemidirectElement::new(u("3/5,4/5i;4/5i,3/5"), Z2Rep::identity()).unwrap();
        let y = SemidirectElement::new(u("0,-1;1,0"), Z2Rep::identity()).unwrap();
        assert_eq!(psi(&compose(&x, &y)), x.a_part().mul(y.a_part()));
        assert_eq!(compose(&a, &a.inverse()), SemidirectElement::identity());
    }

    #[test]
    fn psi_examples() {
        let a = u("3/5,4/5i;4/5i,3/5");
        assert_eq!(psi(&SemidirectElement::new(a.clone(), Z2Rep::identity()).unwrap()), a);
        assert_eq!(psi(&parity_odot()), parity_operator());
        let flip = SemidirectElement::new(UnitaryMat2::identity(), Z2Rep::flip()).unwrap();
        assert_eq!(psi(&flip).to_string(), "-1,0;0,1");
        assert_eq!(psi(&flip).det_sign(), Sign::Minus);
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inverse(&parity_operator()), parity_odot());
        assert_eq!(psi_inverse(&UnitaryMat2::identity()), SemidirectElement::identity());
        for c in order_eight() {
            assert_eq!(psi(&psi_inverse(&c)), c);
            let e = psi_inverse(&c);
            assert_eq!(psi_inverse(&psi(&e)), e);
        }
    }

    #[test]
    fn pi_odot_examples() {
        let a = u("3/5,4/5i;4/5i,3/5");
        let e = SemidirectElement::new(a.clone(), Z2Rep::identity()).unwrap();
        assert_eq!(pi_odot(&e), covering_map(&a).unwrap());
        let flip = SemidirectElement::new(UnitaryMat2::identity(), Z2Rep::flip()).unwrap();
        assert_eq!(pi_odot(&flip), OrthogonalMat3::reflection_z());
        assert_eq!(pi_odot(&parity_odot()), OrthogonalMat3::inversion());
        for c in order_eight() {
            assert!(projection_agrees(&psi_inverse(&c)), "{c}");
        }
    }

    #[test]
    fn parity_odot_value() {
        assert_eq!(parity_odot().to_string(), "(-i,0;0,i | -1,0;0,1)");
    }

    #[test]
    fn text_round_trip() {
        let e: SemidirectElement = "(-i,0;0,i | -1,0;0,1)".parse().unwrap();
        assert_eq!(e, parity_odot());
        assert!("(i,0;0,i | 1,0;0,1)".parse::<SemidirectElement>().is_err());
        assert!("(1,0;0,1 | 0,1;1,0)".parse::<SemidirectElement>().is_err());
        assert!("1,0;0,1 | 1,0;0,1".parse::<SemidirectElement>().is_err());
    }
}
