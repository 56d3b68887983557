//! Seeded exact samplers. Every random element is built from small random
//! rationals, so homomorphism checks on samples stay exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{parity_operator, quaternion_to_su2, rational_unit_quaternion, UnitaryMat2};
use crate::scalar::{GaussianRational, Rational};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 9`.
    pub fn rational(&mut self) -> Rational {
        Rational::new(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=9))
    }

    /// SU(2) element from a stereographic rational point on S³.
    pub fn su2(&mut self) -> UnitaryMat2 {
        let (x, y, z) = (self.rational(), self.rational(), self.rational());
        quaternion_to_su2(&rational_unit_quaternion(&x, &y, &z))
    }

    /// Element of S±U(2), each sheet with probability 1/2.
    pub fn spm_u2(&mut self) -> UnitaryMat2 {
        let a = self.su2();
        if self.rng.gen_bool(0.5) {
            a.mul(&parity_operator())
        } else {
            a
        }
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn gaussian(&mut self) -> GaussianRational {
        GaussianRational::new(self.rational(), self.rational())
    }

    /// A unit-norm spinor: the first column of a random SU(2) matrix.
    pub fn unit_spinor(&mut self) -> [GaussianRational; 2] {
        let a = self.su2();
        [a.matrix().get(0, 0).clone(), a.matrix().get(1, 0).clone()]
    }
}

/// The unit phases `{±1, ±i, (3±4i)/5}`.
pub fn unit_phases() -> Vec<GaussianRational> {
    ["1", "-1", "i", "-i", "3/5+4/5i", "3/5-4/5i"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_sequences_repeat() {
        let a: Vec<_> = (0..20).scan(Sampler::new(7), |s, _| Some(s.spm_u2())).collect();
        let b: Vec<_> = (0..20).scan(Sampler::new(7), |s, _| Some(s.spm_u2())).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_spinors_are_normalized() {
        let mut s = Sampler::new(1);
        for _ in 0..50 {
            let [u, v] = s.unit_spinor();
            assert!((u.norm_sq() + v.norm_sq()).is_one());
        }
        for p in unit_phases() {
            assert!(p.norm_sq().is_one());
        }
    }
}
