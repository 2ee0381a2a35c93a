//! Seeded sampling of random rational scalars, vectors, and matrices.
//! Numerators and denominators stay below 10³ so exact arithmetic remains
//! cheap and every run is reproducible from its seed.

use crate::matrix::{Matrix, Vector};
use crate::scalar::{rational, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const MAX_MAGNITUDE: i64 = 1000;

/// Deterministic rational sampler.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent sub-sampler for a trial index; lets probes parallelize
    /// deterministically.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        RationalSampler::new(seed.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
    }

    pub fn rational(&mut self) -> crate::scalar::Rational {
        let num = self.rng.random_range(-MAX_MAGNITUDE..=MAX_MAGNITUDE);
        let den = self.rng.random_range(1..=MAX_MAGNITUDE);
        rational(num, den)
    }

    pub fn scalar(&mut self) -> Scalar {
        Scalar::new(self.rational(), self.rational())
    }

    pub fn real_scalar(&mut self) -> Scalar {
        Scalar::from_rational(self.rational())
    }

    /// Random complex rational vector; redrawn until nonzero.
    pub fn vector(&mut self, dim: usize) -> Vector {
        loop {
            let v: Vector = (0..dim).map(|_| self.scalar()).collect();
            if v.iter().any(|z| !z.is_zero()) {
                return v;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    /// Random exactly-Hermitian matrix: real rational diagonal, conjugate
    /// pairs off the diagonal.
    pub fn hermitian(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, self.real_scalar());
            for j in (i + 1)..n {
                let z = self.scalar();
                m.set(i, j, z.clone());
                m.set(j, i, z.conj());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = RationalSampler::new(7).matrix(3, 3);
        let b = RationalSampler::new(7).matrix(3, 3);
        assert_eq!(a, b);
        let c = RationalSampler::new(8).matrix(3, 3);
        assert_ne!(a, c);
    }

    #[test]
    fn hermitian_samples_are_hermitian() {
        let mut s = RationalSampler::new(42);
        for _ in 0..5 {
            assert!(s.hermitian(4).is_hermitian());
        }
    }

    #[test]
    fn trial_subsamplers_differ() {
        let a = RationalSampler::for_trial(1, 0).vector(4);
        let b = RationalSampler::for_trial(1, 1).vector(4);
        assert_ne!(a, b);
    }
}
