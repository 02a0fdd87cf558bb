//! Seeded random density matrices.
//!
//! States are drawn from the Ginibre ensemble: `G G^dag / tr(G G^dag)` with
//! `G` a square matrix of i.i.d. complex standard normals. The generator is
//! ChaCha8 seeded through `SeedableRng::seed_from_u64`, so a seed fixes the
//! whole sample sequence on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::ComplexMatrix;
use crate::scalar::{c, Real};
use crate::states::DensityMatrix;

pub struct GinibreSampler {
    rng: ChaCha8Rng,
}

impl GinibreSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Full-rank state of dimension `prod(dims)`.
    pub fn sample<T: Real>(&mut self, dims: &[usize]) -> DensityMatrix<T> {
        let d: usize = dims.iter().product();
        let g = ComplexMatrix::<f64>::from_fn(d, |_, _| {
            let re: f64 = self.rng.sample(StandardNormal);
            let im: f64 = self.rng.sample(StandardNormal);
            c(re, im)
        });
        let w = &g * &g.adjoint();
        let m = w.scale(1.0 / w.trace().re);
        DensityMatrix::new(m.cast::<T>(), dims.to_vec()).expect("Ginibre matrices are valid states")
    }

    pub fn sample_two_qubit<T: Real>(&mut self) -> DensityMatrix<T> {
        self.sample(&[2, 2])
    }
}

/// `count` two-qubit states from `seed`.
pub fn ginibre_states(count: usize, seed: u64) -> Vec<DensityMatrix<f64>> {
    let mut sampler = GinibreSampler::new(seed);
    (0..count).map(|_| sampler.sample_two_qubit()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_valid_and_reproducible() {
        let a = ginibre_states(5, 42);
        let b = ginibre_states(5, 42);
        assert_eq!(a, b);
        for rho in &a {
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
            assert!(rho.eigenvalues()[0] > 0.0);
        }
        assert_ne!(ginibre_states(1, 7), ginibre_states(1, 8));
    }
}
