//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies a real Givens rotation, so the off-diagonal pair
//! is annihilated exactly. Sweeps visit `(p, q)` in row-major order, which
//! together with the stable final sort makes the output a deterministic
//! function of the input.

use num_traits::Zero;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{c, cr, Real, C};

/// Maximum number of full sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Spectral decomposition `M = V diag(values) V^dag` with ascending values.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    /// Columns are the orthonormal eigenvectors matching `values`.
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> Vec<C<T>> {
        self.vectors.column(k)
    }

    /// `V f(diag) V^dag` for arbitrary (already evaluated) diagonal values.
    pub fn compose(&self, diag: &[T]) -> ComplexMatrix<T> {
        let n = self.dim();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).fold(C::zero(), |acc, k| {
                acc + v[(i, k)] * v[(j, k)].conj() * diag[k]
            })
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        self.compose(&self.values)
    }
}

/// Diagonalizes a Hermitian matrix.
///
/// `tol` bounds the max-abs entry of `M - M^dag`; the matrix is symmetrized
/// before the sweeps start.
pub fn hermitian_eig<T: Real>(m: &ComplexMatrix<T>, tol: T) -> Result<EigenDecomposition<T>> {
    let deviation = m.hermitian_deviation();
    if !(deviation <= tol) {
        return Err(Error::NotHermitian {
            deviation: deviation.to_f64_lossy(),
            tol: tol.to_f64_lossy(),
        });
    }
    let n = m.dim();
    let mut a = m.symmetrized();
    let mut v = ComplexMatrix::<T>::identity(n);

    let scale = a.frobenius_norm();
    let threshold = T::lit(T::JACOBI_TOL) * scale;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold || scale.is_zero() {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off.to_f64_lossy(),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: exact ties keep the order in which the sweeps left them
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    canonicalize_phases(&mut vectors);
    Ok(EigenDecomposition { values, vectors })
}

/// [`hermitian_eig`] with the scalar type's default Hermiticity tolerance.
pub fn hermitian_eig_default<T: Real>(m: &ComplexMatrix<T>) -> Result<EigenDecomposition<T>> {
    hermitian_eig(m, T::lit(T::HERMITIAN_TOL))
}

fn off_diagonal_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.dim();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag.is_zero() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // phase e^{-i phi} with a_pq = |a_pq| e^{i phi}
    let phase = (apq / mag).conj();
    let theta = (aqq - app) / (mag + mag);
    let t = if theta >= T::zero() {
        T::one() / (theta + (theta * theta + T::one()).sqrt())
    } else {
        -T::one() / (-theta + (theta * theta + T::one()).sqrt())
    };
    let cs = T::one() / (t * t + T::one()).sqrt();
    let sn = t * cs;

    // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting on (p, q)
    let g_pp = cr(cs);
    let g_pq = cr(sn);
    let g_qp = phase * (-sn);
    let g_qq = phase * cs;

    let n = a.dim();
    // A <- A G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    // A <- G^dag A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = C::zero();
    a[(q, p)] = C::zero();
    a[(p, p)] = cr(app - t * mag);
    a[(q, q)] = cr(aqq + t * mag);

    // V <- V G
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

/// Rotates each column so its largest-magnitude component is real positive.
/// Near-ties in magnitude resolve to the lowest index.
fn canonicalize_phases<T: Real>(vectors: &mut ComplexMatrix<T>) {
    let n = vectors.dim();
    let slack = T::lit(1e-12);
    for j in 0..n {
        let max = (0..n)
            .map(|i| vectors[(i, j)].norm())
            .fold(T::zero(), T::max);
        if max.is_zero() {
            continue;
        }
        let pivot = (0..n)
            .find(|&i| vectors[(i, j)].norm() >= max - slack * max)
            .expect("some component attains the max");
        let z = vectors[(pivot, j)];
        let rot = z.conj() / z.norm();
        for i in 0..n {
            vectors[(i, j)] = vectors[(i, j)] * rot;
        }
        vectors[(pivot, j)] = c(vectors[(pivot, j)].re, T::zero());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::pauli;

    fn check_decomposition(m: &ComplexMatrix<f64>, eig: &EigenDecomposition<f64>, tol: f64) {
        let n = m.dim();
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        let vtv = &eig.vectors.adjoint() * &eig.vectors;
        assert!(vtv.max_abs_diff(&ComplexMatrix::identity(n)) < tol);
        assert!(eig.reconstruct().max_abs_diff(m) < tol);
    }

    #[test]
    fn pauli_z_spectrum() {
        let eig = hermitian_eig_default(&pauli::sigma_z::<f64>()).unwrap();
        assert_eq!(eig.values, vec![-1.0, 1.0]);
    }

    #[test]
    fn identity_keeps_identity_vectors() {
        let id = ComplexMatrix::<f64>::identity(4);
        let eig = hermitian_eig_default(&id).unwrap();
        assert_eq!(eig.values, vec![1.0; 4]);
        assert_eq!(eig.vectors, id);
    }

    #[test]
    fn complex_pivot_is_annihilated() {
        let m = ComplexMatrix::new(2, vec![cr(1.0), c(0.3, -0.7), c(0.3, 0.7), cr(-2.0)]).unwrap();
        let eig = hermitian_eig_default(&m).unwrap();
        check_decomposition(&m, &eig, 1e-12);
        // trace and determinant
        assert!((eig.values[0] + eig.values[1] + 1.0).abs() < 1e-12);
        assert!((eig.values[0] * eig.values[1] - (-2.0 - 0.58)).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::<f64>::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(
            hermitian_eig_default(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn dense_complex_matrix() {
        let m = ComplexMatrix::<f64>::from_fn(6, |i, j| {
            let (i, j) = (i as f64, j as f64);
            if i == j {
                cr(i * 0.7 - 1.0)
            } else {
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                let im = (lo - hi) * 0.11;
                c((lo + 1.0) / (hi + 2.0), if i < j { im } else { -im })
            }
        });
        let eig = hermitian_eig_default(&m).unwrap();
        check_decomposition(&m, &eig, 1e-12);
        let sum: f64 = eig.values.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-12);
    }

    #[test]
    fn deterministic_output() {
        let m =
            ComplexMatrix::<f64>::from_fn(4, |i, j| c((i + j) as f64 * 0.3, i as f64 - j as f64));
        let a = hermitian_eig_default(&m).unwrap();
        let b = hermitian_eig_default(&m).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_precision_path() {
        let m = ComplexMatrix::<f32>::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let eig = hermitian_eig_default(&m).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-5);
        assert!((eig.values[1] - 3.0).abs() < 1e-5);
    }
}
