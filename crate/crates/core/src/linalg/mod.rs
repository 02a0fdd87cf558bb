//! Dense complex linear algebra for few-qubit states and observables.

mod eigen;
mod matrix;

pub use eigen::{hermitian_eig, hermitian_eig_default, EigenDecomposition, MAX_SWEEPS};
pub use matrix::{pauli, ComplexMatrix};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Real, C};

/// Which factor of a bipartite space to keep in [`partial_trace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Kronecker product `A ⊗ B`.
pub fn tensor_product<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let (na, nb) = (a.dim(), b.dim());
    ComplexMatrix::from_fn(na * nb, |i, j| a[(i / nb, j / nb)] * b[(i % nb, j % nb)])
}

/// Traces out one factor of a `dims.0 x dims.1` bipartite operator.
pub fn partial_trace<T: Real>(
    m: &ComplexMatrix<T>,
    dims: (usize, usize),
    keep: Subsystem,
) -> Result<ComplexMatrix<T>> {
    let (da, db) = dims;
    if da * db != m.dim() {
        return Err(Error::DimensionMismatch {
            context: "partial_trace",
            expected: da * db,
            found: m.dim(),
        });
    }
    Ok(match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, |i, j| {
            (0..db).fold(C::zero(), |acc, k| acc + m[(i * db + k, j * db + k)])
        }),
        Subsystem::B => ComplexMatrix::from_fn(db, |i, j| {
            (0..da).fold(C::zero(), |acc, k| acc + m[(k * db + i, k * db + j)])
        }),
    })
}

/// Spectral calculus `V f(Λ) V^dag`.
///
/// Any non-finite `f(λ)` is reported as [`Error::DomainError`]; callers that
/// need `0 ln 0 = 0` must encode it in `f`.
pub fn hermitian_function<T: Real>(
    m: &ComplexMatrix<T>,
    f: impl Fn(T) -> T,
) -> Result<ComplexMatrix<T>> {
    let eig = hermitian_eig_default(m)?;
    let mapped = eig
        .values
        .iter()
        .map(|&x| {
            let y = f(x);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(Error::DomainError {
                    eigenvalue: x.to_f64_lossy(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(eig.compose(&mapped))
}

/// `(tr A A^dag)^{1/2}`.
pub fn hilbert_schmidt_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    a.frobenius_norm()
}
