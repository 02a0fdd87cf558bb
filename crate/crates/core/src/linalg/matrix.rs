use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{c, cr, Real, C};

/// Dense square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    entries: Vec<C<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn new(dim: usize, entries: Vec<C<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::OutOfRange {
                name: "dim",
                value: 0.0,
                allowed: "positive integer",
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::NonSquare {
                dim,
                len: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix from separate real and imaginary row-major parts.
    pub fn from_parts(dim: usize, re: &[T], im: &[T]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::NonSquare {
                dim,
                len: re.len().max(im.len()),
            });
        }
        Self::new(dim, re.iter().zip(im).map(|(&r, &i)| c(r, i)).collect())
    }

    /// Builds a real matrix from row slices. Panics on ragged input.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "rows must form a square matrix");
            entries.extend(row.iter().map(|&x| cr(T::lit(x))));
        }
        Self { dim, entries }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![C::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { cr(T::one()) } else { C::zero() })
    }

    pub fn diag(values: &[T]) -> Self {
        Self::from_fn(
            values.len(),
            |i, j| {
                if i == j {
                    cr(values[i])
                } else {
                    C::zero()
                }
            },
        )
    }

    /// Projector `|v><v|` (not normalized).
    pub fn outer(v: &[C<T>]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<C<T>> {
        self.entries
    }

    pub fn column(&self, j: usize) -> Vec<C<T>> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate in the computational basis.
    pub fn conj(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn trace(&self) -> C<T> {
        (0..self.dim).fold(C::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_complex(&self, s: C<T>) -> Self {
        self.map(|z| z * s)
    }

    pub fn map(&self, f: impl Fn(C<T>) -> C<T>) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }

    /// Max-abs entry of `self - other`. Panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Max-abs entry of `M - M^dag`.
    pub fn hermitian_deviation(&self) -> T {
        let mut dev = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// `(M + M^dag) / 2`.
    pub fn symmetrized(&self) -> Self {
        let half = T::lit(0.5);
        Self::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * half)
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// `<u| M |v>`.
    pub fn sandwich(&self, u: &[C<T>], v: &[C<T>]) -> C<T> {
        let mut acc = C::zero();
        for i in 0..self.dim {
            let mut row = C::zero();
            for j in 0..self.dim {
                row = row + self[(i, j)] * v[j];
            }
            acc = acc + u[i].conj() * row;
        }
        acc
    }

    pub fn mul_vec(&self, v: &[C<T>]) -> Vec<C<T>> {
        (0..self.dim)
            .map(|i| (0..self.dim).fold(C::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> C<T> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut acc = C::zero();
        for i in 0..n {
            for k in 0..n {
                acc = acc + self[(i, k)] * other[(k, i)];
            }
        }
        acc
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] = out.entries[i * n + j] + a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Conversion between scalar types.
    pub fn cast<U: Real>(&self) -> ComplexMatrix<U> {
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|z| c(U::lit(z.re.to_f64_lossy()), U::lit(z.im.to_f64_lossy())))
                .collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = C<T>;

    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.entries[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.entries[i * self.dim + j]
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Single-qubit Pauli matrices and identity.
pub mod pauli {
    use super::ComplexMatrix;
    use crate::scalar::{c, Real};
    use num_traits::Zero;

    pub fn identity<T: Real>() -> ComplexMatrix<T> {
        ComplexMatrix::identity(2)
    }

    pub fn sigma_x<T: Real>() -> ComplexMatrix<T> {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    pub fn sigma_y<T: Real>() -> ComplexMatrix<T> {
        let z = num_complex::Complex::zero();
        ComplexMatrix::new(
            2,
            vec![z, c(T::zero(), -T::one()), c(T::zero(), T::one()), z],
        )
        .expect("2x2")
    }

    pub fn sigma_z<T: Real>() -> ComplexMatrix<T> {
        ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_square_and_empty() {
        let err = ComplexMatrix::<f64>::new(2, vec![C::zero(); 3]).unwrap_err();
        assert!(matches!(err, Error::NonSquare { dim: 2, len: 3 }));
        assert!(ComplexMatrix::<f64>::new(0, vec![]).is_err());
    }

    #[test]
    fn pauli_algebra() {
        let x = pauli::sigma_x::<f64>();
        let y = pauli::sigma_y::<f64>();
        let z = pauli::sigma_z::<f64>();
        // xy = iz
        let xy = &x * &y;
        let iz = z.scale_complex(c(0.0, 1.0));
        assert!(xy.max_abs_diff(&iz) < 1e-15);
        assert_eq!(y.hermitian_deviation(), 0.0);
        assert_eq!((&z * &z), ComplexMatrix::identity(2));
    }

    #[test]
    fn trace_product_matches_matmul() {
        let a = ComplexMatrix::<f64>::from_fn(3, |i, j| c(i as f64 + 1.0, j as f64 - 0.5));
        let b = ComplexMatrix::<f64>::from_fn(3, |i, j| c((i * j) as f64, 1.0));
        let direct = (&a * &b).trace();
        assert!((a.trace_product(&b) - direct).norm() < 1e-12);
    }
}
