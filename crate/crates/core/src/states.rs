//! Validated density matrices and two-qubit pure states.
//!
//! The two-qubit basis is ordered `{↑↑, ↑↓, ↓↑, ↓↓}` everywhere, with `↑` the
//! excited level (`σ_z|↑> = +|↑>`).

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, EigenDecomposition};
use crate::scalar::{cr, Real, C};

/// A quantum state: Hermitian, unit trace, positive semidefinite.
///
/// The spectral decomposition is computed once at validation and cached.
/// Eigenvalues in `[-CLAMP_TOL, 0)` are clamped to zero and the matrix is
/// rebuilt from the clamped spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
    dims: Vec<usize>,
    spectrum: EigenDecomposition<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates `matrix` as a state on a space with the given subsystem dims.
    pub fn new(matrix: ComplexMatrix<T>, dims: Vec<usize>) -> Result<Self> {
        let product: usize = dims.iter().product();
        if product != matrix.dim() {
            return Err(Error::DimensionMismatch {
                context: "density matrix subsystem dims",
                expected: matrix.dim(),
                found: product,
            });
        }
        let herm_tol = T::lit(T::HERMITIAN_TOL);
        let deviation = matrix.hermitian_deviation();
        if !(deviation <= herm_tol) {
            return Err(Error::NotHermitian {
                deviation: deviation.to_f64_lossy(),
                tol: T::HERMITIAN_TOL,
            });
        }
        let trace = matrix.trace().re;
        if !((trace - T::one()).abs() <= T::lit(T::TRACE_TOL)) {
            return Err(Error::InvalidState(format!("trace {trace} differs from 1")));
        }
        let mut spectrum = hermitian_eig(&matrix, herm_tol)?;
        let clamp = T::lit(T::CLAMP_TOL);
        let mut clamped = false;
        for v in spectrum.values.iter_mut() {
            if *v < -clamp {
                return Err(Error::InvalidState(format!("negative eigenvalue {v}")));
            }
            if *v < T::zero() {
                *v = T::zero();
                clamped = true;
            }
        }
        let matrix = if clamped {
            spectrum.reconstruct()
        } else {
            matrix.symmetrized()
        };
        Ok(Self {
            matrix,
            dims,
            spectrum,
        })
    }

    /// Two-qubit state (`dims = [2, 2]`).
    pub fn two_qubit(matrix: ComplexMatrix<T>) -> Result<Self> {
        Self::new(matrix, vec![2, 2])
    }

    pub fn from_pure(state: &PureState<T>, dims: Vec<usize>) -> Result<Self> {
        Self::new(ComplexMatrix::outer(state.amplitudes()), dims)
    }

    /// `𝟙/d` on the given subsystem dims.
    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let d: usize = dims.iter().product();
        let m = ComplexMatrix::identity(d).scale(T::one() / T::from_usize(d).expect("dim"));
        Self::new(m, dims).expect("maximally mixed state is valid")
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Cached spectral decomposition (ascending, clamped eigenvalues).
    pub fn spectrum(&self) -> &EigenDecomposition<T> {
        &self.spectrum
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.spectrum.values
    }

    /// `tr(O ρ)`, real part.
    pub fn expectation(&self, observable: &ComplexMatrix<T>) -> T {
        observable.trace_product(&self.matrix).re
    }

    /// Requires a bipartite state of two subsystems.
    pub fn bipartite_dims(&self) -> Result<(usize, usize)> {
        match self.dims.as_slice() {
            &[a, b] => Ok((a, b)),
            _ => Err(Error::DimensionMismatch {
                context: "bipartite state (number of subsystems)",
                expected: 2,
                found: self.dims.len(),
            }),
        }
    }

    /// Requires a two-qubit state.
    pub fn require_two_qubit(&self) -> Result<()> {
        if self.dim() != 4 {
            return Err(Error::DimensionMismatch {
                context: "two-qubit state",
                expected: 4,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

/// Unit-norm state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T> {
    amplitudes: Vec<C<T>>,
}

impl<T: Real> PureState<T> {
    pub fn new(amplitudes: Vec<C<T>>) -> Result<Self> {
        let norm = amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt();
        if !((norm - T::one()).abs() <= T::lit(1e-12).max(T::epsilon() * T::lit(16.0))) {
            return Err(Error::InvalidState(format!(
                "state norm {norm} differs from 1"
            )));
        }
        Ok(Self { amplitudes })
    }

    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amplitudes
    }

    pub fn projector(&self) -> ComplexMatrix<T> {
        ComplexMatrix::outer(&self.amplitudes)
    }
}

/// Bell states used by the Werner family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellKind {
    /// `(|↑↑> + |↓↓>)/√2`
    PhiPlus,
    /// `(|↑↑> - |↓↓>)/√2`
    PhiMinus,
    /// `(|↑↓> + |↓↑>)/√2`
    PsiPlus,
    /// Singlet `(|↑↓> - |↓↑>)/√2`
    PsiMinus,
}

impl BellKind {
    pub fn label(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "phi_plus",
            BellKind::PhiMinus => "phi_minus",
            BellKind::PsiPlus => "psi_plus",
            BellKind::PsiMinus => "psi_minus",
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BellKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi_plus" => Ok(BellKind::PhiPlus),
            "phi_minus" => Ok(BellKind::PhiMinus),
            "psi_plus" => Ok(BellKind::PsiPlus),
            "psi_minus" => Ok(BellKind::PsiMinus),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// Single-qubit level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl TryFrom<char> for Spin {
    type Error = Error;

    fn try_from(ch: char) -> Result<Self> {
        match ch {
            'u' | 'U' | '↑' | '0' => Ok(Spin::Up),
            'd' | 'D' | '↓' | '1' => Ok(Spin::Down),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

pub fn bell_state<T: Real>(kind: BellKind) -> PureState<T> {
    let s = T::FRAC_1_SQRT_2();
    let z = T::zero();
    let amps = match kind {
        BellKind::PhiPlus => [s, z, z, s],
        BellKind::PhiMinus => [s, z, z, -s],
        BellKind::PsiPlus => [z, s, s, z],
        BellKind::PsiMinus => [z, s, -s, z],
    };
    PureState {
        amplitudes: amps.into_iter().map(cr).collect(),
    }
}

/// Computational basis state; the first spin is the most significant index.
pub fn basis_state<T: Real>(pattern: &[Spin]) -> Result<PureState<T>> {
    if pattern.is_empty() {
        return Err(Error::UnknownLabel(String::new()));
    }
    let index = pattern
        .iter()
        .fold(0usize, |acc, s| (acc << 1) | usize::from(*s == Spin::Down));
    let mut amplitudes = vec![C::zero(); 1 << pattern.len()];
    amplitudes[index] = cr(T::one());
    Ok(PureState { amplitudes })
}

/// Parses patterns such as `"dd"`, `"↑↓"` or `"01"`.
pub fn basis_state_from_label<T: Real>(label: &str) -> Result<PureState<T>> {
    let spins = label
        .chars()
        .map(Spin::try_from)
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::UnknownLabel(label.to_string()))?;
    basis_state(&spins)
}

/// `(1-ε)/4 𝟙 + ε |bell><bell|`.
pub fn werner_state<T: Real>(epsilon: T, kind: BellKind) -> Result<DensityMatrix<T>> {
    if !(epsilon >= T::zero() && epsilon <= T::one()) {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon.to_f64_lossy(),
            allowed: "[0, 1]",
        });
    }
    let mixed = ComplexMatrix::identity(4).scale((T::one() - epsilon) / T::lit(4.0));
    let bell = bell_state::<T>(kind).projector().scale(epsilon);
    DensityMatrix::two_qubit(&mixed + &bell)
}

/// `(1-ε)/4 𝟙 + ε |ψ><ψ|` for an arbitrary two-qubit pure state.
pub fn werner_like<T: Real>(epsilon: T, state: &PureState<T>) -> Result<DensityMatrix<T>> {
    let mixed = ComplexMatrix::identity(4).scale((T::one() - epsilon) / T::lit(4.0));
    DensityMatrix::two_qubit(&mixed + &state.projector().scale(epsilon))
}
