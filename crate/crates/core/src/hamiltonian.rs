//! Reference two-qubit Hamiltonians.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig_default, pauli, tensor_product, ComplexMatrix, EigenDecomposition,
};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Ising,
    Heisenberg,
    Custom,
}

impl ModelKind {
    pub fn label(self) -> &'static str {
        match self {
            ModelKind::Ising => "ising",
            ModelKind::Heisenberg => "heisenberg",
            ModelKind::Custom => "custom",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ising" => Ok(ModelKind::Ising),
            "heisenberg" => Ok(ModelKind::Heisenberg),
            "custom" => Ok(ModelKind::Custom),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// Physical parameters of a reference model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams<T> {
    /// Single-qubit frequency ω.
    pub omega: T,
    /// Two-body coupling J ≥ 0.
    pub coupling: T,
    /// Energy scale ħ > 0.
    pub hbar: T,
}

impl<T: Real> ModelParams<T> {
    pub fn new(omega: T, coupling: T, hbar: T) -> Result<Self> {
        if !(coupling >= T::zero()) {
            return Err(Error::OutOfRange {
                name: "coupling",
                value: coupling.to_f64_lossy(),
                allowed: "J >= 0",
            });
        }
        if !(hbar > T::zero()) {
            return Err(Error::OutOfRange {
                name: "hbar",
                value: hbar.to_f64_lossy(),
                allowed: "hbar > 0",
            });
        }
        if !omega.is_finite() {
            return Err(Error::OutOfRange {
                name: "omega",
                value: omega.to_f64_lossy(),
                allowed: "finite",
            });
        }
        Ok(Self {
            omega,
            coupling,
            hbar,
        })
    }
}

/// Hermitian observable with its cached ascending spectral decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianModel<T> {
    matrix: ComplexMatrix<T>,
    spectrum: EigenDecomposition<T>,
    kind: ModelKind,
    params: Option<ModelParams<T>>,
}

impl<T: Real> HamiltonianModel<T> {
    /// Wraps an arbitrary Hermitian matrix.
    pub fn custom(matrix: ComplexMatrix<T>) -> Result<Self> {
        let spectrum = hermitian_eig_default(&matrix)?;
        Ok(Self {
            matrix: matrix.symmetrized(),
            spectrum,
            kind: ModelKind::Custom,
            params: None,
        })
    }

    fn with_kind(
        matrix: ComplexMatrix<T>,
        kind: ModelKind,
        params: ModelParams<T>,
    ) -> Result<Self> {
        let mut model = Self::custom(matrix)?;
        model.kind = kind;
        model.params = Some(params);
        Ok(model)
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn spectrum(&self) -> &EigenDecomposition<T> {
        &self.spectrum
    }

    /// Energy levels, ascending.
    pub fn levels(&self) -> &[T] {
        &self.spectrum.values
    }

    pub fn ground_energy(&self) -> T {
        self.spectrum.values[0]
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn params(&self) -> Option<ModelParams<T>> {
        self.params
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// `ħω(σ_z ⊗ 𝟙 + 𝟙 ⊗ σ_z)`.
pub fn free_hamiltonian<T: Real>(omega: T, hbar: T) -> ComplexMatrix<T> {
    let z = pauli::sigma_z::<T>();
    let id = pauli::identity::<T>();
    (&tensor_product(&z, &id) + &tensor_product(&id, &z)).scale(hbar * omega)
}

/// `Jħ σ_z ⊗ σ_z`.
pub fn ising_interaction<T: Real>(coupling: T, hbar: T) -> ComplexMatrix<T> {
    let z = pauli::sigma_z::<T>();
    tensor_product(&z, &z).scale(coupling * hbar)
}

/// `(Jħ/√2)(σ_x ⊗ σ_x + σ_y ⊗ σ_y)`, normalized to the Ising interaction's
/// Hilbert-Schmidt norm.
pub fn heisenberg_interaction<T: Real>(coupling: T, hbar: T) -> ComplexMatrix<T> {
    let x = pauli::sigma_x::<T>();
    let y = pauli::sigma_y::<T>();
    (&tensor_product(&x, &x) + &tensor_product(&y, &y)).scale(coupling * hbar * T::FRAC_1_SQRT_2())
}

/// Ising model; levels `{-Jħ, -Jħ, (J-2ω)ħ, (J+2ω)ħ}` with product eigenstates.
pub fn ising_hamiltonian<T: Real>(omega: T, coupling: T, hbar: T) -> Result<HamiltonianModel<T>> {
    let params = ModelParams::new(omega, coupling, hbar)?;
    let h = &free_hamiltonian(omega, hbar) + &ising_interaction(coupling, hbar);
    HamiltonianModel::with_kind(h, ModelKind::Ising, params)
}

/// XX-coupled model; levels `{-√2Jħ, -2ωħ, √2Jħ, 2ωħ}`.
pub fn heisenberg_hamiltonian<T: Real>(
    omega: T,
    coupling: T,
    hbar: T,
) -> Result<HamiltonianModel<T>> {
    let params = ModelParams::new(omega, coupling, hbar)?;
    let h = &free_hamiltonian(omega, hbar) + &heisenberg_interaction(coupling, hbar);
    HamiltonianModel::with_kind(h, ModelKind::Heisenberg, params)
}

/// Builds either reference model.
pub fn reference_hamiltonian<T: Real>(
    kind: ModelKind,
    omega: T,
    coupling: T,
    hbar: T,
) -> Result<HamiltonianModel<T>> {
    match kind {
        ModelKind::Ising => ising_hamiltonian(omega, coupling, hbar),
        ModelKind::Heisenberg => heisenberg_hamiltonian(omega, coupling, hbar),
        ModelKind::Custom => Err(Error::UnknownLabel(
            "custom model has no parametric builder".to_string(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hilbert_schmidt_norm, partial_trace, Subsystem};
    use crate::scalar::cr;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    fn assert_levels(h: &HamiltonianModel<f64>, expected: &[f64]) {
        let expected = sorted(expected.to_vec());
        for (a, b) in h.levels().iter().zip(&expected) {
            assert!((a - b).abs() < 1e-9, "{:?} vs {:?}", h.levels(), expected);
        }
    }

    #[test]
    fn ising_reference_point() {
        let h = ising_hamiltonian(1.0, 0.5, 1.0).unwrap();
        assert_eq!(h.matrix(), &ComplexMatrix::diag(&[2.5, -0.5, -0.5, -1.5]));
        assert_eq!(h.levels(), &[-1.5, -0.5, -0.5, 2.5]);
    }

    #[test]
    fn ising_strong_coupling_ordering() {
        let h = ising_hamiltonian(1.0, 2.0, 1.0).unwrap();
        assert_eq!(h.levels(), &[-2.0, -2.0, 0.0, 4.0]);
    }

    #[test]
    fn ising_zero_is_zero_matrix() {
        let h = ising_hamiltonian(0.0, 0.0, 1.0).unwrap();
        assert_eq!(h.matrix(), &ComplexMatrix::zeros(4));
    }

    #[test]
    fn rejects_negative_coupling_and_hbar() {
        assert!(matches!(
            ising_hamiltonian(1.0, -0.1, 1.0),
            Err(Error::OutOfRange {
                name: "coupling",
                ..
            })
        ));
        assert!(heisenberg_hamiltonian(1.0, -1.0, 1.0).is_err());
        assert!(ising_hamiltonian(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn closed_form_spectra() {
        for &(w, j, hb) in &[
            (1.0, 0.5, 1.0),
            (0.5, 1.0, 1.0),
            (0.3, 2.0, 0.7),
            (2.0, 0.0, 1.3),
        ] {
            let s2 = std::f64::consts::SQRT_2;
            assert_levels(
                &ising_hamiltonian(w, j, hb).unwrap(),
                &[-j * hb, -j * hb, (j - 2.0 * w) * hb, (j + 2.0 * w) * hb],
            );
            assert_levels(
                &heisenberg_hamiltonian(w, j, hb).unwrap(),
                &[-s2 * j * hb, -2.0 * w * hb, s2 * j * hb, 2.0 * w * hb],
            );
        }
    }

    #[test]
    fn heisenberg_reference_point() {
        let h = heisenberg_hamiltonian(1.0, 0.5, 1.0).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_levels(&h, &[-r, -2.0, r, 2.0]);
    }

    #[test]
    fn heisenberg_without_coupling_matches_ising() {
        let a = heisenberg_hamiltonian(0.8, 0.0, 1.0).unwrap();
        let b = ising_hamiltonian(0.8, 0.0, 1.0).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-15);
    }

    #[test]
    fn heisenberg_singlet_ground_state() {
        // √2·0.5 < 1, so -√2J lies below -2ω
        let h = heisenberg_hamiltonian(0.5, 1.0, 1.0).unwrap();
        assert!((h.ground_energy() + std::f64::consts::SQRT_2).abs() < 1e-12);
        let g = h.spectrum().vector(0);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = [cr(0.0), cr(r), cr(-r), cr(0.0)];
        let overlap: num_complex::Complex<f64> =
            g.iter().zip(&singlet).map(|(a, b)| a.conj() * b).sum();
        assert!((overlap.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interaction_norms() {
        assert!((hilbert_schmidt_norm(&ising_interaction(1.0_f64, 1.0)) - 2.0).abs() < 1e-15);
        assert!((hilbert_schmidt_norm(&heisenberg_interaction(1.0_f64, 1.0)) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn ising_eigenstates_are_product_states() {
        let h = ising_hamiltonian(1.0_f64, 0.5, 1.0).unwrap();
        for k in 0..4 {
            let proj = ComplexMatrix::outer(&h.spectrum().vector(k));
            for keep in [Subsystem::A, Subsystem::B] {
                let r = partial_trace(&proj, (2, 2), keep).unwrap();
                let purity = r.trace_product(&r).re;
                assert!((purity - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        for k in [ModelKind::Ising, ModelKind::Heisenberg, ModelKind::Custom] {
            assert_eq!(k.label().parse::<ModelKind>().unwrap(), k);
        }
        assert!("xyz".parse::<ModelKind>().is_err());
    }
}
