//! Passive states, ergotropy, Gibbs states and the exergy ledger.
//!
//! All entropies are in nats. The inverse temperature `beta` must be finite
//! and positive; Boltzmann weights are computed relative to the ground
//! energy so large `beta` never overflows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::HamiltonianModel;
use crate::linalg::ComplexMatrix;
use crate::scalar::{entropy_term, Real};
use crate::states::DensityMatrix;

/// Absolute slack used by the sign checks on energies.
pub const ENERGY_TOL: f64 = 1e-9;

/// Von Neumann entropy `-tr ρ ln ρ` in nats.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    rho.eigenvalues()
        .iter()
        .fold(T::zero(), |acc, &p| acc + entropy_term(p))
}

/// Result of unitary work extraction.
#[derive(Debug, Clone, PartialEq)]
pub struct PassiveResult<T> {
    pub passive: DensityMatrix<T>,
    pub ergotropy: T,
    /// `pairing[j]` is the energy level (index into the ascending spectrum
    /// of H) that receives the population of the `j`-th eigenvector of ρ,
    /// with ρ's eigenvectors in its own ascending order.
    pub pairing: Vec<usize>,
    /// Unitary with `U ρ U^dag = passive`.
    pub optimal_unitary: ComplexMatrix<T>,
}

impl<T: Real> PassiveResult<T> {
    /// `S(passive) - S(ρ)`; zero up to round-off since extraction is unitary.
    pub fn entropy_gap(&self, rho: &DensityMatrix<T>) -> T {
        von_neumann_entropy(&self.passive) - von_neumann_entropy(rho)
    }
}

fn check_dims<T: Real>(rho: &DensityMatrix<T>, h: &HamiltonianModel<T>) -> Result<()> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            context: "state vs Hamiltonian",
            expected: h.dim(),
            found: rho.dim(),
        });
    }
    Ok(())
}

/// Passive state by pairing descending populations with ascending energies.
///
/// Both sorts are stable, so equal populations and degenerate levels keep
/// the order of their eigendecompositions.
pub fn passive_state<T: Real>(
    rho: &DensityMatrix<T>,
    h: &HamiltonianModel<T>,
) -> Result<PassiveResult<T>> {
    check_dims(rho, h)?;
    let n = rho.dim();
    let pops = rho.eigenvalues();
    let mut by_population: Vec<usize> = (0..n).collect();
    by_population.sort_by(|&a, &b| pops[b].partial_cmp(&pops[a]).expect("finite populations"));

    let mut pairing = vec![0; n];
    for (level, &j) in by_population.iter().enumerate() {
        pairing[j] = level;
    }
    let level_pops: Vec<T> = by_population.iter().map(|&j| pops[j]).collect();
    let energy_basis = h.spectrum();
    let passive_matrix = energy_basis.compose(&level_pops);

    // U = Σ_j |e_{pairing[j]}><r_j|
    let rv = &rho.spectrum().vectors;
    let ev = &energy_basis.vectors;
    let optimal_unitary = ComplexMatrix::from_fn(n, |a, b| {
        (0..n).fold(num_complex::Complex::new(T::zero(), T::zero()), |acc, j| {
            acc + ev[(a, pairing[j])] * rv[(b, j)].conj()
        })
    });

    let passive_energy = level_pops
        .iter()
        .zip(h.levels())
        .fold(T::zero(), |acc, (&p, &e)| acc + p * e);
    let ergotropy = rho.expectation(h.matrix()) - passive_energy;
    let passive = DensityMatrix::new(passive_matrix, rho.dims().to_vec())?;
    Ok(PassiveResult {
        passive,
        ergotropy,
        pairing,
        optimal_unitary,
    })
}

/// Maximum work extractable by a cyclic unitary.
pub fn ergotropy<T: Real>(rho: &DensityMatrix<T>, h: &HamiltonianModel<T>) -> Result<T> {
    Ok(passive_state(rho, h)?.ergotropy)
}

fn check_beta<T: Real>(beta: T) -> Result<()> {
    if !(beta > T::zero() && beta.is_finite()) {
        return Err(Error::OutOfRange {
            name: "beta",
            value: beta.to_f64_lossy(),
            allowed: "0 < beta < inf",
        });
    }
    Ok(())
}

/// Boltzmann weights `e^{-β(E_k - E_0)}` and their sum.
fn shifted_weights<T: Real>(h: &HamiltonianModel<T>, beta: T) -> (Vec<T>, T) {
    let e0 = h.ground_energy();
    let w: Vec<T> = h
        .levels()
        .iter()
        .map(|&e| (-beta * (e - e0)).exp())
        .collect();
    let sum = w.iter().fold(T::zero(), |acc, &x| acc + x);
    (w, sum)
}

/// `ln Z`, evaluated without forming `Z`.
pub fn log_partition_function<T: Real>(h: &HamiltonianModel<T>, beta: T) -> Result<T> {
    check_beta(beta)?;
    let (_, sum) = shifted_weights(h, beta);
    Ok(-beta * h.ground_energy() + sum.ln())
}

/// `Z = tr e^{-βH}`. Fails with [`Error::Overflow`] when `Z` is not
/// representable; [`log_partition_function`] stays finite in that case.
pub fn partition_function<T: Real>(h: &HamiltonianModel<T>, beta: T) -> Result<T> {
    let log_z = log_partition_function(h, beta)?;
    let z = log_z.exp();
    if !z.is_finite() || z <= T::zero() {
        return Err(Error::Overflow {
            log_z: log_z.to_f64_lossy(),
        });
    }
    Ok(z)
}

/// Thermal state `e^{-βH}/Z`.
pub fn gibbs_state<T: Real>(h: &HamiltonianModel<T>, beta: T) -> Result<DensityMatrix<T>> {
    check_beta(beta)?;
    let (w, sum) = shifted_weights(h, beta);
    let pops: Vec<T> = w.iter().map(|&x| x / sum).collect();
    let dims = if h.dim() == 4 {
        vec![2, 2]
    } else {
        vec![h.dim()]
    };
    DensityMatrix::new(h.spectrum().compose(&pops), dims)
}

/// Nonequilibrium free energy `tr(Hρ) - S(ρ)/β`.
pub fn free_energy<T: Real>(rho: &DensityMatrix<T>, h: &HamiltonianModel<T>, beta: T) -> Result<T> {
    check_dims(rho, h)?;
    check_beta(beta)?;
    Ok(rho.expectation(h.matrix()) - von_neumann_entropy(rho) / beta)
}

/// Equilibrium free energy `-ln Z / β`.
pub fn equilibrium_free_energy<T: Real>(h: &HamiltonianModel<T>, beta: T) -> Result<T> {
    Ok(-log_partition_function(h, beta)? / beta)
}

/// Free-energy drop on thermalizing to the Gibbs state at `beta`.
pub fn exergy<T: Real>(rho: &DensityMatrix<T>, h: &HamiltonianModel<T>, beta: T) -> Result<T> {
    Ok(free_energy(rho, h, beta)? - equilibrium_free_energy(h, beta)?)
}

/// Energy ledger for one `(ρ, H, β)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermoReport<T> {
    pub ergotropy: T,
    pub exergy_total: T,
    pub exergy_passive: T,
    pub entropy_initial: T,
    pub entropy_passive: T,
    pub entropy_thermal: T,
    /// `tr(Hρ_β) - tr(Hϱ)`.
    pub heat: T,
    /// `exergy_total - ergotropy - exergy_passive`.
    pub balance_residual: T,
    pub beta: T,
}

impl<T: Real> ThermoReport<T> {
    /// Whether the balance residual is within `1e-9 · max(1, |exergy_total|)`.
    pub fn balance_holds(&self) -> bool {
        let scale = T::one().max(self.exergy_total.abs());
        self.balance_residual.abs() < T::lit(ENERGY_TOL) * scale
    }
}

/// Computes the exergy ledger. Total exergy, ergotropy and passive-state
/// exergy are evaluated independently so the residual is a real check.
pub fn exergy_decomposition<T: Real>(
    rho: &DensityMatrix<T>,
    h: &HamiltonianModel<T>,
    beta: T,
) -> Result<ThermoReport<T>> {
    let passive = passive_state(rho, h)?;
    exergy_decomposition_with(rho, h, beta, &passive)
}

/// [`exergy_decomposition`] reusing an already computed passive state.
pub fn exergy_decomposition_with<T: Real>(
    rho: &DensityMatrix<T>,
    h: &HamiltonianModel<T>,
    beta: T,
    passive: &PassiveResult<T>,
) -> Result<ThermoReport<T>> {
    let f_eq = equilibrium_free_energy(h, beta)?;
    let exergy_total = free_energy(rho, h, beta)? - f_eq;
    let exergy_passive = free_energy(&passive.passive, h, beta)? - f_eq;
    let thermal = gibbs_state(h, beta)?;
    let heat = thermal.expectation(h.matrix()) - passive.passive.expectation(h.matrix());
    Ok(ThermoReport {
        ergotropy: passive.ergotropy,
        exergy_total,
        exergy_passive,
        entropy_initial: von_neumann_entropy(rho),
        entropy_passive: von_neumann_entropy(&passive.passive),
        entropy_thermal: von_neumann_entropy(&thermal),
        heat,
        balance_residual: exergy_total - passive.ergotropy - exergy_passive,
        beta,
    })
}

/// One row of the thermodynamics table. Column order is fixed by the
/// field order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThermoRow {
    /// Werner weight ε, or an identifier for states read from a file.
    pub id: String,
    pub model: String,
    pub omega: Option<f64>,
    #[serde(rename = "J")]
    pub coupling: Option<f64>,
    pub hbar: Option<f64>,
    pub beta: f64,
    pub ergotropy: f64,
    pub exergy_total: f64,
    pub exergy_passive: f64,
    #[serde(rename = "S_initial")]
    pub entropy_initial: f64,
    #[serde(rename = "S_passive")]
    pub entropy_passive: f64,
    #[serde(rename = "S_thermal")]
    pub entropy_thermal: f64,
    pub heat: f64,
    pub balance_residual: f64,
}

impl ThermoRow {
    pub const HEADER: [&'static str; 14] = [
        "id",
        "model",
        "omega",
        "J",
        "hbar",
        "beta",
        "ergotropy",
        "exergy_total",
        "exergy_passive",
        "S_initial",
        "S_passive",
        "S_thermal",
        "heat",
        "balance_residual",
    ];

    pub fn from_report(
        id: impl Into<String>,
        h: &HamiltonianModel<f64>,
        report: &ThermoReport<f64>,
    ) -> Self {
        let params = h.params();
        Self {
            id: id.into(),
            model: h.kind().label().to_string(),
            omega: params.map(|p| p.omega),
            coupling: params.map(|p| p.coupling),
            hbar: params.map(|p| p.hbar),
            beta: report.beta,
            ergotropy: report.ergotropy,
            exergy_total: report.exergy_total,
            exergy_passive: report.exergy_passive,
            entropy_initial: report.entropy_initial,
            entropy_passive: report.entropy_passive,
            entropy_thermal: report.entropy_thermal,
            heat: report.heat,
            balance_residual: report.balance_residual,
        }
    }
}

/// Outcome of the second-law check `ΔS_ex ≥ βQ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyProductionCheck<T> {
    /// `ΔS_ex - βQ`, with `ΔS_ex = S(ρ_β) - S(ϱ)`.
    pub margin: T,
    /// Strict regime: the passive state still holds exergy.
    pub strict: bool,
    pub holds: bool,
}

pub fn entropy_production_check<T: Real>(report: &ThermoReport<T>) -> EntropyProductionCheck<T> {
    let tol = T::lit(ENERGY_TOL);
    let delta_s = report.entropy_thermal - report.entropy_passive;
    let margin = delta_s - report.beta * report.heat;
    EntropyProductionCheck {
        margin,
        strict: report.exergy_passive > tol,
        holds: margin >= -tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{heisenberg_hamiltonian, ising_hamiltonian};
    use crate::states::{basis_state_from_label, bell_state, werner_like, werner_state, BellKind};

    // frozen from an mpmath evaluation of -Σ λ ln λ, ln Z_Is, Z_H (30 digits)
    const S_WERNER_HALF: f64 = 1.073_542_846_408_523_2;
    const LN_Z_ISING_REF: f64 = 2.061_941_379_496_509_2;
    const Z_ISING_REF: f64 = 7.861_216_610_362_22;
    const Z_HEIS_REF: f64 = 10.045_575_055_209_975;
    const EXERGY_WERNER_HALF: f64 = 1.238_398_533_087_986;
    const EXERGY_PASSIVE_WERNER_HALF: f64 = 0.238_398_533_087_986;

    fn ising_ref() -> HamiltonianModel<f64> {
        ising_hamiltonian(1.0, 0.5, 1.0).unwrap()
    }

    #[test]
    fn entropy_examples() {
        let bell =
            DensityMatrix::from_pure(&bell_state::<f64>(BellKind::PhiPlus), vec![2, 2]).unwrap();
        assert!(von_neumann_entropy(&bell).abs() < 1e-12);
        let mixed = DensityMatrix::<f64>::maximally_mixed(vec![2, 2]);
        assert!((von_neumann_entropy(&mixed) - 4f64.ln()).abs() < 1e-12);
        let w = werner_state(0.5, BellKind::PhiPlus).unwrap();
        assert!((von_neumann_entropy(&w) - S_WERNER_HALF).abs() < 1e-12);
    }

    #[test]
    fn ising_werner_passive_state() {
        let eps = 0.5;
        let rho = werner_state(eps, BellKind::PhiPlus).unwrap();
        let res = passive_state(&rho, &ising_ref()).unwrap();
        let dd = basis_state_from_label::<f64>("dd").unwrap();
        let expected = werner_like(eps, &dd).unwrap();
        assert!(res.passive.matrix().max_abs_diff(expected.matrix()) < 1e-12);
        assert!((res.ergotropy - 1.0).abs() < 1e-12);
        let rotated = &(&res.optimal_unitary * rho.matrix()) * &res.optimal_unitary.adjoint();
        assert!(rotated.max_abs_diff(res.passive.matrix()) < 1e-12);
    }

    #[test]
    fn heisenberg_werner_passive_is_singlet_werner() {
        let h = heisenberg_hamiltonian(0.5, 1.0, 1.0).unwrap();
        let rho = werner_state(0.5, BellKind::PhiPlus).unwrap();
        let res = passive_state(&rho, &h).unwrap();
        let expected = werner_state(0.5, BellKind::PsiMinus).unwrap();
        assert!(res.passive.matrix().max_abs_diff(expected.matrix()) < 1e-12);
        assert!((res.ergotropy - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn strong_coupling_ising_ergotropy() {
        let h = ising_hamiltonian(1.0_f64, 2.0, 1.0).unwrap();
        let rho = werner_state(0.8, BellKind::PhiPlus).unwrap();
        assert!((ergotropy(&rho, &h).unwrap() - 3.2).abs() < 1e-12);
    }

    #[test]
    fn maximally_mixed_has_no_ergotropy() {
        let rho = werner_state(0.0_f64, BellKind::PhiPlus).unwrap();
        for h in [ising_ref(), heisenberg_hamiltonian(0.3, 1.7, 1.0).unwrap()] {
            assert!(ergotropy(&rho, &h).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn gibbs_state_is_passive_fixed_point() {
        let h = heisenberg_hamiltonian(0.7_f64, 0.4, 1.0).unwrap();
        let g = gibbs_state(&h, 1.3).unwrap();
        let res = passive_state(&g, &h).unwrap();
        assert!(res.ergotropy.abs() < 1e-12);
        assert!(res.passive.matrix().max_abs_diff(g.matrix()) < 1e-12);
        assert!(exergy(&g, &h, 1.3).unwrap().abs() < 1e-12);
    }

    #[test]
    fn partition_function_references() {
        let zi = partition_function(&ising_ref(), 1.0).unwrap();
        assert!((zi - Z_ISING_REF).abs() < 1e-12);
        let zh = partition_function(&heisenberg_hamiltonian(1.0, 0.5, 1.0).unwrap(), 1.0).unwrap();
        assert!((zh - Z_HEIS_REF).abs() < 1e-12);
    }

    #[test]
    fn low_temperature_concentrates_on_ground_state() {
        let g = gibbs_state(&ising_ref(), 50.0).unwrap();
        let m = g.matrix();
        let excited: f64 = (0..3).map(|i| m[(i, i)].re).sum();
        assert!(excited < 1e-20);
        assert!(m[(3, 3)].re <= 1.0);
    }

    #[test]
    fn huge_beta_overflow_guard() {
        let h = ising_ref();
        assert!(gibbs_state(&h, 1e3).is_ok());
        assert!(log_partition_function(&h, 1e3).unwrap().is_finite());
        assert!(matches!(
            partition_function(&h, 1e3),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn beta_validation() {
        let h = ising_ref();
        for beta in [0.0, -1.0, f64::INFINITY, f64::NAN] {
            assert!(matches!(
                gibbs_state(&h, beta),
                Err(Error::OutOfRange { name: "beta", .. })
            ));
        }
    }

    #[test]
    fn free_energy_examples() {
        let h = ising_ref();
        let beta = 1.0;
        let g = gibbs_state(&h, beta).unwrap();
        let ln_z = log_partition_function(&h, beta).unwrap();
        assert!((free_energy(&g, &h, beta).unwrap() + ln_z / beta).abs() < 1e-9);
        assert!((ln_z - LN_Z_ISING_REF).abs() < 1e-12);

        let mixed = DensityMatrix::maximally_mixed(vec![2, 2]);
        assert!((free_energy(&mixed, &h, 2.0).unwrap() + 4f64.ln() / 2.0).abs() < 1e-12);

        let w = werner_state(0.5, BellKind::PhiPlus).unwrap();
        assert!((free_energy(&w, &h, beta).unwrap() - (0.25 - S_WERNER_HALF)).abs() < 1e-12);
    }

    #[test]
    fn werner_exergy_ledger() {
        let h = ising_ref();
        let w = werner_state(0.5, BellKind::PhiPlus).unwrap();
        assert!((exergy(&w, &h, 1.0).unwrap() - EXERGY_WERNER_HALF).abs() < 1e-12);
        let r = exergy_decomposition(&w, &h, 1.0).unwrap();
        assert!((r.ergotropy - 1.0).abs() < 1e-12);
        assert!((r.exergy_total - EXERGY_WERNER_HALF).abs() < 1e-12);
        assert!((r.exergy_passive - EXERGY_PASSIVE_WERNER_HALF).abs() < 1e-12);
        assert!(r.balance_holds());
        assert!((r.entropy_initial - r.entropy_passive).abs() < 1e-12);
        let check = entropy_production_check(&r);
        assert!(check.strict && check.holds && check.margin > 0.0);
    }

    #[test]
    fn thermal_input_has_empty_ledger() {
        let h = ising_ref();
        let g = gibbs_state(&h, 1.0).unwrap();
        let r = exergy_decomposition(&g, &h, 1.0).unwrap();
        for v in [r.ergotropy, r.exergy_total, r.exergy_passive] {
            assert!(v.abs() < 1e-9);
        }
        let check = entropy_production_check(&r);
        assert!(!check.strict && check.holds && check.margin.abs() < 1e-9);
    }

    #[test]
    fn ground_state_keeps_passive_exergy() {
        let h = ising_ref();
        let ground =
            DensityMatrix::from_pure(&basis_state_from_label("dd").unwrap(), vec![2, 2]).unwrap();
        for beta in [0.5, 1.0, 3.0] {
            let r = exergy_decomposition(&ground, &h, beta).unwrap();
            assert!(r.ergotropy.abs() < 1e-12);
            // F(ground) - F(ρ_β) = E_0 + ln Z / β
            let expected = -1.5 + log_partition_function(&h, beta).unwrap() / beta;
            assert!((r.exergy_passive - expected).abs() < 1e-12);
            assert!(r.exergy_passive > 0.0);
        }
    }

    #[test]
    fn ground_state_exergy_at_unit_beta() {
        let h = ising_ref();
        let ground =
            DensityMatrix::from_pure(&basis_state_from_label("dd").unwrap(), vec![2, 2]).unwrap();
        let r = exergy_decomposition(&ground, &h, 1.0).unwrap();
        assert!((r.exergy_passive - 0.561_941_379_496_509_2).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = DensityMatrix::<f64>::maximally_mixed(vec![2]);
        assert!(matches!(
            passive_state(&rho, &ising_ref()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_level_assignment_is_energy_neutral() {
        // the two -J levels of the strong-coupling Ising model may receive the
        // largest population in either order without changing the energy
        let h = ising_hamiltonian(1.0_f64, 2.0, 1.0).unwrap();
        let rho = werner_state(0.6, BellKind::PhiPlus).unwrap();
        let res = passive_state(&rho, &h).unwrap();
        let alt_up_down = werner_like(0.6, &basis_state_from_label("ud").unwrap()).unwrap();
        let alt_down_up = werner_like(0.6, &basis_state_from_label("du").unwrap()).unwrap();
        let e = res.passive.expectation(h.matrix());
        assert!((alt_up_down.expectation(h.matrix()) - e).abs() < 1e-12);
        assert!((alt_down_up.expectation(h.matrix()) - e).abs() < 1e-12);
        let d1 = res.passive.matrix().max_abs_diff(alt_up_down.matrix());
        let d2 = res.passive.matrix().max_abs_diff(alt_down_up.matrix());
        assert!(d1.min(d2) < 1e-12);
    }

    #[test]
    fn single_precision_ledger() {
        let h = ising_hamiltonian(1.0f32, 0.5, 1.0).unwrap();
        let w = werner_state(0.5f32, BellKind::PhiPlus).unwrap();
        let r = exergy_decomposition(&w, &h, 1.0).unwrap();
        assert!((r.ergotropy - 1.0).abs() < 1e-5);
        assert!((r.exergy_passive - EXERGY_PASSIVE_WERNER_HALF as f32).abs() < 1e-4);
    }
}
