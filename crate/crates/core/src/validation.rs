//! Randomized property suite over Ginibre-sampled two-qubit states.

use serde::Serialize;

use crate::error::Result;
use crate::hamiltonian::{heisenberg_hamiltonian, ising_hamiltonian, HamiltonianModel};
use crate::states::DensityMatrix;
use crate::thermo::{
    entropy_production_check, ergotropy, exergy, exergy_decomposition_with, gibbs_state,
    passive_state, ENERGY_TOL,
};

/// Inverse temperatures probed for every sample.
pub const SUITE_BETAS: [f64; 3] = [0.2, 1.0, 5.0];

/// Hamiltonians probed for every sample: one per reference model, each in
/// the regime with the richer ground state.
pub fn suite_hamiltonians() -> Vec<HamiltonianModel<f64>> {
    vec![
        ising_hamiltonian(1.0, 0.5, 1.0).expect("valid parameters"),
        heisenberg_hamiltonian(0.5, 1.0, 1.0).expect("valid parameters"),
    ]
}

/// Pass/fail tally of one property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyTally {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// Largest observed violation measure (0 when nothing ever came close).
    pub worst: f64,
}

impl PropertyTally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    /// Records `measure`, failing when it exceeds `limit`.
    fn record(&mut self, measure: f64, limit: f64) {
        self.checks += 1;
        self.worst = self.worst.max(measure);
        if !(measure <= limit) {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn merge(&mut self, other: &PropertyTally) {
        debug_assert_eq!(self.name, other.name);
        self.checks += other.checks;
        self.failures += other.failures;
        self.worst = self.worst.max(other.worst);
    }
}

const PROPERTIES: [&str; 7] = [
    "balance_identity",
    "exergy_nonnegative",
    "exergy_passive_nonnegative",
    "entropy_production_bound",
    "entropy_conserved_by_extraction",
    "passive_idempotent",
    "gibbs_fixed_point",
];

fn empty_tallies() -> Vec<PropertyTally> {
    PROPERTIES.iter().map(|&n| PropertyTally::new(n)).collect()
}

/// Runs every property on one state. Tallies come back in a fixed order.
pub fn check_state(
    rho: &DensityMatrix<f64>,
    hamiltonians: &[HamiltonianModel<f64>],
    betas: &[f64],
) -> Result<Vec<PropertyTally>> {
    let mut t = empty_tallies();
    for h in hamiltonians {
        let passive = passive_state(rho, h)?;
        t[4].record((passive.entropy_gap(rho)).abs(), ENERGY_TOL);
        t[5].record(ergotropy(&passive.passive, h)?.abs(), 1e-10);
        for &beta in betas {
            let r = exergy_decomposition_with(rho, h, beta, &passive)?;
            let scale = 1f64.max(r.exergy_total.abs());
            t[0].record(r.balance_residual.abs() / scale, ENERGY_TOL);
            t[1].record(-r.exergy_total, ENERGY_TOL);
            t[2].record(-r.exergy_passive, ENERGY_TOL);
            let check = entropy_production_check(&r);
            t[3].record(if check.strict { -check.margin } else { 0.0 }, ENERGY_TOL);
        }
    }
    Ok(t)
}

/// Gibbs states are passive with zero ergotropy and zero exergy.
pub fn check_gibbs(hamiltonians: &[HamiltonianModel<f64>], betas: &[f64]) -> Result<PropertyTally> {
    let mut tally = PropertyTally::new("gibbs_fixed_point");
    for h in hamiltonians {
        for &beta in betas {
            let g = gibbs_state(h, beta)?;
            tally.record(
                ergotropy(&g, h)?.abs().max(exergy(&g, h, beta)?.abs()),
                ENERGY_TOL,
            );
        }
    }
    Ok(tally)
}

/// Folds per-state tallies (any order) into one tally per property.
pub fn merge_tallies<'a>(
    parts: impl IntoIterator<Item = &'a Vec<PropertyTally>>,
) -> Vec<PropertyTally> {
    let mut total = empty_tallies();
    for part in parts {
        for (acc, t) in total.iter_mut().zip(part) {
            acc.merge(t);
        }
    }
    total
}

/// Result of a full suite run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub samples: usize,
    pub seed: u64,
    pub properties: Vec<PropertyTally>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyTally::passed)
    }

    pub fn first_failure(&self) -> Option<&PropertyTally> {
        self.properties.iter().find(|p| !p.passed())
    }

    /// Assembles a report from per-state tallies and the Gibbs check.
    pub fn assemble(
        samples: usize,
        seed: u64,
        per_state: &[Vec<PropertyTally>],
        gibbs: &PropertyTally,
    ) -> Self {
        let mut properties = merge_tallies(per_state);
        if let Some(slot) = properties.iter_mut().find(|p| p.name == gibbs.name) {
            slot.merge(gibbs);
        }
        Self {
            samples,
            seed,
            properties,
        }
    }
}

/// Sequential suite run over `samples` Ginibre states.
pub fn run_property_suite(samples: usize, seed: u64) -> Result<SuiteReport> {
    let hs = suite_hamiltonians();
    let states = crate::sampling::ginibre_states(samples, seed);
    let per_state = states
        .iter()
        .map(|rho| check_state(rho, &hs, &SUITE_BETAS))
        .collect::<Result<Vec<_>>>()?;
    let gibbs = check_gibbs(&hs, &SUITE_BETAS)?;
    Ok(SuiteReport::assemble(samples, seed, &per_state, &gibbs))
}
