//! Closed-form results for Werner states under the Ising and XX-Heisenberg
//! reference Hamiltonians, and a harness that checks them against the
//! generic numerical pipeline.
//!
//! Regimes are resolved with `≥` at the level crossings (`ω = J` for Ising,
//! `ω = J/√2` for Heisenberg). At a crossing both branch formulas agree
//! analytically, so comparisons there accept either branch.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::{reference_hamiltonian, HamiltonianModel, ModelKind, ModelParams};
use crate::scalar::{x_ln_x, Real};
use crate::states::{basis_state_from_label, werner_like, werner_state, BellKind, DensityMatrix};
use crate::thermo::{exergy_decomposition, partition_function};

/// Pass threshold for every closed-form vs numeric pair.
pub const REPRODUCTION_TOL: f64 = 1e-8;
/// Relative distance to a level crossing treated as "on the boundary".
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Which side of the level crossing a parameter point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `ω ≥ J` (Ising) or `ω ≥ J/√2` (Heisenberg): ground state `|↓↓>`.
    WeakCoupling,
    /// `ω < J` (Ising) or `ω < J/√2` (Heisenberg).
    StrongCoupling,
}

impl Regime {
    pub fn label(self, model: ModelKind) -> &'static str {
        match (model, self) {
            (ModelKind::Heisenberg, Regime::WeakCoupling) => "omega>=J/sqrt2",
            (ModelKind::Heisenberg, Regime::StrongCoupling) => "omega<J/sqrt2",
            (_, Regime::WeakCoupling) => "omega>=J",
            (_, Regime::StrongCoupling) => "omega<J",
        }
    }

    pub fn other(self) -> Self {
        match self {
            Regime::WeakCoupling => Regime::StrongCoupling,
            Regime::StrongCoupling => Regime::WeakCoupling,
        }
    }
}

fn reference_model(model: ModelKind) -> Result<ModelKind> {
    match model {
        ModelKind::Ising | ModelKind::Heisenberg => Ok(model),
        ModelKind::Custom => Err(Error::UnknownLabel(
            "closed forms exist only for ising and heisenberg".to_string(),
        )),
    }
}

/// The coupling-dependent side of the crossing, `J` or `J/√2`.
fn crossing<T: Real>(model: ModelKind, coupling: T) -> T {
    match model {
        ModelKind::Heisenberg => coupling * T::FRAC_1_SQRT_2(),
        _ => coupling,
    }
}

fn check_params<T: Real>(omega: T, coupling: T, hbar: T) -> Result<()> {
    crate::hamiltonian::ModelParams::new(omega, coupling, hbar).map(|_| ())
}

fn check_epsilon<T: Real>(epsilon: T) -> Result<()> {
    if !(epsilon >= T::zero() && epsilon <= T::one()) {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon.to_f64_lossy(),
            allowed: "[0, 1]",
        });
    }
    Ok(())
}

pub fn resolve_regime<T: Real>(model: ModelKind, omega: T, coupling: T) -> Regime {
    if omega >= crossing(model, coupling) {
        Regime::WeakCoupling
    } else {
        Regime::StrongCoupling
    }
}

/// Whether `(ω, J)` sits on the level crossing within [`BOUNDARY_TOL`].
pub fn is_boundary<T: Real>(model: ModelKind, omega: T, coupling: T) -> bool {
    let edge = crossing(model, coupling);
    (omega - edge).abs() <= T::lit(BOUNDARY_TOL) * T::one().max(omega.abs()).max(edge.abs())
}

/// Regimes whose formulas are accepted at this point.
fn accepted_regimes<T: Real>(model: ModelKind, omega: T, coupling: T) -> Vec<Regime> {
    let primary = resolve_regime(model, omega, coupling);
    if is_boundary(model, omega, coupling) {
        vec![primary, primary.other()]
    } else {
        vec![primary]
    }
}

/// Charging energy `E₀` per unit `ε` on a given branch.
pub fn ergotropy_scale<T: Real>(
    model: ModelKind,
    regime: Regime,
    omega: T,
    coupling: T,
    hbar: T,
) -> T {
    let two = T::lit(2.0);
    match (model, regime) {
        (_, Regime::WeakCoupling) => two * omega * hbar,
        (ModelKind::Heisenberg, Regime::StrongCoupling) => T::SQRT_2() * coupling * hbar,
        (_, Regime::StrongCoupling) => two * coupling * hbar,
    }
}

/// Ground energy `Σ₀` on a given branch.
pub fn ground_energy<T: Real>(
    model: ModelKind,
    regime: Regime,
    omega: T,
    coupling: T,
    hbar: T,
) -> T {
    let two = T::lit(2.0);
    match (model, regime) {
        (ModelKind::Heisenberg, Regime::WeakCoupling) => -two * omega * hbar,
        (ModelKind::Heisenberg, Regime::StrongCoupling) => -T::SQRT_2() * coupling * hbar,
        (_, Regime::WeakCoupling) => (coupling - two * omega) * hbar,
        (_, Regime::StrongCoupling) => -coupling * hbar,
    }
}

/// Ergotropy `E₀ ε` of the Werner state.
pub fn closed_form_ergotropy<T: Real>(
    model: ModelKind,
    omega: T,
    coupling: T,
    hbar: T,
    epsilon: T,
) -> Result<T> {
    let model = reference_model(model)?;
    check_params(omega, coupling, hbar)?;
    check_epsilon(epsilon)?;
    let regime = resolve_regime(model, omega, coupling);
    Ok(ergotropy_scale(model, regime, omega, coupling, hbar) * epsilon)
}

/// Entropy of the Werner passive state (shared by both models).
pub fn closed_form_passive_entropy<T: Real>(epsilon: T) -> Result<T> {
    check_epsilon(epsilon)?;
    let one = T::one();
    let quarter = T::lit(0.25);
    let bracket = T::lit(3.0) * quarter * x_ln_x(one - epsilon)
        + quarter * x_ln_x(one + T::lit(3.0) * epsilon);
    Ok(T::lit(2.0) * T::LN_2() - bracket)
}

/// Partition function of either reference model.
pub fn closed_form_partition<T: Real>(
    model: ModelKind,
    omega: T,
    coupling: T,
    hbar: T,
    beta: T,
) -> Result<T> {
    let model = reference_model(model)?;
    check_params(omega, coupling, hbar)?;
    if !(beta > T::zero() && beta.is_finite()) {
        return Err(Error::OutOfRange {
            name: "beta",
            value: beta.to_f64_lossy(),
            allowed: "0 < beta < inf",
        });
    }
    let two = T::lit(2.0);
    let bj = beta * coupling * hbar;
    let bw = two * beta * omega * hbar;
    let z = match model {
        ModelKind::Heisenberg => two * ((T::SQRT_2() * bj).cosh() + bw.cosh()),
        _ => two * (bj.exp() + (-bj).exp() * bw.cosh()),
    };
    if !z.is_finite() {
        return Err(Error::Overflow {
            log_z: f64::INFINITY,
        });
    }
    Ok(z)
}

/// Exergy left in the passive state: `Σ₀ ε + β⁻¹(ln Z - S(ϱ))`.
pub fn closed_form_exergy_passive<T: Real>(
    model: ModelKind,
    omega: T,
    coupling: T,
    hbar: T,
    epsilon: T,
    beta: T,
) -> Result<T> {
    let regime = resolve_regime(model, omega, coupling);
    exergy_passive_on_branch(model, regime, omega, coupling, hbar, epsilon, beta)
}

fn exergy_passive_on_branch<T: Real>(
    model: ModelKind,
    regime: Regime,
    omega: T,
    coupling: T,
    hbar: T,
    epsilon: T,
    beta: T,
) -> Result<T> {
    let z = closed_form_partition(model, omega, coupling, hbar, beta)?;
    let s = closed_form_passive_entropy(epsilon)?;
    Ok(ground_energy(model, regime, omega, coupling, hbar) * epsilon + (z.ln() - s) / beta)
}

/// Trace-distance discord of the Werner state, `ε/2`.
pub fn werner_tdd<T: Real>(epsilon: T) -> Result<T> {
    check_epsilon(epsilon)?;
    Ok(epsilon * T::lit(0.5))
}

/// Werner concurrence `max(0, (3ε-1)/2)`.
pub fn werner_concurrence<T: Real>(epsilon: T) -> Result<T> {
    check_epsilon(epsilon)?;
    Ok(((T::lit(3.0) * epsilon - T::one()) * T::lit(0.5)).max(T::zero()))
}

/// Ergotropy two ways: `E₀ ε` and `2 D E₀` with `D = ε/2`.
pub fn discord_ergotropy_relation<T: Real>(
    model: ModelKind,
    omega: T,
    coupling: T,
    hbar: T,
    epsilon: T,
) -> Result<(T, T)> {
    let direct = closed_form_ergotropy(model, omega, coupling, hbar, epsilon)?;
    let regime = resolve_regime(model, omega, coupling);
    let scale = ergotropy_scale(model, regime, omega, coupling, hbar);
    Ok((direct, T::lit(2.0) * werner_tdd(epsilon)? * scale))
}

/// Passive-state exergy rewritten as `2 Σ₀ D + β⁻¹(ln Z - S)`.
pub fn exergy_passive_via_discord<T: Real>(
    model: ModelKind,
    omega: T,
    coupling: T,
    hbar: T,
    epsilon: T,
    beta: T,
) -> Result<T> {
    let regime = resolve_regime(model, omega, coupling);
    let z = closed_form_partition(model, omega, coupling, hbar, beta)?;
    let s = closed_form_passive_entropy(epsilon)?;
    let sigma0 = ground_energy(model, regime, omega, coupling, hbar);
    Ok(T::lit(2.0) * sigma0 * werner_tdd(epsilon)? + (z.ln() - s) / beta)
}

/// Explicit Werner passive states accepted at a parameter point, labelled by
/// the excited component. Degenerate ground levels contribute every state of
/// equal energy: the strong-coupling Ising ground level holds both `|↓↑>`
/// and `|↑↓>`.
pub fn explicit_passive_states<T: Real>(
    model: ModelKind,
    omega: T,
    coupling: T,
    epsilon: T,
) -> Result<Vec<(&'static str, DensityMatrix<T>)>> {
    let model = reference_model(model)?;
    check_epsilon(epsilon)?;
    let mut out = Vec::new();
    for regime in accepted_regimes(model, omega, coupling) {
        let labels: &[&'static str] = match (model, regime) {
            (_, Regime::WeakCoupling) => &["dd"],
            (ModelKind::Heisenberg, Regime::StrongCoupling) => &["singlet"],
            (_, Regime::StrongCoupling) => &["du", "ud"],
        };
        for &label in labels {
            let state = if label == "singlet" {
                werner_state(epsilon, BellKind::PsiMinus)?
            } else {
                werner_like(epsilon, &basis_state_from_label(label)?)?
            };
            out.push((label, state));
        }
    }
    Ok(out)
}

/// Distance (max-abs entry) from `passive` to the nearest accepted explicit state.
pub fn passive_identity_error<T: Real>(
    passive: &DensityMatrix<T>,
    model: ModelKind,
    omega: T,
    coupling: T,
    epsilon: T,
) -> Result<T> {
    Ok(explicit_passive_states(model, omega, coupling, epsilon)?
        .iter()
        .map(|(_, s)| s.matrix().max_abs_diff(passive.matrix()))
        .fold(T::infinity(), T::min))
}

/// One point of the regression harness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormRow {
    pub model: String,
    pub regime: String,
    pub epsilon: f64,
    pub omega: f64,
    pub coupling: f64,
    pub hbar: f64,
    pub beta: f64,
    pub ergotropy_cf: f64,
    pub ergotropy_num: f64,
    pub exergy_passive_cf: f64,
    pub exergy_passive_num: f64,
    pub s_passive_cf: f64,
    pub s_passive_num: f64,
    pub z_cf: f64,
    pub z_num: f64,
    pub max_abs_err: f64,
}

impl ClosedFormRow {
    pub fn passes(&self) -> bool {
        self.max_abs_err < REPRODUCTION_TOL
    }
}

/// One `(model, ω, J, ħ, β, ε)` point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub model: ModelKind,
    pub omega: f64,
    pub coupling: f64,
    pub hbar: f64,
    pub beta: f64,
    pub epsilon: f64,
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} omega={} J={} hbar={} beta={} epsilon={}",
            self.model, self.omega, self.coupling, self.hbar, self.beta, self.epsilon
        )
    }
}

/// Parameter grid of the regression harness. Deserializes from JSON with
/// every field optional; missing fields take their default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReproductionGrid {
    pub models: Vec<String>,
    /// `(ω, J)` pairs.
    pub omega_coupling: Vec<(f64, f64)>,
    pub betas: Vec<f64>,
    pub epsilons: Vec<f64>,
    pub hbar: f64,
}

impl Default for ReproductionGrid {
    /// ε ∈ {0, 0.1, …, 1}, both models, β ∈ {0.5, 1, 2}, four interior
    /// `(ω, J)` pairs covering both regimes of both models plus the two
    /// crossings `ω = J` and `ω = J/√2`.
    fn default() -> Self {
        Self {
            models: vec!["ising".into(), "heisenberg".into()],
            omega_coupling: vec![
                (1.0, 0.5),
                (0.5, 1.0),
                (1.0, 0.6),
                (0.5, 0.9),
                (1.0, 1.0),
                (0.5, std::f64::consts::SQRT_2 * 0.5),
            ],
            betas: vec![0.5, 1.0, 2.0],
            epsilons: (0..=10).map(|i| f64::from(i) / 10.0).collect(),
            hbar: 1.0,
        }
    }
}

impl ReproductionGrid {
    /// Grid points in row order: model, then `(ω, J)`, then β, then ε.
    /// Every parameter is range-checked before any point is built.
    pub fn points(&self) -> Result<Vec<GridPoint>> {
        for &(omega, coupling) in &self.omega_coupling {
            ModelParams::new(omega, coupling, self.hbar)?;
        }
        if let Some(&beta) = self.betas.iter().find(|b| !(**b > 0.0 && b.is_finite())) {
            return Err(Error::OutOfRange {
                name: "beta",
                value: beta,
                allowed: "0 < beta < inf",
            });
        }
        if let Some(&epsilon) = self.epsilons.iter().find(|e| !(0.0..=1.0).contains(*e)) {
            return Err(Error::OutOfRange {
                name: "epsilon",
                value: epsilon,
                allowed: "0 <= epsilon <= 1",
            });
        }
        let models = self
            .models
            .iter()
            .map(|m| m.parse::<ModelKind>().and_then(reference_model))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for &model in &models {
            for &(omega, coupling) in &self.omega_coupling {
                for &beta in &self.betas {
                    for &epsilon in &self.epsilons {
                        out.push(GridPoint {
                            model,
                            omega,
                            coupling,
                            hbar: self.hbar,
                            beta,
                            epsilon,
                        });
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(Error::OutOfRange {
                name: "grid size",
                value: 0.0,
                allowed: "non-empty grid",
            });
        }
        Ok(out)
    }
}

fn with_context<T>(point: &GridPoint, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::AtGridPoint {
        point: point.to_string(),
        source: Box::new(e),
    })
}

/// Evaluates one grid point. Numeric columns come only from the generic
/// state / Hamiltonian / thermodynamics pipeline.
pub fn reproduce_point(point: &GridPoint) -> Result<ClosedFormRow> {
    with_context(point, reproduce_point_inner(point))
}

fn reproduce_point_inner(p: &GridPoint) -> Result<ClosedFormRow> {
    let h: HamiltonianModel<f64> = reference_hamiltonian(p.model, p.omega, p.coupling, p.hbar)?;
    let rho = werner_state(p.epsilon, BellKind::PhiPlus)?;
    let report = exergy_decomposition(&rho, &h, p.beta)?;
    let z_num = partition_function(&h, p.beta)?;

    let regime = resolve_regime(p.model, p.omega, p.coupling);
    let z_cf = closed_form_partition(p.model, p.omega, p.coupling, p.hbar, p.beta)?;
    let s_cf = closed_form_passive_entropy(p.epsilon)?;
    let branch_values = |r: Regime| -> Result<(f64, f64)> {
        Ok((
            ergotropy_scale(p.model, r, p.omega, p.coupling, p.hbar) * p.epsilon,
            exergy_passive_on_branch(p.model, r, p.omega, p.coupling, p.hbar, p.epsilon, p.beta)?,
        ))
    };
    let (ergotropy_cf, exergy_passive_cf) = branch_values(regime)?;

    let mut ergo_err = f64::INFINITY;
    let mut exergy_err = f64::INFINITY;
    for r in accepted_regimes(p.model, p.omega, p.coupling) {
        let (e, x) = branch_values(r)?;
        ergo_err = ergo_err.min((e - report.ergotropy).abs());
        exergy_err = exergy_err.min((x - report.exergy_passive).abs());
    }
    let max_abs_err = ergo_err
        .max(exergy_err)
        .max((s_cf - report.entropy_passive).abs())
        .max((z_cf - z_num).abs());

    Ok(ClosedFormRow {
        model: p.model.label().to_string(),
        regime: regime.label(p.model).to_string(),
        epsilon: p.epsilon,
        omega: p.omega,
        coupling: p.coupling,
        hbar: p.hbar,
        beta: p.beta,
        ergotropy_cf,
        ergotropy_num: report.ergotropy,
        exergy_passive_cf,
        exergy_passive_num: report.exergy_passive,
        s_passive_cf: s_cf,
        s_passive_num: report.entropy_passive,
        z_cf,
        z_num,
        max_abs_err,
    })
}

/// Evaluates every grid point in grid order.
pub fn reproduce_all(grid: &ReproductionGrid) -> Result<Vec<ClosedFormRow>> {
    grid.points()?.iter().map(reproduce_point).collect()
}

/// Aggregate of a reproduction run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproductionSummary {
    pub rows: usize,
    pub max_err: f64,
    pub pass: bool,
    /// Index of the first failing row, if any.
    pub first_failure: Option<usize>,
}

pub fn summarize(rows: &[ClosedFormRow]) -> ReproductionSummary {
    let max_err = rows.iter().map(|r| r.max_abs_err).fold(0.0, f64::max);
    let first_failure = rows.iter().position(|r| !r.passes());
    ReproductionSummary {
        rows: rows.len(),
        max_err,
        pass: first_failure.is_none() && !rows.is_empty(),
        first_failure,
    }
}
