use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use ergoflow::correlations::CorrelationRow;
use ergoflow::reproduction::{
    reproduce_point, summarize, ClosedFormRow, ReproductionGrid, ReproductionSummary,
};
use ergoflow::validation::{
    check_gibbs, check_state, suite_hamiltonians, PropertyTally, SuiteReport, SUITE_BETAS,
};
use ergoflow::{
    passive_state, reference_hamiltonian, werner_state, BellKind, DensityMatrix, GridResolution,
    HamiltonianModel, MatrixRecord, ModelKind, ThermoRow,
};

use crate::args::{Format, ParamSpec, PointArgs, ReproduceArgs, ValidateArgs};
use crate::error::{CliError, CliResult};
use crate::output::Sink;

enum StateSource {
    Werner { epsilons: Vec<f64>, kind: BellKind },
    File { id: String, rho: DensityMatrix },
}

enum HamiltonianSource {
    Model(ModelKind),
    File(HamiltonianModel),
}

/// Parameters shared by every point of a compute or sweep run.
struct Plan {
    state: StateSource,
    hamiltonian: HamiltonianSource,
    omegas: Vec<f64>,
    couplings: Vec<f64>,
    hbars: Vec<f64>,
    betas: Vec<f64>,
    resolution: GridResolution,
}

/// One `(ε, ω, J, ħ)` state configuration; β does not affect the states.
#[derive(Debug, Clone, Copy)]
struct StatePoint {
    epsilon: Option<f64>,
    omega: f64,
    coupling: f64,
    hbar: f64,
}

fn read_record(path: &Path) -> CliResult<MatrixRecord> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    MatrixRecord::from_json(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn load_state(path: &Path) -> CliResult<DensityMatrix> {
    read_record(path)?
        .to_state()
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn load_hamiltonian(path: &Path) -> CliResult<HamiltonianModel> {
    read_record(path)?
        .to_hamiltonian()
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

impl Plan {
    fn from_args(args: &PointArgs) -> CliResult<Self> {
        let state = match (&args.epsilon, &args.state_file) {
            (Some(_), Some(_)) => {
                return Err(CliError::usage(
                    "--epsilon and --state-file are mutually exclusive",
                ))
            }
            (None, None) => {
                return Err(CliError::usage(
                    "one of --epsilon or --state-file is required",
                ))
            }
            (Some(eps), None) => {
                let kind: BellKind = args
                    .bell_kind
                    .parse()
                    .map_err(|e| CliError::usage(format!("--bell-kind: {e}")))?;
                let epsilons = eps.values();
                if let Some(bad) = epsilons.iter().find(|e| !(0.0..=1.0).contains(*e)) {
                    return Err(CliError::usage(format!(
                        "--epsilon {bad} is outside [0, 1]"
                    )));
                }
                StateSource::Werner { epsilons, kind }
            }
            (None, Some(path)) => StateSource::File {
                id: path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "state".into()),
                rho: load_state(path)?,
            },
        };

        let hamiltonian = match (&args.model, &args.hamiltonian_file) {
            (Some(_), Some(_)) => {
                return Err(CliError::usage(
                    "--model and --hamiltonian-file are mutually exclusive",
                ))
            }
            (None, None) => {
                return Err(CliError::usage(
                    "one of --model or --hamiltonian-file is required",
                ))
            }
            (Some(label), None) => match label.parse::<ModelKind>() {
                Ok(ModelKind::Custom) | Err(_) => {
                    return Err(CliError::usage(format!(
                        "--model {label:?}: expected ising or heisenberg"
                    )))
                }
                Ok(kind) => HamiltonianSource::Model(kind),
            },
            (None, Some(path)) => {
                if [&args.omega, &args.coupling, &args.hbar]
                    .iter()
                    .any(|p| p.is_range())
                {
                    return Err(CliError::usage(
                        "--omega, --coupling and --hbar cannot be ranged with --hamiltonian-file",
                    ));
                }
                HamiltonianSource::File(load_hamiltonian(path)?)
            }
        };

        let (omegas, couplings, hbars) = match hamiltonian {
            HamiltonianSource::Model(_) => (
                args.omega.values(),
                args.coupling.values(),
                args.hbar.values(),
            ),
            HamiltonianSource::File(_) => (vec![f64::NAN], vec![f64::NAN], vec![f64::NAN]),
        };
        let betas = args.beta.values();
        if let Some(bad) = betas.iter().find(|b| **b <= 0.0) {
            return Err(CliError::usage(format!("--beta {bad} must be positive")));
        }
        let resolution = GridResolution::new(args.oz_grid.theta, args.oz_grid.phi)
            .map_err(|e| CliError::usage(format!("--oz-grid: {e}")))?;
        Ok(Self {
            state,
            hamiltonian,
            omegas,
            couplings,
            hbars,
            betas,
            resolution,
        })
    }

    /// State configurations in declaration order, ε slowest.
    fn state_points(&self) -> Vec<StatePoint> {
        let epsilons: Vec<Option<f64>> = match &self.state {
            StateSource::Werner { epsilons, .. } => epsilons.iter().copied().map(Some).collect(),
            StateSource::File { .. } => vec![None],
        };
        let mut out = Vec::new();
        for &epsilon in &epsilons {
            for &omega in &self.omegas {
                for &coupling in &self.couplings {
                    for &hbar in &self.hbars {
                        out.push(StatePoint {
                            epsilon,
                            omega,
                            coupling,
                            hbar,
                        });
                    }
                }
            }
        }
        out
    }

    fn rows(&self) -> usize {
        self.state_points().len() * self.betas.len()
    }

    fn state(&self, epsilon: Option<f64>) -> ergoflow::Result<DensityMatrix> {
        match (&self.state, epsilon) {
            (StateSource::Werner { kind, .. }, Some(eps)) => werner_state(eps, *kind),
            (StateSource::File { rho, .. }, _) => Ok(rho.clone()),
            (StateSource::Werner { .. }, None) => unreachable!("Werner points carry epsilon"),
        }
    }

    fn state_id(&self, epsilon: Option<f64>) -> String {
        match (&self.state, epsilon) {
            (StateSource::File { id, .. }, _) => id.clone(),
            (_, Some(eps)) => eps.to_string(),
            (_, None) => String::new(),
        }
    }

    fn hamiltonian(&self, p: &StatePoint) -> ergoflow::Result<HamiltonianModel> {
        match &self.hamiltonian {
            HamiltonianSource::Model(kind) => {
                reference_hamiltonian(*kind, p.omega, p.coupling, p.hbar)
            }
            HamiltonianSource::File(h) => Ok(h.clone()),
        }
    }

    fn describe(&self, p: &StatePoint) -> String {
        let mut s = match p.epsilon {
            Some(eps) => format!("epsilon={eps}"),
            None => format!("state={}", self.state_id(None)),
        };
        if let HamiltonianSource::Model(kind) = self.hamiltonian {
            s += &format!(" {kind} omega={} J={} hbar={}", p.omega, p.coupling, p.hbar);
        }
        s
    }
}

fn at(point: String, e: ergoflow::Error) -> CliError {
    CliError::Numerical(ergoflow::Error::AtGridPoint {
        point,
        source: Box::new(e),
    })
}

struct PointOutput {
    thermo: Vec<ThermoRow>,
    correlations: Vec<CorrelationRow>,
}

fn evaluate_point(plan: &Plan, p: &StatePoint, tag: Option<&str>) -> ergoflow::Result<PointOutput> {
    let rho = plan.state(p.epsilon)?;
    let h = plan.hamiltonian(p)?;
    let passive = passive_state(&rho, &h)?;
    let id = plan.state_id(p.epsilon);
    let thermo = plan
        .betas
        .iter()
        .map(|&beta| {
            let report = ergoflow::thermo::exergy_decomposition_with(&rho, &h, beta, &passive)?;
            Ok(ThermoRow::from_report(id.clone(), &h, &report))
        })
        .collect::<ergoflow::Result<Vec<_>>>()?;

    let mut correlations = Vec::new();
    if rho.dims() == [2, 2] {
        let werner_eps = match plan.state {
            StateSource::Werner { .. } => p.epsilon,
            StateSource::File { .. } => None,
        };
        let (input_id, passive_id) = match tag {
            Some(t) => (format!("input {t}"), format!("passive {t}")),
            None => ("input".to_string(), "passive".to_string()),
        };
        correlations.push(CorrelationRow::evaluate(
            input_id,
            &rho,
            werner_eps,
            &plan.resolution,
        )?);
        let mut row =
            CorrelationRow::evaluate(passive_id, &passive.passive, None, &plan.resolution)?;
        row.epsilon = werner_eps;
        correlations.push(row);
    }
    Ok(PointOutput {
        thermo,
        correlations,
    })
}

#[derive(Serialize)]
struct PointReport<'a> {
    thermo: &'a [ThermoRow],
    correlations: &'a [CorrelationRow],
}

fn run_points(plan: &Plan, tagged: bool, sink: &mut Sink) -> CliResult<()> {
    let points = plan.state_points();
    let outputs = points
        .par_iter()
        .map(|p| {
            let desc = plan.describe(p);
            let tag = tagged.then(|| desc.clone());
            evaluate_point(plan, p, tag.as_deref()).map_err(|e| at(desc, e))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let mut thermo = Vec::with_capacity(plan.rows());
    let mut correlations = Vec::new();
    for o in outputs {
        thermo.extend(o.thermo);
        correlations.extend(o.correlations);
    }
    match sink.format {
        Format::Csv => {
            sink.csv_table(&ThermoRow::HEADER, &thermo)?;
            if !correlations.is_empty() {
                sink.blank_line()?;
                sink.csv_table(&CorrelationRow::HEADER, &correlations)?;
            }
        }
        Format::Json => sink.json(&PointReport {
            thermo: &thermo,
            correlations: &correlations,
        })?,
    }
    Ok(())
}

pub fn compute(args: &PointArgs) -> CliResult<()> {
    let plan = Plan::from_args(args)?;
    let ranged = args
        .epsilon
        .iter()
        .chain([&args.omega, &args.coupling, &args.hbar, &args.beta])
        .any(|p| p.values().len() > 1);
    if ranged {
        return Err(CliError::usage(
            "compute takes a single point; use sweep for ranges",
        ));
    }
    let mut sink = Sink::open(&args.sink)?;
    run_points(&plan, false, &mut sink)?;
    sink.finish()
}

pub fn sweep(args: &PointArgs) -> CliResult<()> {
    let has_range = args
        .epsilon
        .iter()
        .chain([&args.omega, &args.coupling, &args.hbar, &args.beta])
        .any(ParamSpec::is_range);
    if !has_range {
        return Err(CliError::usage(
            "sweep needs at least one start:stop:steps range",
        ));
    }
    let plan = Plan::from_args(args)?;
    if plan.rows() == 0 {
        return Err(CliError::usage("sweep parameter product is empty"));
    }
    let mut sink = Sink::open(&args.sink)?;
    run_points(&plan, true, &mut sink)?;
    sink.finish()
}

#[derive(Serialize)]
struct ReproductionReport<'a> {
    summary: &'a ReproductionSummary,
    rows: &'a [ClosedFormRow],
}

const CLOSED_FORM_HEADER: [&str; 16] = [
    "model",
    "regime",
    "epsilon",
    "omega",
    "coupling",
    "hbar",
    "beta",
    "ergotropy_cf",
    "ergotropy_num",
    "exergy_passive_cf",
    "exergy_passive_num",
    "s_passive_cf",
    "s_passive_num",
    "z_cf",
    "z_num",
    "max_abs_err",
];

pub fn reproduce(args: &ReproduceArgs) -> CliResult<()> {
    let grid = match &args.grid {
        None => ReproductionGrid::default(),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
        }
    };
    let points = grid
        .points()
        .map_err(|e| CliError::usage(format!("grid: {e}")))?;
    let rows = points
        .par_iter()
        .map(reproduce_point)
        .collect::<ergoflow::Result<Vec<_>>>()?;
    let summary = summarize(&rows);

    let mut sink = Sink::open(&args.sink)?;
    match sink.format {
        Format::Csv => sink.csv_table(&CLOSED_FORM_HEADER, &rows)?,
        Format::Json => sink.json(&ReproductionReport {
            summary: &summary,
            rows: &rows,
        })?,
    }
    sink.finish()?;

    match summary.first_failure {
        None => {
            eprintln!(
                "PASS {}/{} (max_abs_err {:e})",
                rows.len(),
                rows.len(),
                summary.max_err
            );
            Ok(())
        }
        Some(i) => Err(CliError::Check(format!(
            "FAIL row {i} ({}): max_abs_err {:e} ({} of {} rows pass)",
            points[i],
            rows[i].max_abs_err,
            rows.iter().filter(|r| r.passes()).count(),
            rows.len()
        ))),
    }
}

#[derive(Serialize)]
struct PropertyLine<'a> {
    property: &'a str,
    checks: usize,
    failures: usize,
    worst: f64,
    pass: bool,
}

impl<'a> From<&'a PropertyTally> for PropertyLine<'a> {
    fn from(t: &'a PropertyTally) -> Self {
        Self {
            property: t.name,
            checks: t.checks,
            failures: t.failures,
            worst: t.worst,
            pass: t.passed(),
        }
    }
}

#[derive(Serialize)]
struct ValidationReport<'a> {
    #[serde(flatten)]
    report: &'a SuiteReport,
    pass: bool,
}

pub fn validate(args: &ValidateArgs) -> CliResult<()> {
    if args.samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    let hs = suite_hamiltonians();
    let states = ergoflow::sampling::ginibre_states(args.samples, args.seed);
    let per_state = states
        .par_iter()
        .enumerate()
        .map(|(i, rho)| {
            check_state(rho, &hs, &SUITE_BETAS).map_err(|e| at(format!("sample {i}"), e))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let gibbs = check_gibbs(&hs, &SUITE_BETAS)?;
    let report = SuiteReport::assemble(args.samples, args.seed, &per_state, &gibbs);

    let mut sink = Sink::open(&args.sink)?;
    match sink.format {
        Format::Csv => {
            let lines: Vec<PropertyLine> =
                report.properties.iter().map(PropertyLine::from).collect();
            sink.csv_table(&["property", "checks", "failures", "worst", "pass"], &lines)?;
        }
        Format::Json => sink.json(&ValidationReport {
            report: &report,
            pass: report.passed(),
        })?,
    }
    sink.finish()?;

    let total = report.properties.len();
    match report.first_failure() {
        None => {
            eprintln!("PASS {total}/{total}");
            Ok(())
        }
        Some(t) => Err(CliError::Check(format!(
            "FAIL {}: {} of {} checks failed, worst {:e} ({} of {total} properties pass)",
            t.name,
            t.failures,
            t.checks,
            t.worst,
            report.properties.iter().filter(|p| p.passed()).count()
        ))),
    }
}
