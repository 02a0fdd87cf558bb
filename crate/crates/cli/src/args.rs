use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ergoflow",
    version,
    about = "Ergotropy, exergy and correlations of two-qubit batteries"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thermodynamic and correlation report for a single state.
    Compute(PointArgs),
    /// Reports over the Cartesian product of parameter ranges.
    Sweep(PointArgs),
    /// Closed-form regression over a parameter grid.
    Reproduce(ReproduceArgs),
    /// Randomized property suite over Ginibre states.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct SinkArgs {
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// Reference Hamiltonian: ising or heisenberg.
    #[arg(long)]
    pub model: Option<String>,
    /// Werner weight, as a value or a `start:stop:steps` range.
    #[arg(long)]
    pub epsilon: Option<ParamSpec>,
    #[arg(long, default_value = "1")]
    pub omega: ParamSpec,
    /// Coupling strength J.
    #[arg(long, default_value = "0.5")]
    pub coupling: ParamSpec,
    #[arg(long, default_value = "1")]
    pub hbar: ParamSpec,
    /// Inverse temperature.
    #[arg(long, default_value = "1")]
    pub beta: ParamSpec,
    /// Bell state mixed into the Werner state.
    #[arg(long, default_value = "phi_plus")]
    pub bell_kind: String,
    /// JSON density matrix used instead of a Werner state.
    #[arg(long)]
    pub state_file: Option<PathBuf>,
    /// JSON Hamiltonian used instead of a reference model.
    #[arg(long)]
    pub hamiltonian_file: Option<PathBuf>,
    /// Measurement grid for the discord search, as `THETAxPHI`.
    #[arg(long, default_value = "181x361")]
    pub oz_grid: GridSpec,
    #[command(flatten)]
    pub sink: SinkArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    /// JSON grid overriding the default one; missing fields keep their default.
    #[arg(long)]
    pub grid: Option<PathBuf>,
    #[command(flatten)]
    pub sink: SinkArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub sink: SinkArgs,
}

/// A single value or an inclusive `start:stop:steps` range.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamSpec {
    Value(f64),
    Range { start: f64, stop: f64, steps: usize },
}

impl ParamSpec {
    pub fn is_range(&self) -> bool {
        matches!(self, Self::Range { .. })
    }

    /// Evenly spaced values; the endpoints are hit exactly.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Self::Value(v) => vec![v],
            Self::Range {
                start, steps: 1, ..
            } => vec![start],
            Self::Range { start, stop, steps } => {
                let last = (steps - 1) as f64;
                (0..steps)
                    .map(|i| {
                        if i + 1 == steps {
                            stop
                        } else {
                            start + (stop - start) * i as f64 / last
                        }
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value(v) => write!(f, "{v}"),
            Self::Range { start, stop, steps } => write!(f, "{start}:{stop}:{steps}"),
        }
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    if !v.is_finite() {
        return Err(format!("{s:?} is not finite"));
    }
    Ok(v)
}

impl FromStr for ParamSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(Self::Value(parse_real(v)?)),
            [start, stop, steps] => {
                let start = parse_real(start)?;
                let stop = parse_real(stop)?;
                let steps: usize = steps
                    .trim()
                    .parse()
                    .map_err(|_| format!("{steps:?} is not a step count"))?;
                if steps == 0 {
                    return Err("a range needs at least one step".into());
                }
                if stop < start {
                    return Err(format!("range stop {stop} is below start {start}"));
                }
                Ok(Self::Range { start, stop, steps })
            }
            _ => Err(format!("{s:?} is neither a number nor start:stop:steps")),
        }
    }
}

/// `THETAxPHI` point counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub theta: usize,
    pub phi: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("{s:?} is not of the form THETAxPHI"))?;
        let count = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{t:?} is not a point count"))
        };
        Ok(Self {
            theta: count(a)?,
            phi: count(b)?,
        })
    }
}
