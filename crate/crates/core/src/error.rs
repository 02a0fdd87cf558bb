use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Offending values are reported as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {len} entries cannot form a {dim}x{dim} matrix")]
    NonSquare { dim: usize, len: usize },

    #[error("matrix is not Hermitian: max |M - M^dag| = {deviation:e} exceeds {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("function undefined at eigenvalue {eigenvalue}")]
    DomainError { eigenvalue: f64 },

    #[error("{name} = {value} is out of range ({allowed})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        allowed: &'static str,
    },

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("not an X-state: entry ({row},{col}) has magnitude {magnitude:e}")]
    NotXState {
        row: usize,
        col: usize,
        magnitude: f64,
    },

    #[error("X-state parameter {name} has imaginary part {imag:e}")]
    ComplexXParameter { name: &'static str, imag: f64 },

    #[error("trace-distance discord is indeterminate: denominator {denominator:e} vanishes while x = {x}")]
    Indeterminate { denominator: f64, x: f64 },

    #[error("partition function overflows: ln Z = {log_z}")]
    Overflow { log_z: f64 },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("at {point}: {source}")]
    AtGridPoint {
        point: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
