//! Work extraction and correlations in two-qubit quantum batteries.
//!
//! The crate computes passive states, ergotropy, Gibbs states, free energy
//! and the exergy ledger for finite-dimensional states, together with the
//! two-qubit correlation measures (concurrence, trace-distance discord and
//! Ollivier-Zurek discord) and closed forms for Werner-state batteries
//! driven by Ising or Heisenberg couplings.
//!
//! Numerical routines are generic over [`Real`] (`f64` or `f32`). The
//! aliases at the crate root fix the scalar to `f64`.
//!
//! ```
//! use ergoflow::{ergotropy, ising_hamiltonian, werner_state, BellKind};
//!
//! let h = ising_hamiltonian(1.0, 0.5, 1.0).unwrap();
//! let rho = werner_state(0.5, BellKind::PhiPlus).unwrap();
//! let w: f64 = ergotropy(&rho, &h).unwrap();
//! assert!((w - 1.0).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod correlations;
pub mod error;
pub mod hamiltonian;
pub mod io;
pub mod linalg;
pub mod reproduction;
pub mod sampling;
pub mod scalar;
pub mod states;
pub mod thermo;
pub mod validation;

pub use correlations::{
    concurrence, conditional_entropy, extract_x_params, mutual_information,
    oz_discord_closed_werner, oz_discord_numeric, trace_distance_discord, CorrelationRow,
    GridResolution,
};
pub use error::{Error, Result};
pub use hamiltonian::{
    heisenberg_hamiltonian, ising_hamiltonian, reference_hamiltonian, ModelKind, ModelParams,
};
pub use io::MatrixRecord;
pub use linalg::{
    hermitian_eig, hermitian_function, hilbert_schmidt_norm, partial_trace, tensor_product,
    Subsystem,
};
pub use scalar::Real;
pub use states::{basis_state_from_label, bell_state, werner_state, BellKind, Spin};
pub use thermo::{
    entropy_production_check, equilibrium_free_energy, ergotropy, exergy, exergy_decomposition,
    free_energy, gibbs_state, log_partition_function, partition_function, passive_state,
    von_neumann_entropy, ThermoRow,
};

pub type ComplexMatrix = linalg::ComplexMatrix<f64>;
pub type EigenDecomposition = linalg::EigenDecomposition<f64>;
pub type DensityMatrix = states::DensityMatrix<f64>;
pub type PureState = states::PureState<f64>;
pub type HamiltonianModel = hamiltonian::HamiltonianModel<f64>;
pub type PassiveResult = thermo::PassiveResult<f64>;
pub type ThermoReport = thermo::ThermoReport<f64>;
pub type XStateParams = correlations::XStateParams<f64>;
pub type OzDiscord = correlations::OzDiscord<f64>;
pub type MeasurementBasis = correlations::MeasurementBasis<f64>;

pub type ComplexMatrix32 = linalg::ComplexMatrix<f32>;
pub type DensityMatrix32 = states::DensityMatrix<f32>;
pub type HamiltonianModel32 = hamiltonian::HamiltonianModel<f32>;
