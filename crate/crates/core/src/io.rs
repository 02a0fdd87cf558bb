//! JSON exchange format for states and Hamiltonians.
//!
//! ```json
//! {"dim": 2, "entries_re": [1, 0, 0, 0], "entries_im": [0, 0, 0, 0], "dims": [2]}
//! ```
//!
//! Entries are row-major. Floats are written in shortest round-trip form and
//! parsed with correct rounding, so a write/read cycle is bit-exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::HamiltonianModel;
use crate::linalg::ComplexMatrix;
use crate::states::DensityMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixRecord {
    pub dim: usize,
    pub entries_re: Vec<f64>,
    pub entries_im: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
}

impl MatrixRecord {
    pub fn from_matrix(m: &ComplexMatrix<f64>, dims: Option<Vec<usize>>) -> Self {
        Self {
            dim: m.dim(),
            entries_re: m.entries().iter().map(|z| z.re).collect(),
            entries_im: m.entries().iter().map(|z| z.im).collect(),
            dims,
        }
    }

    pub fn from_state(rho: &DensityMatrix<f64>) -> Self {
        Self::from_matrix(rho.matrix(), Some(rho.dims().to_vec()))
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix<f64>> {
        ComplexMatrix::from_parts(self.dim, &self.entries_re, &self.entries_im)
    }

    /// Validated density matrix. Without `dims`, a 4x4 matrix is read as two
    /// qubits and anything else as a single system.
    pub fn to_state(&self) -> Result<DensityMatrix<f64>> {
        let dims = self.dims.clone().unwrap_or_else(|| {
            if self.dim == 4 {
                vec![2, 2]
            } else {
                vec![self.dim]
            }
        });
        DensityMatrix::new(self.to_matrix()?, dims)
    }

    pub fn to_hamiltonian(&self) -> Result<HamiltonianModel<f64>> {
        HamiltonianModel::custom(self.to_matrix()?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{werner_state, BellKind};

    #[test]
    fn round_trip_is_bit_exact() {
        let rho = werner_state(0.3_f64, BellKind::PsiMinus).unwrap();
        let rec = MatrixRecord::from_state(&rho);
        let back = MatrixRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        let m = back.to_state().unwrap();
        for (a, b) in m.matrix().entries().iter().zip(rho.matrix().entries()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            MatrixRecord::from_json("{\"dim\": 2}"),
            Err(Error::Malformed(_))
        ));
        let bad = MatrixRecord {
            dim: 2,
            entries_re: vec![1.0, 0.0, 0.0],
            entries_im: vec![0.0; 4],
            dims: None,
        };
        assert!(bad.to_matrix().is_err());
    }

    #[test]
    fn missing_dims_defaults() {
        let rec = MatrixRecord::from_json(
            r#"{"dim":2,"entries_re":[0.5,0,0,0.5],"entries_im":[0,0,0,0]}"#,
        )
        .unwrap();
        assert_eq!(rec.to_state().unwrap().dims(), &[2]);
    }
}
