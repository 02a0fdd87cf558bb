//! Two-qubit correlation quantifiers: concurrence, trace-distance discord for
//! X-states, and Ollivier-Zurek discord with a projective-measurement search.
//!
//! Discord is one-sided with the measurement on the first qubit (A).

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, pauli, tensor_product, ComplexMatrix, Subsystem};
use crate::scalar::{c, cr, entropy_term, x_ln_x, Real, C};
use crate::states::DensityMatrix;
use crate::thermo::von_neumann_entropy;

/// Magnitude below which off-X entries and imaginary parts count as zero.
pub const X_STATE_TOL: f64 = 1e-10;
/// Below this `|x|` the state is treated as Bell-diagonal.
pub const BELL_DIAGONAL_TOL: f64 = 1e-9;

/// Eigenvalues this close to zero (relative to the largest) are numerical
/// noise and are zeroed before taking square roots.
fn noise_floor<T: Real>(scale: T) -> T {
    T::epsilon() * T::lit(64.0) * scale.max(T::one())
}

/// Wootters concurrence `max(0, λ1 - λ2 - λ3 - λ4)`, with `λ` the
/// descending eigenvalues of `sqrt(sqrt(ρ) ρ̃ sqrt(ρ))`.
pub fn concurrence<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    rho.require_two_qubit()?;
    let spec = rho.spectrum();
    let floor = noise_floor(T::one());
    let roots: Vec<T> = spec
        .values
        .iter()
        .map(|&p| if p <= floor { T::zero() } else { p.sqrt() })
        .collect();
    let sqrt_rho = spec.compose(&roots);

    let yy = tensor_product(&pauli::sigma_y::<T>(), &pauli::sigma_y::<T>());
    let flipped = &(&yy * &rho.matrix().conj()) * &yy;
    let r = &(&sqrt_rho * &flipped) * &sqrt_rho;
    let eig = crate::linalg::hermitian_eig_default(&r)?;
    let top = eig
        .values
        .iter()
        .fold(T::zero(), |acc, &v| acc.max(v.abs()));
    let floor = noise_floor(top);
    let mut lambdas: Vec<T> = eig
        .values
        .iter()
        .map(|&v| if v <= floor { T::zero() } else { v.sqrt() })
        .collect();
    lambdas.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    let value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(value.max(T::zero()))
}

/// Parameters of a two-qubit X-state in the computational basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateParams<T> {
    /// `2(ρ32 + ρ41)`
    pub gamma1: T,
    /// `2(ρ32 - ρ41)`
    pub gamma2: T,
    /// `1 - 2(ρ22 + ρ33)`
    pub gamma3: T,
    /// `2(ρ11 + ρ22) - 1`, the z Bloch component of qubit A.
    pub x: T,
    /// `ρ11, ρ22, ρ33, ρ44`
    pub diag: [T; 4],
    /// `ρ41, ρ32`
    pub anti: [T; 2],
}

/// Entries that must vanish for an X-state (upper triangle, 0-based).
const NON_X: [(usize, usize); 4] = [(0, 1), (0, 2), (1, 3), (2, 3)];

fn real_part<T: Real>(z: C<T>, name: &'static str) -> Result<T> {
    if z.im.abs() > T::lit(X_STATE_TOL) {
        return Err(Error::ComplexXParameter {
            name,
            imag: z.im.to_f64_lossy(),
        });
    }
    Ok(z.re)
}

pub fn extract_x_params<T: Real>(rho: &DensityMatrix<T>) -> Result<XStateParams<T>> {
    rho.require_two_qubit()?;
    let m = rho.matrix();
    let tol = T::lit(X_STATE_TOL);
    for &(i, j) in &NON_X {
        let magnitude = m[(i, j)].norm();
        if magnitude >= tol {
            return Err(Error::NotXState {
                row: i,
                col: j,
                magnitude: magnitude.to_f64_lossy(),
            });
        }
    }
    let two = T::lit(2.0);
    let r41 = real_part(m[(3, 0)], "rho41")?;
    let r32 = real_part(m[(2, 1)], "rho32")?;
    let diag = [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re];
    Ok(XStateParams {
        gamma1: two * (r32 + r41),
        gamma2: two * (r32 - r41),
        gamma3: T::one() - two * (diag[1] + diag[2]),
        x: two * (diag[0] + diag[1]) - T::one(),
        diag,
        anti: [r41, r32],
    })
}

/// One-sided trace-distance discord of an X-state.
///
/// Bell-diagonal states (`x = 0`) use the exact median rule
/// `D = median(|γ1|, |γ2|, |γ3|) / 2`, which is also the continuous limit of
/// the general expression where that one degenerates to `0/0`. Otherwise,
/// with `a ≥ b` the ordered `|γ1|, |γ2|` and `c = γ3`,
///
/// `D = ½ sqrt[(a² max(c², b²+x²) - b² min(c², a²)) / (max(c², b²+x²) - min(c², a²) + a² - b²)]`.
pub fn trace_distance_discord<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    let p = extract_x_params(rho)?;
    trace_distance_discord_from_params(&p)
}

pub fn trace_distance_discord_from_params<T: Real>(p: &XStateParams<T>) -> Result<T> {
    let half = T::lit(0.5);
    let (g1, g2, g3) = (p.gamma1.abs(), p.gamma2.abs(), p.gamma3.abs());
    if p.x.abs() <= T::lit(BELL_DIAGONAL_TOL) {
        let mut g = [g1, g2, g3];
        g.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        return Ok(half * g[1]);
    }
    let (a, b) = if g1 >= g2 { (g1, g2) } else { (g2, g1) };
    let (a2, b2, c2, x2) = (a * a, b * b, g3 * g3, p.x * p.x);
    let upper = c2.max(b2 + x2);
    let lower = c2.min(a2);
    let den = upper - lower + a2 - b2;
    if den.abs() <= T::lit(BELL_DIAGONAL_TOL) {
        return Err(Error::Indeterminate {
            denominator: den.to_f64_lossy(),
            x: p.x.to_f64_lossy(),
        });
    }
    let num = a2 * upper - b2 * lower;
    Ok(half * (num / den).max(T::zero()).sqrt())
}

/// Closed-form Ollivier-Zurek discord of the Werner state with weight `ε`.
pub fn oz_discord_closed_werner<T: Real>(epsilon: T) -> Result<T> {
    if !(epsilon >= T::zero() && epsilon <= T::one()) {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon.to_f64_lossy(),
            allowed: "[0, 1]",
        });
    }
    let one = T::one();
    let quarter = T::lit(0.25);
    let three = T::lit(3.0);
    // (1-ε)/4 ln(1-ε) = x ln x / 4 with x = 1-ε
    let a = x_ln_x(one - epsilon) * quarter;
    let b = x_ln_x(one + three * epsilon) * quarter;
    let d = x_ln_x(one + epsilon) * T::lit(0.5);
    Ok(a + b - d)
}

/// Rank-1 projective measurement `{(𝟙 ± n·σ)/2}` on qubit A, with
/// `n = (sin θ cos φ, sin θ sin φ, cos θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementBasis<T> {
    pub theta: T,
    pub phi: T,
}

impl<T: Real> MeasurementBasis<T> {
    pub fn new(theta: T, phi: T) -> Self {
        Self { theta, phi }
    }

    /// σ_z direction.
    pub fn z() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn direction(&self) -> [T; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    pub fn projectors(&self) -> [ComplexMatrix<T>; 2] {
        let [nx, ny, nz] = self.direction();
        let half = T::lit(0.5);
        let make = |s: T| {
            ComplexMatrix::new(
                2,
                vec![
                    cr(half * (T::one() + s * nz)),
                    c(half * s * nx, -half * s * ny),
                    c(half * s * nx, half * s * ny),
                    cr(half * (T::one() - s * nz)),
                ],
            )
            .expect("2x2")
        };
        [make(T::one()), make(-T::one())]
    }
}

/// Angular grid for the measurement search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridResolution {
    /// Points on `θ ∈ [0, π]`, endpoints included.
    pub theta_points: usize,
    /// Points on `φ ∈ [0, 2π)`.
    pub phi_points: usize,
}

impl GridResolution {
    pub const MIN_POINTS: usize = 64;

    pub fn new(theta_points: usize, phi_points: usize) -> Result<Self> {
        for (name, n) in [("theta_points", theta_points), ("phi_points", phi_points)] {
            if n < Self::MIN_POINTS {
                return Err(Error::OutOfRange {
                    name,
                    value: n as f64,
                    allowed: ">= 64 points per angle",
                });
            }
        }
        Ok(Self {
            theta_points,
            phi_points,
        })
    }

    pub fn doubled(&self) -> Self {
        Self {
            theta_points: 2 * self.theta_points - 1,
            phi_points: 2 * self.phi_points,
        }
    }
}

impl Default for GridResolution {
    fn default() -> Self {
        Self {
            theta_points: 181,
            phi_points: 361,
        }
    }
}

/// Output of [`oz_discord_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OzDiscord<T> {
    pub discord: T,
    pub basis: MeasurementBasis<T>,
    /// Minimized `Σ_k p_k S(ρ_B|k)`.
    pub conditional_entropy: T,
}

/// Entropy of a 2x2 Hermitian matrix with unit trace, from its closed-form spectrum.
fn qubit_entropy<T: Real>(a: T, d: T, off: C<T>) -> T {
    let half = T::lit(0.5);
    let mean = half * (a + d);
    let gap = (half * half * (a - d) * (a - d) + off.norm_sqr()).sqrt();
    entropy_term(mean + gap) + entropy_term(mean - gap)
}

/// `Σ_k p_k S(ρ_B|k)` after measuring qubit A in `basis`.
pub fn conditional_entropy<T: Real>(rho: &DensityMatrix<T>, basis: &MeasurementBasis<T>) -> T {
    conditional_entropy_of(rho.matrix(), basis)
}

fn conditional_entropy_of<T: Real>(m: &ComplexMatrix<T>, basis: &MeasurementBasis<T>) -> T {
    let mut total = T::zero();
    for proj in basis.projectors() {
        // tr_A[(Π ⊗ 𝟙) ρ]_{b b'} = Σ_{a a'} Π_{a' a} ρ_{(a b),(a' b')}
        let mut blk = [C::<T>::zero(); 4];
        for b in 0..2 {
            for bp in 0..2 {
                let mut acc = C::zero();
                for a in 0..2 {
                    for ap in 0..2 {
                        acc = acc + proj[(ap, a)] * m[(2 * a + b, 2 * ap + bp)];
                    }
                }
                blk[2 * b + bp] = acc;
            }
        }
        let p = blk[0].re + blk[3].re;
        if p <= T::epsilon() {
            continue;
        }
        total = total + p * qubit_entropy(blk[0].re / p, blk[3].re / p, blk[1] / p);
    }
    total
}

fn grid_angles<T: Real>(res: &GridResolution) -> (Vec<T>, Vec<T>) {
    let pi = T::PI();
    let n_theta = T::from_usize(res.theta_points - 1).expect("grid size");
    let n_phi = T::from_usize(res.phi_points).expect("grid size");
    let thetas = (0..res.theta_points)
        .map(|i| pi * T::from_usize(i).expect("index") / n_theta)
        .collect();
    let phis = (0..res.phi_points)
        .map(|j| (pi + pi) * T::from_usize(j).expect("index") / n_phi)
        .collect();
    (thetas, phis)
}

/// Ollivier-Zurek discord `I(ρ) - J(ρ)` minimized over projective
/// measurements on A: exhaustive grid, then one coordinate-descent pass
/// started from the best grid point. Grid ties go to the smallest θ, then φ.
pub fn oz_discord_numeric<T: Real>(
    rho: &DensityMatrix<T>,
    resolution: &GridResolution,
) -> Result<OzDiscord<T>> {
    rho.require_two_qubit()?;
    let resolution = GridResolution::new(resolution.theta_points, resolution.phi_points)?;
    let m = rho.matrix();
    let (thetas, phis) = grid_angles::<T>(&resolution);

    let mut best = MeasurementBasis::new(thetas[0], phis[0]);
    let mut best_val = conditional_entropy_of(m, &best);
    for &theta in &thetas {
        for &phi in &phis {
            let basis = MeasurementBasis::new(theta, phi);
            let v = conditional_entropy_of(m, &basis);
            if v < best_val {
                best_val = v;
                best = basis;
            }
        }
    }
    let (best, best_val) = refine(m, best, best_val, &resolution);

    let rho_a = reduced_state(rho, Subsystem::A)?;
    let discord = von_neumann_entropy(&rho_a) - von_neumann_entropy(rho) + best_val;
    Ok(OzDiscord {
        discord,
        basis: best,
        conditional_entropy: best_val,
    })
}

fn refine<T: Real>(
    m: &ComplexMatrix<T>,
    start: MeasurementBasis<T>,
    start_val: T,
    res: &GridResolution,
) -> (MeasurementBasis<T>, T) {
    let pi = T::PI();
    let two_pi = pi + pi;
    let mut step_theta = pi / T::from_usize(res.theta_points - 1).expect("grid size");
    let mut step_phi = two_pi / T::from_usize(res.phi_points).expect("grid size");
    let min_step = T::lit(1e-9).max(T::epsilon().sqrt());
    let (mut best, mut best_val) = (start, start_val);
    for _ in 0..500 {
        if step_theta < min_step && step_phi < min_step {
            break;
        }
        let candidates = [
            (best.theta - step_theta, best.phi),
            (best.theta + step_theta, best.phi),
            (best.theta, best.phi - step_phi),
            (best.theta, best.phi + step_phi),
        ];
        let mut improved = false;
        for (theta, phi) in candidates {
            let theta = theta.max(T::zero()).min(pi);
            let mut phi = phi % two_pi;
            if phi < T::zero() {
                phi = phi + two_pi;
            }
            let basis = MeasurementBasis::new(theta, phi);
            let v = conditional_entropy_of(m, &basis);
            if v < best_val {
                best_val = v;
                best = basis;
                improved = true;
            }
        }
        if !improved {
            step_theta = step_theta * T::lit(0.5);
            step_phi = step_phi * T::lit(0.5);
        }
    }
    (best, best_val)
}

fn reduced_state<T: Real>(rho: &DensityMatrix<T>, keep: Subsystem) -> Result<DensityMatrix<T>> {
    let dims = rho.bipartite_dims()?;
    let kept = match keep {
        Subsystem::A => dims.0,
        Subsystem::B => dims.1,
    };
    DensityMatrix::new(partial_trace(rho.matrix(), dims, keep)?, vec![kept])
}

/// `I(ρ) = S(ρ_A) + S(ρ_B) - S(ρ)`.
pub fn mutual_information<T: Real>(rho: &DensityMatrix<T>) -> Result<T> {
    let a = reduced_state(rho, Subsystem::A)?;
    let b = reduced_state(rho, Subsystem::B)?;
    Ok(von_neumann_entropy(&a) + von_neumann_entropy(&b) - von_neumann_entropy(rho))
}

/// One row of the correlation table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationRow {
    pub state_id: String,
    pub epsilon: Option<f64>,
    pub concurrence: f64,
    /// Absent when the state is not an X-state.
    pub tdd: Option<f64>,
    /// Present only for Werner inputs.
    pub oz_closed: Option<f64>,
    pub oz_numeric: f64,
    pub oz_theta: f64,
    pub oz_phi: f64,
}

impl CorrelationRow {
    pub const HEADER: [&'static str; 8] = [
        "state_id",
        "epsilon",
        "concurrence",
        "tdd",
        "oz_closed",
        "oz_numeric",
        "oz_theta",
        "oz_phi",
    ];

    /// Evaluates every measure on `rho`. `werner_epsilon` enables the
    /// closed-form column; a non-X state leaves `tdd` empty.
    pub fn evaluate(
        state_id: impl Into<String>,
        rho: &DensityMatrix<f64>,
        werner_epsilon: Option<f64>,
        resolution: &GridResolution,
    ) -> Result<Self> {
        let tdd = match trace_distance_discord(rho) {
            Ok(v) => Some(v),
            Err(Error::NotXState { .. }) | Err(Error::ComplexXParameter { .. }) => None,
            Err(e) => return Err(e),
        };
        let oz = oz_discord_numeric(rho, resolution)?;
        Ok(Self {
            state_id: state_id.into(),
            epsilon: werner_epsilon,
            concurrence: concurrence(rho)?,
            tdd,
            oz_closed: werner_epsilon.map(oz_discord_closed_werner).transpose()?,
            oz_numeric: oz.discord,
            oz_theta: oz.basis.theta,
            oz_phi: oz.basis.phi,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{werner_state, BellKind};

    // mpmath evaluation of the closed form at ε = 0.5 and ε = 1 (= ln 2)
    const OZ_HALF: f64 = 0.181_939_478_770_230_47;
    const MI_WERNER_HALF: f64 = 0.312_751_514_711_367_4;

    fn product_state() -> DensityMatrix<f64> {
        let ra = ComplexMatrix::new(2, vec![cr(0.7), c(0.1, 0.2), c(0.1, -0.2), cr(0.3)]).unwrap();
        let rb =
            ComplexMatrix::new(2, vec![cr(0.4), c(-0.3, 0.1), c(-0.3, -0.1), cr(0.6)]).unwrap();
        DensityMatrix::two_qubit(tensor_product(&ra, &rb)).unwrap()
    }

    /// `¼(𝟙 + x σ_z⊗𝟙 + c1 σ_xσ_x + c2 σ_yσ_y + c3 σ_zσ_z)`
    fn x_state(c1: f64, c2: f64, c3: f64, x: f64) -> DensityMatrix<f64> {
        let (sx, sy, sz, id) = (
            pauli::sigma_x::<f64>(),
            pauli::sigma_y::<f64>(),
            pauli::sigma_z::<f64>(),
            pauli::identity::<f64>(),
        );
        let terms = [
            (tensor_product(&id, &id), 1.0),
            (tensor_product(&sz, &id), x),
            (tensor_product(&sx, &sx), c1),
            (tensor_product(&sy, &sy), c2),
            (tensor_product(&sz, &sz), c3),
        ];
        let m = terms.iter().fold(ComplexMatrix::zeros(4), |acc, (t, w)| {
            &acc + &t.scale(0.25 * w)
        });
        DensityMatrix::two_qubit(m).unwrap()
    }

    #[test]
    fn concurrence_examples() {
        let w1 = werner_state(1.0_f64, BellKind::PhiPlus).unwrap();
        assert!((concurrence(&w1).unwrap() - 1.0).abs() < 1e-9);
        for eps in [0.0_f64, 0.2, 1.0 / 3.0] {
            let w = werner_state(eps, BellKind::PhiPlus).unwrap();
            assert!(concurrence(&w).unwrap().abs() < 1e-9);
        }
        assert!(concurrence(&product_state()).unwrap().abs() < 1e-7);
        let single = DensityMatrix::<f64>::maximally_mixed(vec![2]);
        assert!(matches!(
            concurrence(&single),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn x_params_of_werner_flavours() {
        let eps = 0.35_f64;
        let p = extract_x_params(&werner_state(eps, BellKind::PhiPlus).unwrap()).unwrap();
        assert!((p.gamma1 - eps).abs() < 1e-15);
        assert!((p.gamma2 + eps).abs() < 1e-15);
        assert!((p.gamma3 - eps).abs() < 1e-15);
        assert!(p.x.abs() < 1e-15);

        let p = extract_x_params(&werner_state(eps, BellKind::PsiMinus).unwrap()).unwrap();
        for g in [p.gamma1, p.gamma2, p.gamma3] {
            assert!((g + eps).abs() < 1e-15);
        }
        assert!(p.x.abs() < 1e-15);

        let p = extract_x_params(&DensityMatrix::<f64>::maximally_mixed(vec![2, 2])).unwrap();
        for v in [p.gamma1, p.gamma2, p.gamma3, p.x] {
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn non_x_state_is_named() {
        let err = extract_x_params(&product_state()).unwrap_err();
        assert!(matches!(err, Error::NotXState { row: 0, col: 1, .. }));
    }

    #[test]
    fn complex_coherence_is_rejected() {
        let mut m = werner_state(0.5, BellKind::PhiPlus)
            .unwrap()
            .matrix()
            .clone();
        m[(3, 0)] = c(0.25, 0.01);
        m[(0, 3)] = c(0.25, -0.01);
        let rho = DensityMatrix::two_qubit(m).unwrap();
        assert!(matches!(
            extract_x_params(&rho),
            Err(Error::ComplexXParameter { name: "rho41", .. })
        ));
    }

    #[test]
    fn tdd_examples() {
        let w = werner_state(0.4_f64, BellKind::PhiPlus).unwrap();
        assert!((trace_distance_discord(&w).unwrap() - 0.2).abs() < 1e-12);
        let mixed = DensityMatrix::<f64>::maximally_mixed(vec![2, 2]);
        assert_eq!(trace_distance_discord(&mixed).unwrap(), 0.0);
        let s = werner_state(0.6_f64, BellKind::PsiMinus).unwrap();
        assert!((trace_distance_discord(&s).unwrap() - 0.3).abs() < 1e-12);
    }

    #[test]
    fn tdd_general_x_state_against_sdp_bound() {
        // Reference 0.16797108594721 from evaluating the closed form in numpy;
        // a cvxpy search of min ½||ρ - χ||₁ over classical-quantum χ found
        // 0.168429 on a 46-point θ scan, an upper bound converging to it.
        let rho = x_state(0.5, -0.3, 0.1, 0.2);
        let d = trace_distance_discord(&rho).unwrap();
        assert!((d - 0.167_971_085_947_21).abs() < 1e-12);
        assert!(d <= 0.168_429);
        let rho = x_state(0.2, 0.6, 0.1, 0.25);
        let d = trace_distance_discord(&rho).unwrap();
        assert!((d - 0.148_732_014_446_157_9).abs() < 1e-12);
        assert!(d <= 0.148_934);
    }

    #[test]
    fn tdd_is_continuous_into_bell_diagonal_limit() {
        for (c1, c2, c3) in [
            (0.5, 0.3, 0.1),
            (0.1, -0.5, 0.3),
            (0.3, 0.1, -0.5),
            (-0.2, 0.2, 0.6),
        ] {
            let exact = trace_distance_discord(&x_state(c1, c2, c3, 0.0)).unwrap();
            let near = trace_distance_discord(&x_state(c1, c2, c3, 1e-7)).unwrap();
            assert!((exact - near).abs() < 1e-6, "{exact} vs {near}");
        }
    }

    #[test]
    fn oz_closed_form_values() {
        assert_eq!(oz_discord_closed_werner(0.0f64).unwrap(), 0.0);
        assert!((oz_discord_closed_werner(0.5f64).unwrap() - OZ_HALF).abs() < 1e-12);
        assert!((oz_discord_closed_werner(1.0f64).unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
        assert!(oz_discord_closed_werner(1.5f64).is_err());
    }

    #[test]
    fn oz_numeric_matches_closed_form() {
        let w = werner_state(0.5, BellKind::PhiPlus).unwrap();
        let res = oz_discord_numeric(&w, &GridResolution::default()).unwrap();
        assert!((res.discord - OZ_HALF).abs() < 1e-4);
        let at_z = conditional_entropy(&w, &MeasurementBasis::z());
        assert!(at_z - res.conditional_entropy < 1e-9);
    }

    #[test]
    fn oz_numeric_product_state() {
        let res =
            oz_discord_numeric(&product_state(), &GridResolution::new(64, 64).unwrap()).unwrap();
        assert!(res.discord.abs() < 1e-6);
    }

    #[test]
    fn resolution_lower_bound() {
        assert!(GridResolution::new(63, 100).is_err());
        let w = werner_state(0.5, BellKind::PhiPlus).unwrap();
        let coarse = GridResolution {
            theta_points: 10,
            phi_points: 10,
        };
        assert!(matches!(
            oz_discord_numeric(&w, &coarse),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn mutual_information_examples() {
        assert!(mutual_information(&product_state()).unwrap().abs() < 1e-12);
        let bell = werner_state(1.0_f64, BellKind::PhiPlus).unwrap();
        assert!((mutual_information(&bell).unwrap() - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
        let w = werner_state(0.5, BellKind::PhiPlus).unwrap();
        assert!((mutual_information(&w).unwrap() - MI_WERNER_HALF).abs() < 1e-12);
    }

    #[test]
    fn projectors_are_complete() {
        let b = MeasurementBasis::new(0.7f64, 2.1);
        let [p0, p1] = b.projectors();
        assert!((&p0 + &p1).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        for p in [&p0, &p1] {
            assert!((p * p).max_abs_diff(p) < 1e-12);
        }
    }
}
