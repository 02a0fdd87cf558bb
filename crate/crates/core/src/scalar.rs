//! Floating-point scalar abstraction.
//!
//! Every numerical routine in the crate is written against [`Real`], so the
//! same code runs in `f64` (the default, used by the CLI and the reproduction
//! harness) or `f32`. Tolerances are carried per type because a threshold
//! like `1e-10` is meaningless in single precision.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar usable by the spectral and thermodynamic routines.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Max-abs deviation from Hermiticity accepted before symmetrizing.
    const HERMITIAN_TOL: f64;
    /// Relative off-diagonal Frobenius threshold that stops the Jacobi sweeps.
    const JACOBI_TOL: f64;
    /// Window below zero in which density-matrix eigenvalues are clamped.
    const CLAMP_TOL: f64;
    /// Accepted deviation of a density-matrix trace from one.
    const TRACE_TOL: f64;

    /// Lossy conversion from an `f64` constant.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Conversion used when reporting values in errors and serialized output.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const HERMITIAN_TOL: f64 = 1e-10;
    const JACOBI_TOL: f64 = 1e-13;
    const CLAMP_TOL: f64 = 1e-10;
    const TRACE_TOL: f64 = 1e-10;
}

impl Real for f32 {
    const HERMITIAN_TOL: f64 = 1e-5;
    const JACOBI_TOL: f64 = 1e-6;
    const CLAMP_TOL: f64 = 1e-5;
    const TRACE_TOL: f64 = 1e-5;
}

/// Complex number over a [`Real`] scalar.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn cr<T: Real>(re: T) -> C<T> {
    Complex::new(re, T::zero())
}

/// `-x ln x` with the `0 ln 0 = 0` convention; non-positive inputs map to 0.
pub fn entropy_term<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        -x * x.ln()
    }
}

/// `x ln x` with the `0 ln 0 = 0` convention.
pub fn x_ln_x<T: Real>(x: T) -> T {
    -entropy_term(x)
}
