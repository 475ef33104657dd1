//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};
use rustfft::FftNum;

/// Real floating-point type the toolkit computes in.
///
/// The associated tolerances are calibrated per precision: the `f64` values
/// are the ones the library contracts are stated in, the `f32` values are
/// loosened to what single precision can actually deliver.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + FftNum + Sum + Display + Debug + Default + Send + Sync + 'static
{
    /// Jacobi sweeps stop once the off-diagonal Frobenius mass drops below
    /// this fraction of the matrix Frobenius norm.
    const JACOBI_TOL: f64;
    /// Relative threshold on the smallest frame-operator eigenvalue.
    const FRAME_TOL: f64;
    /// Default absolute tolerance for identity-style checks (L·T = I, U^H U = I, ...).
    const CHECK_TOL: f64;
    /// Relative conjugate-symmetry tolerance for Hermitian matrices.
    const HERMITIAN_TOL: f64;
    /// Residual norm below which a Gram–Schmidt candidate counts as dependent.
    const DEPENDENCE_TOL: f64;

    /// Lossless-enough conversion of an `f64` constant.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 constant representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const JACOBI_TOL: f64 = 1e-13;
    const FRAME_TOL: f64 = 1e-10;
    const CHECK_TOL: f64 = 1e-10;
    const HERMITIAN_TOL: f64 = 1e-12;
    const DEPENDENCE_TOL: f64 = 1e-8;
}

impl Scalar for f32 {
    const JACOBI_TOL: f64 = 1e-6;
    const FRAME_TOL: f64 = 1e-5;
    const CHECK_TOL: f64 = 1e-4;
    const HERMITIAN_TOL: f64 = 1e-5;
    const DEPENDENCE_TOL: f64 = 1e-3;
}

/// `e^{iθ}`.
#[inline]
pub fn cis<T: Scalar>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// `e^{i2π·num/den}` with the numerator reduced modulo `den` first, so large
/// integer phases do not lose precision.
#[inline]
pub fn root_of_unity<T: Scalar>(num: i64, den: i64) -> Complex<T> {
    debug_assert!(den > 0);
    let r = num.rem_euclid(den);
    cis(T::TAU() * T::lit(r as f64) / T::lit(den as f64))
}

pub(crate) fn is_finite<T: Scalar>(z: &Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
