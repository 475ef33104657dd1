//! Hermitian eigendecomposition by cyclic Jacobi rotations, plus the
//! spectral functions (inverse, square roots) built on top of it.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Scalar;

/// Maximum number of full sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
///
/// Column `j` of `vectors` is the unit eigenvector for `values[j]`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
    pub sweeps: usize,
}

impl<T: Scalar> HermitianEigen<T> {
    pub fn min(&self) -> T {
        self.values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn max(&self) -> T {
        self.values.last().copied().unwrap_or_else(T::zero)
    }

    /// `U f(Λ) U^H`.
    pub fn map(&self, f: impl Fn(T) -> T) -> CMatrix<T> {
        let n = self.values.len();
        let fl: Vec<T> = self.values.iter().map(|&v| f(v)).collect();
        let u = &self.vectors;
        CMatrix::from_fn(n, n, |i, j| {
            (0..n).fold(Complex::zero(), |acc, k| acc + u[(i, k)] * u[(j, k)].conj() * fl[k])
        })
    }

    /// `U Λ U^H`, the matrix the decomposition came from.
    pub fn reconstruct(&self) -> CMatrix<T> {
        self.map(|v| v)
    }
}

/// Runs cyclic Jacobi on a Hermitian matrix.
///
/// Convergence is declared when the off-diagonal Frobenius mass falls below
/// `T::JACOBI_TOL · ‖A‖_F`. Only the lower/upper pair symmetry of the input is
/// trusted; call sites validate Hermitian-ness beforehand.
pub fn jacobi_eigen<T: Scalar>(a: &CMatrix<T>) -> Result<HermitianEigen<T>> {
    let n = a.rows();
    if n != a.cols() {
        return Err(Error::DimensionMismatch {
            context: "eigendecomposition of a non-square matrix",
            expected: n,
            actual: a.cols(),
        });
    }
    let mut m = a.clone();
    // Diagonal of a Hermitian matrix is real; drop rounding noise up front.
    for i in 0..n {
        m[(i, i)] = Complex::new(m[(i, i)].re, T::zero());
    }
    let mut v = CMatrix::identity(n);
    let target = T::lit(T::JACOBI_TOL) * a.frobenius_norm();

    let mut sweeps = 0;
    while off_diagonal_mass(&m) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors, sweeps })
}

fn off_diagonal_mass<T: Scalar>(m: &CMatrix<T>) -> T {
    let n = m.rows();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `m[p][q]` with the unitary `V = diag(1, e^{-iφ}) · R(θ)` acting
/// on the (p, q) plane: `m ← V^H m V`, `v ← v V`.
fn rotate<T: Scalar>(m: &mut CMatrix<T>, v: &mut CMatrix<T>, p: usize, q: usize) {
    let apq = m[(p, q)];
    let mag = apq.norm();
    if mag == T::zero() {
        return;
    }
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let phase = apq / mag; // e^{iφ}
    let theta = (aqq - app) / (T::lit(2.0) * mag);
    let t = {
        let s = if theta >= T::zero() { T::one() } else { -T::one() };
        s / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let cc = Complex::new(c, T::zero());
    let sc = Complex::new(s, T::zero());
    let ph = phase.conj();
    // V = [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]]
    let vpp = cc;
    let vpq = sc;
    let vqp = -sc * ph;
    let vqq = cc * ph;

    let n = m.rows();
    for i in 0..n {
        let mip = m[(i, p)];
        let miq = m[(i, q)];
        m[(i, p)] = mip * vpp + miq * vqp;
        m[(i, q)] = mip * vpq + miq * vqq;
    }
    for j in 0..n {
        let mpj = m[(p, j)];
        let mqj = m[(q, j)];
        m[(p, j)] = vpp.conj() * mpj + vqp.conj() * mqj;
        m[(q, j)] = vpq.conj() * mpj + vqq.conj() * mqj;
    }
    m[(p, q)] = Complex::zero();
    m[(q, p)] = Complex::zero();
    m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
    m[(q, q)] = Complex::new(m[(q, q)].re, T::zero());

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * vpp + viq * vqp;
        v[(i, q)] = vip * vpq + viq * vqq;
    }
}

/// Square complex matrix that is conjugate-symmetric within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T>(CMatrix<T>);

impl<T: Scalar> HermitianMatrix<T> {
    /// Validates conjugate symmetry relative to the largest entry.
    pub fn new(m: CMatrix<T>) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch {
                context: "Hermitian matrix must be square",
                expected: m.rows(),
                actual: m.cols(),
            });
        }
        let scale = m.max_abs();
        let asym = m.max_abs_diff(&m.adjoint());
        if asym > T::lit(T::HERMITIAN_TOL) * scale {
            let rel = if scale > T::zero() { asym / scale } else { asym };
            return Err(Error::NotHermitian { asymmetry: rel.to_f64_lossy() });
        }
        Ok(Self(m))
    }

    /// Wraps a matrix that is Hermitian by construction, symmetrizing away rounding.
    pub(crate) fn from_construction(m: CMatrix<T>) -> Self {
        let half = T::lit(0.5);
        let n = m.rows();
        let sym = CMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()).scale(half));
        Self(sym)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &CMatrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.0
    }

    pub fn eigen(&self) -> Result<HermitianEigen<T>> {
        jacobi_eigen(&self.0)
    }

    /// `U Λ^{-1} U^H`; fails when the smallest eigenvalue is not safely positive.
    pub fn inverse(&self) -> Result<Self> {
        let e = self.positive_definite_eigen()?;
        Ok(Self::from_construction(e.map(|v| v.recip())))
    }

    /// `U Λ^{-1/2} U^H`.
    pub fn inverse_sqrt(&self) -> Result<Self> {
        let e = self.positive_definite_eigen()?;
        Ok(Self::from_construction(e.map(|v| v.sqrt().recip())))
    }

    /// Positive semidefinite square root; negative rounding noise is clamped to 0.
    pub fn sqrt(&self) -> Result<Self> {
        let e = self.eigen()?;
        Ok(Self::from_construction(e.map(|v| v.max(T::zero()).sqrt())))
    }

    fn positive_definite_eigen(&self) -> Result<HermitianEigen<T>> {
        let e = self.eigen()?;
        let threshold = frame_threshold(e.max());
        if self.dim() == 0 || e.min() <= threshold {
            return Err(Error::NotAFrame {
                lambda_min: e.min().to_f64_lossy(),
                threshold: threshold.to_f64_lossy(),
            });
        }
        Ok(e)
    }
}

/// `ε_frame = FRAME_TOL · max(λ_max, 1)`.
pub fn frame_threshold<T: Scalar>(lambda_max: T) -> T {
    T::lit(T::FRAME_TOL) * lambda_max.max(T::one())
}
