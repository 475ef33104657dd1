//! Discrete Weyl–Heisenberg (Gabor) systems in `C^M`.
//!
//! For shift step `T` (dividing `M`, `L = M/T`) and `K` modulations the system
//! is `g_{k,l}[n] = g[(n - lT) mod M] · e^{i2πkn/K}` for `k < K`, `l < L`,
//! ordered with `k` outer and `l` inner.

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::matrix::{max_abs_diff, norm_sqr, CMatrix};
use crate::scalar::{root_of_unity, Scalar};

/// Shift/modulation lattice of a discrete Gabor system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaborParams {
    dim: usize,
    shift: usize,
    mods: usize,
}

impl GaborParams {
    pub fn new(dim: usize, shift: usize, mods: usize) -> Result<Self> {
        if dim == 0 || shift == 0 || mods == 0 {
            return Err(Error::InvalidParams("Gabor parameters M, T, K must be positive".into()));
        }
        if !dim.is_multiple_of(shift) {
            return Err(Error::InvalidParams(format!("shift T = {shift} does not divide M = {dim}")));
        }
        Ok(Self { dim, shift, mods })
    }

    /// Ambient dimension `M`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Time-shift step `T`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Number of modulations `K`.
    pub fn mods(&self) -> usize {
        self.mods
    }

    /// Number of shifts `L = M / T`.
    pub fn shifts(&self) -> usize {
        self.dim / self.shift
    }

    /// `K · L`.
    pub fn system_size(&self) -> usize {
        self.mods * self.shifts()
    }

    /// Position of `(k, l)` in the build order.
    pub fn index(&self, k: usize, l: usize) -> usize {
        k * self.shifts() + l
    }

    /// `(k, l)` pairs in build order.
    pub fn lattice(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.mods).flat_map(move |k| (0..self.shifts()).map(move |l| (k, l)))
    }
}

/// Window vector generating a Gabor system.
#[derive(Debug, Clone, PartialEq)]
pub struct Prototype<T>(pub Vec<Complex<T>>);

impl<T: Scalar> Prototype<T> {
    pub fn new(g: Vec<Complex<T>>) -> Result<Self> {
        if g.is_empty() {
            return Err(Error::Empty("prototype"));
        }
        if !g.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("prototype"));
        }
        Ok(Self(g))
    }

    pub fn from_real(g: &[f64]) -> Result<Self> {
        Self::new(crate::matrix::complexify(g))
    }

    /// `δ_0`.
    pub fn delta(dim: usize) -> Result<Self> {
        let mut g = vec![0.0; dim];
        if let Some(first) = g.first_mut() {
            *first = 1.0;
        }
        Self::from_real(&g)
    }

    /// `e^{-x²/2}` sampled at `x_n = (n - M/2)·√(2π/M)`, peak 1 at `n = M/2`.
    pub fn gaussian(dim: usize) -> Result<Self> {
        let step = (std::f64::consts::TAU / dim as f64).sqrt();
        let half = (dim / 2) as f64;
        let g: Vec<f64> = (0..dim)
            .map(|n| {
                let x = (n as f64 - half) * step;
                (-x * x / 2.0).exp()
            })
            .collect();
        Self::from_real(&g)
    }

    /// Ones on the centered half `[M/4, 3M/4)`, at least one sample.
    pub fn boxcar(dim: usize) -> Result<Self> {
        let lo = dim / 4;
        let hi = (3 * dim / 4).max(lo + 1).min(dim);
        let g: Vec<f64> = (0..dim).map(|n| if n >= lo && n < hi { 1.0 } else { 0.0 }).collect();
        Self::from_real(&g)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.0
    }

    pub fn norm_sqr(&self) -> T {
        norm_sqr(&self.0)
    }
}

/// `(W_{k,l} x)[n] = x[(n - lT) mod M] · e^{i2πkn/K}`. Negative `k`, `l` are allowed.
pub fn weyl_shift<T: Scalar>(x: &[Complex<T>], k: i64, l: i64, params: &GaborParams) -> Result<Vec<Complex<T>>> {
    let m = params.dim();
    if x.len() != m {
        return Err(Error::DimensionMismatch {
            context: "vector length vs Gabor dimension M",
            expected: m,
            actual: x.len(),
        });
    }
    let mi = m as i64;
    let offset = l * params.shift() as i64;
    let kk = params.mods() as i64;
    Ok((0..mi)
        .map(|n| x[(n - offset).rem_euclid(mi) as usize] * root_of_unity::<T>(k * n, kk))
        .collect())
}

/// `W_{k,l}` as an `M×M` matrix.
pub fn weyl_matrix<T: Scalar>(k: i64, l: i64, params: &GaborParams) -> CMatrix<T> {
    let m = params.dim() as i64;
    let offset = l * params.shift() as i64;
    let kk = params.mods() as i64;
    CMatrix::from_fn(params.dim(), params.dim(), |n, j| {
        let n = n as i64;
        if (n - offset).rem_euclid(m) == j as i64 {
            root_of_unity(k * n, kk)
        } else {
            Complex::zero()
        }
    })
}

/// The `K·L` vectors `W_{k,l} g` as a frame, in `(k, l)` row-major order.
pub fn build_gabor_frame<T: Scalar>(g: &Prototype<T>, params: &GaborParams) -> Result<Frame<T>> {
    if g.dim() != params.dim() {
        return Err(Error::DimensionMismatch {
            context: "prototype length vs Gabor dimension M",
            expected: params.dim(),
            actual: g.dim(),
        });
    }
    if g.norm_sqr() == T::zero() {
        return Err(Error::ZeroPrototype);
    }
    let pairs: Vec<(usize, usize)> = params.lattice().collect();
    let rows = pairs
        .par_iter()
        .map(|&(k, l)| weyl_shift(g.as_slice(), k as i64, l as i64, params))
        .collect::<Result<Vec<_>>>()?;
    Frame::new(rows)
}

/// `g̃ = S^{-1} g` for the Gabor frame operator `S`.
pub fn gabor_dual_prototype<T: Scalar>(g: &Prototype<T>, params: &GaborParams) -> Result<Prototype<T>> {
    let frame = build_gabor_frame(g, params)?;
    let s_inv = frame.frame_operator().inverse()?;
    Prototype::new(s_inv.as_matrix().mul_vec(g.as_slice())?)
}

/// True iff `dual` has `K·L` vectors and vector `(k, l)` equals `W_{k,l} g̃`
/// within `CHECK_TOL`.
pub fn verify_wh_structure<T: Scalar>(dual: &Frame<T>, dual_proto: &Prototype<T>, params: &GaborParams) -> Result<bool> {
    if dual.dim() != params.dim() || dual_proto.dim() != params.dim() {
        return Err(Error::DimensionMismatch {
            context: "dual frame / prototype dimension vs Gabor dimension M",
            expected: params.dim(),
            actual: if dual.dim() != params.dim() { dual.dim() } else { dual_proto.dim() },
        });
    }
    if dual.len() != params.system_size() {
        return Ok(false);
    }
    let tol = T::lit(T::CHECK_TOL);
    for (k, l) in params.lattice() {
        let want = weyl_shift(dual_proto.as_slice(), k as i64, l as i64, params)?;
        if max_abs_diff(dual.vector(params.index(k, l)), &want) > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `max_{k,l} max|S W_{k,l} - W_{k,l} S|` over the system's lattice.
pub fn commutation_error<T: Scalar>(frame: &Frame<T>, params: &GaborParams) -> T {
    let s = frame.frame_operator();
    let s = s.as_matrix();
    params
        .lattice()
        .map(|(k, l)| {
            let w = weyl_matrix::<T>(k as i64, l as i64, params);
            (s * &w).max_abs_diff(&(&w * s))
        })
        .fold(T::zero(), T::max)
}
