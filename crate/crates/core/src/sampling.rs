//! Periodic sampling model on `C^N`.
//!
//! A signal is bandlimited when its N-point DFT vanishes outside the centered
//! bins `|ν| ≤ W`. Sampling keeps every `Ts`-th entry (`L = N/Ts` samples) and
//! reconstruction is the periodic interpolation
//! `x'[n] = Σ_m y[m] · h[(n - m·Ts) mod N]`.
//!
//! This is the finite counterpart of sampling a signal bandlimited to `B` Hz
//! with period `T` and interpolating with a sinc kernel:
//!
//! | continuous                   | discrete                           |
//! |------------------------------|------------------------------------|
//! | band `[-B, B]`               | bins `-W..=W`                      |
//! | `2BT` (inverse oversampling) | `(2W+1)/L`                         |
//! | sinc interpolator            | periodic Dirichlet kernel          |
//! | `∫_{-1/2}^{1/2} ·  df`       | `(1/(N·Ts)) Σ_ν ·`                 |
//!
//! so the noise MSE of ideal lowpass reconstruction, `σ²·2BT`, becomes
//! `σ²·(2W+1)/L`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::matrix::{norm, norm_sqr, CMatrix};
use crate::scalar::{root_of_unity, Scalar};

/// Length `N`, half band `W` (bins) and sampling period `Ts`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingModel {
    n: usize,
    band: usize,
    period: usize,
}

impl SamplingModel {
    /// Requires `N` even, `Ts | N` and `2W+1 ≤ N`. Aliasing configurations
    /// (`2W+1 > L`) are representable; the filter constructors reject them.
    pub fn new(n: usize, band: usize, period: usize) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("N = {n} must be even and at least 2")));
        }
        if period == 0 || !n.is_multiple_of(period) {
            return Err(Error::InvalidParams(format!("sampling period {period} does not divide N = {n}")));
        }
        if 2 * band + 1 > n {
            return Err(Error::Aliasing {
                bins: 2 * band + 1,
                available: n,
            });
        }
        Ok(Self { n, band, period })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn band(&self) -> usize {
        self.band
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `L = N / Ts`.
    pub fn samples(&self) -> usize {
        self.n / self.period
    }

    /// `2W + 1`.
    pub fn band_bins(&self) -> usize {
        2 * self.band + 1
    }

    /// `2W + 1 ≤ L`.
    pub fn is_alias_free(&self) -> bool {
        self.band_bins() <= self.samples()
    }

    /// `L / (2W + 1)`.
    pub fn oversampling_factor(&self) -> f64 {
        self.samples() as f64 / self.band_bins() as f64
    }

    /// Storage index of centered bin `ν`.
    pub fn bin_index(&self, bin: i64) -> usize {
        bin.rem_euclid(self.n as i64) as usize
    }

    /// Centered bin in `[-N/2, N/2)` of storage index `idx`.
    pub fn centered_bin(&self, idx: usize) -> i64 {
        let half = self.n / 2;
        if idx < half {
            idx as i64
        } else {
            idx as i64 - self.n as i64
        }
    }

    pub fn in_passband(&self, bin: i64) -> bool {
        bin.unsigned_abs() as usize <= self.band
    }

    /// `ν ≡ ν' (mod L)` for some passband bin `ν' ≠ ν`.
    pub fn is_alias_image(&self, bin: i64) -> bool {
        let l = self.samples() as i64;
        let w = self.band as i64;
        (-w..=w).any(|p| p != bin && (bin - p).rem_euclid(l) == 0)
    }

    pub fn is_protected(&self, bin: i64) -> bool {
        self.in_passband(bin) || self.is_alias_image(bin)
    }

    fn half(&self) -> i64 {
        (self.n / 2) as i64
    }

    /// Centered bins in storage order.
    pub fn bins(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.n).map(move |i| self.centered_bin(i))
    }
}

/// Unnormalized forward DFT, `X[ν] = Σ_n x[n] e^{-i2πνn/N}`.
pub fn dft<T: Scalar>(x: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut buf = x.to_vec();
    FftPlanner::new().plan_fft_forward(buf.len()).process(&mut buf);
    buf
}

/// Inverse DFT, `x[n] = (1/N) Σ_ν X[ν] e^{i2πνn/N}`.
pub fn idft<T: Scalar>(spectrum: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut buf = spectrum.to_vec();
    let n = buf.len();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let scale = T::lit(1.0 / n as f64);
    buf.iter_mut().for_each(|z| *z = z.scale(scale));
    buf
}

/// Signal whose DFT is supported on `|ν| ≤ band`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandlimitedSignal<T> {
    x: Vec<Complex<T>>,
    band: usize,
}

impl<T: Scalar> BandlimitedSignal<T> {
    /// Checks the band support: every out-of-band DFT magnitude must be at
    /// most `1e-12` (relative) of the largest one.
    pub fn new(x: Vec<Complex<T>>, band: usize) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Empty("signal"));
        }
        if 2 * band + 1 > x.len() {
            return Err(Error::Aliasing {
                bins: 2 * band + 1,
                available: x.len(),
            });
        }
        let s = Self { x, band };
        let leak = s.out_of_band_ratio();
        if leak > band_leak_tol::<T>() {
            return Err(Error::InvalidParams(format!(
                "signal is not bandlimited to {band} bins (relative leakage {:e})",
                leak.to_f64_lossy()
            )));
        }
        Ok(s)
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.x
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.x
    }

    pub fn band(&self) -> usize {
        self.band
    }

    /// `max_{|ν|>W} |X[ν]| / max_ν |X[ν]|`.
    pub fn out_of_band_ratio(&self) -> T {
        out_of_band_ratio(&self.x, self.band)
    }
}

fn band_leak_tol<T: Scalar>() -> T {
    // 1e-12 for f64; single precision cannot get there
    T::lit(T::HERMITIAN_TOL)
}

pub(crate) fn out_of_band_ratio<T: Scalar>(x: &[Complex<T>], band: usize) -> T {
    let n = x.len() as i64;
    let spectrum = dft(x);
    let peak = spectrum.iter().map(|z| z.norm()).fold(T::zero(), T::max);
    if peak == T::zero() {
        return T::zero();
    }
    let leak = spectrum
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let i = i as i64;
            let bin = if i < n - i { i } else { n - i };
            bin as usize > band
        })
        .map(|(_, z)| z.norm())
        .fold(T::zero(), T::max);
    leak / peak
}

/// Random unit-energy signal with i.i.d. complex Gaussian DFT coefficients on
/// `|ν| ≤ band` and zeros elsewhere. Deterministic in `seed`.
pub fn make_bandlimited<T: Scalar>(n: usize, band: usize, seed: u64) -> Result<BandlimitedSignal<T>>
where
    StandardNormal: Distribution<T>,
{
    if n == 0 {
        return Err(Error::Empty("signal length"));
    }
    if 2 * band + 1 > n {
        return Err(Error::Aliasing {
            bins: 2 * band + 1,
            available: n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spectrum = vec![Complex::<T>::zero(); n];
    let b = band as i64;
    for bin in -b..=b {
        let re: T = rng.sample(StandardNormal);
        let im: T = rng.sample(StandardNormal);
        spectrum[bin.rem_euclid(n as i64) as usize] = Complex::new(re, im);
    }
    let mut x = idft(&spectrum);
    let e = norm(&x);
    x.iter_mut().for_each(|z| *z = z.unscale(e));
    Ok(BandlimitedSignal { x, band })
}

/// `y[m] = x[m·Ts]`, `m = 0..L`.
pub fn sample<T: Scalar>(x: &[Complex<T>], model: &SamplingModel) -> Result<Vec<Complex<T>>> {
    if x.len() != model.len() {
        return Err(Error::DimensionMismatch {
            context: "signal length vs model length N",
            expected: model.len(),
            actual: x.len(),
        });
    }
    Ok(x.iter().step_by(model.period()).copied().collect())
}

/// Reconstruction filter: impulse response `h` and its DFT `H` (storage order).
#[derive(Debug, Clone, PartialEq)]
pub struct ReconFilter<T> {
    impulse: Vec<Complex<T>>,
    response: Vec<Complex<T>>,
}

impl<T: Scalar> ReconFilter<T> {
    /// Filter with the given frequency response (storage order, length N).
    pub fn from_response(response: Vec<Complex<T>>) -> Result<Self> {
        if response.is_empty() {
            return Err(Error::Empty("filter response"));
        }
        if !response.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("filter response"));
        }
        let impulse = idft(&response);
        Ok(Self { impulse, response })
    }

    pub fn impulse(&self) -> &[Complex<T>] {
        &self.impulse
    }

    pub fn response(&self) -> &[Complex<T>] {
        &self.response
    }

    pub fn response_at(&self, model: &SamplingModel, bin: i64) -> Complex<T> {
        self.response[model.bin_index(bin)]
    }

    pub fn len(&self) -> usize {
        self.response.len()
    }

    pub fn is_empty(&self) -> bool {
        self.response.is_empty()
    }

    /// Largest deviation from the PR pattern: `H = Ts` on the passband, `0` on
    /// its alias images.
    pub fn pr_deviation(&self, model: &SamplingModel) -> T {
        if self.len() != model.len() {
            return T::infinity();
        }
        let gain = Complex::new(T::lit(model.period() as f64), T::zero());
        model
            .bins()
            .map(|bin| {
                let h = self.response_at(model, bin);
                if model.in_passband(bin) {
                    (h - gain).norm()
                } else if model.is_alias_image(bin) {
                    h.norm()
                } else {
                    T::zero()
                }
            })
            .fold(T::zero(), T::max)
    }

    /// PR within `CHECK_TOL · Ts`.
    pub fn is_perfect_reconstruction(&self, model: &SamplingModel) -> bool {
        model.is_alias_free() && self.pr_deviation(model) <= T::lit(T::CHECK_TOL * model.period() as f64)
    }

    /// True when every residue class mod `L` holds at most one nonzero bin.
    /// For such filters the per-position noise variance is independent of `n`.
    pub fn is_alias_class_exclusive(&self, model: &SamplingModel) -> bool {
        let l = model.samples();
        let tol = T::lit(T::CHECK_TOL);
        let mut seen = vec![false; l];
        for (idx, h) in self.response.iter().enumerate() {
            if h.norm() > tol {
                let r = idx % l;
                if seen[r] {
                    return false;
                }
                seen[r] = true;
            }
        }
        true
    }
}

/// `H[ν] = Ts` for `|ν| ≤ W`, zero elsewhere: a scaled periodic Dirichlet kernel.
pub fn ideal_lowpass<T: Scalar>(model: &SamplingModel) -> Result<ReconFilter<T>> {
    make_recon_filter(model, &BTreeMap::new())
}

/// PR filter with user-chosen values on free bins (neither passband nor
/// alias image of the passband). Unlisted free bins are zero.
pub fn make_recon_filter<T: Scalar>(model: &SamplingModel, dontcare: &BTreeMap<i64, Complex<T>>) -> Result<ReconFilter<T>> {
    if !model.is_alias_free() {
        return Err(Error::Aliasing {
            bins: model.band_bins(),
            available: model.samples(),
        });
    }
    let half = model.half();
    let mut response = vec![Complex::zero(); model.len()];
    let gain = Complex::new(T::lit(model.period() as f64), T::zero());
    let w = model.band() as i64;
    for bin in -w..=w {
        response[model.bin_index(bin)] = gain;
    }
    for (&bin, &value) in dontcare {
        if bin < -half || bin >= half {
            return Err(Error::BinOutOfRange { bin, half });
        }
        if model.is_protected(bin) {
            return Err(Error::ProtectedBin { bin });
        }
        response[model.bin_index(bin)] = value;
    }
    ReconFilter::from_response(response)
}

/// Shape of a transition band between the passband and its first alias image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rolloff {
    Linear,
    RaisedCosine,
}

/// Don't-care values on the free bins `W < |ν| < L - W` inside `[-N/2, N/2)`,
/// falling from `Ts` towards zero across the gap.
pub fn rolloff_dontcare<T: Scalar>(model: &SamplingModel, shape: Rolloff) -> BTreeMap<i64, Complex<T>> {
    let w = model.band() as f64;
    let l = model.samples() as f64;
    let gain = model.period() as f64;
    let width = l - 2.0 * w;
    model
        .bins()
        .filter(|&b| {
            let a = b.unsigned_abs() as f64;
            a > w && a < l - w && !model.is_protected(b)
        })
        .map(|b| {
            let u = (b.unsigned_abs() as f64 - w) / width;
            let v = match shape {
                Rolloff::Linear => 1.0 - u,
                Rolloff::RaisedCosine => 0.5 * (1.0 + (std::f64::consts::PI * u).cos()),
            };
            (b, Complex::new(T::lit(gain * v), T::zero()))
        })
        .collect()
}

/// Precomputed FFT plans for repeated reconstruction with one filter.
struct Reconstructor<T: Scalar> {
    forward: Arc<dyn Fft<T>>,
    inverse: Arc<dyn Fft<T>>,
    response: Vec<Complex<T>>,
    period: usize,
}

impl<T: Scalar> Reconstructor<T> {
    fn new(filter: &ReconFilter<T>, model: &SamplingModel) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            forward: planner.plan_fft_forward(model.len()),
            inverse: planner.plan_fft_inverse(model.len()),
            response: filter.response().to_vec(),
            period: model.period(),
        }
    }

    /// Zero-fill, filter in the DFT domain, transform back.
    fn apply(&self, y: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.response.len();
        let mut buf = vec![Complex::zero(); n];
        for (m, &v) in y.iter().enumerate() {
            buf[m * self.period] = v;
        }
        self.forward.process(&mut buf);
        for (b, &h) in buf.iter_mut().zip(&self.response) {
            *b = *b * h;
        }
        self.inverse.process(&mut buf);
        let scale = T::lit(1.0 / n as f64);
        buf.iter_mut().for_each(|z| *z = z.scale(scale));
        buf
    }
}

/// `x'[n] = Σ_{m<L} y[m] · h[(n - m·Ts) mod N]`.
pub fn reconstruct<T: Scalar>(y: &[Complex<T>], filter: &ReconFilter<T>, model: &SamplingModel) -> Result<Vec<Complex<T>>> {
    if y.len() != model.samples() {
        return Err(Error::DimensionMismatch {
            context: "sample count vs L",
            expected: model.samples(),
            actual: y.len(),
        });
    }
    if filter.len() != model.len() {
        return Err(Error::DimensionMismatch {
            context: "filter length vs model length N",
            expected: model.len(),
            actual: filter.len(),
        });
    }
    Ok(Reconstructor::new(filter, model).apply(y))
}

/// Noise MSE of reconstruction from noisy samples.
#[derive(Debug, Clone, PartialEq)]
pub struct MseProfile<T> {
    /// Average over positions.
    pub mean: T,
    /// `σ² Σ_m |h[(n - m·Ts) mod N]|²` for each `n`.
    pub profile: Vec<T>,
}

impl<T: Scalar> MseProfile<T> {
    /// `(max - min) / mean` of the profile; 0 for a flat profile.
    pub fn spread(&self) -> T {
        let hi = self.profile.iter().copied().fold(T::neg_infinity(), T::max);
        let lo = self.profile.iter().copied().fold(T::infinity(), T::min);
        if self.mean == T::zero() {
            hi - lo
        } else {
            (hi - lo) / self.mean
        }
    }
}

/// Time-domain MSE for i.i.d. sample noise of variance `sigma2`.
pub fn analytic_mse<T: Scalar>(filter: &ReconFilter<T>, model: &SamplingModel, sigma2: T) -> Result<MseProfile<T>> {
    if filter.len() != model.len() {
        return Err(Error::DimensionMismatch {
            context: "filter length vs model length N",
            expected: model.len(),
            actual: filter.len(),
        });
    }
    let n = model.len();
    let h = filter.impulse();
    let profile: Vec<T> = (0..n)
        .map(|pos| {
            let s: T = (0..model.samples())
                .map(|m| h[(pos + n - (m * model.period()) % n) % n].norm_sqr())
                .sum();
            sigma2 * s
        })
        .collect();
    let mean = pairwise_sum(&profile) / T::lit(n as f64);
    Ok(MseProfile { mean, profile })
}

/// Frequency-domain form `σ² / (N·Ts) · Σ_ν |H[ν]|²`.
pub fn closed_form_mse<T: Scalar>(filter: &ReconFilter<T>, model: &SamplingModel, sigma2: T) -> T {
    let energy: Vec<T> = filter.response().iter().map(|z| z.norm_sqr()).collect();
    sigma2 * pairwise_sum(&energy) / T::lit((model.len() * model.period()) as f64)
}

/// In-band and out-of-band parts of the noise MSE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MseDecomposition<T> {
    pub inband: T,
    pub outband: T,
}

impl<T: Scalar> MseDecomposition<T> {
    pub fn total(&self) -> T {
        self.inband + self.outband
    }
}

/// Splits the MSE of a PR filter into the passband part `σ²(2W+1)/L` and
/// the part contributed by the don't-care bins.
pub fn mse_decomposition<T: Scalar>(filter: &ReconFilter<T>, model: &SamplingModel, sigma2: T) -> Result<MseDecomposition<T>> {
    if !filter.is_perfect_reconstruction(model) {
        return Err(Error::NotPerfectReconstruction {
            deviation: filter.pr_deviation(model).to_f64_lossy(),
        });
    }
    let scale = sigma2 / T::lit((model.len() * model.period()) as f64);
    let (mut inband, mut outband) = (Vec::new(), Vec::new());
    for bin in model.bins() {
        let e = filter.response_at(model, bin).norm_sqr();
        if model.in_passband(bin) {
            inband.push(e);
        } else {
            outband.push(e);
        }
    }
    Ok(MseDecomposition {
        inband: scale * pairwise_sum(&inband),
        outband: scale * pairwise_sum(&outband),
    })
}

/// Distribution of the additive sample noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NoiseKind {
    /// Circularly-symmetric complex Gaussian, `E|w|² = σ²`.
    #[default]
    Complex,
    /// Real Gaussian with variance `σ²`.
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloConfig<T> {
    pub sigma2: T,
    pub trials: usize,
    pub seed: u64,
    pub noise: NoiseKind,
}

/// Outcome of a Monte Carlo noise experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseExperiment<T> {
    pub sigma2: T,
    pub trials: usize,
    pub seed: u64,
    pub noise: NoiseKind,
    /// Mean of `|x - x'|²` over positions and trials.
    pub estimated: T,
    pub analytic: T,
    /// Standard error of `estimated` across trials.
    pub stderr: T,
}

/// Adds i.i.d. noise to the samples of `x`, reconstructs, and averages the
/// squared error. Trial `t` draws from ChaCha stream `(seed, t)`, and the
/// per-trial results are summed pairwise in trial order, so the output does
/// not depend on how rayon schedules the work.
pub fn monte_carlo_mse<T: Scalar>(
    x: &[Complex<T>],
    filter: &ReconFilter<T>,
    model: &SamplingModel,
    config: &MonteCarloConfig<T>,
) -> Result<NoiseExperiment<T>>
where
    StandardNormal: Distribution<T>,
{
    if config.trials == 0 {
        return Err(Error::InvalidParams("Monte Carlo needs at least one trial".into()));
    }
    if config.sigma2 < T::zero() || !config.sigma2.is_finite() {
        return Err(Error::InvalidParams("noise variance must be finite and non-negative".into()));
    }
    let y = sample(x, model)?;
    let analytic = analytic_mse(filter, model, config.sigma2)?.mean;
    let recon = Reconstructor::new(filter, model);
    let (amp, with_imag) = match config.noise {
        NoiseKind::Complex => ((config.sigma2 / T::lit(2.0)).sqrt(), true),
        NoiseKind::Real => (config.sigma2.sqrt(), false),
    };
    let inv_n = T::lit(1.0 / model.len() as f64);

    let per_trial: Vec<T> = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(t);
            let noisy: Vec<Complex<T>> = y
                .iter()
                .map(|&v| {
                    let re: T = rng.sample(StandardNormal);
                    let im: T = if with_imag { rng.sample(StandardNormal) } else { T::zero() };
                    v + Complex::new(re, im).scale(amp)
                })
                .collect();
            let xr = recon.apply(&noisy);
            let err: Vec<T> = x.iter().zip(&xr).map(|(&a, &b)| (a - b).norm_sqr()).collect();
            pairwise_sum(&err) * inv_n
        })
        .collect();

    let count = T::lit(config.trials as f64);
    let estimated = pairwise_sum(&per_trial) / count;
    let stderr = if config.trials > 1 {
        let dev: Vec<T> = per_trial.iter().map(|&v| (v - estimated) * (v - estimated)).collect();
        (pairwise_sum(&dev) / T::lit((config.trials - 1) as f64) / count).sqrt()
    } else {
        T::zero()
    };
    Ok(NoiseExperiment {
        sigma2: config.sigma2,
        trials: config.trials,
        seed: config.seed,
        noise: config.noise,
        estimated,
        analytic,
        stderr,
    })
}

/// The `L` sampling functionals restricted to the band, as a frame for
/// `C^{2W+1}` in the orthonormal exponential coordinates, scaled by `√Ts` so
/// the frame is tight with bound 1. Row `m` is `√(Ts/N) · e^{-i2πνm/L}` over
/// `ν = -W..=W`.
pub fn sampling_frame<T: Scalar>(model: &SamplingModel) -> Result<Frame<T>> {
    let w = model.band() as i64;
    let l = model.samples() as i64;
    let amp = T::lit((model.period() as f64 / model.len() as f64).sqrt());
    let m = CMatrix::from_fn(model.samples(), model.band_bins(), |row, col| {
        let bin = col as i64 - w;
        root_of_unity::<T>(-bin * row as i64, l).scale(amp)
    });
    Frame::from_vector_rows(m)
}

/// `Σ_m |y[m]|² · Ts / ‖x‖²`; equals 1 for bandlimited `x` in alias-free models.
pub fn sampling_energy_ratio<T: Scalar>(x: &[Complex<T>], model: &SamplingModel) -> Result<T> {
    let y = sample(x, model)?;
    Ok(norm_sqr(&y) * T::lit(model.period() as f64) / norm_sqr(x))
}

/// Pairwise (cascade) summation; the grouping depends only on the length.
pub fn pairwise_sum<T: Scalar>(v: &[T]) -> T {
    if v.len() <= 8 {
        return v.iter().copied().fold(T::zero(), |a, b| a + b);
    }
    let mid = v.len() / 2;
    pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
}
