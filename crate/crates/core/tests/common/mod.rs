#![allow(dead_code)]

use framekit::{CMatrix, Frame, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_normal(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    (0..n).map(|_| complex_normal(rng)).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> CMatrix<f64> {
    CMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Random complex frame with `k` vectors in `C^n` (Gaussian entries, full rank
/// almost surely when `k ≥ n`).
pub fn random_frame(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Frame<f64> {
    Frame::from_vector_rows(random_matrix(rng, k, n)).unwrap()
}

/// Random `(N, K)` with `N ∈ [1, max_n]`, `K ∈ [N, min(3N, max_k)]`.
pub fn random_shape(rng: &mut ChaCha8Rng, max_n: usize, max_k: usize) -> (usize, usize) {
    let n = rng.random_range(1..=max_n);
    let k = rng.random_range(n..=(3 * n).min(max_k).max(n));
    (n, k)
}

/// Random unitary by classical Gram–Schmidt on a Gaussian matrix
/// (independent of the library's eigen routines).
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> CMatrix<f64> {
    let mut cols: Vec<Vec<C64>> = Vec::new();
    while cols.len() < n {
        let mut v = random_vector(rng, n);
        for q in &cols {
            let p: C64 = v.iter().zip(q).map(|(a, b)| a * b.conj()).sum();
            for (vi, qi) in v.iter_mut().zip(q) {
                *vi -= p * qi;
            }
        }
        let nv = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if nv > 1e-6 {
            cols.push(v.into_iter().map(|z| z / nv).collect());
        }
    }
    CMatrix::from_columns(&cols).unwrap()
}

pub fn inner(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm_sqr(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

pub fn max_diff(x: &[C64], y: &[C64]) -> f64 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// Direct O(N²) forward DFT, `X[ν] = Σ x[n] e^{-i2πνn/N}`.
pub fn direct_dft(x: &[C64]) -> Vec<C64> {
    let n = x.len();
    (0..n)
        .map(|v| {
            x.iter()
                .enumerate()
                .map(|(t, &xt)| xt * C64::from_polar(1.0, -std::f64::consts::TAU * ((v * t) % n) as f64 / n as f64))
                .sum()
        })
        .collect()
}

/// Direct O(N²) inverse DFT.
pub fn direct_idft(spectrum: &[C64]) -> Vec<C64> {
    let n = spectrum.len();
    (0..n)
        .map(|t| {
            spectrum.iter()
                .enumerate()
                .map(|(v, &s)| s * C64::from_polar(1.0, std::f64::consts::TAU * ((v * t) % n) as f64 / n as f64))
                .sum::<C64>()
                / n as f64
        })
        .collect()
}
