//! Frames in `C^N`: analysis and synthesis, the frame operator and its
//! bounds, canonical and parametrized duals, tightening, Naimark dilation
//! and exactness.
//!
//! A frame is a finite family `{g_k}` of `K` vectors in `C^N`. Its analysis
//! matrix `T` is `K×N` with row `k` equal to `g_k^H`, so that
//! `(T f)_k = ⟨f, g_k⟩`. The frame operator is `S = T^H T = Σ g_k g_k^H`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::eigen::{frame_threshold, HermitianEigen, HermitianMatrix};
use crate::error::{Error, Result};
use crate::matrix::{inner, norm, norm_sqr, CMatrix};
use crate::scalar::{root_of_unity, Scalar};

/// Finite family of vectors in `C^N`, stored with one vector per row.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame<T> {
    vectors: CMatrix<T>,
}

/// Tightest frame bounds `(A, B) = (λ_min(S), λ_max(S))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds<T> {
    pub lower: T,
    pub upper: T,
}

impl<T: Scalar> FrameBounds<T> {
    /// `A > ε_frame`, the numerical version of `A > 0`.
    pub fn is_frame(&self) -> bool {
        self.lower > frame_threshold(self.upper)
    }

    /// `B - A` within `tol · max(B, 1)`.
    pub fn is_tight(&self, tol: T) -> bool {
        self.upper - self.lower <= tol * self.upper.max(T::one())
    }

    /// `B / A`; infinite for non-frames.
    pub fn condition(&self) -> T {
        if self.is_frame() {
            self.upper / self.lower
        } else {
            T::infinity()
        }
    }
}

/// Reconstruction matrix `L` with `L·T = I_N`, together with the free
/// parameter it was generated from.
#[derive(Debug, Clone)]
pub struct LeftInverse<T> {
    pub matrix: CMatrix<T>,
    pub free_param: CMatrix<T>,
}

impl<T: Scalar> LeftInverse<T> {
    /// Columns of `L` as a dual frame.
    pub fn dual_frame(&self) -> Frame<T> {
        Frame {
            vectors: self.matrix.transpose(),
        }
    }

    /// `max |L·T - I|` against the given frame.
    pub fn residual(&self, frame: &Frame<T>) -> T {
        match self.matrix.try_mul(&frame.analysis_matrix()) {
            Ok(p) => p.identity_deviation(),
            Err(_) => T::infinity(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    Inexact,
    NotAFrame,
}

impl Exactness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::Inexact => "inexact",
            Exactness::NotAFrame => "not_a_frame",
        }
    }
}

/// Diagonal `⟨g̃_m, g_m⟩` of the frame/canonical-dual cross Gram matrix.
#[derive(Debug, Clone)]
pub struct ExactnessProfile<T> {
    pub diagonal: Vec<Complex<T>>,
    pub classification: Exactness,
}

/// Result of [`check_biorthonormal`].
#[derive(Debug, Clone)]
pub struct Biorthonormality<T> {
    pub holds: bool,
    /// `G[j][k] = ⟨g_j, g̃_k⟩`.
    pub cross_gram: CMatrix<T>,
}

/// Unitary `U` (K×K) whose first `subspace_dim` columns are the analysis
/// matrix of a tight frame with bound 1.
#[derive(Debug, Clone)]
pub struct NaimarkDilation<T> {
    pub unitary: CMatrix<T>,
    pub subspace_dim: usize,
}

impl<T: Scalar> NaimarkDilation<T> {
    /// ONB vector `e_k` of `C^K`: the conjugate of row `k` of `U`.
    pub fn basis_vector(&self, k: usize) -> Vec<Complex<T>> {
        self.unitary.row(k).iter().map(|z| z.conj()).collect()
    }

    /// Orthogonal projection of `e_k` onto the first `subspace_dim`
    /// coordinates, returned in `C^N`.
    pub fn projected(&self, k: usize) -> Vec<Complex<T>> {
        self.basis_vector(k).into_iter().take(self.subspace_dim).collect()
    }

    pub fn unitarity_error(&self) -> T {
        (&self.unitary.adjoint() * &self.unitary).identity_deviation()
    }
}

impl<T: Scalar> Frame<T> {
    /// Frame from a list of vectors. Requires `K ≥ 1`, `N ≥ 1`, equal lengths
    /// and finite entries. Rank-deficient families are accepted as data.
    pub fn new(vectors: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let m = CMatrix::from_rows(&vectors)?;
        Self::from_vector_rows(m)
    }

    /// Frame whose vectors are the rows of `m`.
    pub fn from_vector_rows(m: CMatrix<T>) -> Result<Self> {
        if m.rows() == 0 {
            return Err(Error::Empty("frame has no vectors"));
        }
        if m.cols() == 0 {
            return Err(Error::Empty("frame vectors have dimension 0"));
        }
        if !m.is_finite() {
            return Err(Error::NonFinite("frame vectors"));
        }
        Ok(Self { vectors: m })
    }

    /// Frame from its analysis matrix (rows `g_k^H`).
    pub fn from_analysis_matrix(t: &CMatrix<T>) -> Result<Self> {
        Self::from_vector_rows(t.conj())
    }

    pub fn from_real(vectors: &[&[f64]]) -> Result<Self> {
        Self::from_vector_rows(CMatrix::from_real_rows(vectors)?)
    }

    /// Number of vectors `K`.
    pub fn len(&self) -> usize {
        self.vectors.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ambient dimension `N`.
    pub fn dim(&self) -> usize {
        self.vectors.cols()
    }

    pub fn vector(&self, k: usize) -> &[Complex<T>] {
        self.vectors.row(k)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Complex<T>]> {
        (0..self.len()).map(move |k| self.vector(k))
    }

    /// `K×N` matrix with the vectors as rows (no conjugation).
    pub fn vector_matrix(&self) -> &CMatrix<T> {
        &self.vectors
    }

    /// `T`, with `T[k][n] = conj(g_k[n])`.
    pub fn analysis_matrix(&self) -> CMatrix<T> {
        self.vectors.conj()
    }

    /// `T^H`, the `N×K` synthesis matrix with the vectors as columns.
    pub fn synthesis_matrix(&self) -> CMatrix<T> {
        self.vectors.transpose()
    }

    /// `c_k = ⟨f, g_k⟩`.
    pub fn analyze(&self, f: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        self.check_signal(f)?;
        Ok(self.vectors().map(|g| inner(f, g)).collect())
    }

    /// `Σ_k c_k g_k`.
    pub fn synthesize(&self, coeffs: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if coeffs.len() != self.len() {
            return Err(Error::DimensionMismatch {
                context: "coefficient vector length vs frame size",
                expected: self.len(),
                actual: coeffs.len(),
            });
        }
        let mut out = vec![Complex::zero(); self.dim()];
        for (g, &c) in self.vectors().zip(coeffs) {
            for (o, &gi) in out.iter_mut().zip(g) {
                *o = *o + c * gi;
            }
        }
        Ok(out)
    }

    /// `S = T^H T`.
    pub fn frame_operator(&self) -> HermitianMatrix<T> {
        let t = self.analysis_matrix();
        HermitianMatrix::from_construction(&t.adjoint() * &t)
    }

    /// Gram matrix `G[j][k] = ⟨g_k, g_j⟩ = (T T^H)[j][k]`.
    pub fn gram(&self) -> CMatrix<T> {
        let t = self.analysis_matrix();
        &t * &t.adjoint()
    }

    pub fn frame_bounds(&self) -> Result<FrameBounds<T>> {
        let e = self.frame_operator().eigen()?;
        Ok(bounds_from(&e))
    }

    /// Fails with `NotAFrame` unless `λ_min(S) > ε_frame`.
    pub fn require_frame(&self) -> Result<FrameBounds<T>> {
        let b = self.frame_bounds()?;
        if !b.is_frame() {
            return Err(Error::NotAFrame {
                lambda_min: b.lower.to_f64_lossy(),
                threshold: frame_threshold(b.upper).to_f64_lossy(),
            });
        }
        Ok(b)
    }

    /// `{S^{-1} g_k}`.
    pub fn canonical_dual(&self) -> Result<Frame<T>> {
        let s_inv = self.frame_operator().inverse()?;
        self.map_vectors(s_inv.as_matrix())
    }

    /// `L = T⁺ + M (I_K - T T⁺)` with `T⁺ = S^{-1} T^H`.
    ///
    /// `free_param = 0` gives the Moore–Penrose inverse, whose columns are the
    /// canonical dual vectors. Passing an existing left-inverse as `M`
    /// reproduces it, since `L = T⁺ + L (I - T T⁺)` whenever `L T = I`.
    pub fn left_inverse(&self, free_param: &CMatrix<T>) -> Result<LeftInverse<T>> {
        if free_param.rows() != self.dim() || free_param.cols() != self.len() {
            return Err(Error::DimensionMismatch {
                context: "free parameter must be N×K",
                expected: self.dim() * self.len(),
                actual: free_param.rows() * free_param.cols(),
            });
        }
        let t = self.analysis_matrix();
        let pinv = self.pseudo_inverse()?;
        let complement = CMatrix::identity(self.len()).try_sub(&(&t * &pinv))?;
        let matrix = pinv.try_add(&(free_param * &complement))?;
        Ok(LeftInverse {
            matrix,
            free_param: free_param.clone(),
        })
    }

    /// Validates an explicit reconstruction matrix as a left inverse of `T`
    /// (entrywise within `tol`).
    pub fn validate_left_inverse(&self, l: &CMatrix<T>, tol: T) -> Result<LeftInverse<T>> {
        let li = LeftInverse {
            matrix: l.clone(),
            free_param: l.clone(),
        };
        let r = li.residual(self);
        if r.is_nan() || r > tol {
            return Err(Error::InvalidParams(format!(
                "matrix is not a left inverse of the analysis matrix (max |L·T - I| = {:e})",
                r.to_f64_lossy()
            )));
        }
        Ok(li)
    }

    /// `T⁺ = S^{-1} T^H`, `N×K`.
    pub fn pseudo_inverse(&self) -> Result<CMatrix<T>> {
        let s_inv = self.frame_operator().inverse()?;
        Ok(s_inv.as_matrix() * &self.synthesis_matrix())
    }

    /// `P = T S^{-1} T^H`, the orthogonal projection of `C^K` onto range(T).
    pub fn range_projection(&self) -> Result<HermitianMatrix<T>> {
        let t = self.analysis_matrix();
        let pinv = self.pseudo_inverse()?;
        Ok(HermitianMatrix::from_construction(&t * &pinv))
    }

    /// `{S^{-1/2} g_k}`, a tight frame with bound 1.
    pub fn tighten(&self) -> Result<Frame<T>> {
        let r = self.frame_operator().inverse_sqrt()?;
        self.map_vectors(r.as_matrix())
    }

    pub fn exactness_profile(&self) -> Result<ExactnessProfile<T>> {
        let dual = self.canonical_dual()?;
        let diagonal: Vec<Complex<T>> = dual.vectors().zip(self.vectors()).map(|(d, g)| inner(d, g)).collect();
        let one = Complex::<T>::one();
        let tol = T::lit(T::CHECK_TOL);
        let classification = if diagonal.iter().all(|&d| (d - one).norm() <= tol) {
            Exactness::Exact
        } else {
            Exactness::Inexact
        };
        Ok(ExactnessProfile {
            diagonal,
            classification,
        })
    }

    /// Like [`Frame::exactness_profile`] but reports non-frames as a
    /// classification instead of an error.
    pub fn classify(&self) -> Result<Exactness> {
        match self.exactness_profile() {
            Ok(p) => Ok(p.classification),
            Err(Error::NotAFrame { .. }) => Ok(Exactness::NotAFrame),
            Err(e) => Err(e),
        }
    }

    /// Realizes a tight frame with bound 1 as the projection of an ONB of
    /// `C^K`. The completing columns come from Gram–Schmidt on the standard
    /// basis and are one choice among many.
    pub fn naimark_dilate(&self) -> Result<NaimarkDilation<T>> {
        let (k, n) = (self.len(), self.dim());
        if k <= n {
            return Err(Error::NotRedundant {
                frame_size: k,
                dimension: n,
            });
        }
        let deviation = self.frame_operator().as_matrix().identity_deviation();
        if deviation > T::lit(T::CHECK_TOL) {
            return Err(Error::NotTightUnit {
                deviation: deviation.to_f64_lossy(),
            });
        }
        let t = self.analysis_matrix();
        let mut basis: Vec<Vec<Complex<T>>> = (0..n).map(|j| t.column(j)).collect();
        let tol = T::lit(T::DEPENDENCE_TOL);
        for e in 0..k {
            if basis.len() == k {
                break;
            }
            let mut cand = vec![Complex::zero(); k];
            cand[e] = Complex::one();
            // two passes of modified Gram–Schmidt
            for _ in 0..2 {
                for b in &basis {
                    let proj = inner(&cand, b);
                    for (c, &bi) in cand.iter_mut().zip(b) {
                        *c = *c - proj * bi;
                    }
                }
            }
            let r = norm(&cand);
            if r > tol {
                let inv = r.recip();
                basis.push(cand.into_iter().map(|c| c.scale(inv)).collect());
            }
        }
        if basis.len() != k {
            return Err(Error::InvalidParams("orthonormal completion failed".into()));
        }
        Ok(NaimarkDilation {
            unitary: CMatrix::from_columns(&basis)?,
            subspace_dim: n,
        })
    }

    /// `{U g_k}` for unitary `U` (checked within `CHECK_TOL`).
    pub fn unitary_transform(&self, u: &CMatrix<T>) -> Result<Frame<T>> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "unitary must be N×N",
                expected: self.dim(),
                actual: u.rows().max(u.cols()),
            });
        }
        let deviation = (&u.adjoint() * u).identity_deviation();
        if deviation > T::lit(T::CHECK_TOL) {
            return Err(Error::NonUnitary {
                deviation: deviation.to_f64_lossy(),
            });
        }
        self.map_vectors(u)
    }

    /// Frame with vector `m` removed.
    pub fn without(&self, m: usize) -> Result<Frame<T>> {
        if m >= self.len() {
            return Err(Error::InvalidParams(format!("index {m} out of range for {} vectors", self.len())));
        }
        Frame::from_vector_rows(self.vectors.select_rows((0..self.len()).filter(|&k| k != m)))
    }

    /// Every vector multiplied by `s`.
    pub fn scaled(&self, s: T) -> Frame<T> {
        Frame {
            vectors: self.vectors.scale_real(s),
        }
    }

    pub fn norms(&self) -> Vec<T> {
        self.vectors().map(norm_sqr).map(T::sqrt).collect()
    }

    pub fn cast<U: Scalar>(&self) -> Frame<U> {
        Frame {
            vectors: self.vectors.cast(),
        }
    }

    /// `{A g_k}`.
    fn map_vectors(&self, a: &CMatrix<T>) -> Result<Frame<T>> {
        // rows g_k^T  ->  (A g_k)^T = g_k^T A^T
        let out = &self.vectors * &a.transpose();
        Frame::from_vector_rows(out)
    }

    fn check_signal(&self, f: &[Complex<T>]) -> Result<()> {
        if f.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "signal length vs frame dimension",
                expected: self.dim(),
                actual: f.len(),
            });
        }
        Ok(())
    }
}

fn bounds_from<T: Scalar>(e: &HermitianEigen<T>) -> FrameBounds<T> {
    // S is PSD; tiny negative eigenvalues are rounding.
    FrameBounds {
        lower: e.min().max(T::zero()),
        upper: e.max().max(T::zero()),
    }
}

/// `Σ_k c_k g̃_k` over the vectors of `dual`. With `coeffs = frame.analyze(f)`
/// and any dual of `frame`, this returns `f`.
pub fn reconstruct<T: Scalar>(frame: &Frame<T>, dual: &Frame<T>, coeffs: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    if frame.len() != dual.len() || frame.dim() != dual.dim() {
        return Err(Error::DimensionMismatch {
            context: "frame and dual must have the same shape",
            expected: frame.len() * frame.dim(),
            actual: dual.len() * dual.dim(),
        });
    }
    dual.synthesize(coeffs)
}

/// Cross Gram `G[j][k] = ⟨g_j, g̃_k⟩`; biorthonormal iff `G = I_K` within
/// `CHECK_TOL`.
pub fn check_biorthonormal<T: Scalar>(frame: &Frame<T>, dual: &Frame<T>) -> Result<Biorthonormality<T>> {
    if frame.len() != dual.len() || frame.dim() != dual.dim() {
        return Err(Error::DimensionMismatch {
            context: "frame and dual must have the same shape",
            expected: frame.len() * frame.dim(),
            actual: dual.len() * dual.dim(),
        });
    }
    let k = frame.len();
    let cross_gram = CMatrix::from_fn(k, k, |j, l| inner(frame.vector(j), dual.vector(l)));
    let holds = cross_gram.identity_deviation() <= T::lit(T::CHECK_TOL);
    Ok(Biorthonormality { holds, cross_gram })
}

/// `K·N` vectors `g_k[n] = e^{i2πkn/(KN)}`, a tight frame for `C^N` with bound `KN`.
pub fn harmonic_frame<T: Scalar>(n: usize, k: usize) -> Result<Frame<T>> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParams("harmonic frame needs N ≥ 1 and K ≥ 1".into()));
    }
    let size = k * n;
    let m = CMatrix::from_fn(size, n, |row, col| root_of_unity((row * col) as i64, size as i64));
    Frame::from_vector_rows(m)
}

/// Standard basis of `C^N`.
pub fn standard_basis<T: Scalar>(n: usize) -> Result<Frame<T>> {
    Frame::from_vector_rows(CMatrix::identity(n))
}

/// The three-vector tight frame `{[0,1], [-√3/2,-1/2], [√3/2,-1/2]}` for `R^2`, bound 3/2.
pub fn mercedes_benz<T: Scalar>() -> Frame<T> {
    let h = 3f64.sqrt() / 2.0;
    Frame::from_real(&[&[0.0, 1.0], &[-h, -0.5], &[h, -0.5]]).expect("static frame")
}

/// `{e_1, e_2/√2, e_2/√2, e_3/√3, e_3/√3, e_3/√3, …}` truncated to `C^N`:
/// basis vector `j` repeated `j` times with weight `1/√j`. Tight with bound 1.
pub fn weighted_repetition<T: Scalar>(n: usize) -> Result<Frame<T>> {
    let mut rows = Vec::new();
    for j in 1..=n {
        let w = T::lit(1.0 / (j as f64).sqrt());
        for _ in 0..j {
            let mut v = vec![Complex::zero(); n];
            v[j - 1] = Complex::new(w, T::zero());
            rows.push(v);
        }
    }
    Frame::new(rows)
}

/// Each standard basis vector listed `times` times; tight with bound `times`.
pub fn repeated_basis<T: Scalar>(n: usize, times: usize) -> Result<Frame<T>> {
    let mut rows = Vec::with_capacity(n * times);
    for j in 0..n {
        for _ in 0..times {
            let mut v = vec![Complex::zero(); n];
            v[j] = Complex::one();
            rows.push(v);
        }
    }
    Frame::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{complexify, max_abs_diff};

    type F = Frame<f64>;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    fn example3() -> F {
        Frame::from_real(&[&[1.0, 0.0], &[0.0, 1.0], &[1.0, -1.0]]).unwrap()
    }

    #[test]
    fn analyze_examples() {
        let id: F = standard_basis(2).unwrap();
        assert_eq!(id.analyze(&complexify(&[3.0, 4.0])).unwrap(), complexify::<f64>(&[3.0, 4.0]));

        let r = std::f64::consts::FRAC_1_SQRT_2;
        let b = F::from_real(&[&[1.0, 0.0], &[r, r]]).unwrap();
        let got = b.analyze(&complexify(&[1.0, 1.0])).unwrap();
        assert!(max_abs_diff(&got, &complexify(&[1.0, 2f64.sqrt()])) < 1e-15);

        let mb: F = mercedes_benz();
        let got = mb.analyze(&complexify(&[0.0, 1.0])).unwrap();
        assert!(max_abs_diff(&got, &complexify(&[1.0, -0.5, -0.5])) < 1e-15);

        assert!(matches!(mb.analyze(&complexify(&[1.0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn analyze_conjugates_frame_vectors() {
        let f = F::new(vec![vec![Complex::new(0.0, 1.0)]]).unwrap();
        // ⟨1, i⟩ = conj(i) = -i
        assert_eq!(f.analyze(&[c(1.0)]).unwrap(), vec![Complex::new(0.0, -1.0)]);
    }

    #[test]
    fn frame_operator_examples() {
        let s = mercedes_benz::<f64>().frame_operator();
        assert!(s.as_matrix().max_abs_diff(&CMatrix::identity(2).scale_real(1.5)) < 1e-15);
        let s = example3().frame_operator();
        let want = CMatrix::from_real_rows(&[&[2.0, -1.0], &[-1.0, 2.0]]).unwrap();
        assert!(s.as_matrix().max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn bounds_examples() {
        let b = example3().frame_bounds().unwrap();
        assert!((b.lower - 1.0).abs() < 1e-14 && (b.upper - 3.0).abs() < 1e-14);
        let b = repeated_basis::<f64>(4, 2).unwrap().frame_bounds().unwrap();
        assert!((b.lower - 2.0).abs() < 1e-14 && (b.upper - 2.0).abs() < 1e-14);
        assert!(b.is_tight(1e-12));
    }

    #[test]
    fn degenerate_families_are_data_not_frames() {
        let short = F::from_real(&[&[1.0, 0.0, 0.0]]).unwrap();
        let b = short.frame_bounds().unwrap();
        assert_eq!(b.lower, 0.0);
        assert!(!b.is_frame());
        assert!(matches!(short.canonical_dual(), Err(Error::NotAFrame { .. })));
        assert_eq!(short.classify().unwrap(), Exactness::NotAFrame);

        let with_zero = F::from_real(&[&[1.0, 0.0], &[0.0, 0.0], &[0.0, 2.0]]).unwrap();
        let b = with_zero.frame_bounds().unwrap();
        assert!((b.lower - 1.0).abs() < 1e-14 && (b.upper - 4.0).abs() < 1e-14);

        assert!(Frame::<f64>::new(vec![]).is_err());
        assert!(Frame::<f64>::new(vec![vec![Complex::new(f64::NAN, 0.0)]]).is_err());
    }

    #[test]
    fn canonical_dual_examples() {
        let d = example3().canonical_dual().unwrap();
        let want = F::from_real(&[&[2.0 / 3.0, 1.0 / 3.0], &[1.0 / 3.0, 2.0 / 3.0], &[1.0 / 3.0, -1.0 / 3.0]]).unwrap();
        assert!(d.vector_matrix().max_abs_diff(want.vector_matrix()) < 1e-14);

        let mb: F = mercedes_benz();
        let d = mb.canonical_dual().unwrap();
        assert!(d.vector_matrix().max_abs_diff(mb.scaled(2.0 / 3.0).vector_matrix()) < 1e-14);

        let onb: F = standard_basis(3).unwrap();
        assert!(onb.canonical_dual().unwrap().vector_matrix().max_abs_diff(onb.vector_matrix()) < 1e-15);
    }

    #[test]
    fn left_inverse_examples() {
        let f = example3();
        let zero = CMatrix::zeros(2, 3);
        let li = f.left_inverse(&zero).unwrap();
        assert!(li.matrix.max_abs_diff(&f.pseudo_inverse().unwrap()) < 1e-15);
        assert!(li.dual_frame().vector_matrix().max_abs_diff(f.canonical_dual().unwrap().vector_matrix()) < 1e-14);

        // alternative duals, as columns
        let alt = CMatrix::from_real_rows(&[&[2.0, -1.0, -1.0], &[0.0, 1.0, 0.0]]).unwrap();
        let li = f.left_inverse(&alt).unwrap();
        assert!(li.matrix.max_abs_diff(&alt) < 1e-14);
        assert!(li.residual(&f) < 1e-14);
        let trivial = CMatrix::from_real_rows(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]).unwrap();
        assert!(f.validate_left_inverse(&trivial, 1e-10).is_ok());
        let bogus = CMatrix::from_real_rows(&[&[1.0, 1.0, 0.0], &[0.0, 1.0, 0.0]]).unwrap();
        assert!(f.validate_left_inverse(&bogus, 1e-10).is_err());

        assert!(matches!(f.left_inverse(&CMatrix::zeros(3, 2)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn range_projection_examples() {
        let p = example3().range_projection().unwrap();
        let want = CMatrix::from_real_rows(&[&[2.0, 1.0, 1.0], &[1.0, 2.0, -1.0], &[1.0, -1.0, 2.0]])
            .unwrap()
            .scale_real(1.0 / 3.0);
        assert!(p.as_matrix().max_abs_diff(&want) < 1e-14);

        let sq = F::from_real(&[&[1.0, 2.0], &[0.5, -1.0]]).unwrap();
        assert!(sq.range_projection().unwrap().as_matrix().identity_deviation() < 1e-13);
    }

    #[test]
    fn reconstruct_examples() {
        let f = example3();
        let x = complexify(&[1.0, 2.0]);
        let coeffs = f.analyze(&x).unwrap();
        let dual = f.canonical_dual().unwrap();
        assert!(max_abs_diff(&reconstruct(&f, &dual, &coeffs).unwrap(), &x) < 1e-14);
        let alt = F::from_real(&[&[2.0, 0.0], &[-1.0, 1.0], &[-1.0, 0.0]]).unwrap();
        assert!(max_abs_diff(&reconstruct(&f, &alt, &coeffs).unwrap(), &x) < 1e-14);
        assert!(reconstruct(&f, &alt, &coeffs[..2]).is_err());
    }

    #[test]
    fn tighten_examples() {
        let mb: F = mercedes_benz();
        let t = mb.tighten().unwrap();
        assert!(t.vector_matrix().max_abs_diff(mb.scaled((2.0f64 / 3.0).sqrt()).vector_matrix()) < 1e-14);
        let t = example3().tighten().unwrap();
        assert!(t.frame_operator().as_matrix().identity_deviation() < 1e-10);
    }

    #[test]
    fn exactness_examples() {
        let p = example3().exactness_profile().unwrap();
        assert_eq!(p.classification, Exactness::Inexact);
        for d in &p.diagonal {
            assert!((d - c(2.0 / 3.0)).norm() < 1e-14);
        }
        let p = mercedes_benz::<f64>().exactness_profile().unwrap();
        assert_eq!(p.classification, Exactness::Inexact);
        let basis = F::from_real(&[&[1.0, 0.0], &[0.3, 2.0]]).unwrap();
        assert_eq!(basis.exactness_profile().unwrap().classification, Exactness::Exact);
    }

    #[test]
    fn biorthonormal_examples() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let b = F::from_real(&[&[1.0, 0.0], &[r, r]]).unwrap();
        let d = F::from_real(&[&[1.0, -1.0], &[0.0, 2f64.sqrt()]]).unwrap();
        assert!(check_biorthonormal(&b, &d).unwrap().holds);
        let f = example3();
        assert!(!check_biorthonormal(&f, &f.canonical_dual().unwrap()).unwrap().holds);
        assert!(check_biorthonormal(&f, &b).is_err());
    }

    #[test]
    fn harmonic_examples() {
        let h: F = harmonic_frame(2, 2).unwrap();
        assert_eq!(h.len(), 4);
        let b = h.frame_bounds().unwrap();
        assert!((b.lower - 4.0).abs() < 1e-13 && (b.upper - 4.0).abs() < 1e-13);
        let h: F = harmonic_frame(2, 1).unwrap();
        assert!(h.vector_matrix().max_abs_diff(&CMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, -1.0]]).unwrap()) < 1e-15);
        let h: F = harmonic_frame(1, 3).unwrap();
        assert!(h.vector_matrix().max_abs_diff(&CMatrix::from_real_rows(&[&[1.0], &[1.0], &[1.0]]).unwrap()) < 1e-15);
        assert!(harmonic_frame::<f64>(0, 1).is_err());
    }

    #[test]
    fn naimark_examples() {
        let f = mercedes_benz::<f64>().scaled((2.0f64 / 3.0).sqrt());
        let d = f.naimark_dilate().unwrap();
        assert!(d.unitarity_error() < 1e-10);
        for k in 0..3 {
            assert!(max_abs_diff(&d.projected(k), f.vector(k)) < 1e-10);
        }
        let onb: F = standard_basis(2).unwrap();
        assert!(matches!(onb.naimark_dilate(), Err(Error::NotRedundant { .. })));
        assert!(matches!(mercedes_benz::<f64>().naimark_dilate(), Err(Error::NotTightUnit { .. })));

        let h = harmonic_frame::<f64>(2, 2).unwrap().scaled(0.5);
        let d = h.naimark_dilate().unwrap();
        assert!(d.unitarity_error() < 1e-10);
        for k in 0..4 {
            assert!(max_abs_diff(&d.projected(k), h.vector(k)) < 1e-10);
        }
    }

    #[test]
    fn unitary_transform_examples() {
        let mb: F = mercedes_benz();
        assert_eq!(mb.unitary_transform(&CMatrix::identity(2)).unwrap(), mb);
        let a = 31f64.to_radians();
        let rot = CMatrix::from_real_rows(&[&[a.cos(), -a.sin()], &[a.sin(), a.cos()]]).unwrap();
        let b = mb.unitary_transform(&rot).unwrap().frame_bounds().unwrap();
        assert!((b.lower - 1.5).abs() < 1e-10 && (b.upper - 1.5).abs() < 1e-10);
        let swap = CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let b = example3().unitary_transform(&swap).unwrap().frame_bounds().unwrap();
        assert!((b.lower - 1.0).abs() < 1e-10 && (b.upper - 3.0).abs() < 1e-10);
        let shear = CMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(mb.unitary_transform(&shear), Err(Error::NonUnitary { .. })));
    }

    #[test]
    fn inexact_deletion_keeps_a_frame() {
        let f = example3();
        for m in 0..3 {
            assert!(f.without(m).unwrap().frame_bounds().unwrap().is_frame());
        }
        assert!(f.without(3).is_err());
    }

    #[test]
    fn single_precision_frame_ops() {
        let mb: Frame<f32> = mercedes_benz();
        let b = mb.frame_bounds().unwrap();
        assert!((b.lower - 1.5).abs() < 1e-5 && (b.upper - 1.5).abs() < 1e-5);
        let d = mb.canonical_dual().unwrap();
        assert!(d.vector_matrix().max_abs_diff(mb.scaled(2.0 / 3.0).vector_matrix()) < 1e-5);
    }
}
