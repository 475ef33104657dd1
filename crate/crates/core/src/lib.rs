//! Finite-dimensional frame theory toolkit.
//!
//! * [`frame`]: frames in `C^N` (bounds, canonical and parametrized duals,
//!   tightening, Naimark dilation, exactness).
//! * [`gabor`]: discrete Weyl–Heisenberg systems and their dual prototypes.
//! * [`sampling`]: a periodic DFT model of oversampled A/D conversion with
//!   perfect-reconstruction filters and reconstruction-noise analysis.
//!
//! Numerics are generic over [`Scalar`] (`f64` and `f32`); the aliases below
//! fix the common double-precision instantiations.

pub mod eigen;
pub mod error;
pub mod frame;
pub mod gabor;
pub mod io;
pub mod matrix;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use eigen::{jacobi_eigen, HermitianEigen, HermitianMatrix};
pub use frame::{
    check_biorthonormal, harmonic_frame, mercedes_benz, reconstruct, Biorthonormality, Exactness, ExactnessProfile, Frame,
    FrameBounds, LeftInverse, NaimarkDilation,
};
pub use gabor::{build_gabor_frame, gabor_dual_prototype, verify_wh_structure, weyl_shift, GaborParams, Prototype};
pub use matrix::CMatrix;
pub use sampling::{BandlimitedSignal, MonteCarloConfig, NoiseExperiment, NoiseKind, ReconFilter, SamplingModel};

pub type C64 = num_complex::Complex<f64>;
pub type C32 = num_complex::Complex<f32>;

pub type Matrix64 = CMatrix<f64>;
pub type Matrix32 = CMatrix<f32>;
pub type Frame64 = Frame<f64>;
pub type Frame32 = Frame<f32>;
pub type FrameBounds64 = FrameBounds<f64>;
pub type HermitianMatrix64 = HermitianMatrix<f64>;
pub type LeftInverse64 = LeftInverse<f64>;
pub type NaimarkDilation64 = NaimarkDilation<f64>;
pub type ExactnessProfile64 = ExactnessProfile<f64>;
pub type Prototype64 = Prototype<f64>;
pub type Prototype32 = Prototype<f32>;
pub type ReconFilter64 = ReconFilter<f64>;
pub type ReconFilter32 = ReconFilter<f32>;
pub type BandlimitedSignal64 = BandlimitedSignal<f64>;
pub type NoiseExperiment64 = NoiseExperiment<f64>;
