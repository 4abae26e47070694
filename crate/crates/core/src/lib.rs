//! Rational circle homeomorphisms and circle embeddings.
//!
//! The crate evaluates finite Blaschke products and their quotients, decides
//! with certified numerics whether a quotient restricts to a sense-preserving
//! circle homeomorphism, evaluates closed-form sufficient conditions on the
//! zeros, and analyses sampled circle maps through their Fourier coefficients,
//! harmonic extensions and argument functions.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar to `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod blaschke;
pub mod error;
pub mod fourier;
pub mod geometry;
pub mod io;
pub mod poisson;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Blaschke = blaschke::BlaschkeProduct<f64>;
pub type CircleMap = blaschke::RationalCircleMap<f64>;
pub type Homotopy = blaschke::HomotopyPath<f64>;
pub type Report = poisson::CriterionReport<f64>;
pub type Samples = fourier::SampledCircleMap<f64>;
pub type Spectrum = fourier::FourierSpectrum<f64>;
pub type Profile = geometry::StarlikeProfile<f64>;

pub type Blaschke32 = blaschke::BlaschkeProduct<f32>;
pub type CircleMap32 = blaschke::RationalCircleMap<f32>;
pub type Samples32 = fourier::SampledCircleMap<f32>;
