//! Fourier coefficients of sampled circle maps, one-sided support, and the
//! harmonic extension into the disk.

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Smallest accepted sample count.
pub const MIN_SAMPLES: usize = 64;

/// Relative threshold used by [`default_support_tolerance`].
pub const SUPPORT_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Values `f(e^{2πik/N})`, `k = 0..N`, with `N` a power of two `>= 64`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCircleMap<T> {
    values: Vec<Complex<T>>,
}

fn check_resolution(n: usize) -> Result<()> {
    if n >= MIN_SAMPLES && n.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::BadResolution(n))
    }
}

impl<T: Real> SampledCircleMap<T> {
    pub fn new(values: Vec<Complex<T>>) -> Result<Self> {
        check_resolution(values.len())?;
        Ok(Self { values })
    }

    /// Samples a fallible map on the `n`-point grid.
    pub fn sample_map<F>(f: F, n: usize) -> Result<Self>
    where
        F: Fn(Complex<T>) -> Result<Complex<T>>,
    {
        check_resolution(n)?;
        let values = (0..n)
            .map(|k| f(grid_point(k, n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { values })
    }

    /// Samples an infallible map on the `n`-point grid.
    pub fn from_fn<F>(f: F, n: usize) -> Result<Self>
    where
        F: Fn(Complex<T>) -> Complex<T>,
    {
        Self::sample_map(|z| Ok(f(z)), n)
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Parameter angle `2πk/N` of sample `k`.
    pub fn angle(&self, k: usize) -> T {
        grid_angle(k, self.len())
    }

    /// Samples of `θ ↦ f(e^{-iθ})`, which reverses orientation.
    pub fn reversed(&self) -> Self {
        let n = self.len();
        Self {
            values: (0..n).map(|k| self.values[(n - k) % n]).collect(),
        }
    }
}

pub(crate) fn grid_angle<T: Real>(k: usize, n: usize) -> T {
    T::two_pi() * T::lit(k as f64) / T::lit(n as f64)
}

pub(crate) fn grid_point<T: Real>(k: usize, n: usize) -> Complex<T> {
    Complex::from_polar(T::one(), grid_angle(k, n))
}

/// Coefficients `f̂(n)` for `|n| <= window`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSpectrum<T> {
    coefficients: Vec<Complex<T>>,
    window: usize,
    source_resolution: usize,
    tail_mass: T,
}

impl<T: Real> FourierSpectrum<T> {
    /// Builds a spectrum from explicit coefficients `f̂(-window..=window)`.
    pub fn from_coefficients(coefficients: Vec<Complex<T>>, source_resolution: usize) -> Result<Self> {
        if coefficients.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter {
                name: "coefficients",
                value: coefficients.len() as f64,
                expected: "odd length 2M+1",
            });
        }
        let window = coefficients.len() / 2;
        Ok(Self {
            coefficients,
            window,
            source_resolution,
            tail_mass: T::zero(),
        })
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn source_resolution(&self) -> usize {
        self.source_resolution
    }

    /// `Σ |f̂(n)|` over the discrete coefficients with `window < |n| <= N/2`.
    ///
    /// This bounds the truncation error of [`harmonic_extension`] up to
    /// aliasing, and is zero for trigonometric polynomials inside the window.
    pub fn tail_mass(&self) -> T {
        self.tail_mass
    }

    /// `f̂(n)`, or `None` outside the window.
    pub fn get(&self, n: i64) -> Option<Complex<T>> {
        let w = self.window as i64;
        if n.abs() > w {
            None
        } else {
            Some(self.coefficients[(n + w) as usize])
        }
    }

    /// `(n, f̂(n))` for `n = -window..=window`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex<T>)> + '_ {
        let w = self.window as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - w, c))
    }

    pub fn max_modulus(&self) -> T {
        self.coefficients
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), T::max)
    }
}

/// Trapezoidal-rule Fourier coefficients `f̂(n)`, `|n| <= window`.
///
/// Exact for trigonometric polynomials of degree below `N - window`.
pub fn spectrum<T: Real>(s: &SampledCircleMap<T>, window: usize) -> Result<FourierSpectrum<T>> {
    let n = s.len();
    if 2 * window + 1 > n {
        return Err(Error::WindowTooWide {
            window,
            needed: 2 * window + 1,
            available: n,
        });
    }
    let mut buffer = s.values.clone();
    FftPlanner::<T>::new().plan_fft_forward(n).process(&mut buffer);
    let scale = T::one() / T::lit(n as f64);
    for v in buffer.iter_mut() {
        *v *= scale;
    }

    let w = window as i64;
    let at = |k: i64| buffer[k.rem_euclid(n as i64) as usize];
    let coefficients = (-w..=w).map(at).collect();
    let half = (n / 2) as i64;
    let tail_mass = (-half + 1..=half)
        .filter(|k| k.abs() > w)
        .map(|k| at(k).norm())
        .sum();

    Ok(FourierSpectrum {
        coefficients,
        window,
        source_resolution: n,
        tail_mass,
    })
}

/// Smallest and largest indices with `|f̂(n)| > tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportProfile {
    pub min_active: Option<i64>,
    pub max_active: Option<i64>,
}

pub fn support_profile<T: Real>(sp: &FourierSpectrum<T>, tol: T) -> SupportProfile {
    let mut active = sp.iter().filter(|(_, c)| c.norm() > tol).map(|(n, _)| n);
    let min_active = active.next();
    let max_active = active.last().or(min_active);
    SupportProfile {
        min_active,
        max_active,
    }
}

/// `1e-9 · max |f̂(n)|` over the window.
pub fn default_support_tolerance<T: Real>(sp: &FourierSpectrum<T>) -> T {
    T::lit(SUPPORT_RELATIVE_TOLERANCE) * sp.max_modulus()
}

fn check_disk<T: Real>(z: Complex<T>) -> Result<()> {
    let r = z.norm();
    if r < T::one() {
        Ok(())
    } else {
        Err(Error::Domain {
            modulus: r.to_f64_lossy(),
        })
    }
}

/// Horner evaluation of `Σ_{k=0}^{m} c(k) x^k`.
fn horner<T: Real>(m: usize, x: Complex<T>, c: impl Fn(usize) -> Complex<T>) -> Complex<T> {
    (0..=m).rev().fold(Complex::new(T::zero(), T::zero()), |acc, k| acc * x + c(k))
}

/// `F(z) = Σ_{n>=0} f̂(n) zⁿ + Σ_{n>=1} f̂(-n) z̄ⁿ`, truncated to the window.
pub fn harmonic_extension<T: Real>(sp: &FourierSpectrum<T>, z: Complex<T>) -> Result<Complex<T>> {
    check_disk(z)?;
    let w = sp.window();
    let zero = Complex::new(T::zero(), T::zero());
    let analytic = horner(w, z, |k| sp.get(k as i64).unwrap_or(zero));
    let anti = horner(w, z.conj(), |k| {
        if k == 0 {
            zero
        } else {
            sp.get(-(k as i64)).unwrap_or(zero)
        }
    });
    Ok(analytic + anti)
}

/// Wirtinger derivatives `(F_z, F_z̄)` of the truncated harmonic extension.
pub fn wirtinger<T: Real>(sp: &FourierSpectrum<T>, z: Complex<T>) -> Result<(Complex<T>, Complex<T>)> {
    check_disk(z)?;
    let w = sp.window();
    let zero = Complex::new(T::zero(), T::zero());
    if w == 0 {
        return Ok((zero, zero));
    }
    let weight = |k: usize| T::lit((k + 1) as f64);
    let fz = horner(w - 1, z, |k| sp.get(k as i64 + 1).unwrap_or(zero) * weight(k));
    let fzbar = horner(w - 1, z.conj(), |k| {
        sp.get(-(k as i64 + 1)).unwrap_or(zero) * weight(k)
    });
    Ok((fz, fzbar))
}
