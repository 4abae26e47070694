//! Finite Blaschke products, their quotients, and the zero-scaling homotopy.
//!
//! A product is stored as a rotation angle and a multiset of zeros in the open
//! unit disk. Quotients `B1/B2` of two products are the rational maps that can
//! restrict to circle homeomorphisms; [`RationalCircleMap::first_kind`] and
//! [`RationalCircleMap::second_kind`] build the two one-sided families
//! `B(ζ)/ζ^(n-1)` and `ζ^(n+1)/B(ζ)`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{wrap_angle, Real};

/// Zeros must satisfy `|z| < 1 - DISK_MARGIN`.
pub const DISK_MARGIN: f64 = 1e-9;

/// `|1 - conj(z_k) z|` below this is reported as [`Error::PoleProximity`].
pub const POLE_EPSILON: f64 = 1e-12;

/// Inputs to [`RationalCircleMap::eval`] must satisfy `||ζ| - 1| <= CIRCLE_TOLERANCE`.
pub const CIRCLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct<T> {
    sigma_angle: T,
    zeros: Vec<Complex<T>>,
}

impl<T: Real> BlaschkeProduct<T> {
    /// Builds `e^{i sigma_angle} ∏ (z - z_k)/(1 - conj(z_k) z)`.
    ///
    /// The angle is reduced into `[0, 2π)`; zeros are kept in the given order
    /// and repetition encodes multiplicity.
    pub fn new(sigma_angle: T, zeros: Vec<Complex<T>>) -> Result<Self> {
        let limit = T::one() - T::lit(DISK_MARGIN);
        for (index, z) in zeros.iter().enumerate() {
            let modulus = z.norm();
            if !(modulus < limit) {
                return Err(Error::ZeroOutsideDisk {
                    index,
                    modulus: modulus.to_f64_lossy(),
                    margin: DISK_MARGIN,
                });
            }
        }
        Ok(Self {
            sigma_angle: wrap_angle(sigma_angle),
            zeros,
        })
    }

    /// Product with real zeros and `σ = 1`.
    pub fn from_real_zeros(zeros: &[T]) -> Result<Self> {
        Self::new(
            T::zero(),
            zeros.iter().map(|&r| Complex::new(r, T::zero())).collect(),
        )
    }

    /// `σ ζ^n`.
    pub fn monomial(sigma_angle: T, degree: usize) -> Self {
        Self {
            sigma_angle: wrap_angle(sigma_angle),
            zeros: vec![Complex::new(T::zero(), T::zero()); degree],
        }
    }

    /// The constant product `σ` (degree zero).
    pub fn constant(sigma_angle: T) -> Self {
        Self::monomial(sigma_angle, 0)
    }

    pub fn sigma_angle(&self) -> T {
        self.sigma_angle
    }

    pub fn sigma(&self) -> Complex<T> {
        Complex::from_polar(T::one(), self.sigma_angle)
    }

    pub fn zeros(&self) -> &[Complex<T>] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    /// Evaluates the product at `z`.
    pub fn eval(&self, z: Complex<T>) -> Result<Complex<T>> {
        let one = Complex::new(T::one(), T::zero());
        let pole_eps = T::lit(POLE_EPSILON);
        let mut acc = self.sigma();
        for (index, zk) in self.zeros.iter().enumerate() {
            let den = one - zk.conj() * z;
            let distance = den.norm();
            if distance < pole_eps {
                return Err(Error::PoleProximity {
                    index,
                    distance: distance.to_f64_lossy(),
                });
            }
            acc = acc * (z - zk) / den;
        }
        Ok(acc)
    }

    /// Pointwise product `self · other`: rotations add, zero lists concatenate.
    pub fn product(&self, other: &Self) -> Self {
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&other.zeros);
        Self {
            sigma_angle: wrap_angle(self.sigma_angle + other.sigma_angle),
            zeros,
        }
    }

    /// Replaces every zero `z_k` by `t z_k`.
    pub fn scale_zeros(&self, t: T) -> Result<Self> {
        check_unit_interval("t", t)?;
        Ok(Self {
            sigma_angle: self.sigma_angle,
            zeros: self.zeros.iter().map(|z| z * t).collect(),
        })
    }
}

fn check_unit_interval<T: Real>(name: &'static str, t: T) -> Result<()> {
    if t >= T::zero() && t <= T::one() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value: t.to_f64_lossy(),
            expected: "[0, 1]",
        })
    }
}

/// The quotient `ζ ↦ B1(ζ) / B2(ζ)` of two finite Blaschke products.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalCircleMap<T> {
    pub numerator: BlaschkeProduct<T>,
    pub denominator: BlaschkeProduct<T>,
}

impl<T: Real> RationalCircleMap<T> {
    pub fn new(numerator: BlaschkeProduct<T>, denominator: BlaschkeProduct<T>) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    /// `ζ ↦ ζ`.
    pub fn identity() -> Self {
        Self::new(
            BlaschkeProduct::monomial(T::zero(), 1),
            BlaschkeProduct::constant(T::zero()),
        )
    }

    /// `B(ζ) / ζ^(n-1)` for `B` of degree `n ≥ 1`.
    pub fn first_kind(b: BlaschkeProduct<T>) -> Self {
        let m = b.degree().saturating_sub(1);
        Self::new(b, BlaschkeProduct::monomial(T::zero(), m))
    }

    /// `ζ^(n+1) / B(ζ)` for `B` of degree `n`.
    pub fn second_kind(b: BlaschkeProduct<T>) -> Self {
        let n = b.degree();
        Self::new(BlaschkeProduct::monomial(T::zero(), n + 1), b)
    }

    /// `deg B1 - deg B2`; a homeomorphism requires this to be 1.
    pub fn degree_difference(&self) -> isize {
        self.numerator.degree() as isize - self.denominator.degree() as isize
    }

    /// Evaluates the quotient at a unimodular `ζ`, renormalized to modulus 1.
    pub fn eval(&self, zeta: Complex<T>) -> Result<Complex<T>> {
        let modulus = zeta.norm();
        if (modulus - T::one()).abs() > T::tol(CIRCLE_TOLERANCE) {
            return Err(Error::NotOnCircle {
                modulus: modulus.to_f64_lossy(),
            });
        }
        let q = self.numerator.eval(zeta)? / self.denominator.eval(zeta)?;
        Ok(q / q.norm())
    }

    /// Evaluates `B1(z)/B2(z)` anywhere off the poles, without renormalizing.
    pub fn eval_raw(&self, z: Complex<T>) -> Result<Complex<T>> {
        Ok(self.numerator.eval(z)? / self.denominator.eval(z)?)
    }

    /// Scales every zero of both products by `t ∈ [0, 1]`.
    pub fn scale_zeros(&self, t: T) -> Result<Self> {
        Ok(Self::new(
            self.numerator.scale_zeros(t)?,
            self.denominator.scale_zeros(t)?,
        ))
    }

    /// Every zero of both products, numerator first.
    pub fn all_zeros(&self) -> impl Iterator<Item = &Complex<T>> {
        self.numerator.zeros.iter().chain(self.denominator.zeros.iter())
    }
}

/// A sampled zero-scaling homotopy `t ↦ scale_zeros(base, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomotopyPath<T> {
    base: RationalCircleMap<T>,
    times: Vec<T>,
}

impl<T: Real> HomotopyPath<T> {
    pub fn new(base: RationalCircleMap<T>, times: Vec<T>) -> Result<Self> {
        let in_range = times.iter().all(|&t| t >= T::zero() && t <= T::one());
        let increasing = times.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return Err(Error::InvalidTimes);
        }
        Ok(Self { base, times })
    }

    /// `count` evenly spaced times from 0 to 1 inclusive.
    pub fn uniform(base: RationalCircleMap<T>, count: usize) -> Result<Self> {
        let times = match count {
            0 => Vec::new(),
            1 => vec![T::one()],
            _ => {
                let last = T::lit((count - 1) as f64);
                (0..count).map(|i| T::lit(i as f64) / last).collect()
            }
        };
        Self::new(base, times)
    }

    pub fn base(&self) -> &RationalCircleMap<T> {
        &self.base
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    /// One scaled map per time, in order.
    pub fn samples(&self) -> Vec<RationalCircleMap<T>> {
        self.times
            .iter()
            .map(|&t| {
                self.base
                    .scale_zeros(t)
                    .expect("times validated at construction")
            })
            .collect()
    }
}
