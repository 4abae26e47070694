//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating point scalar: `f32` or `f64`.
///
/// Tolerances throughout the crate are written as `f64` literals and lowered
/// with [`Real::lit`]; those that would fall below the type's resolution are
/// clamped with [`Real::tol`].
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Debug
    + Display
    + Default
    + Sum
    + Send
    + Sync
    + rustfft::FftNum
    + 'static
{
    /// Converts an `f64` constant into `Self`.
    fn lit(v: f64) -> Self;

    /// Widens to `f64` for reporting.
    fn to_f64_lossy(self) -> f64;

    /// Tolerance `v`, never finer than 16 ulps at 1.
    fn tol(v: f64) -> Self {
        Self::lit(v).max(Self::epsilon() * Self::lit(16.0))
    }

    fn two_pi() -> Self {
        Self::TAU()
    }
}

impl Real for f32 {
    #[inline]
    fn lit(v: f64) -> Self {
        v as f32
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        f64::from(self)
    }
}

impl Real for f64 {
    #[inline]
    fn lit(v: f64) -> Self {
        v
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle<T: Real>(theta: T) -> T {
    let tau = T::two_pi();
    let r = theta % tau;
    let r = if r < T::zero() { r + tau } else { r };
    // `r + tau` can round up to exactly tau for tiny negative inputs.
    if r >= tau {
        T::zero()
    } else {
        r
    }
}
