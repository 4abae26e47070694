//! Poisson kernel, the certified homeomorphism criterion for Blaschke
//! quotients, and closed-form conditions on the zeros.
//!
//! A quotient `B1/B2` with zeros `z_k` (numerator) and `w_k` (denominator) is a
//! sense-preserving circle homeomorphism iff `deg B1 - deg B2 = 1` and
//!
//! ```text
//! D(ζ) = Σ P(z_k, ζ) - Σ P(w_k, ζ) >= 0   for all |ζ| = 1.
//! ```
//!
//! `D` is the derivative of the argument of `B1/B2` along the circle. The
//! checker samples `D` on a uniform grid and turns the sampled minimum into a
//! certified lower bound for the true minimum using a bound on `|D''|`.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blaschke::RationalCircleMap;
use crate::error::{Error, Result};
use crate::scalar::{wrap_angle, Real};

/// Smallest grid accepted by [`criterion_check`].
pub const MIN_GRID: usize = 16;
/// Starting grid of [`criterion_check_adaptive`].
pub const DEFAULT_GRID: usize = 4096;
/// Largest grid [`criterion_check_adaptive`] will try.
pub const MAX_GRID: usize = 1 << 20;
/// A certified margin of at least `-EQUALITY_TOLERANCE` counts as `D >= 0`.
///
/// Configurations where `min D = 0` exactly (the equality cases of the
/// closed-form conditions) can only ever be certified up to a slack, so the
/// boundary itself is accepted within this width.
pub const EQUALITY_TOLERANCE: f64 = 1e-9;
/// Angular tolerance used by [`necessity_aligned_zeros`].
pub const ALIGNMENT_TOLERANCE: f64 = 1e-10;

/// Poisson kernel `P(z, ζ) = (1 - |z|²) / |ζ - z|²`.
pub fn poisson_kernel<T: Real>(z: Complex<T>, zeta: Complex<T>) -> Result<T> {
    let r = z.norm();
    if !(r < T::one()) {
        return Err(Error::Domain {
            modulus: r.to_f64_lossy(),
        });
    }
    Ok((T::one() - r) * (T::one() + r) / (zeta - z).norm_sqr())
}

/// `Σ P(z_k, ζ) - Σ P(w_k, ζ)` at a single point.
pub fn poisson_difference<T: Real>(f: &RationalCircleMap<T>, zeta: Complex<T>) -> T {
    let num: T = f
        .numerator
        .zeros()
        .iter()
        .map(|&z| kernel_unchecked(z, zeta))
        .sum();
    let den: T = f
        .denominator
        .zeros()
        .iter()
        .map(|&w| kernel_unchecked(w, zeta))
        .sum();
    num - den
}

#[inline]
fn kernel_unchecked<T: Real>(z: Complex<T>, zeta: Complex<T>) -> T {
    let r = z.norm();
    (T::one() - r) * (T::one() + r) / (zeta - z).norm_sqr()
}

/// Bound on `|∂²P(z, e^{iθ})/∂θ²|`, namely `2r(1+r)/(1-r)³`.
///
/// From `P = Σ r^|k| e^{ik(θ-α)}` the m-th derivative is bounded by
/// `2 Σ k^m r^k`; for m = 2 this sums to the expression above, which also
/// dominates the first-derivative bound `2r/(1-r)²`.
pub fn kernel_curvature_bound<T: Real>(r: T) -> T {
    let two = T::lit(2.0);
    let gap = T::one() - r;
    two * r * (T::one() + r) / (gap * gap * gap)
}

/// Precomputed `e^{2πij/N}` for a uniform grid on the circle.
#[derive(Debug, Clone)]
pub struct CircleGrid<T> {
    cos: Vec<T>,
    sin: Vec<T>,
}

impl<T: Real> CircleGrid<T> {
    pub fn new(size: usize) -> Self {
        let step = T::two_pi() / T::lit(size as f64);
        let (cos, sin) = (0..size)
            .map(|j| {
                let theta = step * T::lit(j as f64);
                (theta.cos(), theta.sin())
            })
            .unzip();
        Self { cos, sin }
    }

    pub fn len(&self) -> usize {
        self.cos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cos.is_empty()
    }

    pub fn angle(&self, j: usize) -> T {
        T::two_pi() * T::lit(j as f64) / T::lit(self.len() as f64)
    }

    pub fn point(&self, j: usize) -> Complex<T> {
        Complex::new(self.cos[j], self.sin[j])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Homeo,
    NotHomeo,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Homeo => "Homeo",
            Verdict::NotHomeo => "NotHomeo",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

/// Outcome of [`criterion_check`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport<T> {
    pub verdict: Verdict,
    /// Certified lower bound of `min D`; `-inf` when the degree condition fails.
    pub margin_lower_bound: T,
    /// Grid angle where the sampled `D` is smallest.
    pub witness_angle: T,
    pub grid_size: usize,
    /// `Σ 2r(1+r)/(1-r)³` over every zero of both products; bounds `|D'|` and `|D''|`.
    pub lipschitz_bound: T,
    /// Sampled minimum of `D`.
    pub grid_minimum: T,
}

/// Checks `D >= 0` on a grid of `grid_size` points and certifies the result.
///
/// On each grid cell of width `h`, `D >= min(endpoints) - K h²/8` with `K` the
/// curvature bound, and the sampled values carry a rounding allowance.
/// `NotHomeo` is reported only when some sampled value is negative beyond
/// rounding, which proves the inequality fails at that point.
pub fn criterion_check<T: Real>(
    f: &RationalCircleMap<T>,
    grid_size: usize,
) -> Result<CriterionReport<T>> {
    if grid_size < MIN_GRID {
        return Err(Error::InvalidParameter {
            name: "grid_size",
            value: grid_size as f64,
            expected: ">= 16",
        });
    }
    Ok(criterion_check_on(f, &CircleGrid::new(grid_size)))
}

/// [`criterion_check`] on a precomputed grid, for sweeps over many maps.
pub fn criterion_check_on<T: Real>(f: &RationalCircleMap<T>, grid: &CircleGrid<T>) -> CriterionReport<T> {
    let curvature: T = f.all_zeros().map(|z| kernel_curvature_bound(z.norm())).sum();
    let grid_size = grid.len();

    if f.degree_difference() != 1 {
        return CriterionReport {
            verdict: Verdict::NotHomeo,
            margin_lower_bound: T::neg_infinity(),
            witness_angle: T::zero(),
            grid_size,
            lipschitz_bound: curvature,
            grid_minimum: T::nan(),
        };
    }

    let (grid_minimum, argmin) = grid_minimum(f, grid);

    // Each kernel value carries a few ulps of relative error.
    let magnitude: T = f
        .all_zeros()
        .map(|z| {
            let r = z.norm();
            (T::one() + r) / (T::one() - r)
        })
        .sum();
    let rounding = T::lit(16.0) * T::epsilon() * (T::one() + magnitude);
    let h = T::two_pi() / T::lit(grid_size as f64);
    let slack = curvature * h * h / T::lit(8.0);
    let margin = grid_minimum - slack - rounding;

    let verdict = if grid_minimum < -rounding {
        Verdict::NotHomeo
    } else if margin >= -T::tol(EQUALITY_TOLERANCE) {
        Verdict::Homeo
    } else {
        Verdict::Inconclusive
    };

    CriterionReport {
        verdict,
        margin_lower_bound: margin,
        witness_angle: grid.angle(argmin),
        grid_size,
        lipschitz_bound: curvature,
        grid_minimum,
    }
}

/// Sampled minimum of `D` and the first index attaining it.
fn grid_minimum<T: Real>(f: &RationalCircleMap<T>, grid: &CircleGrid<T>) -> (T, usize) {
    struct Term<T> {
        re: T,
        im: T,
        weight: T,
    }
    let terms = |zs: &[Complex<T>]| -> Vec<Term<T>> {
        zs.iter()
            .map(|z| {
                let r = z.norm();
                Term {
                    re: z.re,
                    im: z.im,
                    weight: (T::one() - r) * (T::one() + r),
                }
            })
            .collect()
    };
    let num = terms(f.numerator.zeros());
    let den = terms(f.denominator.zeros());
    let sum = |ts: &[Term<T>], c: T, s: T| -> T {
        ts.iter()
            .map(|t| {
                let dx = c - t.re;
                let dy = s - t.im;
                t.weight / (dx * dx + dy * dy)
            })
            .sum()
    };

    (0..grid.len())
        .into_par_iter()
        .with_min_len(1 << 12)
        .map(|j| {
            let (c, s) = (grid.cos[j], grid.sin[j]);
            (sum(&num, c, s) - sum(&den, c, s), j)
        })
        .reduce(
            || (T::infinity(), usize::MAX),
            |a, b| {
                if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        )
}

/// Runs [`criterion_check`] from [`DEFAULT_GRID`], doubling the grid up to
/// [`MAX_GRID`] while the verdict stays `Inconclusive`.
pub fn criterion_check_adaptive<T: Real>(f: &RationalCircleMap<T>) -> CriterionReport<T> {
    let mut size = DEFAULT_GRID;
    loop {
        let report = criterion_check_on(f, &CircleGrid::new(size));
        if report.verdict != Verdict::Inconclusive || size >= MAX_GRID {
            return report;
        }
        size *= 2;
    }
}

/// Result of a closed-form sufficient condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCondition<T> {
    pub holds: bool,
    /// Left-hand side of the inequality.
    pub lhs: T,
}

/// `Σ (1-|z_k|)/(1+|z_k|) >= n - 1`; sufficient for `B(ζ)/ζ^(n-1)` to be a
/// circle homeomorphism.
pub fn first_kind_sufficient<T: Real>(zeros: &[Complex<T>]) -> ZeroCondition<T> {
    let lhs: T = zeros
        .iter()
        .map(|z| {
            let r = z.norm();
            (T::one() - r) / (T::one() + r)
        })
        .sum();
    let target = T::lit(zeros.len() as f64) - T::one();
    ZeroCondition {
        holds: lhs >= target,
        lhs,
    }
}

/// `Σ (1+|z_k|)/(1-|z_k|) <= n + 1`; sufficient for `ζ^(n+1)/B(ζ)` to be a
/// circle homeomorphism.
pub fn second_kind_sufficient<T: Real>(zeros: &[Complex<T>]) -> ZeroCondition<T> {
    let lhs: T = zeros
        .iter()
        .map(|z| {
            let r = z.norm();
            (T::one() + r) / (T::one() - r)
        })
        .sum();
    let target = T::lit(zeros.len() as f64) + T::one();
    ZeroCondition {
        holds: lhs <= target,
        lhs,
    }
}

/// Which one-sided family a zero condition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `B(ζ)/ζ^(n-1)`
    FirstKind,
    /// `ζ^(n+1)/B(ζ)`
    SecondKind,
}

/// For zeros sharing one argument the closed-form condition is also
/// necessary, so its truth decides homeomorphy exactly.
pub fn necessity_aligned_zeros<T: Real>(zeros: &[Complex<T>], family: Family) -> Result<bool> {
    let tol = T::tol(ALIGNMENT_TOLERANCE);
    let mut reference: Option<(usize, T)> = None;
    for (i, z) in zeros.iter().enumerate() {
        if z.norm() == T::zero() {
            continue;
        }
        let arg = z.arg();
        match reference {
            None => reference = Some((i, arg)),
            Some((first, arg0)) => {
                let d = wrap_angle(arg - arg0 + T::PI()) - T::PI();
                if d.abs() > tol {
                    return Err(Error::Alignment {
                        first,
                        second: i,
                        difference: d.abs().to_f64_lossy(),
                    });
                }
            }
        }
    }
    Ok(match family {
        Family::FirstKind => first_kind_sufficient(zeros).holds,
        Family::SecondKind => second_kind_sufficient(zeros).holds,
    })
}

/// Exact homeomorphism test for `B(ζ)/ζ` with real zeros `a, b ∈ (-1, 1)`.
pub fn degree2_real_characterization<T: Real>(a: T, b: T) -> bool {
    let ab = a * b;
    let zero = T::zero();
    let case_same_sign = ab >= zero && T::one() - a.abs() - b.abs() - T::lit(3.0) * ab >= zero;
    let case_opposite = ab <= zero && T::one() + ab - a * a - b * b >= zero;
    case_same_sign || case_opposite
}

/// The polynomial whose sign decides [`degree2_real_characterization`]:
/// `1 - |a| - |b| - 3ab` when `ab >= 0`, else `1 + ab - a² - b²`.
pub fn degree2_boundary_expression<T: Real>(a: T, b: T) -> T {
    let ab = a * b;
    if ab >= T::zero() {
        T::one() - a.abs() - b.abs() - T::lit(3.0) * ab
    } else {
        T::one() + ab - a * a - b * b
    }
}

/// Gradient of [`degree2_boundary_expression`] with respect to `(a, b)`.
pub fn degree2_boundary_gradient<T: Real>(a: T, b: T) -> (T, T) {
    let three = T::lit(3.0);
    let two = T::lit(2.0);
    if a * b >= T::zero() {
        (-a.signum() - three * b, -b.signum() - three * a)
    } else {
        (b - two * a, a - two * b)
    }
}

/// `Re` of the expanded numerator of `P(a,ζ) + P(b,ζ) - 1` as a quadratic in
/// `x = Re ζ`: `-4ab x² + 4ab(a+b) x + 1 - a² - b² - 3a²b²`.
pub fn degree2_quadratic<T: Real>(a: T, b: T, x: T) -> T {
    let ab = a * b;
    let four = T::lit(4.0);
    -four * ab * x * x + four * ab * (a + b) * x + T::one() - a * a - b * b - T::lit(3.0) * ab * ab
}

/// `|P(tz, ζ) - ∫ P(z, ξ) P(t, ζ/ξ) |dξ|/2π|` with the integral evaluated by
/// the trapezoidal rule on `quad_points` nodes.
pub fn semigroup_residual<T: Real>(
    z: Complex<T>,
    t: T,
    zeta: Complex<T>,
    quad_points: usize,
) -> Result<T> {
    if quad_points < 64 {
        return Err(Error::InvalidParameter {
            name: "quad_points",
            value: quad_points as f64,
            expected: ">= 64",
        });
    }
    if !(t >= T::zero() && t < T::one()) {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t.to_f64_lossy(),
            expected: "[0, 1)",
        });
    }
    let direct = poisson_kernel(z * t, zeta)?;
    let grid = CircleGrid::<T>::new(quad_points);
    let t_c = Complex::new(t, T::zero());
    let mut acc = T::zero();
    for j in 0..quad_points {
        let xi = grid.point(j);
        // ζ/ξ = ζ conj(ξ) on the circle.
        acc += poisson_kernel(z, xi)? * poisson_kernel(t_c, zeta * xi.conj())?;
    }
    let quad = acc / T::lit(quad_points as f64);
    Ok((direct - quad).abs())
}
