//! Geometric checks on sampled circle maps: argument monotonicity,
//! starlikeness, injectivity and winding, plus starlike test-curve generators.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fourier::{grid_angle, grid_point, SampledCircleMap};
use crate::scalar::Real;

/// Samples of a circle homeomorphism must be unimodular to this tolerance.
pub const UNIMODULAR_TOLERANCE: f64 = 1e-9;
/// Minimum distance between a proposed star center and the curve.
pub const CENTER_CLEARANCE: f64 = 1e-9;
/// Argument increments above `-MONOTONE_SLACK` count as non-decreasing.
pub const MONOTONE_SLACK: f64 = 1e-13;
/// `|h(ζ) - w0|` below this is treated as a pole of the Nevanlinna quotient.
pub const NEVANLINNA_POLE: f64 = 1e-12;
/// Default resolution of [`random_starlike_embedding`] samples.
pub const GENERATOR_SAMPLES: usize = 1024;

/// Principal argument increments of `v - center` between consecutive
/// samples, including the closing step from the last sample to the first.
pub fn argument_increments<T: Real>(values: &[Complex<T>], center: Complex<T>) -> Vec<T> {
    let n = values.len();
    (0..n)
        .map(|k| {
            let a = values[k] - center;
            let b = values[(k + 1) % n] - center;
            (b * a.conj()).arg()
        })
        .collect()
}

fn winding_from_increments<T: Real>(increments: &[T]) -> i64 {
    let total: T = increments.iter().copied().sum();
    (total / T::two_pi()).round().to_i64().unwrap_or(0)
}

/// True iff the lifted argument of unimodular samples is non-decreasing with
/// total increase 2π, i.e. the samples come from a sense-preserving circle
/// homeomorphism at this resolution.
pub fn argument_monotone<T: Real>(s: &SampledCircleMap<T>) -> Result<bool> {
    Ok(monotone_lift(s)?.0)
}

/// Verdict plus the largest increment magnitude (a resolution indicator).
fn monotone_lift<T: Real>(s: &SampledCircleMap<T>) -> Result<(bool, T)> {
    let tol = T::tol(UNIMODULAR_TOLERANCE);
    for (index, v) in s.values().iter().enumerate() {
        let modulus = v.norm();
        if (modulus - T::one()).abs() > tol {
            return Err(Error::NotUnimodular {
                index,
                modulus: modulus.to_f64_lossy(),
            });
        }
    }
    let origin = Complex::new(T::zero(), T::zero());
    let increments = argument_increments(s.values(), origin);
    let slack = T::tol(MONOTONE_SLACK);
    let nondecreasing = increments.iter().all(|&d| d >= -slack);
    let widest = increments.iter().fold(T::zero(), |m, d| m.max(d.abs()));
    Ok((nondecreasing && winding_from_increments(&increments) == 1, widest))
}

/// [`argument_monotone`] on a callback, doubling the sample count from
/// `start` until the lift is resolved (every step below π/2) and the verdict
/// repeats at two consecutive resolutions, or `max` is reached.
pub fn argument_monotone_adaptive<T, F>(f: F, start: usize, max: usize) -> Result<bool>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    let mut n = start;
    let mut previous = None;
    loop {
        let s = SampledCircleMap::sample_map(&f, n)?;
        let (verdict, widest) = monotone_lift(&s)?;
        let resolved = widest < T::FRAC_PI_2();
        if (resolved && previous == Some(verdict)) || n >= max {
            return Ok(verdict);
        }
        previous = resolved.then_some(verdict);
        n *= 2;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// Detailed outcome of [`starlike_analysis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarlikeAnalysis {
    pub starlike: bool,
    /// Direction of the argument, when it is monotone with winding ±1.
    pub direction: Option<Orientation>,
    /// Whether the argument is strictly monotone at sample resolution.
    pub strict: bool,
    pub winding: i64,
}

/// Tests whether `arg(f - w0)` is monotone (either direction) with total
/// change ±2π. Plateaus are allowed.
pub fn starlike_analysis<T: Real>(s: &SampledCircleMap<T>, w0: Complex<T>) -> Result<StarlikeAnalysis> {
    let clearance = T::tol(CENTER_CLEARANCE);
    for (index, v) in s.values().iter().enumerate() {
        let distance = (v - w0).norm();
        if distance <= clearance {
            return Err(Error::CenterOnCurve {
                index,
                distance: distance.to_f64_lossy(),
            });
        }
    }
    let increments = argument_increments(s.values(), w0);
    let winding = winding_from_increments(&increments);
    let slack = T::tol(MONOTONE_SLACK);
    let direction = if winding == 1 && increments.iter().all(|&d| d >= -slack) {
        Some(Orientation::CounterClockwise)
    } else if winding == -1 && increments.iter().all(|&d| d <= slack) {
        Some(Orientation::Clockwise)
    } else {
        None
    };
    let strict = direction.is_some() && increments.iter().all(|&d| d.abs() > slack);
    Ok(StarlikeAnalysis {
        starlike: direction.is_some(),
        direction,
        strict,
        winding,
    })
}

pub fn starlike_about<T: Real>(s: &SampledCircleMap<T>, w0: Complex<T>) -> Result<bool> {
    Ok(starlike_analysis(s, w0)?.starlike)
}

/// Searches for a point the sampled curve is star-shaped about.
///
/// Tries the area centroid of the sampled polygon first, then a 48×48 grid
/// over the bounding box ordered by distance to the centroid.
pub fn find_star_center<T: Real>(s: &SampledCircleMap<T>) -> Option<Complex<T>> {
    let values = s.values();
    let n = values.len();
    let mut area = T::zero();
    let mut cx = T::zero();
    let mut cy = T::zero();
    for k in 0..n {
        let p = values[k];
        let q = values[(k + 1) % n];
        let cross = p.re * q.im - q.re * p.im;
        area += cross;
        cx += (p.re + q.re) * cross;
        cy += (p.im + q.im) * cross;
    }
    let centroid = if area.abs() > T::epsilon() {
        let six_area = T::lit(3.0) * area;
        Complex::new(cx / six_area, cy / six_area)
    } else {
        values.iter().fold(Complex::new(T::zero(), T::zero()), |a, v| a + v) / T::lit(n as f64)
    };

    let passes = |w: Complex<T>| starlike_about(s, w).unwrap_or(false);
    if passes(centroid) {
        return Some(centroid);
    }

    let (mut lo, mut hi) = (values[0], values[0]);
    for v in values {
        lo = Complex::new(lo.re.min(v.re), lo.im.min(v.im));
        hi = Complex::new(hi.re.max(v.re), hi.im.max(v.im));
    }
    const SIDE: usize = 48;
    let mut candidates: Vec<Complex<T>> = (0..SIDE * SIDE)
        .map(|idx| {
            let fx = T::lit(((idx % SIDE) as f64 + 0.5) / SIDE as f64);
            let fy = T::lit(((idx / SIDE) as f64 + 0.5) / SIDE as f64);
            Complex::new(lo.re + (hi.re - lo.re) * fx, lo.im + (hi.im - lo.im) * fy)
        })
        .collect();
    candidates.sort_by(|a, b| {
        (a - centroid)
            .norm_sqr()
            .partial_cmp(&(b - centroid).norm_sqr())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    candidates.into_iter().find(|&w| passes(w))
}

/// Minimum of `Re(ζ h'(ζ) / (h(ζ) - w0))` over the grid and where it occurs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NevanlinnaProbe<T> {
    pub min_real_part: T,
    pub argmin_angle: T,
}

/// Nevanlinna starlikeness probe for a map analytic near the circle, given
/// as value and derivative callbacks. A nonnegative minimum indicates the
/// image is star-shaped about `w0` at grid resolution.
pub fn nevanlinna_residual<T, H, D>(h: H, dh: D, w0: Complex<T>, grid: usize) -> Result<NevanlinnaProbe<T>>
where
    T: Real,
    H: Fn(Complex<T>) -> Complex<T>,
    D: Fn(Complex<T>) -> Complex<T>,
{
    let pole = T::lit(NEVANLINNA_POLE);
    let mut best = NevanlinnaProbe {
        min_real_part: T::infinity(),
        argmin_angle: T::zero(),
    };
    for j in 0..grid {
        let zeta = grid_point::<T>(j, grid);
        let shifted = h(zeta) - w0;
        if shifted.norm() < pole {
            return Err(Error::PoleOnCircle {
                angle: grid_angle::<T>(j, grid).to_f64_lossy(),
                distance: shifted.norm().to_f64_lossy(),
            });
        }
        let value = (zeta * dh(zeta) / shifted).re;
        if value < best.min_real_part {
            best = NevanlinnaProbe {
                min_real_part: value,
                argmin_angle: grid_angle(j, grid),
            };
        }
    }
    Ok(best)
}

/// Max over the grid of
/// `|5/2 + 2cos θ - cos 2θ - cos(3θ)/2 - (5 - 2cos 2θ) cos²(θ/2)|`.
pub fn factorization_identity_residual<T: Real>(grid: usize) -> T {
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    (0..grid)
        .map(|j| {
            let theta: T = grid_angle(j, grid);
            let expanded = T::lit(2.5) + two * theta.cos() - (two * theta).cos() - half * (T::lit(3.0) * theta).cos();
            let c = (half * theta).cos();
            let factored = (T::lit(5.0) - two * (two * theta).cos()) * c * c;
            (expanded - factored).abs()
        })
        .fold(T::zero(), T::max)
}

type ScalarFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// Polar description `f(e^{iθ}) = center + R(θ) e^{iφ(θ)}` of a starlike
/// embedding. `phase` is a continuous lift on `[0, 2π]` with
/// `φ(2π) = φ(0) + 2π`.
#[derive(Clone)]
pub struct StarlikeProfile<T> {
    radius: ScalarFn<T>,
    phase: ScalarFn<T>,
    pub center: Complex<T>,
}

impl<T> fmt::Debug for StarlikeProfile<T>
where
    T: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StarlikeProfile")
            .field("center", &self.center)
            .finish_non_exhaustive()
    }
}

impl<T: Real> StarlikeProfile<T> {
    pub fn new<R, P>(radius: R, phase: P, center: Complex<T>) -> Self
    where
        R: Fn(T) -> T + Send + Sync + 'static,
        P: Fn(T) -> T + Send + Sync + 'static,
    {
        Self {
            radius: Arc::new(radius),
            phase: Arc::new(phase),
            center,
        }
    }

    pub fn radius(&self, theta: T) -> T {
        (self.radius)(theta)
    }

    pub fn phase(&self, theta: T) -> T {
        (self.phase)(theta)
    }

    pub fn value(&self, theta: T) -> Complex<T> {
        self.center + Complex::from_polar(self.radius(theta), self.phase(theta))
    }

    pub fn sample(&self, n: usize) -> Result<SampledCircleMap<T>> {
        SampledCircleMap::from_fn(|z| self.value(z.arg()), n)
    }

    /// Checks `R > 0`, `φ` non-decreasing and `φ(2π) - φ(0) = 2π` on a grid.
    pub fn is_valid(&self, grid: usize) -> bool {
        let tol = T::tol(1e-12);
        let angles: Vec<T> = (0..=grid).map(|j| grid_angle(j, grid)).collect();
        let positive = angles.iter().all(|&t| self.radius(t) > T::zero());
        let monotone = angles
            .windows(2)
            .all(|w| self.phase(w[1]) >= self.phase(w[0]) - tol);
        let total = self.phase(T::two_pi()) - self.phase(T::zero());
        positive && monotone && (total - T::two_pi()).abs() <= T::tol(1e-9)
    }
}

/// Grid used by [`antipodal_balance_point`] to bracket a root.
const BALANCE_SCAN: usize = 256;

/// Finds `θ0 ∈ [0, π)` with `|φ(θ0 + π) - φ(θ0) - π| <= tol`.
///
/// `ψ(θ) = φ(θ+π) - φ(θ) - π` satisfies `ψ(0) = -ψ(π)` for a valid profile,
/// so a sign change is bracketed on `[0, π]` and refined by bisection.
pub fn antipodal_balance_point<T: Real>(p: &StarlikeProfile<T>, tol: T) -> Result<T> {
    let pi = T::PI();
    let psi = |theta: T| p.phase(theta + pi) - p.phase(theta) - pi;
    let step = pi / T::lit(BALANCE_SCAN as f64);
    let nodes: Vec<(T, T)> = (0..=BALANCE_SCAN)
        .map(|j| {
            let theta = step * T::lit(j as f64);
            (theta, psi(theta))
        })
        .collect();

    if let Some(&(theta, _)) = nodes[..BALANCE_SCAN].iter().find(|(_, v)| v.abs() <= tol) {
        return Ok(theta);
    }
    let bracket = nodes
        .windows(2)
        .find(|w| (w[0].1 < T::zero()) != (w[1].1 < T::zero()))
        .ok_or(Error::NoSignChange)?;

    let (mut lo, mut flo) = bracket[0];
    let mut hi = bracket[1].0;
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if !(mid > lo && mid < hi) {
            break;
        }
        let fmid = psi(mid);
        if fmid.abs() <= tol {
            return Ok(mid);
        }
        if (fmid < T::zero()) == (flo < T::zero()) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    // Bracket collapsed without meeting tol: ψ jumps across zero.
    Err(Error::NoSignChange)
}

/// Numeric injectivity and orientation summary of a sampled closed curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddingReport<T> {
    pub injective: bool,
    pub sense_preserving: bool,
    pub winding_number_about_center: i64,
    /// Smallest distance between samples that are not cyclic neighbours.
    pub min_pairwise_gap: T,
}

/// Injectivity is judged on the closed polygon through the samples: it must
/// be simple (no two non-adjacent edges meet) with pairwise distinct
/// vertices. The winding number about `interior_point` comes from summed
/// argument increments.
pub fn embedding_report<T: Real>(s: &SampledCircleMap<T>, interior_point: Complex<T>) -> EmbeddingReport<T> {
    let values = s.values();
    let min_pairwise_gap = min_nonadjacent_gap(values);
    let simple = polygon_is_simple(values);
    let winding = if values.contains(&interior_point) {
        0
    } else {
        winding_from_increments(&argument_increments(values, interior_point))
    };
    EmbeddingReport {
        injective: simple && min_pairwise_gap > T::zero(),
        sense_preserving: winding == 1,
        winding_number_about_center: winding,
        min_pairwise_gap,
    }
}

fn cyclic_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

fn min_nonadjacent_gap<T: Real>(values: &[Complex<T>]) -> T {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].re.partial_cmp(&values[b].re).unwrap_or(std::cmp::Ordering::Equal));
    let mut best = T::infinity();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            let dx = values[j].re - values[i].re;
            if dx >= best {
                break;
            }
            if cyclic_distance(i, j, n) < 2 {
                continue;
            }
            best = best.min((values[j] - values[i]).norm());
        }
    }
    best
}

fn orient<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>) -> T {
    (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re)
}

fn within_box<T: Real>(a: Complex<T>, b: Complex<T>, p: Complex<T>) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

fn segments_meet<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> bool {
    let zero = T::zero();
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if ((o1 > zero && o2 < zero) || (o1 < zero && o2 > zero))
        && ((o3 > zero && o4 < zero) || (o3 < zero && o4 > zero))
    {
        return true;
    }
    (o1 == zero && within_box(a, b, c))
        || (o2 == zero && within_box(a, b, d))
        || (o3 == zero && within_box(c, d, a))
        || (o4 == zero && within_box(c, d, b))
}

fn polygon_is_simple<T: Real>(values: &[Complex<T>]) -> bool {
    let n = values.len();
    let edge = |k: usize| (values[k], values[(k + 1) % n]);
    let mut order: Vec<usize> = (0..n).collect();
    let left = |k: usize| {
        let (a, b) = edge(k);
        a.re.min(b.re)
    };
    order.sort_by(|&a, &b| left(a).partial_cmp(&left(b)).unwrap_or(std::cmp::Ordering::Equal));
    for (pos, &i) in order.iter().enumerate() {
        let (a, b) = edge(i);
        let right = a.re.max(b.re);
        for &j in &order[pos + 1..] {
            if left(j) > right {
                break;
            }
            if cyclic_distance(i, j, n) < 2 {
                continue;
            }
            let (c, d) = edge(j);
            if segments_meet(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Seeded starlike embedding `center + R(θ) e^{iφ(θ)}`.
///
/// `R = 1 + p(θ)` with `p` a trigonometric polynomial of degree
/// `radial_degree` and `Σ|coefficients| <= 0.9`, so `R >= 0.1`.
/// `φ = φ0 + θ + q(θ)` with `q` of degree `arg_degree` and
/// `Σ k(|c_k| + |d_k|) <= 0.95`, so `φ' >= 0.05`. With both degrees zero the
/// curve is a unit circle about `center`. Returns samples at
/// [`GENERATOR_SAMPLES`] points together with the profile.
pub fn random_starlike_embedding<T: Real>(
    seed: u64,
    radial_degree: usize,
    arg_degree: usize,
) -> (SampledCircleMap<T>, StarlikeProfile<T>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radial = random_trig(&mut rng, radial_degree, 0.9, false);
    let angular = random_trig(&mut rng, arg_degree, 0.95, true);
    let offset: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let center = Complex::new(T::lit(rng.gen_range(-2.0..2.0)), T::lit(rng.gen_range(-2.0..2.0)));

    let radius = move |theta: T| T::one() + eval_trig(&radial, theta);
    let phase = move |theta: T| T::lit(offset) + theta + eval_trig(&angular, theta);
    let profile = StarlikeProfile::new(radius, phase, center);
    let samples = profile
        .sample(GENERATOR_SAMPLES)
        .expect("generator resolution is a valid power of two");
    (samples, profile)
}

/// Coefficients `(cos_k, sin_k)` for `k = 1..=degree`, scaled so that
/// `Σ w_k (|cos_k| + |sin_k|)` equals a random fraction of `budget`, with
/// `w_k = k` when `weighted` and 1 otherwise.
fn random_trig<T: Real>(rng: &mut ChaCha8Rng, degree: usize, budget: f64, weighted: bool) -> Vec<(T, T)> {
    let raw: Vec<(f64, f64)> = (0..degree)
        .map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let total: f64 = raw
        .iter()
        .enumerate()
        .map(|(i, (c, s))| if weighted { (i + 1) as f64 } else { 1.0 } * (c.abs() + s.abs()))
        .sum();
    if total == 0.0 {
        return Vec::new();
    }
    let target = rng.gen_range(0.1..1.0) * budget;
    raw.into_iter()
        .map(|(c, s)| (T::lit(c * target / total), T::lit(s * target / total)))
        .collect()
}

fn eval_trig<T: Real>(coefficients: &[(T, T)], theta: T) -> T {
    coefficients
        .iter()
        .enumerate()
        .map(|(i, &(c, s))| {
            let k = T::lit((i + 1) as f64) * theta;
            c * k.cos() + s * k.sin()
        })
        .sum()
}
