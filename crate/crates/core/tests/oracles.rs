//! Reference values from independent oracles: exact rational arithmetic,
//! dense brute-force scans and explicit power-series expansion.

use circlemap::blaschke::{BlaschkeProduct, HomotopyPath, RationalCircleMap};
use circlemap::fourier::{default_support_tolerance, spectrum, support_profile, SampledCircleMap};
use circlemap::geometry::{antipodal_balance_point, StarlikeProfile};
use circlemap::poisson::{
    criterion_check, criterion_check_adaptive, degree2_boundary_expression, poisson_difference, poisson_kernel,
    semigroup_residual, Verdict,
};
use circlemap::{Complex64 as C, Real};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use std::f64::consts::{PI, TAU};

/// Exact complex number over the rationals.
#[derive(Clone, Debug, PartialEq)]
struct Q {
    re: BigRational,
    im: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Q {
    fn new(re: BigRational, im: BigRational) -> Self {
        Q { re, im }
    }
    fn real(r: BigRational) -> Self {
        Q::new(r, BigRational::zero())
    }
    fn one() -> Self {
        Q::real(BigRational::one())
    }
    fn sub(&self, o: &Q) -> Q {
        Q::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Q) -> Q {
        Q::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    fn conj(&self) -> Q {
        Q::new(self.re.clone(), -self.im.clone())
    }
    fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
    fn div(&self, o: &Q) -> Q {
        let d = o.norm_sqr();
        let n = self.mul(&o.conj());
        Q::new(n.re / &d, n.im / d)
    }
    fn to_c(&self) -> C {
        C::new(self.re.to_f64().unwrap(), self.im.to_f64().unwrap())
    }
}

fn exact_blaschke(zeros: &[Q], z: &Q) -> Q {
    zeros.iter().fold(Q::one(), |acc, a| {
        let factor = z.sub(a).div(&Q::one().sub(&a.conj().mul(z)));
        acc.mul(&factor)
    })
}

fn exact_kernel(z: &Q, zeta: &Q) -> BigRational {
    (BigRational::one() - z.norm_sqr()) / zeta.sub(z).norm_sqr()
}

fn product_of(zeros: &[Q]) -> BlaschkeProduct<f64> {
    BlaschkeProduct::new(0.0, zeros.iter().map(Q::to_c).collect()).unwrap()
}

/// Rational points on the unit circle from Pythagorean triples.
fn circle_points() -> Vec<Q> {
    [(3, 4, 5), (5, 12, 13), (8, 15, 17), (-7, 24, 25), (-20, -21, 29), (1, 0, 1), (-1, 0, 1)]
        .iter()
        .map(|&(a, b, c)| Q::new(rat(a, c), rat(b, c)))
        .collect()
}

fn sample_zeros() -> Vec<Q> {
    vec![
        Q::new(rat(1, 10), rat(0, 1)),
        Q::new(rat(-1, 4), rat(1, 3)),
        Q::new(rat(3, 8), rat(-1, 2)),
        Q::new(rat(0, 1), rat(-7, 10)),
    ]
}

#[test]
fn blaschke_values_match_exact_rational_arithmetic() {
    let zeros = sample_zeros();
    let b = product_of(&zeros);
    let mut points = circle_points();
    points.extend([Q::new(rat(1, 2), rat(1, 5)), Q::new(rat(-2, 3), rat(-1, 7)), Q::new(rat(3, 2), rat(1, 1))]);
    for p in &points {
        let exact = exact_blaschke(&zeros, p);
        let got = b.eval(p.to_c()).unwrap();
        let err = (got - exact.to_c()).norm() / exact.to_c().norm().max(1.0);
        assert!(err < 1e-14, "at {:?}: {got} vs {}", p.to_c(), exact.to_c());
    }
    // The oracle itself: exactly unimodular on rational circle points.
    for p in &circle_points() {
        assert_eq!(exact_blaschke(&zeros, p).norm_sqr(), BigRational::one());
    }
}

#[test]
fn quotient_example_at_one() {
    let num = vec![Q::real(rat(1, 10)), Q::real(rat(-1, 10))];
    let den = vec![Q::real(rat(1, 20))];
    let one = Q::one();
    let exact = exact_blaschke(&num, &one).div(&exact_blaschke(&den, &one));
    assert_eq!(exact, Q::one());
    let f = RationalCircleMap::new(product_of(&num), product_of(&den));
    assert!((f.eval(C::new(1.0, 0.0)).unwrap() - C::new(1.0, 0.0)).norm() < 1e-15);
    let minus = Q::real(rat(-1, 1));
    let exact = exact_blaschke(&num, &minus).div(&exact_blaschke(&den, &minus));
    assert!((f.eval(C::new(-1.0, 0.0)).unwrap() - exact.to_c()).norm() < 1e-15);
}

#[test]
fn kernel_difference_matches_exact_rational_sum() {
    let num = sample_zeros();
    let den = vec![Q::new(rat(1, 5), rat(1, 5)), Q::new(rat(-1, 2), rat(0, 1)), Q::new(rat(0, 1), rat(2, 5))];
    let f = RationalCircleMap::new(product_of(&num), product_of(&den));
    for zeta in &circle_points() {
        let exact: BigRational = num.iter().map(|z| exact_kernel(z, zeta)).sum::<BigRational>()
            - den.iter().map(|w| exact_kernel(w, zeta)).sum::<BigRational>();
        let got = poisson_difference(&f, zeta.to_c());
        assert!((got - exact.to_f64().unwrap()).abs() < 1e-13, "{got} vs {exact}");
    }
}

#[test]
fn kernel_at_scaled_point_is_five_thirds() {
    let exact = exact_kernel(&Q::real(rat(1, 4)), &Q::one());
    assert_eq!(exact, rat(5, 3));
    let direct = poisson_kernel(C::new(0.25, 0.0), C::new(1.0, 0.0)).unwrap();
    assert!((direct - 5.0 / 3.0).abs() < 1e-15);
    let r = semigroup_residual(C::new(0.5, 0.0), 0.5, C::new(1.0, 0.0), 2048).unwrap();
    assert!(r < 1e-12, "{r}");
}

/// Brute-force minimum of `θ ↦ D(e^{iθ})` on a dense grid using the kernel
/// written out in real arithmetic.
fn dense_minimum(num: &[(f64, f64)], den: &[(f64, f64)], nodes: usize) -> (f64, f64) {
    let kernel = |(x, y): (f64, f64), c: f64, s: f64| (1.0 - x * x - y * y) / ((c - x).powi(2) + (s - y).powi(2));
    (0..nodes)
        .map(|j| {
            let theta = TAU * j as f64 / nodes as f64;
            let (s, c) = theta.sin_cos();
            let d: f64 = num.iter().map(|&z| kernel(z, c, s)).sum::<f64>() - den.iter().map(|&w| kernel(w, c, s)).sum::<f64>();
            (d, theta)
        })
        .fold((f64::INFINITY, 0.0), |best, cur| if cur.0 < best.0 { cur } else { best })
}

#[test]
fn non_homeomorphism_minimum_matches_dense_scan() {
    // B(ζ)/ζ with a double zero at 1/2 has D(-1) = 2·(1/3) - 1.
    let (min, at) = dense_minimum(&[(0.5, 0.0), (0.5, 0.0)], &[(0.0, 0.0)], 1_000_000);
    assert!((min + 1.0 / 3.0).abs() < 1e-12);
    assert!((at - PI).abs() < 1e-5);
    let f = RationalCircleMap::first_kind(BlaschkeProduct::from_real_zeros(&[0.5, 0.5]).unwrap());
    let report = criterion_check(&f, 4096).unwrap();
    assert_eq!(report.verdict, Verdict::NotHomeo);
    assert!((report.grid_minimum - min).abs() < 1e-12);
    assert!((report.witness_angle - PI).abs() < 1e-3);
}

#[test]
fn degree2_interior_point_certifies_with_positive_margin() {
    let (a, b) = (0.3, -0.3);
    let (min, _) = dense_minimum(&[(a, 0.0), (b, 0.0)], &[(0.0, 0.0)], 1_000_000);
    let f = RationalCircleMap::first_kind(BlaschkeProduct::from_real_zeros(&[a, b]).unwrap());
    let report = criterion_check(&f, 1 << 16).unwrap();
    assert_eq!(report.verdict, Verdict::Homeo);
    assert!(report.margin_lower_bound >= 0.0);
    assert!(report.margin_lower_bound <= min);
    assert!((report.grid_minimum - min).abs() < 1e-6);
    // The closed-form expression at this point, 1 + ab - a² - b², exactly.
    let exact = BigRational::one() + rat(-3, 10) * rat(3, 10) - rat(3, 10) * rat(3, 10) - rat(3, 10) * rat(3, 10);
    assert!((degree2_boundary_expression(a, b) - exact.to_f64().unwrap()).abs() < 1e-15);
}

#[test]
fn aligned_pair_certifies() {
    // (1 - 0.2)/1.2 + (1 - 0.3)/1.3 ≥ 1, exactly.
    let lhs = rat(4, 5) / rat(6, 5) + rat(7, 10) / rat(13, 10);
    assert!(lhs >= BigRational::one());
    let f = RationalCircleMap::first_kind(BlaschkeProduct::from_real_zeros(&[0.2, 0.3]).unwrap());
    let report = criterion_check_adaptive(&f);
    assert_eq!(report.verdict, Verdict::Homeo);
    assert!(report.margin_lower_bound >= 0.0);
}

/// Taylor coefficients of `Π (z - a)/(1 - ā z)` up to `z^len`.
fn series_coefficients(zeros: &[C], len: usize) -> Vec<C> {
    let mut acc = vec![C::new(0.0, 0.0); len];
    acc[0] = C::new(1.0, 0.0);
    for &a in zeros {
        // (z - a) Σ (ā z)^k
        let mut factor = vec![C::new(0.0, 0.0); len];
        let mut power = C::new(1.0, 0.0);
        for k in 0..len {
            factor[k] -= a * power;
            if k + 1 < len {
                factor[k + 1] += power;
            }
            power *= a.conj();
        }
        let mut next = vec![C::new(0.0, 0.0); len];
        for i in 0..len {
            for j in 0..len - i {
                next[i + j] += acc[i] * factor[j];
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn spectrum_of_first_kind_quotient_matches_series_expansion() {
    let zeros = vec![C::new(0.2, 0.1), C::new(-0.15, 0.05), C::new(0.0, -0.25)];
    let b = BlaschkeProduct::new(0.0, zeros.clone()).unwrap();
    let f = RationalCircleMap::first_kind(b);
    let s = SampledCircleMap::sample_map(|z| f.eval(z), 1024).unwrap();
    let sp = spectrum(&s, 16).unwrap();
    let taylor = series_coefficients(&zeros, 40);
    for (n, c) in sp.iter() {
        // f = B/ζ², so f̂(n) is the Taylor coefficient of order n + 2.
        let k = n + 2;
        let expected = if k >= 0 { taylor[k as usize] } else { C::new(0.0, 0.0) };
        assert!((c - expected).norm() < 1e-13, "n = {n}: {c} vs {expected}");
    }
    let profile = support_profile(&sp, default_support_tolerance(&sp));
    assert_eq!(profile.min_active, Some(-2));
}

#[test]
fn balance_point_agrees_with_fine_scan() {
    let phase = |t: f64| t + 0.3 * t.sin() + 0.1 * (3.0 * t).cos() - 0.1;
    let profile = StarlikeProfile::new(|t: f64| 1.0 + 0.2 * t.cos(), phase, C::new(0.0, 0.0));
    assert!(profile.is_valid(4096));
    let psi = |t: f64| phase(t + PI) - phase(t) - PI;
    // Roots of ψ on [0, π) located by a fine scan.
    let nodes = 1_000_000;
    let roots: Vec<f64> = (0..nodes)
        .filter_map(|j| {
            let (t0, t1) = (PI * j as f64 / nodes as f64, PI * (j + 1) as f64 / nodes as f64);
            ((psi(t0) < 0.0) != (psi(t1) < 0.0)).then_some(t0)
        })
        .collect();
    assert!(!roots.is_empty());
    let theta = antipodal_balance_point(&profile, 1e-12).unwrap();
    assert!(psi(theta).abs() <= 1e-12);
    let nearest = roots.iter().map(|r| (r - theta).abs()).fold(f64::INFINITY, f64::min);
    assert!(nearest < 1e-5, "{theta} not near any of {roots:?}");
}

#[test]
fn homotopy_scales_zeros_linearly() {
    let num = BlaschkeProduct::new(0.4, vec![C::new(0.3, 0.2), C::new(-0.5, 0.1)]).unwrap();
    let den = BlaschkeProduct::new(-0.1, vec![C::new(0.1, -0.6)]).unwrap();
    let base = RationalCircleMap::new(num, den);
    let path = HomotopyPath::uniform(base.clone(), 11).unwrap();
    let samples = path.samples();
    assert_eq!(samples.len(), 11);
    for (k, g) in samples.iter().enumerate() {
        let t = k as f64 / 10.0;
        assert!((path.times()[k] - t).abs() < 1e-15);
        for (z, z0) in g.all_zeros().zip(base.all_zeros()) {
            assert!((z - z0 * t).norm() < 1e-15);
        }
        assert_eq!(g.numerator.sigma_angle(), base.numerator.sigma_angle());
    }
    assert_eq!(samples[10], base);
}

#[test]
fn scalar_literal_round_trip() {
    assert_eq!(<f64 as Real>::lit(0.1), 0.1);
    assert_eq!(<f32 as Real>::lit(0.1), 0.1f32);
}
