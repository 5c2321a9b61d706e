use std::f64::consts::TAU;

use maxmod_core::circle::{default_tol, lipschitz_bound, max_modulus, min_modulus, CircleEstimate};
use maxmod_core::poly::Polynomial;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn complex(max: f64) -> impl Strategy<Value = Complex64> {
    (-max..max, -max..max).prop_map(|(re, im)| Complex64::new(re, im))
}

fn poly(max_n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(complex(3.0), 2..=max_n + 1).prop_filter_map("zero leading coefficient", |c| {
        Polynomial::new(c).ok()
    })
}

/// Plain uniform-grid extrema of `|p|` on `|z| = r`, with the grid's own Lipschitz slack.
struct Grid {
    max: f64,
    min: f64,
    slack: f64,
}

fn grid(p: &Polynomial, r: f64, points: usize) -> Grid {
    let mut max = f64::NEG_INFINITY;
    let mut min = f64::INFINITY;
    let mut rounding: f64 = 0.0;
    for k in 0..points {
        let z = Complex64::from_polar(r, TAU * k as f64 / points as f64);
        let v = p.evaluate(z).norm();
        rounding = rounding.max(p.horner_error_bound(z));
        max = max.max(v);
        min = min.min(v);
    }
    let half_step = 0.5 * TAU / points as f64;
    Grid { max, min, slack: lipschitz_bound(p, r) * half_step + rounding }
}

fn check_max(p: &Polynomial, r: f64, est: &CircleEstimate, g: &Grid) {
    let rounding = p.horner_error_bound(Complex64::new(r, 0.0));
    assert!(g.max <= est.upper() + rounding, "grid max {} above {est:?}", g.max);
    assert!(est.value <= g.max + g.slack, "{est:?} above grid max {} + {}", g.max, g.slack);
}

fn check_min(p: &Polynomial, r: f64, est: &CircleEstimate, g: &Grid) {
    let rounding = p.horner_error_bound(Complex64::new(r, 0.0));
    assert!(g.min + rounding >= est.lower(), "grid min {} below {est:?}", g.min);
    assert!(est.value + g.slack >= g.min, "{est:?} below grid min {} − {}", g.min, g.slack);
}

#[test]
fn enclosures_contain_grid_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let n = rng.gen_range(1..=10);
        let coeffs: Vec<_> = (0..=n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let p = Polynomial::new(coeffs).unwrap();
        let r = rng.gen_range(0.5..2.5);
        let tol = default_tol(&p, r);
        let g = grid(&p, r, 100_000);
        let hi = max_modulus(&p, r, tol).unwrap();
        let lo = min_modulus(&p, r, tol).unwrap();
        assert!(hi.err <= tol && lo.err <= tol);
        check_max(&p, r, &hi, &g);
        check_min(&p, r, &lo, &g);
    }
}

#[test]
fn clustered_roots_near_the_circle() {
    let roots: Vec<_> = (0..8).map(|k| Complex64::from_polar(1.0 + 1e-4 * k as f64, 1e-3 * k as f64)).collect();
    let p = Polynomial::from_roots(Complex64::new(1.0, 0.0), &roots).unwrap();
    let tol = default_tol(&p, 1.0);
    let g = grid(&p, 1.0, 200_000);
    check_max(&p, 1.0, &max_modulus(&p, 1.0, tol).unwrap(), &g);
    check_min(&p, 1.0, &min_modulus(&p, 1.0, tol).unwrap(), &g);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_by_powers_of_two_is_exact(p in poly(10), e in -8i32..8, r in 0.5..3.0f64) {
        let c = 2f64.powi(e);
        let tol = default_tol(&p, r);
        let base = max_modulus(&p, r, tol).unwrap();
        let scaled = max_modulus(&p.scale(Complex64::new(c, 0.0)).unwrap(), r, tol * c).unwrap();
        prop_assert!((scaled.value - c * base.value).abs() <= 4.0 * f64::EPSILON * c * base.value);
        prop_assert!((scaled.arg_theta - base.arg_theta).abs() <= 1e-6);
    }

    #[test]
    fn scaling_by_complex_constants(p in poly(10), c in complex(4.0), r in 0.5..3.0f64) {
        prop_assume!(c.norm() > 1e-3);
        let q = p.scale(c).unwrap();
        let base = max_modulus(&p, r, default_tol(&p, r)).unwrap();
        let scaled = max_modulus(&q, r, default_tol(&q, r)).unwrap();
        // Both values are attained by |q| up to evaluation rounding.
        let rounding = q.horner_error_bound(Complex64::new(r, 0.0)) + c.norm() * p.horner_error_bound(Complex64::new(r, 0.0));
        let diff = (scaled.value - c.norm() * base.value).abs();
        prop_assert!(diff <= 4.0 * f64::EPSILON * scaled.value + rounding + scaled.err + c.norm() * base.err);
    }

    #[test]
    fn rotation_leaves_extrema_unchanged(p in poly(10), phi in 0.0..TAU, r in 0.5..3.0f64) {
        let q = p.rotate(phi);
        let tol = default_tol(&p, r);
        let a = max_modulus(&p, r, tol).unwrap();
        let b = max_modulus(&q, r, tol).unwrap();
        prop_assert!((a.value - b.value).abs() <= a.err + b.err + 2.0 * q.horner_error_bound(Complex64::new(r, 0.0)));
        let a = min_modulus(&p, r, tol).unwrap();
        let b = min_modulus(&q, r, tol).unwrap();
        prop_assert!((a.value - b.value).abs() <= a.err + b.err + 2.0 * q.horner_error_bound(Complex64::new(r, 0.0)));
    }

    #[test]
    fn maximum_grows_with_radius(p in poly(10), r1 in 1.0..3.0f64, dr in 0.0..1.0f64) {
        let r2 = r1 + dr;
        let a = max_modulus(&p, r1, default_tol(&p, r1)).unwrap();
        let b = max_modulus(&p, r2, default_tol(&p, r2)).unwrap();
        prop_assert!(b.value + b.err >= a.value - a.err);
    }

    #[test]
    fn bernstein_cross_check(p in poly(10), r in 1.0..4.0f64) {
        let n = p.degree() as i32;
        let unit = max_modulus(&p, 1.0, default_tol(&p, 1.0)).unwrap();
        let outer = max_modulus(&p, r, default_tol(&p, r)).unwrap();
        prop_assert!(outer.value <= r.powi(n) * (unit.value + unit.err) + outer.err);
    }
}
