use maxmod_core::bounds::BoundId;
use maxmod_core::campaign::{run_campaign, CampaignConfig, Structure};
use maxmod_core::generators::{generate, ClassId, GeneratorConfig};
use maxmod_core::poly::Polynomial;
use maxmod_core::verify::{check_instance, BoundRequest, InstanceChecker, TolSpec, Verdict, ZeroEvidence};
use num_complex::Complex64;
use proptest::prelude::*;

/// `z⁶ − (a₁ + a₂)z³ + a₁a₂` with `a₁ = 0.729`, `a₂ = −0.729·e^{0.01i}`: all six
/// zeros on `|z| = 0.9`, gap 3, and `M(p, 1.05)` exceeds the lacunary bound.
fn gap_three_instance() -> (Polynomial, Vec<Complex64>) {
    let a1 = Complex64::new(0.729, 0.0);
    let a2 = -Complex64::from_polar(0.729, 0.01);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let p = Polynomial::new(vec![a1 * a2, zero, zero, -(a1 + a2), zero, zero, one]).unwrap();
    let zeros = [a1, a2]
        .iter()
        .flat_map(|a| {
            let (r, t) = a.to_polar();
            (0..3).map(move |k| Complex64::from_polar(r.cbrt(), (t + std::f64::consts::TAU * k as f64) / 3.0))
        })
        .collect();
    (p, zeros)
}

#[test]
fn lacunary_bound_fails_for_gap_three() {
    let (p, zeros) = gap_three_instance();
    let req = BoundRequest::new(BoundId::Nwaeze, 1.05).radius(0.9).lacunary(0, 3);
    let tol = TolSpec::default();
    let rec = check_instance(&p, &req, &tol).unwrap();
    assert_eq!(rec.verdict, Verdict::Fail, "{rec:?}");
    assert!(rec.audit.unwrap().confirmed);
    assert!(rec.ratio > 1.002 && rec.ratio < 1.003, "{}", rec.ratio);

    let mut checker = InstanceChecker::new(&p, 0, tol);
    let same = checker.check(&req, ZeroEvidence::Constructed(&zeros)).unwrap();
    assert_eq!(same.verdict, Verdict::Fail);
    assert_eq!(same.ratio, rec.ratio);

    // The same polynomial satisfies the gap-free bound.
    let da = check_instance(&p, &BoundRequest::new(BoundId::DewanAhuja, 1.05).radius(0.9), &tol).unwrap();
    assert_eq!(da.verdict, Verdict::Pass);
}

#[test]
fn derivative_bound_fails_for_gap_three() {
    let (p, _) = gap_three_instance();
    let mut checker = InstanceChecker::new(&p, 0, TolSpec::default());
    let rec = checker.check_derivative(0, 3, 0.9).unwrap();
    assert_eq!(rec.verdict, Verdict::Fail, "{rec:?}");
    assert!(rec.lhs > 6.02 && rec.rhs < 5.94, "{rec:?}");
    let gap_free = checker.check_derivative(0, 1, 0.9).unwrap();
    assert_eq!(gap_free.verdict, Verdict::Pass);
}

#[test]
fn equality_campaigns() {
    let structures: Vec<Structure> = (1..=16).map(|n| Structure { n, m: 0, gap: 1, k_radius: 1.0 }).collect();
    for (class_id, bound) in [(ClassId::ExtremalBernstein, BoundId::Bernstein), (ClassId::ExtremalAr, BoundId::DewanAhuja)] {
        let cfg = CampaignConfig {
            class_id,
            structures: structures.clone(),
            bounds: vec![bound],
            radii: vec![1.0, 1.5, 2.0, 4.0],
            powers: vec![1],
            trials: 32,
            seed: 3,
            tol: TolSpec::default(),
            check_derivative: false,
        };
        let report = run_campaign(&cfg).unwrap();
        assert!(report.passed());
        assert!(report.records.iter().all(|r| (r.ratio - 1.0).abs() <= 1e-9 && r.verdict == Verdict::Pass));
    }
}

fn instance(class_id: ClassId, n: usize, m: usize, gap: usize, k: f64, seed: u64) -> Polynomial {
    generate(&GeneratorConfig { class_id, n, m, gap, k_radius: k, seed }).unwrap().poly
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratios_are_scale_invariant(
        n in 1usize..10,
        k in 0.2..1.0f64,
        r in 1.0..4.0f64,
        s in 1u32..4,
        c in (-3.0..3.0f64, -3.0..3.0f64),
        seed in any::<u64>(),
    ) {
        let c = Complex64::new(c.0, c.1);
        prop_assume!(c.norm() > 1e-2);
        let p = instance(ClassId::ZerosOnCircle, n, 0, 1, k, seed);
        let q = p.scale(c).unwrap();
        let tol = TolSpec::default();
        let requests = [
            BoundRequest::new(BoundId::Bernstein, r),
            BoundRequest::new(BoundId::AnkenyRivlin, r),
            BoundRequest::new(BoundId::DewanAhuja, r).radius(k).power(s),
            BoundRequest::new(BoundId::Nwaeze, r).radius(k).power(s).lacunary(0, 1),
        ];
        for req in requests {
            let a = check_instance(&p, &req, &tol);
            let b = check_instance(&q, &req, &tol);
            match (a, b) {
                (Ok(a), Ok(b)) => prop_assert!((a.ratio - b.ratio).abs() <= 1e-9, "{:?} vs {:?}", a, b),
                // Bernstein and Ankeny–Rivlin need zeros on the unit circle; the class check
                // must agree on p and c·p.
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "hypothesis check disagrees: {:?} vs {:?}", a, b),
            }
        }
    }

    #[test]
    fn passing_records_are_conservative(
        n in 2usize..10,
        k in 0.3..1.0f64,
        r in 1.0..4.0f64,
        s in 1u32..4,
        seed in any::<u64>(),
    ) {
        let p = instance(ClassId::ZerosOnCircle, n, 0, 1, k, seed);
        let rec = check_instance(&p, &BoundRequest::new(BoundId::DewanAhuja, r).radius(k).power(s), &TolSpec::default()).unwrap();
        prop_assert_eq!(rec.verdict, Verdict::Pass);
        prop_assert!(rec.pass);
        prop_assert!(rec.lhs + rec.lhs_err <= rec.rhs * (1.0 + 1e-9));
        prop_assert!(rec.ratio <= 1.0 + 1e-9);
    }
}
