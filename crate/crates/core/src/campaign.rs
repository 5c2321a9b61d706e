//! Seeded verification campaigns over generated instances.
//!
//! Instance `i` draws everything from `derive_seed(seed, i)`, so instances can be
//! evaluated in any order (or in parallel) and folded back by index into the
//! same report.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::BoundId;
use crate::error::{class, domain, Error, Result};
use crate::generators::{derive_seed, generate, ClassId, GeneratorConfig};
use crate::verify::{BoundRequest, DerivativeRecord, InstanceChecker, TolSpec, Verdict, VerificationRecord, ZeroEvidence};

/// One admissible instance shape: degree, origin multiplicity, gap, radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Structure {
    pub n: usize,
    pub m: usize,
    pub gap: usize,
    pub k_radius: f64,
}

impl Structure {
    /// Every `(n, m, d, K)` with `n ≤ n_max`, `d | n − m` and `K` from `radii`.
    ///
    /// With `include_boundary = false` the corner `d = n − m` is left out.
    pub fn lacunary_grid(n_max: usize, radii: &[f64], include_boundary: bool) -> Vec<Structure> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for m in 0..n {
                let top = n - m;
                for d in (1..=top).filter(|d| top % d == 0) {
                    if d == top && !include_boundary {
                        continue;
                    }
                    for &k_radius in radii {
                        out.push(Structure { n, m, gap: d, k_radius });
                    }
                }
            }
        }
        out
    }

    /// Degrees `1..=n_max` with `m = 0`, gap 1 and `K` from `radii`.
    pub fn circle_grid(n_max: usize, radii: &[f64]) -> Vec<Structure> {
        (1..=n_max)
            .flat_map(|n| radii.iter().map(move |&k_radius| Structure { n, m: 0, gap: 1, k_radius }))
            .collect()
    }

    /// Every `(n, t)` with `t | n`, `n ≤ n_max`, and `K ≥ 1` from `radii`.
    pub fn zero_free_grid(n_max: usize, radii: &[f64]) -> Vec<Structure> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for t in (1..=n).filter(|t| n % t == 0) {
                for &k_radius in radii {
                    out.push(Structure { n, m: 0, gap: t, k_radius });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CampaignConfig {
    pub class_id: ClassId,
    /// Shapes to draw from; instance `i` picks one uniformly from its own seed.
    pub structures: Vec<Structure>,
    pub bounds: Vec<BoundId>,
    pub radii: Vec<f64>,
    pub powers: Vec<u32>,
    pub trials: usize,
    pub seed: u64,
    pub tol: TolSpec,
    /// Also run the derivative-bound check (lacunary and circle classes).
    pub check_derivative: bool,
}

impl CampaignConfig {
    fn validate(&self) -> Result<()> {
        if self.trials > 0 {
            if self.structures.is_empty() {
                return Err(domain!("campaign needs at least one structure"));
            }
            if self.bounds.is_empty() || self.radii.is_empty() || self.powers.is_empty() {
                return Err(domain!("campaign grid is empty"));
            }
        }
        Ok(())
    }

    /// Generator configuration of instance `index`.
    pub fn instance_config(&self, index: usize) -> GeneratorConfig {
        let seed = derive_seed(self.seed, index as u64);
        let pick = if self.structures.len() == 1 {
            0
        } else {
            ChaCha8Rng::seed_from_u64(seed ^ 0x5354_5255_4354_5552).gen_range(0..self.structures.len())
        };
        let s = self.structures[pick];
        GeneratorConfig {
            class_id: self.class_id,
            n: s.n,
            m: s.m,
            gap: s.gap,
            k_radius: s.k_radius,
            seed,
        }
    }
}

fn request_for(bound: BoundId, cfg: &GeneratorConfig, r: f64, s: u32) -> BoundRequest {
    let base = BoundRequest::new(bound, r).power(s);
    match bound {
        BoundId::Bernstein | BoundId::AnkenyRivlin => base,
        BoundId::DewanAhuja => base.radius(cfg.k_radius),
        BoundId::Nwaeze => {
            let mu = match cfg.class_id {
                ClassId::LacunaryOnCircle => cfg.gap,
                _ => 1,
            };
            base.radius(cfg.k_radius).lacunary(cfg.m, mu)
        }
        BoundId::Ggm => base.radius(cfg.k_radius).gap_index(cfg.gap),
    }
}

/// Records produced by one instance.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InstanceOutcome {
    pub index: usize,
    pub config: GeneratorConfig,
    pub coeffs: Vec<[f64; 2]>,
    pub records: Vec<VerificationRecord>,
    pub derivative: Option<DerivativeRecord>,
    pub samples_used: u64,
}

/// Generates and checks instance `index`. Class errors carry the offending coefficients.
pub fn run_instance(config: &CampaignConfig, index: usize) -> Result<InstanceOutcome> {
    let gen_cfg = config.instance_config(index);
    let instance = generate(&gen_cfg).map_err(|e| class!("instance {index} ({gen_cfg:?}): {e}"))?;
    let coeffs: Vec<[f64; 2]> = instance.poly.coeffs().iter().map(|c| [c.re, c.im]).collect();
    let wrap = |e: Error| match e {
        Error::Class(msg) => class!("instance {index} seed {:#x}: {msg}; coefficients {coeffs:?}", gen_cfg.seed),
        other => other,
    };
    let cfg = &instance.config;
    let mut checker = InstanceChecker::new(&instance.poly, instance.poly.fingerprint(), config.tol);
    let mut records = Vec::with_capacity(config.bounds.len() * config.radii.len() * config.powers.len());
    for &bound in &config.bounds {
        for &r in &config.radii {
            for &s in &config.powers {
                let req = request_for(bound, cfg, r, s);
                records.push(checker.check(&req, ZeroEvidence::Constructed(&instance.zeros)).map_err(wrap)?);
            }
        }
    }
    let derivative = if config.check_derivative {
        let mu = if cfg.class_id == ClassId::LacunaryOnCircle { cfg.gap } else { 1 };
        Some(checker.check_derivative(cfg.m, mu, cfg.k_radius).map_err(wrap)?)
    } else {
        None
    };
    Ok(InstanceOutcome {
        index,
        config: *cfg,
        coeffs,
        records,
        derivative,
        samples_used: checker.samples_used(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tightness {
    pub bound_id: BoundId,
    pub max_ratio: f64,
    pub mean_ratio: f64,
    /// `(instance index, record index within the instance)` of the largest ratio.
    pub argmax: (usize, usize),
    pub records: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub trials: usize,
    pub records: Vec<VerificationRecord>,
    pub failures: Vec<VerificationRecord>,
    pub inconclusive: Vec<VerificationRecord>,
    pub derivative_records: Vec<DerivativeRecord>,
    pub derivative_failures: Vec<DerivativeRecord>,
    pub tightness: Vec<Tightness>,
    pub samples_used: u64,
    /// Wall-clock time, filled in by callers that have a clock.
    pub runtime_ms: Option<f64>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.derivative_failures.is_empty()
    }
}

/// Folds outcomes in index order into a report.
pub fn fold_report(config: &CampaignConfig, mut outcomes: Vec<InstanceOutcome>) -> CampaignReport {
    outcomes.sort_by_key(|o| o.index);
    let mut report = CampaignReport {
        config: config.clone(),
        trials: outcomes.len(),
        records: Vec::new(),
        failures: Vec::new(),
        inconclusive: Vec::new(),
        derivative_records: Vec::new(),
        derivative_failures: Vec::new(),
        tightness: Vec::new(),
        samples_used: 0,
        runtime_ms: None,
    };
    for bound_id in config.bounds.iter().copied() {
        let mut acc: Option<Tightness> = None;
        let mut sum = 0.0;
        for o in &outcomes {
            for (j, rec) in o.records.iter().enumerate().filter(|(_, r)| r.bound_id == bound_id) {
                sum += rec.ratio;
                let t = acc.get_or_insert(Tightness {
                    bound_id,
                    max_ratio: f64::NEG_INFINITY,
                    mean_ratio: 0.0,
                    argmax: (o.index, j),
                    records: 0,
                });
                t.records += 1;
                if rec.ratio > t.max_ratio {
                    t.max_ratio = rec.ratio;
                    t.argmax = (o.index, j);
                }
            }
        }
        if let Some(mut t) = acc {
            t.mean_ratio = sum / t.records as f64;
            report.tightness.push(t);
        }
    }
    for o in outcomes {
        report.samples_used += o.samples_used;
        for rec in o.records {
            match rec.verdict {
                Verdict::Fail => report.failures.push(rec.clone()),
                Verdict::Inconclusive => report.inconclusive.push(rec.clone()),
                Verdict::Pass => {}
            }
            report.records.push(rec);
        }
        if let Some(d) = o.derivative {
            if d.verdict == Verdict::Fail {
                report.derivative_failures.push(d.clone());
            }
            report.derivative_records.push(d);
        }
    }
    report
}

/// Runs every instance sequentially.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let outcomes = (0..config.trials)
        .map(|i| run_instance(config, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(fold_report(config, outcomes))
}

/// Checks a campaign configuration without running it.
pub fn validate(config: &CampaignConfig) -> Result<()> {
    config.validate()
}

/// Short summary line for a tightness entry.
pub fn tightness_line(t: &Tightness) -> alloc::string::String {
    format!(
        "{}: {} records, max ratio {:.6} (instance {}), mean ratio {:.6}",
        t.bound_id,
        t.records,
        t.max_ratio,
        t.argmax.0,
        t.mean_ratio.abs()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(class_id: ClassId, structures: Vec<Structure>, bounds: Vec<BoundId>) -> CampaignConfig {
        CampaignConfig {
            class_id,
            structures,
            bounds,
            radii: alloc::vec![1.5, 2.0],
            powers: alloc::vec![1, 2],
            trials: 6,
            seed: 0x5EED,
            tol: TolSpec::default(),
            check_derivative: false,
        }
    }

    #[test]
    fn empty_campaign_passes() {
        let mut cfg = config(ClassId::ZerosOnCircle, Vec::new(), Vec::new());
        cfg.trials = 0;
        let report = run_campaign(&cfg).unwrap();
        assert!(report.passed());
        assert_eq!(report.trials, 0);
        assert!(report.records.is_empty());
    }

    #[test]
    fn extremal_ar_ratios_are_one() {
        let cfg = config(
            ClassId::ExtremalAr,
            (1..=6).map(|n| Structure { n, m: 0, gap: 1, k_radius: 1.0 }).collect(),
            alloc::vec![BoundId::DewanAhuja],
        );
        let cfg = CampaignConfig { powers: alloc::vec![1], ..cfg };
        let report = run_campaign(&cfg).unwrap();
        assert!(report.passed());
        for rec in &report.records {
            assert!((rec.ratio - 1.0).abs() < 1e-9, "{rec:?}");
        }
    }

    #[test]
    fn campaign_is_deterministic_and_order_free() {
        let cfg = config(
            ClassId::LacunaryOnCircle,
            Structure::lacunary_grid(6, &[0.5, 0.8], false),
            alloc::vec![BoundId::Nwaeze, BoundId::DewanAhuja],
        );
        let cfg = CampaignConfig {
            structures: cfg.structures.into_iter().filter(|s| s.m == 0).collect(),
            check_derivative: true,
            ..cfg
        };
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a, b);
        let reversed: Vec<_> = (0..cfg.trials).rev().map(|i| run_instance(&cfg, i).unwrap()).collect();
        assert_eq!(fold_report(&cfg, reversed), a);
        assert_eq!(a.tightness.len(), 2);
    }

    #[test]
    fn lacunary_grid_excludes_boundary() {
        let grid = Structure::lacunary_grid(4, &[0.5], false);
        assert!(grid.iter().all(|s| s.gap < s.n - s.m));
        assert!(grid.contains(&Structure { n: 4, m: 0, gap: 2, k_radius: 0.5 }));
        let with = Structure::lacunary_grid(4, &[0.5], true);
        assert!(with.contains(&Structure { n: 2, m: 0, gap: 2, k_radius: 0.5 }));
    }

    #[test]
    fn mismatched_class_aborts_with_coefficients() {
        // Zero-free-disk polynomials do not have their zeros on a circle.
        let cfg = config(
            ClassId::NoZerosInDisk,
            alloc::vec![Structure { n: 4, m: 0, gap: 1, k_radius: 1.0 }],
            alloc::vec![BoundId::DewanAhuja],
        );
        match run_campaign(&cfg) {
            Err(Error::Class(msg)) => assert!(msg.contains("coefficients"), "{msg}"),
            other => panic!("expected class error, got {other:?}"),
        }
    }
}
