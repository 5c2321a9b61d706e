//! Parallel campaigns. Instances run on the rayon pool and are folded in index
//! order, so the report equals the sequential one.

use std::time::Instant;

use maxmod_core::campaign::{fold_report, run_instance, validate, CampaignConfig, CampaignReport};
use maxmod_core::Result;
use rayon::prelude::*;

pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    validate(config)?;
    let start = Instant::now();
    let results: Vec<_> = (0..config.trials).into_par_iter().map(|i| run_instance(config, i)).collect();
    // The first error by index, not by completion time.
    let outcomes = results.into_iter().collect::<Result<Vec<_>>>()?;
    let mut report = fold_report(config, outcomes);
    report.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxmod_core::bounds::BoundId;
    use maxmod_core::campaign::Structure;
    use maxmod_core::generators::ClassId;
    use maxmod_core::verify::TolSpec;

    #[test]
    fn matches_sequential_fold() {
        let cfg = CampaignConfig {
            class_id: ClassId::ZerosOnCircle,
            structures: Structure::circle_grid(8, &[0.4, 0.9]),
            bounds: vec![BoundId::DewanAhuja, BoundId::Nwaeze],
            radii: vec![1.5, 3.0],
            powers: vec![1, 2],
            trials: 24,
            seed: 99,
            tol: TolSpec::default(),
            check_derivative: true,
        };
        let mut par = run_campaign(&cfg).unwrap();
        assert!(par.runtime_ms.is_some());
        par.runtime_ms = None;
        let seq = maxmod_core::campaign::run_campaign(&cfg).unwrap();
        assert_eq!(par, seq);
    }
}
