use serde::Serialize;

use crate::error::HarnessError;
use crate::harness::report::{
    derive_seed, summarize, Execution, ExperimentConfig, ExperimentReport, ModelKind, RunRecord,
};
use crate::harness::{measure, snapshot_record};
use crate::models::{ss_run, RewiringVariant, SsParams};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub sizes: Vec<usize>,
    /// Edge densities `m / n`; `m` is rounded to the nearest integer.
    pub densities: Vec<f64>,
    pub r: u64,
    pub checkpoints: Vec<u64>,
    pub repeats: usize,
    pub base_seed: u64,
    pub variant: RewiringVariant,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            sizes: vec![500, 3000],
            densities: vec![1.0, 2.0, 3.0],
            r: 10_000_000,
            checkpoints: vec![0, 100_000, 10_000_000],
            repeats: 1,
            base_seed: 0,
            variant: RewiringVariant::IncidentEdge,
        }
    }
}

impl SweepConfig {
    /// The `(n, m)` grid in size-major order.
    pub fn grid(&self) -> Vec<(usize, usize)> {
        self.sizes
            .iter()
            .flat_map(|&n| {
                self.densities
                    .iter()
                    .map(move |&d| (n, (d * n as f64).round() as usize))
            })
            .collect()
    }
}

pub fn group_label(n: usize, m: usize) -> String {
    format!("n={n},m={m}")
}

/// Steady-state runs over a grid of sizes and densities with a degree
/// histogram and both power-law fits at every checkpoint.
pub fn run_powerlaw_sweep(
    config: &SweepConfig,
    exec: Execution,
) -> Result<ExperimentReport, HarnessError> {
    if config.repeats == 0 {
        return Err(HarnessError::ZeroCount("repeats"));
    }
    if let Some(d) = config
        .densities
        .iter()
        .find(|d| !d.is_finite() || **d <= 0.0)
    {
        return Err(HarnessError::Config(format!("density {d} is not positive")));
    }
    let mut jobs = Vec::new();
    for (n, m) in config.grid() {
        SsParams::new(n, m, config.r, 0)
            .with_checkpoints(config.checkpoints.clone())
            .validate()?;
        for run in 0..config.repeats {
            jobs.push((n, m, run));
        }
    }

    let runs = exec.run_all(&jobs, |&(n, m, run)| {
        let group = group_label(n, m);
        let seed = derive_seed(config.base_seed, &group, run);
        let params = SsParams::new(n, m, config.r, seed)
            .with_variant(config.variant)
            .with_checkpoints(config.checkpoints.clone());
        let result = ss_run(&params)?;
        let mut record = RunRecord::new(&group, ModelKind::SteadyState, run, Some(seed));
        measure(&mut record, &result.graph);
        record.initial_max_degree = Some(result.initial_max_degree);
        record.accepted_steps = Some(result.accepted);
        record.snapshots = result
            .snapshots
            .into_iter()
            .map(|s| snapshot_record(s.step, s.histogram, true))
            .collect();
        Ok(record)
    })?;

    let summaries = summarize(&runs, |_| None);
    Ok(ExperimentReport {
        rng: crate::rng::SimRng::ALGORITHM,
        config: ExperimentConfig::Sweep(config.clone()),
        runs,
        summaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rounds_edge_counts() {
        let config = SweepConfig {
            sizes: vec![500, 7],
            densities: vec![1.0, 1.5],
            ..SweepConfig::default()
        };
        assert_eq!(config.grid(), vec![(500, 500), (500, 750), (7, 7), (7, 11)]);
    }

    #[test]
    fn small_sweep_has_snapshots_and_fits() {
        let config = SweepConfig {
            sizes: vec![200],
            densities: vec![2.0, 3.0],
            r: 20_000,
            checkpoints: vec![0, 1_000, 20_000],
            repeats: 2,
            base_seed: 1,
            variant: RewiringVariant::IncidentEdge,
        };
        let report = run_powerlaw_sweep(&config, Execution::deterministic(1)).unwrap();
        assert_eq!(report.runs.len(), 4);
        for run in &report.runs {
            assert_eq!(run.snapshots.len(), 3);
            for snap in &run.snapshots {
                let h = snap.histogram.as_ref().unwrap();
                assert_eq!(h.degree_sum(), 2 * run.m as u64);
                assert!(snap.raw_fit.is_some() && snap.ccdf_fit.is_some());
            }
        }
        assert_eq!(report.histogram_csvs().len(), 12);
    }

    #[test]
    fn infeasible_density_is_rejected() {
        let config = SweepConfig {
            sizes: vec![5],
            densities: vec![3.0],
            r: 0,
            checkpoints: vec![],
            ..SweepConfig::default()
        };
        assert!(run_powerlaw_sweep(&config, Execution::default()).is_err());
        let negative = SweepConfig {
            densities: vec![-1.0],
            ..SweepConfig::default()
        };
        assert!(matches!(
            run_powerlaw_sweep(&negative, Execution::default()),
            Err(HarnessError::Config(_))
        ));
    }
}
