use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::HarnessError;
use crate::harness::measure;
use crate::harness::reference::{table1_row, Table1Row, TABLE1};
use crate::harness::report::{
    derive_seed, summarize, DroppedEdges, Execution, ExperimentConfig, ExperimentReport, ModelKind,
    RunRecord,
};
use crate::io::read_degree_sequence;
use crate::models::{gen_config_from_sequence, ss_run, DegreeSequence, RewiringVariant, SsParams};
use crate::rng::SimRng;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table1Config {
    pub sites: Vec<String>,
    pub repeats: usize,
    pub r: u64,
    pub base_seed: u64,
    pub variant: RewiringVariant,
    /// Optional per-site degree sequence files; each one adds `repeats`
    /// configuration-model runs for that site.
    pub degree_sequences: BTreeMap<String, PathBuf>,
}

impl Default for Table1Config {
    fn default() -> Self {
        Self {
            sites: TABLE1.iter().map(|r| r.site.to_string()).collect(),
            repeats: 5,
            r: 10_000_000,
            base_seed: 0,
            variant: RewiringVariant::IncidentEdge,
            degree_sequences: BTreeMap::new(),
        }
    }
}

enum Job<'a> {
    SteadyState {
        row: &'static Table1Row,
        run: usize,
    },
    Configuration {
        site: &'a str,
        sequence: &'a DegreeSequence,
        run: usize,
    },
}

/// Steady-state runs at each selected site's `(n, m)`, plus configuration
/// model runs for sites with a degree sequence, aggregated per site.
pub fn run_table1(
    config: &Table1Config,
    exec: Execution,
) -> Result<ExperimentReport, HarnessError> {
    if config.repeats == 0 {
        return Err(HarnessError::ZeroCount("repeats"));
    }
    let rows: Vec<&'static Table1Row> = config
        .sites
        .iter()
        .map(|s| table1_row(s).ok_or_else(|| HarnessError::UnknownSite(s.clone())))
        .collect::<Result<_, _>>()?;
    let mut sequences: Vec<(&str, DegreeSequence)> = Vec::new();
    for (site, path) in &config.degree_sequences {
        if table1_row(site).is_none() {
            return Err(HarnessError::UnknownSite(site.clone()));
        }
        sequences.push((site.as_str(), read_degree_sequence(path)?));
    }

    let mut jobs = Vec::new();
    for &row in &rows {
        for run in 0..config.repeats {
            jobs.push(Job::SteadyState { row, run });
        }
        if let Some((site, sequence)) = sequences.iter().find(|(s, _)| *s == row.site) {
            for run in 0..config.repeats {
                jobs.push(Job::Configuration {
                    site,
                    sequence,
                    run,
                });
            }
        }
    }

    let runs = exec.run_all(&jobs, |job| match *job {
        Job::SteadyState { row, run } => {
            let seed = derive_seed(config.base_seed, row.site, run);
            let params = SsParams::new(row.n, row.m, config.r, seed).with_variant(config.variant);
            let result = ss_run(&params)?;
            let mut record = RunRecord::new(row.site, ModelKind::SteadyState, run, Some(seed));
            measure(&mut record, &result.graph);
            record.initial_max_degree = Some(result.initial_max_degree);
            record.accepted_steps = Some(result.accepted);
            Ok(record)
        }
        Job::Configuration {
            site,
            sequence,
            run,
        } => {
            let seed = derive_seed(config.base_seed, &format!("{site}/config"), run);
            let out = gen_config_from_sequence(sequence, &mut SimRng::new(seed))?;
            let mut record = RunRecord::new(site, ModelKind::Configuration, run, Some(seed));
            measure(&mut record, &out.graph);
            record.dropped = Some(DroppedEdges {
                self_loops: out.self_loops_dropped,
                parallel_edges: out.parallel_edges_dropped,
            });
            Ok(record)
        }
    })?;

    let summaries = summarize(&runs, |site| table1_row(site).copied());
    Ok(ExperimentReport {
        rng: crate::rng::SimRng::ALGORITHM,
        config: ExperimentConfig::Table1(config.clone()),
        runs,
        summaries,
    })
}
