use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::HarnessError;
use crate::harness::reference::Table1Row;
use crate::harness::{AnalyzeConfig, SweepConfig, Table1Config};
use crate::metrics::{DegreeHistogram, PowerLawFit};

/// Everything an experiment produced, plus the configuration that produced
/// it. Serializes to the JSON report format.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub rng: &'static str,
    pub config: ExperimentConfig,
    pub runs: Vec<RunRecord>,
    pub summaries: Vec<GroupSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "experiment", rename_all = "snake_case")]
pub enum ExperimentConfig {
    Table1(Table1Config),
    Sweep(SweepConfig),
    Analyze(AnalyzeConfig),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// Steady-state rewiring chain started from `G(n, m)`.
    SteadyState,
    /// Simplified configuration model on a supplied degree sequence.
    Configuration,
    /// A graph read from disk, measured as is.
    Input,
}

impl ModelKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ModelKind::SteadyState => "ss",
            ModelKind::Configuration => "config",
            ModelKind::Input => "input",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DroppedEdges {
    pub self_loops: usize,
    pub parallel_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SnapshotRecord {
    pub step: u64,
    pub max_degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<DegreeHistogram>,
    pub raw_fit: Option<PowerLawFit>,
    pub ccdf_fit: Option<PowerLawFit>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub group: String,
    pub model: ModelKind,
    pub run_index: usize,
    pub seed: Option<u64>,
    pub n: usize,
    /// Edges in the measured graph.
    pub m: usize,
    pub d_max: Option<usize>,
    pub min_degree: Option<usize>,
    pub max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial_max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accepted_steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dropped: Option<DroppedEdges>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub snapshots: Vec<SnapshotRecord>,
    /// `None` when timing is disabled, which keeps reports byte-for-byte
    /// reproducible.
    pub elapsed_ms: Option<u64>,
}

impl RunRecord {
    pub(crate) fn new(group: &str, model: ModelKind, run_index: usize, seed: Option<u64>) -> Self {
        Self {
            group: group.to_string(),
            model,
            run_index,
            seed,
            n: 0,
            m: 0,
            d_max: None,
            min_degree: None,
            max_degree: 0,
            initial_max_degree: None,
            accepted_steps: None,
            dropped: None,
            snapshots: Vec::new(),
            elapsed_ms: None,
        }
    }

    /// A record for a single graph built outside the experiment runners,
    /// with its size and degree fields already measured.
    pub fn measured(
        group: &str,
        model: ModelKind,
        run_index: usize,
        seed: Option<u64>,
        g: &crate::graph::Graph,
    ) -> Self {
        let mut record = Self::new(group, model, run_index, seed);
        super::measure(&mut record, g);
        record
    }
}

/// Mean and sample standard deviation (n - 1 denominator).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Aggregate {
    pub count: usize,
    pub mean: f64,
    /// Absent for a single value.
    pub stdev: Option<f64>,
    pub min: f64,
    pub max: f64,
}

impl Aggregate {
    pub fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let count = values.len();
        let mean = values.iter().sum::<f64>() / count as f64;
        let stdev = (count > 1).then(|| {
            let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
            (ss / (count - 1) as f64).sqrt()
        });
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Some(Self {
            count,
            mean,
            stdev,
            min,
            max,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub model: ModelKind,
    pub runs: usize,
    pub d_max: Option<Aggregate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<Table1Row>,
}

/// Groups runs by `(group, model)` in order of first appearance and
/// aggregates their `d_max` values.
pub(crate) fn summarize(
    runs: &[RunRecord],
    reference: impl Fn(&str) -> Option<Table1Row>,
) -> Vec<GroupSummary> {
    let mut keys: Vec<(&str, ModelKind)> = Vec::new();
    for run in runs {
        let key = (run.group.as_str(), run.model);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.into_iter()
        .map(|(group, model)| {
            let members: Vec<&RunRecord> = runs
                .iter()
                .filter(|r| r.group == group && r.model == model)
                .collect();
            let d_max: Vec<f64> = members
                .iter()
                .filter_map(|r| r.d_max.map(|d| d as f64))
                .collect();
            GroupSummary {
                group: group.to_string(),
                model,
                runs: members.len(),
                d_max: Aggregate::of(&d_max),
                reference: reference(group),
            }
        })
        .collect()
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per run: `site,n,m,run_index,seed,d_max,elapsed_ms`. Runs of
    /// models other than the steady-state chain carry their model tag in the
    /// site column, e.g. `arizona/config`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("site,n,m,run_index,seed,d_max,elapsed_ms\n");
        for run in &self.runs {
            let site = match run.model {
                ModelKind::SteadyState | ModelKind::Input => run.group.clone(),
                other => format!("{}/{}", run.group, other.tag()),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                csv_field(&site),
                run.n,
                run.m,
                run.run_index,
                opt(run.seed),
                opt(run.d_max),
                opt(run.elapsed_ms),
            );
        }
        out
    }

    /// Per-snapshot `degree,count` tables, keyed by a file-name stem.
    pub fn histogram_csvs(&self) -> Vec<(String, String)> {
        let mut files = Vec::new();
        for run in &self.runs {
            for snap in &run.snapshots {
                if let Some(h) = &snap.histogram {
                    let stem = format!(
                        "{}_{}_run{}_step{}",
                        sanitize(&run.group),
                        run.model.tag(),
                        run.run_index,
                        snap.step
                    );
                    files.push((stem, h.to_csv()));
                }
            }
        }
        files
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// `base_seed` XOR the first eight bytes of SHA-256 over the label and run
/// index. Depends only on its inputs, so adding groups never shifts another
/// group's seeds.
pub fn derive_seed(base_seed: u64, label: &str, run_index: usize) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(label.as_bytes());
    hasher.update([0u8]);
    hasher.update((run_index as u64).to_le_bytes());
    let digest = hasher.finalize();
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);
    base_seed ^ u64::from_le_bytes(head)
}

/// Worker count and whether to record wall time. Neither changes results,
/// so neither is echoed into reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Execution {
    pub workers: usize,
    pub record_timing: bool,
}

impl Default for Execution {
    fn default() -> Self {
        Self {
            workers: 1,
            record_timing: true,
        }
    }
}

impl Execution {
    pub fn deterministic(workers: usize) -> Self {
        Self {
            workers,
            record_timing: false,
        }
    }

    /// Runs every job, in parallel up to `workers`, and returns results in
    /// job order regardless of completion order.
    pub(crate) fn run_all<J, F>(&self, jobs: &[J], job: F) -> Result<Vec<RunRecord>, HarnessError>
    where
        J: Sync,
        F: Fn(&J) -> Result<RunRecord, HarnessError> + Sync,
    {
        if self.workers == 0 {
            return Err(HarnessError::ZeroCount("workers"));
        }
        let timed = |j: &J| {
            let start = Instant::now();
            let mut record = job(j)?;
            if self.record_timing {
                record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            Ok(record)
        };
        if self.workers == 1 {
            return jobs.iter().map(timed).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?;
        pool.install(|| jobs.par_iter().map(timed).collect())
    }
}
