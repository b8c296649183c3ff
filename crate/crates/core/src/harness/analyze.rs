use std::path::PathBuf;

use serde::Serialize;

use crate::error::HarnessError;
use crate::graph::Graph;
use crate::harness::report::{
    derive_seed, summarize, DroppedEdges, Execution, ExperimentConfig, ExperimentReport, ModelKind,
    RunRecord,
};
use crate::harness::snapshot_record;
use crate::io::{read_input, InputFile, InputKind};
use crate::metrics::{degeneracy, degree_histogram, min_degree};
use crate::models::gen_config_from_sequence;
use crate::rng::SimRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Degeneracy,
    MinDegree,
    Histogram,
    Fit,
}

impl Metric {
    pub const ALL: [Metric; 4] = [
        Metric::Degeneracy,
        Metric::MinDegree,
        Metric::Histogram,
        Metric::Fit,
    ];
}

impl std::str::FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degeneracy" | "dmax" => Ok(Metric::Degeneracy),
            "min_degree" | "min-degree" => Ok(Metric::MinDegree),
            "histogram" => Ok(Metric::Histogram),
            "fit" => Ok(Metric::Fit),
            other => Err(format!(
                "unknown metric `{other}` (degeneracy|min_degree|histogram|fit)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzeConfig {
    pub path: PathBuf,
    /// `None` means detect from the first data line.
    pub kind: Option<InputKind>,
    pub metrics: Vec<Metric>,
    /// Configuration-model runs for degree-sequence input.
    pub repeats: usize,
    pub base_seed: u64,
}

impl AnalyzeConfig {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self {
            path: path.into(),
            kind: None,
            metrics: Metric::ALL.to_vec(),
            repeats: 1,
            base_seed: 0,
        }
    }
}

fn record_metrics(record: &mut RunRecord, g: &Graph, metrics: &[Metric]) {
    record.n = g.vertex_count();
    record.m = g.edge_count();
    record.max_degree = g.max_degree();
    if metrics.contains(&Metric::Degeneracy) {
        record.d_max = Some(degeneracy(g).d_max);
    }
    if metrics.contains(&Metric::MinDegree) {
        record.min_degree = Some(min_degree(g));
    }
    let keep_histogram = metrics.contains(&Metric::Histogram);
    if keep_histogram || metrics.contains(&Metric::Fit) {
        let mut snap = snapshot_record(0, degree_histogram(g), keep_histogram);
        if !metrics.contains(&Metric::Fit) {
            snap.raw_fit = None;
            snap.ccdf_fit = None;
        }
        record.snapshots.push(snap);
    }
}

/// Measures a graph read from disk. An edge list is measured directly; a
/// degree sequence is realized `repeats` times with the configuration model
/// and each realization is measured.
pub fn analyze_file(
    config: &AnalyzeConfig,
    exec: Execution,
) -> Result<ExperimentReport, HarnessError> {
    if config.repeats == 0 {
        return Err(HarnessError::ZeroCount("repeats"));
    }
    let label = config
        .path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string());
    let input = read_input(&config.path, config.kind)?;

    let runs = match &input {
        InputFile::EdgeList(parsed) => {
            let mut record = RunRecord::new(&label, ModelKind::Input, 0, None);
            record_metrics(&mut record, &parsed.graph, &config.metrics);
            vec![record]
        }
        InputFile::DegreeSequence(seq) => {
            let jobs: Vec<usize> = (0..config.repeats).collect();
            exec.run_all(&jobs, |&run| {
                let seed = derive_seed(config.base_seed, &format!("{label}/config"), run);
                let out = gen_config_from_sequence(seq, &mut SimRng::new(seed))?;
                let mut record = RunRecord::new(&label, ModelKind::Configuration, run, Some(seed));
                record_metrics(&mut record, &out.graph, &config.metrics);
                record.dropped = Some(DroppedEdges {
                    self_loops: out.self_loops_dropped,
                    parallel_edges: out.parallel_edges_dropped,
                });
                Ok(record)
            })?
        }
    };

    let summaries = summarize(&runs, |_| None);
    Ok(ExperimentReport {
        rng: SimRng::ALGORITHM,
        config: ExperimentConfig::Analyze(config.clone()),
        runs,
        summaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_selection_limits_output() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k4.txt");
        std::fs::write(&path, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let mut config = AnalyzeConfig::new(&path);
        config.metrics = vec![Metric::Degeneracy];
        let report = analyze_file(&config, Execution::default()).unwrap();
        let run = &report.runs[0];
        assert_eq!(run.group, "k4");
        assert_eq!(run.d_max, Some(3));
        assert_eq!(run.min_degree, None);
        assert!(run.snapshots.is_empty());
    }

    #[test]
    fn parse_failures_surface() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        std::fs::write(&path, "0 1\n2 2\n").unwrap();
        let err = analyze_file(&AnalyzeConfig::new(&path), Execution::default()).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let missing = AnalyzeConfig::new(dir.path().join("absent.txt"));
        assert!(analyze_file(&missing, Execution::default()).is_err());
    }

    #[test]
    fn metric_names_parse() {
        assert_eq!("dmax".parse(), Ok(Metric::Degeneracy));
        assert_eq!("min-degree".parse(), Ok(Metric::MinDegree));
        assert!("diameter".parse::<Metric>().is_err());
    }
}
