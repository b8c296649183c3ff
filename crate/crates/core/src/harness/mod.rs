//! Seeded, repeatable experiments and their reports.
//!
//! Every experiment expands its configuration into a list of independent
//! runs, executes them (optionally in parallel) and merges the results in
//! job order. Seeds come from [`derive_seed`], so a report can be re-run
//! from the configuration it embeds.

mod analyze;
mod reference;
mod report;
mod sweep;
mod table1;

pub use analyze::{analyze_file, AnalyzeConfig, Metric};
pub use reference::{table1_row, Table1Row, TABLE1};
pub use report::{
    derive_seed, Aggregate, DroppedEdges, Execution, ExperimentConfig, ExperimentReport,
    GroupSummary, ModelKind, RunRecord, SnapshotRecord,
};
pub use sweep::{run_powerlaw_sweep, SweepConfig};
pub use table1::{run_table1, Table1Config};

use crate::graph::Graph;
use crate::metrics::{degeneracy, fit_power_law, min_degree, DegreeHistogram, FitMode};

/// Fills the size and degree fields of `record` from `g`.
fn measure(record: &mut RunRecord, g: &Graph) {
    record.n = g.vertex_count();
    record.m = g.edge_count();
    record.d_max = Some(degeneracy(g).d_max);
    record.min_degree = Some(min_degree(g));
    record.max_degree = g.max_degree();
}

fn snapshot_record(step: u64, h: DegreeHistogram, keep_histogram: bool) -> SnapshotRecord {
    SnapshotRecord {
        step,
        max_degree: h.max_degree(),
        raw_fit: fit_power_law(&h, FitMode::RawCounts).ok(),
        ccdf_fit: fit_power_law(&h, FitMode::Ccdf).ok(),
        histogram: keep_histogram.then_some(h),
    }
}
