//! Graph generators: uniform `G(n, m)`, the steady-state rewiring chain,
//! fixed-degree preferential growth and the configuration model.

mod configuration;
mod gnm;
mod growth;
mod steady_state;

pub use configuration::{gen_config_from_sequence, ConfigModelGraph, DegreeSequence};
pub use gnm::{gen_er_gnm, max_edges};
pub use growth::gen_fixed_degree_growth;
pub use steady_state::{
    run_steps, ss_run, ss_step, undo, RewiringVariant, Snapshot, SsParams, SsRun, StepOutcome,
};
