//! Steady-state edge-rewiring graphs and the degeneracy measurements used to
//! compare them with growth models.
//!
//! The [`models`] module holds the generators, [`metrics`] the measurements,
//! [`io`] the flat-file formats and [`harness`] the seeded, repeatable
//! experiments built on top of them.

pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod metrics;
pub mod models;
pub mod rng;

pub use error::{GraphError, HarnessError, MetricsError, ModelError, ParseError};
pub use graph::{Edge, Graph, VertexId};
pub use metrics::{
    degeneracy, degree_histogram, fit_power_law, min_degree, DegeneracyResult, DegreeHistogram,
    FitMode, PowerLawFit,
};
pub use models::{
    gen_config_from_sequence, gen_er_gnm, gen_fixed_degree_growth, ss_run, ss_step, DegreeSequence,
    RewiringVariant, SsParams, SsRun, StepOutcome,
};
pub use rng::SimRng;
