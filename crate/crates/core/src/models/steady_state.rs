//! The steady-state rewiring chain.
//!
//! Each step proposes moving one edge: an edge `(u, v)` is selected for
//! deletion, a vertex `x` is drawn uniformly and a vertex `y` is drawn with
//! probability proportional to degree. The move is applied only when `x != y`
//! and `(x, y)` is not already an edge; otherwise the graph is left exactly as
//! it was. Vertex and edge counts never change.

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::graph::{normalize, Edge, Graph};
use crate::metrics::{degree_histogram, DegreeHistogram};
use crate::models::gnm::{gen_er_gnm, max_edges};
use crate::rng::SimRng;

/// How the edge to delete is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RewiringVariant {
    /// Draw a vertex uniformly among those with positive degree, then one of
    /// its incident edges uniformly.
    #[default]
    #[serde(rename = "incident")]
    IncidentEdge,
    /// Draw an edge uniformly from the whole edge set.
    #[serde(rename = "global")]
    GlobalEdge,
}

impl std::str::FromStr for RewiringVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "incident" => Ok(Self::IncidentEdge),
            "global" => Ok(Self::GlobalEdge),
            other => Err(format!(
                "unknown rewiring variant `{other}` (incident|global)"
            )),
        }
    }
}

impl std::fmt::Display for RewiringVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::IncidentEdge => "incident",
            Self::GlobalEdge => "global",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Rewired { removed: Edge, added: Edge },
    RejectedExistingEdge,
    RejectedSelfPair,
}

impl StepOutcome {
    pub fn is_rewired(&self) -> bool {
        matches!(self, StepOutcome::Rewired { .. })
    }
}

/// One proposal of the chain. `y` is drawn on the graph as it stands before
/// any deletion, and the acceptance test runs before the deletion too, so an
/// accepted `(x, y)` can never be the edge being removed.
pub fn ss_step(
    g: &mut Graph,
    rng: &mut SimRng,
    variant: RewiringVariant,
) -> Result<StepOutcome, ModelError> {
    if g.edge_count() == 0 {
        return Err(ModelError::NoEdges);
    }
    let (u, v) = match variant {
        RewiringVariant::IncidentEdge => {
            // Terminates almost surely: at least two vertices have positive degree.
            let v = loop {
                let v = g.sample_uniform_vertex(rng);
                if g.degree(v) > 0 {
                    break v;
                }
            };
            g.sample_incident_edge(v, rng)?
        }
        RewiringVariant::GlobalEdge => g.sample_uniform_edge(rng)?,
    };
    let x = g.sample_uniform_vertex(rng);
    let y = g.sample_vertex_by_degree(rng)?;
    if x == y {
        return Ok(StepOutcome::RejectedSelfPair);
    }
    if g.has_edge(x, y) {
        return Ok(StepOutcome::RejectedExistingEdge);
    }
    g.remove_edge(u, v)?;
    let added = g.add_edge(x, y)?;
    debug_assert!(added);
    Ok(StepOutcome::Rewired {
        removed: normalize(u, v),
        added: normalize(x, y),
    })
}

/// Runs `steps` proposals and returns how many were accepted.
pub fn run_steps(
    g: &mut Graph,
    rng: &mut SimRng,
    variant: RewiringVariant,
    steps: u64,
) -> Result<u64, ModelError> {
    let mut accepted = 0;
    for _ in 0..steps {
        if ss_step(g, rng, variant)?.is_rewired() {
            accepted += 1;
        }
    }
    Ok(accepted)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SsParams {
    pub n: usize,
    pub m: usize,
    /// Number of proposals, accepted or not.
    pub r: u64,
    pub seed: u64,
    #[serde(default)]
    pub variant: RewiringVariant,
    /// Step counts after which a degree histogram is recorded; `0` is the
    /// initial graph.
    #[serde(default)]
    pub checkpoints: Vec<u64>,
}

impl SsParams {
    pub fn new(n: usize, m: usize, r: u64, seed: u64) -> Self {
        Self {
            n,
            m,
            r,
            seed,
            variant: RewiringVariant::default(),
            checkpoints: Vec::new(),
        }
    }

    pub fn with_variant(mut self, variant: RewiringVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_checkpoints(mut self, checkpoints: Vec<u64>) -> Self {
        self.checkpoints = checkpoints;
        self
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.n == 0 {
            return Err(crate::error::GraphError::NoVertices.into());
        }
        if self.m == 0 {
            return Err(ModelError::NoEdges);
        }
        if self.m > max_edges(self.n) {
            return Err(ModelError::TooManyEdges {
                vertices: self.n,
                edges: self.m,
            });
        }
        if let Some(w) = self.checkpoints.windows(2).find(|w| w[0] >= w[1]) {
            return Err(ModelError::BadCheckpoints {
                steps: self.r,
                detail: format!("{} is not before {}", w[0], w[1]),
            });
        }
        if let Some(&last) = self.checkpoints.last() {
            if last > self.r {
                return Err(ModelError::BadCheckpoints {
                    steps: self.r,
                    detail: format!("{last} is past the last step"),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub step: u64,
    pub histogram: DegreeHistogram,
}

#[derive(Clone, Debug)]
pub struct SsRun {
    pub graph: Graph,
    pub initial_max_degree: usize,
    pub accepted: u64,
    pub snapshots: Vec<Snapshot>,
}

/// Draws `G(n, m)` from `params.seed` and applies `params.r` steps to it.
pub fn ss_run(params: &SsParams) -> Result<SsRun, ModelError> {
    params.validate()?;
    let mut rng = SimRng::new(params.seed);
    let mut graph = gen_er_gnm(params.n, params.m, &mut rng)?;
    let initial_max_degree = graph.max_degree();

    let mut snapshots = Vec::with_capacity(params.checkpoints.len());
    let mut done = 0;
    let mut accepted = 0;
    for &checkpoint in &params.checkpoints {
        accepted += run_steps(&mut graph, &mut rng, params.variant, checkpoint - done)?;
        done = checkpoint;
        debug_assert_eq!(graph.edge_count(), params.m);
        snapshots.push(Snapshot {
            step: checkpoint,
            histogram: degree_histogram(&graph),
        });
    }
    accepted += run_steps(&mut graph, &mut rng, params.variant, params.r - done)?;
    debug_assert_eq!(graph.edge_count(), params.m);

    Ok(SsRun {
        graph,
        initial_max_degree,
        accepted,
        snapshots,
    })
}

/// Applies an accepted move in reverse. Used to replay single steps from a
/// fixed starting graph.
pub fn undo(g: &mut Graph, outcome: StepOutcome) -> Result<(), ModelError> {
    if let StepOutcome::Rewired { removed, added } = outcome {
        g.remove_edge(added.0, added.1)?;
        g.add_edge(removed.0, removed.1)?;
    }
    Ok(())
}
