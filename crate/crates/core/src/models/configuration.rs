use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::graph::{Graph, VertexId};
use crate::rng::SimRng;

/// Requested degree of every vertex, indexed by vertex id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(pub Vec<u32>);

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    /// Degree sequence of an existing graph.
    pub fn of(g: &Graph) -> Self {
        Self(g.degrees().map(|d| d as u32).collect())
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// Simplified configuration-model graph together with what was discarded.
#[derive(Clone, Debug)]
pub struct ConfigModelGraph {
    pub graph: Graph,
    pub self_loops_dropped: usize,
    pub parallel_edges_dropped: usize,
}

impl ConfigModelGraph {
    /// Sum over vertices of requested minus realized degree.
    pub fn degree_deficit(&self, requested: &DegreeSequence) -> u64 {
        requested.sum() - 2 * self.graph.edge_count() as u64
    }
}

/// Uniform stub matching on `seq`, with self-loops deleted and parallel
/// edges collapsed to one.
pub fn gen_config_from_sequence(
    seq: &DegreeSequence,
    rng: &mut SimRng,
) -> Result<ConfigModelGraph, ModelError> {
    let total = seq.sum();
    if total % 2 == 1 {
        return Err(ModelError::OddDegreeSum(total));
    }
    let mut graph = Graph::new(seq.len())?;
    let mut stubs: Vec<VertexId> = Vec::with_capacity(total as usize);
    for (v, &d) in seq.0.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v as VertexId, d as usize));
    }
    stubs.shuffle(rng);

    let mut self_loops_dropped = 0;
    let mut parallel_edges_dropped = 0;
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            self_loops_dropped += 1;
        } else if !graph.add_edge(u, v)? {
            parallel_edges_dropped += 1;
        }
    }
    Ok(ConfigModelGraph {
        graph,
        self_loops_dropped,
        parallel_edges_dropped,
    })
}
