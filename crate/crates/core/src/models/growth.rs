use crate::error::ModelError;
use crate::graph::{Graph, VertexId};
use crate::rng::SimRng;

/// Preferential-attachment growth where every arriving vertex brings exactly
/// `d` edges.
///
/// Starts from a clique on `d + 1` vertices. Each later vertex picks `d`
/// distinct targets among the vertices already present, each drawn with
/// probability proportional to its current degree; a repeated target is
/// redrawn. Every vertex ends with degree at least `d` and the degeneracy is
/// exactly `d`.
pub fn gen_fixed_degree_growth(n: usize, d: usize, rng: &mut SimRng) -> Result<Graph, ModelError> {
    if d == 0 || n <= d {
        return Err(ModelError::InfeasibleGrowth {
            vertices: n,
            per_vertex: d,
        });
    }
    let mut g = Graph::new(n)?;
    let seed_size = (d + 1) as VertexId;
    for u in 0..seed_size {
        for v in u + 1..seed_size {
            g.add_edge(u, v)?;
        }
    }
    let mut targets: Vec<VertexId> = Vec::with_capacity(d);
    for arriving in seed_size..n as VertexId {
        targets.clear();
        while targets.len() < d {
            let t = g.sample_vertex_by_degree(rng)?;
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            g.add_edge(arriving, t)?;
        }
    }
    Ok(g)
}
