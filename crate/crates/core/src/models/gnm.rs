use crate::error::ModelError;
use crate::graph::{Graph, VertexId};
use crate::rng::SimRng;

/// Number of edges in the complete graph on `n` vertices.
pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Uniform simple graph with exactly `m` edges: vertex pairs are drawn
/// uniformly and kept unless they form a loop or repeat an edge.
pub fn gen_er_gnm(n: usize, m: usize, rng: &mut SimRng) -> Result<Graph, ModelError> {
    let mut g = Graph::new(n)?;
    if m > max_edges(n) {
        return Err(ModelError::TooManyEdges {
            vertices: n,
            edges: m,
        });
    }
    while g.edge_count() < m {
        let u = rng.below(n) as VertexId;
        let v = rng.below(n) as VertexId;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_outcomes() {
        let mut rng = SimRng::new(11);
        let tri = gen_er_gnm(3, 3, &mut rng).unwrap();
        assert_eq!(tri.sorted_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let k5 = gen_er_gnm(5, 10, &mut rng).unwrap();
        assert!(k5.degrees().all(|d| d == 4));
        assert!(matches!(
            gen_er_gnm(5, 11, &mut rng),
            Err(ModelError::TooManyEdges { .. })
        ));
        assert_eq!(gen_er_gnm(1, 0, &mut rng).unwrap().edge_count(), 0);
    }

    #[test]
    fn initial_g_500_1500() {
        let g = gen_er_gnm(500, 1500, &mut SimRng::new(5)).unwrap();
        assert_eq!(g.vertex_count(), 500);
        assert_eq!(g.edge_count(), 1500);
        assert_eq!(g.degrees().sum::<usize>(), 3000);
        g.check_consistency().unwrap();
    }
}
