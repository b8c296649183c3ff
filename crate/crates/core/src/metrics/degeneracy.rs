use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};

/// Outcome of min-degree elimination, with the removal order as certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyResult {
    pub d_max: usize,
    pub elimination_order: Vec<VertexId>,
    /// Degree of each vertex in the remaining graph at the moment it was
    /// removed, aligned with `elimination_order`.
    pub elimination_degrees: Vec<usize>,
}

/// Largest `k` such that some subgraph has minimum degree `k`.
///
/// Repeatedly deletes a vertex of minimum remaining degree, breaking ties by
/// lowest id, and reports the largest degree seen at deletion time. Vertices
/// are kept in per-degree min-heaps with lazy invalidation: a vertex whose
/// degree drops is pushed again into its new bucket and the stale entry is
/// skipped when it surfaces.
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.degrees().collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BinaryHeap<Reverse<VertexId>>> = vec![BinaryHeap::new(); max_degree + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].push(Reverse(v as VertexId));
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degrees_at_removal = Vec::with_capacity(n);
    let mut d_max = 0;
    let mut lowest = 0;

    while order.len() < n {
        let v = 'find: loop {
            while let Some(&Reverse(v)) = buckets[lowest].peek() {
                buckets[lowest].pop();
                if !removed[v as usize] && degree[v as usize] == lowest {
                    break 'find v;
                }
            }
            lowest += 1;
        };
        let d = degree[v as usize];
        removed[v as usize] = true;
        order.push(v);
        degrees_at_removal.push(d);
        d_max = d_max.max(d);
        for &w in g.neighbors(v) {
            if !removed[w as usize] {
                degree[w as usize] -= 1;
                buckets[degree[w as usize]].push(Reverse(w));
            }
        }
        lowest = lowest.saturating_sub(1);
    }

    DegeneracyResult {
        d_max,
        elimination_order: order,
        elimination_degrees: degrees_at_removal,
    }
}

pub fn min_degree(g: &Graph) -> usize {
    g.degrees().min().unwrap_or(0)
}
