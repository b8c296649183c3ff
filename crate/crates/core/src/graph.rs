//! Simple undirected graph with constant-time mutation and sampling.
//!
//! Edges live in a dense vector so a uniform edge can be drawn by index, and
//! every vertex keeps an indexable neighbor list so a uniform incident edge
//! can be drawn the same way. An index keyed by the normalized pair records
//! where each edge sits in all three places, which lets removals run as
//! swap-removes followed by a fixup of whichever entries moved.

use rustc_hash::FxHashMap;

use crate::error::GraphError;
use crate::rng::SimRng;

pub type VertexId = u32;

/// Unordered vertex pair stored as `(min, max)`.
pub type Edge = (VertexId, VertexId);

#[inline]
pub fn normalize(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[inline]
fn key(u: VertexId, v: VertexId) -> u64 {
    let (lo, hi) = normalize(u, v);
    (u64::from(lo) << 32) | u64::from(hi)
}

/// Positions of one edge: in `edges`, in the low endpoint's neighbor list and
/// in the high endpoint's neighbor list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct EdgeSlot {
    pos: u32,
    lo_slot: u32,
    hi_slot: u32,
}

#[derive(Clone, Debug)]
pub struct Graph {
    edges: Vec<Edge>,
    edge_index: FxHashMap<u64, EdgeSlot>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        assert!(
            vertex_count <= VertexId::MAX as usize,
            "vertex count exceeds id space"
        );
        Ok(Self {
            edges: Vec::new(),
            edge_index: FxHashMap::default(),
            adjacency: vec![Vec::new(); vertex_count],
        })
    }

    /// Builds a graph from an edge list, ignoring self-loops and repeats.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Self::new(vertex_count)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Stored edges, each as `(min, max)`. Order is unspecified and changes
    /// under removal.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges sorted lexicographically; stable across mutation histories.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut out = self.edges.clone();
        out.sort_unstable();
        out
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_index.contains_key(&key(u, v))
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if (v as usize) < self.adjacency.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.adjacency.len(),
            })
        }
    }

    /// Inserts `{u, v}`. Returns `false` and leaves the graph untouched for a
    /// self-loop or an edge that is already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(false);
        }
        let (lo, hi) = normalize(u, v);
        let k = key(lo, hi);
        if self.edge_index.contains_key(&k) {
            return Ok(false);
        }
        let slot = EdgeSlot {
            pos: self.edges.len() as u32,
            lo_slot: self.adjacency[lo as usize].len() as u32,
            hi_slot: self.adjacency[hi as usize].len() as u32,
        };
        self.edges.push((lo, hi));
        self.adjacency[lo as usize].push(hi);
        self.adjacency[hi as usize].push(lo);
        self.edge_index.insert(k, slot);
        Ok(true)
    }

    /// Deletes `{u, v}`; removing an absent edge is an error.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (lo, hi) = normalize(u, v);
        let slot = self
            .edge_index
            .remove(&key(lo, hi))
            .ok_or(GraphError::MissingEdge(lo, hi))?;

        let pos = slot.pos as usize;
        self.edges.swap_remove(pos);
        if let Some(&(a, b)) = self.edges.get(pos) {
            self.slot_mut(a, b).pos = slot.pos;
        }
        self.detach(lo, slot.lo_slot);
        self.detach(hi, slot.hi_slot);
        Ok(())
    }

    /// Swap-removes entry `at` from `owner`'s neighbor list and repoints the
    /// edge whose neighbor entry moved into that position.
    fn detach(&mut self, owner: VertexId, at: u32) {
        let list = &mut self.adjacency[owner as usize];
        list.swap_remove(at as usize);
        if let Some(&moved) = list.get(at as usize) {
            let slot = self.slot_mut(owner, moved);
            if owner < moved {
                slot.lo_slot = at;
            } else {
                slot.hi_slot = at;
            }
        }
    }

    fn slot_mut(&mut self, u: VertexId, v: VertexId) -> &mut EdgeSlot {
        self.edge_index
            .get_mut(&key(u, v))
            .expect("edge index out of sync with edge storage")
    }

    #[inline]
    pub fn sample_uniform_vertex(&self, rng: &mut SimRng) -> VertexId {
        rng.below(self.adjacency.len()) as VertexId
    }

    #[inline]
    pub fn sample_uniform_edge(&self, rng: &mut SimRng) -> Result<Edge, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        Ok(self.edges[rng.below(self.edges.len())])
    }

    /// Vertex drawn with probability `degree / 2m`: a uniform edge, then a
    /// uniform endpoint of it.
    #[inline]
    pub fn sample_vertex_by_degree(&self, rng: &mut SimRng) -> Result<VertexId, GraphError> {
        let (a, b) = self.sample_uniform_edge(rng)?;
        Ok(if rng.below(2) == 0 { a } else { b })
    }

    /// Uniform edge among those touching `v`, returned as `(v, neighbor)`.
    #[inline]
    pub fn sample_incident_edge(
        &self,
        v: VertexId,
        rng: &mut SimRng,
    ) -> Result<(VertexId, VertexId), GraphError> {
        self.check_vertex(v)?;
        let list = &self.adjacency[v as usize];
        if list.is_empty() {
            return Err(GraphError::IsolatedVertex(v));
        }
        Ok((v, list[rng.below(list.len())]))
    }

    /// Rebuilds adjacency and the index from `edges` and compares them with
    /// the incrementally maintained structures. Returns a description of the
    /// first discrepancy.
    pub fn check_consistency(&self) -> Result<(), String> {
        if self.edge_index.len() != self.edges.len() {
            return Err(format!(
                "index holds {} entries for {} edges",
                self.edge_index.len(),
                self.edges.len()
            ));
        }
        let mut rebuilt: Vec<Vec<VertexId>> = vec![Vec::new(); self.adjacency.len()];
        for (pos, &(lo, hi)) in self.edges.iter().enumerate() {
            if lo >= hi {
                return Err(format!("edge ({lo}, {hi}) is a loop or not normalized"));
            }
            let slot = self
                .edge_index
                .get(&key(lo, hi))
                .ok_or_else(|| format!("edge ({lo}, {hi}) missing from index"))?;
            if slot.pos as usize != pos {
                return Err(format!(
                    "edge ({lo}, {hi}) indexed at {} not {pos}",
                    slot.pos
                ));
            }
            if self.adjacency[lo as usize].get(slot.lo_slot as usize) != Some(&hi)
                || self.adjacency[hi as usize].get(slot.hi_slot as usize) != Some(&lo)
            {
                return Err(format!("neighbor slots of ({lo}, {hi}) are stale"));
            }
            rebuilt[lo as usize].push(hi);
            rebuilt[hi as usize].push(lo);
        }
        for (v, (have, want)) in self.adjacency.iter().zip(rebuilt.iter_mut()).enumerate() {
            let mut have = have.clone();
            have.sort_unstable();
            want.sort_unstable();
            if have != *want {
                return Err(format!("neighbors of {v} differ from the edge list"));
            }
        }
        let degree_sum: usize = self.degrees().sum();
        if degree_sum != 2 * self.edges.len() {
            return Err(format!(
                "degree sum {degree_sum} != 2 * {} edges",
                self.edges.len()
            ));
        }
        Ok(())
    }
}

impl PartialEq for Graph {
    /// Same vertex count and same edge set, regardless of storage order.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count() && self.sorted_edges() == other.sorted_edges()
    }
}

impl Eq for Graph {}
