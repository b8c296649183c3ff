//! Reference implementations used to check the library. None of these share
//! code paths with the routines they verify.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use steadystate::{Edge, Graph, RewiringVariant, SimRng, VertexId};

pub fn graph(n: usize, edges: &[Edge]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// All pairs `(u, v)` with `u < v < n`, in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            out.push((u, v));
        }
    }
    out
}

/// Graph whose edges are the pairs selected by `mask` over [`all_pairs`].
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let pairs = all_pairs(n);
    let edges: Vec<Edge> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    graph(n, &edges)
}

pub fn edge_mask(n: usize, edges: &[Edge]) -> u64 {
    let pairs = all_pairs(n);
    edges
        .iter()
        .map(|e| 1u64 << pairs.iter().position(|p| p == e).unwrap())
        .fold(0, |a, b| a | b)
}

pub fn random_graph(n: usize, p: f64, rng: &mut SimRng) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for (u, v) in all_pairs(n) {
        if rng.random_bool(p) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// max over non-empty vertex subsets of the minimum induced degree.
pub fn subset_degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16);
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            g.neighbors(v as VertexId)
                .iter()
                .fold(0u32, |m, &w| m | 1 << w)
        })
        .collect();
    let mut best = 0;
    for subset in 1u32..(1 << n) {
        let min = (0..n)
            .filter(|v| subset >> v & 1 == 1)
            .map(|v| (adj[v] & subset).count_ones() as usize)
            .min()
            .unwrap();
        best = best.max(min);
    }
    best
}

/// Quadratic min-degree elimination. `pick` chooses among the tied
/// minimum-degree vertices (given in ascending id order).
pub fn naive_elimination(
    g: &Graph,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = g.degrees().collect();
    let mut order = Vec::new();
    let mut best = 0;
    for _ in 0..n {
        let min = (0..n).filter(|&v| alive[v]).map(|v| deg[v]).min().unwrap();
        let tied: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == min).collect();
        let v = tied[pick(&tied)];
        best = best.max(min);
        alive[v] = false;
        order.push(v);
        for &w in g.neighbors(v as VertexId) {
            if alive[w as usize] {
                deg[w as usize] -= 1;
            }
        }
    }
    (best, order)
}

pub type Kernel = BTreeMap<Vec<Edge>, f64>;

/// Exact one-step distribution of the rewiring chain from `g`, over the
/// resulting sorted edge sets.
pub fn exact_kernel(g: &Graph, variant: RewiringVariant) -> Kernel {
    let n = g.vertex_count();
    let m = g.edge_count();
    let edges = g.sorted_edges();
    let deg: Vec<usize> = g.degrees().collect();
    let has = |a: VertexId, b: VertexId| edges.contains(&(a.min(b), a.max(b)));

    // Probability that each edge is selected for deletion.
    let mut deletion: Vec<(Edge, f64)> = Vec::new();
    match variant {
        RewiringVariant::GlobalEdge => {
            for &e in &edges {
                deletion.push((e, 1.0 / m as f64));
            }
        }
        RewiringVariant::IncidentEdge => {
            let positive = deg.iter().filter(|&&d| d > 0).count() as f64;
            for &(a, b) in &edges {
                let p = (1.0 / deg[a as usize] as f64 + 1.0 / deg[b as usize] as f64) / positive;
                deletion.push(((a, b), p));
            }
        }
    }

    let mut kernel = Kernel::new();
    for &(removed, p_del) in &deletion {
        for x in 0..n as VertexId {
            for y in 0..n as VertexId {
                let p = p_del * (1.0 / n as f64) * (deg[y as usize] as f64 / (2 * m) as f64);
                if p == 0.0 {
                    continue;
                }
                let next = if x != y && !has(x, y) {
                    let mut e: Vec<Edge> =
                        edges.iter().copied().filter(|&e| e != removed).collect();
                    e.push((x.min(y), x.max(y)));
                    e.sort_unstable();
                    e
                } else {
                    edges.clone()
                };
                *kernel.entry(next).or_default() += p;
            }
        }
    }
    kernel
}

/// Empirical one-step distribution: `samples` independent steps, each from
/// a fresh copy of `g`.
pub fn empirical_kernel(g: &Graph, variant: RewiringVariant, samples: usize, seed: u64) -> Kernel {
    let mut rng = SimRng::new(seed);
    let mut counts: BTreeMap<Vec<Edge>, usize> = BTreeMap::new();
    for _ in 0..samples {
        let mut h = g.clone();
        steadystate::ss_step(&mut h, &mut rng, variant).unwrap();
        *counts.entry(h.sorted_edges()).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(k, c)| (k, c as f64 / samples as f64))
        .collect()
}

pub fn total_variation(a: &Kernel, b: &Kernel) -> f64 {
    let mut keys: Vec<&Vec<Edge>> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.iter()
        .map(|k| (a.get(*k).unwrap_or(&0.0) - b.get(*k).unwrap_or(&0.0)).abs())
        .sum::<f64>()
        / 2.0
}

/// Pearson chi-square p-value of `observed` against `expected` probabilities.
pub fn chi_square_p(observed: &[u64], expected: &[f64]) -> f64 {
    let total: u64 = observed.iter().sum();
    let stat: f64 = observed
        .iter()
        .zip(expected)
        .map(|(&o, &p)| {
            let e = p * total as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let dist = ChiSquared::new((observed.len() - 1) as f64).unwrap();
    1.0 - dist.cdf(stat)
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(a: &[f64], b: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&i, &j| v[i].partial_cmp(&v[j]).unwrap());
        let mut out = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let rank = (i + j) as f64 / 2.0 + 1.0;
            for k in i..=j {
                out[idx[k]] = rank;
            }
            i = j + 1;
        }
        out
    }
    let (ra, rb) = (ranks(a), ranks(b));
    let n = a.len() as f64;
    let ma = ra.iter().sum::<f64>() / n;
    let mb = rb.iter().sum::<f64>() / n;
    let cov: f64 = ra.iter().zip(&rb).map(|(x, y)| (x - ma) * (y - mb)).sum();
    let va: f64 = ra.iter().map(|x| (x - ma).powi(2)).sum();
    let vb: f64 = rb.iter().map(|y| (y - mb).powi(2)).sum();
    cov / (va * vb).sqrt()
}

/// One representative per isomorphism class of graphs on `n` vertices with
/// `m` edges, found by canonicalizing every labeled graph under all vertex
/// permutations.
pub fn isomorphism_classes(n: usize, m: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let perms = permutations(n);
    let mut canon_seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &(u, v))| {
                        let (a, b) = (p[u as usize], p[v as usize]);
                        1u64 << pairs
                            .iter()
                            .position(|&q| q == (a.min(b), a.max(b)))
                            .unwrap()
                    })
                    .fold(0, |x, y| x | y)
            })
            .min()
            .unwrap();
        if canon_seen.insert(canon) {
            reps.push(from_mask(n, canon));
        }
    }
    reps
}

fn permutations(n: usize) -> Vec<Vec<VertexId>> {
    fn go(prefix: &mut Vec<VertexId>, n: usize, out: &mut Vec<Vec<VertexId>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n as VertexId {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Every perfect matching of `stubs` items, as lists of index pairs.
pub fn perfect_matchings(count: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = rest[0];
        for i in 1..rest.len() {
            let remaining: Vec<usize> = rest[1..]
                .iter()
                .enumerate()
                .filter(|&(j, _)| j + 1 != i)
                .map(|(_, &s)| s)
                .collect();
            acc.push((first, rest[i]));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let items: Vec<usize> = (0..count).collect();
    let mut out = Vec::new();
    go(&items, &mut Vec::new(), &mut out);
    out
}
