use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Number of vertices having each degree. Degrees with no vertices are
/// absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHistogram {
    counts: BTreeMap<u32, u64>,
    n_total: u64,
}

impl DegreeHistogram {
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut h = Self::default();
        for d in degrees {
            *h.counts.entry(d as u32).or_default() += 1;
            h.n_total += 1;
        }
        h
    }

    /// Builds a histogram from explicit `(degree, count)` pairs; zero counts
    /// are dropped.
    pub fn from_counts<I: IntoIterator<Item = (u32, u64)>>(pairs: I) -> Self {
        let mut h = Self::default();
        for (d, c) in pairs {
            if c > 0 {
                *h.counts.entry(d).or_default() += c;
                h.n_total += c;
            }
        }
        h
    }

    pub fn count(&self, degree: u32) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// `(degree, count)` in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn n_total(&self) -> u64 {
        self.n_total
    }

    pub fn distinct_degrees(&self) -> usize {
        self.counts.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Σ degree · count, i.e. twice the edge count.
    pub fn degree_sum(&self) -> u64 {
        self.iter().map(|(d, c)| u64::from(d) * c).sum()
    }

    /// `degree,count` rows under a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,count\n");
        for (d, c) in self.iter() {
            let _ = writeln!(out, "{d},{c}");
        }
        out
    }
}

pub fn degree_histogram(g: &Graph) -> DegreeHistogram {
    DegreeHistogram::from_degrees(g.degrees())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::gen_er_gnm;
    use crate::rng::SimRng;

    #[test]
    fn small_graphs() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            degree_histogram(&tri).iter().collect::<Vec<_>>(),
            vec![(2, 3)]
        );
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let h = degree_histogram(&star);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(1, 4), (4, 1)]);
        assert_eq!(h.to_csv(), "degree,count\n1,4\n4,1\n");
        let empty = degree_histogram(&Graph::new(3).unwrap());
        assert_eq!(empty.count(0), 3);
    }

    #[test]
    fn handshake_identity() {
        let g = gen_er_gnm(500, 1500, &mut SimRng::new(8)).unwrap();
        let h = degree_histogram(&g);
        assert_eq!(h.degree_sum(), 3000);
        assert_eq!(h.n_total(), 500);
    }
}
