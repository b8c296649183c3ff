mod common;

use common::{naive_elimination, random_graph, subset_degeneracy};
use proptest::prelude::*;
use rand::Rng;
use steadystate::{
    degeneracy, degree_histogram, fit_power_law, gen_er_gnm, ss_run, FitMode, Graph, SimRng,
    SsParams, VertexId,
};

#[test]
fn matches_subset_oracle_on_g8() {
    let mut rng = SimRng::new(2);
    for _ in 0..50 {
        let m = rng.random_range(0..=28);
        let g = gen_er_gnm(8, m, &mut rng).unwrap();
        assert_eq!(
            degeneracy(&g).d_max,
            subset_degeneracy(&g),
            "{:?}",
            g.sorted_edges()
        );
    }
}

#[test]
fn certificate_equals_lowest_id_scan() {
    let mut rng = SimRng::new(3);
    for _ in 0..100 {
        let n = rng.random_range(1..=120);
        let p = rng.random_range(0.0..0.2);
        let g = random_graph(n, p, &mut rng);
        let (d_max, order) = naive_elimination(&g, |_| 0);
        let res = degeneracy(&g);
        assert_eq!(res.d_max, d_max);
        let order: Vec<VertexId> = order.into_iter().map(|v| v as VertexId).collect();
        assert_eq!(res.elimination_order, order);
    }
}

#[test]
fn certificate_degrees_replay() {
    let g = gen_er_gnm(200, 700, &mut SimRng::new(4)).unwrap();
    let res = degeneracy(&g);
    let mut alive = [true; 200];
    for (&v, &d) in res.elimination_order.iter().zip(&res.elimination_degrees) {
        let live = g
            .neighbors(v)
            .iter()
            .filter(|&&w| alive[w as usize])
            .count();
        assert_eq!(live, d);
        alive[v as usize] = false;
    }
    assert_eq!(res.d_max, *res.elimination_degrees.iter().max().unwrap());
}

#[test]
fn tie_break_does_not_change_d_max() {
    let mut rng = SimRng::new(5);
    for _ in 0..100 {
        let n = rng.random_range(2..=14);
        let g = random_graph(n, rng.random_range(0.1..0.7), &mut rng);
        let expected = degeneracy(&g).d_max;
        let mut picker = SimRng::new(rng.random());
        let (randomized, _) = naive_elimination(&g, |tied| picker.random_range(0..tied.len()));
        assert_eq!(randomized, expected);
    }
}

#[test]
fn raw_fit_improves_after_rewiring() {
    let params = SsParams::new(3000, 9000, 10_000_000, 11).with_checkpoints(vec![0]);
    let run = ss_run(&params).unwrap();
    let initial = fit_power_law(&run.snapshots[0].histogram, FitMode::RawCounts).unwrap();
    let last = fit_power_law(&degree_histogram(&run.graph), FitMode::RawCounts).unwrap();
    assert!(
        last.r_squared > initial.r_squared,
        "initial {} final {}",
        initial.r_squared,
        last.r_squared
    );
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..30, any::<u64>(), 0.0f64..0.5)
        .prop_map(|(n, seed, p)| random_graph(n, p, &mut SimRng::new(seed)))
}

proptest! {
    #[test]
    fn bounded_by_max_degree(g in small_graph()) {
        prop_assert!(degeneracy(&g).d_max <= g.max_degree());
    }

    #[test]
    fn monotone_under_edge_deletion(g in small_graph(), seed in any::<u64>()) {
        let mut sub = g.clone();
        let mut rng = SimRng::new(seed);
        let drop = sub.edge_count() / 2;
        for _ in 0..drop {
            let (u, v) = sub.sample_uniform_edge(&mut rng).unwrap();
            sub.remove_edge(u, v).unwrap();
        }
        prop_assert!(degeneracy(&sub).d_max <= degeneracy(&g).d_max);
    }

    #[test]
    fn slope_and_r2_invariant_under_scaling(counts in prop::collection::vec(1u64..500, 3..30), k in 2u64..50) {
        let h = steadystate::DegreeHistogram::from_counts(
            counts.iter().enumerate().map(|(i, &c)| (i as u32 + 1, c)),
        );
        let scaled = steadystate::DegreeHistogram::from_counts(h.iter().map(|(d, c)| (d, c * k)));
        let a = fit_power_law(&h, FitMode::RawCounts).unwrap();
        let b = fit_power_law(&scaled, FitMode::RawCounts).unwrap();
        prop_assert!((a.alpha - b.alpha).abs() < 1e-9);
        prop_assert!((a.r_squared - b.r_squared).abs() < 1e-9);
        prop_assert!((0.0..=1.0).contains(&a.r_squared));
    }
}
