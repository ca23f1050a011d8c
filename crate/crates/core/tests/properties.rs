mod common;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use robustnet::classical::{betweenness_with, Arithmetic, EndpointMode, FLOAT_TOLERANCE};
use robustnet::connectivity::{count_min_edge_cuts, edge_connectivity};
use robustnet::graph::parse_edge_list;
use robustnet::reliability::reliability_coefficients;
use robustnet::report::{compare_graphs, Measure, Winner};
use robustnet::spectral::spanning_tree_count;
use robustnet::Graph;

/// Any simple graph on 1..=9 vertices.
fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Connected graph on 2..=max_n vertices: a random tree plus extra edges.
fn connected_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2usize..=max_n).prop_flat_map(move |n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = prop::collection::vec((0..n, 0..n), 0..=max_extra);
        (parents, extra).prop_map(move |(parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p));
            let chords = extra.into_iter().filter(|(u, v)| u != v);
            Graph::new(n, tree.chain(chords)).unwrap()
        })
    })
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn edge_list_round_trip(g in any_graph()) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g.clone());
        prop_assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn degree_sum_and_symmetry(g in any_graph()) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        for u in 0..g.n() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
                prop_assert!(g.has_edge(u, v) && g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn add_then_remove_is_identity(g in any_graph(), pick in any::<prop::sample::Index>()) {
        let absent = g.complement_nonedges();
        prop_assume!(!absent.is_empty());
        let (u, v) = absent[pick.index(absent.len())];
        let h = g.with_edge(u, v).unwrap();
        prop_assert_eq!(h.m(), g.m() + 1);
        prop_assert_eq!(h.without_edge(u, v).unwrap(), g.clone());
        prop_assert!(g.with_edge(u, u).is_err());
    }

    #[test]
    fn reliability_is_monotone_in_p(g in connected_graph(7, 8)) {
        let poly = reliability_coefficients(&g).unwrap();
        let mut last = 0.0;
        for i in 0..=40 {
            let p = i as f64 / 40.0;
            let r = poly.eval(p).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&r));
            prop_assert!(r >= last - 1e-12, "Rel fell at p={}", p);
            last = r;
        }
        prop_assert!((poly.eval(1.0).unwrap() - 1.0).abs() < 1e-12);
        let exact = poly.eval_exact(&BigRational::new(BigInt::from(3), BigInt::from(7))).unwrap();
        prop_assert!((exact.to_f64().unwrap() - poly.eval(3.0 / 7.0).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn reliability_coefficients_tie_to_cuts_and_trees(g in connected_graph(7, 8)) {
        let poly = reliability_coefficients(&g).unwrap();
        let f = poly.coefficients();
        let (n, m) = (g.n(), g.m());
        // removing m - n + 1 edges leaves a spanning tree
        prop_assert_eq!(&f[m + 1 - n], &spanning_tree_count(&g).unwrap());
        prop_assert!(f[m + 2 - n..].iter().all(|x| x == &BigUint::from(0u32)));
        let ke = edge_connectivity(&g).unwrap();
        prop_assert_eq!(binomial(m, ke) - &f[ke], BigUint::from(count_min_edge_cuts(&g).unwrap()));
    }

    #[test]
    fn adding_an_edge_never_lowers_reliability(g in connected_graph(6, 5), pick in any::<prop::sample::Index>()) {
        let absent = g.complement_nonedges();
        prop_assume!(!absent.is_empty());
        let (u, v) = absent[pick.index(absent.len())];
        let (a, b) = (reliability_coefficients(&g).unwrap(), reliability_coefficients(&g.with_edge(u, v).unwrap()).unwrap());
        for p in [0.1, 0.5, 0.9] {
            prop_assert!(b.eval(p).unwrap() >= a.eval(p).unwrap() - 1e-12);
        }
    }

    #[test]
    fn float_betweenness_matches_exact(g in connected_graph(10, 12)) {
        for mode in [EndpointMode::Exclude, EndpointMode::IncludeFull, EndpointMode::IncludeHalf] {
            let exact = betweenness_with(&g, mode, Arithmetic::Exact).unwrap();
            let float = betweenness_with(&g, mode, Arithmetic::Float).unwrap();
            let ex = exact.exact.unwrap();
            for (a, b) in ex.vertex_scores.iter().chain(&ex.edge_scores).zip(float.vertex_scores.iter().chain(&float.edge_scores)) {
                let a = a.to_f64().unwrap();
                prop_assert!((a - b).abs() <= FLOAT_TOLERANCE * a.abs().max(1.0));
            }
        }
    }

    /// Adding an edge never makes the smaller graph strictly more robust,
    /// except under maximum edge betweenness and clustering.
    #[test]
    fn compare_respects_edge_addition(g in connected_graph(7, 6), pick in any::<prop::sample::Index>()) {
        let absent = g.complement_nonedges();
        prop_assume!(!absent.is_empty());
        let (u, v) = absent[pick.index(absent.len())];
        let h = g.with_edge(u, v).unwrap();
        for row in compare_graphs(&g, &h, EndpointMode::IncludeFull) {
            if matches!(row.measure, Some(Measure::MaxEdgeBetweenness | Measure::Clustering)) {
                continue;
            }
            prop_assert!(row.winner != Winner::First, "{} favours the graph without {}-{}", row.label, u, v);
        }
    }
}

#[test]
fn clustering_can_drop_when_an_edge_is_added() {
    // triangle 0-1-2 with a tail 0-4-3; the chord 1-3 breaks vertex 1's closed neighbourhood
    let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 4), (3, 4)]).unwrap();
    let h = g.with_edge(1, 3).unwrap();
    let row = compare_graphs(&g, &h, EndpointMode::IncludeFull)
        .into_iter()
        .find(|r| r.measure == Some(Measure::Clustering))
        .unwrap();
    assert_eq!(row.winner, Winner::First);
    assert!(common::clustering(&h) < common::clustering(&g));
}
