mod common;

use common::{c, graph, rng, unit};
use proptest::prelude::*;
use rand::Rng;
use tutte_zeros::graph::{
    amplification, dual_weight, interpolated_degree, interpolated_weight, prime_weight, transform_weights,
};
use tutte_zeros::io::{graph_from_json, graph_from_lines, graph_to_json, parse_graph};
use tutte_zeros::{degree_quantities, EdgeWeightView, Error, WeightMode, WeightedGraph};

#[test]
fn construction() {
    let k2 = WeightedGraph::new(["a", "b"], [(0, 1, c(2.0, 0.0))]).unwrap();
    assert_eq!(k2.labels(), ["a", "b"]);
    assert_eq!(k2.edges()[0].w, c(2.0, 0.0));
    assert!(k2.is_simple());

    let single = WeightedGraph::new(["a"], []).unwrap();
    assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));

    assert!(matches!(
        WeightedGraph::new(["a", "b"], [(0, 0, c(1.0, 0.0))]),
        Err(Error::LoopEdge { .. })
    ));
    assert!(matches!(
        WeightedGraph::new(["a", "b"], [(0, 2, c(1.0, 0.0))]),
        Err(Error::BadIndex { .. })
    ));
}

#[test]
fn simplicity_flag() {
    assert!(!unit(2, &[(0, 1), (1, 0)]).is_simple());
    assert!(unit(3, &[(0, 1), (1, 2)]).is_simple());
}

#[test]
fn parallel_reduction_examples() {
    let w = c(0.3, -1.2);
    let g = graph(2, &[(0, 1, w), (0, 1, w)]);
    let r = g.parallel_reduce();
    assert!(r.is_simple());
    assert_eq!(r.edge_count(), 1);
    assert!((r.edges()[0].w - ((1.0 + w) * (1.0 + w) - 1.0)).norm() < 1e-15);

    let two = unit(2, &[(0, 1), (0, 1)]).parallel_reduce();
    assert_eq!(two.edges()[0].w, c(3.0, 0.0));

    let simple = graph(3, &[(0, 1, c(1.0, 2.0)), (1, 2, c(-0.5, 0.1))]);
    assert_eq!(simple.parallel_reduce(), simple);
}

#[test]
fn degree_examples() {
    let w = c(3.0, 4.0);
    let k2 = graph(2, &[(0, 1, w)]);
    let d = degree_quantities(&k2);
    let a = (1.0 + w).norm();
    assert!((d.delta - 5.0).abs() < 1e-15);
    assert!((d.delta_prime - 5.0 / a).abs() < 1e-15);
    assert!((d.delta_tilde - 5.0 / a.sqrt()).abs() < 1e-15);
    assert!((d.psi - a).abs() < 1e-15);
    assert!((d.lambda().unwrap() - a.powf(-0.5)).abs() < 1e-15);

    let n = 5;
    let cn = WeightedGraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n, w))).unwrap();
    let d = degree_quantities(&cn);
    assert!((d.delta_prime - 2.0 * 5.0 / a).abs() < 1e-14);
    assert!((d.psi - a * a).abs() < 1e-12);

    let empty = WeightedGraph::from_edges(3, []).unwrap();
    let d = degree_quantities(&empty);
    assert_eq!((d.delta, d.delta_prime, d.delta_tilde, d.psi), (0.0, 0.0, 0.0, 1.0));
    assert!(matches!(d.lambda(), Err(Error::DegenerateLambda)));
}

#[test]
fn weight_views() {
    assert_eq!(dual_weight(c(1.0, 0.0)), Some(c(-0.5, 0.0)));
    let back = dual_weight(dual_weight(c(1.0, 0.0)).unwrap()).unwrap();
    assert!((back - 1.0).norm() < 1e-15);
    assert_eq!(dual_weight(c(-1.0, 0.0)), None);

    // |1 + w| ≤ 1, so the minimum is |w|.
    let w = c(-0.5, 0.3);
    assert_eq!(prime_weight(w), w.norm());

    let g = graph(3, &[(0, 1, c(2.0, 1.0)), (1, 2, c(-0.4, 0.2)), (0, 2, c(5.0, -3.0))]);
    for root in 0..3 {
        let zero = transform_weights(&g, &EdgeWeightView::interpolated(root, 0.0).unwrap()).unwrap();
        let prime = transform_weights(&g, &EdgeWeightView::prime()).unwrap();
        let one = transform_weights(&g, &EdgeWeightView::interpolated(root, 1.0).unwrap()).unwrap();
        let tilde = transform_weights(&g, &EdgeWeightView::tilde(root)).unwrap();
        for i in 0..3 {
            assert!((zero.edges()[i].w - prime.edges()[i].w).norm() < 1e-15);
            assert!((one.edges()[i].w - tilde.edges()[i].w).norm() < 1e-15);
        }
    }

    let dual = transform_weights(&g, &EdgeWeightView::dual()).unwrap();
    let twice = transform_weights(&dual, &EdgeWeightView::dual()).unwrap();
    for (a, b) in g.edges().iter().zip(twice.edges()) {
        assert!((a.w - b.w).norm() < 1e-14);
    }
    let singular = graph(2, &[(0, 1, c(-1.0, 0.0))]);
    assert!(matches!(
        transform_weights(&singular, &EdgeWeightView::dual()),
        Err(Error::SingularDual(0))
    ));
    for mode in [WeightMode::Tilde, WeightMode::DoublePrime, WeightMode::Interpolated] {
        assert!(matches!(
            EdgeWeightView::new(mode, None, Some(0.5)),
            Err(Error::MissingRoot(_))
        ));
    }
    assert!(matches!(
        EdgeWeightView::interpolated(0, 1.5),
        Err(Error::BadInterpolation(_))
    ));
    for view in [EdgeWeightView::raw(), EdgeWeightView::prime(), EdgeWeightView::tilde(1), EdgeWeightView::double_prime(2)] {
        let t = transform_weights(&g, &view).unwrap();
        assert!(t.edges().iter().all(|e| e.w.im == 0.0 && e.w.re >= 0.0), "{:?}", view.mode());
    }
}

#[test]
fn induced_subgraphs() {
    let g = graph(3, &[(0, 1, c(1.0, 1.0)), (1, 2, c(2.0, 0.0)), (0, 2, c(3.0, -1.0))]);
    assert_eq!(g.induced_subgraph(&[0, 1, 2]).unwrap(), g);
    let one = g.induced_subgraph(&[1]).unwrap();
    assert_eq!((one.vertex_count(), one.edge_count()), (1, 0));
    let pair = g.induced_subgraph(&[0, 2]).unwrap();
    assert_eq!(pair.edge_count(), 1);
    assert_eq!(pair.edges()[0].w, c(3.0, -1.0));
    assert_eq!(pair.labels(), ["0", "2"]);
    assert!(matches!(g.induced_subgraph(&[]), Err(Error::EmptySet)));
}

#[test]
fn parallel_edge_inequalities_on_random_pairs() {
    let mut r = rng(11);
    for _ in 0..10_000 {
        let w1 = c(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let w2 = c(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let w3 = (1.0 + w1) * (1.0 + w2) - 1.0;
        assert!(amplification(w3) <= amplification(w1) * amplification(w2) * (1.0 + 1e-14));
        assert!(prime_weight(w3) <= (prime_weight(w1) + prime_weight(w2)) * (1.0 + 1e-14) + 1e-300);
    }
}

#[test]
fn file_formats() {
    let g = WeightedGraph::new(["x", "y", "z"], [(0, 1, c(1.5, -2.0)), (1, 2, c(0.0, 1.0))]).unwrap();
    assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
    let lines = graph_from_lines("# comment\n0 1 1.5 -2\n1 2 0 1  # trailing\n").unwrap();
    assert_eq!(lines.edges(), WeightedGraph::from_edges(3, [(0, 1, c(1.5, -2.0)), (1, 2, c(0.0, 1.0))]).unwrap().edges());
    assert!(graph_from_lines("0 0 1").is_err());
    assert!(matches!(graph_from_json("{"), Err(Error::Parse(_))));
}

fn arb_weight() -> impl Strategy<Value = num_complex::Complex64> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| c(a, b))
}

fn arb_graph() -> impl Strategy<Value = WeightedGraph> {
    (2usize..6).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n - 1, arb_weight()), 1..9).prop_map(move |raw| {
            let edges = raw.into_iter().map(|(u, v, w)| (u, if v >= u { v + 1 } else { v }, w));
            WeightedGraph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn degree_orderings(g in arb_graph()) {
        let d = degree_quantities(&g);
        prop_assert!(d.psi >= 1.0);
        prop_assert!(d.delta_prime <= d.delta_tilde * (1.0 + 1e-14));
        prop_assert!(d.delta_tilde <= d.delta * (1.0 + 1e-14));
        if let Some(l) = d.lambda {
            prop_assert!(l <= 1.0 + 1e-14);
            prop_assert!(d.psi.powf(-0.5) <= l * (1.0 + 1e-12));
        }
        let mut prev = interpolated_degree(&g, 0.0);
        prop_assert!((prev - d.delta_prime).abs() <= 1e-12 * (1.0 + prev));
        for k in 1..=10 {
            let a = k as f64 / 10.0;
            let next = interpolated_degree(&g, a);
            prop_assert!(next >= prev * (1.0 - 1e-14));
            prev = next;
        }
        prop_assert!((prev - d.delta_tilde).abs() <= 1e-12 * (1.0 + prev));
    }

    #[test]
    fn interpolated_weight_endpoints(w in arb_weight()) {
        prop_assert!((interpolated_weight(w, 0.0) - prime_weight(w)).abs() <= 1e-15 * (1.0 + w.norm()));
    }

    #[test]
    fn parallel_reduction_is_idempotent_and_contracting(g in arb_graph()) {
        let r = g.parallel_reduce();
        prop_assert!(r.is_simple());
        prop_assert_eq!(r.parallel_reduce(), r.clone());
        let (a, b) = (degree_quantities(&g), degree_quantities(&r));
        prop_assert!(b.delta_prime <= a.delta_prime * (1.0 + 1e-12) + 1e-300);
        prop_assert!(b.psi <= a.psi * (1.0 + 1e-12));
    }

    #[test]
    fn json_round_trip(g in arb_graph()) {
        prop_assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }
}
