mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;
use tutte_zeros::bounds::graph_bounds;
use tutte_zeros::catalog::{complete, connected_simple_graphs_upto, simple_graphs};
use tutte_zeros::polymer::{
    connected_weights_all_subsets, gkfp_margin, gkfp_optimal, kp_margin, kp_optimal, polymer_partition,
    tutte_polymer_weights, PolymerWeights,
};
use tutte_zeros::{z_eval, Error};

/// Ξ by recursion on the lowest uncovered vertex: it is either left
/// uncovered or covered by one polymer containing it.
fn brute_xi(rho: &PolymerWeights) -> Complex64 {
    fn go(rho: &PolymerWeights, free: u32) -> Complex64 {
        if free == 0 {
            return c(1.0, 0.0);
        }
        let low = free & free.wrapping_neg();
        let mut total = go(rho, free & !low);
        for (&m, &r) in &rho.weights {
            if m & low != 0 && m & !free == 0 {
                total += r * go(rho, free & !m);
            }
        }
        total
    }
    go(rho, (1u32 << rho.host_vertex_count) - 1)
}

fn random_polymers(n: usize, count: usize, r: &mut impl Rng) -> PolymerWeights {
    let mut rho = PolymerWeights::new(n).unwrap();
    for _ in 0..count {
        let members: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.5)).collect();
        if !members.is_empty() {
            rho.set(&members, random_weight(r)).unwrap();
        }
    }
    rho
}

#[test]
fn tutte_weight_examples() {
    let w = c(0.8, -0.3);
    let q = c(-1.5, 2.0);
    let k2 = graph(2, &[(0, 1, w)]);
    let rho = tutte_polymer_weights(&k2, q).unwrap();
    assert_eq!(rho.weights.len(), 1);
    assert!((rho.get(0b11) - w / q).norm() < 1e-15);
    assert!((polymer_partition(&rho).unwrap() - (1.0 + w / q)).norm() < 1e-15);

    let empty = tutte_zeros::WeightedGraph::from_edges(3, []).unwrap();
    let rho = tutte_polymer_weights(&empty, q).unwrap();
    assert!(rho.weights.is_empty());
    assert_eq!(polymer_partition(&rho).unwrap(), c(1.0, 0.0));

    // K3 with unit weights: three edges and the triangle with C = 4.
    let rho = tutte_polymer_weights(&complete(3), c(2.0, 0.0)).unwrap();
    assert_eq!(rho.weights.len(), 4);
    assert!((rho.get(0b111) - c(1.0, 0.0)).norm() < 1e-15);
    assert!((rho.get(0b011) - c(0.5, 0.0)).norm() < 1e-15);
    assert!(matches!(tutte_polymer_weights(&k2, c(0.0, 0.0)), Err(Error::ZeroQ)));
}

#[test]
fn connected_weights_match_brute_force() {
    let mut r = rng(51);
    for n in 1..=5 {
        for g in simple_graphs(n).unwrap() {
            let g = randomize(&g, &mut r);
            let all = connected_weights_all_subsets(&g).unwrap();
            for s in 1usize..1 << n {
                let verts: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
                let expect = brute_connected(&g.induced_subgraph(&verts).unwrap());
                assert!((all[s] - expect).norm() <= 1e-12 * (1.0 + expect.norm()));
            }
        }
    }
}

#[test]
fn polymer_identity() {
    let mut r = rng(52);
    for g in (1..=6).flat_map(|n| simple_graphs(n).unwrap()) {
        let g = randomize(&g, &mut r);
        let n = g.vertex_count() as i32;
        for _ in 0..5 {
            let q = tutte_zeros::sampling::sample_q(&mut r);
            let rho = tutte_polymer_weights(&g, q).unwrap();
            let lhs = q.powi(n) * polymer_partition(&rho).unwrap();
            assert!(rel(lhs, z_eval(&g, q).unwrap()) < 1e-10);
        }
    }
    for _ in 0..40 {
        let g = random_multigraph(5, 8, &mut r);
        let q = c(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let rho = tutte_polymer_weights(&g, q).unwrap();
        assert!(rel(q.powi(5) * polymer_partition(&rho).unwrap(), z_eval(&g, q).unwrap()) < 1e-10);
    }
}

#[test]
fn partition_matches_recursion() {
    let mut r = rng(53);
    for n in 1..=7 {
        for _ in 0..20 {
            let rho = random_polymers(n, 12, &mut r);
            let a = polymer_partition(&rho).unwrap();
            let b = brute_xi(&rho);
            assert!((a - b).norm() <= 1e-12 * (1.0 + b.norm()));
        }
    }
}

#[test]
fn single_edge_optima() {
    // One polymer of size two and weight ρ: GKFP optimum at ln 2 with
    // margin 4ρ, Kotecký–Preiss at 1/2 with margin 2eρ.
    for (w, q) in [(1.0, 10.0), (3.0, 7.0), (0.2, 0.3)] {
        let g = graph(2, &[(0, 1, c(w, 0.0))]);
        let rho = tutte_polymer_weights(&g, c(0.0, q)).unwrap();
        let ratio = w / q;
        let gk = gkfp_optimal(&rho).unwrap();
        assert!((gk.alpha_star - std::f64::consts::LN_2).abs() < 1e-7);
        assert!((gk.margin - 4.0 * ratio).abs() < 1e-12 * ratio);
        let kp = kp_optimal(&rho).unwrap();
        assert!((kp.alpha_star - 0.5).abs() < 1e-7);
        assert!((kp.margin - 2.0 * std::f64::consts::E * ratio).abs() < 1e-12 * ratio);
    }
    // The GKFP boundary for K2 sits at |q| = 4|w|.
    let g = graph(2, &[(0, 1, c(2.0, 0.0))]);
    assert!(gkfp_optimal(&tutte_polymer_weights(&g, c(8.0 * (1.0 + 1e-9), 0.0)).unwrap()).unwrap().margin <= 1.0);
    assert!(gkfp_optimal(&tutte_polymer_weights(&g, c(8.0 * (1.0 - 1e-9), 0.0)).unwrap()).unwrap().margin > 1.0);
}

#[test]
fn margins_compare_and_scale() {
    let mut r = rng(54);
    for n in 2..=6 {
        for _ in 0..20 {
            let rho = random_polymers(n, 10, &mut r);
            let (Ok(gk), Ok(kp)) = (gkfp_optimal(&rho), kp_optimal(&rho)) else {
                continue;
            };
            assert!(kp.margin >= gk.margin * (1.0 - 1e-12));
            for a in [0.01, 0.3, 1.0, 4.0] {
                assert!(kp_margin(&rho, a) >= gkfp_margin(&rho, a));
                assert!(gkfp_margin(&rho, a) >= gk.margin * (1.0 - 1e-9));
            }
            // Homogeneous of degree one in |c|, so α* does not move.
            let scale = c(0.0, -2.5);
            let scaled = gkfp_optimal(&rho.scaled(scale)).unwrap();
            assert!((scaled.margin - 2.5 * gk.margin).abs() <= 1e-9 * scaled.margin);
            assert!((scaled.alpha_star - gk.alpha_star).abs() <= 1e-6 * gk.alpha_star.max(1.0));
        }
    }
}

#[test]
fn small_margin_means_no_zero() {
    let mut r = rng(55);
    for n in 2..=6 {
        for _ in 0..40 {
            let rho = random_polymers(n, 10, &mut r);
            let Ok(gk) = gkfp_optimal(&rho) else { continue };
            // Rescale onto the boundary and rotate every weight adversarially.
            let t = 1.0 / gk.margin;
            for phase in [0.0, 1.0, 2.0, std::f64::consts::PI] {
                let scaled = rho.scaled(Complex64::from_polar(t, phase));
                assert!(gkfp_optimal(&scaled).unwrap().margin <= 1.0 + 1e-9);
                assert!(polymer_partition(&scaled).unwrap().norm() > 0.0);
            }
        }
    }
}

#[test]
fn degenerate_and_singleton_weights() {
    let mut rho = PolymerWeights::new(3).unwrap();
    assert!(matches!(gkfp_optimal(&rho), Err(Error::DegenerateWeights)));
    rho.set(&[1], c(0.5, 0.0)).unwrap();
    assert!(matches!(kp_optimal(&rho), Err(Error::DegenerateWeights)));
    // Singletons still enter Ξ.
    assert!((polymer_partition(&rho).unwrap() - c(1.5, 0.0)).norm() < 1e-15);
    assert!(matches!(rho.set(&[], c(1.0, 0.0)), Err(Error::EmptySet)));
    assert!(matches!(rho.set(&[3], c(1.0, 0.0)), Err(Error::BadIndex { .. })));
    assert!(matches!(PolymerWeights::new(13), Err(Error::TooLarge { .. })));
}

#[test]
fn json_round_trip() {
    let mut r = rng(56);
    let rho = random_polymers(5, 8, &mut r);
    assert_eq!(PolymerWeights::from_json(&rho.to_json(), Some(5)).unwrap(), rho);
    let parsed = PolymerWeights::from_json(r#"[{"S":[0,2],"rho":[0.5,-1]}]"#, None).unwrap();
    assert_eq!(parsed.host_vertex_count, 3);
    assert_eq!(parsed.get(0b101), c(0.5, -1.0));
}

#[test]
fn tutte_gas_is_controlled_outside_the_disc() {
    let mut r = rng(57);
    for g in connected_simple_graphs_upto(5).unwrap().into_iter().skip(1) {
        for _ in 0..10 {
            let g = randomize(&g, &mut r);
            let radius = graph_bounds(&g).radius_thm12;
            let q = Complex64::from_polar(radius * (1.0 + 1e-9), r.gen_range(0.0..std::f64::consts::TAU));
            let rho = tutte_polymer_weights(&g, q).unwrap();
            assert!(gkfp_optimal(&rho).unwrap().margin <= 1.0 + 1e-9);
            assert!(z_eval(&g, q).unwrap().norm() > 0.0);
        }
    }
}

proptest! {
    #[test]
    fn margin_is_monotone_in_scale(seed in 0u64..300, s in 1.0f64..10.0) {
        let mut r = rng(seed);
        let rho = random_polymers(4, 6, &mut r);
        for a in [0.1, 0.7, 2.0] {
            prop_assert!(gkfp_margin(&rho.scaled(c(s, 0.0)), a) >= gkfp_margin(&rho, a) * (1.0 - 1e-14));
        }
    }
}
