//! Exhaustive verification sweeps over the small-graph catalogue.
//!
//! Every sweep draws its randomness from one generator seeded by the
//! caller, in a fixed order, so a given seed always reproduces the same
//! instances and the same report.

use num_complex::Complex64;
use serde::Serialize;

use crate::catalog::{connected_multigraphs_upto, connected_simple_graphs_upto, simple_graphs};
use crate::counting::{cmk, counting_records};
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::io::graph_to_value;
use crate::penrose::{extended_penrose_bounds, penrose_identity_eval, verify_partition};
use crate::polymer::{polymer_partition, tutte_polymer_weights};
use crate::sampling::{sample_q, sample_weights, seeded_rng, WeightRegime};
use crate::tutte::{connected_gen_poly, z_polynomial};
use crate::zeros::analyze;

/// One failed instance, with the graph serialized so it can be replayed.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub graph: serde_json::Value,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub check: String,
    pub seed: Option<u64>,
    pub graphs: usize,
    pub instances: usize,
    /// Worst relative error seen, for the identity checks.
    pub worst_relative_error: Option<f64>,
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    fn new(check: &str, seed: Option<u64>) -> Self {
        SweepSummary {
            check: check.into(),
            seed,
            graphs: 0,
            instances: 0,
            worst_relative_error: None,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, g: &WeightedGraph, detail: String) {
        self.failures.push(Failure {
            graph: graph_to_value(g),
            detail,
        });
    }

    fn record_error(&mut self, err: f64) {
        let worst = self.worst_relative_error.get_or_insert(0.0);
        // NaN must register as a failure, not vanish in `max`.
        if err.is_nan() || err > *worst {
            *worst = err;
        }
    }
}

fn relative_error(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Cycles through the three weight regimes draw by draw.
fn regime_for(draw: usize) -> WeightRegime {
    WeightRegime::ALL[draw % WeightRegime::ALL.len()]
}

/// Penrose partition for every connected simple graph with at most
/// `max_vertices` vertices and every root: the intervals `[T, R(T)]` are
/// disjoint, cover the connected spanning subsets, and their sizes add up.
pub fn penrose_partition_sweep(max_vertices: usize) -> Result<SweepSummary> {
    let mut s = SweepSummary::new("penrose-partition", None);
    for g in connected_simple_graphs_upto(max_vertices)? {
        s.graphs += 1;
        for root in 0..g.vertex_count() {
            s.instances += 1;
            let r = verify_partition(&g, root)?;
            let total: u64 = r.interval_sizes.iter().sum();
            if !r.holds() || total != r.connected_count as u64 {
                s.fail(
                    &g,
                    format!(
                        "root {root}: disjoint={} covering={} interval total {total} vs {} connected",
                        r.disjoint, r.covering, r.connected_count
                    ),
                );
            }
        }
    }
    Ok(s)
}

/// Penrose identity and both chains of extended Penrose inequalities on
/// `draws` random complex weightings of each connected simple graph.
pub fn penrose_chain_sweep(max_vertices: usize, seed: u64, draws: usize) -> Result<SweepSummary> {
    const IDENTITY_TOLERANCE: f64 = 1e-10;
    const CHAIN_SLACK: f64 = 1e-9;
    let mut rng = seeded_rng(seed);
    let mut s = SweepSummary::new("penrose-chains", Some(seed));
    for base in connected_simple_graphs_upto(max_vertices)? {
        s.graphs += 1;
        for draw in 0..draws {
            let g = base.with_weights(&sample_weights(&mut rng, regime_for(draw), base.edge_count()));
            let c = connected_gen_poly(&g)?;
            for x in 0..g.vertex_count() {
                s.instances += 1;
                let err = relative_error(penrose_identity_eval(&g, x)?, c);
                s.record_error(err);
                if !(err <= IDENTITY_TOLERANCE) {
                    s.fail(&g, format!("root {x}: identity relative error {err:e}"));
                }
                let b = extended_penrose_bounds(&g, x)?;
                if !b.chains_hold(CHAIN_SLACK) {
                    s.fail(&g, format!("root {x}: chain violated {b:?}"));
                }
            }
        }
    }
    Ok(s)
}

/// `c_m(x) ≤` rooted bound `≤` Sokal bound for every simple graph with at
/// most `max_vertices` vertices, every root and `m ≤ m_max`, under unit
/// weights and `draws` random weightings.
pub fn counting_sweep(max_vertices: usize, m_max: usize, seed: u64, draws: usize) -> Result<SweepSummary> {
    const SLACK: f64 = 1e-12;
    let mut rng = seeded_rng(seed);
    let mut s = SweepSummary::new("counting-bounds", Some(seed));
    for n in 1..=max_vertices {
        for base in simple_graphs(n)? {
            s.graphs += 1;
            let mut weightings = vec![base.clone()];
            for draw in 0..draws {
                weightings.push(base.with_weights(&sample_weights(&mut rng, regime_for(draw), base.edge_count())));
            }
            for g in &weightings {
                for x in 0..n {
                    s.instances += 1;
                    for rec in counting_records(g, x, m_max)? {
                        if !rec.holds(SLACK) {
                            s.fail(g, format!("root {x}: {rec:?}"));
                        }
                    }
                }
            }
        }
    }
    Ok(s)
}

/// The two identities for `C(m, κ)`: the `k`-fold convolution of `C(·, 1)`
/// for integer `k ≤ 4`, `m ≤ 8`, and the shift identity at sampled real
/// `κ`, `z` for `m ≤ 10`.
pub fn cmk_identity_sweep(seed: u64, samples: usize) -> SweepSummary {
    use rand::Rng;
    const TOLERANCE: f64 = 1e-9;
    let mut s = SweepSummary::new("cmk-identities", Some(seed));
    let empty = WeightedGraph::from_edges(0, []).expect("empty graph");
    let check = |s: &mut SweepSummary, lhs: f64, rhs: f64, what: String| {
        s.instances += 1;
        let err = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0);
        s.record_error(err);
        if !(err <= TOLERANCE) {
            s.fail(&empty, format!("{what}: {lhs} vs {rhs}"));
        }
    };
    for k in 1..=4usize {
        // conv[m] = Σ over compositions of m into the parts so far.
        let mut conv: Vec<f64> = (0..=8).map(|m| cmk(m, 1.0)).collect();
        for _ in 1..k {
            conv = (0..=8)
                .map(|m| (0..=m).map(|j| conv[j] * cmk(m - j, 1.0)).sum())
                .collect();
        }
        for (m, &v) in conv.iter().enumerate() {
            check(&mut s, cmk(m, k as f64), v, format!("convolution m={m} k={k}"));
        }
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..samples {
        let kappa: f64 = rng.gen_range(-3.0..5.0);
        let z: f64 = rng.gen_range(-3.0..3.0);
        for m in 0..=10usize {
            let mut rhs = 0.0;
            let mut zf = 1.0;
            for f in 0..=m {
                rhs += zf * cmk(m - f, kappa - z + f as f64);
                zf *= z / (f + 1) as f64;
            }
            check(&mut s, cmk(m, kappa), rhs, format!("shift m={m} kappa={kappa} z={z}"));
        }
    }
    s
}

/// `Ξ · q^{|V|} = Z_G(q)` on connected simple graphs with at most
/// `max_simple` vertices and multigraphs with at most `max_multi` vertices
/// and edge multiplicity `max_multiplicity`, each with one random weighting
/// and `q_draws` random fugacities.
pub fn polymer_identity_sweep(
    max_simple: usize,
    max_multi: usize,
    max_multiplicity: usize,
    seed: u64,
    q_draws: usize,
) -> Result<SweepSummary> {
    const TOLERANCE: f64 = 1e-10;
    let mut rng = seeded_rng(seed);
    let mut s = SweepSummary::new("polymer-identity", Some(seed));
    let mut graphs = connected_simple_graphs_upto(max_simple)?;
    graphs.extend(connected_multigraphs_upto(max_multi, max_multiplicity)?.into_iter().filter(|g| !g.is_simple()));
    for (i, base) in graphs.iter().enumerate() {
        s.graphs += 1;
        let g = base.with_weights(&sample_weights(&mut rng, regime_for(i), base.edge_count()));
        let z = z_polynomial(&g)?;
        for _ in 0..q_draws {
            s.instances += 1;
            let q = sample_q(&mut rng);
            let xi = polymer_partition(&tutte_polymer_weights(&g, q)?)?;
            let lhs = xi * q.powi(g.vertex_count() as i32);
            let err = relative_error(lhs, z.eval(q));
            s.record_error(err);
            if !(err <= TOLERANCE) {
                s.fail(&g, format!("q={q}: relative error {err:e}"));
            }
        }
    }
    Ok(s)
}

/// Zero-free discs against computed roots: every connected simple graph
/// with at most `max_simple` vertices (all discs) and every multigraph with
/// at most `max_multi` vertices and multiplicities up to 3 (first disc
/// only), `draws` weightings per regime.
pub fn zero_free_sweep(max_simple: usize, max_multi: usize, seed: u64, draws: usize) -> Result<SweepSummary> {
    let mut rng = seeded_rng(seed);
    let mut s = SweepSummary::new("zero-free", Some(seed));
    let mut graphs = connected_simple_graphs_upto(max_simple)?;
    graphs.extend(connected_multigraphs_upto(max_multi, 3)?.into_iter().filter(|g| !g.is_simple()));
    for base in &graphs {
        s.graphs += 1;
        for regime in WeightRegime::ALL {
            for _ in 0..draws {
                s.instances += 1;
                let g = base.with_weights(&sample_weights(&mut rng, regime, base.edge_count()));
                let r = analyze(&g)?;
                if !r.all_verified() {
                    s.fail(
                        &g,
                        format!(
                            "{}: q_max {} thm12 radius {} thm13 radius {:?}",
                            regime.name(),
                            r.q_max,
                            r.bounds.radius_thm12,
                            r.bounds.radius_thm13
                        ),
                    );
                }
            }
        }
    }
    Ok(s)
}
