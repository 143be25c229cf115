//! Weighted counts of rooted connected subgraphs and their bounds.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_quantities, WeightedGraph};
use crate::tutte::check_size;

/// `c_0, …, c_{m_max}` at `x`: `c_m` is the sum of `∏|w_e|` over connected
/// `m`-edge subgraphs whose vertex set is the edge endpoints together with `x`.
pub fn c_m_all(g: &WeightedGraph, x: usize, m_max: usize) -> Result<Vec<f64>> {
    check_size(g)?;
    if g.vertex_count() > 64 {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: g.vertex_count(),
            limit: 64,
        });
    }
    if x >= g.vertex_count() {
        return Err(Error::BadIndex {
            index: 0,
            vertex: x,
            vertex_count: g.vertex_count(),
        });
    }
    let edges = g.edges();
    let abs: Vec<f64> = edges.iter().map(|e| e.w.norm()).collect();
    let mut out = vec![1.0];
    let mut level: Vec<u64> = vec![0];
    for _ in 1..=m_max {
        let mut next = HashSet::new();
        for &set in &level {
            let mut touched = 1u64 << x;
            for (i, e) in edges.iter().enumerate() {
                if set >> i & 1 == 1 {
                    touched |= 1 << e.u | 1 << e.v;
                }
            }
            for (i, e) in edges.iter().enumerate() {
                if set >> i & 1 == 0 && (touched >> e.u & 1 == 1 || touched >> e.v & 1 == 1) {
                    next.insert(set | 1 << i);
                }
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
        let sum = level
            .iter()
            .map(|&s| (0..edges.len()).filter(|i| s >> i & 1 == 1).map(|i| abs[i]).product::<f64>())
            .sum();
        out.push(sum);
        if level.is_empty() {
            out.resize(m_max + 1, 0.0);
            break;
        }
    }
    Ok(out)
}

pub fn c_m(g: &WeightedGraph, x: usize, m: usize) -> Result<f64> {
    Ok(c_m_all(g, x, m)?[m])
}

fn ln_factorial(m: usize) -> f64 {
    (2..=m).map(|k| (k as f64).ln()).sum()
}

fn factorial(m: usize) -> f64 {
    (2..=m).map(|k| k as f64).product()
}

/// `C(m, κ) = κ(m+κ)^{m−1}/m!` for `m ≥ 1`, and `C(0, κ) = 1`.
pub fn cmk(m: usize, kappa: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let base = m as f64 + kappa;
    if m <= 20 {
        return kappa * base.powi(m as i32 - 1) / factorial(m);
    }
    if kappa == 0.0 || (base == 0.0 && m > 1) {
        return 0.0;
    }
    let sign = kappa.signum() * if base < 0.0 && (m - 1) % 2 == 1 { -1.0 } else { 1.0 };
    let log = kappa.abs().ln() + (m - 1) as f64 * base.abs().ln() - ln_factorial(m);
    sign * log.exp()
}

/// `(m+1)^{m−1}/m! · Δ^m`.
pub fn counting_bound_sokal(delta: f64, m: usize) -> f64 {
    cmk(m, 1.0) * delta.powi(m as i32)
}

/// The weaker `e^m Δ^m`.
pub fn counting_bound_sokal_weak(delta: f64, m: usize) -> f64 {
    (std::f64::consts::E * delta).powi(m as i32)
}

/// `d(d + mD)^{m−1}/m!`, with `d` the weighted degree of the root and `D`
/// the maximum weighted degree once the root is removed.
pub fn counting_bound_rooted(d: f64, big_d: f64, m: usize) -> f64 {
    if m == 0 {
        return 1.0;
    }
    d * (d + m as f64 * big_d).powi(m as i32 - 1) / factorial(m)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingRecord {
    pub m: usize,
    pub value: f64,
    pub bound_sokal: f64,
    pub bound_rooted: f64,
}

impl CountingRecord {
    pub fn holds(&self, slack: f64) -> bool {
        self.value <= self.bound_rooted * (1.0 + slack)
            && self.bound_rooted <= self.bound_sokal * (1.0 + slack)
    }
}

/// The graph with `x` deleted, vertices renumbered in order.
pub(crate) fn without_vertex(g: &WeightedGraph, x: usize) -> Option<WeightedGraph> {
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != x).collect();
    g.induced_subgraph(&rest).ok()
}

/// `c_m(x)` next to both closed-form bounds for `m = 0..=m_max`.
pub fn counting_records(g: &WeightedGraph, x: usize, m_max: usize) -> Result<Vec<CountingRecord>> {
    let values = c_m_all(g, x, m_max)?;
    let dq = degree_quantities(g);
    let d = dq.degree[x];
    let big_d = without_vertex(g, x).map_or(0.0, |h| degree_quantities(&h).delta);
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(m, value)| CountingRecord {
            m,
            value,
            bound_sokal: counting_bound_sokal(dq.delta, m),
            bound_rooted: counting_bound_rooted(d, big_d, m),
        })
        .collect())
}

/// Right side of the root-deletion recursion for `c_m(x)`: a sum over
/// nonempty `F ⊆ E(x)` of `w(F)` times the convolution of `c_{m_i}` over the
/// far endpoints of `F`, computed in `G − x`.
pub fn recursion_bound(g: &WeightedGraph, x: usize, m: usize) -> Result<f64> {
    check_size(g)?;
    let star: Vec<usize> = g.incident(x).collect();
    if star.len() > 20 {
        return Err(Error::TooLarge {
            what: "root degree",
            actual: star.len(),
            limit: 20,
        });
    }
    let rest = without_vertex(g, x);
    let inner: Vec<Vec<f64>> = match &rest {
        Some(h) => (0..h.vertex_count())
            .map(|v| c_m_all(h, v, m))
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let shifted = |v: usize| if v > x { v - 1 } else { v };
    let mut total = 0.0;
    for mask in 1u32..(1 << star.len()) {
        let chosen: Vec<usize> = (0..star.len()).filter(|i| mask >> i & 1 == 1).map(|i| star[i]).collect();
        if chosen.len() > m {
            continue;
        }
        let weight: f64 = chosen.iter().map(|&i| g.edges()[i].w.norm()).product();
        let mut ends: Vec<usize> = chosen.iter().map(|&i| shifted(g.edges()[i].other(x))).collect();
        ends.sort_unstable();
        ends.dedup();
        // Convolve the per-endpoint count sequences, truncated at m − |F|.
        let budget = m - chosen.len();
        let mut conv = vec![0.0; budget + 1];
        conv[0] = 1.0;
        for &y in &ends {
            let mut next = vec![0.0; budget + 1];
            for (a, &ca) in conv.iter().enumerate() {
                for (b, &cb) in inner[y].iter().enumerate().take(budget + 1 - a) {
                    next[a + b] += ca * cb;
                }
            }
            conv = next;
        }
        total += weight * conv[budget];
    }
    Ok(total)
}

/// `e_f(w) = Σ_{|F| = f} ∏_{e∈F} w_e`.
pub fn elementary_symmetric(weights: &[f64], f: usize) -> f64 {
    let mut e = vec![0.0; f + 1];
    e[0] = 1.0;
    for &w in weights {
        for k in (1..=f).rev() {
            e[k] += w * e[k - 1];
        }
    }
    e[f]
}

/// Partial sum of the tree function together with a bound on the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TreeValue {
    pub value: f64,
    pub tail_bound: f64,
}

/// `T(x) = Σ_{n≥1} n^{n−1}/n! xⁿ` truncated after `n_terms` terms, on `[0, 1/e]`.
pub fn tree_function(x: f64, n_terms: usize) -> Result<TreeValue> {
    let limit = (-1.0f64).exp();
    if !(0.0..=limit * (1.0 + 1e-15)).contains(&x) || n_terms == 0 {
        return Err(Error::OutOfDomain(x));
    }
    let x = x.min(limit);
    let mut term = x;
    let mut value = 0.0;
    for n in 1..=n_terms {
        value += term;
        // t_{n+1}/t_n = x (1 + 1/n)^{n−1}
        term *= x * (1.0 + 1.0 / n as f64).powi(n as i32 - 1);
    }
    // Stirling gives t_n ≤ (ex)^n / (√(2π) n^{3/2}).
    let ex = (std::f64::consts::E * x).min(1.0);
    let n = n_terms as f64;
    let root_two_pi = (2.0 * std::f64::consts::PI).sqrt();
    let mut tail_bound = 2.0 * ex.powf(n + 1.0) / (root_two_pi * n.sqrt());
    if ex < 1.0 {
        tail_bound = tail_bound.min(ex.powf(n + 1.0) / (root_two_pi * (1.0 - ex)));
    }
    Ok(TreeValue { value, tail_bound })
}

/// `U(z) = T(z)/z`, with `U(0) = 1`.
pub fn tree_function_u(z: f64, n_terms: usize) -> Result<TreeValue> {
    if z == 0.0 {
        tree_function(0.0, n_terms)?;
        return Ok(TreeValue {
            value: 1.0,
            tail_bound: 0.0,
        });
    }
    let t = tree_function(z, n_terms)?;
    Ok(TreeValue {
        value: t.value / z,
        tail_bound: t.tail_bound / z,
    })
}
