//! Polymer gases on the vertex set and the GKFP / Kotecký–Preiss checks.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::optimize::scan_min;

/// Largest host vertex count accepted by the polymer routines.
pub const POLYMER_LIMIT: usize = 12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Polymer weights `ρ(S)` on nonempty vertex subsets, keyed by bitmask.
/// Subsets without an entry have weight zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PolymerWeights {
    pub host_vertex_count: usize,
    pub weights: BTreeMap<u32, Complex64>,
}

#[derive(Serialize, Deserialize)]
struct PolymerRecord {
    #[serde(rename = "S")]
    s: Vec<usize>,
    rho: [f64; 2],
}

fn check_host(n: usize) -> Result<()> {
    if n > POLYMER_LIMIT {
        return Err(Error::TooLarge {
            what: "polymer host vertex count",
            actual: n,
            limit: POLYMER_LIMIT,
        });
    }
    Ok(())
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

impl PolymerWeights {
    pub fn new(host_vertex_count: usize) -> Result<Self> {
        check_host(host_vertex_count)?;
        Ok(PolymerWeights {
            host_vertex_count,
            weights: BTreeMap::new(),
        })
    }

    /// Sets `ρ(S)`; zero removes the entry.
    pub fn set(&mut self, subset: &[usize], rho: Complex64) -> Result<()> {
        if subset.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut mask = 0u32;
        for (index, &x) in subset.iter().enumerate() {
            if x >= self.host_vertex_count {
                return Err(Error::BadIndex {
                    index,
                    vertex: x,
                    vertex_count: self.host_vertex_count,
                });
            }
            mask |= 1 << x;
        }
        if rho == ZERO {
            self.weights.remove(&mask);
        } else {
            self.weights.insert(mask, rho);
        }
        Ok(())
    }

    pub fn get(&self, mask: u32) -> Complex64 {
        self.weights.get(&mask).copied().unwrap_or(ZERO)
    }

    /// Multiplies every weight by `c`.
    pub fn scaled(&self, c: Complex64) -> Self {
        PolymerWeights {
            host_vertex_count: self.host_vertex_count,
            weights: self
                .weights
                .iter()
                .map(|(&m, &r)| (m, r * c))
                .filter(|&(_, r)| r != ZERO)
                .collect(),
        }
    }

    /// JSON list of `{"S": [vertices], "rho": [re, im]}`.
    pub fn to_json(&self) -> String {
        let list: Vec<PolymerRecord> = self
            .weights
            .iter()
            .map(|(&m, r)| PolymerRecord {
                s: members(m).collect(),
                rho: [r.re, r.im],
            })
            .collect();
        serde_json::to_string(&list).expect("weights serialize")
    }

    /// Parses [`PolymerWeights::to_json`] output. The host has
    /// `host_vertex_count` vertices, or one more than the largest index.
    pub fn from_json(text: &str, host_vertex_count: Option<usize>) -> Result<Self> {
        let list: Vec<PolymerRecord> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = host_vertex_count.unwrap_or_else(|| {
            list.iter()
                .flat_map(|r| r.s.iter().map(|&x| x + 1))
                .max()
                .unwrap_or(0)
        });
        let mut out = PolymerWeights::new(n)?;
        for r in list {
            out.set(&r.s, Complex64::new(r.rho[0], r.rho[1]))?;
        }
        Ok(out)
    }
}

fn mask_connected(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let mut seen = 1u32 << mask.trailing_zeros();
    loop {
        let mut grown = seen;
        for v in members(seen) {
            grown |= adj[v] & mask;
        }
        if grown == seen {
            return seen == mask;
        }
        seen = grown;
    }
}

/// `C_{G[S]}(w)` for every vertex subset `S`, indexed by bitmask.
///
/// Uses `∏_{e∈E(S)} (1 + w_e) = Σ_{T ∋ min S} C(T) ∏_{e∈E(S∖T)} (1 + w_e)`;
/// subsets that induce a disconnected graph get an exact zero.
pub fn connected_weights_all_subsets(g: &WeightedGraph) -> Result<Vec<Complex64>> {
    let n = g.vertex_count();
    check_host(n)?;
    let size = 1usize << n;
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    // P(S) = ∏ over edges inside S of (1 + w).
    let mut p = vec![ONE; size];
    for (s, ps) in p.iter_mut().enumerate() {
        for e in g.edges() {
            if s >> e.u & 1 == 1 && s >> e.v & 1 == 1 {
                *ps *= 1.0 + e.w;
            }
        }
    }
    let mut c = vec![ZERO; size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        if !mask_connected(&adj, s as u32) {
            continue;
        }
        let rest = s ^ low;
        let mut acc = p[s];
        // Proper subsets T of S containing the lowest vertex.
        let mut sub = rest;
        while sub != 0 {
            sub = (sub - 1) & rest;
            let t = sub | low;
            acc -= c[t] * p[s ^ t];
        }
        c[s] = acc;
    }
    Ok(c)
}

/// `ξ(S) = q^{−(|S|−1)} C_{G[S]}(w)` for `|S| ≥ 2`; singletons carry zero.
pub fn tutte_polymer_weights(g: &WeightedGraph, q: Complex64) -> Result<PolymerWeights> {
    if q == ZERO {
        return Err(Error::ZeroQ);
    }
    let c = connected_weights_all_subsets(g)?;
    let mut out = PolymerWeights::new(g.vertex_count())?;
    for (s, &cs) in c.iter().enumerate() {
        let size = (s as u32).count_ones();
        if size >= 2 && cs != ZERO {
            out.weights.insert(s as u32, cs * q.powi(-(size as i32 - 1)));
        }
    }
    Ok(out)
}

/// `Ξ = Σ over collections of pairwise disjoint subsets of ∏ ρ(S_i)`.
pub fn polymer_partition(rho: &PolymerWeights) -> Result<Complex64> {
    let n = rho.host_vertex_count;
    check_host(n)?;
    let mut by_low: Vec<Vec<(u32, Complex64)>> = vec![Vec::new(); n];
    for (&m, &r) in &rho.weights {
        by_low[m.trailing_zeros() as usize].push((m, r));
    }
    // xi[U] = Ξ restricted to polymers inside U; built up from small masks.
    let size = 1usize << n;
    let mut xi = vec![ZERO; size];
    xi[0] = ONE;
    for u in 1..size {
        let v = (u as u32).trailing_zeros() as usize;
        let mut acc = xi[u & !(1 << v)];
        for &(m, r) in &by_low[v] {
            if m as usize & !u == 0 {
                acc += r * xi[u & !(m as usize)];
            }
        }
        xi[u] = acc;
    }
    Ok(xi[size - 1])
}

fn vertex_sums(rho: &PolymerWeights, alpha: f64) -> Vec<f64> {
    let mut sums = vec![0.0; rho.host_vertex_count];
    for (&m, r) in &rho.weights {
        let t = (alpha * m.count_ones() as f64).exp() * r.norm();
        for x in members(m) {
            sums[x] += t;
        }
    }
    sums
}

fn numerator(rho: &PolymerWeights, alpha: f64) -> f64 {
    vertex_sums(rho, alpha).into_iter().fold(0.0, f64::max)
}

/// `sup_x Σ_{S∋x} e^{α|S|} |ρ(S)| / (e^α − 1)`; the GKFP condition holds
/// when this is at most 1.
pub fn gkfp_margin(rho: &PolymerWeights, alpha: f64) -> f64 {
    numerator(rho, alpha) / alpha.exp_m1()
}

/// The same numerator over `α`: the Kotecký–Preiss margin.
pub fn kp_margin(rho: &PolymerWeights, alpha: f64) -> f64 {
    numerator(rho, alpha) / alpha
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimalAlpha {
    pub alpha_star: f64,
    pub margin: f64,
}

fn optimise(rho: &PolymerWeights, kp: bool) -> Result<OptimalAlpha> {
    if !rho.weights.keys().any(|m| m.count_ones() >= 2) {
        return Err(Error::DegenerateWeights);
    }
    let denom = |a: f64| if kp { a } else { a.exp_m1() };
    let denom_prime = |a: f64| if kp { 1.0 } else { a.exp() };
    let margin = |a: f64| numerator(rho, a) / denom(a);
    let (lo, hi): (f64, f64) = (1e-6, 50.0);
    // A log grid resolves both tiny and large optimal α.
    let log_margin = |t: f64| margin(t.exp());
    let (t, _) = scan_min(log_margin, lo.ln(), hi.ln(), 80, 1e-13);
    let mut alpha = t.exp();
    // Sharpen with the stationarity condition of the active vertex sum.
    let sums = vertex_sums(rho, alpha);
    let x = (0..sums.len())
        .max_by(|&a, &b| sums[a].total_cmp(&sums[b]))
        .unwrap_or(0);
    let slope = |a: f64| {
        let (mut f, mut fp) = (0.0, 0.0);
        for (&m, r) in &rho.weights {
            if m >> x & 1 == 1 {
                let k = m.count_ones() as f64;
                let t = (a * k).exp() * r.norm();
                f += t;
                fp += k * t;
            }
        }
        fp * denom(a) - f * denom_prime(a)
    };
    let (mut a, mut b) = (alpha * (1.0 - 1e-5), alpha * (1.0 + 1e-5));
    if slope(a) < 0.0 && slope(b) > 0.0 {
        for _ in 0..100 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if slope(mid) > 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let candidate = 0.5 * (a + b);
        if margin(candidate) <= margin(alpha) * (1.0 + 1e-14) {
            alpha = candidate;
        }
    }
    Ok(OptimalAlpha {
        alpha_star: alpha,
        margin: margin(alpha),
    })
}

/// `inf_{α>0} (e^α − 1)^{−1} sup_x Σ_{S∋x} e^{α|S|} |ρ(S)|` and its minimiser.
pub fn gkfp_optimal(rho: &PolymerWeights) -> Result<OptimalAlpha> {
    optimise(rho, false)
}

/// Kotecký–Preiss counterpart of [`gkfp_optimal`].
pub fn kp_optimal(rho: &PolymerWeights) -> Result<OptimalAlpha> {
    optimise(rho, true)
}
