//! Spanning trees, the Penrose map and the Penrose inequalities.

use num_complex::Complex64;
use serde::Serialize;

use crate::dsu::component_count;
use crate::error::{Error, Result};
use crate::graph::{amplification, degree_quantities, transform_weights, EdgeWeightView, WeightedGraph};
use crate::subset::EdgeSubset;
use crate::tutte::{
    check_size, connected_gen_poly, connected_spanning_sets, spanning_tree_gen_poly,
    spanning_trees,
};

/// Outcome of checking that the intervals `[T, R(T)]` partition the
/// connected spanning subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub root: usize,
    pub tree_count: usize,
    pub connected_count: usize,
    /// `2^{|R(T)∖T|}` for each tree, in enumeration order.
    pub interval_sizes: Vec<u64>,
    pub disjoint: bool,
    pub covering: bool,
}

impl PartitionReport {
    pub fn holds(&self) -> bool {
        self.disjoint && self.covering
    }
}

fn check_root(h: &WeightedGraph, root: usize) -> Result<()> {
    if root >= h.vertex_count() {
        return Err(Error::BadIndex {
            index: 0,
            vertex: root,
            vertex_count: h.vertex_count(),
        });
    }
    Ok(())
}

fn require_simple_connected(h: &WeightedGraph) -> Result<()> {
    if !h.is_simple() {
        return Err(Error::NotSimple);
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn enumerate_spanning_trees(h: &WeightedGraph) -> Result<Vec<EdgeSubset>> {
    check_size(h)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(spanning_trees(h))
}

fn is_spanning_tree(h: &WeightedGraph, t: EdgeSubset) -> bool {
    let n = h.vertex_count();
    t.iter().all(|i| i < h.edge_count())
        && t.len() + 1 == n
        && component_count(n, t.iter().map(|i| (h.edges()[i].u, h.edges()[i].v))) == 1
}

/// `R(T)`: the tree plus every non-tree edge that joins two vertices of the
/// same generation, or joins `x` to a vertex of the previous generation
/// numbered above the parent of `x`.
pub fn penrose_map(h: &WeightedGraph, t: EdgeSubset, root: usize) -> Result<EdgeSubset> {
    check_root(h, root)?;
    if !h.is_simple() {
        return Err(Error::NotSimple);
    }
    if !is_spanning_tree(h, t) {
        return Err(Error::NotATree);
    }
    Ok(penrose_map_unchecked(h, t, root))
}

fn penrose_map_unchecked(h: &WeightedGraph, t: EdgeSubset, root: usize) -> EdgeSubset {
    let n = h.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for i in t.iter() {
        let e = h.edges()[i];
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut generation = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    generation[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if generation[y] == usize::MAX {
                generation[y] = generation[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut r = t;
    for (i, e) in h.edges().iter().enumerate() {
        if t.contains(i) {
            continue;
        }
        let (gu, gv) = (generation[e.u], generation[e.v]);
        let keep = if gu == gv {
            true
        } else {
            let (x, earlier) = if gu > gv { (e.u, e.v) } else { (e.v, e.u) };
            generation[x] == generation[earlier] + 1 && earlier > parent[x]
        };
        if keep {
            r = r.with(i);
        }
    }
    r
}

pub fn verify_partition(h: &WeightedGraph, root: usize) -> Result<PartitionReport> {
    check_size(h)?;
    check_root(h, root)?;
    require_simple_connected(h)?;
    let trees = spanning_trees(h);
    let mut counts = vec![0u16; 1usize << h.edge_count()];
    let mut interval_sizes = Vec::with_capacity(trees.len());
    for &t in &trees {
        let extra = penrose_map_unchecked(h, t, root).minus(t).0;
        interval_sizes.push(1u64 << extra.count_ones());
        // Walk every submask of `extra`, including zero.
        let mut sub = extra;
        loop {
            let a = (t.0 | sub) as usize;
            counts[a] = counts[a].saturating_add(1);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & extra;
        }
    }
    let connected = connected_spanning_sets(h);
    let covered: usize = connected.iter().map(|a| counts[a.0 as usize] as usize).sum();
    let total: usize = counts.iter().map(|&c| c as usize).sum();
    Ok(PartitionReport {
        root,
        tree_count: trees.len(),
        connected_count: connected.len(),
        interval_sizes,
        // Intervals above a spanning tree contain only connected sets, but a
        // stray count outside the connected family is still reported.
        disjoint: counts.iter().all(|&c| c <= 1) && covered == total,
        covering: connected.iter().all(|a| counts[a.0 as usize] >= 1),
    })
}

/// `Σ_T ∏_{e∈T} w_e ∏_{e∈R(T)∖T} (1 + w_e)`.
pub fn penrose_identity_eval(h: &WeightedGraph, root: usize) -> Result<Complex64> {
    check_size(h)?;
    check_root(h, root)?;
    require_simple_connected(h)?;
    let w = h.weights();
    let mut total = Complex64::new(0.0, 0.0);
    for t in spanning_trees(h) {
        let extra = penrose_map_unchecked(h, t, root).minus(t);
        let tree: Complex64 = t.iter().map(|i| w[i]).product();
        let bonus: Complex64 = extra.iter().map(|i| 1.0 + w[i]).product();
        total += tree * bonus;
    }
    Ok(total)
}

/// Both sides of the extended Penrose inequalities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PenroseBounds {
    /// `|C_H(w)|`
    pub lhs: f64,
    pub rhs_46a: f64,
    pub rhs_46b: f64,
    /// The remaining chain is defined only for simple graphs.
    pub rhs_48a: Option<f64>,
    pub rhs_48b: Option<f64>,
    pub rhs_48c: Option<f64>,
    pub rhs_48d: Option<f64>,
}

impl PenroseBounds {
    /// Checks both chains, each link up to `slack` relative.
    pub fn chains_hold(&self, slack: f64) -> bool {
        let le = |a: f64, b: f64| a <= b * (1.0 + slack) + slack * f64::MIN_POSITIVE;
        let first = le(self.lhs, self.rhs_46a) && le(self.rhs_46a, self.rhs_46b);
        let second = match (self.rhs_48a, self.rhs_48b, self.rhs_48c, self.rhs_48d) {
            (Some(a), Some(b), Some(c), Some(d)) => {
                le(self.lhs, a) && le(a, b) && le(b, c) && le(c, d)
            }
            _ => true,
        };
        first && second
    }
}

fn tree_sum(h: &WeightedGraph, view: &EdgeWeightView) -> Result<f64> {
    Ok(spanning_tree_gen_poly(&transform_weights(h, view)?)?.re)
}

/// Evaluates `|C_H|` and every right-hand side, with `x` the distinguished
/// vertex of the simple-graph chain.
pub fn extended_penrose_bounds(h: &WeightedGraph, x: usize) -> Result<PenroseBounds> {
    check_size(h)?;
    check_root(h, x)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = h.vertex_count() as f64;
    let lhs = connected_gen_poly(h)?.norm();
    let psi = degree_quantities(h).psi;
    let t_prime = tree_sum(h, &EdgeWeightView::prime())?;
    let amp_all: f64 = h.edges().iter().map(|e| amplification(e.w)).product();
    let mut out = PenroseBounds {
        lhs,
        rhs_46a: t_prime * amp_all,
        rhs_46b: t_prime * psi.powf(n / 2.0),
        rhs_48a: None,
        rhs_48b: None,
        rhs_48c: None,
        rhs_48d: None,
    };
    if h.is_simple() {
        let t_double = tree_sum(h, &EdgeWeightView::double_prime(x))?;
        let t_tilde = tree_sum(h, &EdgeWeightView::tilde(x))?;
        let t_raw = tree_sum(h, &EdgeWeightView::raw())?;
        let (mut amp_off, mut amp_at) = (1.0, 1.0);
        for e in h.edges() {
            if e.touches(x) {
                amp_at *= amplification(e.w);
            } else {
                amp_off *= amplification(e.w);
            }
        }
        let psi_pow = psi.powf((n - 1.0) / 2.0);
        out.rhs_48a = Some(t_double * amp_off);
        out.rhs_48b = Some(t_double * psi_pow / amp_at.sqrt());
        out.rhs_48c = Some(t_tilde * psi_pow);
        out.rhs_48d = Some(t_raw * psi_pow);
    }
    Ok(out)
}
