//! Exact multivariate Tutte polynomials and related subset sums.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dsu::RollbackDsu;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::subset::EdgeSubset;

/// Largest edge count accepted by the subset enumerators.
pub const ENUMERATION_LIMIT: usize = 24;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Polynomial in `q` with complex coefficients, lowest power first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    pub coeffs: Vec<Complex64>,
}

impl QPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, q: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * q + c)
    }

    /// Number of exactly-zero low-order coefficients.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|&&c| c == ZERO).count()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial { coeffs: out }
    }
}

pub(crate) fn check_size(g: &WeightedGraph) -> Result<()> {
    if g.edge_count() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "edge count",
            actual: g.edge_count(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

struct ZWalk<'a> {
    ends: Vec<(usize, usize)>,
    w: &'a [Complex64],
    dsu: RollbackDsu,
}

impl ZWalk<'_> {
    // Writes Σ_{A ⊆ {e..}} q^{k(B ∪ A)} ∏_{A} w into `out`, where B is the
    // set already merged in the union-find. The branches are combined as
    // `exclude + w·include`, which sums the leaves pairwise.
    fn run(&mut self, e: usize, out: &mut [Complex64], scratch: &mut [Vec<Complex64>]) {
        if e == self.ends.len() {
            out.fill(ZERO);
            out[self.dsu.components()] = ONE;
            return;
        }
        let (tmp, rest) = scratch.split_first_mut().expect("one buffer per depth");
        self.run(e + 1, out, rest);
        let (u, v) = self.ends[e];
        let w = self.w[e];
        if self.dsu.union(u, v) {
            self.run(e + 1, tmp, rest);
            self.dsu.rollback();
            for (o, t) in out.iter_mut().zip(tmp.iter()) {
                *o += w * t;
            }
        } else {
            // Closing a cycle leaves k(A) unchanged, so both branches agree.
            self.dsu.rollback();
            let f = ONE + w;
            for o in out.iter_mut() {
                *o *= f;
            }
        }
    }
}

/// `Z_G(q, w) = Σ_{A⊆E} q^{k(A)} ∏_{e∈A} w_e` as a polynomial in `q`.
pub fn z_polynomial(g: &WeightedGraph) -> Result<QPolynomial> {
    check_size(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let w = g.weights();
    let mut walk = ZWalk {
        ends: g.edges().iter().map(|e| (e.u, e.v)).collect(),
        w: &w,
        dsu: RollbackDsu::new(n),
    };
    let mut out = vec![ZERO; n + 1];
    let mut scratch = vec![vec![ZERO; n + 1]; m];
    walk.run(0, &mut out, &mut scratch);
    Ok(QPolynomial { coeffs: out })
}

/// `Z_G(q, w)` at one point.
pub fn z_eval(g: &WeightedGraph, q: Complex64) -> Result<Complex64> {
    Ok(z_polynomial(g)?.eval(q))
}

struct Walk<'a> {
    ends: Vec<(usize, usize)>,
    w: &'a [Complex64],
    dsu: RollbackDsu,
    trees_only: bool,
    taken: usize,
    current: EdgeSubset,
}

impl Walk<'_> {
    // Σ over connected spanning A ⊇ (merged set) drawn from edges e.., of
    // ∏_{A ∩ {e..}} w. With `trees_only`, cycle-closing edges are refused.
    fn sum(&mut self, e: usize) -> Complex64 {
        let remaining = self.ends.len() - e;
        if self.dsu.components() > remaining + 1 {
            return ZERO;
        }
        if e == self.ends.len() {
            return if self.dsu.components() <= 1 { ONE } else { ZERO };
        }
        let skip = self.sum(e + 1);
        let (u, v) = self.ends[e];
        let merged = self.dsu.union(u, v);
        let take = if merged || !self.trees_only {
            self.sum(e + 1)
        } else {
            ZERO
        };
        self.dsu.rollback();
        skip + self.w[e] * take
    }

    fn connected_sets(&mut self, e: usize, out: &mut Vec<EdgeSubset>) {
        if self.dsu.components() > self.ends.len() - e + 1 {
            return;
        }
        if e == self.ends.len() {
            if self.dsu.components() <= 1 {
                out.push(self.current);
            }
            return;
        }
        let (u, v) = self.ends[e];
        self.dsu.union(u, v);
        let saved = self.current;
        self.current = saved.with(e);
        self.connected_sets(e + 1, out);
        self.current = saved;
        self.dsu.rollback();
        self.connected_sets(e + 1, out);
    }

    fn trees(&mut self, e: usize, out: &mut Vec<EdgeSubset>, target: usize) {
        if self.taken == target {
            if self.dsu.components() <= 1 {
                out.push(self.current);
            }
            return;
        }
        if self.taken + (self.ends.len() - e) < target {
            return;
        }
        let (u, v) = self.ends[e];
        if self.dsu.union(u, v) {
            let saved = self.current;
            self.current = saved.with(e);
            self.taken += 1;
            self.trees(e + 1, out, target);
            self.taken -= 1;
            self.current = saved;
        }
        self.dsu.rollback();
        self.trees(e + 1, out, target);
    }
}

fn walk<'a>(g: &WeightedGraph, w: &'a [Complex64], trees_only: bool) -> Walk<'a> {
    Walk {
        ends: g.edges().iter().map(|e| (e.u, e.v)).collect(),
        w,
        dsu: RollbackDsu::new(g.vertex_count()),
        trees_only,
        taken: 0,
        current: EdgeSubset::EMPTY,
    }
}

/// `C_H(w) = Σ_{A⊆E, (V,A) connected} ∏_{e∈A} w_e`; zero when `H` is
/// disconnected.
pub fn connected_gen_poly(h: &WeightedGraph) -> Result<Complex64> {
    check_size(h)?;
    if h.vertex_count() == 0 {
        return Ok(ZERO);
    }
    let w = h.weights();
    Ok(walk(h, &w, false).sum(0))
}

/// `T_H(w) = Σ_{T spanning tree} ∏_{e∈T} w_e`.
pub fn spanning_tree_gen_poly(h: &WeightedGraph) -> Result<Complex64> {
    check_size(h)?;
    if h.vertex_count() == 0 {
        return Ok(ZERO);
    }
    let w = h.weights();
    Ok(walk(h, &w, true).sum(0))
}

/// All spanning trees of `h`, in include-before-exclude walk order.
pub(crate) fn spanning_trees(h: &WeightedGraph) -> Vec<EdgeSubset> {
    let w = h.weights();
    let mut wk = walk(h, &w, true);
    let mut out = Vec::new();
    let target = h.vertex_count().saturating_sub(1);
    wk.trees(0, &mut out, target);
    out
}

/// Every edge subset `A` with `(V, A)` connected.
pub(crate) fn connected_spanning_sets(h: &WeightedGraph) -> Vec<EdgeSubset> {
    let w = h.weights();
    let mut wk = walk(h, &w, false);
    let mut out = Vec::new();
    if h.vertex_count() > 0 {
        wk.connected_sets(0, &mut out);
    }
    out
}
