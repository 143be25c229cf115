//! Independent brute-force oracles shared by the integration tests. Nothing
//! here calls into the library's enumeration code.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tutte_zeros::WeightedGraph;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    let s = a.norm().max(b.norm());
    if s == 0.0 { 0.0 } else { (a - b).norm() / s }
}

pub fn graph(n: usize, edges: &[(usize, usize, Complex64)]) -> WeightedGraph {
    WeightedGraph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
    WeightedGraph::from_edges(n, edges.iter().map(|&(u, v)| (u, v, c(1.0, 0.0)))).unwrap()
}

/// Uniform on the square `[-2, 2]²`, which straddles both regimes.
pub fn random_weight(r: &mut impl Rng) -> Complex64 {
    c(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0))
}

pub fn randomize(g: &WeightedGraph, r: &mut impl Rng) -> WeightedGraph {
    let w: Vec<Complex64> = (0..g.edge_count()).map(|_| random_weight(r)).collect();
    g.with_weights(&w)
}

/// A random multigraph: each of `m` edges gets a uniform random pair of
/// distinct endpoints.
pub fn random_multigraph(n: usize, m: usize, r: &mut impl Rng) -> WeightedGraph {
    let edges: Vec<(usize, usize, Complex64)> = (0..m)
        .map(|_| {
            let u = r.gen_range(0..n);
            let mut v = r.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v, random_weight(r))
        })
        .collect();
    graph(n, &edges)
}

/// Components of `(0..n, edges)` by repeated relabelling.
pub fn components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut label: Vec<usize> = (0..n).collect();
    let edges: Vec<(usize, usize)> = edges.collect();
    loop {
        let mut changed = false;
        for &(u, v) in &edges {
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = label.clone();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

fn subset_edges(g: &WeightedGraph, mask: u64) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges()
        .iter()
        .enumerate()
        .filter(move |(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| (e.u, e.v))
}

fn subset_weight(g: &WeightedGraph, mask: u64) -> Complex64 {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e.w)
        .product()
}

/// `Z_G` coefficients by direct subset enumeration.
pub fn brute_z(g: &WeightedGraph) -> Vec<Complex64> {
    let n = g.vertex_count();
    let mut out = vec![c(0.0, 0.0); n + 1];
    for mask in 0..1u64 << g.edge_count() {
        out[components(n, subset_edges(g, mask))] += subset_weight(g, mask);
    }
    out
}

pub fn eval_poly(coeffs: &[Complex64], q: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(c(0.0, 0.0), |acc, &a| acc * q + a)
}

/// `C_H` by direct enumeration.
pub fn brute_connected(g: &WeightedGraph) -> Complex64 {
    (0..1u64 << g.edge_count())
        .filter(|&m| components(g.vertex_count(), subset_edges(g, m)) == 1)
        .map(|m| subset_weight(g, m))
        .sum()
}

/// Number of connected spanning edge subsets.
pub fn brute_connected_count(g: &WeightedGraph) -> usize {
    (0..1u64 << g.edge_count())
        .filter(|&m| components(g.vertex_count(), subset_edges(g, m)) == 1)
        .count()
}

/// `Z_G(q)` by deletion–contraction on an explicit edge list. Loops created
/// by contraction contribute a factor `1 + w`.
pub fn deletion_contraction(n: usize, edges: &[(usize, usize, Complex64)], q: Complex64) -> Complex64 {
    match edges.split_last() {
        None => q.powi(n as i32),
        Some((&(u, v, w), rest)) => {
            if u == v {
                return (1.0 + w) * deletion_contraction(n, rest, q);
            }
            let deleted = deletion_contraction(n, rest, q);
            // Merge v into u, then renumber the last vertex into v's slot.
            let last = n - 1;
            let relabel = |x: usize| {
                let x = if x == v { u } else { x };
                if x == last { v } else { x }
            };
            let contracted: Vec<(usize, usize, Complex64)> =
                rest.iter().map(|&(a, b, we)| (relabel(a), relabel(b), we)).collect();
            deleted + w * deletion_contraction(n - 1, &contracted, q)
        }
    }
}

/// Golden-section search written out independently of the library.
pub fn golden_min(g: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let (x1, x2) = (b - r * (b - a), a + r * (b - a));
        if g(x1) < g(x2) {
            b = x2;
        } else {
            a = x1;
        }
    }
    let x = 0.5 * (a + b);
    (x, g(x))
}

/// Taylor coefficients of `β F_λ(β)` at zero from a least-squares fit at
/// Chebyshev nodes on `[−r, r]`, where the closed form is analytic.
pub fn taylor_of_beta_f(lambda: f64) -> Vec<f64> {
    let (r, degree, nodes) = (0.2, 20, 48);
    let ts: Vec<f64> = (0..nodes)
        .map(|k| ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * nodes) as f64).cos())
        .collect();
    let a = DMatrix::from_fn(nodes, degree + 1, |i, j| ts[i].powi(j as i32));
    let b = DVector::from_iterator(nodes, ts.iter().map(|&t| r * t * tutte_zeros::bounds::f_closed(lambda, r * t).unwrap()));
    let sol = a.svd(true, true).solve(&b, 1e-15).unwrap();
    (0..=degree).map(|k| sol[k] / r.powi(k as i32)).collect()
}
