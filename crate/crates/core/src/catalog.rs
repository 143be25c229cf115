//! Standard graph families and exhaustive small-graph catalogues.
//!
//! Catalogue graphs carry unit weights; sweeps replace them with
//! [`WeightedGraph::with_weights`].

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Largest vertex count the isomorphism catalogue will enumerate.
pub const CATALOG_LIMIT: usize = 7;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn unit_graph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> WeightedGraph {
    WeightedGraph::from_edges(n, edges.into_iter().map(|(u, v)| (u, v, ONE)))
        .expect("family constructors produce valid edges")
}

pub fn complete(n: usize) -> WeightedGraph {
    unit_graph(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> WeightedGraph {
    unit_graph(n, (1..n).map(|v| (v - 1, v)))
}

/// The `n`-cycle; needs `n ≥ 3`.
pub fn cycle(n: usize) -> WeightedGraph {
    assert!(n >= 3, "a simple cycle needs three vertices");
    unit_graph(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The `rows × cols` grid with nearest-neighbour edges.
pub fn grid(rows: usize, cols: usize) -> WeightedGraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    unit_graph(rows * cols, edges)
}

/// Two vertices joined by `k` parallel edges.
pub fn parallel_pair(k: usize) -> WeightedGraph {
    unit_graph(2, (0..k).map(|_| (0, 1)))
}

/// Adjacency as bit rows: bit `v` of `adj[u]` is set for an edge `uv`.
type Adjacency = Vec<u8>;

fn edge_code(adj: &Adjacency, perm: &[usize]) -> u32 {
    // Upper triangle of the relabelled adjacency, read row by row.
    let n = adj.len();
    let mut code = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            code <<= 1;
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

/// Colour refinement: each vertex's colour is its rank after repeated
/// splitting by the multiset of neighbour colours.
fn refined_colours(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let signature: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signature.iter().collect();
        let next: Vec<usize> = signature
            .iter()
            .map(|s| distinct.iter().position(|d| *d == s).unwrap())
            .collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colour = next;
    }
}

fn permute_within_cells(cells: &[Vec<usize>], cell: usize, prefix: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cell == cells.len() {
        visit(prefix);
        return;
    }
    let mut members = cells[cell].clone();
    let k = members.len();
    heap_permutations(&mut members, k, &mut |p| {
        let mark = prefix.len();
        prefix.extend_from_slice(p);
        permute_within_cells(cells, cell + 1, prefix, visit);
        prefix.truncate(mark);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

/// A labelling-independent code: the largest edge code over orderings that
/// list vertices by refined colour.
fn canonical_code(adj: &Adjacency) -> u32 {
    let colour = refined_colours(adj);
    let classes = colour.iter().max().map_or(0, |m| m + 1);
    let cells: Vec<Vec<usize>> = (0..classes)
        .map(|c| (0..adj.len()).filter(|&v| colour[v] == c).collect())
        .collect();
    let mut best = 0u32;
    permute_within_cells(&cells, 0, &mut Vec::new(), &mut |perm| {
        best = best.max(edge_code(adj, perm));
    });
    best
}

fn from_code(n: usize, code: u32) -> Adjacency {
    let mut adj = vec![0u8; n];
    let mut bit = n * (n - 1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn to_graph(adj: &Adjacency) -> WeightedGraph {
    let n = adj.len();
    unit_graph(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))),
    )
}

fn check_limit(n: usize) -> Result<()> {
    if n > CATALOG_LIMIT {
        return Err(Error::TooLarge {
            what: "catalogue vertex count",
            actual: n,
            limit: CATALOG_LIMIT,
        });
    }
    Ok(())
}

/// Canonical codes of all simple graphs on `n` vertices, one per
/// isomorphism class, grown one vertex at a time.
fn codes(n: usize) -> BTreeSet<u32> {
    if n <= 1 {
        return BTreeSet::from([0]);
    }
    let mut out = BTreeSet::new();
    for code in codes(n - 1) {
        let small = from_code(n - 1, code);
        for nbrs in 0u8..(1 << (n - 1)) {
            let mut adj = small.clone();
            adj.push(nbrs);
            for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                if nbrs >> v & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            out.insert(canonical_code(&adj));
        }
    }
    out
}

/// Every simple graph on `n` vertices up to isomorphism, in a fixed order.
pub fn simple_graphs(n: usize) -> Result<Vec<WeightedGraph>> {
    check_limit(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(codes(n).into_iter().map(|c| to_graph(&from_code(n, c))).collect())
}

/// Every connected simple graph on `n` vertices up to isomorphism.
pub fn connected_simple_graphs(n: usize) -> Result<Vec<WeightedGraph>> {
    Ok(simple_graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

/// Connected simple graphs with `1..=max_vertices` vertices.
pub fn connected_simple_graphs_upto(max_vertices: usize) -> Result<Vec<WeightedGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        out.extend(connected_simple_graphs(n)?);
    }
    Ok(out)
}

/// Every way of giving each edge of `g` a multiplicity in
/// `1..=max_multiplicity`; parallel copies follow their original.
pub fn multigraph_variants(g: &WeightedGraph, max_multiplicity: usize) -> Vec<WeightedGraph> {
    let m = g.edge_count();
    let mut out = Vec::new();
    let mut mult = vec![1usize; m];
    loop {
        let edges = g
            .edges()
            .iter()
            .zip(&mult)
            .flat_map(|(e, &k)| std::iter::repeat_n((e.u, e.v, e.w), k));
        out.push(WeightedGraph::from_edges(g.vertex_count(), edges).expect("same edges as g"));
        let mut i = 0;
        while i < m && mult[i] == max_multiplicity {
            mult[i] = 1;
            i += 1;
        }
        if i == m {
            return out;
        }
        mult[i] += 1;
    }
}

/// Connected graphs with `1..=max_vertices` vertices and edge
/// multiplicities up to `max_multiplicity`, over the simple catalogue.
pub fn connected_multigraphs_upto(max_vertices: usize, max_multiplicity: usize) -> Result<Vec<WeightedGraph>> {
    Ok(connected_simple_graphs_upto(max_vertices)?
        .iter()
        .flat_map(|g| multigraph_variants(g, max_multiplicity))
        .collect())
}
