//! Complex-weighted multigraphs and their degree-type quantities.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dsu::component_count;
use crate::error::{Error, Result};

/// One edge: endpoint indices into the vertex list and a complex weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: Complex64,
}

impl Edge {
    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A loopless multigraph with one complex weight per edge.
///
/// The vertex order is significant: it is the numbering used by the
/// Penrose map. Values are immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    simple: bool,
}

impl WeightedGraph {
    /// Builds a graph, rejecting loops and out-of-range endpoints.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        let mut list = Vec::new();
        for (index, (u, v, w)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::BadIndex {
                        index,
                        vertex,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { index, vertex: u });
            }
            list.push(Edge { u, v, w });
        }
        let mut keys: Vec<_> = list.iter().map(Edge::key).collect();
        keys.sort_unstable();
        let simple = keys.windows(2).all(|p| p[0] != p[1]);
        Ok(WeightedGraph {
            labels,
            edges: list,
            simple,
        })
    }

    /// Graph on vertices labelled `"0"`, `"1"`, ...
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Result<Self> {
        Self::new((0..vertex_count).map(|i| i.to_string()), edges)
    }

    /// Same structure as `self` with every weight in `weights`, in edge order.
    pub fn with_weights(&self, weights: &[Complex64]) -> Self {
        assert_eq!(weights.len(), self.edges.len(), "one weight per edge");
        let edges = self
            .edges
            .iter()
            .zip(weights)
            .map(|(e, &w)| Edge { w, ..*e })
            .collect();
        WeightedGraph {
            labels: self.labels.clone(),
            edges,
            simple: self.simple,
        }
    }

    /// Same structure with every weight equal to `w`.
    pub fn with_uniform_weight(&self, w: Complex64) -> Self {
        self.with_weights(&vec![w; self.edges.len()])
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> Vec<Complex64> {
        self.edges.iter().map(|e| e.w).collect()
    }

    /// No two edges share an unordered endpoint pair. Loops never occur.
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Indices of the edges incident on `x`.
    pub fn incident(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.touches(x))
            .map(|(i, _)| i)
    }

    /// Number of components of `(V, E)`, counting every edge.
    pub fn component_count(&self) -> usize {
        component_count(self.vertex_count(), self.edges.iter().map(|e| (e.u, e.v)))
    }

    /// Number of components of `(V, E⁺)` where `E⁺` keeps only the edges of
    /// nonzero weight. `Z_G` is divisible by exactly this power of `q`
    /// generically.
    pub fn nonzero_component_count(&self) -> usize {
        component_count(
            self.vertex_count(),
            self.edges
                .iter()
                .filter(|e| e.w != Complex64::new(0.0, 0.0))
                .map(|e| (e.u, e.v)),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.component_count() == 1
    }

    /// Induced subgraph on `subset`, keeping the host's vertex order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.vertex_count();
        let mut position = vec![usize::MAX; n];
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        for (index, &x) in members.iter().enumerate() {
            if x >= n {
                return Err(Error::BadIndex {
                    index,
                    vertex: x,
                    vertex_count: n,
                });
            }
            position[x] = index;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| position[e.u] != usize::MAX && position[e.v] != usize::MAX)
            .map(|e| (position[e.u], position[e.v], e.w));
        Self::new(members.iter().map(|&x| self.labels[x].clone()), edges)
    }

    /// Renumbers vertices: old vertex `i` becomes new vertex `order.iter().position(i)`,
    /// i.e. `order[k]` is the old index of the new vertex `k`.
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        let mut new_index = vec![usize::MAX; n];
        for (k, &old) in order.iter().enumerate() {
            if old >= n || new_index[old] != usize::MAX {
                return Err(Error::BadIndex {
                    index: k,
                    vertex: old,
                    vertex_count: n,
                });
            }
            new_index[old] = k;
        }
        if order.len() != n {
            return Err(Error::Parse(format!(
                "ordering has {} entries for {n} vertices",
                order.len()
            )));
        }
        Self::new(
            order.iter().map(|&old| self.labels[old].clone()),
            self.edges.iter().map(|e| (new_index[e.u], new_index[e.v], e.w)),
        )
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertex_count();
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(other.labels.iter().map(|l| format!("{l}'")));
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.w))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.w)));
        Self::new(labels, edges).expect("union of valid graphs is valid")
    }

    /// Merges each class of parallel edges into one edge of weight
    /// `∏(1 + w_i) − 1`. Classes keep the position of their first edge.
    pub fn parallel_reduce(&self) -> Self {
        // (u, v, first weight, ∏(1 + w), multiplicity) per class.
        let mut classes: Vec<(usize, usize, Complex64, Complex64, usize)> = Vec::new();
        let mut slot = std::collections::HashMap::new();
        for e in &self.edges {
            let i = *slot.entry(e.key()).or_insert_with(|| {
                classes.push((e.u, e.v, e.w, Complex64::new(1.0, 0.0), 0));
                classes.len() - 1
            });
            classes[i].3 *= 1.0 + e.w;
            classes[i].4 += 1;
        }
        // A class of one edge keeps its weight bit-for-bit.
        let edges = classes
            .into_iter()
            .map(|(u, v, w, p, k)| (u, v, if k == 1 { w } else { p - 1.0 }));
        Self::new(self.labels.clone(), edges).expect("reduction keeps endpoints valid")
    }
}

/// `min{|w|, |w|/|1+w|}`.
pub fn prime_weight(w: Complex64) -> f64 {
    let a = w.norm();
    a.min(a / (1.0 + w).norm())
}

/// `min{|w|, |w|/|1+w|^{1/2}}`.
pub fn half_prime_weight(w: Complex64) -> f64 {
    let a = w.norm();
    a.min(a / (1.0 + w).norm().sqrt())
}

/// `min{|w|, |w|/|1+w|^{1-a/2}}`; `a = 0` gives [`prime_weight`], `a = 1`
/// gives [`half_prime_weight`].
pub fn interpolated_weight(w: Complex64, a: f64) -> f64 {
    let m = w.norm();
    m.min(m / (1.0 + w).norm().powf(1.0 - a / 2.0))
}

/// `max{1, |1+w|}`.
pub fn amplification(w: Complex64) -> f64 {
    (1.0 + w).norm().max(1.0)
}

/// The involution `w ↦ −w/(1+w)`, which inverts `1+w`.
pub fn dual_weight(w: Complex64) -> Option<Complex64> {
    let d = 1.0 + w;
    if d == Complex64::new(0.0, 0.0) {
        None
    } else {
        Some(-w / d)
    }
}

/// Which per-edge weight to substitute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMode {
    /// `|w_e|`
    Raw,
    /// `w′_e = min{|w|, |w|/|1+w|}`
    Prime,
    /// `w̃_e`: half-power denominator on edges at the root, prime elsewhere.
    Tilde,
    /// `w″_e`: `|w|` on edges at the root, prime elsewhere.
    DoublePrime,
    /// `w^(a)_e`: exponent `1 − a/2` on edges at the root, prime elsewhere.
    Interpolated,
    /// `−w/(1+w)`, complex.
    Dual,
}

/// A validated choice of edge-weight substitution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeWeightView {
    mode: WeightMode,
    root: Option<usize>,
    a: Option<f64>,
}

impl EdgeWeightView {
    pub fn new(mode: WeightMode, root: Option<usize>, a: Option<f64>) -> Result<Self> {
        let needs_root = matches!(
            mode,
            WeightMode::Tilde | WeightMode::DoublePrime | WeightMode::Interpolated
        );
        if needs_root && root.is_none() {
            return Err(Error::MissingRoot(match mode {
                WeightMode::Tilde => "tilde",
                WeightMode::DoublePrime => "double-prime",
                _ => "interpolated",
            }));
        }
        let a = if mode == WeightMode::Interpolated {
            let a = a.unwrap_or(0.0);
            if !(0.0..=1.0).contains(&a) {
                return Err(Error::BadInterpolation(a));
            }
            Some(a)
        } else {
            None
        };
        Ok(EdgeWeightView { mode, root, a })
    }

    pub fn raw() -> Self {
        EdgeWeightView::new(WeightMode::Raw, None, None).unwrap()
    }

    pub fn prime() -> Self {
        EdgeWeightView::new(WeightMode::Prime, None, None).unwrap()
    }

    pub fn tilde(root: usize) -> Self {
        EdgeWeightView::new(WeightMode::Tilde, Some(root), None).unwrap()
    }

    pub fn double_prime(root: usize) -> Self {
        EdgeWeightView::new(WeightMode::DoublePrime, Some(root), None).unwrap()
    }

    pub fn interpolated(root: usize, a: f64) -> Result<Self> {
        EdgeWeightView::new(WeightMode::Interpolated, Some(root), Some(a))
    }

    pub fn dual() -> Self {
        EdgeWeightView::new(WeightMode::Dual, None, None).unwrap()
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }
}

/// Replaces every weight according to `view`; structure is unchanged.
pub fn transform_weights(g: &WeightedGraph, view: &EdgeWeightView) -> Result<WeightedGraph> {
    if let Some(root) = view.root {
        if root >= g.vertex_count() {
            return Err(Error::BadIndex {
                index: 0,
                vertex: root,
                vertex_count: g.vertex_count(),
            });
        }
    }
    let real = |x: f64| Complex64::new(x, 0.0);
    let mut weights = Vec::with_capacity(g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        let at_root = view.root.is_some_and(|r| e.touches(r));
        let w = match view.mode {
            WeightMode::Raw => real(e.w.norm()),
            WeightMode::Prime => real(prime_weight(e.w)),
            WeightMode::Tilde if at_root => real(half_prime_weight(e.w)),
            WeightMode::DoublePrime if at_root => real(e.w.norm()),
            WeightMode::Interpolated if at_root => {
                real(interpolated_weight(e.w, view.a.unwrap_or(0.0)))
            }
            WeightMode::Tilde | WeightMode::DoublePrime | WeightMode::Interpolated => {
                real(prime_weight(e.w))
            }
            WeightMode::Dual => dual_weight(e.w).ok_or(Error::SingularDual(i))?,
        };
        weights.push(w);
    }
    Ok(g.with_weights(&weights))
}

/// Degree-type quantities of a weighted graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeQuantities {
    /// `Δ = max_x Σ_{e∋x} |w_e|`
    pub delta: f64,
    /// `Δ′` from [`prime_weight`]
    pub delta_prime: f64,
    /// `Δ̃` from [`half_prime_weight`]
    pub delta_tilde: f64,
    /// `Ψ = max_x ∏_{e∋x} max{1, |1+w_e|}`
    pub psi: f64,
    /// `Δ′/Δ̃`; absent when `Δ̃ = 0`.
    pub lambda: Option<f64>,
    /// Weighted degree `d(x) = Σ_{e∋x} |w_e|` per vertex.
    pub degree: Vec<f64>,
}

impl DegreeQuantities {
    pub fn lambda(&self) -> Result<f64> {
        self.lambda.ok_or(Error::DegenerateLambda)
    }
}

fn max_vertex_sum(g: &WeightedGraph, f: impl Fn(Complex64) -> f64) -> f64 {
    let mut acc = vec![0.0; g.vertex_count()];
    for e in g.edges() {
        let x = f(e.w);
        acc[e.u] += x;
        acc[e.v] += x;
    }
    acc.into_iter().fold(0.0, f64::max)
}

pub fn degree_quantities(g: &WeightedGraph) -> DegreeQuantities {
    let n = g.vertex_count();
    let mut degree = vec![0.0; n];
    let mut amp = vec![1.0; n];
    for e in g.edges() {
        let a = e.w.norm();
        degree[e.u] += a;
        degree[e.v] += a;
        let m = amplification(e.w);
        amp[e.u] *= m;
        amp[e.v] *= m;
    }
    let delta = degree.iter().copied().fold(0.0, f64::max);
    let delta_prime = max_vertex_sum(g, prime_weight);
    let delta_tilde = max_vertex_sum(g, half_prime_weight);
    let psi = amp.into_iter().fold(1.0, f64::max);
    let lambda = (delta_tilde > 0.0).then(|| delta_prime / delta_tilde);
    DegreeQuantities {
        delta,
        delta_prime,
        delta_tilde,
        psi,
        lambda,
        degree,
    }
}

/// `Δ′_a = max_x Σ_{e∋x} min{|w_e|, |w_e|/|1+w_e|^{1-a/2}}`.
pub fn interpolated_degree(g: &WeightedGraph, a: f64) -> f64 {
    max_vertex_sum(g, |w| interpolated_weight(w, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn builds_k2() {
        let g = WeightedGraph::new(["a", "b"], [(0, 1, c(2.0, 0.0))]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges()[0].w, c(2.0, 0.0));
        assert!(g.is_simple());
        assert_eq!(g.labels(), ["a", "b"]);
    }

    #[test]
    fn single_vertex() {
        let g = WeightedGraph::new(["a"], []).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        assert_eq!(
            WeightedGraph::new(["a", "b"], [(0, 0, c(1.0, 0.0))]),
            Err(Error::LoopEdge { index: 0, vertex: 0 })
        );
        assert!(matches!(
            WeightedGraph::new(["a"], [(0, 3, c(1.0, 0.0))]),
            Err(Error::BadIndex { vertex: 3, .. })
        ));
    }

    #[test]
    fn simplicity_flag() {
        let g = WeightedGraph::from_edges(2, [(0, 1, c(1.0, 0.0)), (1, 0, c(1.0, 0.0))]).unwrap();
        assert!(!g.is_simple());
    }

    #[test]
    fn parallel_reduction_examples() {
        let w = c(0.3, -0.7);
        let g = WeightedGraph::from_edges(2, [(0, 1, w), (0, 1, w)]).unwrap();
        let r = g.parallel_reduce();
        assert!(r.is_simple());
        assert_eq!(r.edge_count(), 1);
        assert!((r.edges()[0].w - ((1.0 + w) * (1.0 + w) - 1.0)).norm() < 1e-15);

        let g = WeightedGraph::from_edges(2, [(0, 1, c(1.0, 0.0)), (1, 0, c(1.0, 0.0))]).unwrap();
        assert_eq!(g.parallel_reduce().edges()[0].w, c(3.0, 0.0));

        let k3 = WeightedGraph::from_edges(
            3,
            [(0, 1, c(1.0, 2.0)), (1, 2, c(-0.5, 0.1)), (0, 2, c(4.0, 0.0))],
        )
        .unwrap();
        assert_eq!(k3.parallel_reduce(), k3);
    }

    #[test]
    fn k2_degree_quantities() {
        let w = c(3.0, 4.0);
        let g = WeightedGraph::from_edges(2, [(0, 1, w)]).unwrap();
        let d = degree_quantities(&g);
        let one_plus = (1.0 + w).norm();
        assert!(one_plus >= 1.0);
        assert!((d.delta_prime - w.norm() / one_plus).abs() < 1e-15);
        assert!((d.delta_tilde - w.norm() / one_plus.sqrt()).abs() < 1e-15);
        assert!((d.psi - one_plus).abs() < 1e-15);
        assert!((d.lambda.unwrap() - one_plus.powf(-0.5)).abs() < 1e-15);
        assert_eq!(d.delta, 5.0);
    }

    #[test]
    fn cycle_degree_quantities() {
        let w = c(2.0, 1.0);
        let g = WeightedGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5, w))).unwrap();
        let d = degree_quantities(&g);
        let m = (1.0 + w).norm();
        assert!((d.delta_prime - 2.0 * w.norm() / m).abs() < 1e-14);
        assert!((d.psi - m * m).abs() < 1e-13);
    }

    #[test]
    fn edgeless_degree_quantities() {
        let g = WeightedGraph::from_edges(4, []).unwrap();
        let d = degree_quantities(&g);
        assert_eq!((d.delta, d.delta_prime, d.delta_tilde, d.psi), (0.0, 0.0, 0.0, 1.0));
        assert_eq!(d.lambda(), Err(Error::DegenerateLambda));
    }

    #[test]
    fn dual_is_involutive() {
        let g = WeightedGraph::from_edges(2, [(0, 1, c(1.0, 0.0))]).unwrap();
        let once = transform_weights(&g, &EdgeWeightView::dual()).unwrap();
        assert_eq!(once.edges()[0].w, c(-0.5, 0.0));
        let twice = transform_weights(&once, &EdgeWeightView::dual()).unwrap();
        assert!((twice.edges()[0].w - c(1.0, 0.0)).norm() < 1e-15);

        let bad = WeightedGraph::from_edges(2, [(0, 1, c(-1.0, 0.0))]).unwrap();
        assert_eq!(
            transform_weights(&bad, &EdgeWeightView::dual()),
            Err(Error::SingularDual(0))
        );
    }

    #[test]
    fn prime_in_antiferromagnetic_regime_is_modulus() {
        let w = c(-0.5, 0.3);
        assert!((1.0 + w).norm() <= 1.0);
        assert_eq!(prime_weight(w), w.norm());
    }

    #[test]
    fn interpolation_endpoints() {
        let g = WeightedGraph::from_edges(
            3,
            [(0, 1, c(2.0, 1.0)), (1, 2, c(-0.3, 0.2)), (0, 2, c(5.0, -2.0))],
        )
        .unwrap();
        let w0 = transform_weights(&g, &EdgeWeightView::interpolated(0, 0.0).unwrap()).unwrap();
        let wp = transform_weights(&g, &EdgeWeightView::prime()).unwrap();
        let w1 = transform_weights(&g, &EdgeWeightView::interpolated(0, 1.0).unwrap()).unwrap();
        let wt = transform_weights(&g, &EdgeWeightView::tilde(0)).unwrap();
        for i in 0..3 {
            assert!((w0.edges()[i].w - wp.edges()[i].w).norm() < 1e-15);
            assert!((w1.edges()[i].w - wt.edges()[i].w).norm() < 1e-15);
        }
    }

    #[test]
    fn rooted_views_need_root() {
        assert_eq!(
            EdgeWeightView::new(WeightMode::Tilde, None, None),
            Err(Error::MissingRoot("tilde"))
        );
        assert!(EdgeWeightView::interpolated(0, 1.5).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = WeightedGraph::new(
            ["x", "y", "z"],
            [(0, 1, c(1.0, 0.0)), (1, 2, c(2.0, 0.0)), (0, 2, c(3.0, 0.0))],
        )
        .unwrap();
        assert_eq!(k3.induced_subgraph(&[0, 1, 2]).unwrap(), k3);
        let single = k3.induced_subgraph(&[1]).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let xy = k3.induced_subgraph(&[1, 0]).unwrap();
        assert_eq!(xy.labels(), ["x", "y"]);
        assert_eq!(xy.edges(), &[Edge { u: 0, v: 1, w: c(1.0, 0.0) }]);
        assert_eq!(k3.induced_subgraph(&[]), Err(Error::EmptySet));
    }
}
