//! Root locations of `Z_G` against the zero-free discs.

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::{f_closed, graph_bounds, BoundSet};
use crate::catalog::{complete, cycle, grid, parallel_pair};
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::roots::q_roots;

/// Interpolation parameters checked by every report.
pub const INTERPOLATION_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Radius over `Q_max`; absent when every root is at zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Margins {
    pub thm12: Option<f64>,
    pub thm13: Option<f64>,
    pub thm13_weak: Option<f64>,
    pub thm11: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterpolatedCheck {
    pub a: f64,
    pub radius: f64,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroFreeReport {
    /// Roots other than the stripped factor `q^{k(E⁺)}`, with multiplicity.
    pub roots: Vec<Complex64>,
    pub q_zero_multiplicity: usize,
    pub q_max: f64,
    pub bounds: BoundSet,
    pub thm12_verified: bool,
    /// Only for simple graphs.
    pub thm13_verified: Option<bool>,
    pub thm13_weak_verified: Option<bool>,
    /// Only when every edge satisfies `|1 + w| ≤ 1`.
    pub thm11_verified: Option<bool>,
    /// The interpolated discs, for simple graphs.
    pub interpolated: Vec<InterpolatedCheck>,
    pub margins: Margins,
}

impl ZeroFreeReport {
    /// Every applicable disc contains every root.
    pub fn all_verified(&self) -> bool {
        self.thm12_verified
            && self.thm13_verified != Some(false)
            && self.thm13_weak_verified != Some(false)
            && self.thm11_verified != Some(false)
            && self.interpolated.iter().all(|c| c.verified)
    }
}

fn inside(roots: &[Complex64], radius: f64) -> bool {
    roots.iter().all(|r| r.norm() < radius)
}

/// Computes the roots of `Z_G` and checks them against each disc.
pub fn analyze(g: &WeightedGraph) -> Result<ZeroFreeReport> {
    let (roots, q_zero_multiplicity) = q_roots(g)?;
    let q_max = roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let bounds = graph_bounds(g);
    let simple = g.is_simple();
    // A simple graph without a usable λ has only zero weights, so no roots.
    let disc = |radius: Option<f64>| match radius {
        Some(r) => Some(inside(&roots, r)),
        None if simple => Some(roots.is_empty()),
        None => None,
    };
    let thm13_verified = disc(bounds.radius_thm13);
    let thm13_weak_verified = bounds.radius_thm13_weak.map(|r| inside(&roots, r));
    let thm11_verified = bounds.radius_thm11.map(|r| inside(&roots, r));
    let mut interpolated = Vec::new();
    for a in INTERPOLATION_GRID {
        if let Some(radius) = bounds.radius_interpolated(a)? {
            interpolated.push(InterpolatedCheck {
                a,
                radius,
                verified: inside(&roots, radius),
            });
        }
    }
    let margin = |radius: Option<f64>| radius.filter(|_| q_max > 0.0).map(|r| r / q_max);
    let margins = Margins {
        thm12: margin(Some(bounds.radius_thm12)),
        thm13: margin(bounds.radius_thm13),
        thm13_weak: margin(bounds.radius_thm13_weak),
        thm11: margin(bounds.radius_thm11),
    };
    Ok(ZeroFreeReport {
        thm12_verified: inside(&roots, bounds.radius_thm12),
        thm13_verified,
        thm13_weak_verified,
        thm11_verified,
        interpolated,
        margins,
        roots,
        q_zero_multiplicity,
        q_max,
        bounds,
    })
}

/// One observed quantity of a worked example next to its reference value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleRecord {
    pub example: String,
    pub instance: String,
    pub quantity: String,
    pub observed: f64,
    /// Limit the quantity approaches as `|w|` grows, when one is known.
    pub reference: Option<f64>,
    pub commentary: String,
    pub report: ZeroFreeReport,
}

impl ExampleRecord {
    /// `|observed/reference − 1|`, when there is a reference.
    pub fn relative_gap(&self) -> Option<f64> {
        self.reference.map(|r| (self.observed / r - 1.0).abs())
    }
}

fn base_k0() -> f64 {
    // The `λ → 0` simple-graph constant, `F_0(1)`.
    f_closed(0.0, 1.0).expect("F_0(1) is finite")
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `C_n` with weight `w` on edge `0–1` and `w0` elsewhere.
pub fn heavy_edge_cycle(n: usize, w: Complex64, w0: Complex64) -> WeightedGraph {
    let c = cycle(n);
    let weights: Vec<Complex64> = c
        .edges()
        .iter()
        .map(|e| if (e.u, e.v) == (0, 1) { w } else { w0 })
        .collect();
    c.with_weights(&weights)
}

struct Builder {
    out: Vec<ExampleRecord>,
}

impl Builder {
    fn push(
        &mut self,
        example: &str,
        instance: String,
        quantity: &str,
        observed: f64,
        reference: Option<f64>,
        commentary: &str,
        report: &ZeroFreeReport,
    ) {
        self.out.push(ExampleRecord {
            example: example.into(),
            instance,
            quantity: quantity.into(),
            observed,
            reference,
            commentary: commentary.into(),
            report: report.clone(),
        });
    }
}

/// Single edge with large weight: both disc margins tend to their
/// two-vertex limits.
pub fn single_edge_example(w: f64) -> Result<Vec<ExampleRecord>> {
    let g = WeightedGraph::from_edges(2, [(0, 1, real(w))])?;
    let report = analyze(&g)?;
    let mut b = Builder { out: Vec::new() };
    let note = "Q_max = |w|; the first disc is off by 4, the simple-graph disc by K*_0";
    let instance = format!("K2 w={w}");
    b.push("single-edge", instance.clone(), "thm12 margin", report.margins.thm12.unwrap_or(f64::NAN), Some(4.0), note, &report);
    b.push("single-edge", instance, "thm13 margin", report.margins.thm13.unwrap_or(f64::NAN), Some(base_k0()), note, &report);
    Ok(b.out)
}

/// Cycle with one heavy edge and light weight elsewhere: the first disc
/// beats the simple-graph disc by nearly `K*_0/4`.
pub fn heavy_edge_cycle_example(n: usize, w: f64, w0: f64) -> Result<Vec<ExampleRecord>> {
    let g = heavy_edge_cycle(n, real(w), real(w0));
    let report = analyze(&g)?;
    let mut b = Builder { out: Vec::new() };
    let note = "one heavy edge on a cycle behaves like a single edge";
    let instance = format!("C{n} w={w} w0={w0}");
    let ratio = report.bounds.radius_thm13.unwrap_or(f64::NAN) / report.bounds.radius_thm12;
    b.push("heavy-edge-cycle", instance.clone(), "thm13/thm12 radius", ratio, Some(base_k0() / 4.0), note, &report);
    b.push("heavy-edge-cycle", instance, "q_max/|w|", report.q_max / w, Some(1.0), note, &report);
    Ok(b.out)
}

/// `k` parallel edges: the first disc is off by `4k`, and by 4 after
/// merging the parallel class.
pub fn parallel_pair_example(k: usize, w: f64) -> Result<Vec<ExampleRecord>> {
    let g = parallel_pair(k).with_uniform_weight(real(w));
    let before = analyze(&g)?;
    let after = analyze(&g.parallel_reduce())?;
    let mut b = Builder { out: Vec::new() };
    let note = "parallel reduction first recovers the single-edge factor";
    let instance = format!("K2^({k}) w={w}");
    let m_before = before.margins.thm12.unwrap_or(f64::NAN);
    let m_after = after.margins.thm12.unwrap_or(f64::NAN);
    let kf = k as f64;
    b.push("parallel-pair", instance.clone(), "thm12 margin", m_before, Some(4.0 * kf), note, &before);
    b.push("parallel-pair", instance.clone(), "thm12 margin reduced", m_after, Some(4.0), note, &after);
    b.push("parallel-pair", instance, "margin ratio", m_before / m_after, Some(kf), note, &before);
    Ok(b.out)
}

/// Uniform cycle with large weight: `Q_max ≈ |w|^{n/(n−1)}` while the
/// discs grow like `8|w|²` and `2K*_0 |w|^{3/2}`.
pub fn uniform_cycle_example(n: usize, w: f64) -> Result<Vec<ExampleRecord>> {
    let g = cycle(n).with_uniform_weight(real(w));
    let report = analyze(&g)?;
    let mut b = Builder { out: Vec::new() };
    let note = "both discs have the wrong order of growth; the simple-graph disc is much closer";
    let instance = format!("C{n} w={w}");
    let power = w.powf(n as f64 / (n as f64 - 1.0));
    b.push("uniform-cycle", instance.clone(), "(q_max - |w|^(n/(n-1)))/|w|", (report.q_max - power) / w, None, note, &report);
    b.push("uniform-cycle", instance.clone(), "thm12 radius/(8|w|^2)", report.bounds.radius_thm12 / (8.0 * w * w), Some(1.0), note, &report);
    let r13 = report.bounds.radius_thm13.unwrap_or(f64::NAN);
    b.push("uniform-cycle", instance, "thm13 radius/(2 K*_0 |w|^1.5)", r13 / (2.0 * base_k0() * w.powf(1.5)), Some(1.0), note, &report);
    Ok(b.out)
}

/// Complete graph at fixed weight, finite `n`.
pub fn complete_example(n: usize, w: f64) -> Result<Vec<ExampleRecord>> {
    let g = complete(n).with_uniform_weight(real(w));
    let report = analyze(&g)?;
    let mut b = Builder { out: Vec::new() };
    let note = "the simple-graph disc grows like Psi^(1/2), the first disc like Psi";
    let instance = format!("K{n} w={w}");
    let r13 = report.bounds.radius_thm13.unwrap_or(f64::NAN);
    b.push("complete", instance.clone(), "thm13 margin", report.margins.thm13.unwrap_or(f64::NAN), None, note, &report);
    b.push("complete", instance, "thm12/thm13 radius", report.bounds.radius_thm12 / r13, None, note, &report);
    Ok(b.out)
}

/// Finite square grid at fixed weight.
pub fn grid_example(rows: usize, cols: usize, w: f64) -> Result<Vec<ExampleRecord>> {
    let g = grid(rows, cols).with_uniform_weight(real(w));
    let report = analyze(&g)?;
    let mut b = Builder { out: Vec::new() };
    let note = "finite piece of the square lattice";
    let instance = format!("grid {rows}x{cols} w={w}");
    let r13 = report.bounds.radius_thm13.unwrap_or(f64::NAN);
    b.push("grid", instance.clone(), "thm13 margin", report.margins.thm13.unwrap_or(f64::NAN), None, note, &report);
    b.push("grid", instance, "thm12/thm13 radius", report.bounds.radius_thm12 / r13, None, note, &report);
    Ok(b.out)
}

/// All worked examples at their standard sizes.
pub fn example_suite() -> Result<Vec<ExampleRecord>> {
    let mut out = Vec::new();
    for w in [10.0, 100.0, 1000.0] {
        out.extend(single_edge_example(w)?);
    }
    for w in [10.0, 100.0, 1000.0] {
        out.extend(heavy_edge_cycle_example(4, w, 1e-3)?);
    }
    for k in [2, 3, 4] {
        out.extend(parallel_pair_example(k, 1000.0)?);
    }
    for n in [4, 5] {
        for w in [10.0, 100.0] {
            out.extend(uniform_cycle_example(n, w)?);
        }
    }
    for n in 3..=6 {
        out.extend(complete_example(n, 1.0)?);
    }
    for (r, c) in [(2, 2), (2, 3), (3, 3)] {
        out.extend(grid_example(r, c, 1.0)?);
    }
    Ok(out)
}
