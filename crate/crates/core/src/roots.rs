//! Zeros of `Z_G` as a polynomial in `q`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::tutte::z_polynomial;

/// Iteration cap for one run of the simultaneous iteration.
pub const MAX_ITERATIONS: usize = 500;
const RESTARTS: u64 = 8;
/// Accepted residual, relative to `Σ |a_i| |r|^i`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// `Σ |a_i| |z|^i`, the natural size of rounding error in evaluating at `z`.
fn eval_scale(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
}

/// Upper bound on the root moduli of a monic polynomial (Fujiwara).
fn root_radius(monic: &[Complex64]) -> f64 {
    let d = monic.len() - 1;
    let mut best: f64 = 0.0;
    for (i, a) in monic[..d].iter().enumerate() {
        let k = (d - i) as f64;
        let term = if i == 0 { (a.norm() / 2.0).powf(1.0 / k) } else { a.norm().powf(1.0 / k) };
        best = best.max(term);
    }
    2.0 * best
}

fn aberth(monic: &[Complex64], seed: u64) -> Option<Vec<Complex64>> {
    let d = monic.len() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radius = root_radius(monic).max(f64::MIN_POSITIVE.sqrt());
    let offset: f64 = rng.gen_range(0.0..TAU);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let r = radius * rng.gen_range(0.5..1.0);
            let t = offset + TAU * k as f64 / d as f64 + rng.gen_range(-0.1..0.1);
            Complex64::from_polar(r, t)
        })
        .collect();
    let mut done = vec![false; d];
    for _ in 0..MAX_ITERATIONS {
        for k in 0..d {
            if done[k] {
                continue;
            }
            let (p, dp) = eval_with_derivative(monic, z[k]);
            if p.norm() <= 4.0 * f64::EPSILON * eval_scale(monic, z[k]) {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| 1.0 / (z[k] - z[j]))
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if !step.is_finite() {
                return None;
            }
            z[k] -= step;
            if step.norm() <= 2.0 * f64::EPSILON * z[k].norm() {
                done[k] = true;
            }
        }
        if done.iter().all(|&x| x) {
            break;
        }
    }
    let accepted = z
        .iter()
        .all(|&r| eval_with_derivative(monic, r).0.norm() <= RESIDUAL_TOLERANCE * eval_scale(monic, r));
    accepted.then_some(z)
}

/// All complex roots of `Σ c_i q^i`, with multiplicity. The leading
/// coefficient must be nonzero.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let lead = *coeffs
        .last()
        .filter(|c| **c != Complex64::new(0.0, 0.0))
        .ok_or_else(|| Error::NoConvergence("leading coefficient is zero".into()))?;
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    match monic.len() {
        1 => return Ok(Vec::new()),
        2 => return Ok(vec![-monic[0]]),
        _ => {}
    }
    for seed in 0..RESTARTS {
        if let Some(z) = aberth(&monic, seed) {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence(format!(
        "simultaneous iteration did not converge for degree {}",
        monic.len() - 1
    )))
}

/// Roots of `Z_G(·, w)` after removing the factor `q^{k(E⁺)}`, where `E⁺`
/// is the set of edges with nonzero weight. Returns the remaining roots and
/// the removed multiplicity.
pub fn q_roots(g: &WeightedGraph) -> Result<(Vec<Complex64>, usize)> {
    let poly = z_polynomial(g)?;
    let shift = g.nonzero_component_count();
    debug_assert!(poly.coeffs[..shift].iter().all(|c| c.norm() == 0.0));
    let roots = polynomial_roots(&poly.coeffs[shift..])?;
    Ok((roots, shift))
}

/// Largest root modulus, counting `q = 0`; zero when there is no root.
pub fn q_max(g: &WeightedGraph) -> Result<f64> {
    let (roots, _) = q_roots(g)?;
    Ok(roots.iter().map(|r| r.norm()).fold(0.0, f64::max))
}
