//! Principal branch of the Lambert W function on `[−1/e, ∞)`.

use std::f64::consts::E;

use crate::error::{Error, Result};

const BRANCH_POINT: f64 = -1.0 / E;

fn initial_guess(x: f64) -> f64 {
    if x < -0.32 {
        // Expansion about the branch point in p = sqrt(2(ex + 1)).
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x <= E {
        x.ln_1p()
    } else {
        let l = x.ln();
        l - l.ln()
    }
}

/// `W(x)`, the real solution of `w e^w = x` with `w ≥ −1`.
pub fn lambert_w(x: f64) -> Result<f64> {
    if x.is_nan() || x < BRANCH_POINT * (1.0 + 4.0 * f64::EPSILON) {
        return Err(Error::OutOfDomain(x));
    }
    if x <= BRANCH_POINT {
        return Ok(-1.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let mut w = initial_guess(x);
    for _ in 0..100 {
        // Halley's step for w e^w − x, divided through by e^w.
        let g = w - x * (-w).exp();
        let denom = (w + 1.0) - (w + 2.0) * g / (2.0 * w + 2.0);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        let step = g / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w.max(-1.0))
}

/// The tree function `T(x) = −W(−x)` on `[0, 1/e]`.
pub fn tree_function_exact(x: f64) -> Result<f64> {
    if !(0.0..=-BRANCH_POINT * (1.0 + 1e-15)).contains(&x) {
        return Err(Error::OutOfDomain(x));
    }
    Ok(-lambert_w(-x)?)
}
