//! One-dimensional minimisation and root bracketing.

const GOLDEN: f64 = 0.381_966_011_250_105_1;

/// Minimum of `f` on `[a, b]` by Brent's method: golden-section steps with
/// parabolic refinement. Infinite values are allowed and disable the
/// parabolic step.
pub(crate) fn brent_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut x = a + GOLDEN * (b - a);
    let (mut w, mut v) = (x, x);
    let mut fx = f(x);
    let (mut fw, mut fv) = (fx, fx);
    let (mut d, mut e): (f64, f64) = (0.0, 0.0);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let tol1 = tol * x.abs() + 1e-300;
        let tol2 = 2.0 * tol1;
        if (x - m).abs() <= tol2 - 0.5 * (b - a) {
            break;
        }
        let mut golden = true;
        if e.abs() > tol1 && fx.is_finite() && fw.is_finite() && fv.is_finite() {
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            if p.abs() < (0.5 * q * e).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = if x < m { tol1 } else { -tol1 };
                }
                golden = false;
            }
        }
        if golden {
            e = if x < m { b - x } else { a - x };
            d = GOLDEN * e;
        }
        let u = if d.abs() >= tol1 {
            x + d
        } else {
            x + tol1.copysign(d)
        };
        let fu = f(u);
        if fu <= fx {
            if u < x {
                b = x;
            } else {
                a = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    (x, fx)
}

/// Scans `n` interior grid points of `(lo, hi)`, then refines around the
/// best with [`brent_min`]. Returns the minimiser and its value.
pub(crate) fn scan_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize, tol: f64) -> (f64, f64) {
    let h = (hi - lo) / (n + 1) as f64;
    let mut best = (lo + h, f64::INFINITY);
    let mut best_i = 1;
    for i in 1..=n {
        let x = lo + h * i as f64;
        let fx = f(x);
        if fx < best.1 {
            best = (x, fx);
            best_i = i;
        }
    }
    let a = lo + h * (best_i - 1) as f64;
    let b = lo + h * (best_i + 1) as f64;
    let refined = brent_min(&f, a, b, tol);
    if refined.1 <= best.1 {
        refined
    } else {
        best
    }
}

/// Smallest `x` in `[lo, hi]` with `holds(x)`, for a predicate that is
/// false below some threshold and true above it.
pub(crate) fn bisect(holds: impl Fn(f64) -> bool, mut lo: f64, mut hi: f64, iterations: usize) -> f64 {
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
