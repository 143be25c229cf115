//! Constants of the zero-free discs and the disc radii for a given graph.
//!
//! `F_λ(β)` is available by three routes: the defining series condition,
//! the one-dimensional variational formula and, for `λ ∈ {0, 1}`, a
//! Lambert-W closed form.

use std::f64::consts::E;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_quantities, interpolated_degree, WeightedGraph};
use crate::lambert::lambert_w;
use crate::optimize::{bisect, brent_min, scan_min};

/// Most series terms summed before a point is declared uncertified.
pub const SERIES_TERM_CAP: usize = 20_000;

const TAIL_TOLERANCE: f64 = 1e-15;
const ALPHA_GRID: usize = 40;
const ALPHA_CAP: f64 = 50.0;

/// Coefficient family of a series condition `Σ_{n≥2} e^{αn} a_n L^{−(n−1)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesFamily {
    /// `a_n = [1 + (n−1)λ]^{n−2}/(n−1)!`
    Lambda(f64),
    /// `a_n = ψ^{n/2} n^{n−1}/n!`
    Cayley(f64),
}

/// Denominator of the series condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Denominator {
    /// `e^α − 1`
    Gkfp,
    /// `α`
    KoteckyPreiss,
}

/// Inner infimum over `α` of a series condition at fixed `L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InnerInfimum {
    pub alpha: f64,
    pub value: f64,
    /// The minimiser sits where the series could not be certified, so the
    /// true infimum may be lower than `value`.
    pub uncertain: bool,
}

impl SeriesFamily {
    fn scale(self) -> f64 {
        match self {
            SeriesFamily::Lambda(_) => 1.0,
            SeriesFamily::Cayley(psi) => psi.sqrt(),
        }
    }

    /// Radius of convergence in `z = e^α s/L`.
    fn radius(self) -> f64 {
        match self {
            SeriesFamily::Lambda(l) if l > 0.0 => 1.0 / (E * l),
            SeriesFamily::Lambda(_) => f64::INFINITY,
            SeriesFamily::Cayley(_) => 1.0 / E,
        }
    }

    /// `a_{n+1}/a_n` for the normalised coefficients with `a_2 = 1`.
    fn ratio(self, n: usize) -> f64 {
        let nf = n as f64;
        match self {
            SeriesFamily::Lambda(l) => {
                (l + 1.0 / nf) * ((nf - 2.0) * (l / (1.0 + (nf - 1.0) * l)).ln_1p()).exp()
            }
            SeriesFamily::Cayley(_) => ((nf - 1.0) * (1.0 / nf).ln_1p()).exp(),
        }
    }

    /// Upper bound on every ratio `a_{k+1}/a_k` with `k ≥ n`.
    fn ratio_bound(self, n: usize) -> f64 {
        match self {
            SeriesFamily::Lambda(l) => E * (l + 1.0 / n as f64),
            SeriesFamily::Cayley(_) => E,
        }
    }
}

/// `Σ_{n≥2} a_n z^{n−1}` with a certified tail, or `None` when the tail
/// cannot be certified within [`SERIES_TERM_CAP`] terms.
fn series_sum(family: SeriesFamily, z: f64) -> Option<f64> {
    let mut term = z;
    let mut sum = z;
    for n in 2..SERIES_TERM_CAP {
        let rho = z * family.ratio_bound(n);
        if rho < 1.0 && term * rho / (1.0 - rho) <= TAIL_TOLERANCE * sum {
            return Some(sum);
        }
        term *= family.ratio(n) * z;
        sum += term;
    }
    None
}

/// `D(α)^{−1} Σ_{n≥2} e^{αn} a_n L^{−(n−1)}`, or `None` if uncertified.
pub fn series_condition(family: SeriesFamily, denom: Denominator, alpha: f64, l: f64) -> Option<f64> {
    let s = family.scale();
    let z = alpha.exp() * s / l;
    let d = match denom {
        Denominator::Gkfp => alpha.exp_m1(),
        Denominator::KoteckyPreiss => alpha,
    };
    series_sum(family, z).map(|sum| alpha.exp() * s * sum / d)
}

/// `inf_{α>0}` of [`series_condition`] at fixed `L`.
pub fn inner_infimum(family: SeriesFamily, denom: Denominator, l: f64) -> InnerInfimum {
    let radius = family.radius();
    let from_radius = (radius * l / family.scale()).ln();
    let alpha_max = from_radius.min(ALPHA_CAP);
    if !(alpha_max > 0.0) {
        return InnerInfimum {
            alpha: f64::NAN,
            value: f64::INFINITY,
            uncertain: false,
        };
    }
    let capped = std::cell::Cell::new(false);
    let objective = |alpha: f64| match series_condition(family, denom, alpha, l) {
        Some(v) => v,
        None => {
            capped.set(true);
            f64::INFINITY
        }
    };
    let (alpha, value) = scan_min(objective, 0.0, alpha_max, ALPHA_GRID, 1e-11);
    let cell = alpha_max / (ALPHA_GRID + 1) as f64;
    let at_edge = from_radius <= ALPHA_CAP && alpha > alpha_max - 0.05 * cell;
    InnerInfimum {
        alpha,
        value,
        uncertain: at_edge || (capped.get() && alpha > alpha_max - 2.0 * cell),
    }
}

/// `min{L : inf_α (series condition) ≤ target}` by bisection on `[0, hi]`.
pub fn series_threshold(family: SeriesFamily, denom: Denominator, target: f64, hi: f64) -> Result<f64> {
    let holds = |l: f64| inner_infimum(family, denom, l).value <= target;
    if !holds(hi) {
        return Err(Error::NoConvergence(format!(
            "condition fails at the upper bracket L = {hi}"
        )));
    }
    let l = bisect(holds, 0.0, hi, 80);
    let below = inner_infimum(family, denom, l * (1.0 - 1e-12));
    if below.uncertain {
        return Err(Error::NoConvergence(format!(
            "series tail not certified near L = {l}"
        )));
    }
    Ok(l)
}

fn check_f_args(lambda: f64, beta: f64) -> Result<()> {
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::OutOfDomain(lambda));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::OutOfDomain(beta));
    }
    Ok(())
}

/// `F_λ(β)` from its defining series condition.
pub fn f_lambda_series(lambda: f64, beta: f64) -> Result<f64> {
    check_f_args(lambda, beta)?;
    let hi = 4.0 / beta + 4.0 + 2.0 * lambda.max(1.0);
    series_threshold(SeriesFamily::Lambda(lambda), Denominator::Gkfp, beta, hi)
}

/// `F_λ(β) = min_{1<y<1+β} β y^λ / ((1+β−y) log y)`.
///
/// Minimised over `y = 1 + βt`, `t ∈ (0, 1)`. Returns NaN outside
/// `λ ≥ 0, β > 0`.
pub fn f_lambda_variational(lambda: f64, beta: f64) -> f64 {
    if check_f_args(lambda, beta).is_err() {
        return f64::NAN;
    }
    let objective =
        |t: f64| (lambda * (beta * t).ln_1p()).exp() / ((1.0 - t) * (beta * t).ln_1p());
    scan_min(objective, 0.0, 1.0, 64, 1e-12).1
}

// u with u − log(1 − u) = log(1 + β), i.e. u = 1 − W(e/(1+β)), solved so
// that u keeps full relative precision as β → 0.
fn one_minus_w_down(beta: f64) -> f64 {
    let target = beta.ln_1p();
    let mut u = 1.0 - lambert_w(E / (1.0 + beta)).unwrap_or(1.0);
    for _ in 0..50 {
        let g = u - (-u).ln_1p() - target;
        let step = g / (1.0 + 1.0 / (1.0 - u));
        u -= step;
        if step.abs() <= 1e-17 * u.abs() {
            break;
        }
    }
    u
}

// v with v + log(1 + v) = log(1 + β), i.e. v = W((1+β)e) − 1.
fn w_up_minus_one(beta: f64) -> f64 {
    let target = beta.ln_1p();
    let mut v = lambert_w((1.0 + beta) * E).unwrap_or(1.0) - 1.0;
    for _ in 0..50 {
        let g = v + v.ln_1p() - target;
        let step = g / (1.0 + 1.0 / (1.0 + v));
        v -= step;
        if step.abs() <= 1e-17 * v.abs() {
            break;
        }
    }
    v
}

/// Lambert-W closed forms:
/// `F_0(β) = β/(1+β) · W((1+β)e)/[W((1+β)e) − 1]²` and
/// `F_1(β) = β W(e/(1+β))/[1 − W(e/(1+β))]²`.
///
/// Both formulas are analytic at `β = 0` after multiplying by `β` and are
/// evaluated for any `β > −1`.
pub fn f_closed(lambda: f64, beta: f64) -> Result<f64> {
    if !(beta > -1.0) || beta == 0.0 {
        return Err(Error::OutOfDomain(beta));
    }
    if lambda == 0.0 {
        let v = w_up_minus_one(beta);
        Ok(beta / (1.0 + beta) * (1.0 + v) / (v * v))
    } else if lambda == 1.0 {
        let u = one_minus_w_down(beta);
        Ok(beta * (1.0 - u) / (u * u))
    } else {
        Err(Error::BadLambda(lambda))
    }
}

/// `𝒦*(ψ) = ψ^{1/2} F_1(ψ^{−1/2})`, from the Lambert-W form.
pub fn kstar_psi(psi: f64) -> f64 {
    let u = one_minus_w_down(psi.powf(-0.5));
    (1.0 - u) / (u * u)
}

/// `𝒦*(ψ) = min_{1<y<1+ψ^{−1/2}} y/((1+ψ^{−1/2}−y) log y)`.
pub fn kstar_psi_variational(psi: f64) -> f64 {
    psi.sqrt() * f_lambda_variational(1.0, psi.powf(-0.5))
}

/// `𝒦*(ψ)` from its series condition with coefficients `ψ^{n/2} n^{n−1}/n!`.
pub fn kstar_psi_series(psi: f64) -> Result<f64> {
    if !(psi > 0.0) {
        return Err(Error::OutOfDomain(psi));
    }
    let hi = 4.0 * psi + 3.0 * psi.sqrt() + 1.0;
    series_threshold(SeriesFamily::Cayley(psi), Denominator::Gkfp, 1.0, hi)
}

/// `K*_λ = F_λ(1) = min_{1<y<2} y^λ/((2−y) log y)`.
pub fn kstar_lambda(lambda: f64) -> f64 {
    f_lambda_variational(lambda, 1.0)
}

/// `K = min_{a>0} (a + e^a)/log(1 + a e^{−a})`.
pub fn sokal_k() -> f64 {
    sokal_k_with_minimiser().1
}

/// The minimising `a` together with `K`.
pub fn sokal_k_with_minimiser() -> (f64, f64) {
    let objective = |a: f64| (a + a.exp()) / (a * (-a).exp()).ln_1p();
    let (a, _) = scan_min(objective, 0.0, 5.0, 50, 1e-12);
    let (a, k) = brent_min(objective, a * 0.9, a * 1.1, 1e-14);
    (a, k)
}

/// `K` from its series condition with denominator `α`.
pub fn sokal_k_series() -> Result<f64> {
    series_threshold(SeriesFamily::Cayley(1.0), Denominator::KoteckyPreiss, 1.0, 10.0)
}

/// `g(λ) = F_λ(1)/(λ F_1(λ))`, the ratio of the two disc radii at `Ψ^{−1/2} = λ`.
pub fn g_ratio(lambda: f64) -> f64 {
    let f1 = f_closed(1.0, lambda).unwrap_or(f64::NAN);
    kstar_lambda(lambda) / (lambda * f1)
}

/// Constants and disc radii for one weighted graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundSet {
    #[serde(rename = "K")]
    pub k: f64,
    pub kstar_psi: f64,
    pub kstar_lambda: Option<f64>,
    /// `𝒦*(Ψ) Δ′`; every root satisfies `|q| < radius_thm12`.
    pub radius_thm12: f64,
    /// `K*_λ Ψ^{1/2} Δ̃`, for simple graphs with `Δ̃ > 0`.
    pub radius_thm13: Option<f64>,
    /// `K*_1 Ψ^{1/2} Δ`, the weaker simple-graph disc.
    pub radius_thm13_weak: Option<f64>,
    /// `K Δ`, only when `|1 + w_e| ≤ 1` on every edge.
    pub radius_thm11: Option<f64>,
    pub psi: f64,
    pub delta: f64,
    pub delta_prime: f64,
    pub delta_tilde: f64,
    pub lambda: Option<f64>,
    #[serde(skip)]
    graph: WeightedGraph,
}

impl BoundSet {
    /// `Δ′_a Ψ^{1/2} F_{λ_a}(Ψ^{−(1−a)/2})` with `λ_a = Δ′/Δ′_a`; absent for
    /// non-simple graphs and when every weight vanishes.
    pub fn radius_interpolated(&self, a: f64) -> Result<Option<f64>> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::BadInterpolation(a));
        }
        if !self.graph.is_simple() {
            return Ok(None);
        }
        let da = interpolated_degree(&self.graph, a);
        if da == 0.0 {
            return Ok(None);
        }
        let lambda_a = self.delta_prime / da;
        let beta = self.psi.powf(-(1.0 - a) / 2.0);
        Ok(Some(da * self.psi.sqrt() * f_lambda_variational(lambda_a, beta)))
    }

    /// The ratio of the interpolated radius to the first disc,
    /// `F_{λ_a}(Ψ^{−(1−a)/2}) / (λ_a F_1(Ψ^{−1/2}))`.
    pub fn interpolation_ratio(&self, a: f64) -> Result<Option<f64>> {
        Ok(self
            .radius_interpolated(a)?
            .map(|r| r / self.radius_thm12))
    }
}

pub fn graph_bounds(g: &WeightedGraph) -> BoundSet {
    let dq = degree_quantities(g);
    let kstar = kstar_psi(dq.psi);
    let simple_lambda = if g.is_simple() { dq.lambda } else { None };
    let kstar_lambda = simple_lambda.map(kstar_lambda);
    let k = sokal_k();
    let antiferro = g.edges().iter().all(|e| (1.0 + e.w).norm() <= 1.0);
    BoundSet {
        k,
        kstar_psi: kstar,
        kstar_lambda,
        radius_thm12: kstar * dq.delta_prime,
        radius_thm13: kstar_lambda.map(|kl| kl * dq.psi.sqrt() * dq.delta_tilde),
        radius_thm13_weak: g
            .is_simple()
            .then(|| kstar_psi(1.0) * dq.psi.sqrt() * dq.delta),
        radius_thm11: antiferro.then_some(k * dq.delta),
        psi: dq.psi,
        delta: dq.delta,
        delta_prime: dq.delta_prime,
        delta_tilde: dq.delta_tilde,
        lambda: dq.lambda,
        graph: g.clone(),
    }
}

/// Left side of the series condition that proves the first disc, at
/// `L = |q|/Δ′`: at most 1 exactly when `|q| ≥ 𝒦*(Ψ) Δ′`.
pub fn thm12_condition(g: &WeightedGraph, q_abs: f64) -> InnerInfimum {
    let dq = degree_quantities(g);
    inner_infimum(
        SeriesFamily::Cayley(dq.psi),
        Denominator::Gkfp,
        q_abs / dq.delta_prime,
    )
}

/// Left side of the series condition that proves the simple-graph disc, at
/// `L = |q| Ψ^{−1/2}/Δ̃`. Absent for non-simple graphs or undefined `λ`.
pub fn thm13_condition(g: &WeightedGraph, q_abs: f64) -> Option<InnerInfimum> {
    let dq = degree_quantities(g);
    let lambda = dq.lambda?;
    g.is_simple().then(|| {
        inner_infimum(
            SeriesFamily::Lambda(lambda),
            Denominator::Gkfp,
            q_abs / (dq.psi.sqrt() * dq.delta_tilde),
        )
    })
}
