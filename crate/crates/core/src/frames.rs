//! Frame functionals of exponential systems.
//!
//! For a measure `μ` on the line and a frequency set `Λ`, testing the frame
//! inequality against `f = e^{2πiξx}` reduces it to the functional
//! `Φ_Λ(ξ) = Σ_{λ∈Λ} |μ̂(ξ−λ)|²`. Lower/upper frame bounds restricted to
//! exponential probes are the infimum/supremum of `Φ_Λ`, and `Λ` is a
//! spectrum exactly when `Φ_Λ ≡ 1`.
//!
//! Sums are truncated to `|ξ−λ| ≤ R` and completed with Hurwitz-zeta tails.
//! For cosets with an integer period `p`, `sin²(π(ξ−λ))` is constant along
//! each one-sided tail, so the omitted mass is exactly
//! `sin²(π a)/π² · ζ(2, a/p)/p²` with `a` the distance to the first omitted
//! point; any other period gets the certified bound `C²·ζ(2, a/p)/p²`.
//!
//! Probe-grid checks sample a real-analytic periodic function and do not
//! certify the functional between grid points.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{decay_constant, ft_additive, t_functional, Measure};
use crate::pointsets::{count_in_interval, enumerate_window_2d, PointSet1D, PointSet2D, MEMBERSHIP_EPS};
use crate::specfun::{cos_pi, sin_pi, sinc_pi, zeta2_unchecked};
use crate::sum::NeumaierSum;

/// Relative allowance for floating-point rounding in a completed sum.
pub const ROUNDING_ALLOWANCE: f64 = 1e-12;

pub const DEFAULT_RADIUS: f64 = 1e4;
pub const DEFAULT_TOL: f64 = 1e-6;

fn rounding_bound(value: f64) -> f64 {
    ROUNDING_ALLOWANCE * value.abs().max(1.0)
}

/// One evaluation of `Φ_Λ(ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameValue {
    /// Best estimate of `Φ_Λ(ξ)`.
    pub value: f64,
    /// Bound on `|Φ_Λ(ξ) − value|`.
    pub tail: f64,
    /// Plain sum over `|ξ−λ| ≤ R`.
    pub truncated: f64,
}

/// Sum of `sinc²(ξ−λ)` over one coset `o + pZ` inside the radius, plus the
/// omitted tail (exact or bounded).
struct CosetSum {
    truncated: f64,
    tail_value: f64,
    tail_bound: f64,
}

fn coset_functional(xi: f64, offset: f64, period: f64, radius: f64, decay: f64) -> CosetSum {
    let rel = xi - offset;
    let kmin = ((rel - radius - MEMBERSHIP_EPS) / period).ceil() as i64;
    let kmax = ((rel + radius + MEMBERSHIP_EPS) / period).floor() as i64;
    let k0 = ((rel / period).round() as i64).clamp(kmin, kmax);

    let term = |k: i64| {
        let s = sinc_pi(rel - k as f64 * period);
        s * s
    };
    let mut acc = NeumaierSum::new();
    if kmin <= kmax {
        acc.add(term(k0));
        let mut step = 1;
        loop {
            let r = k0 + step;
            let l = k0 - step;
            let more_r = r <= kmax;
            let more_l = l >= kmin;
            if !more_r && !more_l {
                break;
            }
            if more_r {
                acc.add(term(r));
            }
            if more_l {
                acc.add(term(l));
            }
            step += 1;
        }
    }

    // distances from ξ to the first omitted point on each side
    let right = (kmax + 1) as f64 * period - rel;
    let left = rel - (kmin - 1) as f64 * period;
    let zr = zeta2_unchecked(right / period) / (period * period);
    let zl = zeta2_unchecked(left / period) / (period * period);
    if period.fract() == 0.0 {
        let sr = sin_pi(right);
        let sl = sin_pi(left);
        CosetSum {
            truncated: acc.value(),
            tail_value: (sr * sr * zr + sl * sl * zl) / (PI * PI),
            tail_bound: 0.0,
        }
    } else {
        CosetSum {
            truncated: acc.value(),
            tail_value: 0.0,
            tail_bound: decay * decay * (zr + zl),
        }
    }
}

/// `Φ_Λ(ξ) = Σ_{λ∈Λ} |μ̂(ξ−λ)|²` for a restricted Lebesgue measure.
///
/// Coset unions need `radius ≥ 2·period`. Finite lists are summed in full.
pub fn frame_functional(m: &Measure, s: &PointSet1D, xi: f64, radius: f64) -> Result<FrameValue> {
    m.lebesgue_start()?;
    let decay = decay_constant(m)?;
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::Domain(format!("radius must be positive, got {radius}")));
    }
    match s {
        PointSet1D::FiniteList(points) => {
            let mut inside = NeumaierSum::new();
            let mut outside = NeumaierSum::new();
            for &l in points {
                let v = sinc_pi(xi - l);
                if (xi - l).abs() <= radius + MEMBERSHIP_EPS {
                    inside.add(v * v);
                } else {
                    outside.add(v * v);
                }
            }
            let value = inside.value() + outside.value();
            Ok(FrameValue { value, tail: rounding_bound(value), truncated: inside.value() })
        }
        PointSet1D::CosetUnion { offsets, period } => {
            if radius < 2.0 * period {
                return Err(Error::Domain(format!(
                    "radius {radius} must be at least twice the period {period}"
                )));
            }
            let mut truncated = NeumaierSum::new();
            let mut tail_value = NeumaierSum::new();
            let mut tail_bound = 0.0;
            for &o in offsets {
                let c = coset_functional(xi, o, *period, radius, decay);
                truncated.add(c.truncated);
                tail_value.add(c.tail_value);
                tail_bound += c.tail_bound;
            }
            let value = truncated.value() + tail_value.value();
            Ok(FrameValue {
                value,
                tail: tail_bound + rounding_bound(value),
                truncated: truncated.value(),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbePoint {
    pub xi: f64,
    pub value: f64,
    pub tail: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrameReport {
    /// `min_ξ (Φ − tail)` over the grid; an upper bound for the lower frame
    /// bound over exponential probes.
    pub a_lower_probe: f64,
    /// `max_ξ (Φ + tail)` over the grid.
    pub b_upper_probe: f64,
    pub tail_bound_max: f64,
    pub samples: usize,
    pub truncation_radius: f64,
    /// Per-probe rows; `residual` is the distance of `Φ` to the nearest
    /// integer frame constant.
    pub points: Vec<ProbePoint>,
}

fn evaluate_grid(m: &Measure, s: &PointSet1D, xi_grid: &[f64], radius: f64) -> Result<Vec<FrameValue>> {
    xi_grid
        .par_iter()
        .map(|&xi| frame_functional(m, s, xi, radius))
        .collect()
}

/// Sample `Φ_Λ` on a grid of exponential probes.
pub fn probe_frame_bounds(m: &Measure, s: &PointSet1D, xi_grid: &[f64], radius: f64) -> Result<FrameReport> {
    if xi_grid.is_empty() {
        return Err(Error::Domain("probe grid is empty".into()));
    }
    let values = evaluate_grid(m, s, xi_grid, radius)?;
    let mut a = f64::INFINITY;
    let mut b = f64::NEG_INFINITY;
    let mut tail_max: f64 = 0.0;
    let mut points = Vec::with_capacity(values.len());
    for (&xi, v) in xi_grid.iter().zip(&values) {
        a = a.min(v.value - v.tail);
        b = b.max(v.value + v.tail);
        tail_max = tail_max.max(v.tail);
        points.push(ProbePoint {
            xi,
            value: v.value,
            tail: v.tail,
            residual: (v.value - v.value.round()).abs(),
        });
    }
    Ok(FrameReport {
        a_lower_probe: a,
        b_upper_probe: b,
        tail_bound_max: tail_max,
        samples: xi_grid.len(),
        truncation_radius: radius,
        points,
    })
}

/// Probe location in one or two dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Probe {
    One(f64),
    Two(f64, f64),
}

impl std::fmt::Display for Probe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Probe::One(x) => write!(f, "{x:?}"),
            Probe::Two(x, y) => write!(f, "({x:?}, {y:?})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumVerdict {
    pub pass: bool,
    /// `max |Φ(ξ) − 1| + tail(ξ)` over the probes.
    pub worst_residual: f64,
    pub worst_xi: Probe,
    pub tolerance: f64,
}

/// Spectrum test `Σ_λ |μ̂(ξ+λ)|² ≡ 1` on a probe grid, with per-probe rows.
///
/// Since `|μ̂|` is even, `Σ_λ |μ̂(ξ+λ)|² = Φ_Λ(−ξ)`.
pub fn jp_verify_with_rows(
    m: &Measure,
    s: &PointSet1D,
    xi_grid: &[f64],
    radius: f64,
    tol: f64,
) -> Result<(SpectrumVerdict, Vec<ProbePoint>)> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tol must be positive, got {tol}")));
    }
    if xi_grid.is_empty() {
        return Err(Error::Domain("probe grid is empty".into()));
    }
    let neg: Vec<f64> = xi_grid.iter().map(|x| -x).collect();
    let values = evaluate_grid(m, s, &neg, radius)?;
    let tail_max = values.iter().map(|v| v.tail).fold(0.0, f64::max);
    if tol <= tail_max {
        return Err(Error::ToleranceTooTight { tol, tail: tail_max });
    }
    let mut worst = f64::NEG_INFINITY;
    let mut worst_xi = xi_grid[0];
    let mut rows = Vec::with_capacity(values.len());
    for (&xi, v) in xi_grid.iter().zip(&values) {
        let residual = (v.value - 1.0).abs();
        if residual + v.tail > worst {
            worst = residual + v.tail;
            worst_xi = xi;
        }
        rows.push(ProbePoint { xi, value: v.value, tail: v.tail, residual });
    }
    Ok((
        SpectrumVerdict { pass: worst <= tol, worst_residual: worst, worst_xi: Probe::One(worst_xi), tolerance: tol },
        rows,
    ))
}

pub fn jp_verify(m: &Measure, s: &PointSet1D, xi_grid: &[f64], radius: f64, tol: f64) -> Result<SpectrumVerdict> {
    jp_verify_with_rows(m, s, xi_grid, radius, tol).map(|(v, _)| v)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoissonSum {
    /// `Σ_{|n| ≤ N} sinc(ξ1+n)·sinc(ξ2+n)`.
    pub partial: f64,
    /// `sinc(ξ2 − ξ1)`.
    pub closed_form: f64,
}

/// Symmetric partial sum of the sinc-product lattice series against its
/// closed form. The truncation error is `O(1/N)`.
pub fn poisson_diagonal_sum(xi1: f64, xi2: f64, n_terms: i64) -> Result<PoissonSum> {
    if n_terms < 1 {
        return Err(Error::Domain(format!("n_terms must be ≥ 1, got {n_terms}")));
    }
    let term = |n: i64| sinc_pi(xi1 + n as f64) * sinc_pi(xi2 + n as f64);
    let mut acc = NeumaierSum::new();
    acc.add(term(0));
    for n in 1..=n_terms {
        acc.add(term(n));
        acc.add(term(-n));
    }
    Ok(PoissonSum { partial: acc.value(), closed_form: sinc_pi(xi2 - xi1) })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceFit {
    pub n_terms: Vec<i64>,
    /// Largest `|partial − closed_form|` over the pairs, per `N`.
    pub max_errors: Vec<f64>,
    /// Least-squares slope of `log(error)` against `log(N)`.
    pub slope: f64,
    /// `max_N error(N)·N`.
    pub rate_constant: f64,
}

/// Empirical convergence rate of [`poisson_diagonal_sum`] over a set of pairs.
pub fn poisson_convergence(pairs: &[(f64, f64)], n_terms: &[i64]) -> Result<ConvergenceFit> {
    if pairs.is_empty() || n_terms.len() < 2 {
        return Err(Error::Domain("need at least one pair and two truncation levels".into()));
    }
    let mut max_errors = Vec::with_capacity(n_terms.len());
    for &n in n_terms {
        let errs: Vec<f64> = pairs
            .par_iter()
            .map(|&(a, b)| poisson_diagonal_sum(a, b, n).map(|p| (p.partial - p.closed_form).abs()))
            .collect::<Result<_>>()?;
        max_errors.push(errs.into_iter().fold(0.0, f64::max));
    }
    let xs: Vec<f64> = n_terms.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = max_errors.iter().map(|e| e.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let rate_constant = n_terms
        .iter()
        .zip(&max_errors)
        .map(|(&n, e)| e * n as f64)
        .fold(0.0, f64::max);
    Ok(ConvergenceFit { n_terms: n_terms.to_vec(), max_errors, slope: sxy / sxx, rate_constant })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdditiveProbe {
    pub xi: (f64, f64),
    /// Truncated direct sum of `|ρ̂(ξ+λ)|²` plus analytic tail.
    pub direct: f64,
    pub direct_bound: f64,
    /// `¼(Φ_{τ1} + Φ_{τ2}) + cross`, when the cross term has a closed form.
    pub semi_closed: Option<f64>,
    pub semi_closed_bound: Option<f64>,
    /// The cross term of the semi-closed form (zero for a spectrum).
    pub cross_term: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdditiveVerdict {
    pub verdict: SpectrumVerdict,
    pub probes: Vec<AdditiveProbe>,
    /// Largest `|direct − semi_closed|` where both exist.
    pub max_method_gap: f64,
}

/// `Σ_{n≥M} 1/((n+α)(n+β))` as midpoint and half-width, from
/// `1/((n+c)²−δ²) = (1/(n+c)²)·1/(1−δ²/(n+c)²)` with `c, δ` the mean and
/// half-difference of `α, β`.
fn product_tail(m: f64, alpha: f64, beta: f64) -> (f64, f64) {
    let c = 0.5 * (alpha + beta);
    let d = 0.5 * (beta - alpha);
    let z = m + c;
    let zeta = zeta2_unchecked(z);
    let r = d * d / (z * z);
    let upper = zeta / (1.0 - r);
    (0.5 * (zeta + upper), 0.5 * (upper - zeta))
}

fn is_even_integer(x: f64) -> bool {
    let k = (x / 2.0).round();
    (x - 2.0 * k).abs() <= 1e-12
}

/// Method (a): direct truncated sum over `n ∈ [−N, N]` plus tails.
fn additive_direct(t1: f64, t2: f64, sign: i32, shift: f64, xi: (f64, f64), n_terms: i64) -> (f64, f64) {
    let s = PointSet2D::DiagonalFamily { sign, shift };
    let pts = enumerate_window_2d(&s, -n_terms, n_terms).expect("n_terms ≥ 1");
    let mut acc = NeumaierSum::new();
    for (l1, l2) in pts {
        acc.add(ft_additive(t1, t2, xi.0 + l1, xi.1 + l2).norm_sqr());
    }
    let partial = acc.value();

    let sg = sign as f64;
    let d = (2.0 * t1 + 1.0) - sg * (2.0 * t2 + 1.0);
    let t_xi = t_functional(t1, t2, xi.0, xi.1);
    let m = (n_terms + 1) as f64;
    let pi2 = PI * PI;
    let mut tail = NeumaierSum::new();
    let mut uncertainty = 0.0;
    for u in [0.0, shift] {
        let alpha = u + xi.0;
        let beta = u + sg * xi.1;
        let sa = sin_pi(alpha);
        let sb = sin_pi(beta);
        // squared moduli on both sides
        tail.add(0.25 * sa * sa / pi2 * (zeta2_unchecked(m + alpha) + zeta2_unchecked(m - alpha)));
        tail.add(0.25 * sb * sb / pi2 * (zeta2_unchecked(m + beta) + zeta2_unchecked(m - beta)));
        // cross terms: ½ cos(π(T(ξ) + uD + nD)) sin(πα) sin(πβ) / (π²(n+α)(n+β))
        let (rv, rh) = product_tail(m, alpha, beta);
        let (lv, lh) = product_tail(m, -alpha, -beta);
        let amp = 0.5 * sa * sb / pi2;
        if is_even_integer(d) {
            let c = cos_pi(t_xi + u * d);
            tail.add(amp * c * (rv + lv));
            uncertainty += (amp * c).abs() * (rh + lh);
        } else {
            uncertainty += amp.abs() * (rv + rh + lv + lh);
        }
    }
    let value = partial + tail.value();
    (value, uncertainty + rounding_bound(value))
}

/// Method (b): the two coordinate projections are unions of two integer
/// cosets (tight, constant 2), and each branch's cross sum collapses to
/// `sinc(σξ2 − ξ1)` by the sinc-product lattice identity.
fn additive_semi_closed(
    t1: f64,
    t2: f64,
    sign: i32,
    shift: f64,
    xi: (f64, f64),
) -> Result<Option<(f64, f64, f64)>> {
    let sg = sign as f64;
    let d = (2.0 * t1 + 1.0) - sg * (2.0 * t2 + 1.0);
    if !is_even_integer(d) {
        return Ok(None);
    }
    let leb = Measure::lebesgue(t1);
    let proj = PointSet1D::coset_union(vec![0.0, shift], 1.0)?;
    let radius = 64.0;
    let phi1 = frame_functional(&leb, &proj, -xi.0, radius)?;
    let phi2 = frame_functional(&leb, &proj, -sg * xi.1, radius)?;
    let t_xi = t_functional(t1, t2, xi.0, xi.1);
    let kernel = sinc_pi(sg * xi.1 - xi.0);
    let cross = 0.5 * kernel * (cos_pi(t_xi) + cos_pi(t_xi + shift * d));
    let value = 0.25 * (phi1.value + phi2.value) + cross;
    let bound = 0.25 * (phi1.tail + phi2.tail) + rounding_bound(value);
    Ok(Some((value, bound, cross)))
}

/// Spectrum test for `ρ_{t1,t2}` by two routes that must both give 1.
pub fn jp_verify_additive(
    t1: f64,
    t2: f64,
    s: &PointSet2D,
    xi_grid: &[(f64, f64)],
    n_terms: i64,
    tol: f64,
) -> Result<AdditiveVerdict> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tol must be positive, got {tol}")));
    }
    if xi_grid.is_empty() {
        return Err(Error::Domain("probe grid is empty".into()));
    }
    let max_xi = xi_grid.iter().map(|p| p.0.abs().max(p.1.abs())).fold(0.0, f64::max);
    if n_terms < 1 || (n_terms as f64) < max_xi + 2.0 {
        return Err(Error::Domain(format!(
            "n_terms = {n_terms} too small for probes up to |ξ| = {max_xi}"
        )));
    }
    let probes: Vec<AdditiveProbe> = xi_grid
        .par_iter()
        .map(|&xi| -> Result<AdditiveProbe> {
            match s {
                PointSet2D::FiniteList2D(points) => {
                    let mut acc = NeumaierSum::new();
                    for &(l1, l2) in points {
                        acc.add(ft_additive(t1, t2, xi.0 + l1, xi.1 + l2).norm_sqr());
                    }
                    let v = acc.value();
                    Ok(AdditiveProbe {
                        xi,
                        direct: v,
                        direct_bound: rounding_bound(v),
                        semi_closed: None,
                        semi_closed_bound: None,
                        cross_term: None,
                    })
                }
                PointSet2D::DiagonalFamily { sign, shift } => {
                    let (direct, direct_bound) = additive_direct(t1, t2, *sign, *shift, xi, n_terms);
                    let semi = additive_semi_closed(t1, t2, *sign, *shift, xi)?;
                    Ok(AdditiveProbe {
                        xi,
                        direct,
                        direct_bound,
                        semi_closed: semi.map(|x| x.0),
                        semi_closed_bound: semi.map(|x| x.1),
                        cross_term: semi.map(|x| x.2),
                    })
                }
            }
        })
        .collect::<Result<_>>()?;

    let bound_max = probes
        .iter()
        .map(|p| p.direct_bound.max(p.semi_closed_bound.unwrap_or(0.0)))
        .fold(0.0, f64::max);
    if tol <= bound_max {
        return Err(Error::ToleranceTooTight { tol, tail: bound_max });
    }
    let mut worst = f64::NEG_INFINITY;
    let mut worst_xi = xi_grid[0];
    let mut gap: f64 = 0.0;
    for p in &probes {
        let mut r = (p.direct - 1.0).abs() + p.direct_bound;
        if let (Some(v), Some(b)) = (p.semi_closed, p.semi_closed_bound) {
            r = r.max((v - 1.0).abs() + b);
            gap = gap.max((v - p.direct).abs());
        }
        if r > worst {
            worst = r;
            worst_xi = p.xi;
        }
    }
    Ok(AdditiveVerdict {
        verdict: SpectrumVerdict {
            pass: worst <= tol,
            worst_residual: worst,
            worst_xi: Probe::Two(worst_xi.0, worst_xi.1),
            tolerance: tol,
        },
        probes,
        max_method_gap: gap,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselCountReport {
    /// `⌊π²B/4⌋`.
    pub cap: usize,
    pub max_count: usize,
    pub worst_center: f64,
    /// `cap − max_count`.
    pub margin: i64,
    pub pass: bool,
}

/// Unit-window counting check: a Bessel sequence with bound `B` has at most
/// `⌊π²B/4⌋` points in any closed interval of length 1.
pub fn bessel_count_check(s: &PointSet1D, b_bound: f64, centers: &[f64]) -> Result<BesselCountReport> {
    if !(b_bound > 0.0) {
        return Err(Error::Domain(format!("B must be positive, got {b_bound}")));
    }
    if centers.is_empty() {
        return Err(Error::Domain("need at least one center".into()));
    }
    let cap = (PI * PI * b_bound / 4.0).floor() as usize;
    let counts: Vec<usize> = centers
        .iter()
        .map(|&c| count_in_interval(s, c, 0.5))
        .collect::<Result<_>>()?;
    let (idx, &max_count) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("non-empty");
    Ok(BesselCountReport {
        cap,
        max_count,
        worst_center: centers[idx],
        margin: cap as i64 - max_count as i64,
        pass: max_count <= cap,
    })
}
