//! Special functions behind every bound in the crate: the normalized sinc,
//! the Hurwitz zeta function at `s = 2`, `F(x) = x·ζ(2, x)`, the inverse of
//! `ζ(2, ·)`, and the first positive fixed point of `tan`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::bisect;

/// Tolerance and iteration budget for series and root evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy {
    pub abs_tol: f64,
    pub max_iter: usize,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        Self { abs_tol: 1e-12, max_iter: 200 }
    }
}

impl EvalPolicy {
    pub fn new(abs_tol: f64, max_iter: usize) -> Result<Self> {
        let p = Self { abs_tol, max_iter };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !self.abs_tol.is_finite() {
            return Err(Error::Domain(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if self.max_iter == 0 {
            return Err(Error::Domain("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

/// `sin(πx)`, exact zero at integers.
pub fn sin_pi(x: f64) -> f64 {
    let k = x.round();
    let s = (PI * (x - k)).sin();
    if k.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

/// `cos(πx)`, exact `±1` at integers.
pub fn cos_pi(x: f64) -> f64 {
    let k = x.round();
    let c = (PI * (x - k)).cos();
    if k.rem_euclid(2.0) == 0.0 {
        c
    } else {
        -c
    }
}

const SINC_TAYLOR_CUTOFF: f64 = 1e-4;

/// Normalized sinc, `sin(πx)/(πx)` with `sinc_pi(0) = 1`.
pub fn sinc_pi(x: f64) -> f64 {
    if x.abs() < SINC_TAYLOR_CUTOFF {
        let y2 = (PI * x) * (PI * x);
        1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0))
    } else {
        sin_pi(x) / (PI * x)
    }
}

/// Shift target for the recurrence before switching to the asymptotic series.
const ZETA_ASYMPTOTIC_START: f64 = 10.0;

/// Euler–Maclaurin series for `ζ(2, z)` at large `z`, through the `B₁₄` term.
/// The first omitted term is `B₁₆/z¹⁷ ≈ 7.1/z¹⁷`, below `1e-16` for `z ≥ 10`.
fn zeta2_asymptotic(z: f64) -> f64 {
    // B_{2k} for k = 1..=7
    const BERNOULLI: [f64; 7] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
    ];
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    // Horner in 1/z² for Σ B_{2k} z^{-(2k+1)}
    let mut acc = 0.0;
    for b in BERNOULLI.iter().rev() {
        acc = acc * inv2 + b;
    }
    let corr = acc * inv2 * inv;
    inv + 0.5 * inv2 + corr
}

/// Hurwitz zeta `ζ(2, x) = Σ_{n≥0} 1/(x+n)²` for `x > 0`.
///
/// Uses the shift recurrence until the argument reaches 10, then the
/// Euler–Maclaurin series; the result is accurate to a few ulps, well
/// inside `policy.abs_tol` for any tolerance above `1e-14·ζ(2, x)`.
pub fn hurwitz_zeta2(x: f64, policy: EvalPolicy) -> Result<f64> {
    policy.validate()?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ζ(2, x) needs x > 0, got {x}")));
    }
    Ok(zeta2_unchecked(x))
}

/// `ζ(2, x)` without argument validation; `x` must be positive and finite.
pub(crate) fn zeta2_unchecked(x: f64) -> f64 {
    let shift = if x < ZETA_ASYMPTOTIC_START {
        (ZETA_ASYMPTOTIC_START - x).ceil() as usize
    } else {
        0
    };
    let z = x + shift as f64;
    // small terms first
    let mut acc = zeta2_asymptotic(z);
    let mut comp = 0.0;
    for k in (0..shift).rev() {
        let term = 1.0 / ((x + k as f64) * (x + k as f64));
        let t = acc + term;
        comp += if acc.abs() >= term.abs() { (acc - t) + term } else { (term - t) + acc };
        acc = t;
    }
    acc + comp
}

/// `F(x) = x·ζ(2, x)`.
pub fn big_f(x: f64) -> Result<f64> {
    Ok(x * hurwitz_zeta2(x, EvalPolicy::default())?)
}

/// Unique `x > 0` with `ζ(2, x) = y`, by bisection on the decreasing map.
///
/// The bracket comes from `max(1/x, 1/x²) < ζ(2, x) < 1/x + 1/x²`.
pub fn inv_hurwitz_zeta2(y: f64, policy: EvalPolicy) -> Result<f64> {
    policy.validate()?;
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("ζ⁻¹(2, y) needs y > 0, got {y}")));
    }
    let lo = (1.0 / y).max(1.0 / y.sqrt());
    let hi = (1.0 + (1.0 + 4.0 * y).sqrt()) / (2.0 * y);
    // widen by one ulp-scale step so both endpoints strictly bracket
    let lo = lo * (1.0 - 1e-12);
    let hi = hi * (1.0 + 1e-12);
    bisect(|x| zeta2_unchecked(x) - y, lo, hi, policy.max_iter, "inv_hurwitz_zeta2")
}

/// Minimal positive solution of `tan x = x`, in `(π, 3π/2)`.
///
/// Bisects `sin x − x cos x`, which has the same root there but no pole.
/// Fails if the root's slope `|sin x₀ / x₀|` exceeds 0.22.
pub fn tangent_fixed_point(policy: EvalPolicy) -> Result<f64> {
    policy.validate()?;
    let x0 = bisect(
        |x| x.sin() - x * x.cos(),
        PI,
        PI + FRAC_PI_2,
        policy.max_iter,
        "tangent_fixed_point",
    )?;
    let residual = (x0.tan() - x0).abs();
    if residual > policy.abs_tol * x0 * x0 {
        return Err(Error::Domain(format!("tan x0 − x0 residual {residual:e} too large")));
    }
    let slope = (x0.sin() / x0).abs();
    if slope > 0.22 {
        return Err(Error::Domain(format!("|sin x0 / x0| = {slope} exceeds 0.22")));
    }
    Ok(x0)
}

/// The decreasing majorant `1 + 1/x − 1/(x+1)²` of `F` on `[0.65, ∞)`.
pub fn big_f_majorant(x: f64) -> f64 {
    1.0 + 1.0 / x - 1.0 / ((x + 1.0) * (x + 1.0))
}

/// Left end of the range where the majorant is used.
pub const MAJORANT_START: f64 = 0.65;

/// Slack absorbing rounding in "`F(x) ≤ π²/4`" comparisons.
pub const CLAIM_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BigFClaimReport {
    pub grid_points: usize,
    pub max_value: f64,
    pub argmax: f64,
    /// `π²/4 − max F` over the grid.
    pub margin: f64,
    /// Majorant at 0.65.
    pub majorant_at_start: f64,
    /// `π²/4 − f(0.65)`.
    pub majorant_margin: f64,
    /// `F ≤ f` at every grid point in `[0.65, x_hi]`, and `f` non-increasing there.
    pub majorant_dominates: bool,
    pub pass: bool,
}

/// Grid check that `F(x) ≤ F(½) = π²/4` on `[x_lo, x_hi]`, together with the
/// majorant argument on `[0.65, x_hi]`.
pub fn verify_big_f_claim(x_lo: f64, x_hi: f64, step: f64) -> Result<BigFClaimReport> {
    if !(x_lo >= 0.5) {
        return Err(Error::Domain(format!("x_lo must be ≥ 0.5, got {x_lo}")));
    }
    if !(x_hi >= x_lo) || !x_hi.is_finite() {
        return Err(Error::Domain(format!("need x_lo ≤ x_hi, got [{x_lo}, {x_hi}]")));
    }
    if !(step > 0.0) {
        return Err(Error::Domain(format!("step must be positive, got {step}")));
    }
    let target = PI * PI / 4.0;
    let n = ((x_hi - x_lo) / step + 1e-9).floor() as usize;
    let mut max_value = f64::NEG_INFINITY;
    let mut argmax = x_lo;
    let mut every_point_ok = true;
    let mut majorant_dominates = true;
    let mut prev_majorant = f64::INFINITY;
    for i in 0..=n {
        let x = x_lo + i as f64 * step;
        let fx = x * zeta2_unchecked(x);
        if fx > max_value {
            max_value = fx;
            argmax = x;
        }
        if target - fx < -CLAIM_SLACK {
            every_point_ok = false;
        }
        if x >= MAJORANT_START {
            let m = big_f_majorant(x);
            if fx > m + CLAIM_SLACK || m > prev_majorant {
                majorant_dominates = false;
            }
            prev_majorant = m;
        }
    }
    let majorant_at_start = big_f_majorant(MAJORANT_START);
    let majorant_margin = target - majorant_at_start;
    Ok(BigFClaimReport {
        grid_points: n + 1,
        max_value,
        argmax,
        margin: target - max_value,
        majorant_at_start,
        majorant_margin,
        majorant_dominates,
        pass: every_point_ok && majorant_dominates && majorant_margin > 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;

    /// Brute-force oracle: partial sum to N plus the integral bracket
    /// `1/(x+N) ≤ tail ≤ 1/(x+N−1)`, midpoint returned.
    fn zeta2_brute(x: f64, n: usize) -> (f64, f64) {
        let partial: f64 = crate::sum::compensated_sum((0..n).rev().map(|k| {
            let d = x + k as f64;
            1.0 / (d * d)
        }));
        let lo = 1.0 / (x + n as f64);
        let hi = 1.0 / (x + n as f64 - 1.0);
        (partial + 0.5 * (lo + hi), 0.5 * (hi - lo))
    }

    #[test]
    fn sinc_examples() {
        assert_eq!(sinc_pi(0.0), 1.0);
        assert_eq!(sinc_pi(1.0), 0.0);
        assert_eq!(sinc_pi(-3.0), 0.0);
        assert_abs_diff_eq!(sinc_pi(0.8), (0.8 * PI).sin() / (0.8 * PI), epsilon = 1e-15);
        assert!(sinc_pi(0.8) >= 0.23);
        assert_abs_diff_eq!(sinc_pi(0.5), 2.0 / PI, epsilon = 1e-16);
    }

    #[test]
    fn sinc_taylor_branch_is_continuous() {
        let below = sinc_pi(SINC_TAYLOR_CUTOFF * (1.0 - 1e-9));
        let above = sinc_pi(SINC_TAYLOR_CUTOFF * (1.0 + 1e-9));
        assert_abs_diff_eq!(below, above, epsilon = 1e-15);
        let x: f64 = 3e-5;
        assert_abs_diff_eq!(sinc_pi(x), (PI * x).sin() / (PI * x), epsilon = 1e-16);
    }

    #[test]
    fn zeta_closed_forms() {
        let p = EvalPolicy::default();
        assert_abs_diff_eq!(hurwitz_zeta2(1.0, p).unwrap(), PI * PI / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(hurwitz_zeta2(0.5, p).unwrap(), PI * PI / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(hurwitz_zeta2(2.0, p).unwrap(), PI * PI / 6.0 - 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            hurwitz_zeta2(0.25, p).unwrap(),
            PI * PI + 8.0 * CATALAN,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            hurwitz_zeta2(0.75, p).unwrap(),
            PI * PI - 8.0 * CATALAN,
            epsilon = 1e-13
        );
    }

    #[test]
    fn zeta_matches_brute_force() {
        for &x in &[0.1, 0.37, 1.5, 7.25, 9.999, 10.0, 10.001, 33.3, 1234.5] {
            let (oracle, half_width) = zeta2_brute(x, 2_000_000);
            let got = hurwitz_zeta2(x, EvalPolicy::default()).unwrap();
            assert!(
                (got - oracle).abs() <= half_width + 1e-13,
                "x = {x}: got {got}, oracle {oracle} ± {half_width}"
            );
        }
    }

    #[test]
    fn zeta_domain() {
        let p = EvalPolicy::default();
        assert!(matches!(hurwitz_zeta2(0.0, p), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta2(-1.0, p), Err(Error::Domain(_))));
        assert!(matches!(hurwitz_zeta2(f64::NAN, p), Err(Error::Domain(_))));
        assert!(EvalPolicy::new(0.0, 10).is_err());
        assert!(EvalPolicy::new(1e-12, 0).is_err());
    }

    #[test]
    fn big_f_examples() {
        assert_abs_diff_eq!(big_f(0.5).unwrap(), PI * PI / 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(big_f(1.0).unwrap(), PI * PI / 6.0, epsilon = 1e-14);
        // 10·Σ 1/(10+n)² by partial sum with integral tail bracket
        let (oracle, hw) = zeta2_brute(10.0, 2_000_000);
        let got = big_f(10.0).unwrap();
        assert!((got - 10.0 * oracle).abs() <= 10.0 * hw + 1e-12);
        assert_abs_diff_eq!(got, 1.0516634, epsilon = 1e-7);
    }

    #[test]
    fn inverse_examples() {
        let p = EvalPolicy::default();
        assert_abs_diff_eq!(inv_hurwitz_zeta2(PI * PI / 2.0, p).unwrap(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(inv_hurwitz_zeta2(PI * PI / 6.0, p).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv_hurwitz_zeta2(0.6449341, p).unwrap(), 2.0, epsilon = 1e-6);
        let x = inv_hurwitz_zeta2(0.6449341, p).unwrap();
        assert!((zeta2_unchecked(x) - 0.6449341).abs() <= p.abs_tol);
        assert!(inv_hurwitz_zeta2(0.0, p).is_err());
    }

    #[test]
    fn inverse_iteration_limit() {
        let p = EvalPolicy::new(1e-12, 5).unwrap();
        assert!(matches!(
            inv_hurwitz_zeta2(1.0, p),
            Err(Error::IterationLimit { .. })
        ));
    }

    #[test]
    fn tangent_point() {
        let p = EvalPolicy::default();
        let x0 = tangent_fixed_point(p).unwrap();
        // oracle: bisection of tan x − x on (π + 0.1, 3π/2 − 0.001)
        let oracle = bisect(|x| x.tan() - x, PI + 0.1, 1.5 * PI - 0.001, 200, "oracle").unwrap();
        assert_abs_diff_eq!(x0, oracle, epsilon = 1e-12);
        assert_abs_diff_eq!(x0, 4.4934095, epsilon = 1e-7);
        assert!((x0.tan() - x0).abs() <= 1e-12);
        let slope = (x0.sin() / x0).abs();
        assert_abs_diff_eq!(slope, 0.2172, epsilon = 1e-4);
        assert!(slope <= 0.22);
    }

    #[test]
    fn big_f_claim() {
        let r = verify_big_f_claim(0.5, 20.0, 0.001).unwrap();
        assert!(r.pass);
        assert_eq!(r.argmax, 0.5);
        assert!(r.margin.abs() < 1e-12);
        assert_abs_diff_eq!(r.majorant_at_start, 2.1712, epsilon = 1e-4);
        assert!(r.majorant_margin >= 0.29);

        let single = verify_big_f_claim(0.5, 0.5, 0.1).unwrap();
        assert_eq!(single.grid_points, 1);
        assert!(single.margin.abs() < 1e-12);
        assert!(verify_big_f_claim(0.4, 1.0, 0.1).is_err());
    }
}
