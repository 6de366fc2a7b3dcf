//! Probability measures with closed-form Fourier transforms.
//!
//! Conventions: `μ̂(ξ) = ∫ e^{−2πiξx} dμ(x)`. For Lebesgue measure on
//! `[t, t+1]` this is `e^{−πiξ(2t+1)}·sinc_pi(ξ)`. The additive measure
//! `ρ_{t1,t2}` puts mass ½ on `[t1, t1+1]×{0}` and ½ on `{0}×[t2, t2+1]`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointsets::parse_f64;
use crate::specfun::{cos_pi, sin_pi, sinc_pi};

pub type Complex = num_complex::Complex64;

/// Default tolerance for zero-set membership and "near an integer" tests.
pub const ZERO_SET_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Measure {
    /// Lebesgue measure restricted to `[t, t+1]`.
    #[serde(rename = "lebesgue")]
    RestrictedLebesgue { t: f64 },
    /// `½(L_{[t1,t1+1]}×δ₀ + δ₀×L_{[t2,t2+1]})` in the plane.
    #[serde(rename = "additive")]
    AdditiveLebesgue { t1: f64, t2: f64 },
}

impl Measure {
    pub fn lebesgue(t: f64) -> Self {
        Measure::RestrictedLebesgue { t }
    }

    pub fn additive(t1: f64, t2: f64) -> Self {
        Measure::AdditiveLebesgue { t1, t2 }
    }

    /// Translation parameter of a restricted Lebesgue measure.
    pub fn lebesgue_start(&self) -> Result<f64> {
        match *self {
            Measure::RestrictedLebesgue { t } => Ok(t),
            Measure::AdditiveLebesgue { .. } => Err(Error::UnsupportedMeasure(
                "operation needs a one-dimensional restricted Lebesgue measure".into(),
            )),
        }
    }
}

/// Compact descriptor: `lebesgue:<t>` or `additive:<t1>,<t2>`.
impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::RestrictedLebesgue { t } => write!(f, "lebesgue:{t:?}"),
            Measure::AdditiveLebesgue { t1, t2 } => write!(f, "additive:{t1:?},{t2:?}"),
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    /// Accepts the compact descriptor or the JSON form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |message: String| Error::Parse { field: "measure".into(), message };
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| parse_err(e.to_string()));
        }
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err(format!("`{s}` lacks a `kind:` prefix")))?;
        match kind {
            "lebesgue" => Ok(Measure::lebesgue(parse_f64("measure", body)?)),
            "additive" => {
                let (a, b) = body
                    .split_once(',')
                    .ok_or_else(|| parse_err("additive descriptor needs `t1,t2`".into()))?;
                Ok(Measure::additive(parse_f64("measure", a)?, parse_f64("measure", b)?))
            }
            other => Err(parse_err(format!("unknown measure kind `{other}`"))),
        }
    }
}

/// `e^{iπθ}` with the angle reduced modulo 2 before evaluation.
pub fn cis_pi(theta: f64) -> Complex {
    Complex::new(cos_pi(theta), sin_pi(theta))
}

/// Fourier transform of Lebesgue measure on `[t, t+1]` at `ξ`.
pub fn ft_restricted_lebesgue(t: f64, xi: f64) -> Complex {
    cis_pi(-xi * (2.0 * t + 1.0)) * sinc_pi(xi)
}

/// Fourier transform of `ρ_{t1,t2}` at `(ξ1, ξ2)`.
pub fn ft_additive(t1: f64, t2: f64, xi1: f64, xi2: f64) -> Complex {
    0.5 * (ft_restricted_lebesgue(t1, xi1) + ft_restricted_lebesgue(t2, xi2))
}

/// Squared modulus `|ρ̂(ξ1, ξ2)|²`, computed as
/// `¼(s1² + s2² + 2·cos(πT(ξ))·s1·s2)` with `s_j = sinc_pi(ξ_j)`.
pub fn ft_additive_norm_sqr(t1: f64, t2: f64, xi1: f64, xi2: f64) -> f64 {
    let s1 = sinc_pi(xi1);
    let s2 = sinc_pi(xi2);
    let c = cos_pi(t_functional(t1, t2, xi1, xi2));
    0.25 * (s1 * s1 + s2 * s2 + 2.0 * c * s1 * s2)
}

/// Smallest `C` with `|μ̂(ξ)| ≤ C/|ξ|` for all `ξ ≠ 0`.
pub fn decay_constant(m: &Measure) -> Result<f64> {
    match m {
        Measure::RestrictedLebesgue { .. } => Ok(1.0 / PI),
        Measure::AdditiveLebesgue { .. } => Err(Error::UnsupportedMeasure(
            "additive measure: ρ̂(ξ1, 0) → ½ as ξ1 → ∞, so no decay constant exists".into(),
        )),
    }
}

/// `T(λ1, λ2) = λ1(2t1+1) − λ2(2t2+1)`.
pub fn t_functional(t1: f64, t2: f64, l1: f64, l2: f64) -> f64 {
    l1 * (2.0 * t1 + 1.0) - l2 * (2.0 * t2 + 1.0)
}

fn near_nonzero_integer(x: f64, tol: f64) -> bool {
    let k = x.round();
    k != 0.0 && (x - k).abs() <= tol
}

/// Zero-set membership of `ρ̂_{t1,t2}` through the parity split: either both
/// coordinates are nonzero integers, or `T(λ)` is an integer `m` and
/// `(−1)^m sinc(λ1) + sinc(λ2) = 0`, all within `tol`.
pub fn in_zero_set(t1: f64, t2: f64, l1: f64, l2: f64, tol: f64) -> bool {
    if near_nonzero_integer(l1, tol) && near_nonzero_integer(l2, tol) {
        return true;
    }
    let t = t_functional(t1, t2, l1, l2);
    let m = t.round();
    if (t - m).abs() > tol {
        return false;
    }
    let sign = if m.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
    (sign * sinc_pi(l1) + sinc_pi(l2)).abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn descriptor_round_trip() {
        for m in [Measure::lebesgue(0.0), Measure::lebesgue(-0.37), Measure::additive(-0.5, 0.1)] {
            assert_eq!(m.to_string().parse::<Measure>().unwrap(), m);
            let json = serde_json::to_string(&m).unwrap();
            assert_eq!(json.parse::<Measure>().unwrap(), m);
        }
        assert_eq!("lebesgue:0".parse::<Measure>().unwrap(), Measure::lebesgue(0.0));
        assert!("gauss:1".parse::<Measure>().is_err());
        assert!("lebesgue:x".parse::<Measure>().is_err());
        assert!("additive:1".parse::<Measure>().is_err());
    }

    /// Midpoint-rule oracle for `∫_t^{t+1} e^{−2πiξx} dx`.
    fn ft_quadrature(t: f64, xi: f64, n: usize) -> Complex {
        let h = 1.0 / n as f64;
        let mut acc = Complex::new(0.0, 0.0);
        for k in 0..n {
            let x = t + (k as f64 + 0.5) * h;
            let ang = -2.0 * PI * xi * x;
            acc += Complex::new(ang.cos(), ang.sin()) * h;
        }
        acc
    }

    #[test]
    fn lebesgue_transform_examples() {
        assert_eq!(ft_restricted_lebesgue(0.37, 0.0), Complex::new(1.0, 0.0));
        assert!(ft_restricted_lebesgue(0.0, 3.0).norm() == 0.0);
        let v = ft_restricted_lebesgue(0.0, 0.5);
        assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(v.im, -2.0 / PI, epsilon = 1e-16);
        for &(t, xi) in &[(0.0, 0.5), (-0.5, 1.3), (0.25, -2.7), (3.0, 0.01)] {
            let q = ft_quadrature(t, xi, 20_000);
            let got = ft_restricted_lebesgue(t, xi);
            assert!((q - got).norm() < 1e-7, "t={t} xi={xi}");
        }
    }

    #[test]
    fn additive_transform_examples() {
        assert_abs_diff_eq!(ft_additive(0.3, -0.9, 0.0, 0.0).re, 1.0, epsilon = 1e-16);
        assert_eq!(ft_additive(-0.5, -0.5, 1.0, 2.0).norm(), 0.0);
        let v = ft_additive(0.0, 0.0, 1.0, 0.5);
        assert_abs_diff_eq!(v.re, 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(v.im, -1.0 / PI, epsilon = 1e-16);
    }

    #[test]
    fn decay() {
        assert_abs_diff_eq!(decay_constant(&Measure::lebesgue(0.0)).unwrap(), 0.3183099, epsilon = 1e-7);
        assert_eq!(decay_constant(&Measure::lebesgue(-0.5)).unwrap(), 1.0 / PI);
        assert!(matches!(
            decay_constant(&Measure::additive(0.0, 0.0)),
            Err(Error::UnsupportedMeasure(_))
        ));
        // sharpness: |ξ μ̂(ξ)| reaches 1/π at half-integers
        let xi = 10.5;
        assert_abs_diff_eq!(xi * ft_restricted_lebesgue(0.0, xi).norm(), 1.0 / PI, epsilon = 1e-15);
    }

    #[test]
    fn t_functional_examples() {
        for n in -3..=3 {
            let n = n as f64;
            assert_eq!(t_functional(0.0, 1.0, n, n), -2.0 * n);
        }
        assert_eq!(t_functional(-0.5, -0.5, 3.7, -1.1), 0.0);
        assert_eq!(t_functional(0.5, 0.5, 1.0, -1.0), 4.0);
    }

    #[test]
    fn zero_set_examples() {
        assert!(in_zero_set(0.3, 0.1, 1.0, 2.0, ZERO_SET_TOL));
        assert!(in_zero_set(0.0, 0.0, 0.5, -0.5, ZERO_SET_TOL));
        assert!(!in_zero_set(0.0, 0.0, 0.5, 0.5, ZERO_SET_TOL));
        assert!(!in_zero_set(-0.5, -0.5, 1.0, 0.5, ZERO_SET_TOL));
        assert_abs_diff_eq!(ft_additive(0.0, 0.0, 0.5, 0.5).norm(), 2.0 / PI, epsilon = 1e-15);
        assert!(ft_additive(0.0, 0.0, 0.5, -0.5).norm() < 1e-15);
    }

    #[test]
    fn norm_sqr_matches_complex_modulus() {
        for &(t1, t2, a, b) in &[(0.0, 1.0, 0.3, 0.45), (-0.5, -0.5, 2.2, -0.1), (0.75, 0.25, -3.3, 7.9)] {
            assert_abs_diff_eq!(
                ft_additive_norm_sqr(t1, t2, a, b),
                ft_additive(t1, t2, a, b).norm_sqr(),
                epsilon = 1e-15
            );
        }
    }

    proptest! {
        #[test]
        fn modulus_independent_of_translation(t in -5.0f64..5.0, s in -5.0f64..5.0, xi in -50.0f64..50.0) {
            let a = ft_restricted_lebesgue(t, xi).norm();
            let b = ft_restricted_lebesgue(s, xi).norm();
            prop_assert!((a - b).abs() <= 1e-15);
        }

        #[test]
        fn conjugate_symmetry(t in -5.0f64..5.0, xi in -50.0f64..50.0) {
            let a = ft_restricted_lebesgue(t, -xi);
            let b = ft_restricted_lebesgue(t, xi).conj();
            prop_assert!((a - b).norm() <= 1e-12);
        }

        #[test]
        fn decay_bound_holds(xi in -100.0f64..100.0) {
            prop_assume!(xi.abs() > 1e-6);
            let v = ft_restricted_lebesgue(0.0, xi).norm();
            prop_assert!(v <= 1.0 / (PI * xi.abs()) + 1e-15);
        }
    }

    #[test]
    fn parity_split_agrees_with_modulus() {
        // random points: both formulations say "not in the zero set"
        let pts = crate::rng::uniform_pairs(11, 10_000, -5.0, 5.0);
        let params = crate::rng::uniform_pairs(12, 10_000, -2.0, 2.0);
        for (&(l1, l2), &(t1, t2)) in pts.iter().zip(&params) {
            let split = in_zero_set(t1, t2, l1, l2, ZERO_SET_TOL);
            let direct = ft_additive(t1, t2, l1, l2).norm() <= ZERO_SET_TOL;
            assert_eq!(split, direct, "({t1},{t2}) at ({l1},{l2})");
        }
        // points known to lie in the zero set: both formulations agree
        let (t1, t2) = (0.0, 1.0);
        for n in -6..=6 {
            for m in -6..=6 {
                let (l1, l2) = (n as f64 + 0.5, m as f64 + 0.5);
                let split = in_zero_set(t1, t2, l1, l2, ZERO_SET_TOL);
                let direct = ft_additive(t1, t2, l1, l2).norm() <= ZERO_SET_TOL;
                assert_eq!(split, direct, "({l1},{l2})");
            }
        }
    }
}
