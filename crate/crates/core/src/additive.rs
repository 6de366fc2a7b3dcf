//! Spectra of additive measures of Lebesgue type.
//!
//! `ρ_{t1,t2}` is spectral exactly when `t1 − t2 ∈ Z∖{0}` or
//! `t1 + t2 ∈ Z∖{−1}`. The spectra are diagonal families
//! `{(n, σn)} ∪ {(n+s, σ(n+s))}` on which `T` is even on the integer branch
//! and odd on the shifted one. The Plus space `t1 = t2 = −½` satisfies
//! neither condition; [`plus_space_report`] replays the numeric ingredients
//! of that obstruction.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::frames::probe_frame_bounds;
use crate::measures::{ft_additive, t_functional, Measure, ZERO_SET_TOL};
use crate::pointsets::{distinct_values, gap_stats, PointSet1D, PointSet2D};
use crate::rng::closed_grid;
use crate::roots::bisect;
use crate::specfun::sinc_pi;
use crate::theorems::check_thm_1_1;

/// Floor of `sinc_pi` on `(0, 0.8]`.
pub const SINC_FLOOR: f64 = 0.23;
/// Largest `λ1` covered by the small-frequency scan.
pub const SMALL_LAMBDA1: f64 = 0.8;
/// Sampling step for isolating roots in `λ2`.
pub const ROOT_SAMPLE_STEP: f64 = 1e-3;
/// `|residual|` below which a sampled local minimum is reported as a tangency.
pub const TANGENCY_TOL: f64 = 1e-10;

/// Which integrality condition produced a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `t1 − t2 ∈ Z∖{0}`; points `(n, n)` and `(n+s, n+s)`.
    DifferenceInteger,
    /// `t1 + t2 ∈ Z∖{−1}`; points `(n, −n)` and `(n+s, −n−s)`.
    SumInteger,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumConstruction {
    pub t1: f64,
    pub t2: f64,
    pub branch: Branch,
    /// `1/(2(t1−t2))` or `1/(2(t1+t2+1))`, before reduction mod 1.
    pub shift: f64,
    pub set: PointSet2D,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroSetSolution {
    pub lambda1: f64,
    pub lambda2: f64,
    /// Integer value of `T(λ1, λ2)`.
    pub t_value: i64,
    /// `(−1)^{t_value}`.
    pub branch_sign: i32,
}

fn integer_part(x: f64) -> Option<i64> {
    let k = x.round();
    ((x - k).abs() <= 1e-12).then_some(k as i64)
}

/// Closest point to `(t1, t2)` on the lines `t1 − t2 = k` (`k ≠ 0`) and on
/// the lines `t1 + t2 = k` (`k ≠ −1`), with distances.
fn nearest_spectral(t1: f64, t2: f64) -> ((f64, f64, f64), (f64, f64, f64)) {
    let d = t1 - t2;
    let mut kd = d.round();
    if kd == 0.0 {
        kd = if d < 0.0 { -1.0 } else { 1.0 };
    }
    let diff = (t1 + (kd - d) / 2.0, t2 - (kd - d) / 2.0, (kd - d).abs() / 2f64.sqrt());
    let s = t1 + t2;
    let mut ks = s.round();
    if ks == -1.0 {
        ks = if s < -1.0 { -2.0 } else { 0.0 };
    }
    let sum = (t1 + (ks - s) / 2.0, t2 + (ks - s) / 2.0, (ks - s).abs() / 2f64.sqrt());
    (diff, sum)
}

/// Explicit spectrum of `ρ_{t1,t2}`, or `NotSpectral` with the nearest
/// spectral parameters (ties prefer the difference condition).
pub fn construct_spectrum(t1: f64, t2: f64) -> Result<SpectrumConstruction> {
    if !t1.is_finite() || !t2.is_finite() {
        return Err(Error::Domain(format!("parameters must be finite, got ({t1}, {t2})")));
    }
    if let Some(k) = integer_part(t1 - t2).filter(|&k| k != 0) {
        let shift = 1.0 / (2.0 * k as f64);
        return Ok(SpectrumConstruction {
            t1,
            t2,
            branch: Branch::DifferenceInteger,
            shift,
            set: PointSet2D::diagonal(1, shift.rem_euclid(1.0))?,
        });
    }
    if let Some(k) = integer_part(t1 + t2).filter(|&k| k != -1) {
        let shift = 1.0 / (2.0 * (k + 1) as f64);
        return Ok(SpectrumConstruction {
            t1,
            t2,
            branch: Branch::SumInteger,
            shift,
            set: PointSet2D::diagonal(-1, shift.rem_euclid(1.0))?,
        });
    }
    let difference = match integer_part(t1 - t2) {
        Some(0) => "t1 − t2 = 0".to_string(),
        _ => format!("t1 − t2 = {:?} is not an integer", t1 - t2),
    };
    let sum = match integer_part(t1 + t2) {
        Some(-1) => "t1 + t2 = −1".to_string(),
        _ => format!("t1 + t2 = {:?} is not an integer", t1 + t2),
    };
    let (d, s) = nearest_spectral(t1, t2);
    let best = if d.2 <= s.2 { d } else { s };
    Err(Error::NotSpectral { difference, sum, nearest_t1: best.0, nearest_t2: best.1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParityReport {
    pub points_checked: usize,
    /// Largest distance of `T(λ)` to the nearest integer.
    pub max_integer_deviation: f64,
    pub pass: bool,
}

/// `T` is an even integer on the integer branch and odd on the shifted one,
/// for `|n| ≤ n_range`. Uses the unreduced shift.
pub fn parity_audit(c: &SpectrumConstruction, n_range: i64) -> Result<ParityReport> {
    if n_range < 0 {
        return Err(Error::Domain(format!("n_range must be ≥ 0, got {n_range}")));
    }
    let sg = match c.branch {
        Branch::DifferenceInteger => 1.0,
        Branch::SumInteger => -1.0,
    };
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for n in -n_range..=n_range {
        for (offset, expect_even) in [(0.0, true), (c.shift, false)] {
            let l1 = n as f64 + offset;
            let l2 = sg * l1;
            let t = t_functional(c.t1, c.t2, l1, l2);
            let k = t.round();
            let dev = (t - k).abs();
            let even = k.rem_euclid(2.0) == 0.0;
            if dev > ZERO_SET_TOL || even != expect_even {
                return Err(Error::AuditFailure {
                    lambda1: l1,
                    lambda2: l2,
                    t_value: t,
                    expected: if expect_even { "an even" } else { "an odd" },
                });
            }
            worst = worst.max(dev);
            checked += 1;
        }
    }
    Ok(ParityReport { points_checked: checked, max_integer_deviation: worst, pass: true })
}

type PointPair = ((f64, f64), (f64, f64));

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthogonalityReport {
    pub pairs: usize,
    /// Largest `|ρ̂(λ′ − λ″)|` over distinct pairs.
    pub worst_modulus: f64,
    pub worst_pair: Option<PointPair>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Pairwise orthogonality of the exponentials indexed by a finite set.
pub fn orthogonality_check(t1: f64, t2: f64, points: &PointSet2D, tol: f64) -> Result<OrthogonalityReport> {
    let pts = match points {
        PointSet2D::FiniteList2D(p) => p,
        PointSet2D::DiagonalFamily { .. } => {
            return Err(Error::InvalidPointSet("orthogonality check needs a finite list".into()))
        }
    };
    let per_row: Vec<(f64, Option<PointPair>)> = (0..pts.len())
        .into_par_iter()
        .map(|i| {
            let mut best = (0.0, None);
            for j in i + 1..pts.len() {
                let (a, b) = (pts[i], pts[j]);
                let m = ft_additive(t1, t2, a.0 - b.0, a.1 - b.1).norm();
                if m > best.0 || best.1.is_none() {
                    best = (m, Some((a, b)));
                }
            }
            best
        })
        .collect();
    let mut worst = 0.0;
    let mut worst_pair = None;
    for (m, pair) in per_row {
        if pair.is_some() && (worst_pair.is_none() || m > worst) {
            worst = m;
            worst_pair = pair;
        }
    }
    Ok(OrthogonalityReport {
        pairs: pts.len() * pts.len().saturating_sub(1) / 2,
        worst_modulus: worst,
        worst_pair,
        tolerance: tol,
        pass: worst <= tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSetScan {
    /// Bound on `|T|` over the search box.
    pub m_max: i64,
    /// Roots of the sinc equation found over the whole grid.
    pub candidates: usize,
    /// Sampled double roots (tangencies), included among the candidates.
    pub tangencies: usize,
    /// Candidates with `T` an integer of the matching parity.
    pub solutions: Vec<ZeroSetSolution>,
}

/// Roots in `[−L, L]` of `g(x) = eps·α + sinc_pi(x)`: sign changes are
/// bisected, sampled zeros are kept, and sampled local minima of `|g|` below
/// [`TANGENCY_TOL`] are reported as tangencies.
fn sinc_equation_roots(eps_alpha: f64, half_width: f64) -> Result<(Vec<f64>, usize)> {
    let g = |x: f64| eps_alpha + sinc_pi(x);
    let n = (2.0 * half_width / ROOT_SAMPLE_STEP).ceil() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| -half_width + i as f64 * ROOT_SAMPLE_STEP).collect();
    let gs: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    let mut roots = Vec::new();
    let mut tangencies = 0;
    for i in 0..n {
        if gs[i] == 0.0 {
            roots.push(xs[i]);
        } else if gs[i] * gs[i + 1] < 0.0 {
            roots.push(bisect(g, xs[i], xs[i + 1], 200, "sinc equation")?);
        } else if i > 0
            && gs[i].abs() < TANGENCY_TOL
            && gs[i].abs() <= gs[i - 1].abs()
            && gs[i].abs() <= gs[i + 1].abs()
        {
            roots.push(xs[i]);
            tangencies += 1;
        }
    }
    if gs[n] == 0.0 {
        roots.push(xs[n]);
    }
    Ok((roots, tangencies))
}

/// Search the zero set of `ρ̂_{t1,t2}` for `λ1` on a grid in `(0, 0.8]`.
///
/// For each parity of `m` available with `|m| ≤ m_max`, solves
/// `(−1)^m sinc(λ1) + sinc(λ2) = 0` for `|λ2| ≤ 1/(0.23π)`, then keeps roots
/// with `T(λ1, λ2)` an integer of that parity. Every root must lie within
/// `tol` of `λ2 = ±λ1`; otherwise `OffLineSolutions` is returned.
pub fn lemma_4_1_scan(t1: f64, t2: f64, lambda1_grid: &[f64], tol: f64) -> Result<ZeroSetScan> {
    if lambda1_grid.is_empty() {
        return Err(Error::Domain("λ1 grid is empty".into()));
    }
    if let Some(bad) = lambda1_grid.iter().find(|&&l| !(l > 0.0 && l <= SMALL_LAMBDA1 + 1e-12)) {
        return Err(Error::Domain(format!("λ1 = {bad} lies outside (0, 0.8]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tol must be positive, got {tol}")));
    }
    let a = 2.0 * t1 + 1.0;
    let b = 2.0 * t2 + 1.0;
    let half_width = 1.0 / (SINC_FLOOR * PI);
    let m_max = (a.abs() * SMALL_LAMBDA1 + b.abs() * half_width).floor() as i64;
    let parities: &[i64] = if m_max >= 1 { &[0, 1] } else { &[0] };

    struct Found {
        candidates: usize,
        tangencies: usize,
        off_line: Vec<(f64, f64)>,
        solutions: Vec<ZeroSetSolution>,
    }
    let per_point: Vec<Found> = lambda1_grid
        .par_iter()
        .map(|&l1| -> Result<Found> {
            let alpha = sinc_pi(l1);
            let mut f = Found { candidates: 0, tangencies: 0, off_line: Vec::new(), solutions: Vec::new() };
            for &parity in parities {
                let eps = if parity == 0 { -1.0 } else { 1.0 };
                let (roots, tang) = sinc_equation_roots(eps * alpha, half_width)?;
                f.candidates += roots.len();
                f.tangencies += tang;
                for l2 in roots {
                    if (l2 - l1).abs().min((l2 + l1).abs()) > tol {
                        f.off_line.push((l1, l2));
                        continue;
                    }
                    let t = t_functional(t1, t2, l1, l2);
                    let m = t.round();
                    if (t - m).abs() <= ZERO_SET_TOL && m.abs() <= m_max as f64 && m.rem_euclid(2.0) as i64 == parity {
                        f.solutions.push(ZeroSetSolution {
                            lambda1: l1,
                            lambda2: l2,
                            t_value: m as i64,
                            branch_sign: if parity == 0 { 1 } else { -1 },
                        });
                    }
                }
            }
            Ok(f)
        })
        .collect::<Result<_>>()?;

    let off: Vec<(f64, f64)> = per_point.iter().flat_map(|f| f.off_line.iter().copied()).collect();
    if let Some(&(lambda1, lambda2)) = off.first() {
        return Err(Error::OffLineSolutions { count: off.len(), lambda1, lambda2 });
    }
    Ok(ZeroSetScan {
        m_max,
        candidates: per_point.iter().map(|f| f.candidates).sum(),
        tangencies: per_point.iter().map(|f| f.tangencies).sum(),
        solutions: per_point.into_iter().flat_map(|f| f.solutions).collect(),
    })
}

/// `λ1 = k/1000` for `k = 1, …, 800`.
pub fn default_lambda1_grid() -> Vec<f64> {
    (1..=800).map(|k| k as f64 * 1e-3).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Link {
    pub name: String,
    pub pass: bool,
    pub details: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlusSpaceReport {
    pub links: Vec<Link>,
    pub conclusion: String,
}

/// Numeric replay of the Plus-space obstruction:
/// (i) the projection `Z ∪ (Z+½)` is a tight frame with constant 2;
/// (ii) so its minimal gap is at most `√(C²π²/A) = √½ < 0.8`;
/// (iii) zero-set points with `λ1 ∈ (0, 0.8]` lie on `λ2 = ±λ1`, where the
/// residual `2·sinc(δ)` stays away from 0.
pub fn plus_space_report() -> Result<PlusSpaceReport> {
    let (t1, t2) = (-0.5, -0.5);
    let c = 1.0 / PI;
    let mut links = Vec::new();

    let witness = PointSet1D::coset_union(vec![0.0, 0.5], 1.0)?;
    let probe = probe_frame_bounds(&Measure::lebesgue(t1), &witness, &closed_grid(0.0, 1.0, 101), 1e3)?;
    let a = 2.0;
    links.push(Link {
        name: "projection_tight_frame".into(),
        pass: (probe.a_lower_probe - a).abs() <= 1e-6 && (probe.b_upper_probe - a).abs() <= 1e-6,
        details: json!({
            "set": witness.to_string(),
            "a_lower_probe": probe.a_lower_probe,
            "b_upper_probe": probe.b_upper_probe,
            "expected": a,
        }),
    });

    let gaps = gap_stats(&witness, (0.0, 2.0))?;
    let verdict = check_thm_1_1(gaps.ess_min_gap, gaps.ess_max_gap, c, a)?;
    let bound = (c * c * PI * PI / a).sqrt();
    links.push(Link {
        name: "minimal_gap_bound".into(),
        pass: verdict.pass && bound < SMALL_LAMBDA1,
        details: json!({
            "bound": bound,
            "threshold": SMALL_LAMBDA1,
            "witness_lhs": verdict.lhs,
            "witness_rhs": verdict.rhs,
        }),
    });

    let grid = default_lambda1_grid();
    let scan = lemma_4_1_scan(t1, t2, &grid, 1e-9);
    let min_residual = grid.iter().map(|&d| 2.0 * sinc_pi(d)).fold(f64::INFINITY, f64::min);
    let (scan_ok, scan_details) = match &scan {
        Ok(s) => (true, json!({ "solutions": s.solutions.len(), "off_line": 0, "tangencies": s.tangencies })),
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    links.push(Link {
        name: "small_frequency_zero_set".into(),
        pass: scan_ok && min_residual > 0.2,
        details: json!({
            "scan": scan_details,
            "min_two_sinc": min_residual,
            "grid_points": grid.len(),
        }),
    });

    if let Some(bad) = links.iter().find(|l| !l.pass) {
        return Err(Error::LinkFailed { link: bad.name.clone(), details: bad.details.to_string() });
    }
    Ok(PlusSpaceReport {
        links,
        conclusion: "non-spectrality chain verified: every link holds, so the Plus space admits no exponential orthogonal basis".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalComplexityReport {
    pub distinct_gaps: Vec<f64>,
    pub count: usize,
    pub expected_count: usize,
    pub pass: bool,
}

/// Gap values of the first-coordinate projection over `[−n_range, n_range]`:
/// `{s, 1 − s}` for `s = shift mod 1`, a single value when `s = ½`.
pub fn finite_local_complexity_audit(c: &SpectrumConstruction, n_range: i64) -> Result<LocalComplexityReport> {
    if n_range < 1 {
        return Err(Error::Domain(format!("n_range must be ≥ 1, got {n_range}")));
    }
    let proj = c.set.project_first()?;
    let g = gap_stats(&proj, (-(n_range as f64), n_range as f64))?;
    let distinct = distinct_values(&g.gaps);
    let s = c.shift.rem_euclid(1.0);
    let expected_count = if (s - 0.5).abs() <= 1e-12 { 1 } else { 2 };
    let matches = distinct
        .iter()
        .all(|&v| (v - s).abs() <= 1e-9 || (v - (1.0 - s)).abs() <= 1e-9);
    Ok(LocalComplexityReport {
        count: distinct.len(),
        pass: matches && distinct.len() == expected_count,
        distinct_gaps: distinct,
        expected_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::jp_verify_additive;
    use crate::pointsets::enumerate_window_2d;
    use crate::rng::uniform_pairs;
    use approx::assert_abs_diff_eq;

    #[test]
    fn construction_examples() {
        let c = construct_spectrum(0.0, 1.0).unwrap();
        assert_eq!(c.branch, Branch::DifferenceInteger);
        assert_eq!(c.shift, -0.5);
        assert_eq!(c.set, PointSet2D::DiagonalFamily { sign: 1, shift: 0.5 });
        let c = construct_spectrum(0.5, 0.5).unwrap();
        assert_eq!(c.branch, Branch::SumInteger);
        assert_eq!(c.shift, 0.25);
        assert_eq!(c.set, PointSet2D::DiagonalFamily { sign: -1, shift: 0.25 });
        match construct_spectrum(-0.5, -0.5) {
            Err(Error::NotSpectral { nearest_t1, nearest_t2, .. }) => {
                assert!(construct_spectrum(nearest_t1, nearest_t2).is_ok());
                assert_abs_diff_eq!(((nearest_t1 + 0.5).powi(2) + (nearest_t2 + 0.5).powi(2)).sqrt(), 0.5f64.sqrt());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(construct_spectrum(0.0, 2.0).unwrap().shift, -0.25);
    }

    #[test]
    fn construction_matches_integrality_on_rational_grid() {
        for i in -8..=8 {
            for j in -8..=8 {
                let (t1, t2) = (i as f64 / 4.0, j as f64 / 4.0);
                let expected = ((i - j) % 4 == 0 && i != j) || ((i + j) % 4 == 0 && i + j != -4);
                match construct_spectrum(t1, t2) {
                    Ok(c) => {
                        assert!(expected, "({t1}, {t2}) constructed");
                        assert!(parity_audit(&c, 20).unwrap().pass);
                    }
                    Err(Error::NotSpectral { nearest_t1, nearest_t2, .. }) => {
                        assert!(!expected, "({t1}, {t2}) refused");
                        assert!(construct_spectrum(nearest_t1, nearest_t2).is_ok());
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn refused_pairs_fail_the_spectrum_test() {
        let xi = uniform_pairs(17, 8, 0.0, 1.0);
        for (t1, t2) in [(-0.5, -0.5), (0.25, 0.0), (0.25, 0.5), (-0.75, 0.0), (1.25, 0.5)] {
            assert!(construct_spectrum(t1, t2).is_err());
            for sign in [1, -1] {
                for shift in [0.25, 0.5, 0.75, 1.0 / 3.0] {
                    let s = PointSet2D::diagonal(sign, shift).unwrap();
                    // non-even cross-term periods only get an O(1/N) tail bound
                    let v = jp_verify_additive(t1, t2, &s, &xi, 2000, 1e-2).unwrap();
                    assert!(!v.verdict.pass, "({t1},{t2}) sign {sign} shift {shift}");
                    assert!(v.verdict.worst_residual > 0.05, "{:?}", v.verdict);
                }
            }
        }
    }

    #[test]
    fn constructed_spectra_pass_spectrum_and_orthogonality_tests() {
        let xi = uniform_pairs(64, 64, 0.0, 1.0);
        for i in -8..=8 {
            for j in -8..=8 {
                let (t1, t2) = (i as f64 / 4.0, j as f64 / 4.0);
                let Ok(c) = construct_spectrum(t1, t2) else { continue };
                let v = jp_verify_additive(t1, t2, &c.set, &xi, 200, 1e-6).unwrap();
                assert!(v.verdict.pass, "({t1},{t2}): {:?}", v.verdict);
                let pts = PointSet2D::finite(enumerate_window_2d(&c.set, -10, 10).unwrap()).unwrap();
                let o = orthogonality_check(t1, t2, &pts, 1e-9).unwrap();
                assert!(o.pass, "({t1},{t2}): {o:?}");
            }
        }
    }

    #[test]
    fn parity_examples() {
        let c = construct_spectrum(0.0, 1.0).unwrap();
        let r = parity_audit(&c, 100).unwrap();
        assert!(r.pass);
        assert_eq!(r.points_checked, 402);
        assert!(parity_audit(&construct_spectrum(0.5, 0.5).unwrap(), 100).unwrap().pass);
        let mut bad = c.clone();
        bad.shift = 0.3;
        assert!(matches!(parity_audit(&bad, 100), Err(Error::AuditFailure { .. })));
    }

    #[test]
    fn orthogonality_examples() {
        let c = construct_spectrum(0.0, 1.0).unwrap();
        let pts = PointSet2D::finite(enumerate_window_2d(&c.set, -5, 5).unwrap()).unwrap();
        assert!(orthogonality_check(0.0, 1.0, &pts, 1e-9).unwrap().pass);
        let zero = PointSet2D::finite(vec![(0.0, 0.0), (0.5, -0.5)]).unwrap();
        assert!(orthogonality_check(0.0, 0.0, &zero, 1e-9).unwrap().pass);
        let diag = PointSet2D::finite(vec![(0.0, 0.0), (0.5, 0.5)]).unwrap();
        let r = orthogonality_check(0.0, 0.0, &diag, 1e-9).unwrap();
        assert!(!r.pass);
        assert_abs_diff_eq!(r.worst_modulus, 2.0 / PI, epsilon = 1e-15);
        assert!(orthogonality_check(0.0, 0.0, &c.set, 1e-9).is_err());
    }

    #[test]
    fn zero_set_scan_plus_space() {
        let scan = lemma_4_1_scan(-0.5, -0.5, &default_lambda1_grid(), 1e-9).unwrap();
        assert_eq!(scan.m_max, 0);
        assert_eq!(scan.solutions.len(), 1600);
        assert!(scan.solutions.iter().all(|s| s.t_value == 0 && s.branch_sign == 1));
        assert!(sinc_pi(0.8) >= SINC_FLOOR);
        assert_abs_diff_eq!(sinc_pi(0.8), 0.23387, epsilon = 1e-5);
        assert!(lemma_4_1_scan(-0.5, -0.5, &[0.9], 1e-9).is_err());
        assert!(lemma_4_1_scan(-0.5, -0.5, &[0.0], 1e-9).is_err());
    }

    #[test]
    fn zero_set_scan_random_parameters() {
        let grid: Vec<f64> = (1..=80).map(|k| k as f64 * 1e-2).collect();
        for (t1, t2) in uniform_pairs(50, 50, -3.0, 3.0) {
            let scan = lemma_4_1_scan(t1, t2, &grid, 1e-9).unwrap();
            for s in &scan.solutions {
                assert!((s.lambda2.abs() - s.lambda1).abs() <= 1e-9);
                assert!(crate::measures::in_zero_set(t1, t2, s.lambda1, s.lambda2, 1e-9));
            }
        }
    }

    #[test]
    fn sinc_roots_detect_tangency() {
        // sinc has a double root of g = sinc − max at 0
        let (roots, tang) = sinc_equation_roots(-1.0, 0.01).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(tang + usize::from(roots[0] == 0.0), 1);
        // odd parity at λ1 = 0.5: sinc(λ2) = −2/π has no solution
        assert!(sinc_equation_roots(2.0 / PI, 1.0 / (SINC_FLOOR * PI)).unwrap().0.is_empty());
    }

    #[test]
    fn plus_space_links() {
        let r = plus_space_report().unwrap();
        assert_eq!(r.links.len(), 3);
        assert!(r.links.iter().all(|l| l.pass));
        assert_abs_diff_eq!(r.links[1].details["bound"].as_f64().unwrap(), 0.5f64.sqrt(), epsilon = 1e-15);
        let m = r.links[2].details["min_two_sinc"].as_f64().unwrap();
        assert!((0.467..=0.468).contains(&m));
        assert_abs_diff_eq!(r.links[0].details["a_lower_probe"].as_f64().unwrap(), 2.0, epsilon = 1e-6);
    }

    #[test]
    fn local_complexity_examples() {
        let r = finite_local_complexity_audit(&construct_spectrum(0.0, 1.0).unwrap(), 10).unwrap();
        assert_eq!(r.count, 1);
        assert_abs_diff_eq!(r.distinct_gaps[0], 0.5);
        let r = finite_local_complexity_audit(&construct_spectrum(0.5, 0.5).unwrap(), 10).unwrap();
        assert_eq!(r.count, 2);
        assert!(r.pass);
        let c = construct_spectrum(0.0, 2.0).unwrap();
        assert_abs_diff_eq!(c.shift.rem_euclid(1.0), 0.75);
        assert!(finite_local_complexity_audit(&c, 10).unwrap().pass);
    }

    #[test]
    fn projection_is_tight_with_constant_two() {
        let grid = closed_grid(0.0, 1.0, 33);
        for i in -8..=8 {
            for j in -8..=8 {
                let (t1, t2) = (i as f64 / 4.0, j as f64 / 4.0);
                let Ok(c) = construct_spectrum(t1, t2) else { continue };
                let proj = c.set.project_first().unwrap();
                let r = probe_frame_bounds(&Measure::lebesgue(t1), &proj, &grid, 32.0).unwrap();
                assert!((r.a_lower_probe - 2.0).abs() < 1e-6 && (r.b_upper_probe - 2.0).abs() < 1e-6);
            }
        }
    }
}
