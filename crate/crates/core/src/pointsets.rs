//! Exact descriptors for candidate spectra and their gap statistics.
//!
//! Every set the constructions need is either a finite list or a finite
//! union of cosets `o + pZ`, so gap statistics that quantify over
//! "infinitely many k" are exact for coset unions (each gap of one period
//! recurs in every period) and flagged as window estimates otherwise.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Endpoint tolerance for closed-interval membership.
pub const MEMBERSHIP_EPS: f64 = 1e-12;

/// Two gaps closer than this count as the same gap value.
pub const GAP_DISTINCT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Repr1D", into = "Repr1D")]
pub enum PointSet1D {
    /// Strictly increasing finite list.
    FiniteList(Vec<f64>),
    /// `∪_j (offset_j + period·Z)` with strictly increasing offsets in `[0, period)`.
    CosetUnion { offsets: Vec<f64>, period: f64 },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum Repr1D {
    #[serde(rename = "finite")]
    Finite { points: Vec<f64> },
    #[serde(rename = "coset_union")]
    CosetUnion { offsets: Vec<f64>, period: f64 },
}

impl TryFrom<Repr1D> for PointSet1D {
    type Error = Error;
    fn try_from(r: Repr1D) -> Result<Self> {
        match r {
            Repr1D::Finite { points } => PointSet1D::finite(points),
            Repr1D::CosetUnion { offsets, period } => PointSet1D::coset_union(offsets, period),
        }
    }
}

impl From<PointSet1D> for Repr1D {
    fn from(s: PointSet1D) -> Self {
        match s {
            PointSet1D::FiniteList(points) => Repr1D::Finite { points },
            PointSet1D::CosetUnion { offsets, period } => Repr1D::CosetUnion { offsets, period },
        }
    }
}

fn strictly_increasing(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

impl PointSet1D {
    /// Finite set from points given in any order; duplicates are rejected.
    pub fn finite(mut points: Vec<f64>) -> Result<Self> {
        if points.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidPointSet("finite list has a non-finite point".into()));
        }
        points.sort_by(f64::total_cmp);
        if !strictly_increasing(&points) {
            return Err(Error::InvalidPointSet("finite list has repeated points".into()));
        }
        Ok(PointSet1D::FiniteList(points))
    }

    pub fn coset_union(offsets: Vec<f64>, period: f64) -> Result<Self> {
        if !(period > 0.0) || !period.is_finite() {
            return Err(Error::InvalidPointSet(format!("period must be positive, got {period}")));
        }
        if offsets.is_empty() {
            return Err(Error::InvalidPointSet("coset union needs at least one offset".into()));
        }
        if offsets.iter().any(|&o| !(o >= 0.0 && o < period)) {
            return Err(Error::InvalidPointSet(format!(
                "offsets must lie in [0, {period})"
            )));
        }
        if !strictly_increasing(&offsets) {
            return Err(Error::InvalidPointSet("offsets must be strictly increasing".into()));
        }
        Ok(PointSet1D::CosetUnion { offsets, period })
    }

    /// The integer lattice `Z`.
    pub fn integers() -> Self {
        PointSet1D::CosetUnion { offsets: vec![0.0], period: 1.0 }
    }

    /// `a + Z` for any real `a`.
    pub fn shifted_integers(a: f64) -> Self {
        PointSet1D::CosetUnion { offsets: vec![a.rem_euclid(1.0)], period: 1.0 }
    }

    /// Union of integer cosets `Z + o_j` for offsets given mod 1.
    pub fn integer_cosets(offsets: &[f64]) -> Result<Self> {
        let mut o: Vec<f64> = offsets.iter().map(|x| x.rem_euclid(1.0)).collect();
        o.sort_by(f64::total_cmp);
        PointSet1D::coset_union(o, 1.0)
    }

    /// Translate the whole set by `c`.
    pub fn translate(&self, c: f64) -> Self {
        match self {
            PointSet1D::FiniteList(p) => PointSet1D::FiniteList(p.iter().map(|x| x + c).collect()),
            PointSet1D::CosetUnion { offsets, period } => {
                let mut o: Vec<f64> = offsets.iter().map(|x| (x + c).rem_euclid(*period)).collect();
                o.sort_by(f64::total_cmp);
                o.dedup();
                PointSet1D::CosetUnion { offsets: o, period: *period }
            }
        }
    }

    /// Whether `x` belongs to the set, within `MEMBERSHIP_EPS`.
    pub fn contains(&self, x: f64) -> bool {
        match self {
            PointSet1D::FiniteList(p) => p.iter().any(|y| (x - y).abs() <= MEMBERSHIP_EPS),
            PointSet1D::CosetUnion { offsets, period } => offsets.iter().any(|o| {
                let k = ((x - o) / period).round();
                (x - (o + k * period)).abs() <= MEMBERSHIP_EPS
            }),
        }
    }

    /// Points per unit length for coset unions, zero for finite sets.
    pub fn asymptotic_density(&self) -> f64 {
        match self {
            PointSet1D::FiniteList(_) => 0.0,
            PointSet1D::CosetUnion { offsets, period } => offsets.len() as f64 / period,
        }
    }

    /// Visit the points in `[lo, hi]` in increasing order without allocating.
    pub fn for_each_in_window<F: FnMut(f64)>(&self, lo: f64, hi: f64, mut f: F) {
        let lo_e = lo - MEMBERSHIP_EPS;
        let hi_e = hi + MEMBERSHIP_EPS;
        match self {
            PointSet1D::FiniteList(p) => {
                for &x in p {
                    if x >= lo_e && x <= hi_e {
                        f(x);
                    }
                }
            }
            PointSet1D::CosetUnion { offsets, period } => {
                let last = *offsets.last().expect("validated non-empty");
                let kmin = ((lo_e - last) / period).floor() as i64;
                let kmax = (hi_e / period).ceil() as i64;
                for k in kmin..=kmax {
                    let base = k as f64 * period;
                    for o in offsets {
                        let x = o + base;
                        if x >= lo_e && x <= hi_e {
                            f(x);
                        }
                    }
                }
            }
        }
    }
}

/// Elements of `s` in the closed window `[lo, hi]`, strictly increasing.
pub fn enumerate_window(s: &PointSet1D, lo: f64, hi: f64) -> Result<Vec<f64>> {
    if !(lo < hi) {
        return Err(Error::Domain(format!("window needs lo < hi, got [{lo}, {hi}]")));
    }
    let mut out = Vec::new();
    s.for_each_in_window(lo, hi, |x| out.push(x));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapStats {
    /// Window gap sequence `λ_k − λ_{k−1}`.
    pub gaps: Vec<f64>,
    pub ess_min_gap: f64,
    pub ess_max_gap: f64,
    pub sup_gap: f64,
    pub distinct_gap_count: usize,
    /// True when the statistics come from the periodic structure.
    pub exact: bool,
}

fn count_distinct(values: &[f64]) -> usize {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    if v.is_empty() {
        return 0;
    }
    1 + v.windows(2).filter(|w| w[1] - w[0] > GAP_DISTINCT_TOL).count()
}

/// Gap values of one period of a coset union, cyclically closed.
pub fn cyclic_gaps(offsets: &[f64], period: f64) -> Vec<f64> {
    let mut g: Vec<f64> = offsets.windows(2).map(|w| w[1] - w[0]).collect();
    g.push(period + offsets[0] - offsets[offsets.len() - 1]);
    g
}

/// Distinct values among `values`, merged within `GAP_DISTINCT_TOL`.
pub fn distinct_values(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::new();
    for x in v {
        match out.last() {
            Some(&last) if x - last <= GAP_DISTINCT_TOL => {}
            _ => out.push(x),
        }
    }
    out
}

pub fn gap_stats(s: &PointSet1D, window: (f64, f64)) -> Result<GapStats> {
    let (lo, hi) = window;
    let pts = enumerate_window(s, lo, hi)?;
    if pts.len() < 2 {
        return Err(Error::InsufficientPoints { lo, hi, found: pts.len() });
    }
    let gaps: Vec<f64> = pts.windows(2).map(|w| w[1] - w[0]).collect();
    let stats = match s {
        PointSet1D::CosetUnion { offsets, period } => {
            let cyc = cyclic_gaps(offsets, *period);
            let min = cyc.iter().copied().fold(f64::INFINITY, f64::min);
            let max = cyc.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            GapStats {
                distinct_gap_count: count_distinct(&cyc),
                gaps,
                ess_min_gap: min,
                ess_max_gap: max,
                sup_gap: max,
                exact: true,
            }
        }
        PointSet1D::FiniteList(_) => {
            let min = gaps.iter().copied().fold(f64::INFINITY, f64::min);
            let max = gaps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            GapStats {
                distinct_gap_count: count_distinct(&gaps),
                gaps,
                ess_min_gap: min,
                ess_max_gap: max,
                sup_gap: max,
                exact: false,
            }
        }
    };
    Ok(stats)
}

/// Number of points in the closed interval `[center − halfwidth, center + halfwidth]`.
pub fn count_in_interval(s: &PointSet1D, center: f64, halfwidth: f64) -> Result<usize> {
    if !(halfwidth > 0.0) {
        return Err(Error::Domain(format!("halfwidth must be positive, got {halfwidth}")));
    }
    let mut n = 0;
    s.for_each_in_window(center - halfwidth, center + halfwidth, |_| n += 1);
    Ok(n)
}

/// `min_c #(s ∩ [c−R, c+R]) / 2R` over the given centers.
pub fn beurling_lower_density_estimate(s: &PointSet1D, radius: f64, centers: &[f64]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::Domain("need at least one center".into()));
    }
    let mut best = f64::INFINITY;
    for &c in centers {
        let n = count_in_interval(s, c, radius)?;
        best = best.min(n as f64 / (2.0 * radius));
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Repr2D", into = "Repr2D")]
pub enum PointSet2D {
    FiniteList2D(Vec<(f64, f64)>),
    /// `{(n, σn)} ∪ {(n+s, σ(n+s))}` over `n ∈ Z`, with `σ = ±1`, `s ∈ (0, 1)`.
    DiagonalFamily { sign: i32, shift: f64 },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum Repr2D {
    #[serde(rename = "finite2d")]
    Finite { points: Vec<(f64, f64)> },
    #[serde(rename = "diagonal")]
    Diagonal { sign: i32, shift: f64 },
}

impl TryFrom<Repr2D> for PointSet2D {
    type Error = Error;
    fn try_from(r: Repr2D) -> Result<Self> {
        match r {
            Repr2D::Finite { points } => PointSet2D::finite(points),
            Repr2D::Diagonal { sign, shift } => PointSet2D::diagonal(sign, shift),
        }
    }
}

impl From<PointSet2D> for Repr2D {
    fn from(s: PointSet2D) -> Self {
        match s {
            PointSet2D::FiniteList2D(points) => Repr2D::Finite { points },
            PointSet2D::DiagonalFamily { sign, shift } => Repr2D::Diagonal { sign, shift },
        }
    }
}

impl PointSet2D {
    pub fn finite(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
            return Err(Error::InvalidPointSet("non-finite point".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::InvalidPointSet(format!("repeated point {p:?}")));
            }
        }
        Ok(PointSet2D::FiniteList2D(points))
    }

    pub fn diagonal(sign: i32, shift: f64) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidPointSet(format!("sign must be ±1, got {sign}")));
        }
        if !(shift > 0.0 && shift < 1.0) {
            return Err(Error::InvalidPointSet(format!("shift must lie in (0, 1), got {shift}")));
        }
        Ok(PointSet2D::DiagonalFamily { sign, shift })
    }

    /// First-coordinate projection. Fails for finite lists whose first
    /// coordinates repeat.
    pub fn project_first(&self) -> Result<PointSet1D> {
        match self {
            PointSet2D::FiniteList2D(p) => PointSet1D::finite(p.iter().map(|q| q.0).collect()),
            PointSet2D::DiagonalFamily { shift, .. } => PointSet1D::coset_union(vec![0.0, *shift], 1.0),
        }
    }

    /// Second-coordinate projection.
    pub fn project_second(&self) -> Result<PointSet1D> {
        match self {
            PointSet2D::FiniteList2D(p) => PointSet1D::finite(p.iter().map(|q| q.1).collect()),
            PointSet2D::DiagonalFamily { sign, shift } => {
                PointSet1D::integer_cosets(&[0.0, *sign as f64 * shift])
            }
        }
    }
}

/// Points of `s` indexed by `n ∈ [n_lo, n_hi]`: for a diagonal family both
/// branches, `n` ascending with the integer branch first; finite lists are
/// returned whole.
pub fn enumerate_window_2d(s: &PointSet2D, n_lo: i64, n_hi: i64) -> Result<Vec<(f64, f64)>> {
    if n_lo > n_hi {
        return Err(Error::Domain(format!("need n_lo ≤ n_hi, got {n_lo} > {n_hi}")));
    }
    Ok(match s {
        PointSet2D::FiniteList2D(p) => p.clone(),
        PointSet2D::DiagonalFamily { sign, shift } => {
            let sg = *sign as f64;
            let mut out = Vec::with_capacity(2 * (n_hi - n_lo + 1) as usize);
            for n in n_lo..=n_hi {
                let a = n as f64;
                out.push((a, sg * a));
                out.push((a + shift, sg * (a + shift)));
            }
            out
        }
    })
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(",")
}

/// Compact descriptors: `finite:<x>,<x>,…` and `coset:<o>,<o>,…/<period>`.
impl fmt::Display for PointSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSet1D::FiniteList(p) => write!(f, "finite:{}", join(p)),
            PointSet1D::CosetUnion { offsets, period } => {
                write!(f, "coset:{}/{:?}", join(offsets), period)
            }
        }
    }
}

/// Compact descriptors: `diagonal:<sign>,<shift>` and `finite2d:<x>,<y>;<x>,<y>;…`.
impl fmt::Display for PointSet2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSet2D::DiagonalFamily { sign, shift } => write!(f, "diagonal:{sign},{shift:?}"),
            PointSet2D::FiniteList2D(p) => {
                let body = p.iter().map(|(a, b)| format!("{a:?},{b:?}")).collect::<Vec<_>>().join(";");
                write!(f, "finite2d:{body}")
            }
        }
    }
}

fn parse_err(field: &str, message: impl Into<String>) -> Error {
    Error::Parse { field: field.into(), message: message.into() }
}

pub(crate) fn parse_f64(field: &str, s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| parse_err(field, format!("`{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(parse_err(field, format!("`{s}` is not finite")));
    }
    Ok(v)
}

fn parse_list(field: &str, s: &str) -> Result<Vec<f64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_f64(field, t)).collect()
}

impl FromStr for PointSet1D {
    type Err = Error;

    /// Accepts the compact descriptor or the JSON form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| parse_err("set", e.to_string()));
        }
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err("set", format!("`{s}` lacks a `kind:` prefix")))?;
        let set = match kind {
            "finite" => PointSet1D::finite(parse_list("set", body)?),
            "coset" => {
                let (offs, period) = body
                    .rsplit_once('/')
                    .ok_or_else(|| parse_err("set", "coset descriptor needs `offsets/period`"))?;
                PointSet1D::coset_union(parse_list("set", offs)?, parse_f64("set", period)?)
            }
            other => return Err(parse_err("set", format!("unknown set kind `{other}`"))),
        };
        set.map_err(|e| parse_err("set", e.to_string()))
    }
}

impl FromStr for PointSet2D {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| parse_err("set", e.to_string()));
        }
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err("set", format!("`{s}` lacks a `kind:` prefix")))?;
        let set = match kind {
            "diagonal" => {
                let (sign, shift) = body
                    .split_once(',')
                    .ok_or_else(|| parse_err("set", "diagonal descriptor needs `sign,shift`"))?;
                let sign: i32 = sign
                    .trim()
                    .parse()
                    .map_err(|_| parse_err("set", format!("bad sign `{sign}`")))?;
                PointSet2D::diagonal(sign, parse_f64("set", shift)?)
            }
            "finite2d" => {
                let mut pts = Vec::new();
                for pair in body.split(';').filter(|p| !p.trim().is_empty()) {
                    let xs = parse_list("set", pair)?;
                    if xs.len() != 2 {
                        return Err(parse_err("set", format!("`{pair}` is not a pair")));
                    }
                    pts.push((xs[0], xs[1]));
                }
                PointSet2D::finite(pts)
            }
            other => return Err(parse_err("set", format!("unknown 2D set kind `{other}`"))),
        };
        set.map_err(|e| parse_err("set", e.to_string()))
    }
}
