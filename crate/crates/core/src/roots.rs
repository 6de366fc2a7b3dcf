//! Bracketed bisection on monotone or sign-changing brackets.

use crate::error::{Error, Result};

/// Bisect `f` on `[lo, hi]`, where `f(lo)` and `f(hi)` have opposite signs
/// (or one of them is zero). Iterates until the bracket collapses to
/// adjacent floats or `f` hits zero exactly.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, max_iter: usize, what: &'static str) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Domain(format!(
            "{what}: bracket [{lo}, {hi}] does not straddle a root"
        )));
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(if f_lo.abs() <= f(hi).abs() { lo } else { hi });
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::IterationLimit { what, max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 200, "sqrt").unwrap();
        assert!((r - 2f64.sqrt()).abs() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn rejects_non_bracket() {
        assert!(matches!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 200, "t"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn iteration_limit() {
        assert!(matches!(
            bisect(|x| x - 0.3, 0.0, 1.0, 3, "t"),
            Err(Error::IterationLimit { max_iter: 3, .. })
        ));
    }
}
