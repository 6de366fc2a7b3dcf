//! Seeded random probe points.
//!
//! All randomness in the crate comes from `ChaCha8Rng::seed_from_u64(seed)`,
//! whose output stream is fixed across platforms and crate versions, drawing
//! uniform `f64` values in `[0, 1)` with `rand`'s standard distribution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` uniform points in `[lo, hi)`.
pub fn uniform_points(seed: u64, count: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = seeded(seed);
    (0..count).map(|_| lo + (hi - lo) * rng.gen::<f64>()).collect()
}

/// `count` uniform points in the square `[lo, hi)²`.
pub fn uniform_pairs(seed: u64, count: usize, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let a = lo + (hi - lo) * rng.gen::<f64>();
            let b = lo + (hi - lo) * rng.gen::<f64>();
            (a, b)
        })
        .collect()
}

/// `count` equispaced points `start + i·(stop − start)/count`, i.e. the
/// half-open grid on `[start, stop)`.
pub fn half_open_grid(start: f64, stop: f64, count: usize) -> Vec<f64> {
    let h = (stop - start) / count as f64;
    (0..count).map(|i| start + i as f64 * h).collect()
}

/// `count` equispaced points including both endpoints (`count == 1` gives `[start]`).
pub fn closed_grid(start: f64, stop: f64, count: usize) -> Vec<f64> {
    if count <= 1 {
        return vec![start];
    }
    let h = (stop - start) / (count - 1) as f64;
    (0..count).map(|i| start + i as f64 * h).collect()
}

/// The default probe grid for spectrum checks: 257 equispaced points on
/// `[0, 1)` plus `random` seeded points in `[0, 1)`.
pub fn jp_probe_grid(random: usize, seed: u64) -> Vec<f64> {
    let mut g = half_open_grid(0.0, 1.0, 257);
    g.extend(uniform_points(seed, random, 0.0, 1.0));
    g
}
