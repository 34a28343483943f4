//! Timing and memory measurements for the conjugacy decision, across a
//! range of word lengths. The decision procedure is expected to scale
//! linearly; the report carries the fitted log-log slope so the claim can be
//! checked mechanically.

use std::time::Instant;

use braid3::conjugacy::are_conjugate;

use crate::alloc_track;
use crate::random;

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub lengths: Vec<usize>,
    /// Best-of-N wall-clock seconds per conjugacy decision.
    pub seconds: Vec<f64>,
    /// Peak heap bytes per decision (0 without the tracking allocator).
    pub peak_bytes: Vec<usize>,
    /// Least-squares slope of log(time) against log(length); None for a
    /// single length.
    pub fitted_exponent: Option<f64>,
}

impl BenchReport {
    pub fn print(&self) {
        println!("{:>10} {:>14} {:>14}", "length", "seconds", "peak bytes");
        for i in 0..self.lengths.len() {
            println!(
                "{:>10} {:>14.6} {:>14}",
                self.lengths[i], self.seconds[i], self.peak_bytes[i]
            );
        }
        match self.fitted_exponent {
            Some(s) => println!("fitted log-log slope: {s:.3}"),
            None => println!("fitted log-log slope: undefined (single length)"),
        }
    }
}

/// Times `are_conjugate` on conjugate pairs (g·w·g⁻¹, w) at each length.
/// Inputs are deterministic in the seed; each timing is the minimum over
/// `reps` runs.
pub fn bench_conjugacy(lengths: &[usize], seed: u64, reps: usize) -> BenchReport {
    assert!(!lengths.is_empty(), "lengths must be nonempty");
    assert!(lengths.windows(2).all(|w| w[0] < w[1]), "lengths must increase");
    let mut seconds = Vec::with_capacity(lengths.len());
    let mut peak_bytes = Vec::with_capacity(lengths.len());
    let mut r = random::rng(seed);
    for &len in lengths {
        let w = random::random_braid_with(&mut r, len);
        let g = random::random_braid_with(&mut r, len);
        let phi = g.conjugate(&w);
        let mut best = f64::INFINITY;
        let mut peak = 0usize;
        for _ in 0..reps.max(1) {
            alloc_track::begin_measurement();
            let start = Instant::now();
            let verdict = are_conjugate(&phi, &w).expect("decision");
            let dt = start.elapsed().as_secs_f64();
            peak = peak.max(alloc_track::peak_since_reset());
            assert!(verdict.is_conjugate(), "constructed pair must be conjugate");
            best = best.min(dt);
        }
        seconds.push(best);
        peak_bytes.push(peak);
    }
    let fitted_exponent = fit_slope(lengths, &seconds);
    BenchReport {
        lengths: lengths.to_vec(),
        seconds,
        peak_bytes,
        fitted_exponent,
    }
}

/// Least-squares slope of ln(y) on ln(x).
fn fit_slope(lengths: &[usize], seconds: &[f64]) -> Option<f64> {
    if lengths.len() < 2 {
        return None;
    }
    let xs: Vec<f64> = lengths.iter().map(|&l| (l as f64).ln()).collect();
    let ys: Vec<f64> = seconds.iter().map(|&s| s.max(1e-9).ln()).collect();
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..xs.len() {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    Some(sxy / sxx)
}
