//! Fixed inputs shared by the benchmarks.

use qsearch_core::{Complex64, HamiltonianParams, Overlap};

/// `(params, overlap, time)` triples with complex couplings, deterministic.
pub fn draws(n: usize) -> Vec<(HamiltonianParams, Overlap, f64)> {
    (0..n)
        .map(|i| {
            let s = i as f64 + 1.0;
            let alpha = (0.37 * s).sin() * 2.0;
            let delta = (0.91 * s).cos() * 2.0;
            let beta = Complex64::new((1.3 * s).sin(), (0.53 * s).cos());
            let x = 0.05 + 0.9 * (0.5 + 0.5 * (0.71 * s).sin());
            let t = 0.5 + 0.5 * (0.29 * s).cos();
            (
                HamiltonianParams::unit(alpha, delta, beta).expect("finite fixture"),
                Overlap::new(x).expect("overlap in (0, 1)"),
                t,
            )
        })
        .collect()
}
