#![allow(dead_code)]

use qsearch_core::{CaseLabel, Complex64, HamiltonianParams, Overlap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2021;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn overlap(rng: &mut ChaCha8Rng) -> Overlap {
    Overlap::new(rng.random_range(0.05..0.95)).unwrap()
}

/// α, δ, Re β, Im β uniform in [-2, 2]; E = h = 1.
pub fn general_params(rng: &mut ChaCha8Rng) -> HamiltonianParams {
    let alpha = rng.random_range(-2.0..2.0);
    let delta = rng.random_range(-2.0..2.0);
    let beta = Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
    HamiltonianParams::unit(alpha, delta, beta).unwrap()
}

/// As [`general_params`] with `Im β = 0`, where the interference term vanishes.
pub fn real_params(rng: &mut ChaCha8Rng) -> HamiltonianParams {
    let p = general_params(rng);
    HamiltonianParams::unit(p.alpha(), p.delta(), Complex64::new(p.beta().re, 0.0)).unwrap()
}

fn nonzero(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let v: f64 = rng.random_range(-2.0..2.0);
        if v.abs() > 1e-3 {
            return v;
        }
    }
}

/// Parameters drawn from the constraints that define `label`.
pub fn case_params(rng: &mut ChaCha8Rng, label: CaseLabel) -> HamiltonianParams {
    let zero = Complex64::new(0.0, 0.0);
    let (alpha, delta, beta) = match label {
        CaseLabel::Case1 => {
            let a = nonzero(rng);
            (a, a, zero)
        }
        CaseLabel::Case2 => (nonzero(rng), nonzero(rng), zero),
        CaseLabel::Case3 => (0.0, 0.0, Complex64::new(nonzero(rng), 0.0)),
        CaseLabel::Case4 => (0.0, 0.0, Complex64::new(rng.random_range(-2.0..2.0), nonzero(rng))),
        CaseLabel::Case5 => {
            let a = nonzero(rng);
            (a, a, Complex64::new(nonzero(rng), 0.0))
        }
        CaseLabel::Case6 => {
            let a = nonzero(rng);
            (a, a, Complex64::new(rng.random_range(-2.0..2.0), nonzero(rng)))
        }
        CaseLabel::Case7 => (nonzero(rng), nonzero(rng), Complex64::new(nonzero(rng), 0.0)),
        CaseLabel::General => (nonzero(rng), nonzero(rng), Complex64::new(nonzero(rng), nonzero(rng))),
    };
    HamiltonianParams::unit(alpha, delta, beta).unwrap()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if f(a) < f(b) {
            lo = a;
        } else {
            hi = b;
        }
    }
    let t = 0.5 * (lo + hi);
    (t, f(t))
}
