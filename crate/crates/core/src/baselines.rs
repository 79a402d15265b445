//! Digital Grover and Farhi-Gutmann analog success probabilities.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hamiltonian::Overlap;

/// `k` Grover iterations on an unstructured list of `n_items` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroverQuery {
    k: u64,
    n_items: u64,
}

impl GroverQuery {
    pub fn new(k: u64, n_items: u64) -> Result<Self> {
        if n_items < 2 {
            return Err(Error::InvalidArgument(format!("need at least 2 items, got {n_items}")));
        }
        Ok(Self { k, n_items })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n_items(&self) -> u64 {
        self.n_items
    }
}

/// Half-angle of the Grover rotation, `atan(1/√(N-1))`.
fn grover_angle(n_items: u64) -> f64 {
    (1.0 / ((n_items - 1) as f64).sqrt()).atan()
}

/// `sin²((2k + 1)·atan(1/√(N-1)))`.
pub fn grover_probability(q: GroverQuery) -> f64 {
    let theta = grover_angle(q.n_items);
    let s = ((2 * q.k + 1) as f64 * theta).sin();
    s * s
}

/// Iteration count maximizing [`grover_probability`]. Of the two integers
/// around `(π/4)/θ - ½`, the one with the higher probability wins; ties go
/// to the smaller count.
pub fn grover_optimal_k(n_items: u64) -> Result<u64> {
    GroverQuery::new(0, n_items)?;
    let ideal = (PI / 4.0) / grover_angle(n_items) - 0.5;
    let lo = ideal.floor().max(0.0) as u64;
    let hi = lo + 1;
    let p = |k| grover_probability(GroverQuery { k, n_items });
    // Probabilities within a few ulps are a tie.
    Ok(if p(hi) > p(lo) + 1e-14 { hi } else { lo })
}

/// `sin²(Ext/ħ) + x² cos²(Ext/ħ)` with `ħ = h/2π`.
pub fn farhi_gutmann_probability(t: f64, x: Overlap, energy: f64, planck: f64) -> f64 {
    let hbar = planck / (2.0 * PI);
    let xv = x.get();
    let (s, c) = (energy * xv * t / hbar).sin_cos();
    s * s + xv * xv * c * c
}
