//! Earliest time at which the success probability reaches a threshold.
//!
//! `P(t) = m + R·cos(2θ - φ)` with `θ = at/ħ`, so the first upward crossing
//! of a level inverts analytically on the rising branch `2θ - φ ∈ (-π, 0)`.

use std::f64::consts::PI;

use crate::dynamics::{oscillation, search_outcome, PeakTime};
use crate::error::{Error, Result};
use crate::hamiltonian::{matrix_rep, HamiltonianParams, Overlap};

/// Thresholds up to this far above the peak still count as reached.
pub const REACH_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    /// First crossing time; `None` when the threshold is never reached.
    pub t_hit: Option<f64>,
    /// Highest probability reached at any time.
    pub p_max: f64,
    pub t_star: PeakTime,
}

impl ThresholdResult {
    pub fn reachable(&self) -> bool {
        self.t_hit.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    A,
    B,
    Tie,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonReport {
    pub params_a: HamiltonianParams,
    pub params_b: HamiltonianParams,
    pub threshold: f64,
    pub result_a: ThresholdResult,
    pub result_b: ThresholdResult,
    pub winner: Winner,
}

/// Two hit times closer than this are a tie.
pub const TIE_TOL: f64 = 1e-12;

pub fn time_to_threshold(p: &HamiltonianParams, x: Overlap, threshold: f64) -> Result<ThresholdResult> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidThreshold(threshold));
    }
    let m = matrix_rep(p, x);
    let x2 = x.get() * x.get();
    let outcome = search_outcome(p, x);
    let osc = oscillation(&m, x, p.hbar());

    let t_hit = match osc {
        _ if threshold <= x2 => Some(0.0),
        None => None,
        Some(_) if threshold > outcome.p_max + REACH_MARGIN => None,
        Some(o) if o.amplitude == 0.0 || threshold >= o.peak() => outcome.t_star.time(),
        Some(o) => {
            // acos((p - m)/R) as an atan2 of well-conditioned differences.
            let below = o.peak() - threshold;
            let above_trough = threshold - o.trough();
            let half_angle = (below * above_trough).sqrt().atan2(threshold - o.mean);
            let two_theta = (o.phase - half_angle).rem_euclid(2.0 * PI);
            Some(0.5 * two_theta / o.rate)
        }
    };
    Ok(ThresholdResult {
        t_hit,
        p_max: outcome.p_max,
        t_star: outcome.t_star,
    })
}

pub fn compare_speed(
    pa: &HamiltonianParams,
    pb: &HamiltonianParams,
    x: Overlap,
    threshold: f64,
) -> Result<ComparisonReport> {
    let result_a = time_to_threshold(pa, x, threshold)?;
    let result_b = time_to_threshold(pb, x, threshold)?;
    let winner = match (result_a.t_hit, result_b.t_hit) {
        (None, None) => Winner::Neither,
        (Some(_), None) => Winner::A,
        (None, Some(_)) => Winner::B,
        (Some(ta), Some(tb)) => {
            if (ta - tb).abs() <= TIE_TOL {
                Winner::Tie
            } else if ta < tb {
                Winner::A
            } else {
                Winner::B
            }
        }
    };
    Ok(ComparisonReport {
        params_a: *pa,
        params_b: *pb,
        threshold,
        result_a,
        result_b,
        winner,
    })
}
