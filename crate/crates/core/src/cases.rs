//! The seven special-case Hamiltonians and their closed forms.
//!
//! | label | α, δ          | β               | peak   |
//! |-------|---------------|-----------------|--------|
//! | 1     | α = δ         | 0               | 1      |
//! | 2     | α ≠ δ         | 0               | ≤ 1    |
//! | 3     | α = δ = 0     | real, ≠ 0       | 1      |
//! | 4     | α = δ = 0     | complex         | ≤ 1    |
//! | 5     | α = δ ≠ 0     | real, ≠ 0       | 1      |
//! | 6     | α = δ ≠ 0     | complex         | ≤ 1    |
//! | 7     | α ≠ δ         | real, ≠ 0       | ≤ 1    |
//!
//! Everything else (α ≠ δ with complex β) is `General`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::dynamics::{self, PeakTime};
use crate::error::{Error, Result};
use crate::hamiltonian::{HamiltonianParams, Overlap};

/// Absolute tolerance for the equalities that define each case.
pub const CLASSIFY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    General,
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
    Case7,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 8] = [
        CaseLabel::General,
        CaseLabel::Case1,
        CaseLabel::Case2,
        CaseLabel::Case3,
        CaseLabel::Case4,
        CaseLabel::Case5,
        CaseLabel::Case6,
        CaseLabel::Case7,
    ];

    /// Cases whose peak probability is exactly one.
    pub fn is_optimal(self) -> bool {
        matches!(self, CaseLabel::Case1 | CaseLabel::Case3 | CaseLabel::Case5)
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::General => "general",
            CaseLabel::Case1 => "case1",
            CaseLabel::Case2 => "case2",
            CaseLabel::Case3 => "case3",
            CaseLabel::Case4 => "case4",
            CaseLabel::Case5 => "case5",
            CaseLabel::Case6 => "case6",
            CaseLabel::Case7 => "case7",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn zero(v: f64) -> bool {
    v.abs() <= CLASSIFY_TOL
}

/// Most constrained case first: 1, 3, 5, 4, 6, 2, 7, then general.
pub fn classify(p: &HamiltonianParams) -> CaseLabel {
    let symmetric = zero(p.alpha() - p.delta());
    let diag_zero = zero(p.alpha()) && zero(p.delta());
    let beta_zero = zero(p.beta().norm());
    let beta_real = zero(p.beta().im);

    if symmetric && beta_zero {
        CaseLabel::Case1
    } else if diag_zero && beta_real {
        CaseLabel::Case3
    } else if symmetric && beta_real {
        CaseLabel::Case5
    } else if diag_zero {
        CaseLabel::Case4
    } else if symmetric {
        CaseLabel::Case6
    } else if beta_zero {
        CaseLabel::Case2
    } else if beta_real {
        CaseLabel::Case7
    } else {
        CaseLabel::General
    }
}

fn check_label(label: CaseLabel, p: &HamiltonianParams) -> Result<()> {
    let actual = classify(p);
    if actual == label {
        Ok(())
    } else {
        Err(Error::LabelMismatch {
            requested: label,
            actual,
        })
    }
}

/// `πħ / (2E)`, the time unit every case formula is expressed in.
fn time_unit(p: &HamiltonianParams) -> f64 {
    PI * p.hbar() / (2.0 * p.energy())
}

/// Peak probability from the case's own formula.
///
/// Cases 1, 3 and 5 return one except on their degenerate members (the zero
/// Hamiltonian, and `αx + β = 0` in case 5), where nothing evolves and the
/// value is `x²`.
pub fn case_p_max(label: CaseLabel, p: &HamiltonianParams, x: Overlap) -> Result<f64> {
    check_label(label, p)?;
    let xv = x.get();
    let x2 = xv * xv;
    let one_minus_x2 = (1.0 - xv) * (1.0 + xv);
    let (alpha, delta, beta) = (p.alpha(), p.delta(), p.beta());
    let re = beta.re;
    let mod2 = beta.norm_sqr();

    let value = match label {
        CaseLabel::Case1 => {
            if alpha == 0.0 {
                x2
            } else {
                1.0
            }
        }
        CaseLabel::Case3 => 1.0,
        CaseLabel::Case5 => {
            if alpha * xv + re == 0.0 {
                x2
            } else {
                1.0
            }
        }
        CaseLabel::Case2 => {
            let sum = alpha + delta;
            let diff = alpha - delta;
            sum * sum * x2 / (4.0 * x2 * alpha * delta + diff * diff)
        }
        CaseLabel::Case4 => {
            let re2 = re * re;
            (8.0 * re2 * x2 - 4.0 * re2 * x2 * x2 + 4.0 * mod2 * one_minus_x2 * one_minus_x2)
                / (4.0 * re2 * x2 + 4.0 * mod2 * one_minus_x2)
        }
        CaseLabel::Case6 => {
            let diag = 2.0 * re * xv + 2.0 * alpha * x2;
            let coupling = beta + alpha * xv;
            let num = (coupling * (2.0 * one_minus_x2) + diag * xv).norm_sqr();
            let den = diag * diag + 4.0 * one_minus_x2 * (mod2 + 2.0 * alpha * re * xv + alpha * alpha * x2);
            num / den
        }
        CaseLabel::Case7 => {
            let b = re;
            let top = (alpha + delta) * xv + 2.0 * b;
            let diff = alpha - delta;
            top * top / (4.0 * (alpha * delta * x2 + (alpha * b + b * delta) * xv + b * b) + diff * diff)
        }
        CaseLabel::General => dynamics::p_max(p, x),
    };
    Ok(value)
}

/// Peak time from the case's own formula, in units of `πħ/(2E)`.
pub fn case_t_star(label: CaseLabel, p: &HamiltonianParams, x: Overlap) -> Result<PeakTime> {
    check_label(label, p)?;
    let xv = x.get();
    let x2 = xv * xv;
    let one_minus_x2 = (1.0 - xv) * (1.0 + xv);
    let (alpha, delta, beta) = (p.alpha(), p.delta(), p.beta());
    let re = beta.re;
    let mod2 = beta.norm_sqr();

    // Each arm yields the dimensionless rate 2a/E; t* = time_unit · 2 / rate.
    let rate = match label {
        CaseLabel::Case1 => 2.0 * (alpha * xv).abs(),
        CaseLabel::Case3 => 2.0 * re.abs(),
        CaseLabel::Case5 => 2.0 * (alpha * xv + re).abs(),
        CaseLabel::Case2 => {
            let diff = alpha - delta;
            (4.0 * x2 * alpha * delta + diff * diff).sqrt()
        }
        CaseLabel::Case4 => (4.0 * re * re * x2 + 4.0 * mod2 * one_minus_x2).sqrt(),
        CaseLabel::Case6 => {
            let diag = 2.0 * re * xv + 2.0 * alpha * x2;
            (diag * diag + 4.0 * one_minus_x2 * (mod2 + 2.0 * alpha * re * xv + alpha * alpha * x2)).sqrt()
        }
        CaseLabel::Case7 => {
            let diff = alpha - delta;
            (4.0 * (alpha * delta * x2 + (alpha * re + re * delta) * xv + re * re) + diff * diff).sqrt()
        }
        CaseLabel::General => {
            let im2 = beta.im * beta.im;
            let sum = alpha + delta;
            let diff = alpha - delta;
            (4.0 * (alpha * delta - im2) * x2 + 4.0 * re * sum * xv + diff * diff + 4.0 * mod2).sqrt()
        }
    };
    if rate == 0.0 || rate.is_nan() {
        return Ok(PeakTime::NoOscillation);
    }
    Ok(PeakTime::At(2.0 / rate * time_unit(p)))
}

fn perturbative_scale(label: CaseLabel, p: &HamiltonianParams, x: Overlap) -> Result<f64> {
    let mismatch = || Error::LabelMismatch {
        requested: label,
        actual: classify(p),
    };
    match label {
        CaseLabel::Case2 if zero(p.beta().norm()) => Ok(p.alpha() * x.get()),
        CaseLabel::Case7 if zero(p.beta().im) => Ok(p.alpha() * x.get() + p.beta().re),
        _ => Err(mismatch()),
    }
}

/// Second-order expansion of the peak for a small asymmetry `α - δ`:
/// `1 - ¼(1 - x²)(α - δ)² / s²` with `s = αx` (case 2) or `αx + β` (case 7).
///
/// Only the β constraint of the family is checked, so `α = δ` is accepted
/// and yields exactly one.
pub fn perturbative_p_max(label: CaseLabel, p: &HamiltonianParams, x: Overlap) -> Result<f64> {
    let s = perturbative_scale(label, p, x)?;
    let xv = x.get();
    let eps = p.alpha() - p.delta();
    Ok(1.0 - 0.25 * (1.0 - xv) * (1.0 + xv) * eps * eps / (s * s))
}

/// `[1/s - ⅛ (α - δ)² / s³] · πħ/(2E)`, the matching expansion of `t*`.
pub fn perturbative_t_star(label: CaseLabel, p: &HamiltonianParams, x: Overlap) -> Result<f64> {
    let s = perturbative_scale(label, p, x)?;
    let eps = p.alpha() - p.delta();
    Ok((1.0 / s - 0.125 * eps * eps / (s * s * s)) * time_unit(p))
}

/// Peak probability in the limit `x → 0`: `4|β|² / ((α - δ)² + 4|β|²)`,
/// with the `0/0` point (`β = 0`, `α = δ`) taken as one.
pub fn p_max_x_zero_limit(p: &HamiltonianParams) -> f64 {
    p_max_x_zero_limit_raw(p.alpha() - p.delta(), p.beta().norm())
}

/// Same limit as a function of the asymmetry `α - δ` and `|β|` alone.
pub fn p_max_x_zero_limit_raw(asymmetry: f64, beta_abs: f64) -> f64 {
    let num = 4.0 * beta_abs * beta_abs;
    let den = asymmetry * asymmetry + num;
    if den == 0.0 {
        1.0
    } else {
        num / den
    }
}

/// Case-4 member with `β = 2ix`, the Fenner Hamiltonian.
pub fn fenner_params(energy: f64, planck: f64, x: Overlap) -> Result<HamiltonianParams> {
    HamiltonianParams::new(0.0, 0.0, Complex64::new(0.0, 2.0 * x.get()), energy, planck)
}

/// Sufficient condition for case 1 (with the same α) to be no faster than
/// case 2: `0 ≤ δ / (1 - 4x²) ≤ α`. `None` when `x ≥ ½`, where the ratio is
/// undefined or flips sign.
pub fn case1_not_faster_than_case2(alpha: f64, delta: f64, x: Overlap) -> Option<bool> {
    let xv = x.get();
    let denom = 1.0 - 4.0 * xv * xv;
    if denom <= 0.0 {
        return None;
    }
    let ratio = delta / denom;
    Some(0.0 <= ratio && ratio <= alpha)
}
