//! Transition probability `P(t) = |⟨ψ_w|e^{-iHt/ħ}|ψ_s⟩|²` and its peak.
//!
//! With `θ = at/ħ`, `d = h11 - h22` and `z = (dx/2 + h12·√(1-x²)) / a`, the
//! amplitude is `e^{-iφ(t)}·(x cos θ - i z sin θ)`, so
//!
//! ```text
//! P(t) = x² cos²θ + |z|² sin²θ + x·Im(z)·sin 2θ
//! ```
//!
//! For real `h12` (real `β`) the last term vanishes and this is the familiar
//! `|dx + 2h12√(1-x²)|²/(4a²)·sin²θ + x²cos²θ`. The closed form never
//! divides by `h21`; the eigenvector route ([`amplitude`]) and the
//! Runge-Kutta propagator ([`propagate_numeric`]) exist to cross-check it.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hamiltonian::{matrix_rep, HamiltonianParams, MatrixRep, Overlap};
use crate::spectral::{gap_parameter, Spectrum};

/// Upper bound on the number of Runge-Kutta steps.
pub const MAX_RK_STEPS: u64 = 1_000_000_000;

/// Steps per unit of `‖H‖·t/ħ`. The contract only requires `≥ 50`; the finer
/// step keeps the global RK4 phase error below `1e-9` over a few hundred
/// radians.
const RK_STEPS_PER_RADIAN: f64 = 200.0;

/// When the probability peaks. `NoOscillation` for a degenerate spectrum,
/// where `P(t) ≡ x²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PeakTime {
    At(f64),
    NoOscillation,
}

impl PeakTime {
    pub fn time(self) -> Option<f64> {
        match self {
            PeakTime::At(t) => Some(t),
            PeakTime::NoOscillation => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TildeCoeffs {
    pub a_tilde: Complex64,
    pub b_tilde: Complex64,
}

/// Best achievable success probability and the first time it is reached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOutcome {
    pub p_max: f64,
    pub t_star: PeakTime,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityCurve {
    pub times: Vec<f64>,
    pub probs: Vec<f64>,
}

impl ProbabilityCurve {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.times.iter().copied().zip(self.probs.iter().copied())
    }
}

/// Coefficient of `sin²θ`: `|dx + 2 h12 √(1-x²)|² / (4a²)`, or `x²` for a
/// degenerate spectrum. This is the peak of `P` whenever `h12` is real.
pub fn oscillation_peak(m: &MatrixRep, x: Overlap) -> f64 {
    let xv = x.get();
    match rotation_axis(m, x) {
        Some(z) => z.norm_sqr(),
        None => xv * xv,
    }
}

/// `z = (dx/2 + h12 √(1-x²)) / a`, `None` when `a = 0`.
fn rotation_axis(m: &MatrixRep, x: Overlap) -> Option<Complex64> {
    let a = gap_parameter(m);
    if a == 0.0 {
        return None;
    }
    Some((m.h12() * x.complement() + 0.5 * m.splitting() * x.get()) / a)
}

pub fn transition_probability(m: &MatrixRep, x: Overlap, t: f64, hbar: f64) -> f64 {
    let xv = x.get();
    let Some(z) = rotation_axis(m, x) else {
        return xv * xv;
    };
    let (s, c) = (gap_parameter(m) * t / hbar).sin_cos();
    let re = xv * c + z.im * s;
    let im = z.re * s;
    re * re + im * im
}

/// `P(t) = mean + amplitude·cos(2θ - phase)`, the form used to locate the
/// true maximum and to invert threshold crossings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillation {
    pub mean: f64,
    pub amplitude: f64,
    pub phase: f64,
    /// `a / ħ`, so `θ = rate · t`.
    pub rate: f64,
}

impl Oscillation {
    pub fn peak(&self) -> f64 {
        self.mean + self.amplitude
    }

    pub fn trough(&self) -> f64 {
        self.mean - self.amplitude
    }

    /// First `t ≥ 0` at which the peak is reached.
    pub fn first_peak_time(&self) -> f64 {
        let two_theta = if self.phase >= 0.0 {
            self.phase
        } else {
            self.phase + 2.0 * PI
        };
        0.5 * two_theta / self.rate
    }
}

/// `None` for a degenerate spectrum, where `P(t) ≡ x²`.
pub fn oscillation(m: &MatrixRep, x: Overlap, hbar: f64) -> Option<Oscillation> {
    let z = rotation_axis(m, x)?;
    let x2 = x.get() * x.get();
    let c = z.norm_sqr();
    let cos_part = 0.5 * (x2 - c);
    let sin_part = x.get() * z.im;
    Some(Oscillation {
        mean: 0.5 * (x2 + c),
        amplitude: cos_part.hypot(sin_part),
        phase: sin_part.atan2(cos_part),
        rate: gap_parameter(m) / hbar,
    })
}

pub fn tilde_coeffs(spec: &Spectrum, x: Overlap) -> Result<TildeCoeffs> {
    let coeffs = spec.coeffs.ok_or(Error::DegenerateOffDiagonal)?;
    let (a, b) = (coeffs.a, coeffs.b);
    let diff = a - b;
    if diff.norm() == 0.0 {
        return Err(Error::DegenerateOffDiagonal);
    }
    let xv = x.get();
    let s = x.complement();
    Ok(TildeCoeffs {
        a_tilde: a * (xv - b * s) / diff,
        b_tilde: -b * (xv - a * s) / diff,
    })
}

/// `⟨ψ_w|e^{-iHt/ħ}|ψ_s⟩` from the eigenvector coefficients.
pub fn amplitude(spec: &Spectrum, x: Overlap, t: f64, hbar: f64) -> Result<Complex64> {
    let tc = tilde_coeffs(spec, x)?;
    let phase = Complex64::from_polar(1.0, -spec.mean_energy() * t / hbar);
    let rot = Complex64::from_polar(1.0, spec.gap * t / hbar);
    Ok(phase * (tc.a_tilde * rot + tc.b_tilde * rot.conj()))
}

/// Closed-form `P_max` in the parameters `(α, β, δ, x)`:
///
/// ```text
///          4 Im²β x⁴ + [(α+δ)² - 8 Im²β] x² + 4 Reβ (α+δ) x + 4|β|²
/// P_max = ---------------------------------------------------------
///          4 (αδ - Im²β) x² + 4 Reβ (α+δ) x + (α-δ)² + 4|β|²
/// ```
///
/// Returns `x²` when the spectrum is degenerate. This is the coefficient of
/// `sin²θ`, hence the value of `P` at [`t_star`] for real `β`; see
/// [`search_outcome`] for the supremum over all times.
pub fn p_max(p: &HamiltonianParams, x: Overlap) -> f64 {
    let xv = x.get();
    if gap_parameter(&matrix_rep(p, x)) == 0.0 {
        return xv * xv;
    }
    let (alpha, delta) = (p.alpha(), p.delta());
    let re = p.beta().re;
    let im2 = p.beta().im * p.beta().im;
    let mod2 = p.beta().norm_sqr();
    let sum = alpha + delta;
    let x2 = xv * xv;
    let num = 4.0 * im2 * x2 * x2 + (sum * sum - 8.0 * im2) * x2 + 4.0 * re * sum * xv + 4.0 * mod2;
    let den = 4.0 * (alpha * delta - im2) * x2 + 4.0 * re * sum * xv + (alpha - delta) * (alpha - delta) + 4.0 * mod2;
    num / den
}

/// The same peak value written directly in terms of the matrix entries
/// divided by `E`, before any simplification.
pub fn p_max_unsimplified(p: &HamiltonianParams, x: Overlap) -> f64 {
    let xv = x.get();
    let one_minus_x2 = (1.0 - xv) * (1.0 + xv);
    let (alpha, delta, beta) = (p.alpha(), p.delta(), p.beta());
    let diag = (alpha - delta) + 2.0 * beta.re * xv + 2.0 * delta * xv * xv;
    let coupling = beta + delta * xv;
    let num = (coupling * (2.0 * one_minus_x2) + diag * xv).norm_sqr();
    let den = diag * diag + 4.0 * one_minus_x2 * coupling.norm_sqr();
    if den == 0.0 {
        return xv * xv;
    }
    num / den
}

/// `t* = πħ / (2a)`, where `sin²θ` first reaches one.
pub fn t_star(p: &HamiltonianParams, x: Overlap) -> PeakTime {
    let a = gap_parameter(&matrix_rep(p, x));
    if a == 0.0 {
        PeakTime::NoOscillation
    } else {
        PeakTime::At(PI * p.hbar() / (2.0 * a))
    }
}

/// Supremum of `P(t)` over `t ≥ 0` and the first time it is attained.
///
/// Matches ([`p_max`], [`t_star`]) for real `β` as long as the peak beats the
/// initial overlap; otherwise the supremum is `x²` at `t = 0`. For complex
/// `β` the interference term shifts both the height and the time of the
/// maximum.
pub fn search_outcome(p: &HamiltonianParams, x: Overlap) -> SearchOutcome {
    let m = matrix_rep(p, x);
    let gap = gap_parameter(&m);
    let x2 = x.get() * x.get();
    match oscillation(&m, x, p.hbar()) {
        None => SearchOutcome {
            p_max: x2,
            t_star: PeakTime::NoOscillation,
            gap,
        },
        Some(osc) if osc.amplitude == 0.0 => SearchOutcome {
            p_max: x2,
            t_star: PeakTime::At(0.0),
            gap,
        },
        Some(osc) => SearchOutcome {
            p_max: osc.peak().max(x2),
            t_star: PeakTime::At(osc.first_peak_time()),
            gap,
        },
    }
}

/// Integrates `iħ ψ' = Hψ` from the source state with classical fixed-step
/// RK4 and returns `|⟨ψ_w|ψ(t)⟩|²`. Uses nothing but the raw matrix entries.
pub fn propagate_numeric(m: &MatrixRep, x: Overlap, t: f64, hbar: f64) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidArgument(format!("time must be finite and >= 0, got {t}")));
    }
    let xv = x.get();
    if t == 0.0 {
        return Ok(xv * xv);
    }
    let norm = m.frobenius_norm();
    let mut h_max = t / 100.0;
    if norm > 0.0 {
        h_max = h_max.min(hbar / (RK_STEPS_PER_RADIAN * norm));
    }
    let steps = (t / h_max).ceil();
    if steps > MAX_RK_STEPS as f64 {
        return Err(Error::StepUnderflow {
            steps,
            limit: MAX_RK_STEPS,
        });
    }
    let n = steps as u64;
    let dt = t / n as f64;

    // ψ' = -i/ħ · H ψ
    let h = m.entries();
    let scale = Complex64::new(0.0, -1.0 / hbar);
    let deriv = |psi: [Complex64; 2]| -> [Complex64; 2] {
        [
            scale * (h[0][0] * psi[0] + h[0][1] * psi[1]),
            scale * (h[1][0] * psi[0] + h[1][1] * psi[1]),
        ]
    };
    let axpy =
        |psi: [Complex64; 2], k: [Complex64; 2], w: f64| -> [Complex64; 2] { [psi[0] + k[0] * w, psi[1] + k[1] * w] };

    let mut psi = [Complex64::new(xv, 0.0), Complex64::new(x.complement(), 0.0)];
    for _ in 0..n {
        let k1 = deriv(psi);
        let k2 = deriv(axpy(psi, k1, 0.5 * dt));
        let k3 = deriv(axpy(psi, k2, 0.5 * dt));
        let k4 = deriv(axpy(psi, k3, dt));
        for i in 0..2 {
            psi[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0);
        }
    }
    Ok(psi[0].norm_sqr())
}

/// Closed-form `P` on the uniform grid `t_i = t_end · i / (n - 1)`.
pub fn sample_curve(p: &HamiltonianParams, x: Overlap, t_end: f64, n: usize) -> Result<ProbabilityCurve> {
    if n < 2 {
        return Err(Error::InvalidGrid(format!("need at least 2 samples, got {n}")));
    }
    if !t_end.is_finite() || t_end <= 0.0 {
        return Err(Error::InvalidGrid(format!("end time must be positive, got {t_end}")));
    }
    let m = matrix_rep(p, x);
    let hbar = p.hbar();
    let last = (n - 1) as f64;
    let times: Vec<f64> = (0..n).map(|i| t_end * i as f64 / last).collect();
    let probs = times.iter().map(|&t| transition_probability(&m, x, t, hbar)).collect();
    Ok(ProbabilityCurve { times, probs })
}
