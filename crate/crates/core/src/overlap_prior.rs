//! Probability that a randomly placed target has overlap at least `x̄` with
//! the source, for states on the unit sphere of a Hilbert space of complex
//! dimension `N`.
//!
//! With `x = cos θ` and a density `ρ(θ)` that depends only on the polar
//! angle,
//!
//! ```text
//! Prob(x ≥ x̄) = ∫₀^θ̄ ρ(θ) sin^{2N-2}θ dθ / ∫₀^{π/2} ρ(θ) sin^{2N-2}θ dθ
//! ```
//!
//! The normalization of `ρ` cancels in the ratio and is never computed.

use std::f64::consts::FRAC_PI_2;

use statrs::function::beta::beta_reg;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, Tolerance, DEFAULT_MAX_PANELS};

/// Per-integral tolerance: absolute on the denominator, relative on the
/// numerator so tail probabilities near `1e-14` keep their digits.
pub const QUAD_TOL: f64 = 1e-12;

/// Largest tolerated gap between the incomplete-beta and quadrature routes.
pub const UNIFORM_AGREEMENT_TOL: f64 = 1e-10;

/// Non-uniform target prior
/// `ρ(θ) ∝ exp(-(θ - μ)² / 2σ²) / (1 + (10 sin θ)^{2N-2})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriorSpec {
    hilbert_dim: u32,
    mu_theta: f64,
    sigma_sq: f64,
}

impl PriorSpec {
    pub fn new(hilbert_dim: u32, mu_theta: f64, sigma_sq: f64) -> Result<Self> {
        check_dim(hilbert_dim)?;
        if !(0.0..=FRAC_PI_2).contains(&mu_theta) {
            return Err(Error::InvalidArgument(format!(
                "mean angle must lie in [0, π/2], got {mu_theta}"
            )));
        }
        if !sigma_sq.is_finite() || sigma_sq <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "variance must be positive, got {sigma_sq}"
            )));
        }
        Ok(Self {
            hilbert_dim,
            mu_theta,
            sigma_sq,
        })
    }

    pub fn hilbert_dim(&self) -> u32 {
        self.hilbert_dim
    }

    pub fn mu_theta(&self) -> f64 {
        self.mu_theta
    }

    pub fn sigma_sq(&self) -> f64 {
        self.sigma_sq
    }
}

fn check_dim(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Hilbert dimension must be >= 2, got {n}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapBound {
    x_bar: f64,
}

impl OverlapBound {
    pub fn new(x_bar: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&x_bar) {
            return Err(Error::InvalidArgument(format!(
                "overlap bound must lie in [0, 1], got {x_bar}"
            )));
        }
        Ok(Self { x_bar })
    }

    pub fn x_bar(&self) -> f64 {
        self.x_bar
    }

    /// `acos(x̄) ∈ [0, π/2]`.
    pub fn theta_bar(&self) -> f64 {
        self.x_bar.acos()
    }
}

/// Unnormalized prior density at polar angle `theta`.
pub fn target_density(theta: f64, spec: &PriorSpec) -> f64 {
    let d = theta - spec.mu_theta;
    let gauss = (-d * d / (2.0 * spec.sigma_sq)).exp();
    let knee = (10.0 * theta.sin()).powi(2 * spec.hilbert_dim as i32 - 2);
    gauss / (1.0 + knee)
}

fn ratio_by_quadrature<F: Fn(f64) -> f64>(weight: F, theta_bar: f64) -> Result<f64> {
    if theta_bar <= 0.0 {
        return Ok(0.0);
    }
    let den = integrate(
        &weight,
        0.0,
        FRAC_PI_2,
        Tolerance::relative(QUAD_TOL),
        DEFAULT_MAX_PANELS,
    )?;
    if theta_bar >= FRAC_PI_2 {
        return Ok(1.0);
    }
    let num = integrate(
        &weight,
        0.0,
        theta_bar,
        Tolerance::relative(QUAD_TOL),
        DEFAULT_MAX_PANELS,
    )?;
    Ok(num.value / den.value)
}

pub fn prob_overlap_at_least(bound: OverlapBound, spec: &PriorSpec) -> Result<f64> {
    prob_overlap_with_density(bound, spec.hilbert_dim, |t| target_density(t, spec))
}

/// `Prob(x ≥ x̄)` for an arbitrary unnormalized density over the polar angle.
pub fn prob_overlap_with_density<F: Fn(f64) -> f64>(bound: OverlapBound, n: u32, density: F) -> Result<f64> {
    check_dim(n)?;
    let power = 2 * n as i32 - 2;
    ratio_by_quadrature(|t| density(t) * t.sin().powi(power), bound.theta_bar())
}

/// Uniform-prior probability by quadrature of `sin^{2N-2}θ`.
pub fn uniform_prob_overlap_quadrature(bound: OverlapBound, n: u32) -> Result<f64> {
    check_dim(n)?;
    let power = 2 * n as i32 - 2;
    ratio_by_quadrature(|t| t.sin().powi(power), bound.theta_bar())
}

/// Uniform-prior probability in closed form. Substituting `u = sin²θ` turns
/// the ratio into the regularized incomplete beta `I_u(N - ½, ½)` at
/// `u = 1 - x̄²`.
pub fn uniform_prob_overlap_analytic(bound: OverlapBound, n: u32) -> Result<f64> {
    check_dim(n)?;
    let x = bound.x_bar;
    let u = ((1.0 - x) * (1.0 + x)).clamp(0.0, 1.0);
    Ok(beta_reg(n as f64 - 0.5, 0.5, u))
}

/// Uniform-prior probability; evaluates both routes and fails if they
/// disagree by more than [`UNIFORM_AGREEMENT_TOL`].
pub fn uniform_prob_overlap(bound: OverlapBound, n: u32) -> Result<f64> {
    let analytic = uniform_prob_overlap_analytic(bound, n)?;
    let quad = uniform_prob_overlap_quadrature(bound, n)?;
    if (analytic - quad).abs() > UNIFORM_AGREEMENT_TOL {
        return Err(Error::QuadratureFailure(format!(
            "incomplete beta {analytic:e} and quadrature {quad:e} disagree"
        )));
    }
    Ok(analytic)
}
