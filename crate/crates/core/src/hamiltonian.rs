//! Parameter validation and the effective two-level matrix in the
//! orthonormal `{|ψ_w⟩, |ψ_r⟩}` basis, where `|ψ_r⟩` is the normalized
//! component of the source state orthogonal to the target.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `|γ - β*|` when a caller supplies `γ` explicitly.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Unvalidated parameter tuple, as read from a command line or config file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawParams {
    pub alpha: f64,
    pub delta: f64,
    pub beta: Complex64,
    /// Only used to check Hermiticity; never stored.
    pub gamma: Option<Complex64>,
    pub energy: f64,
    pub planck: f64,
}

impl Default for RawParams {
    fn default() -> Self {
        Self {
            alpha: 0.0,
            delta: 0.0,
            beta: Complex64::new(0.0, 0.0),
            gamma: None,
            energy: 1.0,
            planck: 1.0,
        }
    }
}

/// Validated Hamiltonian parameters. `γ` is always `β*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianParams {
    alpha: f64,
    delta: f64,
    beta: Complex64,
    energy: f64,
    planck: f64,
}

impl HamiltonianParams {
    pub fn new(alpha: f64, delta: f64, beta: Complex64, energy: f64, planck: f64) -> Result<Self> {
        validate_params(&RawParams {
            alpha,
            delta,
            beta,
            gamma: None,
            energy,
            planck,
        })
    }

    /// Parameters in units where `E = h = 1`.
    pub fn unit(alpha: f64, delta: f64, beta: Complex64) -> Result<Self> {
        Self::new(alpha, delta, beta, 1.0, 1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma(&self) -> Complex64 {
        self.beta.conj()
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn planck(&self) -> f64 {
        self.planck
    }

    /// Reduced Planck constant `h / 2π`.
    pub fn hbar(&self) -> f64 {
        self.planck / (2.0 * PI)
    }
}

pub fn validate_params(raw: &RawParams) -> Result<HamiltonianParams> {
    let finite = |name, v: f64| {
        if v.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite(name))
        }
    };
    finite("alpha", raw.alpha)?;
    finite("delta", raw.delta)?;
    finite("beta", raw.beta.re)?;
    finite("beta", raw.beta.im)?;
    finite("energy", raw.energy)?;
    finite("planck", raw.planck)?;

    if let Some(gamma) = raw.gamma {
        finite("gamma", gamma.re)?;
        finite("gamma", gamma.im)?;
        let scale = raw.beta.norm().max(1.0);
        if (gamma - raw.beta.conj()).norm() > HERMITICITY_TOL * scale {
            return Err(Error::NonHermitian {
                beta_re: raw.beta.re,
                beta_im: raw.beta.im,
                gamma_re: gamma.re,
                gamma_im: gamma.im,
            });
        }
    }

    if raw.energy <= 0.0 {
        return Err(Error::NonPositiveScale {
            name: "energy",
            value: raw.energy,
        });
    }
    if raw.planck <= 0.0 {
        return Err(Error::NonPositiveScale {
            name: "planck",
            value: raw.planck,
        });
    }

    Ok(HamiltonianParams {
        alpha: raw.alpha,
        delta: raw.delta,
        beta: raw.beta,
        energy: raw.energy,
        planck: raw.planck,
    })
}

/// Real overlap `x = ⟨ψ_w|ψ_s⟩`, strictly inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Overlap(f64);

impl Overlap {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() && x > 0.0 && x < 1.0 {
            Ok(Self(x))
        } else {
            Err(Error::InvalidOverlap(x))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `√(1 - x²)`, the weight of `|ψ_r⟩` in the source state.
    pub fn complement(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

/// Hermitian 2×2 matrix in the `{|ψ_w⟩, |ψ_r⟩}` basis.
///
/// Only `h12` is stored off the diagonal; `h21` is its conjugate by
/// construction, so the Hermiticity invariant cannot be broken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixRep {
    h11: f64,
    h12: Complex64,
    h22: f64,
}

impl MatrixRep {
    pub fn hermitian(h11: f64, h12: Complex64, h22: f64) -> Self {
        Self { h11, h12, h22 }
    }

    pub fn h11(&self) -> f64 {
        self.h11
    }

    pub fn h12(&self) -> Complex64 {
        self.h12
    }

    pub fn h21(&self) -> Complex64 {
        self.h12.conj()
    }

    pub fn h22(&self) -> f64 {
        self.h22
    }

    /// Diagonal splitting `h11 - h22`.
    pub fn splitting(&self) -> f64 {
        self.h11 - self.h22
    }

    pub fn trace(&self) -> f64 {
        self.h11 + self.h22
    }

    pub fn determinant(&self) -> f64 {
        self.h11 * self.h22 - self.h12.norm_sqr()
    }

    /// Frobenius norm, an upper bound on the spectral norm.
    pub fn frobenius_norm(&self) -> f64 {
        (self.h11 * self.h11 + self.h22 * self.h22 + 2.0 * self.h12.norm_sqr()).sqrt()
    }

    /// Entries as a row-major complex array.
    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        [
            [Complex64::new(self.h11, 0.0), self.h12],
            [self.h21(), Complex64::new(self.h22, 0.0)],
        ]
    }
}

pub fn matrix_rep(p: &HamiltonianParams, x: Overlap) -> MatrixRep {
    let e = p.energy;
    let x = x.get();
    let s = ((1.0 - x) * (1.0 + x)).sqrt();
    let one_minus_x2 = (1.0 - x) * (1.0 + x);
    let h11 = e * (p.alpha + 2.0 * p.beta.re * x + p.delta * x * x);
    let h12 = (p.beta + p.delta * x) * (e * s);
    let h22 = e * p.delta * one_minus_x2;
    MatrixRep { h11, h12, h22 }
}

/// Amplitudes of a state in the `{|ψ_w⟩, |ψ_r⟩}` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVec {
    pub c_w: Complex64,
    pub c_r: Complex64,
}

impl StateVec {
    pub fn norm_sqr(&self) -> f64 {
        self.c_w.norm_sqr() + self.c_r.norm_sqr()
    }
}

pub fn source_state(x: Overlap) -> StateVec {
    StateVec {
        c_w: Complex64::new(x.get(), 0.0),
        c_r: Complex64::new(x.complement(), 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn farhi_gutmann_params_are_valid() {
        let p = HamiltonianParams::unit(1.0, 1.0, c(0.0, 0.0)).unwrap();
        assert_eq!(p.gamma(), c(0.0, 0.0));
        assert!((p.hbar() - 1.0 / (2.0 * PI)).abs() < 1e-16);
    }

    #[test]
    fn zero_hamiltonian_is_valid() {
        assert!(HamiltonianParams::unit(0.0, 0.0, c(0.0, 0.0)).is_ok());
    }

    #[test]
    fn gamma_must_be_conjugate_of_beta() {
        let raw = RawParams {
            beta: c(1.0, 1.0),
            gamma: Some(c(1.0, 1.0)),
            ..RawParams::default()
        };
        assert!(matches!(validate_params(&raw), Err(Error::NonHermitian { .. })));

        let ok = RawParams {
            gamma: Some(c(1.0, -1.0)),
            ..raw
        };
        assert_eq!(validate_params(&ok).unwrap().gamma(), c(1.0, -1.0));
    }

    #[test]
    fn rejects_bad_scales_and_non_finite() {
        let zero_e = RawParams {
            energy: 0.0,
            ..RawParams::default()
        };
        assert!(matches!(
            validate_params(&zero_e),
            Err(Error::NonPositiveScale { name: "energy", .. })
        ));
        let neg_h = RawParams {
            planck: -1.0,
            ..RawParams::default()
        };
        assert!(matches!(
            validate_params(&neg_h),
            Err(Error::NonPositiveScale { name: "planck", .. })
        ));
        let nan = RawParams {
            alpha: f64::NAN,
            ..RawParams::default()
        };
        assert_eq!(validate_params(&nan), Err(Error::NonFinite("alpha")));
        let inf = RawParams {
            beta: c(0.0, f64::INFINITY),
            ..RawParams::default()
        };
        assert_eq!(validate_params(&inf), Err(Error::NonFinite("beta")));
    }

    #[test]
    fn overlap_endpoints_rejected() {
        for x in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(Overlap::new(x).is_err(), "{x}");
        }
        assert!(Overlap::new(1e-9).is_ok());
    }

    #[test]
    fn matrix_for_farhi_gutmann_at_half() {
        let p = HamiltonianParams::unit(1.0, 1.0, c(0.0, 0.0)).unwrap();
        let m = matrix_rep(&p, Overlap::new(0.5).unwrap());
        assert!((m.h11() - 1.25).abs() < 1e-15);
        assert!((m.h22() - 0.75).abs() < 1e-15);
        assert!((m.h12() - c(0.75f64.sqrt() * 0.5, 0.0)).norm() < 1e-15);
        assert!((m.h12().re - 0.433_012_701_892_219_3).abs() < 1e-15);
        assert_eq!(m.h21(), m.h12());
    }

    #[test]
    fn zero_params_give_zero_matrix() {
        let p = HamiltonianParams::unit(0.0, 0.0, c(0.0, 0.0)).unwrap();
        let m = matrix_rep(&p, Overlap::new(0.3).unwrap());
        assert_eq!(m, MatrixRep::hermitian(0.0, c(0.0, 0.0), 0.0));
    }

    #[test]
    fn imaginary_beta_gives_conjugate_off_diagonals() {
        let p = HamiltonianParams::unit(0.0, 0.0, c(0.0, 1.0)).unwrap();
        let m = matrix_rep(&p, Overlap::new(0.5).unwrap());
        let s = 0.75f64.sqrt();
        assert!((m.h12() - c(0.0, s)).norm() < 1e-15);
        assert!((m.h21() - c(0.0, -s)).norm() < 1e-15);
        assert_eq!(m.h11(), 0.0);
    }

    #[test]
    fn source_state_components() {
        let psi = source_state(Overlap::new(0.5).unwrap());
        assert_eq!(psi.c_w, c(0.5, 0.0));
        assert!((psi.c_r.re - 0.75f64.sqrt()).abs() < 1e-16);
        assert_eq!(psi.c_r.im, 0.0);

        let near_one = source_state(Overlap::new(1.0 - 1e-12).unwrap());
        assert!((near_one.c_w.re - 1.0).abs() < 1e-11);
        assert!(near_one.c_r.re < 2e-6);
    }
}
