//! Closed-form eigen-decomposition of the 2×2 Hermitian search matrix.
//!
//! Eigenvectors are kept unnormalized as `(A, 1)` for `λ-` and `(B, 1)` for
//! `λ+`, which is the form the amplitude derivation in [`crate::dynamics`]
//! works with.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hamiltonian::MatrixRep;

/// Below this magnitude `h21` counts as zero.
pub const MIN_OFF_DIAGONAL: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenCoeffs {
    /// First component of the `λ-` eigenvector `(A, 1)`.
    pub a: Complex64,
    /// First component of the `λ+` eigenvector `(B, 1)`.
    pub b: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    /// Half the eigenvalue splitting; `a / ħ` is the oscillation frequency.
    pub gap: f64,
    /// `None` when the matrix is already diagonal.
    pub coeffs: Option<EigenCoeffs>,
}

impl Spectrum {
    pub fn mean_energy(&self) -> f64 {
        0.5 * (self.lambda_minus + self.lambda_plus)
    }
}

/// `λ± = ½[(h11 + h22) ± √((h11 - h22)² + 4|h12|²)]`.
pub fn eigenvalues(m: &MatrixRep) -> (f64, f64) {
    let mean = 0.5 * m.trace();
    let a = gap_parameter(m);
    (mean - a, mean + a)
}

/// `a = ½√((h11 - h22)² + 4 h12 h21)`. The radicand is a sum of squares, so
/// `hypot` evaluates it without overflow or cancellation.
pub fn gap_parameter(m: &MatrixRep) -> f64 {
    0.5 * m.splitting().hypot(2.0 * m.h12().norm())
}

/// `A = [(h11 - h22) - 2a] / (2 h21)`, `B = [(h11 - h22) + 2a] / (2 h21)`.
///
/// Whichever of the two would suffer cancellation is recovered from the
/// product identity `A·B = -h12 / h21`.
pub fn eigen_coeffs(m: &MatrixRep) -> Result<(Complex64, Complex64)> {
    let h21 = m.h21();
    if h21.norm() <= MIN_OFF_DIAGONAL {
        return Err(Error::DegenerateOffDiagonal);
    }
    let d = m.splitting();
    let two_a = 2.0 * gap_parameter(m);
    let product = -m.h12() / h21;
    if d >= 0.0 {
        let b = Complex64::new(d + two_a, 0.0) / (2.0 * h21);
        Ok((product / b, b))
    } else {
        let a = Complex64::new(d - two_a, 0.0) / (2.0 * h21);
        Ok((a, product / a))
    }
}

pub fn spectrum(m: &MatrixRep) -> Spectrum {
    let (lambda_minus, lambda_plus) = eigenvalues(m);
    let coeffs = eigen_coeffs(m).ok().map(|(a, b)| EigenCoeffs { a, b });
    Spectrum {
        lambda_minus,
        lambda_plus,
        gap: gap_parameter(m),
        coeffs,
    }
}

/// Largest entry of `|M·diag(λ-, λ+)·M⁻¹ - m|`, with `M = [[A, B], [1, 1]]`
/// and `M⁻¹ = [[1, -B], [-1, A]] / (A - B)`.
pub fn reconstruction_residual(m: &MatrixRep) -> Result<f64> {
    let (a, b) = eigen_coeffs(m)?;
    let (lm, lp) = eigenvalues(m);
    let one = Complex64::new(1.0, 0.0);
    let det = a - b;
    let vecs = [[a, b], [one, one]];
    let inv = [[one / det, -b / det], [-one / det, a / det]];
    let diag = [lm, lp];

    let target = m.entries();
    let mut worst = 0.0f64;
    for (i, row) in target.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let got: Complex64 = (0..2).map(|k| vecs[i][k] * diag[k] * inv[k][j]).sum();
            worst = worst.max((got - want).norm());
        }
    }
    Ok(worst)
}
