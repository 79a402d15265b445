//! Closed-form analysis of a generalized, time-independent analog quantum
//! search Hamiltonian
//!
//! ```text
//! H = E [ α|w⟩⟨w| + β|w⟩⟨s| + β*|s⟩⟨w| + δ|s⟩⟨s| ]
//! ```
//!
//! restricted to the two-dimensional span of the target `|w⟩` and the source
//! `|s⟩`. The crate builds the effective 2×2 matrix, diagonalizes it in closed
//! form, and evaluates the transition probability `P(t)`, its peak `P_max`
//! and the time `t*` at which the peak is reached. On top of that it offers
//! the special-case Hamiltonians, threshold crossing times, the digital and
//! analog Grover baselines, and the target-prior overlap probabilities.
//!
//! Every closed form has an independent numerical counterpart
//! ([`dynamics::propagate_numeric`], [`quadrature`]) used by the test suite.

pub mod baselines;
pub mod cases;
pub mod dynamics;
pub mod error;
pub mod hamiltonian;
pub mod overlap_prior;
pub mod quadrature;
pub mod spectral;
pub mod threshold;

pub use num_complex::Complex64;

pub use cases::CaseLabel;
pub use dynamics::{PeakTime, ProbabilityCurve, SearchOutcome, TildeCoeffs};
pub use error::{Error, Result};
pub use hamiltonian::{HamiltonianParams, MatrixRep, Overlap, RawParams, StateVec};
pub use overlap_prior::{OverlapBound, PriorSpec};
pub use spectral::Spectrum;
pub use threshold::{ComparisonReport, ThresholdResult, Winner};
