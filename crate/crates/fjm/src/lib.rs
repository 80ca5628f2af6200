//! Joint modeling of multivariate sparse longitudinal outcomes and
//! time-to-event data.
//!
//! Each outcome's latent trajectory is decomposed into a mean curve plus a
//! scaled shared process and a scaled outcome-specific process, both
//! expanded in truncated Karhunen–Loève form over an orthonormalized
//! B-spline basis. The latent scores feed a proportional-hazards model with
//! a nonparametric step baseline. Two estimators are provided:
//!
//! * [`twostep`] — marginal estimation (penalized-spline means, smoothed
//!   covariance surfaces, a least-squares identifiability solve, conditional
//!   score prediction) followed by a plug-in Cox regression; and
//! * [`mcem`] — full joint maximum likelihood by Monte Carlo EM with
//!   importance-weighted E-steps and closed-form M-step updates.
//!
//! [`selection`] adds likelihood/AIC/BIC rank selection, and [`simulate`]
//! generates the two calibrated benchmark scenarios used by the test suite.
//!
//! The numerical core is generic over the scalar type through
//! [`scalar::Real`]; `f64` instantiations are aliased at the crate root.

pub mod covariance;
pub mod data;
pub mod design;
pub mod error;
pub mod linalg;
pub mod mcem;
pub mod posterior;
pub mod rng;
pub mod scalar;
pub mod scores;
pub mod selection;
pub mod simulate;
pub mod splines;
pub mod survival;
pub mod twostep;

pub use error::{Error, Result};
pub use scalar::Real;

// `f64` instantiations of the core types, for ordinary use.
// ALIASES_START
// STUB pub type Basis = splines::OrthonormalBasis<f64>;
// STUB pub type BasisConfig = splines::BasisConfig<f64>;
// STUB pub type CovSurface = covariance::CovSurface<f64>;
// STUB pub type EigenSystem = covariance::EigenSystem<f64>;
// STUB pub type SubjectView = data::SubjectView<f64>;
// STUB pub type SubjectDesign = design::SubjectDesign<f64>;
// STUB pub type ModelParams = mcem::ModelParams<f64>;
// STUB pub type EmConfig = mcem::EmConfig<f64>;
// STUB pub type FitReport = mcem::FitReport;
// STUB pub type PosteriorMoments = posterior::PosteriorMoments<f64>;
// STUB pub type BaselineHazard = survival::BaselineHazard<f64>;
// STUB pub type CoxCoefficients = survival::CoxCoefficients<f64>;
// STUB pub type TwoStepFit = twostep::TwoStepFit<f64>;
// STUB pub type SimSpec = simulate::SimSpec<f64>;
