//! Reconstruction of an aircraft's deceleration-force profile during landing.
//!
//! A landing is recorded as six input channels sampled once per second
//! (aircraft mass, initial kinetic energy, speed, reverse-thrust force,
//! braking indicator and drag force) together with the deceleration-force
//! output the library learns to reconstruct. The core model is a
//! Gaussian-process regressor over whole input trajectories with a
//! per-channel squared-exponential kernel; its hyperparameters are fitted
//! per time block by maximizing the summed log marginal likelihood with
//! gradient ascent in log-parameter space.
//!
//! Around the model sit:
//!
//! * [`dataset`] — the landing data model, a canonical CSV interchange
//!   format, a deterministic physics-based synthetic generator and the
//!   disjoint-fold splitter used for cross-validation;
//! * [`baselines`] — per-timestep linear regression and a random forest of
//!   CART trees behind the same [`baselines::Regressor`] interface as the GP;
//! * [`evaluate`] — the cross-validation driver, profile error metrics
//!   (global, per-block, histogram), anomaly scoring against a fitted model
//!   and plot-ready report emission.
//!
//! Everything is deterministic given a seed: module seeds are derived from
//! one root seed by labeled hashing (see [`seeding`]), and parallel sections
//! produce schedule-independent results.

pub mod baselines;
pub mod config;
pub mod dataset;
pub mod error;
pub mod evaluate;
pub mod gp;
pub mod hyperfit;
pub mod kernel;
pub mod linalg;
pub mod seeding;

pub use dataset::{FlightDatabase, FoldPlan, GeneratorConfig, Landing};
pub use error::{DataError, ModelError, NumericError};
pub use gp::GpModel;
pub use hyperfit::{BlockScheme, OptimizerConfig};
pub use kernel::{Hyperparameters, InputVector, TimeWeight, WeightMode};
