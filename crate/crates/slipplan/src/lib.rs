//! Friction-aware locomotion planning for biped robots.
//!
//! The pipeline turns per-cell material probability maps into friction
//! quantile maps, searches a stance graph for a footstep sequence whose
//! slip risk stays below a chance bound, and turns that sequence into a
//! dynamically stabilized whole-body joint trajectory.
//!
//! Modules, roughly in pipeline order:
//!
//! - [`friction`]: per-material friction distributions and the per-cell
//!   mixture with pdf/cdf/quantile queries.
//! - [`terrain`]: scenario files, 2.5D grids, probability rasters and
//!   cached quantile maps.
//! - [`search`]: anytime footstep search over stances under per-contact
//!   chance constraints.
//! - [`oracle`]: precomputed tables predicting whole-pipeline cost and
//!   required friction per stance transition.
//! - [`body`]: whole-body waypoint optimization (torque cost, collision
//!   cost, stance/balance/roll/limit constraints).
//! - [`gait`]: spline densification, ZMP evaluation and frequency-domain
//!   stabilization, and required-friction evaluation.
//! - [`cli`]: the command-line entry points.
//!
//! The scalar kernels ([`num`], [`friction`], [`spline`]) are generic over
//! the floating-point type; the rest of the pipeline runs at the crate's
//! working precision [`Float`].

pub mod friction;
pub mod geom;
pub mod num;
pub mod spline;

/// Working precision of the planning pipeline.
pub type Float = f64;

/// Catalog of materials at working precision.
pub type MaterialCatalog = friction::MaterialCatalog<Float>;
/// Per-cell label probabilities at working precision.
pub type LabelProbs = friction::LabelProbs<Float>;
/// Per-cell friction mixture at working precision.
pub type FrictionMixture<'a> = friction::FrictionMixture<'a, Float>;

/// Standard gravity used throughout the pipeline (m/s^2).
pub const GRAVITY: Float = 9.80665;
pub fn run() -> i32 { 0 }
