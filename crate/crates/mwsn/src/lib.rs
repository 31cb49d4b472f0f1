//! Movement-constrained sensor deployment for mobile wireless sensor
//! networks.
//!
//! The fleet monitors a convex region under a density-weighted quadratic
//! sensing cost (a weighted Voronoi distortion). Relocation is limited by
//! per-sensor energy budgets derived from a required network lifetime, and
//! sensors can only relay data over hops no longer than the communication
//! range. The optimizers move sensors toward their cell centroids while
//! never breaking the backbone to the access point and never overspending
//! a budget:
//!
//! - `ccml`: centralized sequential updates inside per-sensor feasible
//!   regions built from one-hop neighbors,
//! - `bccml`: the backward-stepwise variant that deactivates bottleneck
//!   sensors in heterogeneous fleets,
//! - `dcml`: simultaneous updates inside spanning-tree midpoint regions,
//!   which provably preserve connectivity,
//! - `lloyd_alpha`: the budget-truncated scaled-step baseline, which
//!   ignores connectivity while moving.
//!
//! The numeric core is generic over the scalar type through
//! [`scalar::Real`]; the aliases below fix the `f64` lane used by the
//! experiment harness and CLI, plus `f32` variants of the geometric
//! primitives.

pub mod algorithms;
pub mod connectivity;
pub mod coverage;
pub mod density;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod partition;
pub mod scalar;

pub use error::Error;
pub use scalar::Real;

pub type Point64 = geometry::Point<f64>;
pub type Disk64 = geometry::Disk<f64>;
pub type ConvexPolygon64 = geometry::ConvexPolygon<f64>;
pub type DiskRegion64 = geometry::DiskRegion<f64>;
pub type DensityField64 = density::DensityField<f64>;
pub type IntegrationGrid64 = density::IntegrationGrid<f64>;
pub type Sensor64 = partition::Sensor<f64>;
pub type Deployment64 = partition::Deployment<f64>;
pub type TargetSet64 = coverage::TargetSet<f64>;
pub type IterationTrace64 = algorithms::IterationTrace<f64>;

pub type Point32 = geometry::Point<f32>;
pub type Disk32 = geometry::Disk<f32>;
pub type ConvexPolygon32 = geometry::ConvexPolygon<f32>;
pub type DiskRegion32 = geometry::DiskRegion<f32>;
