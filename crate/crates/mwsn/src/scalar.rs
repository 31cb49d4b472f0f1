//! Scalar abstraction: the whole geometric/numeric core is generic over a
//! floating-point type. Concrete aliases for the `f64` lane live at the
//! crate root.

use core::fmt::Debug;
use core::iter::Sum;
use core::ops::AddAssign;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used throughout the core (`f32` or `f64`).
pub trait Real: Float + FromPrimitive + AddAssign + Sum + Debug + 'static {
    /// Lift an `f64` constant into this scalar type.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Slack for internal sanity checks on accumulated quantities of the
    /// given magnitude: the fixed tolerance plus a term that scales with
    /// the scalar's precision, so the checks stay meaningful on `f64`
    /// without firing on `f32` accumulation roundoff.
    #[inline]
    fn accum_slack(magnitude: Self, fixed: f64) -> Self {
        Self::c(fixed) + magnitude.abs() * Self::epsilon() * Self::c(1024.0)
    }
}

impl<T> Real for T where T: Float + FromPrimitive + AddAssign + Sum + Debug + 'static {}

/// Numeric tolerances, in scene units unless stated otherwise.
pub mod tol {
    /// Half-plane and convexity tests on polygons.
    pub const POLYGON: f64 = 1e-12;
    /// Coincidence test for circle pairs (centers and radii).
    pub const COINCIDENT: f64 = 1e-12;
    /// Tangency window for circle-circle intersection.
    pub const TANGENCY: f64 = 1e-9;
    /// Disk-region membership filter.
    pub const MEMBERSHIP: f64 = 1e-9;
    /// Radius shrink applied to constraint disks inside the optimizers, so
    /// that any point passing the membership filter still satisfies the
    /// unshrunk constraint with margin. Must exceed `MEMBERSHIP`.
    pub const SAFETY_MARGIN: f64 = 2e-9;
    /// Slack allowed on energy-budget assertions.
    pub const ENERGY_SLACK: f64 = 1e-9;
    /// Slack allowed when asserting the per-iteration distortion decrease.
    pub const MONOTONE_SLACK: f64 = 1e-9;
    /// Default per-sweep displacement threshold for convergence.
    pub const CONVERGENCE: f64 = 1e-5;
}
