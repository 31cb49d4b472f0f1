//! Seeded generation of connected initial deployments.

use crate::connectivity::{backbone, backbone_size};
use crate::error::Error;
use crate::geometry::{ConvexPolygon, Point};

use super::rng::SeededRng;

const MAX_ATTEMPTS_PER_NODE: usize = 1_000_000;

/// Samples node positions uniformly over the region, keeping a node only
/// if it lands within communication range of one already kept. The result
/// is fully connected by construction and deterministic per seed.
pub fn generate_initial_deployment(
    region: &ConvexPolygon<f64>,
    n: usize,
    comm_range: f64,
    seed: u64,
) -> Result<Vec<Point<f64>>, Error> {
    if n == 0 {
        return Err(Error::Scenario("need at least one sensor".into()));
    }
    let mut rng = SeededRng::new(seed);
    let (lo, hi) = region.bbox();
    let mut kept: Vec<Point<f64>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut attempts = 0usize;
        loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS_PER_NODE {
                return Err(Error::Scenario(format!(
                    "gave up placing a node after {MAX_ATTEMPTS_PER_NODE} attempts; \
                     communication range {comm_range} is too small for this region"
                )));
            }
            let q = Point::new(rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y));
            if !region.contains(q) {
                continue;
            }
            if !kept.is_empty() && !kept.iter().any(|p| p.dist(q) <= comm_range) {
                continue;
            }
            kept.push(q);
            break;
        }
    }
    debug_assert_eq!(backbone_size(&backbone(&kept, comm_range)), n);
    Ok(kept)
}
