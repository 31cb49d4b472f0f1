//! Multiplicatively weighted Voronoi assignment over the grid, cell
//! moments, and the sensing-distortion functional.

use serde::{Deserialize, Serialize};

use crate::density::IntegrationGrid;
use crate::error::Error;
use crate::geometry::{ConvexPolygon, Point};
use crate::scalar::Real;

/// A mobile sensor. Ids are 1-based; id 1 is the access point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sensor<T> {
    pub id: usize,
    /// Position before any relocation.
    pub initial: Point<T>,
    /// Current position.
    pub position: Point<T>,
    /// Sensing weight applied to squared distance in the distortion.
    pub sensing_weight: T,
    /// Energy spent per unit of travel distance.
    pub moving_cost: T,
    /// Battery energy available at the initial time.
    pub battery: T,
    pub sensing_radius: T,
}

/// Ordered sensor fleet plus the region it monitors and the one-hop
/// communication range.
#[derive(Clone, Debug)]
pub struct Deployment<T> {
    pub sensors: Vec<Sensor<T>>,
    pub region: ConvexPolygon<T>,
    pub comm_range: T,
}

impl<T: Real> Deployment<T> {
    /// Checks id ordering, parameter positivity, and region membership of
    /// all positions.
    // The negated comparisons reject NaN parameters.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), Error> {
        if self.sensors.is_empty() {
            return Err(Error::Scenario("deployment has no sensors".into()));
        }
        if !(self.comm_range > T::zero()) {
            return Err(Error::Scenario("communication range must be positive".into()));
        }
        for (i, s) in self.sensors.iter().enumerate() {
            if s.id != i + 1 {
                return Err(Error::Scenario(format!(
                    "sensor ids must be 1..=N in order, found id {} at slot {}",
                    s.id,
                    i + 1
                )));
            }
            if !(s.sensing_weight > T::zero())
                || !(s.moving_cost > T::zero())
                || !(s.sensing_radius > T::zero())
                || s.battery < T::zero()
            {
                return Err(Error::Scenario(format!(
                    "sensor {} has a non-positive parameter",
                    s.id
                )));
            }
            if !self.region.contains(s.initial) || !self.region.contains(s.position) {
                return Err(Error::Scenario(format!(
                    "sensor {} lies outside the region",
                    s.id
                )));
            }
        }
        Ok(())
    }

    pub fn positions(&self) -> Vec<Point<T>> {
        self.sensors.iter().map(|s| s.position).collect()
    }
}

/// Per-cell owner (index into the sensor slice) under the weighted
/// nearest rule. `None` when no sensor was active.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    owner: Vec<Option<usize>>,
}

impl Assignment {
    pub fn owner(&self, cell: usize) -> Option<usize> {
        self.owner[cell]
    }

    pub fn owners(&self) -> &[Option<usize>] {
        &self.owner
    }

    pub fn unowned_cells(&self) -> usize {
        self.owner.iter().filter(|o| o.is_none()).count()
    }
}

/// Assigns every grid cell to the active sensor minimizing
/// `weight * squared distance`; ties go to the smallest id.
pub fn assign_mwvd<T: Real>(
    sensors: &[Sensor<T>],
    active: &[bool],
    grid: &IntegrationGrid<T>,
) -> Assignment {
    debug_assert_eq!(sensors.len(), active.len());
    let owner = grid
        .cells()
        .iter()
        .map(|&cell| {
            let mut best: Option<(T, usize)> = None;
            for (idx, s) in sensors.iter().enumerate() {
                if !active[idx] {
                    continue;
                }
                let cost = s.sensing_weight * cell.dist_sq(s.position);
                if best.is_none_or(|(b, _)| cost < b) {
                    best = Some((cost, idx));
                }
            }
            best.map(|(_, idx)| idx)
        })
        .collect();
    Assignment { owner }
}

/// Discretized mass and centroid of every sensor's cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellMoments<T> {
    /// Density mass of each cell (integral of f over the owned cells).
    pub mass: Vec<T>,
    /// Density-weighted centroid; a sensor with zero mass keeps its own
    /// position as the degenerate centroid.
    pub centroid: Vec<Point<T>>,
}

/// Accumulates the mass and first moment of every owned cell in grid
/// order, then normalizes.
pub fn cell_moments<T: Real>(
    sensors: &[Sensor<T>],
    assignment: &Assignment,
    grid: &IntegrationGrid<T>,
    density: &[T],
) -> CellMoments<T> {
    debug_assert_eq!(grid.len(), density.len());
    let n = sensors.len();
    let mut mass = vec![T::zero(); n];
    let mut first = vec![Point::<T>::zero(); n];
    for (cell_idx, &cell) in grid.cells().iter().enumerate() {
        if let Some(owner) = assignment.owner(cell_idx) {
            let f = density[cell_idx];
            mass[owner] += f;
            first[owner].x += cell.x * f;
            first[owner].y += cell.y * f;
        }
    }
    let w = grid.cell_weight();
    let centroid = (0..n)
        .map(|i| {
            if mass[i] > T::zero() {
                first[i] / mass[i]
            } else {
                sensors[i].position
            }
        })
        .collect();
    for m in &mut mass {
        *m = *m * w;
    }
    CellMoments { mass, centroid }
}

/// Weighted second moment of each active sensor's cell about the sensor,
/// per sensor. Inactive sensors contribute zero.
pub fn distortion_per_sensor<T: Real>(
    sensors: &[Sensor<T>],
    assignment: &Assignment,
    grid: &IntegrationGrid<T>,
    density: &[T],
) -> Vec<T> {
    debug_assert_eq!(grid.len(), density.len());
    let mut acc = vec![T::zero(); sensors.len()];
    for (cell_idx, &cell) in grid.cells().iter().enumerate() {
        if let Some(owner) = assignment.owner(cell_idx) {
            let s = &sensors[owner];
            acc[owner] += s.sensing_weight * cell.dist_sq(s.position) * density[cell_idx];
        }
    }
    let w = grid.cell_weight();
    for a in &mut acc {
        *a = *a * w;
    }
    acc
}

/// Total sensing distortion for the given assignment.
pub fn distortion<T: Real>(
    sensors: &[Sensor<T>],
    assignment: &Assignment,
    grid: &IntegrationGrid<T>,
    density: &[T],
) -> T {
    let mut total = T::zero();
    for (cell_idx, &cell) in grid.cells().iter().enumerate() {
        if let Some(owner) = assignment.owner(cell_idx) {
            let s = &sensors[owner];
            total += s.sensing_weight * cell.dist_sq(s.position) * density[cell_idx];
        }
    }
    total * grid.cell_weight()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use crate::geometry::polygon::tests::unit_square;

    fn sensor(id: usize, x: f64, y: f64, eta: f64) -> Sensor<f64> {
        Sensor {
            id,
            initial: Point::new(x, y),
            position: Point::new(x, y),
            sensing_weight: eta,
            moving_cost: 1.0,
            battery: 2.0,
            sensing_radius: 0.2,
        }
    }

    #[test]
    fn equal_weights_reduce_to_plain_voronoi() {
        let sq = unit_square();
        let grid = IntegrationGrid::new(&sq, 16).unwrap();
        let sensors = vec![sensor(1, 0.0, 0.0, 1.0), sensor(2, 1.0, 0.0, 1.0)];
        let a = assign_mwvd(&sensors, &[true, true], &grid);
        for (i, &cell) in grid.cells().iter().enumerate() {
            let expect = if cell.dist_sq(sensors[0].position) <= cell.dist_sq(sensors[1].position)
            {
                0
            } else {
                1
            };
            assert_eq!(a.owner(i), Some(expect));
        }
    }

    #[test]
    fn weighted_bisector_on_segment() {
        // weight 1 at x=0 versus weight 4 at x=1: boundary solves
        // x^2 = 4 (1-x)^2, i.e. x = 2/3.
        let sq = unit_square();
        let grid = IntegrationGrid::with_resolution_unchecked(&sq, 1);
        let sensors = vec![sensor(1, 0.0, 0.0, 1.0), sensor(2, 1.0, 0.0, 4.0)];
        let cost = |s: &Sensor<f64>, q: Point<f64>| s.sensing_weight * q.dist_sq(s.position);
        let probe = |x: f64| {
            let q = Point::new(x, 0.0);
            if cost(&sensors[0], q) <= cost(&sensors[1], q) {
                0
            } else {
                1
            }
        };
        assert_eq!(probe(0.6), 0);
        assert_eq!(probe(0.7), 1);
        // And through the full assignment path:
        let _ = assign_mwvd(&sensors, &[true, true], &grid);
    }

    #[test]
    fn equidistant_tie_goes_to_smallest_id() {
        let sq = unit_square();
        let grid = IntegrationGrid::with_resolution_unchecked(&sq, 1);
        // Both sensors see the single cell center (0.5, 0.5) at identical
        // weighted cost.
        let sensors = vec![sensor(1, 0.0, 0.5, 1.0), sensor(2, 1.0, 0.5, 1.0)];
        let a = assign_mwvd(&sensors, &[true, true], &grid);
        assert_eq!(a.owner(0), Some(0));
    }

    #[test]
    fn empty_active_set_leaves_cells_unowned() {
        let sq = unit_square();
        let grid = IntegrationGrid::with_resolution_unchecked(&sq, 2);
        let sensors = vec![sensor(1, 0.5, 0.5, 1.0)];
        let a = assign_mwvd(&sensors, &[false], &grid);
        assert_eq!(a.unowned_cells(), grid.len());
    }

    #[test]
    fn single_sensor_moments_on_unit_square() {
        let sq = unit_square();
        let grid = IntegrationGrid::with_resolution_unchecked(&sq, 2);
        let sensors = vec![sensor(1, 0.1, 0.1, 1.0)];
        let a = assign_mwvd(&sensors, &[true], &grid);
        let m = cell_moments(&sensors, &a, &grid, &vec![1.0; grid.len()]);
        assert_relative_eq!(m.mass[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(m.centroid[0].x, 0.5, epsilon = 1e-12);
        assert_relative_eq!(m.centroid[0].y, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn linear_density_centroid_approaches_two_thirds() {
        let sq = unit_square();
        let grid = IntegrationGrid::new(&sq, 256).unwrap();
        let sensors = vec![sensor(1, 0.5, 0.5, 1.0)];
        let a = assign_mwvd(&sensors, &[true], &grid);
        let density: Vec<f64> = grid.cells().iter().map(|c| c.x).collect();
        let m = cell_moments(&sensors, &a, &grid, &density);
        // integral x*x / integral x = (1/3)/(1/2) = 2/3
        assert_relative_eq!(m.centroid[0].x, 2.0 / 3.0, epsilon = 2.0 / 256.0);
    }

    #[test]
    fn zero_mass_centroid_falls_back_to_position() {
        let sq = unit_square();
        let grid = IntegrationGrid::with_resolution_unchecked(&sq, 2);
        let sensors = vec![sensor(1, 0.3, 0.4, 1.0)];
        let a = assign_mwvd(&sensors, &[true], &grid);
        let m = cell_moments(&sensors, &a, &grid, &vec![0.0; grid.len()]);
        assert_eq!(m.mass[0], 0.0);
        assert_eq!(m.centroid[0], Point::new(0.3, 0.4));
    }

    #[test]
    fn distortion_scales_linearly_in_weight() {
        let sq = unit_square();
        let grid = IntegrationGrid::new(&sq, 64).unwrap();
        let density = vec![1.0; grid.len()];
        let base = vec![sensor(1, 0.5, 0.5, 1.0)];
        let doubled = vec![sensor(1, 0.5, 0.5, 2.0)];
        let a = assign_mwvd(&base, &[true], &grid);
        let d1 = distortion(&base, &a, &grid, &density);
        let d2 = distortion(&doubled, &a, &grid, &density);
        assert_relative_eq!(d2, 2.0 * d1, epsilon = 1e-12);
    }

    #[test]
    fn repartitioning_never_increases_distortion() {
        let sq = unit_square();
        let grid = IntegrationGrid::new(&sq, 64).unwrap();
        let density = vec![1.0; grid.len()];
        let mut sensors = vec![
            sensor(1, 0.2, 0.2, 1.0),
            sensor(2, 0.8, 0.3, 2.0),
            sensor(3, 0.5, 0.8, 1.0),
        ];
        let active = [true, true, true];
        let before = assign_mwvd(&sensors, &active, &grid);
        // Perturb a position, then compare the stale and fresh partitions.
        sensors[1].position = Point::new(0.6, 0.55);
        let stale = distortion(&sensors, &before, &grid, &density);
        let fresh_assignment = assign_mwvd(&sensors, &active, &grid);
        let fresh = distortion(&sensors, &fresh_assignment, &grid, &density);
        assert!(fresh <= stale + 1e-12);
    }

    #[test]
    fn parallel_axis_identity_on_fixed_grid() {
        // For a fixed assignment, moving the sensor from its centroid by d
        // raises the distortion by exactly weight * mass * d^2.
        let sq = unit_square();
        let grid = IntegrationGrid::new(&sq, 64).unwrap();
        let density = vec![1.0; grid.len()];
        let mut sensors = vec![sensor(1, 0.5, 0.5, 1.7)];
        let a = assign_mwvd(&sensors, &[true], &grid);
        let m = cell_moments(&sensors, &a, &grid, &density);
        sensors[0].position = m.centroid[0];
        let d_at_centroid = distortion(&sensors, &a, &grid, &density);
        let shifted = Point::new(m.centroid[0].x + 0.13, m.centroid[0].y - 0.07);
        sensors[0].position = shifted;
        let d_shifted = distortion(&sensors, &a, &grid, &density);
        let expect = 1.7 * m.mass[0] * shifted.dist_sq(m.centroid[0]);
        assert!((d_shifted - d_at_centroid - expect).abs() < 1e-9);
    }
}
