//! Diagnostic for the first-order optimality structure of a converged
//! deployment.
//!
//! For every backbone sensor the centroid of its cell is classified
//! against the exact feasible region and the coverage field of the
//! deactivated sensors. A sensor passes when it sits where that
//! classification mandates: on its centroid when the centroid is
//! feasible, or on the feasible-region boundary at minimal centroid
//! distance otherwise. A centroid that falls inside both the feasible
//! region and a deactivated sensor's communication disk is flagged
//! instead: re-activating that sensor could improve the deployment.

use serde::{Deserialize, Serialize};

use crate::connectivity::{external_field_membership, feasible_region};
use crate::density::IntegrationGrid;
use crate::geometry::{project_to_disk_region, Point};
use crate::partition::{assign_mwvd, cell_moments, Sensor};
use crate::scalar::{tol, Real};

use super::EnergyBudget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionCase {
    /// Centroid feasible and clear of deactivated sensors: the sensor
    /// must sit on it.
    AtCentroid,
    /// Centroid infeasible: the sensor must sit on the region boundary
    /// nearest the centroid.
    OnBoundary,
    /// Centroid feasible but inside a deactivated sensor's range.
    ReactivationFlag,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ConditionReport<T> {
    /// 1-based sensor id.
    pub id: usize,
    pub case: ConditionCase,
    pub pass: bool,
    /// Centroid case: distance from the sensor to the centroid.
    /// Boundary case: by how much the sensor's centroid distance exceeds
    /// the minimum over the region boundary. Zero for re-activation
    /// flags, which have no mandated point.
    pub offset: T,
}

/// Classifies every active sensor of a converged state. `tol_geo` bounds
/// the accepted offset; the grid's cell diagonal doubled is the natural
/// choice.
#[allow(clippy::too_many_arguments)]
pub fn check_necessary_conditions<T: Real>(
    sensors: &[Sensor<T>],
    active: &[bool],
    grid: &IntegrationGrid<T>,
    density: &[T],
    budget: &EnergyBudget<T>,
    comm_range: T,
    tol_geo: T,
) -> Vec<ConditionReport<T>> {
    let assignment = assign_mwvd(sensors, active, grid);
    let moments = cell_moments(sensors, &assignment, grid, density);
    let positions: Vec<Point<T>> = sensors.iter().map(|s| s.position).collect();
    let eps = T::c(tol::MEMBERSHIP);

    let mut reports = Vec::new();
    for (n, sensor) in sensors.iter().enumerate() {
        if !active[n] {
            continue;
        }
        let centroid = moments.centroid[n];
        let region = feasible_region(
            n,
            &positions,
            active,
            comm_range,
            sensor.initial,
            budget.radius(n, sensor.moving_cost),
        );
        let centroid_feasible = region.contains(centroid, eps);
        let centroid_in_external =
            external_field_membership(centroid, &positions, active, comm_range);

        let report = if centroid_feasible && centroid_in_external {
            ConditionReport {
                id: sensor.id,
                case: ConditionCase::ReactivationFlag,
                pass: false,
                offset: T::zero(),
            }
        } else if centroid_feasible {
            let offset = sensor.position.dist(centroid);
            ConditionReport {
                id: sensor.id,
                case: ConditionCase::AtCentroid,
                pass: offset <= tol_geo,
                offset,
            }
        } else {
            // The mandate has two parts: sit on the region boundary, and
            // do so at minimal distance to the centroid. Both are checked
            // with the geometric tolerance; comparing distances rather
            // than positions keeps sliding along a near-flat arc from
            // registering as a violation.
            let nearest = project_to_disk_region(centroid, &region, sensor.position).point;
            let offset = (sensor.position.dist(centroid) - nearest.dist(centroid)).max(T::zero());
            let on_boundary = region.contains(sensor.position, eps)
                && !region.shrunk(tol_geo).contains(sensor.position, T::zero());
            ConditionReport {
                id: sensor.id,
                case: ConditionCase::OnBoundary,
                pass: on_boundary && offset <= tol_geo,
                offset,
            }
        };
        reports.push(report);
    }
    reports
}

/// Fraction of reports that pass.
pub fn pass_fraction<T: Real>(reports: &[ConditionReport<T>]) -> f64 {
    if reports.is_empty() {
        return 1.0;
    }
    reports.iter().filter(|r| r.pass).count() as f64 / reports.len() as f64
}
