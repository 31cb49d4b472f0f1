//! Deployment optimizers and their shared bookkeeping: energy budgets,
//! ledgers, iteration traces, and per-iteration metric records.

pub mod bccml;
pub mod ccml;
pub mod checker;
pub mod dcml;
pub mod lloyd;

use serde::{Deserialize, Serialize};

use crate::connectivity::{backbone_size, backbone_within};
use crate::coverage::{area_coverage, target_coverage, TargetSet};
use crate::density::IntegrationGrid;
use crate::error::Error;
use crate::geometry::Point;
use crate::partition::{assign_mwvd, cell_moments, distortion, Assignment, CellMoments, Deployment, Sensor};
use crate::scalar::Real;

pub use bccml::{bottleneck_candidates, run_bccml, BccmlOptions, BccmlRule};
pub use ccml::{run_ccml, CcmlOptions};
pub use checker::{check_necessary_conditions, pass_fraction, ConditionCase, ConditionReport};
pub use dcml::{run_dcml, DcmlOptions, StepCapRule};
pub use lloyd::{run_lloyd_alpha, LloydOptions};

/// How relocation energy is charged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyMode {
    /// Straight-line cost from the initial to the current position.
    PointToPoint,
    /// Sum of per-iteration step lengths.
    PathSum,
}

/// Energy spent moving from `a` to `b` at per-distance cost `moving_cost`.
#[inline]
pub fn movement_energy<T: Real>(moving_cost: T, a: Point<T>, b: Point<T>) -> T {
    moving_cost * a.dist(b)
}

/// Per-sensor relocation energy allowance derived from the required
/// post-relocation lifetime: battery minus `alpha_power * t_target`.
#[derive(Clone, Debug)]
pub struct EnergyBudget<T> {
    pub gamma: Vec<T>,
    pub alpha_power: T,
    pub t_target: T,
}

impl<T: Real> EnergyBudget<T> {
    pub fn for_lifetime(sensors: &[Sensor<T>], alpha_power: T, t_target: T) -> Self {
        EnergyBudget {
            gamma: sensors
                .iter()
                .map(|s| s.battery - alpha_power * t_target)
                .collect(),
            alpha_power,
            t_target,
        }
    }

    /// Indices of sensors whose battery cannot sustain the target lifetime
    /// even without moving.
    pub fn negative_indices(&self) -> Vec<usize> {
        self.gamma
            .iter()
            .enumerate()
            .filter(|(_, &g)| g < T::zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Movement radius `gamma / moving_cost`, clamped at zero.
    pub fn radius(&self, idx: usize, moving_cost: T) -> T {
        (self.gamma[idx] / moving_cost).max(T::zero())
    }
}

/// Minimum residual lifetime over the sensors active in the final
/// backbone: `(battery - spent) / alpha_power`.
pub fn achieved_lifetime<T: Real>(
    sensors: &[Sensor<T>],
    spent: &[T],
    active: &[bool],
    alpha_power: T,
) -> T {
    sensors
        .iter()
        .zip(spent)
        .zip(active)
        .filter(|&(_, &a)| a)
        .map(|((s, &e), _)| (s.battery - e) / alpha_power)
        .fold(T::infinity(), |acc, v| acc.min(v))
}

fn no_value<T>() -> Option<T> {
    None
}

/// State snapshot recorded after one iteration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IterationRecord<T> {
    pub iter: usize,
    pub positions: Vec<Point<T>>,
    pub active: Vec<bool>,
    pub distortion: T,
    /// Distortion of the cheapest connected component; reported by the
    /// unconstrained baseline, which may fragment the network.
    #[serde(default = "no_value", skip_serializing_if = "Option::is_none")]
    pub distortion_best_subgraph: Option<T>,
    pub spent: Vec<T>,
    pub lifetime: T,
    pub area_coverage: T,
    pub target_coverage: Option<T>,
    pub backbone_size: usize,
}

/// Full run history: the initial state plus one record per iteration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IterationTrace<T> {
    pub energy_mode: EnergyMode,
    pub initial: IterationRecord<T>,
    pub iterations: Vec<IterationRecord<T>>,
    pub warnings: Vec<String>,
    /// True when the displacement threshold stopped the run before the
    /// iteration cap.
    pub converged: bool,
}

impl<T: Real> IterationTrace<T> {
    pub fn final_record(&self) -> &IterationRecord<T> {
        self.iterations.last().unwrap_or(&self.initial)
    }
}

/// Everything an optimizer needs: the fleet, the quadrature grid, the
/// density sampled on it, optional targets, and the energy budget.
#[derive(Clone, Copy)]
pub struct Instance<'a, T: Real> {
    pub deployment: &'a Deployment<T>,
    pub grid: &'a IntegrationGrid<T>,
    pub density: &'a [T],
    pub targets: Option<&'a TargetSet<T>>,
    pub budget: &'a EnergyBudget<T>,
}

impl<'a, T: Real> Instance<'a, T> {
    pub fn sensor_count(&self) -> usize {
        self.deployment.sensors.len()
    }
}

/// Fresh partition, moments, and metric record for the given working
/// state. Returns the assignment and moments so the caller can reuse them
/// as the next iteration's partition step.
pub(crate) fn snapshot_metrics<T: Real>(
    inst: &Instance<'_, T>,
    iter: usize,
    sensors: &[Sensor<T>],
    active: &[bool],
    spent: &[T],
) -> (IterationRecord<T>, Assignment, CellMoments<T>) {
    let assignment = assign_mwvd(sensors, active, inst.grid);
    let moments = cell_moments(sensors, &assignment, inst.grid, inst.density);
    let d = distortion(sensors, &assignment, inst.grid, inst.density);
    let positions: Vec<Point<T>> = sensors.iter().map(|s| s.position).collect();
    let bb = backbone_within(&positions, active, inst.deployment.comm_range);
    let record = IterationRecord {
        iter,
        positions,
        active: active.to_vec(),
        distortion: d,
        distortion_best_subgraph: None,
        spent: spent.to_vec(),
        lifetime: achieved_lifetime(sensors, spent, active, inst.budget.alpha_power),
        area_coverage: area_coverage(sensors, active, inst.grid),
        target_coverage: inst.targets.map(|t| target_coverage(sensors, active, t)),
        backbone_size: backbone_size(&bb),
    };
    (record, assignment, moments)
}

/// Asserts the fleet starts fully connected; optimizers that maintain
/// connectivity require it.
pub(crate) fn require_connected_start<T: Real>(
    positions: &[Point<T>],
    active: &[bool],
    comm_range: T,
) -> Result<(), Error> {
    let bb = backbone_within(positions, active, comm_range);
    let want = active.iter().filter(|&&a| a).count();
    let got = backbone_size(&bb);
    if got != want {
        return Err(Error::Disconnected(format!(
            "initial deployment reaches only {got} of {want} sensors from the access point"
        )));
    }
    Ok(())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn movement_energy_is_cost_times_distance() {
        assert_eq!(
            movement_energy(2.0, Point::new(0.0, 0.0), Point::new(0.5, 0.0)),
            1.0
        );
        assert_eq!(movement_energy(3.0, Point::new(1.0, 1.0), Point::new(1.0, 1.0)), 0.0);
        // A documented per-meter cost figure scales through unchanged.
        assert_eq!(
            movement_energy(5.976, Point::new(0.0, 0.0), Point::new(1.0, 0.0)),
            5.976
        );
    }

    #[test]
    fn budget_derivation_and_negative_detection() {
        let scene = testkit::unit_square_scene(&[(0.2, 0.2), (0.4, 0.2)], 0.4, 2.0, 1.3, 8);
        assert_eq!(scene.budget.gamma, vec![0.7, 0.7]);
        let mut sensors = scene.deployment.sensors.clone();
        sensors[1].battery = 0.8;
        let b = EnergyBudget::for_lifetime(&sensors, 1.0, 1.0);
        assert_eq!(b.negative_indices(), vec![1]);
        assert_eq!(b.radius(1, 2.0), 0.0);
    }

    #[test]
    fn lifetime_ignores_inactive_sensors() {
        let scene = testkit::unit_square_scene(&[(0.2, 0.2), (0.4, 0.2)], 0.4, 2.0, 1.0, 8);
        let sensors = &scene.deployment.sensors;
        let spent = vec![0.7, 0.0];
        assert_eq!(achieved_lifetime(sensors, &spent, &[true, true], 1.0), 1.3);
        // Deactivating the big spender lifts the minimum.
        assert_eq!(achieved_lifetime(sensors, &spent, &[false, true], 1.0), 2.0);
    }
}
