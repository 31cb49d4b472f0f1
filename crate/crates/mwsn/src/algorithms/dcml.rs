//! Distributed-style constrained-movement Lloyd iteration.
//!
//! All sensors move simultaneously each iteration, each to the nearest
//! point of its semi-feasible region to its previous-iteration centroid.
//! The midpoint-disk construction guarantees every spanning-tree edge
//! survives a simultaneous move, so the network stays fully connected
//! without any coordination. Energy is charged per step along the path,
//! with the per-iteration step capped by both the residual budget and a
//! step-cap schedule.

use serde::{Deserialize, Serialize};

use crate::connectivity::{euclidean_mst, mst_neighbors, semi_feasible_region};
use crate::error::Error;
use crate::geometry::{project_to_disk_region_clipped, Point};
use crate::partition::Sensor;
use crate::scalar::{tol, Real};

use super::{
    require_connected_start, snapshot_metrics, EnergyMode, Instance, IterationTrace,
};

/// Per-iteration movement cap schedule.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepCapRule<T> {
    /// Fixed cap per iteration.
    Constant { value: T },
    /// Cap scaled from the current distance to the centroid.
    AlphaScaled { alpha: T },
}

impl<T: Real> StepCapRule<T> {
    pub fn cap(&self, position: Point<T>, centroid: Point<T>) -> T {
        match *self {
            StepCapRule::Constant { value } => value,
            StepCapRule::AlphaScaled { alpha } => alpha * position.dist(centroid),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DcmlOptions<T> {
    pub max_iters: usize,
    /// Early-stop displacement threshold; zero runs the full schedule.
    pub tol: T,
    pub step_cap: StepCapRule<T>,
}

/// Runs the simultaneous-update optimizer over the full fleet.
pub fn run_dcml<T: Real>(
    inst: &Instance<'_, T>,
    opts: &DcmlOptions<T>,
) -> Result<IterationTrace<T>, Error> {
    let n = inst.sensor_count();
    if let Some(idx) = inst.budget.negative_indices().first() {
        return Err(Error::Scenario(format!(
            "sensor {} cannot sustain the target lifetime (negative movement budget)",
            idx + 1
        )));
    }
    let active = vec![true; n];
    let rc = inst.deployment.comm_range;
    require_connected_start(&inst.deployment.positions(), &active, rc)?;

    let mut sensors: Vec<Sensor<T>> = inst.deployment.sensors.clone();
    let mut spent = vec![T::zero(); n];
    let mut residual: Vec<T> = inst.budget.gamma.clone();
    let margin = T::c(tol::SAFETY_MARGIN);

    let (initial, _, mut moments) = snapshot_metrics(inst, 0, &sensors, &active, &spent);
    let mut iterations = Vec::new();
    let mut previous = initial.distortion;
    let mut converged = false;

    for k in 1..=opts.max_iters {
        let snapshot: Vec<Point<T>> = sensors.iter().map(|s| s.position).collect();
        let tree = euclidean_mst(&snapshot, rc)?;
        let adjacency = mst_neighbors(&tree, n);

        let mut max_step = T::zero();
        for idx in 0..n {
            let step_cap = opts.step_cap.cap(snapshot[idx], moments.centroid[idx]);
            let cap_radius = (residual[idx] / sensors[idx].moving_cost).min(step_cap);
            if cap_radius <= margin {
                // Exhausted residual or a zero cap freezes this stop.
                continue;
            }
            let region =
                semi_feasible_region(idx, &snapshot, &adjacency[idx], rc, cap_radius)
                    .shrunk(margin);
            let proj = project_to_disk_region_clipped(
                moments.centroid[idx],
                &region,
                snapshot[idx],
                Some(&inst.deployment.region),
            );
            let step = proj.point.dist(snapshot[idx]);
            debug_assert!(
                step <= cap_radius.max(T::zero()) + T::accum_slack(cap_radius, tol::ENERGY_SLACK),
                "per-step movement bound violated for sensor {}",
                idx + 1
            );
            sensors[idx].position = proj.point;
            let cost = sensors[idx].moving_cost * step;
            spent[idx] += cost;
            residual[idx] = residual[idx] - cost;
            debug_assert!(
                spent[idx]
                    <= inst.budget.gamma[idx]
                        + T::accum_slack(inst.budget.gamma[idx], tol::ENERGY_SLACK),
                "movement budget overrun for sensor {}",
                idx + 1
            );
            max_step = max_step.max(step);
        }

        let (record, _, m) = snapshot_metrics(inst, k, &sensors, &active, &spent);
        moments = m;
        debug_assert!(
            record.distortion <= previous + T::accum_slack(previous, tol::MONOTONE_SLACK),
            "distortion increased across a simultaneous update"
        );
        debug_assert_eq!(record.backbone_size, n, "simultaneous update broke connectivity");
        previous = record.distortion;
        iterations.push(record);

        if opts.tol > T::zero() && max_step < opts.tol {
            converged = true;
            break;
        }
    }

    Ok(IterationTrace {
        energy_mode: EnergyMode::PathSum,
        initial,
        iterations,
        warnings: Vec::new(),
        converged,
    })
}
