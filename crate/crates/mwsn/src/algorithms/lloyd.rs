//! Budget-truncated Lloyd baseline with step scaling.
//!
//! Every iteration moves each sensor a fraction `alpha_step` of the way
//! toward its centroid, truncated so cumulative path energy never exceeds
//! the budget. Connectivity is ignored while moving; the metrics report
//! the distortion of the access-point backbone and, separately, of the
//! cheapest connected component, since the fleet may fragment.

use crate::connectivity::{backbone, backbone_size, connected_components};
use crate::coverage::{area_coverage, target_coverage};
use crate::error::Error;
use crate::geometry::Point;
use crate::partition::{assign_mwvd, cell_moments, distortion, Sensor};
use crate::scalar::{tol, Real};

use super::{achieved_lifetime, EnergyMode, Instance, IterationRecord, IterationTrace};

#[derive(Clone, Copy, Debug)]
pub struct LloydOptions<T> {
    pub max_iters: usize,
    /// Movement scale in (0, 1].
    pub alpha_step: T,
}

/// Runs the baseline. Sensors with a negative budget are reported and
/// never move; the run itself proceeds.
pub fn run_lloyd_alpha<T: Real>(
    inst: &Instance<'_, T>,
    opts: &LloydOptions<T>,
) -> Result<IterationTrace<T>, Error> {
    // Zero is accepted as the degenerate no-movement schedule.
    if !(opts.alpha_step >= T::zero() && opts.alpha_step <= T::one()) {
        return Err(Error::Scenario(format!(
            "step scale must lie in [0, 1], got {:?}",
            opts.alpha_step
        )));
    }
    let n = inst.sensor_count();
    let mut warnings = Vec::new();
    for idx in inst.budget.negative_indices() {
        warnings.push(format!(
            "sensor {} cannot meet the target lifetime even without moving (negative budget); it stays put",
            idx + 1
        ));
    }

    let mut sensors: Vec<Sensor<T>> = inst.deployment.sensors.clone();
    let mut spent = vec![T::zero(); n];
    let all = vec![true; n];

    let initial = fragment_aware_record(inst, 0, &sensors, &spent);
    let mut iterations = Vec::new();

    for k in 1..=opts.max_iters {
        // Partition over the whole fleet regardless of connectivity.
        let assignment = assign_mwvd(&sensors, &all, inst.grid);
        let moments = cell_moments(&sensors, &assignment, inst.grid, inst.density);
        for idx in 0..n {
            let here = sensors[idx].position;
            let centroid = moments.centroid[idx];
            let gap = here.dist(centroid);
            if gap <= T::zero() {
                continue;
            }
            let desired = opts.alpha_step * gap;
            let remaining =
                (inst.budget.gamma[idx].max(T::zero()) - spent[idx]) / sensors[idx].moving_cost;
            let step = desired.min(remaining.max(T::zero()));
            if step <= T::zero() {
                continue;
            }
            let direction = (centroid - here) / gap;
            sensors[idx].position = here + direction * step;
            spent[idx] += sensors[idx].moving_cost * step;
            debug_assert!(
                spent[idx]
                    <= inst.budget.gamma[idx].max(T::zero())
                        + T::accum_slack(inst.budget.gamma[idx], tol::ENERGY_SLACK)
            );
        }
        iterations.push(fragment_aware_record(inst, k, &sensors, &spent));
    }

    Ok(IterationTrace {
        energy_mode: EnergyMode::PathSum,
        initial,
        iterations,
        warnings,
        converged: false,
    })
}

/// Metrics for a possibly fragmented fleet: the active set is the
/// access-point backbone, and the cheapest component distortion is
/// reported alongside.
fn fragment_aware_record<T: Real>(
    inst: &Instance<'_, T>,
    iter: usize,
    sensors: &[Sensor<T>],
    spent: &[T],
) -> IterationRecord<T> {
    let rc = inst.deployment.comm_range;
    let positions: Vec<Point<T>> = sensors.iter().map(|s| s.position).collect();
    let bb = backbone(&positions, rc);

    let backbone_assignment = assign_mwvd(sensors, &bb, inst.grid);
    let backbone_distortion = distortion(sensors, &backbone_assignment, inst.grid, inst.density);

    let all = vec![true; sensors.len()];
    let best_subgraph = connected_components(&all, &positions, rc)
        .into_iter()
        .map(|comp| {
            let mut members = vec![false; sensors.len()];
            for idx in comp {
                members[idx] = true;
            }
            let assignment = assign_mwvd(sensors, &members, inst.grid);
            distortion(sensors, &assignment, inst.grid, inst.density)
        })
        .fold(T::infinity(), |acc, d| acc.min(d));

    IterationRecord {
        iter,
        positions,
        active: bb.clone(),
        distortion: backbone_distortion,
        distortion_best_subgraph: Some(best_subgraph),
        spent: spent.to_vec(),
        lifetime: achieved_lifetime(sensors, spent, &bb, inst.budget.alpha_power),
        area_coverage: area_coverage(sensors, &bb, inst.grid),
        target_coverage: inst.targets.map(|t| target_coverage(sensors, &bb, t)),
        backbone_size: backbone_size(&bb),
    }
}
