//! Backward-stepwise variant of the centralized optimizer for
//! heterogeneous fleets.
//!
//! Sensors that cannot sustain the target lifetime are deactivated up
//! front. The remaining backbone is optimized to convergence, then leaf
//! sensors that exhausted their budget while a neighbor kept slack are
//! tentatively removed; the removal that lowers the distortion the most
//! (evaluated by a short optimization burst) is committed. Deactivated
//! sensors freeze in place, keep their spent energy, and leave the
//! partition.

use serde::{Deserialize, Serialize};

use crate::connectivity::{backbone_within, components_excluding, neighbors_of};
use crate::error::Error;
use crate::geometry::Point;
use crate::scalar::Real;

use super::ccml::{CcmlOptions, ConstrainedLloyd};
use super::{EnergyBudget, EnergyMode, Instance, IterationTrace};

/// Which improving removal to commit each round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BccmlRule {
    LargestDecrease,
    SmallestPositiveDecrease,
}

#[derive(Clone, Copy, Debug)]
pub struct BccmlOptions<T> {
    pub ccml: CcmlOptions<T>,
    pub rule: BccmlRule,
    /// Iterations granted to each tentative removal before comparing
    /// distortions.
    pub eval_horizon: usize,
}

impl<T: Real> Default for BccmlOptions<T> {
    fn default() -> Self {
        BccmlOptions {
            ccml: CcmlOptions::default(),
            rule: BccmlRule::LargestDecrease,
            eval_horizon: 10,
        }
    }
}

/// Removal candidates: non-AP members whose removal keeps the member set
/// in one piece, whose point-to-point energy is exhausted within a
/// relative tolerance of 1e-6, and that have at least one neighbor with
/// slack left.
pub fn bottleneck_candidates<T: Real>(
    positions: &[Point<T>],
    initials: &[Point<T>],
    moving_cost: &[T],
    active: &[bool],
    comm_range: T,
    budget: &EnergyBudget<T>,
) -> Vec<usize> {
    let slack_tol = |gamma: T| gamma.abs() * T::c(1e-6);
    let spent = |n: usize| moving_cost[n] * positions[n].dist(initials[n]);
    let mut out = Vec::new();
    for n in 1..positions.len() {
        if !active[n] {
            continue;
        }
        if components_excluding(active, n, positions, comm_range).len() != 1 {
            continue;
        }
        if spent(n) < budget.gamma[n] - slack_tol(budget.gamma[n]) {
            continue;
        }
        let has_slack_neighbor = neighbors_of(n, positions, active, comm_range)
            .into_iter()
            .any(|m| spent(m) < budget.gamma[m] - slack_tol(budget.gamma[m]));
        if has_slack_neighbor {
            out.push(n);
        }
    }
    out
}

/// Runs the backward-stepwise optimizer. The recorded trace interleaves
/// convergence phases with the committed removal bursts; discarded
/// tentative bursts do not appear and do not count against the iteration
/// cap.
pub fn run_bccml<T: Real>(
    inst: &Instance<'_, T>,
    opts: &BccmlOptions<T>,
) -> Result<IterationTrace<T>, Error> {
    let n = inst.sensor_count();
    let rc = inst.deployment.comm_range;
    let positions = inst.deployment.positions();
    let mut warnings = Vec::new();

    require_full_start(inst)?;

    let mut active = vec![true; n];
    for idx in inst.budget.negative_indices() {
        if idx == 0 {
            return Err(Error::Scenario(
                "the access point cannot sustain the target lifetime".into(),
            ));
        }
        active[idx] = false;
        warnings.push(format!(
            "sensor {} deactivated up front: battery below the target-lifetime drain",
            idx + 1
        ));
    }
    // Exclusions may strand sensors; keep only the AP component.
    let bb = backbone_within(&positions, &active, rc);
    for idx in 0..n {
        if active[idx] && !bb[idx] {
            active[idx] = false;
            warnings.push(format!(
                "sensor {} deactivated: cut off from the access point by up-front exclusions",
                idx + 1
            ));
        }
    }

    let mut solver = ConstrainedLloyd::new(*inst, active, opts.ccml.exact_sweep);
    let (initial, _) = {
        let spent = solver.spent();
        let (record, _, moments) = super::snapshot_metrics(
            &solver.inst,
            0,
            &solver.sensors,
            &solver.active,
            &spent,
        );
        (record, moments)
    };

    let mut iterations = Vec::new();
    let mut converged;
    loop {
        let remaining = opts.ccml.max_iters.saturating_sub(iterations.len());
        converged = solver.run_phase(iterations.len(), remaining, opts.ccml.tol, &mut iterations);
        if !converged {
            break;
        }

        let positions = solver.positions();
        let initials: Vec<Point<T>> = solver.sensors.iter().map(|s| s.initial).collect();
        let costs: Vec<T> = solver.sensors.iter().map(|s| s.moving_cost).collect();
        let candidates = bottleneck_candidates(
            &positions,
            &initials,
            &costs,
            &solver.active,
            rc,
            inst.budget,
        );
        if candidates.is_empty() {
            break;
        }

        let base = solver.current_distortion();
        let remaining = opts.ccml.max_iters.saturating_sub(iterations.len());
        let horizon = opts.eval_horizon.min(remaining);
        #[allow(clippy::type_complexity)]
        let mut best: Option<(T, usize, ConstrainedLloyd<'_, T>, Vec<super::IterationRecord<T>>)> =
            None;
        for &cand in &candidates {
            let mut tentative = solver.clone();
            tentative.deactivate(cand);
            let mut burst = Vec::new();
            tentative.run_phase(iterations.len(), horizon, opts.ccml.tol, &mut burst);
            let decrease = base - tentative.current_distortion();
            if decrease <= T::zero() {
                continue;
            }
            let better = match (&best, opts.rule) {
                (None, _) => true,
                (Some((d, ..)), BccmlRule::LargestDecrease) => decrease > *d,
                (Some((d, ..)), BccmlRule::SmallestPositiveDecrease) => decrease < *d,
            };
            if better {
                best = Some((decrease, cand, tentative, burst));
            }
        }
        match best {
            None => break,
            Some((_, removed, tentative, burst)) => {
                warnings.push(format!(
                    "sensor {} deactivated as a bottleneck after {} iterations",
                    removed + 1,
                    iterations.len()
                ));
                solver = tentative;
                iterations.extend(burst);
            }
        }
    }

    if solver.empty_region_events > 0 {
        warnings.push(format!(
            "{} single-sensor moves were skipped because the constraint region was numerically empty",
            solver.empty_region_events
        ));
    }
    Ok(IterationTrace {
        energy_mode: EnergyMode::PointToPoint,
        initial,
        iterations,
        warnings,
        converged,
    })
}

fn require_full_start<T: Real>(inst: &Instance<'_, T>) -> Result<(), Error> {
    super::require_connected_start(
        &inst.deployment.positions(),
        &vec![true; inst.sensor_count()],
        inst.deployment.comm_range,
    )
}
