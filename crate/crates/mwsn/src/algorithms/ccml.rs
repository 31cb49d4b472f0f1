//! Centralized constrained-movement Lloyd iteration.
//!
//! Each iteration partitions the region by the weighted Voronoi rule,
//! then moves sensors one by one (ascending id) to the point of their
//! movement-and-connectivity constraint region closest to their cell
//! centroid. Connectivity constraints are rebuilt from the live positions
//! of all other sensors, so every single-sensor move preserves the
//! backbone. Relocation energy is charged point to point, and movements
//! are confined to the budget disk around the initial position.

use crate::connectivity::approx_feasible_region;
use crate::error::Error;
use crate::geometry::{project_to_disk_region_clipped, Point};
use crate::partition::{assign_mwvd, cell_moments, distortion, CellMoments, Sensor};
use crate::scalar::{tol, Real};

use super::{
    movement_energy, require_connected_start, snapshot_metrics, EnergyMode, Instance,
    IterationRecord, IterationTrace,
};

#[derive(Clone, Copy, Debug)]
pub struct CcmlOptions<T> {
    pub max_iters: usize,
    /// Stop once the largest per-sweep displacement drops below this;
    /// zero disables early termination.
    pub tol: T,
    /// Refresh the partition before every single-sensor move instead of
    /// once per sweep.
    pub exact_sweep: bool,
}

impl<T: Real> Default for CcmlOptions<T> {
    fn default() -> Self {
        CcmlOptions {
            max_iters: 100,
            tol: T::c(tol::CONVERGENCE),
            exact_sweep: false,
        }
    }
}

/// Working state shared by the centralized optimizers.
pub(crate) struct ConstrainedLloyd<'a, T: Real> {
    pub(crate) inst: Instance<'a, T>,
    pub(crate) sensors: Vec<Sensor<T>>,
    pub(crate) active: Vec<bool>,
    pub(crate) empty_region_events: usize,
    exact_sweep: bool,
}

impl<'a, T: Real> Clone for ConstrainedLloyd<'a, T> {
    fn clone(&self) -> Self {
        ConstrainedLloyd {
            inst: self.inst,
            sensors: self.sensors.clone(),
            active: self.active.clone(),
            empty_region_events: self.empty_region_events,
            exact_sweep: self.exact_sweep,
        }
    }
}

impl<'a, T: Real> ConstrainedLloyd<'a, T> {
    pub(crate) fn new(inst: Instance<'a, T>, active: Vec<bool>, exact_sweep: bool) -> Self {
        ConstrainedLloyd {
            inst,
            sensors: inst.deployment.sensors.clone(),
            active,
            empty_region_events: 0,
            exact_sweep,
        }
    }

    pub(crate) fn positions(&self) -> Vec<Point<T>> {
        self.sensors.iter().map(|s| s.position).collect()
    }

    /// Point-to-point energy spent so far, per sensor.
    pub(crate) fn spent(&self) -> Vec<T> {
        self.sensors
            .iter()
            .map(|s| movement_energy(s.moving_cost, s.initial, s.position))
            .collect()
    }

    pub(crate) fn current_distortion(&self) -> T {
        let assignment = assign_mwvd(&self.sensors, &self.active, self.inst.grid);
        distortion(&self.sensors, &assignment, self.inst.grid, self.inst.density)
    }

    /// Freeze a sensor in place and drop it from the partition.
    pub(crate) fn deactivate(&mut self, idx: usize) {
        self.active[idx] = false;
    }

    fn record(&self, iter: usize) -> (IterationRecord<T>, CellMoments<T>) {
        let (record, _assignment, moments) = snapshot_metrics(
            &self.inst,
            iter,
            &self.sensors,
            &self.active,
            &self.spent(),
        );
        (record, moments)
    }

    /// One full ascending-id sweep against the supplied moments. Returns
    /// the largest displacement.
    fn sweep(&mut self, moments: &CellMoments<T>) -> T {
        let rc = self.inst.deployment.comm_range;
        let margin = T::c(tol::SAFETY_MARGIN);
        let mut positions = self.positions();
        let mut live_moments: Option<CellMoments<T>> = None;
        let mut max_disp = T::zero();
        for n in 0..self.sensors.len() {
            if !self.active[n] {
                continue;
            }
            if self.exact_sweep {
                let assignment = assign_mwvd(&self.sensors, &self.active, self.inst.grid);
                live_moments = Some(cell_moments(
                    &self.sensors,
                    &assignment,
                    self.inst.grid,
                    self.inst.density,
                ));
            }
            let centroid = live_moments
                .as_ref()
                .map(|m| m.centroid[n])
                .unwrap_or(moments.centroid[n]);
            let budget_radius = self.inst.budget.radius(n, self.sensors[n].moving_cost);
            if budget_radius <= margin {
                // An exhausted budget freezes the sensor outright.
                continue;
            }
            let region = approx_feasible_region(
                n,
                &positions,
                &self.active,
                rc,
                self.sensors[n].initial,
                budget_radius,
            )
            .shrunk(margin);
            let proj = project_to_disk_region_clipped(
                centroid,
                &region,
                positions[n],
                Some(&self.inst.deployment.region),
            );
            if proj.empty_region {
                self.empty_region_events += 1;
            }
            let disp = proj.point.dist(positions[n]);
            max_disp = max_disp.max(disp);
            positions[n] = proj.point;
            self.sensors[n].position = proj.point;
            debug_assert!(
                movement_energy(self.sensors[n].moving_cost, self.sensors[n].initial, proj.point)
                    <= self.inst.budget.gamma[n]
                        + T::accum_slack(self.inst.budget.gamma[n], tol::ENERGY_SLACK),
                "movement budget overrun for sensor {}",
                n + 1
            );
        }
        max_disp
    }

    /// Runs up to `budget_iters` iterations, appending one record per
    /// iteration numbered from `start_iter + 1`. Returns true when the
    /// displacement threshold stopped the loop.
    pub(crate) fn run_phase(
        &mut self,
        start_iter: usize,
        budget_iters: usize,
        stop_tol: T,
        out: &mut Vec<IterationRecord<T>>,
    ) -> bool {
        if budget_iters == 0 {
            return false;
        }
        let assignment = assign_mwvd(&self.sensors, &self.active, self.inst.grid);
        let mut moments = cell_moments(&self.sensors, &assignment, self.inst.grid, self.inst.density);
        let mut previous = distortion(&self.sensors, &assignment, self.inst.grid, self.inst.density);
        for step in 0..budget_iters {
            let disp = self.sweep(&moments);
            let (record, m) = self.record(start_iter + step + 1);
            moments = m;
            debug_assert!(
                record.distortion <= previous + T::accum_slack(previous, tol::MONOTONE_SLACK),
                "distortion increased within a constrained sweep"
            );
            previous = record.distortion;
            debug_assert_eq!(
                record.backbone_size,
                self.active.iter().filter(|&&a| a).count(),
                "constrained sweep broke backbone connectivity"
            );
            out.push(record);
            if stop_tol > T::zero() && disp < stop_tol {
                return true;
            }
        }
        false
    }
}

/// Runs the centralized optimizer over the full fleet.
///
/// Requires a fully connected start and non-negative movement budgets for
/// every sensor; a sensor that cannot sustain the target lifetime at all
/// is a scenario error here (the backward-stepwise variant pre-excludes
/// such sensors instead).
pub fn run_ccml<T: Real>(
    inst: &Instance<'_, T>,
    opts: &CcmlOptions<T>,
) -> Result<IterationTrace<T>, Error> {
    let n = inst.sensor_count();
    if let Some(idx) = inst.budget.negative_indices().first() {
        return Err(Error::Scenario(format!(
            "sensor {} cannot sustain the target lifetime (negative movement budget)",
            idx + 1
        )));
    }
    let active = vec![true; n];
    require_connected_start(
        &inst.deployment.positions(),
        &active,
        inst.deployment.comm_range,
    )?;

    let mut solver = ConstrainedLloyd::new(*inst, active, opts.exact_sweep);
    let (initial, _) = solver.record(0);
    let mut iterations = Vec::new();
    let converged = solver.run_phase(0, opts.max_iters, opts.tol, &mut iterations);

    let mut warnings = Vec::new();
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
