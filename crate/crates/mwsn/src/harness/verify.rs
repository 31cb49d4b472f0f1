//! Replay verification of a recorded trace: recomputes distortion,
//! connectivity, and energy from the recorded positions and re-checks
//! the run invariants, then runs the optimality diagnostic on the final
//! state.

use crate::algorithms::{
    check_necessary_conditions, pass_fraction, ConditionReport, EnergyBudget, EnergyMode,
    IterationRecord,
};
use crate::connectivity::{backbone_size, backbone_within};
use crate::density::IntegrationGrid;
use crate::error::Error;
use crate::partition::{assign_mwvd, cell_moments, distortion, Sensor};
use crate::scalar::tol;

use super::config::{Algorithm, Scenario};
use super::output::TraceFile;

#[derive(Clone, Debug)]
pub struct TraceVerification {
    /// Recomputed distortion agrees with each recorded value.
    pub distortion_ok: bool,
    /// Distortion never increases (checked between records with the same
    /// active set; removal commits legitimately change the objective).
    pub monotone_ok: bool,
    /// Recorded backbone sizes match a recomputation, and stay equal to
    /// the active count for the connectivity-preserving optimizers.
    pub connectivity_ok: bool,
    /// Every sensor stayed within its movement budget.
    pub energy_ok: bool,
    /// Per-iteration step lengths respect the step caps (path-sum runs).
    pub step_bound_ok: bool,
    pub problems: Vec<String>,
    pub reports: Vec<ConditionReport<f64>>,
    pub pass_fraction: f64,
}

impl TraceVerification {
    pub fn invariants_ok(&self) -> bool {
        self.distortion_ok
            && self.monotone_ok
            && self.connectivity_ok
            && self.energy_ok
            && self.step_bound_ok
    }
}

fn sensors_at(scenario: &Scenario, initial: &IterationRecord<f64>, rec: &IterationRecord<f64>) -> Vec<Sensor<f64>> {
    (0..scenario.n)
        .map(|i| Sensor {
            id: i + 1,
            initial: initial.positions[i],
            position: rec.positions[i],
            sensing_weight: scenario.eta[i],
            moving_cost: scenario.xi[i],
            battery: scenario.battery[i],
            sensing_radius: scenario.sensing_radius[i],
        })
        .collect()
}

pub fn verify_trace(file: &TraceFile, tol_geo: Option<f64>) -> Result<TraceVerification, Error> {
    let scenario = &file.scenario;
    scenario.validate()?;
    let region = scenario.polygon()?;
    let grid = IntegrationGrid::new(&region, scenario.grid)?;
    let density = scenario.density.sample(&grid);
    let budget_vec: Vec<f64> = scenario
        .battery
        .iter()
        .map(|e| e - scenario.alpha_power * scenario.t_target)
        .collect();

    let mut problems = Vec::new();
    let mut distortion_ok = true;
    let mut monotone_ok = true;
    let mut connectivity_ok = true;
    let mut energy_ok = true;
    let mut step_bound_ok = true;

    let trace = &file.trace;
    let initial = &trace.initial;
    let mut prev = initial.clone();
    let mut path_spent = vec![0.0f64; scenario.n];

    for rec in std::iter::once(initial).chain(trace.iterations.iter()) {
        let sensors = sensors_at(scenario, initial, rec);
        // Distortion recomputation.
        let assignment = assign_mwvd(&sensors, &rec.active, &grid);
        let d = distortion(&sensors, &assignment, &grid, &density);
        let scale = d.abs().max(1.0);
        if (d - rec.distortion).abs() > 1e-9 * scale {
            distortion_ok = false;
            problems.push(format!(
                "iteration {}: recorded distortion {} but recomputed {}",
                rec.iter, rec.distortion, d
            ));
        }
        // Connectivity.
        let bb = backbone_within(&rec.positions, &rec.active, scenario.rc);
        let bb_size = backbone_size(&bb);
        if bb_size != rec.backbone_size {
            connectivity_ok = false;
            problems.push(format!(
                "iteration {}: recorded backbone {} but recomputed {}",
                rec.iter, rec.backbone_size, bb_size
            ));
        }
        let active_count = rec.active.iter().filter(|&&a| a).count();
        let keeps_connectivity = matches!(
            scenario.algorithm,
            Algorithm::Ccml | Algorithm::Bccml | Algorithm::Dcml
        );
        if keeps_connectivity && bb_size != active_count {
            connectivity_ok = false;
            problems.push(format!(
                "iteration {}: backbone {} smaller than active set {}",
                rec.iter, bb_size, active_count
            ));
        }
        // Monotonicity between same-active-set records.
        if rec.iter > 0
            && scenario.algorithm != Algorithm::LloydAlpha
            && rec.active == prev.active
            && rec.distortion > prev.distortion + tol::MONOTONE_SLACK
        {
            monotone_ok = false;
            problems.push(format!(
                "iteration {}: distortion rose from {} to {}",
                rec.iter, prev.distortion, rec.distortion
            ));
        }
        // Energy accounting.
        for i in 0..scenario.n {
            let expected = match trace.energy_mode {
                EnergyMode::PointToPoint => {
                    scenario.xi[i] * rec.positions[i].dist(initial.positions[i])
                }
                EnergyMode::PathSum => {
                    if rec.iter > 0 {
                        path_spent[i] += scenario.xi[i] * rec.positions[i].dist(prev.positions[i]);
                    }
                    path_spent[i]
                }
            };
            if (expected - rec.spent[i]).abs() > 1e-6 {
                energy_ok = false;
                problems.push(format!(
                    "iteration {}: sensor {} recorded energy {} but recomputed {}",
                    rec.iter,
                    i + 1,
                    rec.spent[i],
                    expected
                ));
            }
            // Negative-budget sensors never move, so the floor is zero.
            let budget_floor = budget_vec[i].max(0.0);
            if rec.spent[i] > budget_floor + tol::ENERGY_SLACK {
                energy_ok = false;
                problems.push(format!(
                    "iteration {}: sensor {} spent {} above budget {}",
                    rec.iter,
                    i + 1,
                    rec.spent[i],
                    budget_vec[i]
                ));
            }
        }
        // Step caps for the simultaneous scheme.
        if scenario.algorithm == Algorithm::Dcml && rec.iter > 0 {
            let prev_sensors = sensors_at(scenario, initial, &prev);
            let prev_assignment = assign_mwvd(&prev_sensors, &prev.active, &grid);
            let prev_moments = cell_moments(&prev_sensors, &prev_assignment, &grid, &density);
            for (i, budget) in budget_vec.iter().enumerate() {
                let step = rec.positions[i].dist(prev.positions[i]);
                let cap = scenario
                    .dcml_step_cap
                    .cap(prev.positions[i], prev_moments.centroid[i]);
                let residual = budget - prev.spent[i];
                let bound = (residual / scenario.xi[i]).min(cap).max(0.0);
                if step > bound + tol::ENERGY_SLACK {
                    step_bound_ok = false;
                    problems.push(format!(
                        "iteration {}: sensor {} stepped {} beyond bound {}",
                        rec.iter,
                        i + 1,
                        step,
                        bound
                    ));
                }
            }
        }
        prev = rec.clone();
    }

    // Optimality diagnostic on the final state.
    let final_rec = trace.final_record();
    let sensors = sensors_at(scenario, initial, final_rec);
    let budget = EnergyBudget::for_lifetime(&sensors, scenario.alpha_power, scenario.t_target);
    let geo = tol_geo.unwrap_or(2.0 * grid.cell_diagonal());
    let reports = check_necessary_conditions(
        &sensors,
        &final_rec.active,
        &grid,
        &density,
        &budget,
        scenario.rc,
        geo,
    );
    let fraction = pass_fraction(&reports);

    Ok(TraceVerification {
        distortion_ok,
        monotone_ok,
        connectivity_ok,
        energy_ok,
        step_bound_ok,
        problems,
        reports,
        pass_fraction: fraction,
    })
}
