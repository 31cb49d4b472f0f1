//! Experiment orchestration: scenario in, trace plus summary out.

use serde::{Deserialize, Serialize};

use crate::algorithms::{
    run_bccml, run_ccml, run_dcml, run_lloyd_alpha, BccmlOptions, CcmlOptions, DcmlOptions,
    EnergyBudget, Instance, IterationTrace, LloydOptions,
};
use crate::density::IntegrationGrid;
use crate::error::Error;

use super::config::{Algorithm, Scenario};
use super::initial::generate_initial_deployment;

/// Headline numbers of a finished run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub schema_version: String,
    pub scenario_name: String,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub iterations: usize,
    pub converged: bool,
    pub final_distortion: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distortion_best_subgraph: Option<f64>,
    pub achieved_lifetime: f64,
    pub area_coverage: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_coverage: Option<f64>,
    pub backbone_size: usize,
    pub per_sensor_energy: Vec<f64>,
    pub warnings: Vec<String>,
}

pub struct RunOutput {
    pub scenario: Scenario,
    pub trace: IterationTrace<f64>,
    pub summary: Summary,
}

/// Runs the scenario's algorithm end to end: seeded connected initial
/// deployment, quadrature grid, density sampling, optimization, and the
/// summary of the final state.
pub fn run_experiment(scenario: &Scenario) -> Result<RunOutput, Error> {
    scenario.validate()?;
    let region = scenario.polygon()?;
    let grid = IntegrationGrid::new(&region, scenario.grid)?;
    let density = scenario.density.sample(&grid);
    let targets = scenario.target_set();
    let positions =
        generate_initial_deployment(&region, scenario.n, scenario.rc, scenario.seed)?;
    let deployment = scenario.deployment(&positions)?;
    let budget = EnergyBudget::for_lifetime(
        &deployment.sensors,
        scenario.alpha_power,
        scenario.t_target,
    );
    let inst = Instance {
        deployment: &deployment,
        grid: &grid,
        density: &density,
        targets: targets.as_ref(),
        budget: &budget,
    };

    let trace = match scenario.algorithm {
        Algorithm::Ccml => run_ccml(
            &inst,
            &CcmlOptions {
                max_iters: scenario.max_iters,
                tol: scenario.tol,
                exact_sweep: scenario.exact_sweep,
            },
        )?,
        Algorithm::Bccml => run_bccml(
            &inst,
            &BccmlOptions {
                ccml: CcmlOptions {
                    max_iters: scenario.max_iters,
                    tol: scenario.tol,
                    exact_sweep: scenario.exact_sweep,
                },
                rule: scenario.bccml_rule,
                eval_horizon: scenario.bccml_eval_horizon,
            },
        )?,
        Algorithm::Dcml => run_dcml(
            &inst,
            &DcmlOptions {
                max_iters: scenario.max_iters,
                tol: scenario.tol,
                step_cap: scenario.dcml_step_cap,
            },
        )?,
        Algorithm::LloydAlpha => run_lloyd_alpha(
            &inst,
            &LloydOptions {
                max_iters: scenario.max_iters,
                alpha_step: scenario.lloyd_alpha,
            },
        )?,
    };

    let summary = summarize(scenario, &trace);
    Ok(RunOutput {
        scenario: scenario.clone(),
        trace,
        summary,
    })
}

pub fn summarize(scenario: &Scenario, trace: &IterationTrace<f64>) -> Summary {
    let last = trace.final_record();
    Summary {
        schema_version: "1".to_string(),
        scenario_name: scenario.name.clone(),
        algorithm: scenario.algorithm,
        seed: scenario.seed,
        iterations: trace.iterations.len(),
        converged: trace.converged,
        final_distortion: last.distortion,
        distortion_best_subgraph: last.distortion_best_subgraph,
        achieved_lifetime: last.lifetime,
        area_coverage: last.area_coverage,
        target_coverage: last.target_coverage,
        backbone_size: last.backbone_size,
        per_sensor_energy: last.spent.clone(),
        warnings: trace.warnings.clone(),
    }
}
