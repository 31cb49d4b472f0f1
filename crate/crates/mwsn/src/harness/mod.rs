//! Scenario configuration, seeded deployments, experiment orchestration,
//! and file outputs.

pub mod config;
pub mod experiment;
pub mod initial;
pub mod output;
pub mod presets;
pub mod rng;
pub mod verify;

pub use config::{load_scenario, parse_scenario, Algorithm, Scenario};
pub use experiment::{run_experiment, summarize, RunOutput, Summary};
pub use initial::generate_initial_deployment;
pub use output::{
    emit_outputs, load_trace, render_metrics_csv, render_summary_json, render_svg,
    render_trace_json, TraceFile, METRICS_CSV_HEADER,
};
pub use presets::{benchmark_density, preset, BENCHMARK_REGION};
pub use rng::SeededRng;
pub use verify::{verify_trace, TraceVerification};
