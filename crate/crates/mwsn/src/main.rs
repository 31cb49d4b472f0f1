use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use mwsn::algorithms::{BccmlRule, ConditionCase, StepCapRule};
use mwsn::error::Error;
use mwsn::harness::{
    self, emit_outputs, load_scenario, load_trace, preset, run_experiment, verify_trace,
    Algorithm, Scenario,
};

#[derive(Parser)]
#[command(
    name = "mwsn",
    about = "Movement-constrained sensor deployment simulator",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and write metrics.csv, trace.json,
    /// summary.json, and deployment.svg.
    Deploy(DeployArgs),
    /// Run the same scenario across a seed range (in parallel, capped by
    /// MWSN_THREADS) and aggregate the final metrics.
    Sweep(SweepArgs),
    /// Re-verify a recorded trace: run invariants plus the optimality
    /// diagnostic.
    Check(CheckArgs),
}

#[derive(Args, Clone)]
struct ScenarioArgs {
    /// Built-in scenario: mwsn1, mwsn2, or mwsn3.
    #[arg(long)]
    preset: Option<String>,
    /// Scenario file (TOML; see docs/schema.md).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the algorithm: ccml, bccml, dcml, lloyd_alpha.
    #[arg(long)]
    algo: Option<String>,
    /// Override the required network lifetime.
    #[arg(long)]
    lifetime: Option<f64>,
    /// Override the communication range.
    #[arg(long)]
    rc: Option<f64>,
    /// Override the RNG seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the quadrature resolution per axis.
    #[arg(long)]
    grid: Option<usize>,
    /// Override the iteration cap.
    #[arg(long = "max-iters")]
    max_iters: Option<usize>,
    /// Override the fleet size.
    #[arg(long)]
    n: Option<usize>,
    /// Step scale for lloyd_alpha.
    #[arg(long = "alpha-step")]
    alpha_step: Option<f64>,
    /// Refresh the partition before every single-sensor move.
    #[arg(long = "exact-sweep")]
    exact_sweep: bool,
    /// Bottleneck commit rule: largest or smallest (positive decrease).
    #[arg(long = "bccml-rule")]
    bccml_rule: Option<String>,
    /// Step-cap schedule: "const:VALUE" or "alpha:VALUE".
    #[arg(long = "dcml-step-cap")]
    dcml_step_cap: Option<String>,
}

#[derive(Args)]
struct DeployArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Output directory.
    #[arg(long, default_value = "runs/out")]
    out: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Inclusive seed range, e.g. "1..10".
    #[arg(long)]
    seeds: String,
    /// Output directory; each seed writes to <out>/seed_<s>/.
    #[arg(long, default_value = "runs/sweep")]
    out: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    /// Recorded trace.json to verify.
    #[arg(long)]
    trace: PathBuf,
    /// Offset tolerance for the optimality diagnostic; defaults to twice
    /// the grid cell diagonal.
    #[arg(long = "tol-geo")]
    tol_geo: Option<f64>,
}

fn resolve_scenario(args: &ScenarioArgs) -> Result<Scenario, Error> {
    let mut scenario = match (&args.preset, &args.config) {
        (Some(name), None) => preset(name)?,
        (None, Some(path)) => load_scenario(path)?,
        (Some(_), Some(_)) => {
            return Err(Error::config("cli", "pass either --preset or --config, not both"))
        }
        (None, None) => {
            return Err(Error::config("cli", "one of --preset or --config is required"))
        }
    };
    if let Some(algo) = &args.algo {
        scenario.algorithm = Algorithm::from_str(algo)?;
        if scenario.algorithm == Algorithm::Dcml || scenario.algorithm == Algorithm::LloydAlpha {
            scenario.tol = 0.0;
        }
    }
    if let Some(t) = args.lifetime {
        scenario.t_target = t;
    }
    if let Some(rc) = args.rc {
        scenario.rc = rc;
        if let StepCapRule::Constant { .. } = scenario.dcml_step_cap {
            scenario.dcml_step_cap = StepCapRule::Constant { value: rc / 2.0 };
        }
    }
    if let Some(seed) = args.seed {
        scenario.seed = seed;
    }
    if let Some(grid) = args.grid {
        scenario.grid = grid;
    }
    if let Some(iters) = args.max_iters {
        scenario.max_iters = iters;
    }
    if let Some(n) = args.n {
        if scenario.eta.len() != n {
            // Resize homogeneous parameter vectors; heterogeneous presets
            // keep their documented size.
            let uniform = |v: &Vec<f64>| v.windows(2).all(|w| w[0] == w[1]);
            if uniform(&scenario.eta)
                && uniform(&scenario.xi)
                && uniform(&scenario.battery)
                && uniform(&scenario.sensing_radius)
            {
                scenario.eta = vec![scenario.eta[0]; n];
                scenario.xi = vec![scenario.xi[0]; n];
                scenario.battery = vec![scenario.battery[0]; n];
                scenario.sensing_radius = vec![scenario.sensing_radius[0]; n];
            } else {
                return Err(Error::config(
                    "n",
                    "cannot resize a heterogeneous fleet; edit the scenario file instead",
                ));
            }
        }
        scenario.n = n;
    }
    if let Some(a) = args.alpha_step {
        scenario.lloyd_alpha = a;
    }
    if args.exact_sweep {
        scenario.exact_sweep = true;
    }
    if let Some(rule) = &args.bccml_rule {
        scenario.bccml_rule = match rule.as_str() {
            "largest" => BccmlRule::LargestDecrease,
            "smallest" => BccmlRule::SmallestPositiveDecrease,
            other => {
                return Err(Error::config(
                    "bccml-rule",
                    format!("unknown rule `{other}` (expected largest|smallest)"),
                ))
            }
        };
    }
    if let Some(spec) = &args.dcml_step_cap {
        scenario.dcml_step_cap = parse_step_cap(spec)?;
    }
    scenario.validate()?;
    Ok(scenario)
}

fn parse_step_cap(spec: &str) -> Result<StepCapRule<f64>, Error> {
    let bad = || {
        Error::config(
            "dcml-step-cap",
            format!("cannot parse `{spec}` (expected const:VALUE or alpha:VALUE)"),
        )
    };
    let (kind, value) = spec.split_once(':').ok_or_else(bad)?;
    let value: f64 = value.parse().map_err(|_| bad())?;
    match kind {
        "const" | "constant" => Ok(StepCapRule::Constant { value }),
        "alpha" => Ok(StepCapRule::AlphaScaled { alpha: value }),
        _ => Err(bad()),
    }
}

fn parse_seed_range(spec: &str) -> Result<Vec<u64>, Error> {
    let bad = || Error::config("seeds", format!("cannot parse `{spec}` (expected e.g. 1..10)"));
    if let Some((a, b)) = spec.split_once("..") {
        let lo: u64 = a.trim().parse().map_err(|_| bad())?;
        let hi: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        Ok((lo..=hi).collect())
    } else {
        Ok(vec![spec.trim().parse().map_err(|_| bad())?])
    }
}

fn thread_cap() -> usize {
    std::env::var("MWSN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|v| v.get())
                .unwrap_or(1)
        })
}

fn cmd_deploy(args: &DeployArgs) -> Result<(), Error> {
    let scenario = resolve_scenario(&args.scenario)?;
    let run = run_experiment(&scenario)?;
    let files = emit_outputs(&run, &args.out)?;
    let s = &run.summary;
    println!(
        "{} {} seed={} iterations={} converged={}",
        s.scenario_name,
        s.algorithm.as_str(),
        s.seed,
        s.iterations,
        s.converged
    );
    println!(
        "distortion={:.6} lifetime={:.6} area_coverage={:.4} backbone={}/{}",
        s.final_distortion, s.achieved_lifetime, s.area_coverage, s.backbone_size, scenario.n
    );
    if let Some(best) = s.distortion_best_subgraph {
        println!("best_subgraph_distortion={best:.6}");
    }
    if let Some(tc) = s.target_coverage {
        println!("target_coverage={tc:.4}");
    }
    for w in &s.warnings {
        println!("warning: {w}");
    }
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Error> {
    let base = resolve_scenario(&args.scenario)?;
    let seeds = parse_seed_range(&args.seeds)?;
    let cap = thread_cap();

    let mut results: Vec<(u64, harness::Summary)> = Vec::with_capacity(seeds.len());
    for chunk in seeds.chunks(cap) {
        let outputs: Vec<Result<(u64, harness::Summary), Error>> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = chunk
                    .iter()
                    .map(|&seed| {
                        let mut scenario = base.clone();
                        scenario.seed = seed;
                        let dir = args.out.join(format!("seed_{seed}"));
                        scope.spawn(move || {
                            let run = run_experiment(&scenario)?;
                            emit_outputs(&run, &dir)?;
                            Ok((seed, run.summary))
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("sweep worker panicked"))
                    .collect()
            });
        for r in outputs {
            results.push(r?);
        }
    }

    let mut csv = String::from(
        "seed,distortion,best_subgraph_distortion,lifetime,area_coverage,target_coverage,backbone_size,iterations\n",
    );
    for (seed, s) in &results {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            seed,
            s.final_distortion,
            s.distortion_best_subgraph.map(|v| v.to_string()).unwrap_or_default(),
            s.achieved_lifetime,
            s.area_coverage,
            s.target_coverage.map(|v| v.to_string()).unwrap_or_default(),
            s.backbone_size,
            s.iterations
        ));
    }
    std::fs::create_dir_all(&args.out).map_err(|e| Error::io(args.out.display().to_string(), e))?;
    let path = args.out.join("sweep_summary.csv");
    std::fs::write(&path, csv).map_err(|e| Error::io(path.display().to_string(), e))?;

    let mean =
        results.iter().map(|(_, s)| s.final_distortion).sum::<f64>() / results.len() as f64;
    println!(
        "{} seeds, mean final distortion {:.6}; wrote {}",
        results.len(),
        mean,
        path.display()
    );
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> Result<bool, Error> {
    let file = load_trace(&args.trace)?;
    let verification = verify_trace(&file, args.tol_geo)?;
    let line = |name: &str, ok: bool| {
        println!("{name}: {}", if ok { "PASS" } else { "FAIL" });
    };
    line("distortion recomputation", verification.distortion_ok);
    line("monotone distortion", verification.monotone_ok);
    line("backbone connectivity", verification.connectivity_ok);
    line("energy budgets", verification.energy_ok);
    line("per-step bounds", verification.step_bound_ok);
    for p in &verification.problems {
        println!("  problem: {p}");
    }
    let mut flags = 0usize;
    let mut geometric_fails = 0usize;
    for r in &verification.reports {
        if !r.pass {
            match r.case {
                ConditionCase::ReactivationFlag => flags += 1,
                _ => geometric_fails += 1,
            }
        }
    }
    println!(
        "optimality diagnostic: {:.1}% pass ({} sensors, {} re-activation flags, {} geometric failures)",
        100.0 * verification.pass_fraction,
        verification.reports.len(),
        flags,
        geometric_fails
    );
    for r in &verification.reports {
        if !r.pass {
            println!(
                "  sensor {}: {:?} offset {:.6}",
                r.id, r.case, r.offset
            );
        }
    }
    Ok(verification.invariants_ok())
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (e.g. piping into head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Deploy(args) => cmd_deploy(args).map(|_| true),
        Command::Sweep(args) => cmd_sweep(args).map(|_| true),
        Command::Check(args) => cmd_check(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
