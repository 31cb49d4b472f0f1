//! Acceptance suite: each test exercises one release criterion at its
//! stated tolerance and prints a `criterion NN ... PASS/FAIL` line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::sync::OnceLock;
use std::time::Instant;

use mwsn::algorithms::{
    check_necessary_conditions, ConditionCase, EnergyBudget, IterationTrace,
};
use mwsn::connectivity::{
    backbone, backbone_size, euclidean_mst, mst_neighbors, semi_desired_region,
};
use mwsn::coverage::{Target, TargetSet};
use mwsn::density::IntegrationGrid;
use mwsn::geometry::{project_to_disk_region, ConvexPolygon, Disk, DiskRegion, Point};
use mwsn::harness::{
    generate_initial_deployment, parse_scenario, preset, run_experiment, Algorithm, RunOutput,
    Scenario, SeededRng,
};
use mwsn::partition::{assign_mwvd, cell_moments, distortion, Sensor};

const LIFETIME: f64 = 1.3;
const ENERGY_SLACK: f64 = 1e-9;
const MONOTONE_SLACK: f64 = 1e-9;

fn report(number: u32, name: &str, pass: bool) {
    println!(
        "criterion {number:02} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
}

struct Mwsn1Fixture {
    ccml: Vec<RunOutput>,
    dcml: Vec<RunOutput>,
    lloyd: Vec<RunOutput>,
    /// Wall-clock seconds of the slowest single run.
    slowest_run_seconds: f64,
}

fn mwsn1_scenario(algorithm: Algorithm, seed: u64) -> Scenario {
    let mut s = preset("mwsn1").unwrap();
    s.algorithm = algorithm;
    s.seed = seed;
    s.t_target = LIFETIME;
    if algorithm != Algorithm::Ccml {
        s.tol = 0.0;
    }
    s
}

fn fixture() -> &'static Mwsn1Fixture {
    static CELL: OnceLock<Mwsn1Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut jobs: Vec<Scenario> = Vec::new();
        for seed in 1..=20 {
            jobs.push(mwsn1_scenario(Algorithm::Ccml, seed));
            jobs.push(mwsn1_scenario(Algorithm::Dcml, seed));
        }
        for seed in 1..=10 {
            jobs.push(mwsn1_scenario(Algorithm::LloydAlpha, seed));
        }
        let outputs: Vec<(Algorithm, u64, RunOutput, f64)> = std::thread::scope(|scope| {
            let handles: Vec<_> = jobs
                .iter()
                .map(|scenario| {
                    scope.spawn(move || {
                        let started = Instant::now();
                        let run = run_experiment(scenario).expect("fixture run failed");
                        (
                            scenario.algorithm,
                            scenario.seed,
                            run,
                            started.elapsed().as_secs_f64(),
                        )
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut slowest = 0.0f64;
        let mut ccml = Vec::new();
        let mut dcml = Vec::new();
        let mut lloyd = Vec::new();
        let mut sorted = outputs;
        sorted.sort_by_key(|(_, seed, _, _)| *seed);
        for (algo, _, run, secs) in sorted {
            slowest = slowest.max(secs);
            match algo {
                Algorithm::Ccml => ccml.push(run),
                Algorithm::Dcml => dcml.push(run),
                Algorithm::LloydAlpha => lloyd.push(run),
                Algorithm::Bccml => unreachable!(),
            }
        }
        Mwsn1Fixture {
            ccml,
            dcml,
            lloyd,
            slowest_run_seconds: slowest,
        }
    })
}

fn monotone(trace: &IterationTrace<f64>) -> bool {
    let mut prev = trace.initial.distortion;
    for rec in &trace.iterations {
        if rec.distortion > prev + MONOTONE_SLACK {
            return false;
        }
        prev = rec.distortion;
    }
    true
}

#[test]
fn criterion_01_distortion_monotone_and_fast() {
    let fx = fixture();
    let all_monotone = fx
        .ccml
        .iter()
        .chain(fx.dcml.iter())
        .all(|run| monotone(&run.trace));
    let fast_enough = fx.slowest_run_seconds < 60.0;
    let pass = all_monotone && fast_enough;
    report(1, "distortion non-increasing, runs under budget", pass);
    assert!(all_monotone, "a run produced an increasing distortion step");
    assert!(
        fast_enough,
        "slowest run took {:.1} s (budget 60 s)",
        fx.slowest_run_seconds
    );
}

#[test]
fn criterion_02_backbone_never_shrinks() {
    let fx = fixture();
    let pass = fx.ccml.iter().chain(fx.dcml.iter()).all(|run| {
        run.trace.initial.backbone_size == 32
            && run.trace.iterations.iter().all(|r| r.backbone_size == 32)
    });
    report(2, "full connectivity after every iteration", pass);
    assert!(pass);
}

#[test]
fn criterion_03_simultaneous_moves_preserve_connectivity() {
    let region: ConvexPolygon<f64> = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.0),
        Point::new(4.0, 4.0),
        Point::new(0.0, 4.0),
    ])
    .unwrap();
    let comm_range = 1.0;
    let n = 12;
    let mut connected_trials = 0usize;
    let trials = 1000usize;
    for trial in 0..trials {
        let positions =
            generate_initial_deployment(&region, n, comm_range, 10_000 + trial as u64).unwrap();
        let tree = euclidean_mst(&positions, comm_range).unwrap();
        let adjacency = mst_neighbors(&tree, n);
        let mut rng = SeededRng::new(77_000 + trial as u64);
        let mut moved = positions.clone();
        for idx in 0..n {
            let sdr = semi_desired_region(idx, &positions, &adjacency[idx], comm_range);
            moved[idx] = sample_inside(&sdr, positions[idx], &mut rng);
        }
        if backbone_size(&backbone(&moved, comm_range)) == n {
            connected_trials += 1;
        }
    }
    let pass = connected_trials == trials;
    report(3, "random simultaneous in-region moves stay connected", pass);
    assert_eq!(connected_trials, trials);
}

/// Uniform sample of the region interior by rejection from the
/// intersection of the disk bounding boxes. Samples stay 1e-12 clear of
/// the boundary so float rounding cannot push a pair past the range.
fn sample_inside(region: &DiskRegion<f64>, fallback: Point<f64>, rng: &mut SeededRng) -> Point<f64> {
    let mut lo = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut hi = Point::new(f64::INFINITY, f64::INFINITY);
    for d in region.disks() {
        lo.x = lo.x.max(d.center.x - d.radius);
        lo.y = lo.y.max(d.center.y - d.radius);
        hi.x = hi.x.min(d.center.x + d.radius);
        hi.y = hi.y.min(d.center.y + d.radius);
    }
    if !(lo.x < hi.x && lo.y < hi.y) {
        return fallback;
    }
    for _ in 0..100_000 {
        let q = Point::new(rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y));
        if region.contains(q, -1e-12) {
            return q;
        }
    }
    fallback
}

#[test]
fn criterion_04_energy_and_lifetime_safety() {
    let fx = fixture();
    let gamma = 2.0 - LIFETIME;
    let mut pass = true;
    for run in fx.ccml.iter().chain(fx.dcml.iter()) {
        for rec in std::iter::once(&run.trace.initial).chain(run.trace.iterations.iter()) {
            if rec.spent.iter().any(|&s| s > gamma + ENERGY_SLACK) {
                pass = false;
            }
        }
        if run.summary.achieved_lifetime < LIFETIME - ENERGY_SLACK {
            pass = false;
        }
    }
    report(4, "budgets respected and lifetime achieved", pass);
    assert!(pass);
}

#[test]
fn criterion_05_first_order_conditions_at_convergence() {
    let fx = fixture();
    let scenario = &fx.ccml[0].scenario;
    let region = scenario.polygon().unwrap();
    let grid = IntegrationGrid::new(&region, scenario.grid).unwrap();
    let density = scenario.density.sample(&grid);
    let tol_geo = 2.0 * grid.cell_diagonal();

    let mut total = 0usize;
    let mut passed = 0usize;
    let mut geometric_failures = 0usize;
    for run in &fx.ccml {
        let last = run.trace.final_record();
        let sensors: Vec<Sensor<f64>> = (0..scenario.n)
            .map(|i| Sensor {
                id: i + 1,
                initial: run.trace.initial.positions[i],
                position: last.positions[i],
                sensing_weight: scenario.eta[i],
                moving_cost: scenario.xi[i],
                battery: scenario.battery[i],
                sensing_radius: scenario.sensing_radius[i],
            })
            .collect();
        let budget = EnergyBudget::for_lifetime(&sensors, scenario.alpha_power, LIFETIME);
        let reports = check_necessary_conditions(
            &sensors,
            &last.active,
            &grid,
            &density,
            &budget,
            scenario.rc,
            tol_geo,
        );
        for r in &reports {
            total += 1;
            if r.pass {
                passed += 1;
            } else if r.case != ConditionCase::ReactivationFlag {
                geometric_failures += 1;
            }
        }
    }
    let fraction = passed as f64 / total as f64;
    let pass = fraction >= 0.95 && geometric_failures == 0;
    report(5, "first-order optimality diagnostic", pass);
    assert!(
        pass,
        "pass fraction {fraction:.4}, geometric failures {geometric_failures} of {total}"
    );
}

fn sensor_at(id: usize, x: f64, y: f64, eta: f64) -> Sensor<f64> {
    Sensor {
        id,
        initial: Point::new(x, y),
        position: Point::new(x, y),
        sensing_weight: eta,
        moving_cost: 1.0,
        battery: 2.0,
        sensing_radius: 0.2,
    }
}

#[test]
fn criterion_06_weighted_assignment_correctness() {
    // Equal weights match the plain nearest rule cell for cell.
    let scenario = preset("mwsn1").unwrap();
    let region = scenario.polygon().unwrap();
    let grid = IntegrationGrid::new(&region, 256).unwrap();
    let positions = generate_initial_deployment(&region, 32, 0.4, 3).unwrap();
    let sensors: Vec<Sensor<f64>> = positions
        .iter()
        .enumerate()
        .map(|(i, p)| sensor_at(i + 1, p.x, p.y, 1.0))
        .collect();
    let active = vec![true; 32];
    let assignment = assign_mwvd(&sensors, &active, &grid);
    let mut equal_matches = true;
    for (idx, &cell) in grid.cells().iter().enumerate() {
        let mut best = (f64::INFINITY, 0usize);
        for (i, s) in sensors.iter().enumerate() {
            let d = cell.dist_sq(s.position);
            if d < best.0 {
                best = (d, i);
            }
        }
        if assignment.owner(idx) != Some(best.1) {
            equal_matches = false;
            break;
        }
    }

    // Two weighted sensors on a segment: the ownership boundary sits at
    // x = 2/3 to within a cell.
    let square = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap();
    let g = 256usize;
    let fine = IntegrationGrid::new(&square, g).unwrap();
    let pair = vec![sensor_at(1, 0.0, 0.5, 1.0), sensor_at(2, 1.0, 0.5, 4.0)];
    let pair_assignment = assign_mwvd(&pair, &[true, true], &fine);
    let row_y = fine
        .cells()
        .iter()
        .map(|c| c.y)
        .min_by(|a, b| {
            (a - 0.5).abs().partial_cmp(&(b - 0.5).abs()).unwrap()
        })
        .unwrap();
    let mut max_first = f64::NEG_INFINITY;
    let mut min_second = f64::INFINITY;
    for (idx, &cell) in fine.cells().iter().enumerate() {
        if cell.y != row_y {
            continue;
        }
        match pair_assignment.owner(idx) {
            Some(0) => max_first = max_first.max(cell.x),
            Some(1) => min_second = min_second.min(cell.x),
            _ => {}
        }
    }
    let bound = 2.0 / g as f64;
    let boundary_ok =
        (max_first - 2.0 / 3.0).abs() <= bound && (min_second - 2.0 / 3.0).abs() <= bound;

    let pass = equal_matches && boundary_ok;
    report(6, "weighted Voronoi assignment", pass);
    assert!(equal_matches, "equal weights diverged from the nearest rule");
    assert!(
        boundary_ok,
        "weighted boundary at [{max_first}, {min_second}], want 2/3 +- {bound}"
    );
}

#[test]
fn criterion_07_quadrature_accuracy() {
    let square = ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap();
    let g = 256usize;
    let grid = IntegrationGrid::new(&square, g).unwrap();
    let density = vec![1.0; grid.len()];
    let sensors = vec![sensor_at(1, 0.5, 0.5, 1.0)];
    let active = [true];
    let assignment = assign_mwvd(&sensors, &active, &grid);
    let d = distortion(&sensors, &assignment, &grid, &density);
    let quadrature_ok = (d - 1.0 / 6.0).abs() <= 2.0 / g as f64;

    // Parallel-axis identity against the same fixed assignment.
    let moments = cell_moments(&sensors, &assignment, &grid, &density);
    let mut shifted = sensors.clone();
    shifted[0].position = Point::new(0.5 + 0.11, 0.5 - 0.23);
    let d_shifted = distortion(&shifted, &assignment, &grid, &density);
    let predicted = d
        + shifted[0].sensing_weight
            * moments.mass[0]
            * shifted[0].position.dist_sq(moments.centroid[0]);
    let parallel_axis_ok = (d_shifted - predicted).abs() <= 1e-9;

    let pass = quadrature_ok && parallel_axis_ok;
    report(7, "quadrature and parallel-axis identity", pass);
    assert!(quadrature_ok, "distortion {d} vs 1/6");
    assert!(
        parallel_axis_ok,
        "parallel-axis residual {}",
        (d_shifted - predicted).abs()
    );
}

#[test]
fn criterion_08_projection_matches_brute_force() {
    let trials = 1000usize;
    let step = 1e-3;
    let mut worst = 0.0f64;
    let mut pass = true;
    for trial in 0..trials {
        let mut rng = SeededRng::new(500_000 + trial as u64);
        let anchor = Point::new(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        let disk_budget = 1 + (rng.next_u64() % 4) as usize;
        let mut groups: Vec<Vec<Disk<f64>>> = Vec::new();
        let mut remaining = disk_budget;
        while remaining > 0 {
            let take = 1 + (rng.next_u64() as usize % remaining);
            // First disk of the group contains the anchor; the rest only
            // widen the union.
            let mut group = Vec::new();
            for k in 0..take {
                let center = Point::new(
                    anchor.x + rng.uniform(-0.6, 0.6),
                    anchor.y + rng.uniform(-0.6, 0.6),
                );
                let radius = if k == 0 {
                    center.dist(anchor) + rng.uniform(0.05, 0.45)
                } else {
                    rng.uniform(0.1, 0.45)
                };
                group.push(Disk::new(center, radius));
            }
            remaining -= take;
            groups.push(group);
        }
        let mut region = DiskRegion::from_groups(groups);
        if rng.next_f64() < 0.5 {
            region = region.with_cap(Disk::new(anchor, rng.uniform(0.05, 0.7)));
        }
        let target = Point::new(
            anchor.x + rng.uniform(-1.5, 1.5),
            anchor.y + rng.uniform(-1.5, 1.5),
        );
        let proj = project_to_disk_region(target, &region, anchor);
        assert!(!proj.empty_region, "anchored region cannot be empty");
        let projected = proj.point.dist(target);

        let brute = brute_force_min_distance(target, anchor, &region, step);
        let gap = (projected - brute).abs();
        worst = worst.max(gap);
        if gap > 2e-3 {
            pass = false;
        }
    }
    report(8, "projection matches brute-force minima", pass);
    assert!(pass, "worst gap {worst}");
}

/// Grid scan over the region at `step`, cropped to the disk bounding
/// boxes and to the ball around the target that the anchor already
/// achieves.
fn brute_force_min_distance(
    target: Point<f64>,
    anchor: Point<f64>,
    region: &DiskRegion<f64>,
    step: f64,
) -> f64 {
    let mut lo = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut hi = Point::new(f64::INFINITY, f64::INFINITY);
    let mut first_group_bbox = |disks: &[Disk<f64>]| {
        let mut glo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut ghi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for d in disks {
            glo.x = glo.x.min(d.center.x - d.radius);
            glo.y = glo.y.min(d.center.y - d.radius);
            ghi.x = ghi.x.max(d.center.x + d.radius);
            ghi.y = ghi.y.max(d.center.y + d.radius);
        }
        lo.x = lo.x.max(glo.x);
        lo.y = lo.y.max(glo.y);
        hi.x = hi.x.min(ghi.x);
        hi.y = hi.y.min(ghi.y);
    };
    for group in region.groups() {
        first_group_bbox(group);
    }
    if let Some(cap) = region.cap() {
        first_group_bbox(std::slice::from_ref(cap));
    }
    let reach = anchor.dist(target) + 2.0 * step;
    lo.x = lo.x.max(target.x - reach);
    lo.y = lo.y.max(target.y - reach);
    hi.x = hi.x.min(target.x + reach);
    hi.y = hi.y.min(target.y + reach);

    let mut best = anchor.dist(target);
    let nx = ((hi.x - lo.x) / step).ceil().max(0.0) as usize + 1;
    let ny = ((hi.y - lo.y) / step).ceil().max(0.0) as usize + 1;
    for iy in 0..ny {
        for ix in 0..nx {
            let q = Point::new(lo.x + step * ix as f64, lo.y + step * iy as f64);
            if !region.contains(q, 0.0) {
                continue;
            }
            best = best.min(q.dist(target));
        }
    }
    best
}

#[test]
fn criterion_09_beats_scaled_step_baseline() {
    let fx = fixture();
    let ccml: Vec<f64> = fx.ccml[..10]
        .iter()
        .map(|r| r.summary.final_distortion)
        .collect();
    let lloyd: Vec<f64> = fx
        .lloyd
        .iter()
        .map(|r| r.summary.distortion_best_subgraph.unwrap())
        .collect();
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let wins = ccml
        .iter()
        .zip(lloyd.iter())
        .filter(|(c, l)| c < l)
        .count();
    let pass = mean(&ccml) < mean(&lloyd) && wins >= 8;
    report(9, "beats the scaled-step baseline across seeds", pass);
    assert!(
        pass,
        "means {:.4} vs {:.4}, wins {wins}/10",
        mean(&ccml),
        mean(&lloyd)
    );
}

#[test]
fn criterion_10_heterogeneous_low_battery_exclusion() {
    let mut scenario = preset("mwsn3").unwrap();
    scenario.seed = 3;
    assert_eq!(scenario.algorithm, Algorithm::Bccml);
    assert_eq!(scenario.t_target, 1.0);
    let run = run_experiment(&scenario).unwrap();
    let last = run.trace.final_record();
    let low_battery_excluded = (28..32).all(|i| !last.active[i]);
    let lifetime_ok = run.summary.achieved_lifetime >= 1.0 - ENERGY_SLACK;
    let improved = run.summary.final_distortion < run.trace.initial.distortion;

    let mut baseline = scenario.clone();
    baseline.algorithm = Algorithm::LloydAlpha;
    baseline.lloyd_alpha = 0.2;
    baseline.tol = 0.0;
    let baseline_run = run_experiment(&baseline).unwrap();
    let infeasible_reported = (29..=32).all(|id| {
        baseline_run
            .summary
            .warnings
            .iter()
            .any(|w| w.contains(&format!("sensor {id} ")))
    });

    let pass = low_battery_excluded && lifetime_ok && improved && infeasible_reported;
    report(10, "heterogeneous low-battery handling", pass);
    assert!(low_battery_excluded, "sensors 29-32 still active");
    assert!(lifetime_ok, "lifetime {}", run.summary.achieved_lifetime);
    assert!(improved, "distortion did not improve");
    assert!(infeasible_reported, "baseline did not flag the four sensors");
}

const TARGET_SCENARIO: &str = r#"
name = "target-cluster"
algorithm = "ccml"
n = 32
rc = 0.4
t_target = 0.5
seed = 11
region = [[0.0,0.0],[2.125,0.0],[2.9325,1.5],[2.975,1.6],[2.9325,1.7],[2.295,2.1],[0.85,2.3],[0.17,1.2]]
[sensors]
eta = 1.0
xi = 1.0
battery = 5.0
r_s = 0.3
[density]
kind = "from_targets"
[targets]
points = [
  [1.2,1.0],[1.28,1.05],[1.12,1.05],[1.2,0.9],[1.3,0.95],
  [1.45,1.25],[1.53,1.3],[1.37,1.3],[1.45,1.15],[1.55,1.2],
  [1.2,1.5],[1.28,1.55],[1.12,1.55],[1.2,1.4],[1.3,1.45],
  [0.95,1.25],[1.03,1.3],[0.87,1.3],[0.95,1.15],[1.05,1.2],
]
"#;

#[test]
fn criterion_11_full_target_coverage() {
    let scenario = parse_scenario(TARGET_SCENARIO).unwrap();
    let targets = scenario.target_set().unwrap();
    assert_eq!(targets.len(), 20);

    // Feasibility oracle: a witness deployment with one sensor per
    // target plus the remainder stacked on the cluster centers must be
    // inside the region, fully connected, cover every target, and be
    // reachable within every sensor's movement budget.
    let region = scenario.polygon().unwrap();
    let centers = [
        Point::new(1.2, 1.0),
        Point::new(1.45, 1.25),
        Point::new(1.2, 1.5),
        Point::new(0.95, 1.25),
    ];
    let mut witness: Vec<Point<f64>> = targets.targets.iter().map(|t| t.point).collect();
    for extra in 0..(scenario.n - targets.len()) {
        witness.push(centers[extra % centers.len()]);
    }
    assert!(witness_feasible(
        &scenario, &region, &targets, &witness
    ));

    let run = run_experiment(&scenario).unwrap();
    let covered = run.summary.target_coverage.unwrap();
    let pass = covered == 1.0 && run.summary.backbone_size == 32;
    report(11, "constructed instance reaches full target coverage", pass);
    assert_eq!(run.summary.backbone_size, 32);
    assert_eq!(covered, 1.0);
}

fn witness_feasible(
    scenario: &Scenario,
    region: &ConvexPolygon<f64>,
    targets: &TargetSet<f64>,
    witness: &[Point<f64>],
) -> bool {
    if witness.len() != scenario.n {
        return false;
    }
    if !witness.iter().all(|&p| region.contains(p)) {
        return false;
    }
    if backbone_size(&backbone(witness, scenario.rc)) != scenario.n {
        return false;
    }
    let covered = targets.targets.iter().all(|t: &Target<f64>| {
        witness
            .iter()
            .enumerate()
            .any(|(i, &p)| t.point.dist(p) <= scenario.sensing_radius[i])
    });
    if !covered {
        return false;
    }
    // Reachability from the seeded start within each movement budget.
    let start = generate_initial_deployment(region, scenario.n, scenario.rc, scenario.seed)
        .expect("seeded start");
    start.iter().zip(witness).enumerate().all(|(i, (&a, &b))| {
        let budget = (scenario.battery[i] - scenario.alpha_power * scenario.t_target)
            / scenario.xi[i];
        a.dist(b) <= budget
    })
}

#[test]
fn criterion_12_metrics_are_byte_identical_across_runs() {
    let scenario = mwsn1_scenario(Algorithm::Ccml, 5);
    let a = run_experiment(&scenario).unwrap();
    let b = run_experiment(&scenario).unwrap();
    let csv_a = mwsn::harness::render_metrics_csv(&a.trace);
    let csv_b = mwsn::harness::render_metrics_csv(&b.trace);

    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    mwsn::harness::emit_outputs(&a, dir_a.path()).unwrap();
    mwsn::harness::emit_outputs(&b, dir_b.path()).unwrap();
    let bytes_a = std::fs::read(dir_a.path().join("metrics.csv")).unwrap();
    let bytes_b = std::fs::read(dir_b.path().join("metrics.csv")).unwrap();

    let pass = csv_a == csv_b && bytes_a == bytes_b;
    report(12, "identical scenario and seed give identical metrics", pass);
    assert_eq!(csv_a, csv_b);
    assert_eq!(bytes_a, bytes_b);
}
