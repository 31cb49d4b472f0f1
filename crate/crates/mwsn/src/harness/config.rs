//! Scenario schema: the TOML input format, the fully resolved scenario,
//! and the loader. See `docs/schema.md` for the file format.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algorithms::{BccmlRule, StepCapRule};
use crate::coverage::{gaussian_density_from_targets, Target, TargetSet};
use crate::density::{DensityField, GaussianComponent, TabulatedField};
use crate::error::Error;
use crate::geometry::{ConvexPolygon, Point};
use crate::partition::{Deployment, Sensor};
use crate::scalar::tol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Ccml,
    Bccml,
    Dcml,
    LloydAlpha,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Ccml => "ccml",
            Algorithm::Bccml => "bccml",
            Algorithm::Dcml => "dcml",
            Algorithm::LloydAlpha => "lloyd_alpha",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ccml" => Ok(Algorithm::Ccml),
            "bccml" => Ok(Algorithm::Bccml),
            "dcml" => Ok(Algorithm::Dcml),
            "lloyd_alpha" | "lloyd-alpha" => Ok(Algorithm::LloydAlpha),
            other => Err(Error::config(
                "algorithm",
                format!("unknown algorithm `{other}` (expected ccml|bccml|dcml|lloyd_alpha)"),
            )),
        }
    }
}

/// Fully resolved, serializable scenario. Embedded verbatim in trace
/// files so recorded runs can be re-verified.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Scenario {
    pub schema_version: String,
    pub name: String,
    pub algorithm: Algorithm,
    /// Counter-clockwise region vertices.
    pub region: Vec<[f64; 2]>,
    pub n: usize,
    pub rc: f64,
    pub alpha_power: f64,
    pub t_target: f64,
    pub grid: usize,
    pub max_iters: usize,
    pub seed: u64,
    /// Convergence displacement threshold; zero disables early stop.
    pub tol: f64,
    pub eta: Vec<f64>,
    pub xi: Vec<f64>,
    pub battery: Vec<f64>,
    pub sensing_radius: Vec<f64>,
    pub density: DensityField<f64>,
    pub targets: Option<TargetSet<f64>>,
    pub lloyd_alpha: f64,
    pub dcml_step_cap: StepCapRule<f64>,
    pub exact_sweep: bool,
    pub bccml_rule: BccmlRule,
    pub bccml_eval_horizon: usize,
}

impl Scenario {
    pub fn polygon(&self) -> Result<ConvexPolygon<f64>, Error> {
        ConvexPolygon::new(self.region.iter().map(|v| Point::new(v[0], v[1])).collect())
    }

    pub fn target_set(&self) -> Option<TargetSet<f64>> {
        self.targets.clone()
    }

    /// Builds the fleet at the given initial positions.
    pub fn deployment(&self, positions: &[Point<f64>]) -> Result<Deployment<f64>, Error> {
        if positions.len() != self.n {
            return Err(Error::Scenario(format!(
                "expected {} positions, got {}",
                self.n,
                positions.len()
            )));
        }
        let sensors = (0..self.n)
            .map(|i| Sensor {
                id: i + 1,
                initial: positions[i],
                position: positions[i],
                sensing_weight: self.eta[i],
                moving_cost: self.xi[i],
                battery: self.battery[i],
                sensing_radius: self.sensing_radius[i],
            })
            .collect();
        let deployment = Deployment {
            sensors,
            region: self.polygon()?,
            comm_range: self.rc,
        };
        deployment.validate()?;
        Ok(deployment)
    }

    // The negated comparisons reject NaN parameters.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), Error> {
        let check_vec = |key: &str, v: &[f64], strictly_positive: bool| -> Result<(), Error> {
            if v.len() != self.n {
                return Err(Error::config(
                    format!("sensors.{key}"),
                    format!("expected {} entries, got {}", self.n, v.len()),
                ));
            }
            for (i, &x) in v.iter().enumerate() {
                let ok = if strictly_positive { x > 0.0 } else { x >= 0.0 };
                if !ok || !x.is_finite() {
                    return Err(Error::config(
                        format!("sensors.{key}[{}]", i + 1),
                        format!("invalid value {x}"),
                    ));
                }
            }
            Ok(())
        };
        if self.n == 0 {
            return Err(Error::config("n", "need at least one sensor"));
        }
        if !(self.rc > 0.0) {
            return Err(Error::config("rc", "communication range must be positive"));
        }
        if !(self.alpha_power > 0.0) {
            return Err(Error::config("alpha_power", "must be positive"));
        }
        if self.t_target < 0.0 {
            return Err(Error::config("t_target", "must be non-negative"));
        }
        check_vec("eta", &self.eta, true)?;
        check_vec("xi", &self.xi, true)?;
        check_vec("battery", &self.battery, false)?;
        check_vec("r_s", &self.sensing_radius, true)?;
        self.polygon()?;
        if let Some(t) = &self.targets {
            let poly = self.polygon()?;
            for (i, target) in t.targets.iter().enumerate() {
                if !poly.contains(target.point) {
                    return Err(Error::config(
                        format!("targets.points[{}]", i + 1),
                        "target outside the region",
                    ));
                }
                if !(target.importance > 0.0) {
                    return Err(Error::config(
                        format!("targets.importance[{}]", i + 1),
                        "importance must be positive",
                    ));
                }
            }
        }
        if !(self.lloyd_alpha > 0.0 && self.lloyd_alpha <= 1.0) {
            return Err(Error::config("lloyd.alpha_step", "must lie in (0, 1]"));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Input file schema
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    // Accepted for forward compatibility; only version "1" exists.
    #[allow(dead_code)]
    schema_version: Option<String>,
    name: Option<String>,
    algorithm: Option<String>,
    n: usize,
    rc: f64,
    alpha_power: Option<f64>,
    t_target: f64,
    grid: Option<usize>,
    max_iters: Option<usize>,
    seed: Option<u64>,
    tol: Option<f64>,
    region: Vec<[f64; 2]>,
    sensors: SensorsSection,
    density: Option<DensitySection>,
    targets: Option<TargetsSection>,
    lloyd: Option<LloydSection>,
    dcml: Option<DcmlSection>,
    ccml: Option<CcmlSection>,
    bccml: Option<BccmlSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SensorsSection {
    eta: ParamSpec,
    xi: ParamSpec,
    battery: ParamSpec,
    r_s: ParamSpec,
}

/// Scalar applied to all sensors, one value per sensor, or group rules
/// keyed by inclusive 1-based id ranges like `"9-32"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ParamSpec {
    Scalar(f64),
    Vector(Vec<f64>),
    Groups(Vec<GroupRule>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupRule {
    ids: String,
    value: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DensitySection {
    kind: String,
    value: Option<f64>,
    components: Option<Vec<ComponentSection>>,
    length_scale: Option<f64>,
    origin: Option<[f64; 2]>,
    dx: Option<f64>,
    dy: Option<f64>,
    nx: Option<usize>,
    ny: Option<usize>,
    values: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentSection {
    center: [f64; 2],
    amplitude: f64,
    length_scale: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TargetsSection {
    points: Vec<[f64; 2]>,
    importance: Option<ImportanceSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ImportanceSpec {
    Scalar(f64),
    Vector(Vec<f64>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LloydSection {
    alpha_step: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DcmlSection {
    step_cap: Option<StepCapRule<f64>>,
    tol: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CcmlSection {
    exact_sweep: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BccmlSection {
    rule: Option<BccmlRule>,
    eval_horizon: Option<usize>,
}

fn resolve_param(key: &str, spec: &ParamSpec, n: usize) -> Result<Vec<f64>, Error> {
    match spec {
        ParamSpec::Scalar(v) => Ok(vec![*v; n]),
        ParamSpec::Vector(v) => {
            if v.len() != n {
                return Err(Error::config(
                    format!("sensors.{key}"),
                    format!("expected {n} entries, got {}", v.len()),
                ));
            }
            Ok(v.clone())
        }
        ParamSpec::Groups(rules) => {
            let mut out: Vec<Option<f64>> = vec![None; n];
            for rule in rules {
                let (lo, hi) = parse_id_range(key, &rule.ids, n)?;
                for slot in &mut out[lo - 1..hi] {
                    *slot = Some(rule.value);
                }
            }
            out.into_iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| {
                        Error::config(
                            format!("sensors.{key}"),
                            format!("group rules leave sensor {} unset", i + 1),
                        )
                    })
                })
                .collect()
        }
    }
}

/// Parses `"a-b"` or `"a"` as an inclusive 1-based id range.
fn parse_id_range(key: &str, spec: &str, n: usize) -> Result<(usize, usize), Error> {
    let bad = || {
        Error::config(
            format!("sensors.{key}.ids"),
            format!("cannot parse id range `{spec}`"),
        )
    };
    let (lo, hi) = match spec.split_once('-') {
        Some((a, b)) => (
            a.trim().parse::<usize>().map_err(|_| bad())?,
            b.trim().parse::<usize>().map_err(|_| bad())?,
        ),
        None => {
            let v = spec.trim().parse::<usize>().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || hi < lo || hi > n {
        return Err(Error::config(
            format!("sensors.{key}.ids"),
            format!("range `{spec}` out of bounds for {n} sensors"),
        ));
    }
    Ok((lo, hi))
}

fn resolve_targets(section: &TargetsSection) -> Result<TargetSet<f64>, Error> {
    let m = section.points.len();
    if m == 0 {
        return Err(Error::config("targets.points", "must not be empty"));
    }
    let importance = match &section.importance {
        None => vec![1.0; m],
        Some(ImportanceSpec::Scalar(v)) => vec![*v; m],
        Some(ImportanceSpec::Vector(v)) => {
            if v.len() != m {
                return Err(Error::config(
                    "targets.importance",
                    format!("expected {m} entries, got {}", v.len()),
                ));
            }
            v.clone()
        }
    };
    Ok(TargetSet::new(
        section
            .points
            .iter()
            .zip(&importance)
            .map(|(p, &imp)| Target {
                point: Point::new(p[0], p[1]),
                importance: imp,
            })
            .collect(),
    ))
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn resolve_density(
    section: Option<&DensitySection>,
    targets: Option<&TargetSet<f64>>,
    sensing_radius: &[f64],
) -> Result<DensityField<f64>, Error> {
    let Some(d) = section else {
        return Ok(DensityField::uniform(1.0));
    };
    match d.kind.as_str() {
        "uniform" => {
            let value = d.value.unwrap_or(1.0);
            if !(value > 0.0) {
                return Err(Error::config("density.value", "must be positive"));
            }
            Ok(DensityField::uniform(value))
        }
        "gaussian_mixture" => {
            let components = d
                .components
                .as_ref()
                .ok_or_else(|| Error::config("density.components", "required for gaussian_mixture"))?
                .iter()
                .map(|c| GaussianComponent {
                    center: Point::new(c.center[0], c.center[1]),
                    amplitude: c.amplitude,
                    length_scale: c.length_scale,
                })
                .collect::<Vec<_>>();
            for (i, c) in components.iter().enumerate() {
                if !(c.amplitude > 0.0) || !(c.length_scale > 0.0) {
                    return Err(Error::config(
                        format!("density.components[{}]", i + 1),
                        "amplitude and length_scale must be positive",
                    ));
                }
            }
            Ok(DensityField::gaussian_mixture(components))
        }
        "from_targets" => {
            let t = targets.ok_or_else(|| {
                Error::config("density.kind", "from_targets requires a [targets] section")
            })?;
            // Default length scale: the smallest sensing radius in the fleet.
            let scale = match d.length_scale {
                Some(s) if s > 0.0 => s,
                Some(_) => {
                    return Err(Error::config("density.length_scale", "must be positive"))
                }
                None => sensing_radius.iter().cloned().fold(f64::INFINITY, f64::min),
            };
            Ok(gaussian_density_from_targets(t, scale))
        }
        "tabulated" => {
            let need = |name: &str| Error::config(format!("density.{name}"), "required for tabulated");
            let origin = d.origin.ok_or_else(|| need("origin"))?;
            let nx = d.nx.ok_or_else(|| need("nx"))?;
            let ny = d.ny.ok_or_else(|| need("ny"))?;
            let values = d.values.clone().ok_or_else(|| need("values"))?;
            if values.len() != nx * ny {
                return Err(Error::config(
                    "density.values",
                    format!("expected {} values, got {}", nx * ny, values.len()),
                ));
            }
            Ok(DensityField::Tabulated(TabulatedField {
                origin: Point::new(origin[0], origin[1]),
                dx: d.dx.ok_or_else(|| need("dx"))?,
                dy: d.dy.ok_or_else(|| need("dy"))?,
                nx,
                ny,
                values,
            }))
        }
        other => Err(Error::config(
            "density.kind",
            format!("unknown kind `{other}`"),
        )),
    }
}

fn resolve(file: ScenarioFile) -> Result<Scenario, Error> {
    let n = file.n;
    let eta = resolve_param("eta", &file.sensors.eta, n)?;
    let xi = resolve_param("xi", &file.sensors.xi, n)?;
    let battery = resolve_param("battery", &file.sensors.battery, n)?;
    let sensing_radius = resolve_param("r_s", &file.sensors.r_s, n)?;
    let targets = file.targets.as_ref().map(resolve_targets).transpose()?;
    let density = resolve_density(file.density.as_ref(), targets.as_ref(), &sensing_radius)?;
    let algorithm = Algorithm::from_str(file.algorithm.as_deref().unwrap_or("ccml"))?;
    let tol = file
        .tol
        .or_else(|| file.dcml.as_ref().and_then(|d| d.tol))
        .unwrap_or(match algorithm {
            // The simultaneous scheme runs its full stop schedule by
            // default; redundant stops cost no energy.
            Algorithm::Dcml | Algorithm::LloydAlpha => 0.0,
            _ => tol::CONVERGENCE,
        });
    let rc = file.rc;
    let scenario = Scenario {
        schema_version: "1".to_string(),
        name: file.name.unwrap_or_else(|| "custom".to_string()),
        algorithm,
        region: file.region,
        n,
        rc,
        alpha_power: file.alpha_power.unwrap_or(1.0),
        t_target: file.t_target,
        grid: file.grid.unwrap_or(256),
        max_iters: file.max_iters.unwrap_or(100),
        seed: file.seed.unwrap_or(1),
        tol,
        eta,
        xi,
        battery,
        sensing_radius,
        density,
        targets,
        lloyd_alpha: file.lloyd.map(|l| l.alpha_step).unwrap_or(0.2),
        dcml_step_cap: file
            .dcml
            .and_then(|d| d.step_cap)
            .unwrap_or(StepCapRule::Constant { value: rc / 2.0 }),
        exact_sweep: file
            .ccml
            .and_then(|c| c.exact_sweep)
            .unwrap_or(false),
        bccml_rule: file
            .bccml
            .as_ref()
            .and_then(|b| b.rule)
            .unwrap_or(BccmlRule::LargestDecrease),
        bccml_eval_horizon: file
            .bccml
            .as_ref()
            .and_then(|b| b.eval_horizon)
            .unwrap_or(10),
    };
    scenario.validate()?;
    Ok(scenario)
}

/// Loads and resolves a scenario file, reporting the offending key on
/// schema violations.
pub fn load_scenario(path: &Path) -> Result<Scenario, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::io(path.display().to_string(), e))?;
    let file: ScenarioFile = toml::from_str(&text)
        .map_err(|e| Error::config(path.display().to_string(), e.to_string()))?;
    resolve(file)
}

/// Parses a scenario from TOML text (used by tests and presets).
pub fn parse_scenario(text: &str) -> Result<Scenario, Error> {
    let file: ScenarioFile =
        toml::from_str(text).map_err(|e| Error::config("<inline>", e.to_string()))?;
    resolve(file)
}
