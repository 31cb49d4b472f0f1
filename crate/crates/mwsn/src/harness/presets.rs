//! Built-in scenarios over the standard eight-vertex benchmark region.
//!
//! mwsn1: homogeneous fleet, uniform density.
//! mwsn2: two sensor classes with different sensing weights, moving
//!        costs, and sensing radii; uniform density.
//! mwsn3: as mwsn2 but four sensors start with low batteries, and the
//!        density is a five-peak Gaussian mixture.

use crate::algorithms::{BccmlRule, StepCapRule};
use crate::density::{DensityField, GaussianComponent};
use crate::error::Error;
use crate::geometry::Point;

use super::config::{Algorithm, Scenario};

/// Benchmark region vertices, counter-clockwise.
pub const BENCHMARK_REGION: [[f64; 2]; 8] = [
    [0.0, 0.0],
    [2.125, 0.0],
    [2.9325, 1.5],
    [2.975, 1.6],
    [2.9325, 1.7],
    [2.295, 2.1],
    [0.85, 2.3],
    [0.17, 1.2],
];

/// Peaks of the benchmark five-component density.
pub const BENCHMARK_DENSITY_CENTERS: [[f64; 2]; 5] = [
    [2.0, 0.25],
    [1.0, 2.25],
    [1.9, 1.9],
    [2.35, 1.25],
    [0.1, 0.1],
];

/// Five Gaussian bumps of the form 5 exp(6(-(x-xc)^2 - (y-yc)^2)):
/// amplitude 5 and length scale 1/sqrt(6).
pub fn benchmark_density() -> DensityField<f64> {
    let scale = 1.0 / 6.0f64.sqrt();
    DensityField::gaussian_mixture(
        BENCHMARK_DENSITY_CENTERS
            .iter()
            .map(|c| GaussianComponent {
                center: Point::new(c[0], c[1]),
                amplitude: 5.0,
                length_scale: scale,
            })
            .collect(),
    )
}

fn base(name: &str) -> Scenario {
    Scenario {
        schema_version: "1".to_string(),
        name: name.to_string(),
        algorithm: Algorithm::Ccml,
        region: BENCHMARK_REGION.to_vec(),
        n: 32,
        rc: 0.4,
        alpha_power: 1.0,
        t_target: 1.3,
        grid: 256,
        max_iters: 100,
        seed: 1,
        tol: crate::scalar::tol::CONVERGENCE,
        eta: vec![1.0; 32],
        xi: vec![1.0; 32],
        battery: vec![2.0; 32],
        sensing_radius: vec![0.2; 32],
        density: DensityField::uniform(1.0),
        targets: None,
        lloyd_alpha: 0.2,
        dcml_step_cap: StepCapRule::Constant { value: 0.2 },
        exact_sweep: false,
        bccml_rule: BccmlRule::LargestDecrease,
        bccml_eval_horizon: 10,
    }
}

/// Two-class parameter split: ids 1-8 get `first`, ids 9-32 get `rest`.
fn split(first: f64, rest: f64) -> Vec<f64> {
    let mut v = vec![first; 8];
    v.resize(32, rest);
    v
}

pub fn preset(name: &str) -> Result<Scenario, Error> {
    match name {
        "mwsn1" => Ok(base("mwsn1")),
        "mwsn2" => {
            let mut s = base("mwsn2");
            s.algorithm = Algorithm::Bccml;
            s.eta = split(1.0, 4.0);
            s.xi = split(2.0, 1.0);
            s.sensing_radius = split(0.3, 0.15);
            Ok(s)
        }
        "mwsn3" => {
            let mut s = base("mwsn3");
            s.algorithm = Algorithm::Bccml;
            s.t_target = 1.0;
            s.eta = split(1.0, 4.0);
            s.xi = split(2.0, 1.0);
            s.sensing_radius = split(0.3, 0.15);
            s.battery = {
                let mut b = vec![2.0; 28];
                b.extend([0.8; 4]);
                b
            };
            s.density = benchmark_density();
            Ok(s)
        }
        other => Err(Error::config(
            "preset",
            format!("unknown preset `{other}` (expected mwsn1|mwsn2|mwsn3)"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for name in ["mwsn1", "mwsn2", "mwsn3"] {
            let s = preset(name).unwrap();
            s.validate().unwrap();
            assert_eq!(s.n, 32);
        }
        assert!(preset("mwsn9").is_err());
    }

    #[test]
    fn benchmark_region_quadrature_area() {
        use crate::density::IntegrationGrid;
        let s = preset("mwsn1").unwrap();
        let poly = s.polygon().unwrap();
        let grid = IntegrationGrid::new(&poly, 256).unwrap();
        let rel = (grid.total_weight() - poly.area()).abs() / poly.area();
        assert!(rel <= 0.02, "relative area error {rel}");
    }

    #[test]
    fn mwsn1_is_homogeneous() {
        let s = preset("mwsn1").unwrap();
        assert!(s.eta.iter().all(|&e| e == 1.0));
        assert!(s.battery.iter().all(|&e| e == 2.0));
    }

    #[test]
    fn mwsn3_low_battery_tail() {
        let s = preset("mwsn3").unwrap();
        assert_eq!(&s.battery[28..], &[0.8; 4]);
        assert_eq!(&s.battery[..28], &vec![2.0; 28][..]);
        assert_eq!(&s.eta[..8], &[1.0; 8]);
        assert_eq!(&s.eta[8..], &[4.0; 24][..]);
        assert_eq!(&s.xi[..8], &[2.0; 8]);
        assert_eq!(&s.sensing_radius[8..], &[0.15; 24][..]);
        // Each peak evaluates to its amplitude plus small cross-terms from
        // the other four bumps.
        for c in BENCHMARK_DENSITY_CENTERS {
            let v = s.density.eval(Point::new(c[0], c[1]));
            assert!((5.0..5.2).contains(&v), "peak value {v} at {c:?}");
        }
    }
}
