//! Area- and target-coverage metrics, plus the target-driven density
//! builder.

use serde::{Deserialize, Serialize};

use crate::density::{DensityField, GaussianComponent, IntegrationGrid};
use crate::geometry::Point;
use crate::partition::Sensor;
use crate::scalar::Real;

/// Known target location with a comparative importance weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Target<T> {
    pub point: Point<T>,
    pub importance: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetSet<T> {
    pub targets: Vec<Target<T>>,
}

impl<T: Real> TargetSet<T> {
    pub fn new(targets: Vec<Target<T>>) -> Self {
        TargetSet { targets }
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }
}

/// Fraction of region area within sensing range of any active sensor,
/// measured as the covered share of grid-cell weight.
pub fn area_coverage<T: Real>(
    sensors: &[Sensor<T>],
    active: &[bool],
    grid: &IntegrationGrid<T>,
) -> T {
    if grid.is_empty() {
        return T::zero();
    }
    let covered = grid
        .cells()
        .iter()
        .filter(|&&cell| {
            sensors
                .iter()
                .zip(active)
                .any(|(s, &a)| a && cell.dist(s.position) <= s.sensing_radius)
        })
        .count();
    T::from_usize(covered).unwrap() / T::from_usize(grid.len()).unwrap()
}

/// Fraction of targets within sensing range of at least one active
/// sensor. The range test is closed, so a target exactly at distance
/// `sensing_radius` counts as covered.
pub fn target_coverage<T: Real>(
    sensors: &[Sensor<T>],
    active: &[bool],
    targets: &TargetSet<T>,
) -> T {
    if targets.is_empty() {
        return T::zero();
    }
    let covered = targets
        .targets
        .iter()
        .filter(|t| {
            sensors
                .iter()
                .zip(active)
                .any(|(s, &a)| a && t.point.dist(s.position) / s.sensing_radius <= T::one())
        })
        .count();
    T::from_usize(covered).unwrap() / T::from_usize(targets.len()).unwrap()
}

/// Gaussian mixture peaked at the targets, amplitudes taken from the
/// importance weights and a shared length scale.
pub fn gaussian_density_from_targets<T: Real>(
    targets: &TargetSet<T>,
    length_scale: T,
) -> DensityField<T> {
    DensityField::gaussian_mixture(
        targets
            .targets
            .iter()
            .map(|t| GaussianComponent {
                center: t.point,
                amplitude: t.importance,
                length_scale,
            })
            .collect(),
    )
}
