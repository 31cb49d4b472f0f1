//! Event-density fields and the midpoint-quadrature grid used for every
//! cell integral.
//!
//! The grid stores the cell centers of a GxG subdivision of the region
//! bounding box that fall inside the polygon, in row-major order. That
//! fixed ordering makes every downstream reduction deterministic.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geometry::{ConvexPolygon, Point};
use crate::scalar::Real;

/// Gaussian bump `amplitude * exp(-|q - center|^2 / length_scale^2)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussianComponent<T> {
    pub center: Point<T>,
    pub amplitude: T,
    pub length_scale: T,
}

/// Regular grid of samples looked up by nearest cell, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TabulatedField<T> {
    pub origin: Point<T>,
    pub dx: T,
    pub dy: T,
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<T>,
}

impl<T: Real> TabulatedField<T> {
    fn eval(&self, q: Point<T>) -> T {
        let fx = ((q.x - self.origin.x) / self.dx).floor();
        let fy = ((q.y - self.origin.y) / self.dy).floor();
        let ix = fx.max(T::zero()).to_usize().unwrap_or(0).min(self.nx - 1);
        let iy = fy.max(T::zero()).to_usize().unwrap_or(0).min(self.ny - 1);
        self.values[iy * self.nx + ix]
    }
}

/// Pointwise event density over the region.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DensityField<T> {
    Uniform { value: T },
    GaussianMixture { components: Vec<GaussianComponent<T>> },
    Tabulated(TabulatedField<T>),
}

impl<T: Real> DensityField<T> {
    pub fn uniform(value: T) -> Self {
        DensityField::Uniform { value }
    }

    pub fn gaussian_mixture(components: Vec<GaussianComponent<T>>) -> Self {
        DensityField::GaussianMixture { components }
    }

    /// Density at `q`. Always non-negative for valid parameters.
    pub fn eval(&self, q: Point<T>) -> T {
        match self {
            DensityField::Uniform { value } => *value,
            DensityField::GaussianMixture { components } => components
                .iter()
                .map(|c| {
                    let d_sq = q.dist_sq(c.center);
                    c.amplitude * (-d_sq / (c.length_scale * c.length_scale)).exp()
                })
                .sum(),
            DensityField::Tabulated(t) => t.eval(q),
        }
    }

    /// Density sampled at every grid cell center, in grid order.
    pub fn sample(&self, grid: &IntegrationGrid<T>) -> Vec<T> {
        grid.cells().iter().map(|&c| self.eval(c)).collect()
    }
}

/// Convenience alias for [`DensityField::eval`].
#[inline]
pub fn eval_density<T: Real>(field: &DensityField<T>, q: Point<T>) -> T {
    field.eval(q)
}

/// Minimum grid resolution accepted by the validated constructor.
pub const MIN_GRID_RESOLUTION: usize = 8;

/// Midpoint-quadrature grid over a convex polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegrationGrid<T> {
    bbox_min: Point<T>,
    bbox_max: Point<T>,
    resolution: usize,
    cell_weight: T,
    cells: Vec<Point<T>>,
}

impl<T: Real> IntegrationGrid<T> {
    /// Builds the grid, rejecting resolutions below
    /// [`MIN_GRID_RESOLUTION`].
    pub fn new(poly: &ConvexPolygon<T>, resolution: usize) -> Result<Self, Error> {
        if resolution < MIN_GRID_RESOLUTION {
            return Err(Error::config(
                "grid",
                format!("resolution {resolution} below minimum {MIN_GRID_RESOLUTION}"),
            ));
        }
        Ok(Self::with_resolution_unchecked(poly, resolution))
    }

    /// Same construction without the resolution floor. Quadrature error is
    /// O(1/G); tiny grids are only useful for hand-checkable cases.
    pub(crate) fn with_resolution_unchecked(poly: &ConvexPolygon<T>, resolution: usize) -> Self {
        assert!(resolution >= 1);
        let (lo, hi) = poly.bbox();
        let g = T::from_usize(resolution).unwrap();
        let dx = (hi.x - lo.x) / g;
        let dy = (hi.y - lo.y) / g;
        let half = T::c(0.5);
        let mut cells = Vec::new();
        for iy in 0..resolution {
            let y = lo.y + dy * (T::from_usize(iy).unwrap() + half);
            for ix in 0..resolution {
                let x = lo.x + dx * (T::from_usize(ix).unwrap() + half);
                let q = Point::new(x, y);
                if poly.contains(q) {
                    cells.push(q);
                }
            }
        }
        IntegrationGrid {
            bbox_min: lo,
            bbox_max: hi,
            resolution,
            cell_weight: dx * dy,
            cells,
        }
    }

    pub fn cells(&self) -> &[Point<T>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Area weight shared by all cells (bbox area / G^2).
    pub fn cell_weight(&self) -> T {
        self.cell_weight
    }

    pub fn total_weight(&self) -> T {
        self.cell_weight * T::from_usize(self.cells.len()).unwrap()
    }

    pub fn bbox(&self) -> (Point<T>, Point<T>) {
        (self.bbox_min, self.bbox_max)
    }

    /// Diagonal of one grid cell; the geometric resolution limit of any
    /// quantity read off this grid.
    pub fn cell_diagonal(&self) -> T {
        let g = T::from_usize(self.resolution).unwrap();
        let dx = (self.bbox_max.x - self.bbox_min.x) / g;
        let dy = (self.bbox_max.y - self.bbox_min.y) / g;
        (dx * dx + dy * dy).sqrt()
    }
}
