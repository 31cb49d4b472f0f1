use crate::error::Error;
use crate::geometry::Point;
use crate::scalar::{tol, Real};

/// Strictly convex polygon with counter-clockwise vertices.
///
/// Containment counts the boundary as inside (closed region).
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Real> ConvexPolygon<T> {
    /// Validates vertex count, finiteness, orientation, and strict
    /// convexity (consecutive edge cross products all positive beyond the
    /// polygon tolerance).
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon(
                "vertices must be finite".to_string(),
            ));
        }
        let n = vertices.len();
        let eps = T::c(tol::POLYGON);
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let cross = (b - a).cross(c - b);
            if cross <= eps {
                return Err(Error::InvalidPolygon(format!(
                    "not strictly convex counter-clockwise at vertex {} (cross = {:?})",
                    (i + 1) % n,
                    cross
                )));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    /// Closed containment with the default polygon tolerance.
    #[inline]
    pub fn contains(&self, q: Point<T>) -> bool {
        self.contains_with_tol(q, T::c(tol::POLYGON))
    }

    /// Closed containment: every half-plane test passes within `tolerance`.
    pub fn contains_with_tol(&self, q: Point<T>, tolerance: T) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (b - a).cross(q - a) < -tolerance {
                return false;
            }
        }
        true
    }

    /// Axis-aligned bounding box as (min corner, max corner).
    pub fn bbox(&self) -> (Point<T>, Point<T>) {
        let mut min = self.vertices[0];
        let mut max = self.vertices[0];
        for v in &self.vertices[1..] {
            min.x = min.x.min(v.x);
            min.y = min.y.min(v.y);
            max.x = max.x.max(v.x);
            max.y = max.y.max(v.y);
        }
        (min, max)
    }

    /// Shoelace area (positive for the counter-clockwise orientation
    /// enforced by the constructor).
    pub fn area(&self) -> T {
        let n = self.vertices.len();
        let mut twice: T = T::zero();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            twice += a.cross(b);
        }
        twice / T::c(2.0)
    }
}

/// True iff `q` lies inside or on the boundary of `poly`.
#[inline]
pub fn point_in_polygon<T: Real>(q: Point<T>, poly: &ConvexPolygon<T>) -> bool {
    poly.contains(q)
}
