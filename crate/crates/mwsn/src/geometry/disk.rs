use serde::{Deserialize, Serialize};

use crate::geometry::Point;
use crate::scalar::{tol, Real};

/// Closed disk: boundary points are members.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disk<T> {
    pub center: Point<T>,
    pub radius: T,
}

impl<T: Real> Disk<T> {
    #[inline]
    pub fn new(center: Point<T>, radius: T) -> Self {
        debug_assert!(radius >= T::zero(), "disk radius must be non-negative");
        Disk { center, radius }
    }

    /// Closed membership with slack `tolerance`.
    #[inline]
    pub fn contains(&self, q: Point<T>, tolerance: T) -> bool {
        self.center.dist(q) <= self.radius + tolerance
    }

    /// Same disk with the radius reduced by `margin`, clamped at zero.
    #[inline]
    pub fn shrunk(&self, margin: T) -> Self {
        Disk {
            center: self.center,
            radius: (self.radius - margin).max(T::zero()),
        }
    }
}

/// Intersection of two circles (disk boundaries).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CircleIntersections<T> {
    /// Centers and radii coincide within tolerance; no isolated points.
    Coincident,
    Empty,
    Tangent(Point<T>),
    Pair(Point<T>, Point<T>),
}

impl<T: Real> CircleIntersections<T> {
    pub fn points(&self) -> impl Iterator<Item = Point<T>> {
        let arr: [Option<Point<T>>; 2] = match *self {
            CircleIntersections::Coincident | CircleIntersections::Empty => [None, None],
            CircleIntersections::Tangent(p) => [Some(p), None],
            CircleIntersections::Pair(p, q) => [Some(p), Some(q)],
        };
        arr.into_iter().flatten()
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, CircleIntersections::Coincident)
    }
}

/// Real intersection points of the circles bounding `a` and `b`.
///
/// Tangency (center distance within `tol::TANGENCY` of the sum or absolute
/// difference of the radii) collapses to a single point. Coincident circles
/// are reported as degenerate rather than as a continuum.
pub fn circle_circle_intersections<T: Real>(
    a: &Disk<T>,
    b: &Disk<T>,
) -> CircleIntersections<T> {
    let d = a.center.dist(b.center);
    let coincident_tol = T::c(tol::COINCIDENT);
    if d <= coincident_tol {
        if (a.radius - b.radius).abs() <= coincident_tol {
            return CircleIntersections::Coincident;
        }
        return CircleIntersections::Empty;
    }

    let u = (b.center - a.center) / d;
    // Signed distance from a.center to the chord midpoint along u.
    let along = (d * d + a.radius * a.radius - b.radius * b.radius) / (T::c(2.0) * d);
    let chord_mid = a.center + u * along;

    let tangency = T::c(tol::TANGENCY);
    let sum = a.radius + b.radius;
    let diff = (a.radius - b.radius).abs();
    if (d - sum).abs() <= tangency || (d - diff).abs() <= tangency {
        return CircleIntersections::Tangent(chord_mid);
    }
    if d > sum || d < diff {
        return CircleIntersections::Empty;
    }

    let h_sq = a.radius * a.radius - along * along;
    if h_sq <= T::zero() {
        return CircleIntersections::Empty;
    }
    let h = h_sq.sqrt();
    let perp = Point::new(-u.y, u.x);
    CircleIntersections::Pair(chord_mid + perp * h, chord_mid - perp * h)
}

/// Radial projection of `q` onto the boundary circle of `d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RadialProjection<T> {
    Unique(Point<T>),
    /// `q` coincided with the center; every boundary point is equidistant
    /// and the +x direction is chosen.
    CenterTie(Point<T>),
}

impl<T: Real> RadialProjection<T> {
    #[inline]
    pub fn point(&self) -> Point<T> {
        match *self {
            RadialProjection::Unique(p) | RadialProjection::CenterTie(p) => p,
        }
    }
}

/// Nearest point on the circle bounding `d` to `q`. An interior `q`
/// projects radially outward; `q` on the center resolves to +x.
pub fn nearest_point_on_circle<T: Real>(d: &Disk<T>, q: Point<T>) -> RadialProjection<T> {
    let offset = q - d.center;
    let dist = offset.norm();
    if dist <= T::c(tol::COINCIDENT) {
        return RadialProjection::CenterTie(Point::new(d.center.x + d.radius, d.center.y));
    }
    RadialProjection::Unique(d.center + offset * (d.radius / dist))
}
