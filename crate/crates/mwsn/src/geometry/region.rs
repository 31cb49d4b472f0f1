//! Disk-built constraint regions and the nearest-point projection onto them.
//!
//! A region is an intersection of disk unions ("groups"), optionally
//! intersected with a single movement disk ("cap"). Every connectivity
//! constraint region in this crate is expressed this way.

use crate::geometry::disk::{circle_circle_intersections, nearest_point_on_circle, Disk};
use crate::geometry::{ConvexPolygon, Point};
use crate::scalar::{tol, Real};

/// Intersection over `groups` of disk unions, optionally capped by one
/// more disk. Empty `groups` means the whole plane. A group with no disks
/// is unsatisfiable, making the region empty.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskRegion<T> {
    groups: Vec<Vec<Disk<T>>>,
    cap: Option<Disk<T>>,
}

impl<T: Real> DiskRegion<T> {
    pub fn whole_plane() -> Self {
        DiskRegion {
            groups: Vec::new(),
            cap: None,
        }
    }

    pub fn from_groups(groups: Vec<Vec<Disk<T>>>) -> Self {
        DiskRegion { groups, cap: None }
    }

    pub fn with_cap(mut self, cap: Disk<T>) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn groups(&self) -> &[Vec<Disk<T>>] {
        &self.groups
    }

    pub fn cap(&self) -> Option<&Disk<T>> {
        self.cap.as_ref()
    }

    /// A group without disks cannot be satisfied by any point.
    pub fn has_empty_group(&self) -> bool {
        self.groups.iter().any(|g| g.is_empty())
    }

    /// Closed membership: in at least one disk of every group, and in the
    /// cap when present.
    pub fn contains(&self, q: Point<T>, tolerance: T) -> bool {
        if let Some(cap) = &self.cap {
            if !cap.contains(q, tolerance) {
                return false;
            }
        }
        self.groups
            .iter()
            .all(|group| group.iter().any(|d| d.contains(q, tolerance)))
    }

    /// All disks, groups first, then the cap.
    pub fn disks(&self) -> impl Iterator<Item = &Disk<T>> {
        self.groups.iter().flatten().chain(self.cap.iter())
    }

    /// Region with every disk radius reduced by `margin` (clamped at 0).
    pub fn shrunk(&self, margin: T) -> Self {
        DiskRegion {
            groups: self
                .groups
                .iter()
                .map(|g| g.iter().map(|d| d.shrunk(margin)).collect())
                .collect(),
            cap: self.cap.map(|d| d.shrunk(margin)),
        }
    }
}

/// Result of projecting a target onto a disk region.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionProjection<T> {
    pub point: Point<T>,
    /// Set when no candidate passed the membership filter; `point` is then
    /// the fallback.
    pub empty_region: bool,
}

/// Nearest point of `region` to `target`, restricted to `clip` when given.
///
/// The candidate set is the target itself, the fallback, the radial foot of
/// the target on every disk boundary, and all pairwise circle intersection
/// points; the nearest point of a region bounded by circular arcs is always
/// one of these. Candidates are filtered by closed membership with the
/// region tolerance, then the closest to `target` wins, ties broken
/// lexicographically on (x, y).
///
/// The caller guarantees `fallback` is a member; the result is then never
/// farther from `target` than `fallback`. If the filter rejects everything
/// (numerically empty region) the fallback is returned with the
/// `empty_region` flag set.
pub fn project_to_disk_region_clipped<T: Real>(
    target: Point<T>,
    region: &DiskRegion<T>,
    fallback: Point<T>,
    clip: Option<&ConvexPolygon<T>>,
) -> RegionProjection<T> {
    let eps = T::c(tol::MEMBERSHIP);
    let admissible = |q: Point<T>| -> bool {
        region.contains(q, eps) && clip.is_none_or(|poly| poly.contains(q))
    };

    let mut candidates: Vec<Point<T>> = Vec::with_capacity(8);
    candidates.push(target);
    candidates.push(fallback);
    let disks: Vec<&Disk<T>> = region.disks().collect();
    for d in &disks {
        candidates.push(nearest_point_on_circle(d, target).point());
    }
    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            candidates.extend(circle_circle_intersections(disks[i], disks[j]).points());
        }
    }

    let mut best: Option<(T, Point<T>)> = None;
    for &q in &candidates {
        if !admissible(q) {
            continue;
        }
        let d_sq = q.dist_sq(target);
        let better = match &best {
            None => true,
            Some((bd, bp)) => {
                d_sq < *bd || (d_sq == *bd && q.lex_cmp(*bp) == core::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some((d_sq, q));
        }
    }

    match best {
        None => RegionProjection {
            point: fallback,
            empty_region: true,
        },
        Some((d_sq, point)) => {
            // Guards the never-worse-than-fallback contract even when the
            // fallback itself failed the filter by a hair.
            if d_sq > fallback.dist_sq(target) {
                RegionProjection {
                    point: fallback,
                    empty_region: false,
                }
            } else {
                RegionProjection {
                    point,
                    empty_region: false,
                }
            }
        }
    }
}

/// [`project_to_disk_region_clipped`] without a polygon restriction.
pub fn project_to_disk_region<T: Real>(
    target: Point<T>,
    region: &DiskRegion<T>,
    fallback: Point<T>,
) -> RegionProjection<T> {
    project_to_disk_region_clipped(target, region, fallback, None)
}
