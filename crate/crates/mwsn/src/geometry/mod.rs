//! Planar primitives: points, convex polygons, disks, and the disk-region
//! membership/projection kernel shared by every constraint-region
//! construction.
//!
//! All functions are pure and safe for concurrent use.

pub mod disk;
pub mod point;
pub mod polygon;
pub mod region;

pub use disk::{
    circle_circle_intersections, nearest_point_on_circle, CircleIntersections, Disk,
    RadialProjection,
};
pub use point::Point;
pub use polygon::{point_in_polygon, ConvexPolygon};
pub use region::{
    project_to_disk_region, project_to_disk_region_clipped, DiskRegion, RegionProjection,
};
