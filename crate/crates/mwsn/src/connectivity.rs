//! Communication graph machinery and the constraint-region constructors.
//!
//! Index convention: sensors are addressed by 0-based slice index
//! throughout; the 1-based ids used in reports are index + 1. The access
//! point is index 0. Edge tests use the closed inequality
//! `distance <= comm_range`.

use crate::error::Error;
use crate::geometry::{Disk, DiskRegion, Point};
use crate::scalar::Real;

#[inline]
fn linked<T: Real>(a: Point<T>, b: Point<T>, comm_range: T) -> bool {
    a.dist(b) <= comm_range
}

/// One-hop neighbors of `n` among the flagged members.
pub fn neighbors_of<T: Real>(
    n: usize,
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
) -> Vec<usize> {
    (0..positions.len())
        .filter(|&m| m != n && members[m] && linked(positions[n], positions[m], comm_range))
        .collect()
}

/// Membership flags of the access-point component within `members`.
pub fn backbone_within<T: Real>(
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
) -> Vec<bool> {
    let n = positions.len();
    let mut reached = vec![false; n];
    if n == 0 || !members[0] {
        return reached;
    }
    let mut queue = vec![0usize];
    reached[0] = true;
    while let Some(v) = queue.pop() {
        for u in 0..n {
            if !reached[u] && members[u] && linked(positions[v], positions[u], comm_range) {
                reached[u] = true;
                queue.push(u);
            }
        }
    }
    reached
}

/// Members reachable from the access point (index 0).
pub fn backbone<T: Real>(positions: &[Point<T>], comm_range: T) -> Vec<bool> {
    backbone_within(positions, &vec![true; positions.len()], comm_range)
}

pub fn backbone_size(flags: &[bool]) -> usize {
    flags.iter().filter(|&&b| b).count()
}

/// Connected components of the graph induced on `members`. Each
/// component is sorted ascending; components are ordered by their
/// smallest member.
pub fn connected_components<T: Real>(
    members: &[bool],
    positions: &[Point<T>],
    comm_range: T,
) -> Vec<Vec<usize>> {
    let count = positions.len();
    let mut seen = vec![false; count];
    let mut components = Vec::new();
    for start in 0..count {
        if seen[start] || !members[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut cursor = 0;
        while cursor < comp.len() {
            let v = comp[cursor];
            cursor += 1;
            for u in 0..count {
                if !seen[u] && members[u] && linked(positions[v], positions[u], comm_range) {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components.sort_by_key(|c| c[0]);
    components
}

/// Connected components of the graph induced on `members` minus `n`.
pub fn components_excluding<T: Real>(
    members: &[bool],
    n: usize,
    positions: &[Point<T>],
    comm_range: T,
) -> Vec<Vec<usize>> {
    debug_assert!(members[n], "excluded sensor must be a member");
    let mut remaining = members.to_vec();
    remaining[n] = false;
    connected_components(&remaining, positions, comm_range)
}

/// Placements of `n` that keep the member set connected: one disk-union
/// group per component of the remaining members, disks of radius
/// `comm_range` at their positions. Zero components (singleton member
/// set) yields the whole plane.
pub fn desired_region<T: Real>(
    n: usize,
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
) -> DiskRegion<T> {
    let components = components_excluding(members, n, positions, comm_range);
    if components.is_empty() {
        return DiskRegion::whole_plane();
    }
    DiskRegion::from_groups(
        components
            .into_iter()
            .map(|comp| {
                comp.into_iter()
                    .map(|j| Disk::new(positions[j], comm_range))
                    .collect()
            })
            .collect(),
    )
}

/// Desired region intersected with the movement-budget disk around the
/// initial position.
pub fn feasible_region<T: Real>(
    n: usize,
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
    initial: Point<T>,
    budget_radius: T,
) -> DiskRegion<T> {
    desired_region(n, positions, members, comm_range)
        .with_cap(Disk::new(initial, budget_radius.max(T::zero())))
}

/// Locally computable approximation of the desired region: each
/// component's disks are restricted to one-hop neighbors of `n`. A
/// component with no neighbor of `n` leaves an empty group, making the
/// region empty.
pub fn approx_desired_region<T: Real>(
    n: usize,
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
) -> DiskRegion<T> {
    let components = components_excluding(members, n, positions, comm_range);
    if components.is_empty() {
        return DiskRegion::whole_plane();
    }
    DiskRegion::from_groups(
        components
            .into_iter()
            .map(|comp| {
                comp.into_iter()
                    .filter(|&j| linked(positions[n], positions[j], comm_range))
                    .map(|j| Disk::new(positions[j], comm_range))
                    .collect()
            })
            .collect(),
    )
}

/// Approximated desired region capped by the movement-budget disk.
pub fn approx_feasible_region<T: Real>(
    n: usize,
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
    initial: Point<T>,
    budget_radius: T,
) -> DiskRegion<T> {
    approx_desired_region(n, positions, members, comm_range)
        .with_cap(Disk::new(initial, budget_radius.max(T::zero())))
}

/// True iff `q` is within communication range of any sensor outside the
/// member set.
pub fn external_field_membership<T: Real>(
    q: Point<T>,
    positions: &[Point<T>],
    members: &[bool],
    comm_range: T,
) -> bool {
    positions
        .iter()
        .zip(members)
        .any(|(&p, &m)| !m && p.dist(q) <= comm_range)
}

/// Undirected MST edge; `a < b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MstEdge<T> {
    pub a: usize,
    pub b: usize,
    pub length: T,
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Euclidean minimum spanning tree of the communication graph over all
/// positions. Kruskal over edges `<= comm_range`; equal lengths are
/// ordered by (smaller index, larger index) so the tree is deterministic.
/// Errors if the graph is disconnected.
pub fn euclidean_mst<T: Real>(
    positions: &[Point<T>],
    comm_range: T,
) -> Result<Vec<MstEdge<T>>, Error> {
    let n = positions.len();
    let mut edges: Vec<MstEdge<T>> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let length = positions[a].dist(positions[b]);
            if length <= comm_range {
                edges.push(MstEdge { a, b, length });
            }
        }
    }
    edges.sort_by(|x, y| {
        x.length
            .partial_cmp(&y.length)
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(x.a.cmp(&y.a))
            .then(x.b.cmp(&y.b))
    });
    let mut dsu = DisjointSet::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for e in edges {
        if dsu.union(e.a, e.b) {
            tree.push(e);
            if tree.len() + 1 == n {
                return Ok(tree);
            }
        }
    }
    if n <= 1 {
        return Ok(tree);
    }
    Err(Error::Disconnected(
        "spanning tree requires a connected communication graph".into(),
    ))
}

/// Adjacency lists of the spanning tree.
pub fn mst_neighbors<T: Real>(tree: &[MstEdge<T>], sensor_count: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); sensor_count];
    for e in tree {
        adj[e.a].push(e.b);
        adj[e.b].push(e.a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Intersection of half-range disks centered at the midpoints between `n`
/// and each of its tree neighbors. Simultaneous moves of all sensors
/// inside their own such regions keep every tree edge within range.
/// No neighbors (single sensor) yields the whole plane.
pub fn semi_desired_region<T: Real>(
    n: usize,
    positions: &[Point<T>],
    tree_neighbors: &[usize],
    comm_range: T,
) -> DiskRegion<T> {
    if tree_neighbors.is_empty() {
        return DiskRegion::whole_plane();
    }
    let half = comm_range / T::c(2.0);
    DiskRegion::from_groups(
        tree_neighbors
            .iter()
            .map(|&m| vec![Disk::new(positions[n].midpoint(positions[m]), half)])
            .collect(),
    )
}

/// Semi-desired region capped by the per-step movement disk centered at
/// the current position.
pub fn semi_feasible_region<T: Real>(
    n: usize,
    positions: &[Point<T>],
    tree_neighbors: &[usize],
    comm_range: T,
    cap_radius: T,
) -> DiskRegion<T> {
    semi_desired_region(n, positions, tree_neighbors, comm_range)
        .with_cap(Disk::new(positions[n], cap_radius.max(T::zero())))
}
