//! Unit disk graph construction.
//!
//! Two points are adjacent when their distance is at most one, checked as
//! `dist_sq <= 1 + UDG_TOL` so that exactly-unit edges survive rounding.
//! The edge list is built through the hexagonal cell partition: a unit edge
//! never leaves the two layers of cells around an endpoint, so each point
//! only probes nearby buckets instead of the whole set.

use std::collections::BTreeMap;

use crate::geom::{unit_neighbors, Point2D, PointSet};
use crate::hex::{cell_of, HexCellId};

/// Unit disk graph over an immutable point set.
///
/// `edges` is sorted lexicographically with `i < j` in every pair, and
/// `offsets` is a CSR index over the smaller endpoint: the edges whose
/// smaller endpoint is `i` occupy `edges[offsets[i]..offsets[i + 1]]`.
#[derive(Debug, Clone)]
pub struct UnitDiskGraph {
    points: PointSet,
    edges: Vec<(u32, u32)>,
    offsets: Vec<usize>,
}

impl UnitDiskGraph {
    /// Builds the graph by bucketing points into hexagonal cells and
    /// testing only pairs within two cell layers of each other.
    pub fn build(points: PointSet) -> Self {
        let n = points.len();
        let mut buckets: BTreeMap<HexCellId, Vec<u32>> = BTreeMap::new();
        let cells: Vec<HexCellId> = points.iter().map(cell_of).collect();
        for (i, c) in cells.iter().enumerate() {
            buckets.entry(*c).or_default().push(i as u32);
        }

        let mut edges = Vec::new();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut partners = Vec::new();
        for i in 0..n {
            offsets.push(edges.len());
            let p = &points[i];
            partners.clear();
            let c = cells[i];
            for dq in -2..=2i32 {
                for dr in -2..=2i32 {
                    if (dq + dr).abs() > 2 {
                        continue;
                    }
                    let Some(members) = buckets.get(&HexCellId::new(c.q + dq, c.r + dr)) else {
                        continue;
                    };
                    for &j in members {
                        if j as usize > i && unit_neighbors(p, &points[j as usize]) {
                            partners.push(j);
                        }
                    }
                }
            }
            partners.sort_unstable();
            edges.extend(partners.iter().map(|&j| (i as u32, j)));
        }
        offsets.push(edges.len());
        UnitDiskGraph { points, edges, offsets }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point2D {
        &self.points[i]
    }

    /// All edges as `(i, j)` pairs with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors `j > i`, ascending.
    pub fn neighbors_above(&self, i: usize) -> impl Iterator<Item = u32> + '_ {
        self.edges[self.offsets[i]..self.offsets[i + 1]].iter().map(|&(_, j)| j)
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges[self.offsets[a as usize]..self.offsets[a as usize + 1]]
            .binary_search_by_key(&b, |&(_, j)| j)
            .is_ok()
    }

    /// Full adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(i, j) in &self.edges {
            adj[i as usize].push(j);
            adj[j as usize].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}
