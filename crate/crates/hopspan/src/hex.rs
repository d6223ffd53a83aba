//! Hexagonal tiling with unit-diameter cells.
//!
//! Cells are pointy-top regular hexagons of circumradius 1/2 addressed by
//! axial coordinates `(q, r)`: the east neighbor of `(q, r)` is `(q + 1, r)`
//! and neighboring cell centers are `sqrt(3)/2` apart. The tiling is the
//! Voronoi diagram of the cell centers, so a point belongs to the cell whose
//! center is nearest; points equidistant from several centers go to the
//! lexicographically smallest `(q, r)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geom::{Point2D, PointSet};

/// Circumradius of every cell; the cell diameter is exactly 1.
pub const CELL_CIRCUMRADIUS: f64 = 0.5;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Axial neighbor offsets in counterclockwise order starting east.
const DIRS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Second-ring offsets in counterclockwise order starting at twice east,
/// which is the unique second-layer cell adjacent to only the first
/// first-layer cell.
const RING2: [(i32, i32); 12] = [
    (2, 0),
    (1, 1),
    (0, 2),
    (-1, 2),
    (-2, 2),
    (-2, 1),
    (-2, 0),
    (-1, -1),
    (0, -2),
    (1, -2),
    (2, -2),
    (2, -1),
];

/// Axial address of one hexagonal cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexCellId {
    pub q: i32,
    pub r: i32,
}

impl HexCellId {
    pub const fn new(q: i32, r: i32) -> Self {
        HexCellId { q, r }
    }

    pub fn center(&self) -> Point2D {
        let q = self.q as f64;
        let r = self.r as f64;
        Point2D::new(SQRT3 * CELL_CIRCUMRADIUS * (q + r / 2.0), 1.5 * CELL_CIRCUMRADIUS * r)
    }

    /// The six hexagon corners in counterclockwise order.
    pub fn vertices(&self) -> [Point2D; 6] {
        let c = self.center();
        let mut out = [Point2D::new(0.0, 0.0); 6];
        for (k, v) in out.iter_mut().enumerate() {
            let theta = std::f64::consts::FRAC_PI_6 + std::f64::consts::FRAC_PI_3 * k as f64;
            *v = Point2D::new(
                c.x + CELL_CIRCUMRADIUS * theta.cos(),
                c.y + CELL_CIRCUMRADIUS * theta.sin(),
            );
        }
        out
    }

    pub fn neighbors(&self) -> [HexCellId; 6] {
        DIRS.map(|(dq, dr)| HexCellId::new(self.q + dq, self.r + dr))
    }

    /// Hexagonal grid distance between cell addresses.
    pub fn hex_distance(&self, other: &HexCellId) -> u32 {
        let dq = (self.q - other.q) as i64;
        let dr = (self.r - other.r) as i64;
        ((dq.abs() + dr.abs() + (dq + dr).abs()) / 2) as u32
    }

    pub fn adjacent(&self, other: &HexCellId) -> bool {
        self.hex_distance(other) == 1
    }
}

/// First layer (the 6 adjacent cells) and second layer (the 12 cells at grid
/// distance two), both in counterclockwise order. The first second-layer
/// cell is the one adjacent to only the first first-layer cell.
pub fn layer_cells(c: &HexCellId) -> ([HexCellId; 6], [HexCellId; 12]) {
    let first = c.neighbors();
    let second = RING2.map(|(dq, dr)| HexCellId::new(c.q + dq, c.r + dr));
    (first, second)
}

/// Cell containing `p`: the cell with the nearest center, ties resolved
/// toward the lexicographically smallest `(q, r)`.
pub fn cell_of(p: &Point2D) -> HexCellId {
    let rf = p.y / (1.5 * CELL_CIRCUMRADIUS);
    let qf = p.x / (SQRT3 * CELL_CIRCUMRADIUS) - rf / 2.0;
    let guess = axial_round(qf, rf);
    let mut best = guess;
    let mut best_d = guess.center().dist_sq(p);
    for cand in guess.neighbors() {
        let d = cand.center().dist_sq(p);
        if d < best_d || (d == best_d && (cand.q, cand.r) < (best.q, best.r)) {
            best = cand;
            best_d = d;
        }
    }
    best
}

fn axial_round(qf: f64, rf: f64) -> HexCellId {
    let sf = -qf - rf;
    let mut q = qf.round();
    let mut r = rf.round();
    let s = sf.round();
    let dq = (q - qf).abs();
    let dr = (r - rf).abs();
    let ds = (s - sf).abs();
    if dq > dr && dq > ds {
        q = -r - s;
    } else if dr > ds {
        r = -q - s;
    }
    HexCellId::new(q as i32, r as i32)
}

/// Squared distance from `p` to the closed hexagon of `cell`; zero inside.
pub fn point_cell_distance_sq(p: &Point2D, cell: &HexCellId) -> f64 {
    let vs = cell.vertices();
    let mut inside = true;
    let mut best = f64::INFINITY;
    for k in 0..6 {
        let a = vs[k];
        let b = vs[(k + 1) % 6];
        let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if cross < 0.0 {
            inside = false;
        }
        best = best.min(point_segment_distance_sq(p, &a, &b));
    }
    if inside {
        0.0
    } else {
        best
    }
}

fn point_segment_distance_sq(p: &Point2D, a: &Point2D, b: &Point2D) -> f64 {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let len_sq = abx * abx + aby * aby;
    let t = if len_sq == 0.0 {
        0.0
    } else {
        (((p.x - a.x) * abx + (p.y - a.y) * aby) / len_sq).clamp(0.0, 1.0)
    };
    let proj = Point2D::new(a.x + t * abx, a.y + t * aby);
    p.dist_sq(&proj)
}

/// Assignment of every point of a set to its hexagonal cell.
#[derive(Debug, Clone)]
pub struct CellPartition {
    cells: BTreeMap<HexCellId, Vec<u32>>,
    assignment: Vec<HexCellId>,
}

impl CellPartition {
    pub fn new(ps: &PointSet) -> Self {
        let mut cells: BTreeMap<HexCellId, Vec<u32>> = BTreeMap::new();
        let mut assignment = Vec::with_capacity(ps.len());
        for (i, p) in ps.iter().enumerate() {
            let c = cell_of(p);
            assignment.push(c);
            cells.entry(c).or_default().push(i as u32);
        }
        CellPartition { cells, assignment }
    }

    pub fn cell_of(&self, i: usize) -> HexCellId {
        self.assignment[i]
    }

    /// Point indices assigned to `cell`, in ascending index order.
    pub fn cell_points(&self, cell: &HexCellId) -> &[u32] {
        self.cells.get(cell).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Nonempty cells with their members, ordered by cell address.
    pub fn iter(&self) -> impl Iterator<Item = (&HexCellId, &[u32])> {
        self.cells.iter().map(|(c, v)| (c, v.as_slice()))
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
}

/// Perpendicular bisector of two cell centers, oriented so that the first
/// cell lies on the positive side.
#[derive(Debug, Clone, Copy)]
pub struct SeparatingLine {
    origin: Point2D,
    normal: Point2D,
}

impl SeparatingLine {
    /// Signed distance of `p` from the line; positive on the first cell's side.
    pub fn signed_distance(&self, p: &Point2D) -> f64 {
        self.normal.x * (p.x - self.origin.x) + self.normal.y * (p.y - self.origin.y)
    }

    /// Rigid change of coordinates taking the line to the x-axis with the
    /// first cell's side mapped to positive y.
    pub fn to_frame(&self, p: &Point2D) -> Point2D {
        let dx = p.x - self.origin.x;
        let dy = p.y - self.origin.y;
        Point2D::new(
            self.normal.y * dx - self.normal.x * dy,
            self.normal.x * dx + self.normal.y * dy,
        )
    }
}

/// Oriented perpendicular bisector of the centers of two distinct cells. By
/// the Voronoi property it separates the open cells strictly.
pub fn separating_line(c1: &HexCellId, c2: &HexCellId) -> Result<SeparatingLine> {
    if c1 == c2 {
        return Err(Error::IdenticalCells);
    }
    let a = c1.center();
    let b = c2.center();
    let d = a.dist(&b);
    Ok(SeparatingLine {
        origin: a.midpoint(&b),
        normal: Point2D::new((a.x - b.x) / d, (a.y - b.y) / d),
    })
}
