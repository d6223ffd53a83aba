//! Planar points, validated point sets, and the small set of geometric
//! primitives shared by the spanner constructions and verifiers.

use crate::error::{Error, Result};

/// Tolerance on squared distances: `p` and `q` are unit-disk neighbors iff
/// `dist_sq(p, q) <= 1 + UDG_TOL`.
pub const UDG_TOL: f64 = 1e-12;

/// A point lies strictly inside a unit disk iff its squared distance to the
/// center is below `1 - STRICT_INTERIOR_TOL`.
pub const STRICT_INTERIOR_TOL: f64 = 1e-12;

/// Cross products with absolute value at most this band count as collinear.
pub const COLLINEAR_BAND: f64 = 1e-12;

/// Maximum deviation of any radius from the mean radius for a point set to
/// count as concyclic.
pub const CONCYCLIC_TOL: f64 = 1e-9;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    pub fn dist_sq(&self, other: &Point2D) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Point2D) -> f64 {
        self.dist_sq(other).sqrt()
    }

    pub fn midpoint(&self, other: &Point2D) -> Point2D {
        Point2D::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }
}

/// True iff the two points are unit-disk neighbors under the pinned tolerance.
pub fn unit_neighbors(p: &Point2D, q: &Point2D) -> bool {
    p.dist_sq(q) <= 1.0 + UDG_TOL
}

/// True iff `p` lies strictly inside the unit disk centered at `c`.
pub fn strictly_inside_unit_disk(c: &Point2D, p: &Point2D) -> bool {
    c.dist_sq(p) < 1.0 - STRICT_INTERIOR_TOL
}

/// An immutable list of pairwise distinct, finite points. Indices into the
/// set identify vertices everywhere else in the crate.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<Point2D>,
}

impl PointSet {
    /// Validates that all coordinates are finite and no two points coincide
    /// exactly.
    pub fn new(points: Vec<Point2D>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::NonFinitePoint { index: i });
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| {
            points[a]
                .x
                .total_cmp(&points[b].x)
                .then(points[a].y.total_cmp(&points[b].y))
        });
        for w in order.windows(2) {
            let (a, b) = (w[0], w[1]);
            if points[a] == points[b] {
                return Err(Error::DuplicatePoint {
                    a: a.min(b),
                    b: a.max(b),
                });
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point2D> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[Point2D] {
        &self.points
    }

    /// Axis-aligned bounding box as `(min, max)`; `None` for an empty set.
    pub fn bounding_box(&self) -> Option<(Point2D, Point2D)> {
        let first = *self.points.first()?;
        let mut lo = first;
        let mut hi = first;
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point2D;

    fn index(&self, i: usize) -> &Point2D {
        &self.points[i]
    }
}

/// Sign of the cross product `(a - o) x (b - o)` with the pinned collinearity
/// band: `0` within the band, otherwise `+1`/`-1`.
pub fn orient(o: &Point2D, a: &Point2D, b: &Point2D) -> i8 {
    let cross = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    if cross > COLLINEAR_BAND {
        1
    } else if cross < -COLLINEAR_BAND {
        -1
    } else {
        0
    }
}

fn within_span(lo: f64, hi: f64, v: f64) -> bool {
    v >= lo.min(hi) - COLLINEAR_BAND && v <= lo.max(hi) + COLLINEAR_BAND
}

fn on_segment(a: &Point2D, b: &Point2D, p: &Point2D) -> bool {
    within_span(a.x, b.x, p.x) && within_span(a.y, b.y, p.y)
}

/// True iff segments `ab` and `cd` share at least one point. Collinear
/// overlap counts as intersecting.
pub fn segments_intersect(a: &Point2D, b: &Point2D, c: &Point2D, d: &Point2D) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 {
        return true;
    }
    (d1 == 0 && on_segment(c, d, a))
        || (d2 == 0 && on_segment(c, d, b))
        || (d3 == 0 && on_segment(a, b, c))
        || (d4 == 0 && on_segment(a, b, d))
}

/// True iff segments `sa` and `sb`, both leaving the shared endpoint `s`,
/// overlap along a common sub-segment.
pub fn shared_endpoint_overlap(s: &Point2D, a: &Point2D, b: &Point2D) -> bool {
    if orient(s, a, b) != 0 {
        return false;
    }
    let dot = (a.x - s.x) * (b.x - s.x) + (a.y - s.y) * (b.y - s.y);
    dot > COLLINEAR_BAND
}

/// Center of the unique unit circle through `p1` and `p2` whose center lies
/// on or below the x-axis, if such a circle exists. Both points must lie
/// strictly above the axis; `None` when the points are more than two apart
/// or when both candidate centers fall above the axis.
pub fn circle_below_axis_through(p1: &Point2D, p2: &Point2D) -> Result<Option<Point2D>> {
    if p1 == p2 {
        return Err(Error::CoincidentPoints);
    }
    for (i, p) in [p1, p2].iter().enumerate() {
        if p.y <= 0.0 {
            return Err(Error::WrongSideOfAxis {
                side: "above",
                index: i,
                y: p.y,
            });
        }
    }
    let d_sq = p1.dist_sq(p2);
    if d_sq > 4.0 + UDG_TOL {
        return Ok(None);
    }
    let d = d_sq.sqrt();
    let h = (1.0 - d_sq / 4.0).max(0.0).sqrt();
    let m = p1.midpoint(p2);
    let nx = -(p2.y - p1.y) / d;
    let ny = (p2.x - p1.x) / d;
    let c1 = Point2D::new(m.x + h * nx, m.y + h * ny);
    let c2 = Point2D::new(m.x - h * nx, m.y - h * ny);
    match (c1.y <= 0.0, c2.y <= 0.0) {
        (true, false) => Ok(Some(c1)),
        (false, true) => Ok(Some(c2)),
        (false, false) => Ok(None),
        (true, true) => Ok(Some(if c1.y <= c2.y { c1 } else { c2 })),
    }
}
