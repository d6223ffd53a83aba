//! Unit-disk hulls and epsilon-nets for bipartite scenes.
//!
//! A bipartite scene holds one point set strictly above the x-axis and one
//! strictly below, each of diameter at most one. For the upper set `A` the
//! unit-disk hull is what remains of the plane after carving out every unit
//! disk, centered on or below the axis, whose open interior misses `A`. The
//! points of `A` on the hull boundary form the set `M`; every unit disk
//! centered below the axis that contains a point of `A` contains a point of
//! `M`, so `M` is the universe from which epsilon-nets are drawn.
//!
//! [`bipartite_2hop`] combines these pieces: disks around the lower points
//! are binned by how much of `A` they cover, each bin gets a minimal net,
//! and each net point becomes the center of a star. The union of the stars
//! connects every crossing unit-distance pair by at most two edges while
//! keeping the lower side's degree at one edge per bin.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geom::{
    circle_below_axis_through, strictly_inside_unit_disk, unit_neighbors, Point2D, UDG_TOL,
};

/// Two point sets separated by the x-axis, each of diameter at most one.
#[derive(Debug, Clone)]
pub struct BipartiteScene {
    a: Vec<Point2D>,
    b: Vec<Point2D>,
}

impl BipartiteScene {
    pub fn new(a: Vec<Point2D>, b: Vec<Point2D>) -> Result<Self> {
        for (i, p) in a.iter().enumerate() {
            if !(p.y > 0.0) {
                return Err(Error::WrongSideOfAxis { side: "above", index: i, y: p.y });
            }
        }
        for (i, p) in b.iter().enumerate() {
            if !(p.y < 0.0) {
                return Err(Error::WrongSideOfAxis { side: "below", index: i, y: p.y });
            }
        }
        for (side, pts) in [("A", &a), ("B", &b)] {
            let diam_sq = max_pairwise_dist_sq(pts);
            if diam_sq > 1.0 + UDG_TOL {
                return Err(Error::SceneDiameterExceeded { side, diam: diam_sq.sqrt() });
            }
        }
        Ok(BipartiteScene { a, b })
    }

    /// Upper points in frame coordinates, all with `y > 0`.
    pub fn a(&self) -> &[Point2D] {
        &self.a
    }

    /// Lower points in frame coordinates, all with `y < 0`.
    pub fn b(&self) -> &[Point2D] {
        &self.b
    }
}

fn max_pairwise_dist_sq(pts: &[Point2D]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            best = best.max(pts[i].dist_sq(&pts[j]));
        }
    }
    best
}

/// Points of the upper set on its unit-disk hull boundary, sorted by
/// `(x, y, index)`, each with a witness disk center certifying membership.
#[derive(Debug, Clone)]
pub struct HullBoundarySet {
    members: Vec<u32>,
    witnesses: Vec<Point2D>,
}

impl HullBoundarySet {
    /// Member indices into the upper point set, ascending by `(x, y, index)`.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    /// Witness disk centers, parallel to [`Self::members`]. Each center lies
    /// on or below the axis, at unit distance from its member, with no upper
    /// point strictly inside the unit disk around it.
    pub fn witnesses(&self) -> &[Point2D] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Compares upper points by `(x, y, index)`.
fn cmp_xyi(a: &[Point2D], i: u32, j: u32) -> std::cmp::Ordering {
    let p = &a[i as usize];
    let q = &a[j as usize];
    p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y)).then(i.cmp(&j))
}

/// Extracts the hull boundary set of points strictly above the axis.
///
/// A point is a member when some unit disk from the candidate family has the
/// point on its boundary, its center on or below the axis, and no input
/// point strictly inside. The family per point `p`: the disk centered at
/// `(p.x, p.y - 1)`, the two disks through `p` centered on the axis, and for
/// every other point `q` the below-axis disk through `p` and `q`. Any empty
/// witness disk can be rotated around `p` until it touches a second point or
/// its center reaches the axis, so the family decides membership exactly.
pub fn hull_boundary(a: &[Point2D]) -> Result<HullBoundarySet> {
    for (i, p) in a.iter().enumerate() {
        if !(p.y > 0.0) {
            return Err(Error::WrongSideOfAxis { side: "above", index: i, y: p.y });
        }
    }
    let mut by_y: Vec<u32> = (0..a.len() as u32).collect();
    by_y.sort_by(|&i, &j| a[i as usize].y.total_cmp(&a[j as usize].y).then(i.cmp(&j)));

    // A point strictly inside the unit disk at c satisfies y < c.y + 1, so
    // the y-ascending scan stops at the first point at or above that height.
    let empty = |c: &Point2D| -> bool {
        let ceiling = c.y + 1.0;
        for &k in &by_y {
            let q = &a[k as usize];
            if q.y >= ceiling {
                break;
            }
            if strictly_inside_unit_disk(c, q) {
                return false;
            }
        }
        true
    };

    let mut members: Vec<u32> = Vec::new();
    let mut witnesses: Vec<Point2D> = Vec::new();
    'points: for (i, p) in a.iter().enumerate() {
        if p.y > 1.0 {
            continue;
        }
        let admit = |c: Point2D, members: &mut Vec<u32>, witnesses: &mut Vec<Point2D>| {
            members.push(i as u32);
            witnesses.push(c);
        };
        let below = Point2D::new(p.x, p.y - 1.0);
        if empty(&below) {
            admit(below, &mut members, &mut witnesses);
            continue 'points;
        }
        let h = (1.0 - p.y * p.y).max(0.0).sqrt();
        for c in [Point2D::new(p.x - h, 0.0), Point2D::new(p.x + h, 0.0)] {
            if empty(&c) {
                admit(c, &mut members, &mut witnesses);
                continue 'points;
            }
        }
        for (j, q) in a.iter().enumerate() {
            if j == i || (q.x == p.x && q.y == p.y) {
                continue;
            }
            if let Some(c) = circle_below_axis_through(p, q)? {
                if empty(&c) {
                    admit(c, &mut members, &mut witnesses);
                    continue 'points;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&u, &v| cmp_xyi(a, members[u], members[v]));
    Ok(HullBoundarySet {
        members: order.iter().map(|&k| members[k]).collect(),
        witnesses: order.iter().map(|&k| witnesses[k]).collect(),
    })
}

/// Minimal hitting set for the heavy disks of a finite family.
#[derive(Debug, Clone)]
pub struct EpsNet {
    net: Vec<u32>,
    eps: f64,
    family: Vec<Point2D>,
}

impl EpsNet {
    /// Net members as indices into the upper set, ascending by `(x, y, index)`.
    pub fn net(&self) -> &[u32] {
        &self.net
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Disk centers the net was made minimal against.
    pub fn family(&self) -> &[Point2D] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.net.len()
    }

    pub fn is_empty(&self) -> bool {
        self.net.is_empty()
    }
}

/// Thins the hull boundary set down to a minimal net for the heavy disks.
///
/// A family disk is heavy when it covers at least `eps * |A|` upper points.
/// Starting from all of `M`, members are deleted in decreasing `(x, y,
/// index)` order whenever every heavy disk containing the member keeps at
/// least one other surviving hitter, which makes the result 1-minimal. The
/// net has at most `floor(2 / eps)` members.
pub fn minimal_eps_net(
    a: &[Point2D],
    m: &HullBoundarySet,
    eps: f64,
    family: &[Point2D],
) -> Result<EpsNet> {
    if !(eps > 0.0 && eps < 2.0 / 3.0) {
        return Err(Error::EpsOutOfRange(eps));
    }
    let threshold = eps * a.len() as f64;
    let mut disks_of_member: Vec<Vec<u32>> = vec![Vec::new(); m.len()];
    let mut live_hitters: Vec<usize> = Vec::new();
    let mut heavy = 0u32;
    for center in family {
        let count = a.iter().filter(|p| unit_neighbors(center, p)).count();
        if count == 0 || (count as f64) < threshold {
            continue;
        }
        let mut hitters = 0usize;
        for (pos, &mi) in m.members().iter().enumerate() {
            if unit_neighbors(center, &a[mi as usize]) {
                disks_of_member[pos].push(heavy);
                hitters += 1;
            }
        }
        if hitters == 0 {
            return Err(Error::NetInfeasible { x: center.x, y: center.y });
        }
        live_hitters.push(hitters);
        heavy += 1;
    }

    let mut alive = vec![true; m.len()];
    for pos in (0..m.len()).rev() {
        if disks_of_member[pos].iter().all(|&d| live_hitters[d as usize] >= 2) {
            alive[pos] = false;
            for &d in &disks_of_member[pos] {
                live_hitters[d as usize] -= 1;
            }
        }
    }
    let net = m
        .members()
        .iter()
        .zip(&alive)
        .filter_map(|(&mi, &keep)| keep.then_some(mi))
        .collect();
    Ok(EpsNet { net, eps, family: family.to_vec() })
}

/// Lower points whose unit disks cover the same dyadic fraction of the
/// upper set.
#[derive(Debug, Clone)]
pub struct DiskBin {
    /// Level `i` collects disks covering between `|A| / 2^i` (inclusive)
    /// and `|A| / 2^(i-1)` (exclusive) upper points; disks covering all of
    /// the upper set also land on level 1.
    pub level: u32,
    /// Indices into the lower set, ascending.
    pub disks: Vec<u32>,
}

/// Bins every lower point whose unit disk covers at least one upper point,
/// by the covered fraction. Disks covering nothing are left out.
pub fn bin_disks(a: &[Point2D], b: &[Point2D]) -> Vec<DiskBin> {
    let n = a.len();
    let mut bins: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (j, center) in b.iter().enumerate() {
        let count = a.iter().filter(|p| unit_neighbors(center, p)).count();
        if count == 0 {
            continue;
        }
        let mut level = 1u32;
        let mut scaled = count.saturating_mul(2);
        while scaled < n {
            scaled = scaled.saturating_mul(2);
            level += 1;
        }
        bins.entry(level).or_default().push(j as u32);
    }
    bins.into_iter().map(|(level, disks)| DiskBin { level, disks }).collect()
}

/// One star of the bipartite construction: a net point, the disks assigned
/// to it, and the upper points those disks cover.
#[derive(Debug, Clone)]
pub struct DiskStar {
    /// Upper-set index of the net point at the star center.
    pub root: u32,
    /// Lower-set indices whose leftmost covering net point is the root.
    pub b_members: Vec<u32>,
    /// Upper-set indices covered by the member disks, ascending; always
    /// contains the root.
    pub a_members: Vec<u32>,
}

/// Net and stars for one bin level.
#[derive(Debug, Clone)]
pub struct LevelStars {
    pub level: u32,
    pub net: EpsNet,
    pub stars: Vec<DiskStar>,
}

/// Output of [`bipartite_2hop`]: the hull boundary, the per-level stars,
/// and the union of their edges.
#[derive(Debug, Clone)]
pub struct BipartiteBuild {
    pub hull: HullBoundarySet,
    pub levels: Vec<LevelStars>,
    /// Edges over the combined indexing: upper point `i` keeps index `i`,
    /// lower point `j` becomes `|A| + j`. Sorted lexicographically.
    pub edges: Vec<(u32, u32)>,
}

/// Builds the star union connecting every crossing unit-distance pair
/// within two hops.
///
/// Per bin level the member disks are all heavy for `eps = 2^-level`, so
/// the minimal net hits each of them; every disk is assigned to its
/// leftmost covering net point, and that net point is joined to the disk's
/// lower point and to every upper point the star's disks cover. A crossing
/// pair `(a, b)` is then connected through the root of the star owning
/// `b`'s disk, and each lower point keeps at most one edge per level.
pub fn bipartite_2hop(scene: &BipartiteScene) -> Result<BipartiteBuild> {
    let a = scene.a();
    let b = scene.b();
    let na = a.len() as u32;
    let hull = hull_boundary(a)?;
    let bins = bin_disks(a, b);

    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut levels = Vec::with_capacity(bins.len());
    for bin in &bins {
        let eps = 0.5f64.powi(bin.level as i32);
        let family: Vec<Point2D> = bin.disks.iter().map(|&j| b[j as usize]).collect();
        let net = minimal_eps_net(a, &hull, eps, &family)?;

        let mut by_root: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &j in &bin.disks {
            let root = net
                .net()
                .iter()
                .copied()
                .find(|&mi| unit_neighbors(&b[j as usize], &a[mi as usize]))
                .expect("binned disk is heavy, so the minimal net hits it");
            by_root.entry(root).or_default().push(j);
        }

        let mut stars = Vec::with_capacity(by_root.len());
        for (root, b_members) in by_root {
            let mut a_set: BTreeSet<u32> = BTreeSet::new();
            for &j in &b_members {
                for (ai, p) in a.iter().enumerate() {
                    if unit_neighbors(&b[j as usize], p) {
                        a_set.insert(ai as u32);
                    }
                }
                edges.insert((root, na + j));
            }
            for &ai in &a_set {
                if ai != root {
                    edges.insert((root.min(ai), root.max(ai)));
                }
            }
            stars.push(DiskStar {
                root,
                b_members,
                a_members: a_set.into_iter().collect(),
            });
        }
        levels.push(LevelStars { level: bin.level, net, stars });
    }

    Ok(BipartiteBuild { hull, levels, edges: edges.into_iter().collect() })
}
