//! Bounded-hop spanner constructions.
//!
//! All constructions partition the plane into unit-diameter hexagonal
//! cells. Points sharing a cell form a clique in the unit disk graph, so a
//! per-cell star keeps them two hops apart; what varies is how cells are
//! joined:
//!
//! * [`build_hop5`]: one bridge edge per cell pair plus per-cell stars.
//!   At most `5.5 n` edges, hop stretch at most 5.
//! * [`build_hop3`]: all bridges, plus edges from each point to the
//!   in-cell endpoint of every bridge whose far cell is within distance
//!   one. At most `11 n` edges, stretch at most 3.
//! * [`build_hop2`]: per-cell stars plus a star-of-nets bipartite graph
//!   per cell pair. `O(n log n)` edges, stretch at most 2.
//! * [`build_circle_hop4`]: for concyclic points, a plane (noncrossing)
//!   spanner with stretch at most 4, built by a greedy chain along the
//!   circle with one star per chain edge.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{unit_neighbors, Point2D, PointSet, CONCYCLIC_TOL, UDG_TOL};
use crate::hex::{point_cell_distance_sq, separating_line, CellPartition, HexCellId};
use crate::nets::{bipartite_2hop, BipartiteBuild, BipartiteScene};
use crate::udg::UnitDiskGraph;

/// Which spanner construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpannerKind {
    Hop5,
    Hop3,
    Hop2,
    Circle4,
}

impl SpannerKind {
    pub const ALL: [SpannerKind; 4] =
        [SpannerKind::Hop5, SpannerKind::Hop3, SpannerKind::Hop2, SpannerKind::Circle4];

    /// Guaranteed hop stretch of the construction.
    pub fn stretch_bound(&self) -> u32 {
        match self {
            SpannerKind::Hop5 => 5,
            SpannerKind::Hop3 => 3,
            SpannerKind::Hop2 => 2,
            SpannerKind::Circle4 => 4,
        }
    }
}

impl FromStr for SpannerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hop5" => Ok(SpannerKind::Hop5),
            "hop3" => Ok(SpannerKind::Hop3),
            "hop2" => Ok(SpannerKind::Hop2),
            "circle4" => Ok(SpannerKind::Circle4),
            other => Err(Error::BadParam(format!(
                "unknown algorithm {other:?}; expected hop5, hop3, hop2, or circle4"
            ))),
        }
    }
}

impl fmt::Display for SpannerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpannerKind::Hop5 => "hop5",
            SpannerKind::Hop3 => "hop3",
            SpannerKind::Hop2 => "hop2",
            SpannerKind::Circle4 => "circle4",
        })
    }
}

/// A subgraph on `n` vertices given by an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannerGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl SpannerGraph {
    /// Normalizes, sorts, and deduplicates the edges. Rejects self-loops
    /// and endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b || a as usize >= n || b as usize >= n {
                return Err(Error::MalformedEdge { a, b });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &list {
            adj[i as usize].push(j);
            adj[j as usize].push(i);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(SpannerGraph { n, edges: list, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        self.adj[i as usize].binary_search(&j).is_ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// One chosen edge connecting a pair of nonempty cells.
#[derive(Debug, Clone, Copy)]
pub struct Bridge {
    /// The connected cells; the first is lexicographically smaller.
    pub cells: (HexCellId, HexCellId),
    /// Endpoint point indices aligned with `cells`: the first index lies in
    /// the first cell.
    pub endpoints: (u32, u32),
    /// Whether the cells are adjacent in the tiling.
    pub short: bool,
}

impl Bridge {
    /// The bridge endpoint inside `cell`, if the bridge touches it.
    pub fn endpoint_in(&self, cell: &HexCellId) -> Option<u32> {
        if self.cells.0 == *cell {
            Some(self.endpoints.0)
        } else if self.cells.1 == *cell {
            Some(self.endpoints.1)
        } else {
            None
        }
    }

    fn edge(&self) -> (u32, u32) {
        let (p, q) = self.endpoints;
        (p.min(q), p.max(q))
    }
}

/// One bridge per cell pair that has at least one crossing edge.
#[derive(Debug, Clone)]
pub struct BridgeMap {
    map: BTreeMap<(HexCellId, HexCellId), Bridge>,
}

impl BridgeMap {
    /// Picks, for every cell pair with a crossing edge, the
    /// lexicographically smallest `(i, j)` edge as the pair's bridge.
    pub fn compute(g: &UnitDiskGraph, part: &CellPartition) -> Self {
        let mut map: BTreeMap<(HexCellId, HexCellId), Bridge> = BTreeMap::new();
        for &(i, j) in g.edges() {
            let ci = part.cell_of(i as usize);
            let cj = part.cell_of(j as usize);
            if ci == cj {
                continue;
            }
            let (cells, endpoints) = if ci < cj { ((ci, cj), (i, j)) } else { ((cj, ci), (j, i)) };
            map.entry(cells).or_insert_with(|| Bridge {
                cells,
                endpoints,
                short: cells.0.adjacent(&cells.1),
            });
        }
        BridgeMap { map }
    }

    pub fn get(&self, c1: &HexCellId, c2: &HexCellId) -> Option<&Bridge> {
        let key = if c1 < c2 { (*c1, *c2) } else { (*c2, *c1) };
        self.map.get(&key)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Bridge> {
        self.map.values()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

fn cell_stars(part: &CellPartition, edges: &mut BTreeSet<(u32, u32)>) {
    for (_, members) in part.iter() {
        let root = members[0];
        for &m in &members[1..] {
            edges.insert((root, m));
        }
    }
}

/// 5-hop spanner with at most `5.5 n` edges: a spanning star in every
/// nonempty cell, rooted at the cell's lowest point index, plus one bridge
/// per cell pair with a crossing edge.
pub fn build_hop5(g: &UnitDiskGraph) -> SpannerGraph {
    let part = CellPartition::new(g.points());
    let bridges = BridgeMap::compute(g, &part);
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    cell_stars(&part, &mut edges);
    for b in bridges.iter() {
        edges.insert(b.edge());
    }
    SpannerGraph::from_edges(g.len(), edges).expect("cell stars and bridges are valid edges")
}

/// 3-hop spanner with at most `11 n` edges.
///
/// Keeps every bridge, and for each point adds an edge to the in-cell
/// endpoint of every bridge whose far cell is within distance one of the
/// point. A short bridge thereby spans its cell with a star automatically;
/// a cell touched by no short bridge gets an explicit spanning star,
/// centered at its lowest-index long-bridge endpoint when one exists and
/// at its lowest point index otherwise.
pub fn build_hop3(g: &UnitDiskGraph) -> SpannerGraph {
    let part = CellPartition::new(g.points());
    let bridges = BridgeMap::compute(g, &part);
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();

    let mut incident: BTreeMap<HexCellId, Vec<&Bridge>> = BTreeMap::new();
    for b in bridges.iter() {
        edges.insert(b.edge());
        incident.entry(b.cells.0).or_default().push(b);
        incident.entry(b.cells.1).or_default().push(b);
    }

    for (cell, members) in part.iter() {
        let cell_bridges = incident.get(cell).map(Vec::as_slice).unwrap_or(&[]);
        for b in cell_bridges {
            let p = b.endpoint_in(cell).expect("incident bridge touches the cell");
            let far = if b.cells.0 == *cell { b.cells.1 } else { b.cells.0 };
            for &pi in members {
                if pi == p {
                    continue;
                }
                let d_sq = point_cell_distance_sq(&g.points()[pi as usize], &far);
                if d_sq <= 1.0 + UDG_TOL {
                    edges.insert((pi.min(p), pi.max(p)));
                }
            }
        }
        let has_short = cell_bridges.iter().any(|b| b.short);
        if !has_short {
            let center = cell_bridges
                .iter()
                .filter_map(|b| b.endpoint_in(cell))
                .min()
                .unwrap_or(members[0]);
            for &m in members {
                if m != center {
                    edges.insert((center.min(m), center.max(m)));
                }
            }
        }
    }

    SpannerGraph::from_edges(g.len(), edges).expect("bridge and in-cell edges are valid")
}

/// 2-hop spanner with `O(n log n)` edges: per-cell stars plus, for every
/// cell pair with a crossing edge, the bipartite star-of-nets graph built
/// in the frame of the pair's separating line.
pub fn build_hop2(g: &UnitDiskGraph) -> SpannerGraph {
    let part = CellPartition::new(g.points());
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    cell_stars(&part, &mut edges);

    for (ca, cb) in crossing_pairs(g, &part) {
        let a_ids = part.cell_points(&ca);
        let b_ids = part.cell_points(&cb);
        let scene = pair_scene(g.points(), &ca, &cb, a_ids, b_ids);
        let build = bipartite_2hop(&scene).expect("cell-pair scene is valid");
        let na = a_ids.len() as u32;
        for &(u, v) in &build.edges {
            let gu = if u < na { a_ids[u as usize] } else { b_ids[(u - na) as usize] };
            let gv = if v < na { a_ids[v as usize] } else { b_ids[(v - na) as usize] };
            edges.insert((gu.min(gv), gu.max(gv)));
        }
    }

    SpannerGraph::from_edges(g.len(), edges).expect("stars and bipartite edges are valid")
}

/// Cell pairs joined by at least one base-graph edge, lexicographic.
fn crossing_pairs(g: &UnitDiskGraph, part: &CellPartition) -> BTreeSet<(HexCellId, HexCellId)> {
    let mut pairs: BTreeSet<(HexCellId, HexCellId)> = BTreeSet::new();
    for &(i, j) in g.edges() {
        let ci = part.cell_of(i as usize);
        let cj = part.cell_of(j as usize);
        if ci != cj {
            pairs.insert(if ci < cj { (ci, cj) } else { (cj, ci) });
        }
    }
    pairs
}

/// Bipartite construction record for one crossing cell pair: the cells,
/// their member point indices, and the star-of-nets build in the pair's
/// separating-line frame. Net and hull indices inside `build` refer to
/// positions in `a_ids`.
#[derive(Debug, Clone)]
pub struct PairNets {
    pub sigma: HexCellId,
    pub tau: HexCellId,
    pub a_ids: Vec<u32>,
    pub b_ids: Vec<u32>,
    pub build: BipartiteBuild,
}

/// Per-pair bipartite builds of the 2-hop construction, in the same pair
/// order [`build_hop2`] consumes them; exposed for inspection dumps.
pub fn hop2_pair_nets(g: &UnitDiskGraph) -> Vec<PairNets> {
    let part = CellPartition::new(g.points());
    crossing_pairs(g, &part)
        .into_iter()
        .map(|(ca, cb)| {
            let a_ids = part.cell_points(&ca).to_vec();
            let b_ids = part.cell_points(&cb).to_vec();
            let scene = pair_scene(g.points(), &ca, &cb, &a_ids, &b_ids);
            let build = bipartite_2hop(&scene).expect("cell-pair scene is valid");
            PairNets { sigma: ca, tau: cb, a_ids, b_ids, build }
        })
        .collect()
}

/// Maps both cells into the separating-line frame, nudging the axis when
/// rounding parks a point exactly on it. Boundary points are assigned to
/// the lexicographically smaller cell, so in exact arithmetic the first
/// cell's points have `y >= 0` and the second cell's have `y < 0`; any
/// parallel axis strictly between the sides is an equally valid separator.
fn pair_scene(
    points: &PointSet,
    ca: &HexCellId,
    cb: &HexCellId,
    a_ids: &[u32],
    b_ids: &[u32],
) -> BipartiteScene {
    let line = separating_line(ca, cb).expect("crossing pair has distinct cells");
    let mut a: Vec<Point2D> = a_ids.iter().map(|&i| line.to_frame(&points[i as usize])).collect();
    let mut b: Vec<Point2D> = b_ids.iter().map(|&i| line.to_frame(&points[i as usize])).collect();

    let min_a = a.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let max_b = b.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max);
    if min_a <= 0.0 || max_b >= 0.0 {
        let delta = if min_a > max_b {
            -(min_a + max_b) / 2.0
        } else {
            let pa = points[a_ids[0] as usize];
            let scale = 1e-12 * (1.0 + pa.x.abs() + pa.y.abs());
            let (cca, ccb) = (ca.center(), cb.center());
            let gap = 2.0 * cca.dist(&ccb);
            for (p, &i) in a.iter_mut().zip(a_ids) {
                let q = &points[i as usize];
                p.y = (q.dist_sq(&ccb) - q.dist_sq(&cca)) / gap + scale;
            }
            for (p, &i) in b.iter_mut().zip(b_ids) {
                let q = &points[i as usize];
                p.y = (q.dist_sq(&ccb) - q.dist_sq(&cca)) / gap;
            }
            -b.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max) / 2.0
        };
        for p in a.iter_mut().chain(b.iter_mut()) {
            p.y += delta;
        }
    }
    BipartiteScene::new(a, b).expect("shifted cell-pair frame separates the sides")
}

/// How [`build_circle_hop4`] assembled its spanner.
#[derive(Debug, Clone)]
pub enum CirclePlan {
    /// The circle fits in a unit disk: a single star from the given root.
    Star { root: u32 },
    /// Greedy chain plus per-block stars.
    Chain(GreedyChain),
}

/// Greedy chain over points labeled counterclockwise along the covering
/// arc.
///
/// The chain stops at the last vertex `p_k` whose greedy step would reach
/// the final label; the points after `p_k` (all within unit distance of
/// it) form its trailing star. Every chain edge spans a block of
/// consecutive positions, and the final block holds `p_k`, the trailing
/// points, and, when the chain closes, the first point as well.
#[derive(Debug, Clone)]
pub struct GreedyChain {
    /// Original point indices in counterclockwise arc order.
    pub order: Vec<u32>,
    /// Positions into `order` of the chain vertices, strictly increasing,
    /// starting at 0. The last chain vertex never sits on the final
    /// position; the remaining positions trail behind it.
    pub chain: Vec<usize>,
    /// Whether the last chain vertex and the first point are within unit
    /// distance, adding the closing edge to the final block.
    pub closed: bool,
}

impl GreedyChain {
    /// Blocks as position lists, one per star: the ranges between
    /// consecutive chain vertices, then the final block of the last chain
    /// vertex, the trailing positions, and position 0 when closed.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> =
            self.chain.windows(2).map(|w| (w[0]..=w[1]).collect()).collect();
        let last = *self.chain.last().expect("chain has at least one vertex");
        let mut fin: Vec<usize> = (last..self.order.len()).collect();
        if self.closed && last != 0 {
            fin.push(0);
        }
        if fin.len() >= 2 {
            out.push(fin);
        }
        out
    }
}

/// Result of [`build_circle_hop4`].
#[derive(Debug, Clone)]
pub struct CircleBuild {
    pub spanner: SpannerGraph,
    pub plan: CirclePlan,
}

/// Plane 4-hop spanner for points on a common circle.
///
/// If the circle fits in a unit disk every pair is adjacent, and a star
/// from point 0 suffices. Otherwise the points are labeled
/// counterclockwise along the shortest covering arc and a greedy chain
/// walks the labels, each step ending just before the first point out of
/// unit range. The chain stops as soon as a step would land on the final
/// label, so the points past the last chain vertex trail within unit
/// distance of it. Every chain edge's block of points gets a star from the
/// block's first chain vertex, the last chain vertex stars the trailing
/// points, and when it also reaches the first point the closing edge joins
/// them. The result is a noncrossing graph with hop stretch at most 4.
pub fn build_circle_hop4(ps: &PointSet) -> Result<CircleBuild> {
    let n = ps.len();
    if n <= 1 {
        let spanner = SpannerGraph::from_edges(n, [])?;
        return Ok(CircleBuild { spanner, plan: CirclePlan::Star { root: 0 } });
    }
    let (center, radius) = fit_circle(ps.as_slice())?;

    if (2.0 * radius) * (2.0 * radius) <= 1.0 + UDG_TOL {
        let spanner = SpannerGraph::from_edges(n, (1..n as u32).map(|j| (0, j)))
            .expect("star edges are valid");
        return Ok(CircleBuild { spanner, plan: CirclePlan::Star { root: 0 } });
    }

    let mut order: Vec<u32> = (0..n as u32).collect();
    let angle = |i: u32| {
        let p = &ps[i as usize];
        (p.y - center.y).atan2(p.x - center.x)
    };
    order.sort_by(|&i, &j| angle(i).total_cmp(&angle(j)).then(i.cmp(&j)));

    // The shortest covering arc starts after the largest angular gap; ties
    // go to the gap whose following point has the smallest original index.
    let tau = 2.0 * std::f64::consts::PI;
    let mut best_start = 0usize;
    let mut best_gap = f64::NEG_INFINITY;
    for k in 0..n {
        let prev = angle(order[(k + n - 1) % n]);
        let here = angle(order[k]);
        let gap = (here - prev).rem_euclid(tau);
        if gap > best_gap || (gap == best_gap && order[k] < order[best_start]) {
            best_gap = gap;
            best_start = k;
        }
    }
    order.rotate_left(best_start);

    for w in 0..n - 1 {
        let (a, b) = (order[w], order[w + 1]);
        if !unit_neighbors(&ps[a as usize], &ps[b as usize]) {
            return Err(Error::DisconnectedCircle {
                a: a as usize,
                b: b as usize,
                dist: ps[a as usize].dist(&ps[b as usize]),
            });
        }
    }

    let mut chain = vec![0usize];
    let mut cur = 0usize;
    loop {
        let here = &ps[order[cur] as usize];
        let mut t = cur + 1;
        while t + 1 < n && unit_neighbors(here, &ps[order[t + 1] as usize]) {
            t += 1;
        }
        if t == n - 1 {
            // The greedy step reaches the final label, so the chain ends at
            // `cur` and the positions after it trail within unit distance.
            break;
        }
        chain.push(t);
        cur = t;
    }
    let last = *chain.last().expect("chain starts nonempty");
    let closed =
        last != 0 && unit_neighbors(&ps[order[last] as usize], &ps[order[0] as usize]);

    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    for w in chain.windows(2) {
        let apex = order[w[0]];
        for pos in w[0] + 1..=w[1] {
            let other = order[pos];
            edges.insert((apex.min(other), apex.max(other)));
        }
    }
    let apex = order[last];
    for pos in last + 1..n {
        let other = order[pos];
        edges.insert((apex.min(other), apex.max(other)));
    }
    if closed {
        let first = order[0];
        edges.insert((apex.min(first), apex.max(first)));
    }

    let spanner = SpannerGraph::from_edges(n, edges).expect("chain and star edges are valid");
    Ok(CircleBuild { spanner, plan: CirclePlan::Chain(GreedyChain { order, chain, closed }) })
}

/// Least-squares circle through the points; errors when no finite circle
/// fits, which covers collinear inputs. The returned radius is the mean
/// point-to-center distance, and all points must be within
/// [`CONCYCLIC_TOL`] of it.
fn fit_circle(pts: &[Point2D]) -> Result<(Point2D, f64)> {
    let (center, mean_r) = match pts.len() {
        0 => unreachable!("caller handles empty input"),
        1 => (pts[0], 0.0),
        2 => {
            let c = pts[0].midpoint(&pts[1]);
            (c, pts[0].dist(&pts[1]) / 2.0)
        }
        n => {
            let nf = n as f64;
            let mx = pts.iter().map(|p| p.x).sum::<f64>() / nf;
            let my = pts.iter().map(|p| p.y).sum::<f64>() / nf;
            let (mut suu, mut suv, mut svv, mut suuu, mut svvv, mut suvv, mut svuu) =
                (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
            for p in pts {
                let u = p.x - mx;
                let v = p.y - my;
                suu += u * u;
                suv += u * v;
                svv += v * v;
                suuu += u * u * u;
                svvv += v * v * v;
                suvv += u * v * v;
                svuu += v * u * u;
            }
            let det = suu * svv - suv * suv;
            let scale = suu + svv;
            if !(det > 1e-9 * scale * scale) {
                return Err(Error::NotConcyclic { spread: f64::INFINITY });
            }
            let rhs_u = (suuu + suvv) / 2.0;
            let rhs_v = (svvv + svuu) / 2.0;
            let uc = (rhs_u * svv - rhs_v * suv) / det;
            let vc = (rhs_v * suu - rhs_u * suv) / det;
            let center = Point2D::new(uc + mx, vc + my);
            let mean_r = pts.iter().map(|p| p.dist(&center)).sum::<f64>() / nf;
            (center, mean_r)
        }
    };
    let spread = pts
        .iter()
        .map(|p| (p.dist(&center) - mean_r).abs())
        .fold(0.0f64, f64::max);
    if !(spread <= CONCYCLIC_TOL) {
        return Err(Error::NotConcyclic { spread });
    }
    Ok((center, mean_r))
}

/// Runs the construction chosen by `kind` on the graph.
pub fn build_spanner(kind: SpannerKind, g: &UnitDiskGraph) -> Result<SpannerGraph> {
    Ok(match kind {
        SpannerKind::Hop5 => build_hop5(g),
        SpannerKind::Hop3 => build_hop3(g),
        SpannerKind::Hop2 => build_hop2(g),
        SpannerKind::Circle4 => build_circle_hop4(g.points())?.spanner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hex::{cell_of, layer_cells};

    fn lcg_points(n: usize, seed: u64, scale: f64) -> PointSet {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15) | 1;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let pts = (0..n).map(|_| Point2D::new(next() * scale, next() * scale)).collect();
        PointSet::new(pts).unwrap()
    }

    // Points inside the middle band of the cell containing the origin.
    fn one_cell_points(n: usize, seed: u64) -> PointSet {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15) | 1;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let pts = (0..n).map(|_| Point2D::new(next() * 0.4, next() * 0.2)).collect();
        PointSet::new(pts).unwrap()
    }

    fn hop_distance(sp: &SpannerGraph, s: u32, t: u32) -> Option<usize> {
        let mut dist = vec![usize::MAX; sp.vertex_count()];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s as usize] = 0;
        while let Some(v) = queue.pop_front() {
            if v == t {
                return Some(dist[v as usize]);
            }
            for &w in sp.neighbors(v) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    fn max_stretch(g: &UnitDiskGraph, sp: &SpannerGraph) -> usize {
        g.edges()
            .iter()
            .map(|&(i, j)| hop_distance(sp, i, j).expect("spanner must connect adjacent points"))
            .max()
            .unwrap_or(0)
    }

    fn assert_subgraph(g: &UnitDiskGraph, sp: &SpannerGraph) {
        for &(i, j) in sp.edges() {
            assert!(g.has_edge(i, j), "edge ({i}, {j}) is not a unit-distance pair");
        }
    }

    #[test]
    fn graph_rejects_malformed_edges() {
        assert!(matches!(
            SpannerGraph::from_edges(3, [(1, 1)]),
            Err(Error::MalformedEdge { a: 1, b: 1 })
        ));
        assert!(matches!(
            SpannerGraph::from_edges(3, [(0, 3)]),
            Err(Error::MalformedEdge { a: 0, b: 3 })
        ));
    }

    #[test]
    fn graph_normalizes_sorts_and_dedups() {
        let g = SpannerGraph::from_edges(4, [(2, 1), (0, 3), (1, 2), (3, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 2)]);
        assert!(g.has_edge(3, 0));
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.max_degree(), 1);
    }

    #[test]
    fn kind_parses_and_displays() {
        for kind in SpannerKind::ALL {
            assert_eq!(kind.to_string().parse::<SpannerKind>().unwrap(), kind);
        }
        assert!(matches!("hop7".parse::<SpannerKind>(), Err(Error::BadParam(_))));
    }

    #[test]
    fn hop5_single_cell_is_a_star() {
        let ps = one_cell_points(12, 3);
        let g = UnitDiskGraph::build(ps);
        let sp = build_hop5(&g);
        let expect: Vec<(u32, u32)> = (1..12).map(|j| (0, j)).collect();
        assert_eq!(sp.edges(), expect.as_slice());
        assert_eq!(max_stretch(&g, &sp), 2);
    }

    #[test]
    fn hop5_unit_row_is_the_path_itself() {
        let pts = (0..6).map(|k| Point2D::new(k as f64, 0.0)).collect();
        let g = UnitDiskGraph::build(PointSet::new(pts).unwrap());
        let sp = build_hop5(&g);
        let expect: Vec<(u32, u32)> = (0..5).map(|k| (k, k + 1)).collect();
        assert_eq!(sp.edges(), expect.as_slice());
        assert_eq!(max_stretch(&g, &sp), 1);
    }

    #[test]
    fn hop5_respects_stretch_and_size_bounds() {
        for (seed, scale) in [(1u64, 5.0), (2, 8.0), (5, 3.0)] {
            let g = UnitDiskGraph::build(lcg_points(300, seed, scale));
            let sp = build_hop5(&g);
            assert_subgraph(&g, &sp);
            assert!(sp.edge_count() as f64 <= 5.5 * 300.0);
            assert!(max_stretch(&g, &sp) <= 5, "seed {seed}");
        }
    }

    #[test]
    fn hop5_bridge_is_lex_smallest_crossing_edge() {
        let g = UnitDiskGraph::build(lcg_points(150, 11, 4.0));
        let part = CellPartition::new(g.points());
        let bridges = BridgeMap::compute(&g, &part);
        for &(i, j) in g.edges() {
            let ci = part.cell_of(i as usize);
            let cj = part.cell_of(j as usize);
            if ci == cj {
                continue;
            }
            let b = bridges.get(&ci, &cj).expect("crossing edge implies a bridge");
            assert!(b.edge() <= (i, j), "bridge must be the first crossing edge");
            let (pi, qi) = b.endpoints;
            let (first, second) = if ci < cj { (ci, cj) } else { (cj, ci) };
            assert_eq!(part.cell_of(pi as usize), first);
            assert_eq!(part.cell_of(qi as usize), second);
            assert_eq!(b.short, first.adjacent(&second));
        }
    }

    #[test]
    fn hop5_bridge_counts_and_singleton_degrees() {
        let g = UnitDiskGraph::build(lcg_points(400, 7, 6.0));
        let part = CellPartition::new(g.points());
        let bridges = BridgeMap::compute(&g, &part);
        let mut per_cell: BTreeMap<HexCellId, usize> = BTreeMap::new();
        for b in bridges.iter() {
            *per_cell.entry(b.cells.0).or_default() += 1;
            *per_cell.entry(b.cells.1).or_default() += 1;
        }
        for (_, count) in per_cell {
            assert!(count <= 18);
        }

        let sp = build_hop5(&g);
        for (cell, members) in part.iter() {
            if members.len() == 1 {
                assert!(sp.degree(members[0]) <= 11, "singleton in {cell:?}");
            }
        }

        for b in bridges.iter() {
            for (endpoint, own, far) in
                [(b.endpoints.0, b.cells.0, b.cells.1), (b.endpoints.1, b.cells.1, b.cells.0)]
            {
                let (_, second) = layer_cells(&own);
                if second.contains(&far) {
                    let partner_cells: BTreeSet<HexCellId> = bridges
                        .iter()
                        .filter_map(|other| {
                            let here = other.endpoint_in(&own)?;
                            if here != endpoint {
                                return None;
                            }
                            let other_far =
                                if other.cells.0 == own { other.cells.1 } else { other.cells.0 };
                            layer_cells(&own).1.contains(&other_far).then_some(other_far)
                        })
                        .collect();
                    assert!(partner_cells.len() <= 5);
                }
            }
        }
    }

    #[test]
    fn hop3_single_cell_is_a_star() {
        let ps = one_cell_points(10, 9);
        let g = UnitDiskGraph::build(ps);
        let sp = build_hop3(&g);
        let expect: Vec<(u32, u32)> = (1..10).map(|j| (0, j)).collect();
        assert_eq!(sp.edges(), expect.as_slice());
    }

    #[test]
    fn hop3_two_adjacent_points_keep_the_single_bridge() {
        let pts = vec![Point2D::new(0.0, 0.0), Point2D::new(0.9, 0.0)];
        let g = UnitDiskGraph::build(PointSet::new(pts).unwrap());
        let sp = build_hop3(&g);
        assert_eq!(sp.edges(), &[(0, 1)]);
        assert_eq!(max_stretch(&g, &sp), 1);
    }

    #[test]
    fn hop3_respects_stretch_and_size_bounds() {
        for (seed, scale) in [(1u64, 5.0), (4, 8.0), (6, 2.0)] {
            let g = UnitDiskGraph::build(lcg_points(300, seed, scale));
            let sp = build_hop3(&g);
            assert_subgraph(&g, &sp);
            assert!(sp.edge_count() as f64 <= 11.0 * 300.0);
            assert!(max_stretch(&g, &sp) <= 3, "seed {seed}");
        }
    }

    #[test]
    fn hop3_every_crossing_edge_has_its_witness_path() {
        let g = UnitDiskGraph::build(lcg_points(250, 13, 4.0));
        let part = CellPartition::new(g.points());
        let bridges = BridgeMap::compute(&g, &part);
        let sp = build_hop3(&g);
        for &(i, j) in g.edges() {
            let ci = part.cell_of(i as usize);
            let cj = part.cell_of(j as usize);
            if ci == cj {
                continue;
            }
            let b = bridges.get(&ci, &cj).unwrap();
            let p = b.endpoint_in(&ci).unwrap();
            let q = b.endpoint_in(&cj).unwrap();
            assert!(i == p || sp.has_edge(i, p));
            assert!(sp.has_edge(p, q));
            assert!(j == q || sp.has_edge(q, j));
        }
    }

    #[test]
    fn hop3_isolated_cells_get_spanning_stars() {
        let pts = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(0.1, 0.1),
            Point2D::new(0.2, 0.0),
            Point2D::new(50.0, 0.0),
            Point2D::new(50.1, 0.1),
        ];
        let g = UnitDiskGraph::build(PointSet::new(pts).unwrap());
        let sp = build_hop3(&g);
        assert_eq!(sp.edges(), &[(0, 1), (0, 2), (3, 4)]);
        assert_eq!(max_stretch(&g, &sp), 2);
    }

    #[test]
    fn hop3_star_centers_on_long_bridge_endpoint() {
        let pts = vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(0.42, 0.24),
            Point2D::new(-0.2, 0.1),
            Point2D::new(1.31, 0.24),
            Point2D::new(1.732, 0.0),
        ];
        let cells: Vec<HexCellId> = pts.iter().map(cell_of).collect();
        assert_eq!(cells[0], cells[1]);
        assert_eq!(cells[0], cells[2]);
        assert_eq!(cells[3], cells[4]);
        assert_eq!(cells[0].hex_distance(&cells[3]), 2);

        let g = UnitDiskGraph::build(PointSet::new(pts).unwrap());
        let sp = build_hop3(&g);
        assert!(sp.has_edge(1, 3), "long bridge must be kept");
        assert!(sp.has_edge(1, 2) && sp.has_edge(0, 1), "star centered at bridge endpoint");
        assert!(!sp.has_edge(0, 2), "star must not be rooted at the cell's lowest index");
        assert!(max_stretch(&g, &sp) <= 3);
    }

    #[test]
    fn hop2_single_cell_is_a_star() {
        let ps = one_cell_points(15, 21);
        let g = UnitDiskGraph::build(ps);
        let sp = build_hop2(&g);
        let expect: Vec<(u32, u32)> = (1..15).map(|j| (0, j)).collect();
        assert_eq!(sp.edges(), expect.as_slice());
        assert_eq!(max_stretch(&g, &sp), 2);
    }

    #[test]
    fn hop2_crossing_pair_stays_within_two_hops() {
        let pts = vec![Point2D::new(0.3, 0.0), Point2D::new(1.1, 0.2)];
        let g = UnitDiskGraph::build(PointSet::new(pts).unwrap());
        assert_eq!(g.edge_count(), 1);
        let sp = build_hop2(&g);
        assert_eq!(sp.edges(), &[(0, 1)]);
    }

    #[test]
    fn hop2_respects_stretch_and_size_bounds() {
        let n = 500;
        let g = UnitDiskGraph::build(lcg_points(n, 9, 4.0));
        let sp = build_hop2(&g);
        assert_subgraph(&g, &sp);
        assert!(max_stretch(&g, &sp) <= 2);
        let cap = 10.0 * n as f64 * (n as f64).log2().ceil();
        assert!((sp.edge_count() as f64) <= cap);
    }

    #[test]
    fn hop2_handles_points_on_cell_boundaries() {
        let mut pts = vec![
            Point2D::new(3.0f64.sqrt() / 4.0, 0.0),
            Point2D::new(3.0f64.sqrt() / 4.0, 0.2),
            Point2D::new(3.0f64.sqrt() / 4.0, -0.2),
        ];
        pts.extend((0..5).map(|k| Point2D::new(0.9 + 0.01 * k as f64, 0.01)));
        let g = UnitDiskGraph::build(PointSet::new(pts).unwrap());
        let sp = build_hop2(&g);
        assert_subgraph(&g, &sp);
        assert!(max_stretch(&g, &sp) <= 2);
    }

    #[test]
    fn circle_small_radius_is_a_star_from_point_zero() {
        let n = 12;
        let pts = (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Point2D::new(0.4 * t.cos(), 0.4 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let g = UnitDiskGraph::build(ps.clone());
        let build = build_circle_hop4(&ps).unwrap();
        assert!(matches!(build.plan, CirclePlan::Star { root: 0 }));
        let expect: Vec<(u32, u32)> = (1..n as u32).map(|j| (0, j)).collect();
        assert_eq!(build.spanner.edges(), expect.as_slice());
        assert!(max_stretch(&g, &build.spanner) <= 2);
    }

    #[test]
    fn circle_even_64_points_stay_within_four_hops() {
        let n = 64;
        let pts = (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Point2D::new(1.2 * t.cos(), 1.2 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let g = UnitDiskGraph::build(ps.clone());
        let build = build_circle_hop4(&ps).unwrap();
        assert_subgraph(&g, &build.spanner);
        assert!(max_stretch(&g, &build.spanner) <= 4);
        match &build.plan {
            CirclePlan::Chain(chain) => {
                assert!(chain.closed);
                assert_eq!(chain.order.len(), n);
            }
            other => panic!("expected a chain plan, got {other:?}"),
        }
    }

    #[test]
    fn circle_greedy_chain_follows_consecutive_reach() {
        let angles = [0.0f64, 4.0, 8.0, 11.0, 14.0];
        let pts = angles
            .iter()
            .map(|deg| {
                let t = deg.to_radians();
                Point2D::new(5.0 * t.cos(), 5.0 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let build = build_circle_hop4(&ps).unwrap();
        let CirclePlan::Chain(chain) = &build.plan else {
            panic!("expected a chain plan");
        };
        assert_eq!(chain.order, vec![0, 1, 2, 3, 4]);
        assert_eq!(chain.chain, vec![0, 3]);
        assert!(chain.closed, "the last chain vertex reaches back to point 0");
        assert_eq!(chain.blocks(), vec![vec![0, 1, 2, 3], vec![3, 4, 0]]);
        assert_eq!(build.spanner.edges(), &[(0, 1), (0, 2), (0, 3), (3, 4)]);
    }

    #[test]
    fn circle_open_chain_stars_trailing_points() {
        let pts = (0..12)
            .map(|k| {
                let t = (k as f64).to_radians();
                Point2D::new(10.0 * t.cos(), 10.0 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let g = UnitDiskGraph::build(ps.clone());
        let build = build_circle_hop4(&ps).unwrap();
        let CirclePlan::Chain(chain) = &build.plan else {
            panic!("expected a chain plan");
        };
        assert_eq!(chain.chain, vec![0, 5, 10]);
        assert!(!chain.closed);
        assert_eq!(
            chain.blocks(),
            vec![vec![0, 1, 2, 3, 4, 5], vec![5, 6, 7, 8, 9, 10], vec![10, 11]]
        );
        assert!(build.spanner.has_edge(10, 11), "trailing point hangs off the last chain vertex");
        assert_subgraph(&g, &build.spanner);
        assert!(max_stretch(&g, &build.spanner) <= 4);
    }

    #[test]
    fn circle_full_ring_keeps_gap_crossing_edges_short() {
        let n = 30;
        let pts = (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Point2D::new(1.1 * t.cos(), 1.1 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let g = UnitDiskGraph::build(ps.clone());
        let build = build_circle_hop4(&ps).unwrap();
        let CirclePlan::Chain(chain) = &build.plan else {
            panic!("expected a chain plan");
        };
        assert_eq!(chain.chain, vec![0, 4, 8, 12, 16, 20, 24, 28]);
        assert!(chain.closed);
        assert_subgraph(&g, &build.spanner);
        assert!(max_stretch(&g, &build.spanner) <= 4);
    }

    #[test]
    fn circle_arc_start_follows_largest_gap() {
        let angles = [100.0f64, 140.0, 180.0, 220.0];
        let pts: Vec<Point2D> = angles
            .iter()
            .map(|deg| {
                let t = deg.to_radians();
                Point2D::new(5.0 * t.cos(), 5.0 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let err = build_circle_hop4(&ps).unwrap_err();
        assert!(matches!(err, Error::DisconnectedCircle { .. }));

        let angles = [100.0f64, 104.0, 108.0, 112.0];
        let pts: Vec<Point2D> = angles
            .iter()
            .map(|deg| {
                let t = deg.to_radians();
                Point2D::new(5.0 * t.cos(), 5.0 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let build = build_circle_hop4(&ps).unwrap();
        let CirclePlan::Chain(chain) = &build.plan else {
            panic!("expected a chain plan");
        };
        assert_eq!(chain.order[0], 0, "arc must start after the wrap gap");
    }

    #[test]
    fn circle_disconnected_points_are_reported() {
        let pts = vec![
            Point2D::new(10.0, 0.0),
            Point2D::new(10.0 * 0.1f64.cos(), 10.0 * 0.1f64.sin()),
            Point2D::new(-10.0, 0.0),
        ];
        let ps = PointSet::new(pts).unwrap();
        let err = build_circle_hop4(&ps).unwrap_err();
        match err {
            Error::DisconnectedCircle { dist, .. } => assert!(dist > 1.0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn circle_rejects_non_concyclic_and_collinear_inputs() {
        let square = PointSet::new(vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(1.0, 0.0),
            Point2D::new(0.0, 1.0),
            Point2D::new(0.9, 0.9),
        ])
        .unwrap();
        assert!(matches!(build_circle_hop4(&square), Err(Error::NotConcyclic { .. })));

        let line = PointSet::new(
            (0..5).map(|k| Point2D::new(0.5 * k as f64, 0.0)).collect(),
        )
        .unwrap();
        assert!(matches!(build_circle_hop4(&line), Err(Error::NotConcyclic { .. })));
    }

    #[test]
    fn circle_two_points_split_by_distance() {
        let close = PointSet::new(vec![Point2D::new(0.0, 0.0), Point2D::new(0.8, 0.0)]).unwrap();
        let build = build_circle_hop4(&close).unwrap();
        assert_eq!(build.spanner.edges(), &[(0, 1)]);

        let far = PointSet::new(vec![Point2D::new(0.0, 0.0), Point2D::new(1.5, 0.0)]).unwrap();
        assert!(matches!(build_circle_hop4(&far), Err(Error::DisconnectedCircle { .. })));
    }

    #[test]
    fn circle_blocks_of_udg_edges_are_near_each_other() {
        let n = 40;
        let pts = (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Point2D::new(2.5 * t.cos(), 2.5 * t.sin())
            })
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let g = UnitDiskGraph::build(ps.clone());
        let build = build_circle_hop4(&ps).unwrap();
        let CirclePlan::Chain(chain) = &build.plan else {
            panic!("expected a chain plan");
        };
        let mut pos_of = vec![0usize; n];
        for (pos, &idx) in chain.order.iter().enumerate() {
            pos_of[idx as usize] = pos;
        }
        let blocks = chain.blocks();
        let block_count = blocks.len();
        let blocks_of = |pos: usize| -> Vec<usize> {
            blocks
                .iter()
                .enumerate()
                .filter(|(_, b)| b.contains(&pos))
                .map(|(k, _)| k)
                .collect()
        };
        for &(u, v) in g.edges() {
            let bu = blocks_of(pos_of[u as usize]);
            let bv = blocks_of(pos_of[v as usize]);
            let ok = bu.iter().any(|&x| {
                bv.iter().any(|&y| {
                    let d = x.abs_diff(y);
                    d <= 2 || (chain.closed && block_count - d <= 2)
                })
            });
            assert!(ok, "edge ({u}, {v}) spans distant blocks");
        }
    }

    #[test]
    fn builders_are_deterministic() {
        let g = UnitDiskGraph::build(lcg_points(200, 33, 5.0));
        assert_eq!(build_hop5(&g).edges(), build_hop5(&g).edges());
        assert_eq!(build_hop3(&g).edges(), build_hop3(&g).edges());
        assert_eq!(build_hop2(&g).edges(), build_hop2(&g).edges());
    }

    #[test]
    fn dispatcher_matches_direct_builders() {
        let g = UnitDiskGraph::build(lcg_points(100, 2, 3.0));
        assert_eq!(build_spanner(SpannerKind::Hop5, &g).unwrap().edges(), build_hop5(&g).edges());
        assert_eq!(build_spanner(SpannerKind::Hop3, &g).unwrap().edges(), build_hop3(&g).edges());
        assert_eq!(build_spanner(SpannerKind::Hop2, &g).unwrap().edges(), build_hop2(&g).edges());
        assert!(build_spanner(SpannerKind::Circle4, &g).is_err());
    }
}
