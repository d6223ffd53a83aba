//! Oracles for the spanner claims: exact hop stretch, planarity, edge and
//! degree audits, an exhaustive plane-spanner minimizer for small convex
//! instances, Moore-type impossibility certificates, and the triangle-free
//! audit.

use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geom::{segments_intersect, shared_endpoint_overlap, unit_neighbors, PointSet};
use crate::spanner::{SpannerGraph, SpannerKind};
use crate::udg::UnitDiskGraph;

/// One named bound with its observed value.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub bound: f64,
    pub observed: f64,
    pub pass: bool,
}

impl BoundCheck {
    fn le(name: &str, observed: f64, bound: f64) -> Self {
        BoundCheck { name: name.to_string(), bound, observed, pass: observed <= bound }
    }
}

/// Planarity verdict with the first crossing edge pair when not plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarityReport {
    pub planar: bool,
    pub crossing: Option<((u32, u32), (u32, u32))>,
}

/// Verification summary for a spanner against its unit disk graph.
///
/// `stretch` is `None` when some UDG edge's endpoints are disconnected in
/// the spanner (an infinite stretch); `worst_edge` is then the first such
/// edge, and otherwise the first UDG edge attaining the stretch. `planar`
/// is `None` when the planarity check was not run. Serializes as
/// `{"stretch", "worst_edge", "edges", "planar", "checks"}` with `null`
/// for missing values.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub stretch: Option<u32>,
    pub worst_edge: Option<(u32, u32)>,
    pub edges: usize,
    pub planar: Option<PlanarityReport>,
    pub checks: Vec<BoundCheck>,
}

impl VerificationReport {
    /// True when no UDG edge is disconnected, every recorded bound check
    /// passed, and planarity (if checked and demanded by a check) holds.
    pub fn passed(&self) -> bool {
        self.stretch.is_some() && self.checks.iter().all(|c| c.pass)
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VerificationReport", 5)?;
        s.serialize_field("stretch", &self.stretch)?;
        s.serialize_field("worst_edge", &self.worst_edge)?;
        s.serialize_field("edges", &self.edges)?;
        s.serialize_field("planar", &self.planar.map(|p| p.planar))?;
        s.serialize_field("checks", &self.checks)?;
        s.end()
    }
}

/// Errors with the list of spanner edges absent from the graph.
pub fn validate_subgraph(g: &UnitDiskGraph, s: &SpannerGraph) -> Result<()> {
    let foreign: Vec<(u32, u32)> = s
        .edges()
        .iter()
        .copied()
        .filter(|&(i, j)| i as usize >= g.len() || j as usize >= g.len() || !g.has_edge(i, j))
        .collect();
    if foreign.is_empty() {
        Ok(())
    } else {
        Err(Error::ForeignEdges(foreign))
    }
}

fn bfs_from(adj: &[Vec<u32>], src: u32, dist: &mut [u32]) {
    dist.fill(u32::MAX);
    dist[src as usize] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize] + 1;
        for &w in &adj[v as usize] {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = d;
                queue.push_back(w);
            }
        }
    }
}

/// Exact hop stretch of `s` with respect to `g`: the maximum over UDG
/// edges of the unweighted spanner distance between the endpoints, from
/// one breadth-first traversal per vertex.
pub fn hop_stretch(g: &UnitDiskGraph, s: &SpannerGraph) -> Result<VerificationReport> {
    validate_subgraph(g, s)?;
    let n = g.len();
    let mut dist = vec![u32::MAX; n];
    let mut stretch = 1u32;
    let mut worst: Option<(u32, u32)> = None;
    let mut disconnected: Option<(u32, u32)> = None;
    for i in 0..n {
        let above: Vec<u32> = g.neighbors_above(i).collect();
        if above.is_empty() {
            continue;
        }
        bfs_from(s.adjacency(), i as u32, &mut dist);
        for j in above {
            let d = dist[j as usize];
            let i = i as u32;
            if d == u32::MAX {
                disconnected.get_or_insert((i, j));
            } else if d > stretch || worst.is_none() {
                stretch = stretch.max(d);
                if d == stretch {
                    worst = Some((i, j));
                }
            }
        }
    }
    let report = match disconnected {
        Some(edge) => VerificationReport {
            stretch: None,
            worst_edge: Some(edge),
            edges: s.edge_count(),
            planar: None,
            checks: Vec::new(),
        },
        None => VerificationReport {
            stretch: Some(stretch),
            worst_edge: worst,
            edges: s.edge_count(),
            planar: None,
            checks: Vec::new(),
        },
    };
    Ok(report)
}

/// Checks that no two straight-line edges cross or overlap; edges may
/// share endpoints. Reports the first crossing pair in edge-list order.
pub fn is_plane(ps: &PointSet, s: &SpannerGraph) -> PlanarityReport {
    let edges = s.edges();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[x + 1..] {
            let crossing = if a == c {
                shared_endpoint_overlap(&ps[a as usize], &ps[b as usize], &ps[d as usize])
            } else if a == d || b == c {
                let (s0, u, v) = if a == d { (a, b, c) } else { (b, a, d) };
                shared_endpoint_overlap(&ps[s0 as usize], &ps[u as usize], &ps[v as usize])
            } else if b == d {
                shared_endpoint_overlap(&ps[b as usize], &ps[a as usize], &ps[c as usize])
            } else {
                segments_intersect(
                    &ps[a as usize],
                    &ps[b as usize],
                    &ps[c as usize],
                    &ps[d as usize],
                )
            };
            if crossing {
                return PlanarityReport { planar: false, crossing: Some(((a, b), (c, d))) };
            }
        }
    }
    PlanarityReport { planar: true, crossing: None }
}

/// Smallest `b` with `2^b >= n`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        u64::BITS - ((n - 1) as u64).leading_zeros()
    }
}

/// Audits the construction-specific bounds: edge count and stretch for the
/// hop builders, stretch and planarity for the circle builder.
pub fn audit_bounds(
    g: &UnitDiskGraph,
    s: &SpannerGraph,
    kind: SpannerKind,
) -> Result<VerificationReport> {
    let mut report = hop_stretch(g, s)?;
    let n = g.len() as f64;
    let m = s.edge_count() as f64;
    let observed_stretch = report.stretch.map_or(f64::INFINITY, f64::from);
    let mut checks = Vec::new();
    match kind {
        SpannerKind::Hop5 => checks.push(BoundCheck::le("edge_count", m, 5.5 * n)),
        SpannerKind::Hop3 => checks.push(BoundCheck::le("edge_count", m, 11.0 * n)),
        SpannerKind::Hop2 => {
            let bound = 10.0 * n * f64::from(ceil_log2(g.len()));
            checks.push(BoundCheck::le("edge_count", m, bound));
        }
        SpannerKind::Circle4 => {}
    }
    checks.push(BoundCheck::le(
        "hop_stretch",
        observed_stretch,
        f64::from(kind.stretch_bound()),
    ));
    if kind == SpannerKind::Circle4 {
        let plane = is_plane(g.points(), s);
        report.planar = Some(plane);
        checks.push(BoundCheck {
            name: "planar".to_string(),
            bound: 1.0,
            observed: f64::from(u8::from(plane.planar)),
            pass: plane.planar,
        });
    }
    report.checks = checks;
    Ok(report)
}

/// Maximum number of vertices within `k` hops of a vertex in any graph of
/// maximum degree `delta`: `1 + delta ((delta-1)^k - 1)/(delta-2)`, read
/// as `1 + 2k` at `delta = 2`. Saturates at `u64::MAX`.
pub fn moore_bound(k: u32, delta: u32) -> u64 {
    assert!(k >= 1, "radius must be at least 1");
    assert!(delta >= 2, "degree bound must be at least 2");
    if delta == 2 {
        return 1 + 2 * k as u64;
    }
    let d = delta as u128;
    let mut pow: u128 = 1;
    for _ in 0..k {
        pow = pow.saturating_mul(d - 1);
    }
    let ball = (d.saturating_mul(pow - 1) / (d - 2)).saturating_add(1);
    u64::try_from(ball).unwrap_or(u64::MAX)
}

/// Certificate that a graph admits no `k`-hop spanner of maximum degree
/// `delta`, for the two instance templates that support the claim.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ImpossibilityCertificate {
    pub k: u32,
    pub delta: u32,
    pub moore: u64,
    pub n: usize,
    pub valid: bool,
    /// Which argument fired: "moore_ball" for a complete graph larger
    /// than the ball bound, "path_encoding" for a clique chain with
    /// group parameter `t > 2 delta^k`.
    pub criterion: String,
}

fn bridge_edges(g: &UnitDiskGraph) -> Vec<(u32, u32)> {
    let n = g.len();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut bridges = Vec::new();
    // Iterative lowlink traversal; the parent edge is skipped once even
    // when parallel edges cannot occur.
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx == 0 {
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
            }
            if *idx < adj[v].len() {
                let w = adj[v][*idx] as usize;
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        let (a, b) = (p as u32, v as u32);
                        bridges.push((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// Checks the graph against the two impossibility templates and evaluates
/// the corresponding threshold.
///
/// A complete graph is valid when `n > moore_bound(k, delta)`. A chain of
/// equal odd-size cliques joined in a path by single edges is valid when
/// the group parameter `t` (group size `2t + 1`) exceeds `2 delta^k`.
pub fn certify_no_bounded_degree_spanner(
    g: &UnitDiskGraph,
    k: u32,
    delta: u32,
) -> Result<ImpossibilityCertificate> {
    let n = g.len();
    let moore = moore_bound(k, delta);
    if n >= 2 && g.edge_count() == n * (n - 1) / 2 {
        return Ok(ImpossibilityCertificate {
            k,
            delta,
            moore,
            n,
            valid: (n as u64) > moore,
            criterion: "moore_ball".to_string(),
        });
    }

    let bridges = bridge_edges(g);
    let is_bridge = |i: u32, j: u32| bridges.binary_search(&(i.min(j), i.max(j))).is_ok();

    // Components after bridge removal, in discovery order of the lowest
    // vertex index.
    let adj = g.adjacency();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<u32>> = Vec::new();
    for v in 0..n as u32 {
        if comp[v as usize] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![v];
        comp[v as usize] = id;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x as usize] {
                if comp[y as usize] == usize::MAX && !is_bridge(x, y) {
                    comp[y as usize] = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        comps.push(members);
    }

    let size = comps[0].len();
    if size < 3 || size % 2 == 0 {
        return Err(Error::TemplateMismatch(format!(
            "group size {size} is not an odd number >= 3"
        )));
    }
    if comps.iter().any(|c| c.len() != size) {
        return Err(Error::TemplateMismatch("groups have unequal sizes".to_string()));
    }
    if comps.len() < 2 {
        return Err(Error::TemplateMismatch(
            "graph is neither complete nor a chain of at least two groups".to_string(),
        ));
    }
    for members in &comps {
        for (a_idx, &a) in members.iter().enumerate() {
            for &b in &members[a_idx + 1..] {
                if !g.has_edge(a.min(b), a.max(b)) {
                    return Err(Error::TemplateMismatch(format!(
                        "group containing vertex {a} is not complete"
                    )));
                }
            }
        }
    }
    if bridges.len() != comps.len() - 1 {
        return Err(Error::TemplateMismatch(format!(
            "{} connector edges cannot join {} groups in a path",
            bridges.len(),
            comps.len()
        )));
    }
    let mut link_degree = vec![0usize; comps.len()];
    for &(a, b) in &bridges {
        link_degree[comp[a as usize]] += 1;
        link_degree[comp[b as usize]] += 1;
    }
    let ends = link_degree.iter().filter(|&&d| d == 1).count();
    if link_degree.iter().any(|&d| d > 2) || ends != 2 {
        return Err(Error::TemplateMismatch("groups are not joined in a path".to_string()));
    }

    let t = ((size - 1) / 2) as u128;
    let mut threshold: u128 = 2;
    for _ in 0..k {
        threshold = threshold.saturating_mul(delta as u128);
    }
    Ok(ImpossibilityCertificate {
        k,
        delta,
        moore,
        n,
        valid: t > threshold,
        criterion: "path_encoding".to_string(),
    })
}

/// Result of the triangle-free degree and edge-count audit.
#[derive(Debug, Clone)]
pub struct TriangleFreeAudit {
    /// False when the graph contains a triangle, making the bounds
    /// inapplicable; `triangle` then holds the first one found.
    pub applicable: bool,
    pub triangle: Option<(u32, u32, u32)>,
    pub checks: Vec<BoundCheck>,
}

/// Verifies max degree <= 5 and edge count <= 2.5 n for triangle-free
/// unit disk graphs; a triangle makes the audit inapplicable rather than
/// failed.
pub fn audit_triangle_free(g: &UnitDiskGraph) -> TriangleFreeAudit {
    for i in 0..g.len() {
        let above: Vec<u32> = g.neighbors_above(i).collect();
        for (x, &j) in above.iter().enumerate() {
            let rest = &above[x + 1..];
            for k in g.neighbors_above(j as usize) {
                if rest.binary_search(&k).is_ok() {
                    return TriangleFreeAudit {
                        applicable: false,
                        triangle: Some((i as u32, j, k)),
                        checks: Vec::new(),
                    };
                }
            }
        }
    }
    let mut degree = vec![0usize; g.len()];
    for &(i, j) in g.edges() {
        degree[i as usize] += 1;
        degree[j as usize] += 1;
    }
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let checks = vec![
        BoundCheck::le("max_degree", max_degree as f64, 5.0),
        BoundCheck::le("edge_count", g.edge_count() as f64, 2.5 * g.len() as f64),
    ];
    TriangleFreeAudit { applicable: true, triangle: None, checks }
}

/// Strictly convex hull positions of all points, counterclockwise, or
/// `None` when some point is not a hull vertex.
fn convex_positions(ps: &PointSet) -> Option<Vec<u32>> {
    let n = ps.len();
    if n <= 2 {
        return Some((0..n as u32).collect());
    }
    let mut idx: Vec<u32> = (0..n as u32).collect();
    idx.sort_by(|&a, &b| {
        let (p, q) = (&ps[a as usize], &ps[b as usize]);
        p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
    });
    let turn = |o: u32, a: u32, b: u32| {
        crate::geom::orient(&ps[o as usize], &ps[a as usize], &ps[b as usize])
    };
    let mut hull: Vec<u32> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let scan: Box<dyn Iterator<Item = &u32>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &v in scan {
            while hull.len() >= start + 2
                && turn(hull[hull.len() - 2], hull[hull.len() - 1], v) <= 0
            {
                hull.pop();
            }
            hull.push(v);
        }
        hull.pop();
    }
    (hull.len() == n).then_some(hull)
}

/// Minimum hop stretch over every maximal noncrossing subgraph of the
/// unit disk graph on convex-position points, by exhaustive branching
/// over chords. Values above `cap` are truncated to `cap + 1`; a result
/// of at most `cap` is exact. Restricting to maximal subgraphs loses
/// nothing because adding a noncrossing edge never increases stretch.
pub fn brute_min_plane_stretch(ps: &PointSet, cap: u32) -> Result<u32> {
    const MAX_POINTS: usize = 12;
    let n = ps.len();
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints { n, max: MAX_POINTS });
    }
    let hull = convex_positions(ps).ok_or(Error::NotConvexPosition)?;
    let mut pos = vec![0usize; n];
    for (p, &v) in hull.iter().enumerate() {
        pos[v as usize] = p;
    }

    let mut chords: Vec<(u32, u32)> = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if unit_neighbors(&ps[i as usize], &ps[j as usize]) {
                chords.push((i, j));
            }
        }
    }
    if chords.is_empty() {
        return Ok(1);
    }
    let span = |&(i, j): &(u32, u32)| {
        let gap = pos[i as usize].abs_diff(pos[j as usize]);
        gap.min(n - gap)
    };
    chords.sort_by_key(|c| (span(c), *c));

    let m = chords.len();
    let mut crosses = vec![vec![false; m]; m];
    for x in 0..m {
        let (a, b) = chords[x];
        for y in x + 1..m {
            let (c, d) = chords[y];
            let crossing = if a == c || a == d || b == c || b == d {
                false
            } else {
                segments_intersect(
                    &ps[a as usize],
                    &ps[b as usize],
                    &ps[c as usize],
                    &ps[d as usize],
                )
            };
            crosses[x][y] = crossing;
            crosses[y][x] = crossing;
        }
    }

    // Hull-adjacent chords cross nothing and belong to every maximal
    // subgraph; only the rest are branched on.
    let first_free = chords.iter().position(|c| span(c) > 1).unwrap_or(m);

    struct Search<'a> {
        chords: &'a [(u32, u32)],
        crosses: &'a [Vec<bool>],
        n: usize,
        cap: u32,
        best: u32,
        included: Vec<usize>,
        state: Vec<u8>, // 0 undecided, 1 included, 2 excluded
    }

    impl Search<'_> {
        fn stretch_of(&self, optimistic: bool) -> u32 {
            let mut adj = vec![Vec::new(); self.n];
            for (x, &(a, b)) in self.chords.iter().enumerate() {
                let take = match self.state[x] {
                    1 => true,
                    0 => optimistic,
                    _ => false,
                };
                if take {
                    adj[a as usize].push(b);
                    adj[b as usize].push(a);
                }
            }
            let mut worst = 1u32;
            let mut dist = vec![u32::MAX; self.n];
            for &(a, b) in self.chords {
                dist.fill(u32::MAX);
                dist[a as usize] = 0;
                let mut queue = VecDeque::from([a]);
                while let Some(v) = queue.pop_front() {
                    if v == b {
                        break;
                    }
                    for &w in &adj[v as usize] {
                        if dist[w as usize] == u32::MAX {
                            dist[w as usize] = dist[v as usize] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                worst = worst.max(dist[b as usize].min(self.cap + 1));
                if worst > self.cap {
                    return self.cap + 1;
                }
            }
            worst
        }

        fn excluded_is_dead(&self) -> bool {
            (0..self.chords.len()).any(|x| {
                self.state[x] == 2
                    && !self.included.iter().any(|&y| self.crosses[x][y])
                    && !(0..self.chords.len())
                        .any(|y| self.state[y] == 0 && self.crosses[x][y])
            })
        }

        fn recurse(&mut self, from: usize) {
            if self.stretch_of(true) >= self.best {
                return;
            }
            if self.excluded_is_dead() {
                return;
            }
            let next = (from..self.chords.len()).find(|&x| {
                self.state[x] == 0 && !self.included.iter().any(|&y| self.crosses[x][y])
            });
            let Some(x) = next else {
                // Every undecided chord is blocked, so closing over them
                // adds nothing: the included set is maximal if each
                // excluded chord is crossed.
                let maximal = (0..self.chords.len()).all(|y| {
                    self.state[y] != 2 || self.included.iter().any(|&z| self.crosses[y][z])
                });
                if maximal {
                    self.best = self.best.min(self.stretch_of(false));
                }
                return;
            };
            self.state[x] = 1;
            self.included.push(x);
            self.recurse(x + 1);
            self.included.pop();
            self.state[x] = 2;
            self.recurse(x + 1);
            self.state[x] = 0;
        }
    }

    let mut state = vec![0u8; m];
    let mut included = Vec::new();
    for x in 0..first_free {
        state[x] = 1;
        included.push(x);
    }
    let mut search =
        Search { chords: &chords, crosses: &crosses, n, cap, best: cap + 1, included, state };
    search.recurse(first_free);
    Ok(search.best)
}
