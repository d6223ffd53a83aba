//! Deterministic, seeded point-set generators for every instance family
//! the constructions and audits consume: uniform boxes, two-disk clusters,
//! unit-diameter cliques, the eight-point circle, the lower-bound polygon,
//! chained cliques, uniform circles, and triangle-free samples.
//!
//! Randomness comes from ChaCha8 keyed with [`SeedableRng::seed_from_u64`];
//! each uniform draw takes the top 53 bits of the next 64-bit output scaled
//! by 2^-53, so the same seed reproduces the same bytes on every platform.
//! Every generator re-validates its defining constraints before returning.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geom::{Point2D, PointSet};
use crate::udg::UnitDiskGraph;

/// Instance family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Uniform,
    Cluster,
    UnitClique,
    Circle8,
    NgonLb,
    CliqueChain,
    CircleUniform,
}

impl GenKind {
    pub const ALL: [GenKind; 7] = [
        GenKind::Uniform,
        GenKind::Cluster,
        GenKind::UnitClique,
        GenKind::Circle8,
        GenKind::NgonLb,
        GenKind::CliqueChain,
        GenKind::CircleUniform,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GenKind::Uniform => "uniform",
            GenKind::Cluster => "cluster",
            GenKind::UnitClique => "unit_clique",
            GenKind::Circle8 => "circle8",
            GenKind::NgonLb => "ngon_lb",
            GenKind::CliqueChain => "clique_chain",
            GenKind::CircleUniform => "circle_uniform",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::BadParam(format!("unknown generator kind '{s}'")))
    }
}

/// Full description of one instance to generate.
///
/// `size` is the kind's geometric parameter: box side for `uniform`,
/// cluster-center distance for `cluster`, and circle radius for
/// `circle_uniform`; the other kinds ignore it.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    pub size: f64,
    pub t: usize,
    pub groups: usize,
    pub eps: f64,
}

impl GenSpec {
    pub fn new(kind: GenKind) -> Self {
        GenSpec { kind, n: 100, seed: 0, size: 5.0, t: 2, groups: 3, eps: 0.02 }
    }
}

/// Generated points plus the parameter record embedded under "meta".
#[derive(Debug, Clone)]
pub struct Generated {
    pub points: PointSet,
    pub meta: BTreeMap<String, Value>,
}

const SAMPLE_ATTEMPTS: usize = 10_000;

/// Uniform double in [0, 1) from the top 53 bits of the next output word.
fn uniform01(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Tracks exact coordinates already produced so rejection sampling never
/// emits a duplicate pair.
#[derive(Default)]
struct DupGuard(BTreeSet<(u64, u64)>);

impl DupGuard {
    fn admit(&mut self, p: &Point2D) -> bool {
        self.0.insert((p.x.to_bits(), p.y.to_bits()))
    }
}

fn sample<F>(index: usize, guard: &mut DupGuard, mut draw: F) -> Result<Point2D>
where
    F: FnMut() -> Option<Point2D>,
{
    for _ in 0..SAMPLE_ATTEMPTS {
        if let Some(p) = draw() {
            if guard.admit(&p) {
                return Ok(p);
            }
        }
    }
    Err(Error::SamplingExhausted { index, attempts: SAMPLE_ATTEMPTS })
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParam(msg.to_string()))
    }
}

/// `n` points uniform in the axis-aligned square `[0, box_size]^2`.
pub fn gen_uniform(n: usize, box_size: f64, seed: u64) -> Result<PointSet> {
    require(n >= 1, "uniform needs n >= 1")?;
    require(box_size > 0.0, "uniform needs a positive box side")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut guard = DupGuard::default();
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let p = sample(i, &mut guard, || {
            Some(Point2D::new(uniform01(&mut rng) * box_size, uniform01(&mut rng) * box_size))
        })?;
        pts.push(p);
    }
    assert!(
        pts.iter().all(|p| (0.0..=box_size).contains(&p.x) && (0.0..=box_size).contains(&p.y)),
        "sampled point escaped the box"
    );
    PointSet::new(pts)
}

fn draw_in_disk(rng: &mut ChaCha8Rng, center: Point2D, radius: f64) -> Option<Point2D> {
    let x = (2.0 * uniform01(rng) - 1.0) * radius;
    let y = (2.0 * uniform01(rng) - 1.0) * radius;
    (x * x + y * y <= radius * radius).then(|| Point2D::new(center.x + x, center.y + y))
}

/// Two radius-1/2 disks with centers `center_dist` apart on the x-axis;
/// the first `n / 2` points land in the left disk, the rest in the right.
pub fn gen_cluster(n: usize, center_dist: f64, seed: u64) -> Result<PointSet> {
    require(n >= 1, "cluster needs n >= 1")?;
    require(center_dist > 0.0, "cluster needs a positive center distance")?;
    let centers = [Point2D::new(0.0, 0.0), Point2D::new(center_dist, 0.0)];
    let left = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut guard = DupGuard::default();
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let center = centers[usize::from(i >= left)];
        pts.push(sample(i, &mut guard, || draw_in_disk(&mut rng, center, 0.5))?);
    }
    for (i, p) in pts.iter().enumerate() {
        let center = centers[usize::from(i >= left)];
        assert!(p.dist_sq(&center) <= 0.25, "cluster point escaped its disk");
    }
    PointSet::new(pts)
}

/// `n` points in a disk of unit diameter, so the unit disk graph on the
/// output is complete.
pub fn gen_unit_clique(n: usize, seed: u64) -> Result<PointSet> {
    require(n >= 1, "unit_clique needs n >= 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut guard = DupGuard::default();
    let center = Point2D::new(0.0, 0.0);
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        pts.push(sample(i, &mut guard, || draw_in_disk(&mut rng, center, 0.5))?);
    }
    let ps = PointSet::new(pts)?;
    let g = UnitDiskGraph::build(ps.clone());
    assert_eq!(g.edge_count(), n * (n - 1) / 2, "unit clique must be complete");
    Ok(ps)
}

/// `n` points at independently uniform angles on the circle of radius `r`
/// centered at the origin.
pub fn gen_circle_uniform(n: usize, r: f64, seed: u64) -> Result<PointSet> {
    require(n >= 1, "circle_uniform needs n >= 1")?;
    require(r > 0.0, "circle_uniform needs a positive radius")?;
    let tau = 2.0 * std::f64::consts::PI;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut guard = DupGuard::default();
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let p = sample(i, &mut guard, || {
            let theta = uniform01(&mut rng) * tau;
            Some(Point2D::new(r * theta.cos(), r * theta.sin()))
        })?;
        pts.push(p);
    }
    let center = Point2D::new(0.0, 0.0);
    let tol = 1e-12 * (1.0 + r);
    assert!(
        pts.iter().all(|p| (p.dist(&center) - r).abs() <= tol),
        "circle point drifted off the circle"
    );
    PointSet::new(pts)
}

/// The eight-point configuration on the unit circle whose plane spanners
/// all need three hops somewhere.
///
/// Middle arcs span `alpha = 15` degrees so the chord over four of them is
/// exactly 1; the two end arcs span `beta` with `sin(beta / 2) = 1.1
/// sin(alpha / 2)`, making the end chords 1.1 times the middle chord. The
/// returned record lists the solved angles; all five distance constraints
/// are re-checked against the emitted coordinates to 1e-10.
pub fn gen_circle8() -> Result<(PointSet, BTreeMap<String, Value>)> {
    let alpha = 15.0f64.to_radians();
    let beta = 2.0 * (1.1 * (alpha / 2.0).sin()).asin();
    if !beta.is_finite() {
        return Err(Error::BadParam("end-arc solve failed".to_string()));
    }
    let mut angles = vec![0.0, beta];
    for k in 1..=5 {
        angles.push(beta + alpha * k as f64);
    }
    angles.push(2.0 * beta + 5.0 * alpha);
    let pts: Vec<Point2D> = angles.iter().map(|t| Point2D::new(t.cos(), t.sin())).collect();

    let d = |i: usize, j: usize| pts[i].dist(&pts[j]);
    let tol = 1e-10;
    let middle = d(1, 2);
    let constraints = [
        (d(0, 1) - 1.1 * middle).abs() <= tol,
        (d(6, 7) - 1.1 * middle).abs() <= tol,
        (d(1, 5) - 1.0).abs() <= tol,
        (d(2, 6) - 1.0).abs() <= tol,
        d(0, 3) < 1.0 - tol,
        d(0, 4) > 1.0 + tol,
        (2..6).all(|k| (d(k, k + 1) - middle).abs() <= tol),
    ];
    if constraints.iter().any(|ok| !ok) {
        return Err(Error::BadParam("eight-point constraint check failed".to_string()));
    }

    let mut meta = BTreeMap::new();
    meta.insert("alpha_deg".to_string(), json!(alpha.to_degrees()));
    meta.insert("beta_deg".to_string(), json!(beta.to_degrees()));
    meta.insert("radius".to_string(), json!(1.0));
    Ok((PointSet::new(pts)?, meta))
}

/// Regular `n`-gon sized so that every `m` consecutive vertices fit in a
/// unit-diameter set while `m + 1` consecutive vertices do not, with
/// `m = floor((1/3 - eps) n)`.
///
/// The radius is the midpoint of the feasible interval
/// `(1 / (2 sin(pi m / n)), 1 / (2 sin(pi (m - 1) / n))]`; both window
/// conditions are re-verified against the emitted coordinates. The first
/// vertex sits at angle 0. Returns the points and the radius.
pub fn gen_ngon_lb(n: usize, eps: f64) -> Result<(PointSet, f64)> {
    require(eps > 0.0 && eps <= 0.02 + 1e-12, "ngon_lb needs eps in (0, 1/50]")?;
    require(n as f64 * eps >= 2.0 - 1e-9, "ngon_lb needs n >= 2 / eps")?;
    let m = ((1.0 / 3.0 - eps) * n as f64).floor() as usize;
    if m < 2 || m >= n {
        return Err(Error::InfeasibleRadius);
    }
    let pi = std::f64::consts::PI;
    let lo = 1.0 / (2.0 * (pi * m as f64 / n as f64).sin());
    let hi = 1.0 / (2.0 * (pi * (m - 1) as f64 / n as f64).sin());
    if !(lo < hi) {
        return Err(Error::InfeasibleRadius);
    }
    let r = (lo + hi) / 2.0;
    let pts: Vec<Point2D> = (0..n)
        .map(|k| {
            let t = 2.0 * pi * k as f64 / n as f64;
            Point2D::new(r * t.cos(), r * t.sin())
        })
        .collect();

    let window_diameter = |start: usize, len: usize| -> f64 {
        let mut max = 0.0f64;
        for u in 0..len {
            for v in u + 1..len {
                max = max.max(pts[(start + u) % n].dist(&pts[(start + v) % n]));
            }
        }
        max
    };
    for start in 0..n {
        if window_diameter(start, m) > 1.0 {
            return Err(Error::InfeasibleRadius);
        }
        if window_diameter(start, m + 1) <= 1.0 {
            return Err(Error::InfeasibleRadius);
        }
    }
    Ok((PointSet::new(pts)?, r))
}

/// `groups` cliques of `2 t + 1` points each, consecutive groups joined by
/// exactly one unit-distance edge.
///
/// Group centers sit on the x-axis 2 apart. Each group holds two connector
/// points on the axis at offsets of one half from the center, so adjacent
/// groups' facing connectors are at distance exactly 1, plus `2 t - 1`
/// interior points on a radius-0.2 circle. The unit disk graph is
/// re-verified to have exactly the clique edges plus the connectors.
pub fn gen_clique_chain(t: usize, groups: usize) -> Result<PointSet> {
    require(t >= 1, "clique_chain needs t >= 1")?;
    require(groups >= 1, "clique_chain needs groups >= 1")?;
    let tau = 2.0 * std::f64::consts::PI;
    let inner = 2 * t - 1;
    let mut pts = Vec::with_capacity(groups * (2 * t + 1));
    for j in 0..groups {
        let cx = 2.0 * j as f64;
        pts.push(Point2D::new(cx - 0.5, 0.0));
        pts.push(Point2D::new(cx + 0.5, 0.0));
        for i in 0..inner {
            let theta = (i as f64 + 0.5) * tau / inner as f64;
            pts.push(Point2D::new(cx + 0.2 * theta.cos(), 0.2 * theta.sin()));
        }
    }
    let ps = PointSet::new(pts)?;
    let g = UnitDiskGraph::build(ps.clone());
    let size = 2 * t + 1;
    let expect = groups * size * (size - 1) / 2 + (groups - 1);
    assert_eq!(g.edge_count(), expect, "clique chain edge count mismatch");
    Ok(ps)
}

/// Rejection-samples `n` points in `[0, box_size]^2` whose unit disk graph
/// has no triangle, adding one point at a time and discarding any draw
/// that would close one.
pub fn gen_triangle_free(n: usize, box_size: f64, seed: u64) -> Result<PointSet> {
    require(n >= 1, "triangle_free needs n >= 1")?;
    require(box_size > 0.0, "triangle_free needs a positive box side")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut guard = DupGuard::default();
    let mut pts: Vec<Point2D> = Vec::with_capacity(n);
    for i in 0..n {
        let p = sample(i, &mut guard, || {
            let c =
                Point2D::new(uniform01(&mut rng) * box_size, uniform01(&mut rng) * box_size);
            let near: Vec<&Point2D> =
                pts.iter().filter(|q| c.dist_sq(q) <= 1.0 + crate::geom::UDG_TOL).collect();
            let closes_triangle = near.iter().enumerate().any(|(u, a)| {
                near[u + 1..].iter().any(|b| a.dist_sq(b) <= 1.0 + crate::geom::UDG_TOL)
            });
            (!closes_triangle).then_some(c)
        })?;
        pts.push(p);
    }
    let ps = PointSet::new(pts)?;
    let g = UnitDiskGraph::build(ps.clone());
    let adj = g.adjacency();
    for &(u, v) in g.edges() {
        let (au, av) = (&adj[u as usize], &adj[v as usize]);
        let common = au.iter().any(|w| av.binary_search(w).is_ok());
        assert!(!common, "sampled graph contains a triangle at edge ({u}, {v})");
    }
    Ok(ps)
}

/// Runs the generator described by `spec` and packages the parameter
/// record that belongs under the point file's "meta" key.
pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let mut meta = BTreeMap::new();
    meta.insert("kind".to_string(), json!(spec.kind.name()));
    let points = match spec.kind {
        GenKind::Uniform => {
            meta.insert("n".to_string(), json!(spec.n));
            meta.insert("seed".to_string(), json!(spec.seed));
            meta.insert("box".to_string(), json!(spec.size));
            gen_uniform(spec.n, spec.size, spec.seed)?
        }
        GenKind::Cluster => {
            meta.insert("n".to_string(), json!(spec.n));
            meta.insert("seed".to_string(), json!(spec.seed));
            meta.insert("center_dist".to_string(), json!(spec.size));
            gen_cluster(spec.n, spec.size, spec.seed)?
        }
        GenKind::UnitClique => {
            meta.insert("n".to_string(), json!(spec.n));
            meta.insert("seed".to_string(), json!(spec.seed));
            gen_unit_clique(spec.n, spec.seed)?
        }
        GenKind::Circle8 => {
            let (ps, record) = gen_circle8()?;
            meta.extend(record);
            meta.insert("n".to_string(), json!(8));
            ps
        }
        GenKind::NgonLb => {
            let (ps, r) = gen_ngon_lb(spec.n, spec.eps)?;
            meta.insert("n".to_string(), json!(spec.n));
            meta.insert("eps".to_string(), json!(spec.eps));
            meta.insert("m".to_string(), json!(((1.0 / 3.0 - spec.eps) * spec.n as f64) as u64));
            meta.insert("radius".to_string(), json!(r));
            ps
        }
        GenKind::CliqueChain => {
            meta.insert("t".to_string(), json!(spec.t));
            meta.insert("groups".to_string(), json!(spec.groups));
            gen_clique_chain(spec.t, spec.groups)?
        }
        GenKind::CircleUniform => {
            meta.insert("n".to_string(), json!(spec.n));
            meta.insert("seed".to_string(), json!(spec.seed));
            meta.insert("radius".to_string(), json!(spec.size));
            gen_circle_uniform(spec.n, spec.size, spec.seed)?
        }
    };
    Ok(Generated { points, meta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spanner::{build_circle_hop4, build_spanner, SpannerKind};
    use crate::verify::{
        audit_triangle_free, brute_min_plane_stretch, certify_no_bounded_degree_spanner,
        hop_stretch, is_plane,
    };

    #[test]
    fn kind_names_round_trip() {
        for kind in GenKind::ALL {
            assert_eq!(kind.name().parse::<GenKind>().unwrap(), kind);
        }
        assert!("polygon".parse::<GenKind>().is_err());
    }

    #[test]
    fn uniform_is_deterministic_and_stays_in_the_box() {
        let a = gen_uniform(64, 3.0, 9).unwrap();
        let b = gen_uniform(64, 3.0, 9).unwrap();
        assert_eq!(a.as_slice().len(), 64);
        for (p, q) in a.iter().zip(b.iter()) {
            assert_eq!((p.x.to_bits(), p.y.to_bits()), (q.x.to_bits(), q.y.to_bits()));
        }
        let c = gen_uniform(64, 3.0, 10).unwrap();
        let same = a
            .iter()
            .zip(c.iter())
            .all(|(p, q)| p.x.to_bits() == q.x.to_bits() && p.y.to_bits() == q.y.to_bits());
        assert!(!same, "different seeds must give different points");
    }

    #[test]
    fn unit_clique_is_complete() {
        let ps = gen_unit_clique(5, 0).unwrap();
        let g = UnitDiskGraph::build(ps);
        assert_eq!(g.edge_count(), 10);

        let ps = gen_unit_clique(11, 4).unwrap();
        let g = UnitDiskGraph::build(ps);
        assert_eq!(g.edge_count(), 55);
    }

    #[test]
    fn circle_uniform_16_at_point_4_is_complete() {
        let ps = gen_circle_uniform(16, 0.4, 3).unwrap();
        let g = UnitDiskGraph::build(ps);
        assert_eq!(g.edge_count(), 16 * 15 / 2);
    }

    #[test]
    fn cluster_halves_land_in_their_disks() {
        let ps = gen_cluster(41, 1.3, 7).unwrap();
        let left = Point2D::new(0.0, 0.0);
        let right = Point2D::new(1.3, 0.0);
        for (i, p) in ps.iter().enumerate() {
            let c = if i < 20 { left } else { right };
            assert!(p.dist_sq(&c) <= 0.25);
        }
    }

    #[test]
    fn eight_point_circle_satisfies_the_chord_constraints() {
        let (ps, meta) = gen_circle8().unwrap();
        assert_eq!(ps.len(), 8);
        assert!((meta["alpha_deg"].as_f64().unwrap() - 15.0).abs() < 1e-12);

        let d = |i: usize, j: usize| ps[i].dist(&ps[j]);
        let middle = d(1, 2);
        assert!((d(0, 1) / middle - 1.1).abs() < 1e-9);
        assert!((d(6, 7) / middle - 1.1).abs() < 1e-9);
        assert!((d(1, 5) - 1.0).abs() < 1e-10);
        assert!((d(2, 6) - 1.0).abs() < 1e-10);
        assert!(d(0, 3) < 1.0);
        assert!(d(0, 4) > 1.0);
    }

    #[test]
    fn eight_point_circle_needs_three_hops_and_the_chain_stays_plane() {
        let (ps, _) = gen_circle8().unwrap();
        assert_eq!(brute_min_plane_stretch(&ps, 5).unwrap(), 3);

        let g = UnitDiskGraph::build(ps.clone());
        let build = build_circle_hop4(&ps).unwrap();
        assert!(is_plane(&ps, &build.spanner).planar);
        let stretch = hop_stretch(&g, &build.spanner).unwrap().stretch.unwrap();
        assert!((3..=4).contains(&stretch), "chain stretch {stretch} outside [3, 4]");
    }

    #[test]
    fn ngon_100_at_eps_002_matches_the_window_bounds() {
        let (ps, r) = gen_ngon_lb(100, 0.02).unwrap();
        assert_eq!(ps.len(), 100);
        let lo = 1.0 / (2.0 * (std::f64::consts::PI * 0.31).sin());
        let hi = 1.0 / (2.0 * (std::f64::consts::PI * 0.30).sin());
        assert!(lo < r && r <= hi);
        assert!((ps[0].x - r).abs() < 1e-12 && ps[0].y.abs() < 1e-12);

        let m = 31;
        for start in 0..100 {
            let mut dia_m = 0.0f64;
            let mut dia_m1 = 0.0f64;
            for u in 0..=m {
                for v in u + 1..=m {
                    let dist = ps[(start + u) % 100].dist(&ps[(start + v) % 100]);
                    if v < m {
                        dia_m = dia_m.max(dist);
                    }
                    dia_m1 = dia_m1.max(dist);
                }
            }
            assert!(dia_m <= 1.0, "window of {m} has diameter {dia_m}");
            assert!(dia_m1 > 1.0, "window of {} has diameter {dia_m1}", m + 1);
        }
    }

    #[test]
    fn ngon_rejects_bad_parameters() {
        assert!(matches!(gen_ngon_lb(100, 0.03), Err(Error::BadParam(_))));
        assert!(matches!(gen_ngon_lb(100, 0.0), Err(Error::BadParam(_))));
        assert!(matches!(gen_ngon_lb(50, 0.02), Err(Error::BadParam(_))));
    }

    #[test]
    fn clique_chain_small_cases_have_the_expected_shape() {
        let ps = gen_clique_chain(1, 2).unwrap();
        assert_eq!(ps.len(), 6);
        let g = UnitDiskGraph::build(ps);
        assert_eq!(g.edge_count(), 7);
        assert!(g.has_edge(1, 3), "facing connectors must form the only cross edge");

        let ps = gen_clique_chain(2, 1).unwrap();
        let g = UnitDiskGraph::build(ps);
        assert_eq!(g.edge_count(), 5 * 4 / 2);

        let ps = gen_clique_chain(3, 4).unwrap();
        let g = UnitDiskGraph::build(ps);
        assert_eq!(g.edge_count(), 4 * 21 + 3);
    }

    #[test]
    fn clique_chain_25_by_5_certifies_no_bounded_degree_2hop_spanner() {
        let ps = gen_clique_chain(25, 5).unwrap();
        let g = UnitDiskGraph::build(ps);
        let cert = certify_no_bounded_degree_spanner(&g, 2, 3).unwrap();
        assert!(cert.valid, "t = 25 exceeds 2 * 3^2 = 18");
    }

    #[test]
    fn triangle_free_samples_pass_the_audit() {
        let ps = gen_triangle_free(80, 2.0 * (80.0f64).sqrt(), 11).unwrap();
        let g = UnitDiskGraph::build(ps);
        let audit = audit_triangle_free(&g);
        assert!(audit.applicable);
        assert!(audit.triangle.is_none());
        assert!(audit.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn generate_embeds_the_parameter_record() {
        let mut spec = GenSpec::new(GenKind::CircleUniform);
        spec.n = 12;
        spec.size = 0.4;
        spec.seed = 3;
        let out = generate(&spec).unwrap();
        assert_eq!(out.points.len(), 12);
        assert_eq!(out.meta["kind"], json!("circle_uniform"));
        assert_eq!(out.meta["radius"], json!(0.4));

        let again = generate(&spec).unwrap();
        assert_eq!(
            serde_json::to_string(&out.meta).unwrap(),
            serde_json::to_string(&again.meta).unwrap()
        );
        for (p, q) in out.points.iter().zip(again.points.iter()) {
            assert_eq!((p.x.to_bits(), p.y.to_bits()), (q.x.to_bits(), q.y.to_bits()));
        }
    }

    #[test]
    fn generators_reject_zero_counts() {
        assert!(gen_uniform(0, 1.0, 0).is_err());
        assert!(gen_unit_clique(0, 0).is_err());
        assert!(gen_clique_chain(0, 2).is_err());
        assert!(gen_clique_chain(2, 0).is_err());
        assert!(gen_circle_uniform(5, 0.0, 0).is_err());
    }

    #[test]
    fn spanner_sweep_on_generated_instances_meets_the_bounds() {
        for (k, kind) in SpannerKind::ALL.into_iter().enumerate() {
            if kind == SpannerKind::Circle4 {
                continue;
            }
            let ps = gen_uniform(120, 3.0, 40 + k as u64).unwrap();
            let g = UnitDiskGraph::build(ps);
            let s = build_spanner(kind, &g).unwrap();
            let stretch = hop_stretch(&g, &s).unwrap().stretch.unwrap();
            assert!(stretch <= kind.stretch_bound(), "{kind} stretch {stretch}");
        }
    }
}
