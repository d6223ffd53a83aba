//! End-to-end acceptance checks.
//!
//! Each criterion is a standalone runner returning a [`CriterionResult`];
//! the `demo` command and the acceptance test target print one line per
//! criterion. Bounds are exact, tolerances live in the checks themselves,
//! and every runner carries its wall-clock budget.

use std::collections::BTreeSet;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gen::{
    gen_circle8, gen_cluster, gen_ngon_lb, gen_triangle_free, gen_uniform, gen_unit_clique,
    generate, GenKind, GenSpec,
};
use crate::geom::{unit_neighbors, Point2D, PointSet};
use crate::io::{edges_to_text, points_to_json};
use crate::nets::{hull_boundary, minimal_eps_net};
use crate::spanner::{build_circle_hop4, build_hop2, build_spanner, SpannerKind};
use crate::udg::UnitDiskGraph;
use crate::verify::{
    audit_bounds, audit_triangle_free, brute_min_plane_stretch,
    certify_no_bounded_degree_spanner, ceil_log2, hop_stretch, is_plane, moore_bound,
};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    /// One-line pass/fail rendering.
    pub fn line(&self) -> String {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        format!("criterion {:>2} {:<24} {}  {}", self.id, self.name, verdict, self.detail)
    }
}

/// The 50-instance uniform sweep: `n` in {100, 1000, 5000} crossed with
/// box sides {2, 5, 10}, cycled; the instance index doubles as the seed.
pub fn sweep_instances() -> Vec<(usize, f64, u64)> {
    let ns = [100usize, 1000, 5000];
    let boxes = [2.0f64, 5.0, 10.0];
    (0..50u64)
        .map(|k| {
            let combo = (k % 9) as usize;
            (ns[combo / 3], boxes[combo % 3], k)
        })
        .collect()
}

fn sweep_bound_check(kind: SpannerKind, budget_s: f64) -> (bool, String) {
    let start = Instant::now();
    let mut pass = true;
    let mut max_stretch = 0u32;
    let mut max_ratio = 0.0f64;
    for (n, side, seed) in sweep_instances() {
        let ps = gen_uniform(n, side, seed).expect("sweep parameters are valid");
        let g = UnitDiskGraph::build(ps);
        let s = build_spanner(kind, &g).expect("grid constructions are total");
        let report = audit_bounds(&g, &s, kind).expect("spanner is a subgraph by construction");
        pass &= report.passed();
        max_stretch = max_stretch.max(report.stretch.unwrap_or(u32::MAX));
        max_ratio = max_ratio.max(report.edges as f64 / n as f64);
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < budget_s;
    let detail = format!(
        "50 instances, max stretch {max_stretch}, max edges/n {max_ratio:.2}, {elapsed:.1}s"
    );
    (pass, detail)
}

/// Hop-5 construction: stretch at most 5 and at most `5.5 n` edges over
/// the full sweep, under 60 seconds.
pub fn criterion_1() -> CriterionResult {
    let (pass, detail) = sweep_bound_check(SpannerKind::Hop5, 60.0);
    CriterionResult { id: 1, name: "hop5-bound", pass, detail }
}

/// Hop-3 construction: stretch at most 3 and at most `11 n` edges over the
/// full sweep, under 60 seconds.
pub fn criterion_2() -> CriterionResult {
    let (pass, detail) = sweep_bound_check(SpannerKind::Hop3, 60.0);
    CriterionResult { id: 2, name: "hop3-bound", pass, detail }
}

/// Hop-2 construction: every base edge within 2 hops and at most
/// `10 n ceil(log2 n)` edges over the sweep plus 20 two-cluster instances,
/// under 5 minutes. The detail records the largest observed constant.
pub fn criterion_3() -> CriterionResult {
    let start = Instant::now();
    let mut pass = true;
    let mut max_c = 0.0f64;
    let mut run = |g: &UnitDiskGraph| {
        let s = build_hop2(g);
        let report =
            audit_bounds(g, &s, SpannerKind::Hop2).expect("spanner is a subgraph by construction");
        pass &= report.passed();
        let n = g.len().max(2);
        max_c = max_c.max(report.edges as f64 / (n as f64 * f64::from(ceil_log2(n))));
    };
    for (n, side, seed) in sweep_instances() {
        let ps = gen_uniform(n, side, seed).expect("sweep parameters are valid");
        run(&UnitDiskGraph::build(ps));
    }
    for k in 0..20u64 {
        let dist = 0.2 + 0.05 * k as f64;
        let ps = gen_cluster(400, dist, k).expect("cluster parameters are valid");
        run(&UnitDiskGraph::build(ps));
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 300.0;
    let detail =
        format!("70 instances, max observed C {max_c:.2} (bound 10), {elapsed:.1}s");
    CriterionResult { id: 3, name: "hop2-size-stretch", pass, detail }
}

fn sample_disk_point(
    rng: &mut ChaCha8Rng,
    center: Point2D,
    radius: f64,
    seen: &mut BTreeSet<(u64, u64)>,
) -> Point2D {
    loop {
        let x = ((rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) * 2.0 - 1.0) * radius;
        let y = ((rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) * 2.0 - 1.0) * radius;
        if x * x + y * y > radius * radius {
            continue;
        }
        let p = Point2D::new(center.x + x, center.y + y);
        if seen.insert((p.x.to_bits(), p.y.to_bits())) {
            return p;
        }
    }
}

/// One seeded two-sided scene: both sides in radius-0.45 disks just off
/// the axis, so each side has diameter below 1 and sits strictly on its
/// side.
fn scene_for_seed(seed: u64) -> (Vec<Point2D>, Vec<Point2D>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let na = 6 + (seed as usize * 7) % 30;
    let nb = 6 + (seed as usize * 11) % 30;
    let shift = ((rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) - 0.5) * 0.6;
    let ca = Point2D::new(shift, 0.47);
    let cb = Point2D::new(-shift, -0.47);
    let a = (0..na).map(|_| sample_disk_point(&mut rng, ca, 0.45, &mut seen)).collect();
    let b = (0..nb).map(|_| sample_disk_point(&mut rng, cb, 0.45, &mut seen)).collect();
    (a, b)
}

/// Net machinery: on 100 seeded scenes and four epsilon values, the net is
/// small, a subset of the boundary set, hits consecutively, and any disk
/// holding five or more net points is doubly heavy.
pub fn criterion_4() -> CriterionResult {
    let start = Instant::now();
    let mut pass = true;
    let mut worst = String::new();
    let mut fail = |msg: String, pass: &mut bool| {
        if worst.is_empty() {
            worst = msg;
        }
        *pass = false;
    };
    for seed in 0..100u64 {
        let (a, b) = scene_for_seed(seed);
        let m = hull_boundary(&a).expect("upper side is strictly above the axis");
        let member_set: BTreeSet<u32> = m.members().iter().copied().collect();
        for &eps in &[0.15f64, 0.25, 1.0 / 3.0, 0.5] {
            let net = match minimal_eps_net(&a, &m, eps, &b) {
                Ok(net) => net,
                Err(e) => {
                    fail(format!("scene {seed} eps {eps}: {e}"), &mut pass);
                    continue;
                }
            };
            if net.len() > (2.0 / eps).floor() as usize {
                fail(format!("scene {seed} eps {eps}: net size {}", net.len()), &mut pass);
            }
            if !net.net().iter().all(|i| member_set.contains(i)) {
                fail(format!("scene {seed} eps {eps}: net not in M"), &mut pass);
            }
            for center in &b {
                let hit_positions: Vec<usize> = m
                    .members()
                    .iter()
                    .enumerate()
                    .filter(|(_, &mi)| unit_neighbors(center, &a[mi as usize]))
                    .map(|(pos, _)| pos)
                    .collect();
                if let (Some(&lo), Some(&hi)) = (hit_positions.first(), hit_positions.last()) {
                    if hi - lo + 1 != hit_positions.len() {
                        fail(format!("scene {seed}: non-consecutive hits"), &mut pass);
                    }
                }
                let net_hits = net
                    .net()
                    .iter()
                    .filter(|&&i| unit_neighbors(center, &a[i as usize]))
                    .count();
                if net_hits >= 5 {
                    let a_hits =
                        a.iter().filter(|p| unit_neighbors(center, p)).count();
                    if (a_hits as f64) < 2.0 * eps * a.len() as f64 {
                        fail(
                            format!("scene {seed} eps {eps}: light disk holds {net_hits} net points"),
                            &mut pass,
                        );
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let detail = if pass {
        format!("100 scenes x 4 eps, all properties hold, {elapsed:.1}s")
    } else {
        format!("first failure: {worst}, {elapsed:.1}s")
    };
    CriterionResult { id: 4, name: "eps-net-properties", pass, detail }
}

/// Eight-point instance: exhaustive minimum plane stretch is exactly 3,
/// and the chain construction on it is plane with stretch at most 4,
/// under 30 seconds.
pub fn criterion_5() -> CriterionResult {
    let start = Instant::now();
    let (ps, _) = gen_circle8().expect("fixed instance");
    let brute = brute_min_plane_stretch(&ps, 5).expect("8 concyclic points are in convex position");
    let g = UnitDiskGraph::build(ps.clone());
    let build = build_circle_hop4(&ps).expect("instance is concyclic and connected");
    let planar = is_plane(&ps, &build.spanner).planar;
    let stretch = hop_stretch(&g, &build.spanner)
        .expect("chain is a subgraph")
        .stretch
        .unwrap_or(u32::MAX);
    let elapsed = start.elapsed().as_secs_f64();
    let pass = brute == 3 && planar && stretch <= 4 && elapsed < 30.0;
    let detail =
        format!("brute minimum {brute}, chain plane {planar} stretch {stretch}, {elapsed:.1}s");
    CriterionResult { id: 5, name: "eight-point-lower-bound", pass, detail }
}

/// Unit-side half square: exhaustive minimum plane stretch is exactly 2.
pub fn criterion_6() -> CriterionResult {
    let ps = PointSet::new(vec![
        Point2D::new(0.0, 0.0),
        Point2D::new(0.5, 0.0),
        Point2D::new(0.5, 0.5),
        Point2D::new(0.0, 0.5),
    ])
    .expect("distinct finite corners");
    let brute = brute_min_plane_stretch(&ps, 5).expect("square corners are in convex position");
    CriterionResult {
        id: 6,
        name: "square-lower-bound",
        pass: brute == 2,
        detail: format!("brute minimum {brute}"),
    }
}

/// Lower-bound polygon at n = 100, eps = 0.02: every 31 consecutive
/// vertices fit in a unit-diameter set, no 32 consecutive vertices do.
pub fn criterion_7() -> CriterionResult {
    let result = gen_ngon_lb(100, 0.02);
    let (pass, detail) = match result {
        Ok((ps, r)) => {
            let m = 31;
            let mut ok = ps.len() == 100;
            for start in 0..100 {
                let mut dia_m = 0.0f64;
                let mut dia_m1 = 0.0f64;
                for u in 0..=m {
                    for v in u + 1..=m {
                        let d = ps[(start + u) % 100].dist(&ps[(start + v) % 100]);
                        if v < m {
                            dia_m = dia_m.max(d);
                        }
                        dia_m1 = dia_m1.max(d);
                    }
                }
                ok &= dia_m <= 1.0 && dia_m1 > 1.0;
            }
            (ok, format!("m 31, radius {r:.6}, windows verified"))
        }
        Err(e) => (false, format!("generator failed: {e}")),
    };
    CriterionResult { id: 7, name: "ngon-windows", pass, detail }
}

/// Degree-impossibility certificate on the 11-point clique, plus a
/// 100000-sample search over maximal degree-3 subgraphs finding no 2-hop
/// spanner, under 2 minutes.
pub fn criterion_8() -> CriterionResult {
    let start = Instant::now();
    let ps = gen_unit_clique(11, 0).expect("clique parameters are valid");
    let g = UnitDiskGraph::build(ps);
    let cert = certify_no_bounded_degree_spanner(&g, 2, 3).expect("clique matches the template");
    let mut pass = cert.valid && cert.moore == moore_bound(2, 3) && cert.moore == 10;

    let all_pairs: Vec<(usize, usize)> =
        (0..11).flat_map(|i| (i + 1..11).map(move |j| (i, j))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut found = 0usize;
    for _ in 0..100_000 {
        let mut order = all_pairs.clone();
        for i in (1..order.len()).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            order.swap(i, j);
        }
        let mut deg = [0u8; 11];
        let mut mask = [0u16; 11];
        for &(u, v) in &order {
            if deg[u] < 3 && deg[v] < 3 {
                deg[u] += 1;
                deg[v] += 1;
                mask[u] |= 1 << v;
                mask[v] |= 1 << u;
            }
        }
        let two_hop = all_pairs
            .iter()
            .all(|&(u, v)| mask[u] & (1 << v) != 0 || mask[u] & mask[v] != 0);
        found += usize::from(two_hop);
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= found == 0 && elapsed < 120.0;
    let detail = format!(
        "certificate {} ({}), {found} of 100000 samples spanned, {elapsed:.1}s",
        cert.valid, cert.criterion
    );
    CriterionResult { id: 8, name: "degree-impossibility", pass, detail }
}

/// Triangle-free audit: 50 rejection-sampled triangle-free instances all
/// have maximum degree at most 5 and at most `2.5 n` edges.
pub fn criterion_9() -> CriterionResult {
    let start = Instant::now();
    let mut pass = true;
    let mut max_n = 0usize;
    for i in 0..50u64 {
        let n = 50 + 9 * i as usize;
        max_n = max_n.max(n);
        let ps = gen_triangle_free(n, 2.0 * (n as f64).sqrt(), i)
            .expect("sparse boxes leave room for triangle-free samples");
        let audit = audit_triangle_free(&UnitDiskGraph::build(ps));
        pass &= audit.applicable && audit.triangle.is_none();
        pass &= audit.checks.iter().all(|c| c.pass);
    }
    let elapsed = start.elapsed().as_secs_f64();
    let detail = format!("50 instances, n up to {max_n}, {elapsed:.1}s");
    CriterionResult { id: 9, name: "triangle-free-audit", pass, detail }
}

/// Byte-identical reruns: every generator kind and every construction
/// produces the same file bytes when run twice with the same seed.
pub fn criterion_10() -> CriterionResult {
    let mut pass = true;
    let mut detail = String::from("gen and build outputs byte-identical");
    for kind in GenKind::ALL {
        let mut spec = GenSpec::new(kind);
        spec.n = match kind {
            GenKind::NgonLb => 100,
            GenKind::Circle8 => 8,
            _ => 150,
        };
        spec.size = match kind {
            GenKind::CircleUniform => 0.9,
            GenKind::Cluster => 1.1,
            _ => 4.0,
        };
        spec.seed = 23;
        let once = generate(&spec).expect("demo parameters are valid");
        let twice = generate(&spec).expect("demo parameters are valid");
        let a = points_to_json(&once.points, Some(&once.meta));
        let b = points_to_json(&twice.points, Some(&twice.meta));
        if a != b {
            pass = false;
            detail = format!("generator {kind} differed between runs");
        }
    }

    let make = |builder: &dyn Fn() -> String| (builder(), builder());
    let uniform_edges = |kind: SpannerKind| {
        move || {
            let ps = gen_uniform(300, 5.0, 17).expect("demo parameters are valid");
            let g = UnitDiskGraph::build(ps);
            edges_to_text(build_spanner(kind, &g).expect("grid constructions are total").edges())
        }
    };
    for kind in [SpannerKind::Hop5, SpannerKind::Hop3, SpannerKind::Hop2] {
        let (a, b) = make(&uniform_edges(kind));
        if a != b {
            pass = false;
            detail = format!("builder {kind} differed between runs");
        }
    }
    let circle_edges = || {
        let (ps, _) = gen_circle8().expect("fixed instance");
        edges_to_text(build_circle_hop4(&ps).expect("instance is concyclic").spanner.edges())
    };
    let (a, b) = make(&circle_edges);
    if a != b {
        pass = false;
        detail = "circle4 builder differed between runs".to_string();
    }
    CriterionResult { id: 10, name: "determinism", pass, detail }
}

/// Runs all ten criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_covers_every_combination_with_distinct_seeds() {
        let sweep = sweep_instances();
        assert_eq!(sweep.len(), 50);
        let combos: BTreeSet<(usize, u64)> =
            sweep.iter().map(|&(n, s, _)| (n, s as u64)).collect();
        assert_eq!(combos.len(), 9);
        let seeds: BTreeSet<u64> = sweep.iter().map(|&(_, _, k)| k).collect();
        assert_eq!(seeds.len(), 50);
    }

    #[test]
    fn cheap_criteria_pass() {
        for result in [criterion_5(), criterion_6(), criterion_7()] {
            assert!(result.pass, "{}", result.line());
        }
    }

    #[test]
    fn result_line_is_one_line() {
        let line = criterion_6().line();
        assert!(line.contains("criterion  6"));
        assert!(!line.contains('\n'));
    }
}
