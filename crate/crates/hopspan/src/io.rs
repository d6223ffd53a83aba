//! File formats shared by the command-line tool and the examples.
//!
//! Point sets travel as JSON objects `{"points": [[x, y], ...]}` with an
//! optional `"meta"` object carrying the generator's parameter record.
//! Edge lists are plain text, one `i j` pair per line with `i < j`, sorted
//! lexicographically. Verification reports serialize with their field
//! order fixed by the report type. SVG rendering is static: points,
//! edges, and optionally the occupied hexagon cells.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geom::{Point2D, PointSet};
use crate::hex::CellPartition;
use crate::spanner::PairNets;
use crate::verify::VerificationReport;

/// Renders the point JSON document.
pub fn points_to_json(ps: &PointSet, meta: Option<&BTreeMap<String, Value>>) -> String {
    let coords: Vec<Value> = ps.iter().map(|p| json!([p.x, p.y])).collect();
    let mut doc = serde_json::Map::new();
    doc.insert("points".to_string(), Value::Array(coords));
    if let Some(meta) = meta {
        doc.insert(
            "meta".to_string(),
            Value::Object(meta.iter().map(|(k, v)| (k.clone(), v.clone())).collect()),
        );
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("plain JSON tree");
    text.push('\n');
    text
}

/// Parses the point JSON document; returns the points and the meta value
/// when one is present.
pub fn parse_points(text: &str) -> Result<(PointSet, Option<Value>)> {
    let doc: Value = serde_json::from_str(text)?;
    let arr = doc
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::BadParam("point file needs a \"points\" array".to_string()))?;
    let mut pts = Vec::with_capacity(arr.len());
    for (i, entry) in arr.iter().enumerate() {
        let pair = entry.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
            Error::BadParam(format!("point {i} is not a two-element [x, y] array"))
        })?;
        let x = pair[0]
            .as_f64()
            .ok_or_else(|| Error::BadParam(format!("point {i} has a non-numeric x")))?;
        let y = pair[1]
            .as_f64()
            .ok_or_else(|| Error::BadParam(format!("point {i} has a non-numeric y")))?;
        pts.push(Point2D::new(x, y));
    }
    Ok((PointSet::new(pts)?, doc.get("meta").cloned()))
}

pub fn write_points(
    path: &Path,
    ps: &PointSet,
    meta: Option<&BTreeMap<String, Value>>,
) -> Result<()> {
    fs::write(path, points_to_json(ps, meta))?;
    Ok(())
}

pub fn read_points(path: &Path) -> Result<(PointSet, Option<Value>)> {
    parse_points(&fs::read_to_string(path)?)
}

/// Renders the edge list text; edges must already be in ascending order.
pub fn edges_to_text(edges: &[(u32, u32)]) -> String {
    let mut out = String::with_capacity(edges.len() * 8);
    for &(i, j) in edges {
        writeln!(out, "{i} {j}").expect("string writes cannot fail");
    }
    out
}

/// Parses an edge list, enforcing the `i < j` and sortedness contract.
pub fn parse_edges(text: &str) -> Result<Vec<(u32, u32)>> {
    let mut edges = Vec::new();
    let mut prev: Option<(u32, u32)> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fail = |msg: &str| Error::EdgeListParse { line: lineno + 1, msg: msg.to_string() };
        let mut tokens = line.split_whitespace();
        let a = tokens
            .next()
            .and_then(|t| t.parse::<u32>().ok())
            .ok_or_else(|| fail("expected an unsigned integer"))?;
        let b = tokens
            .next()
            .and_then(|t| t.parse::<u32>().ok())
            .ok_or_else(|| fail("expected two unsigned integers"))?;
        if tokens.next().is_some() {
            return Err(fail("expected exactly two integers"));
        }
        if a >= b {
            return Err(fail("left endpoint must be smaller than the right"));
        }
        if prev.is_some_and(|p| p >= (a, b)) {
            return Err(fail("edges must be strictly increasing"));
        }
        prev = Some((a, b));
        edges.push((a, b));
    }
    Ok(edges)
}

pub fn write_edges(path: &Path, edges: &[(u32, u32)]) -> Result<()> {
    fs::write(path, edges_to_text(edges))?;
    Ok(())
}

pub fn read_edges(path: &Path) -> Result<Vec<(u32, u32)>> {
    parse_edges(&fs::read_to_string(path)?)
}

/// Renders a verification report with its fixed key order.
pub fn report_to_json(report: &VerificationReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serialization");
    text.push('\n');
    text
}

pub fn write_report(path: &Path, report: &VerificationReport) -> Result<()> {
    fs::write(path, report_to_json(report))?;
    Ok(())
}

/// Renders the per-cell-pair hull and net membership dump: one record per
/// crossing cell pair with the boundary set M and each level's net N as
/// global point indices.
pub fn nets_dump_to_json(pairs: &[PairNets]) -> String {
    let records: Vec<Value> = pairs
        .iter()
        .map(|pair| {
            let to_global =
                |ids: &[u32]| -> Vec<u32> { ids.iter().map(|&k| pair.a_ids[k as usize]).collect() };
            let levels: Vec<Value> = pair
                .build
                .levels
                .iter()
                .map(|lv| {
                    json!({
                        "level": lv.level,
                        "n": to_global(lv.net.net()),
                    })
                })
                .collect();
            json!({
                "sigma": [pair.sigma.q, pair.sigma.r],
                "tau": [pair.tau.q, pair.tau.r],
                "m": to_global(pair.build.hull.members()),
                "levels": levels,
            })
        })
        .collect();
    let mut text =
        serde_json::to_string_pretty(&Value::Array(records)).expect("plain JSON tree");
    text.push('\n');
    text
}

/// Draws points, edges, and optionally the occupied hexagon cells into a
/// standalone SVG document.
pub fn render_svg(ps: &PointSet, edges: &[(u32, u32)], cells: Option<&CellPartition>) -> String {
    let (lo, hi) = ps
        .bounding_box()
        .unwrap_or((Point2D::new(0.0, 0.0), Point2D::new(1.0, 1.0)));
    let pad = 0.75;
    let world_w = (hi.x - lo.x) + 2.0 * pad;
    let world_h = (hi.y - lo.y) + 2.0 * pad;
    let scale = 900.0 / world_w.max(1e-9);
    let width = world_w * scale;
    let height = world_h * scale;
    let fx = |x: f64| (x - lo.x + pad) * scale;
    let fy = |y: f64| (hi.y + pad - y) * scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");

    if let Some(part) = cells {
        for (cell, _) in part.iter() {
            let pts: Vec<String> = cell
                .vertices()
                .iter()
                .map(|v| format!("{:.2},{:.2}", fx(v.x), fy(v.y)))
                .collect();
            let _ = writeln!(
                svg,
                "<polygon points=\"{}\" fill=\"none\" stroke=\"#c9c9c9\" stroke-width=\"1\"/>",
                pts.join(" ")
            );
        }
    }
    for &(i, j) in edges {
        let p = &ps[i as usize];
        let q = &ps[j as usize];
        let _ = writeln!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" \
             stroke=\"#4466aa\" stroke-width=\"1.4\"/>",
            fx(p.x),
            fy(p.y),
            fx(q.x),
            fy(q.y)
        );
    }
    for p in ps.iter() {
        let _ = writeln!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.6\" fill=\"#222222\"/>",
            fx(p.x),
            fy(p.y)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn write_svg(
    path: &Path,
    ps: &PointSet,
    edges: &[(u32, u32)],
    cells: Option<&CellPartition>,
) -> Result<()> {
    fs::write(path, render_svg(ps, edges, cells))?;
    Ok(())
}
