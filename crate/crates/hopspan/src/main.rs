//! Command-line surface: gen | build | verify | audit | demo.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 when a
//! requested bound check fails.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use hopspan::gen::{generate, GenKind, GenSpec};
use hopspan::hex::CellPartition;
use hopspan::io;
use hopspan::spanner::{build_spanner, hop2_pair_nets, SpannerKind};
use hopspan::suite;
use hopspan::udg::UnitDiskGraph;
use hopspan::verify::{audit_bounds, hop_stretch, validate_subgraph, VerificationReport};
use hopspan::{PointSet, Result, SpannerGraph};

#[derive(Parser)]
#[command(name = "hopspan", version, about = "Bounded-hop spanners for unit disk graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a point set as JSON
    Gen(GenArgs),
    /// Build a spanner edge list from a point file
    Build(BuildArgs),
    /// Check a spanner edge list against its point set
    Verify(VerifyArgs),
    /// Generate nothing, build nothing twice: read points, build, verify,
    /// and bound-check in one pass
    Audit(AuditArgs),
    /// Run the acceptance suite end to end
    Demo,
}

#[derive(Args)]
struct GenArgs {
    /// uniform | cluster | unit_clique | circle8 | ngon_lb | clique_chain | circle_uniform
    #[arg(long)]
    kind: String,
    /// Point count (uniform, cluster, unit_clique, ngon_lb, circle_uniform)
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Random seed; all randomness flows through it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Box side (uniform), cluster-center distance (cluster), or circle
    /// radius (circle_uniform)
    #[arg(long = "box", default_value_t = 5.0)]
    size: f64,
    /// Group half-size parameter (clique_chain)
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Group count (clique_chain)
    #[arg(long, default_value_t = 3)]
    groups: usize,
    /// Slack parameter (ngon_lb)
    #[arg(long, default_value_t = 0.02)]
    eps: f64,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BuildArgs {
    /// hop5 | hop3 | hop2 | circle4
    #[arg(long)]
    algo: String,
    /// Input point JSON
    #[arg(long = "in")]
    input: PathBuf,
    /// Output edge list; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render an SVG of points, edges, and (for the grid algorithms)
    /// hexagon cells
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Dump per-cell-pair hull and net memberships as JSON (hop2 only)
    #[arg(long = "dump-nets")]
    dump_nets: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Point JSON the spanner was built from
    #[arg(long)]
    graph: PathBuf,
    /// Edge list to check
    #[arg(long)]
    spanner: PathBuf,
    /// Also check the named construction's bounds: hop5 | hop3 | hop2 | circle4
    #[arg(long)]
    algo: Option<String>,
    /// Report JSON path; stdout when omitted
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// hop5 | hop3 | hop2 | circle4
    #[arg(long)]
    algo: String,
    /// Input point JSON
    #[arg(long = "in")]
    input: PathBuf,
    /// Report JSON path; stdout when omitted
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also write the built edge list
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render an SVG
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Dump per-cell-pair hull and net memberships as JSON (hop2 only)
    #[arg(long = "dump-nets")]
    dump_nets: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Build(args) => cmd_build(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Audit(args) => cmd_audit(args),
        Cmd::Demo => cmd_demo(),
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let kind: GenKind = args.kind.parse()?;
    let spec = GenSpec {
        kind,
        n: args.n,
        seed: args.seed,
        size: args.size,
        t: args.t,
        groups: args.groups,
        eps: args.eps,
    };
    let out = generate(&spec)?;
    let text = io::points_to_json(&out.points, Some(&out.meta));
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

fn load_graph(path: &Path) -> Result<UnitDiskGraph> {
    let (points, _) = io::read_points(path)?;
    Ok(UnitDiskGraph::build(points))
}

fn write_artifacts(
    g: &UnitDiskGraph,
    kind: SpannerKind,
    s: &SpannerGraph,
    out: Option<&Path>,
    svg: Option<&Path>,
    dump_nets: Option<&Path>,
    edges_to_stdout: bool,
) -> Result<()> {
    match out {
        Some(path) => io::write_edges(path, s.edges())?,
        None if edges_to_stdout => print!("{}", io::edges_to_text(s.edges())),
        None => {}
    }
    if let Some(path) = svg {
        let part = (kind != SpannerKind::Circle4).then(|| CellPartition::new(g.points()));
        io::write_svg(path, g.points(), s.edges(), part.as_ref())?;
    }
    if let Some(path) = dump_nets {
        if kind != SpannerKind::Hop2 {
            return Err(hopspan::Error::BadParam(
                "--dump-nets only applies to --algo hop2".to_string(),
            ));
        }
        std::fs::write(path, io::nets_dump_to_json(&hop2_pair_nets(g)))?;
    }
    Ok(())
}

fn cmd_build(args: BuildArgs) -> Result<u8> {
    let kind: SpannerKind = args.algo.parse()?;
    let g = load_graph(&args.input)?;
    let s = build_spanner(kind, &g)?;
    write_artifacts(
        &g,
        kind,
        &s,
        args.out.as_deref(),
        args.svg.as_deref(),
        args.dump_nets.as_deref(),
        true,
    )?;
    Ok(0)
}

fn emit_report(report: &VerificationReport, path: Option<&Path>) -> Result<u8> {
    let text = io::report_to_json(report);
    emit(path, &text)?;
    Ok(if report.passed() { 0 } else { 2 })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    let edges = io::read_edges(&args.spanner)?;
    let s = SpannerGraph::from_edges(g.len(), edges)?;
    validate_subgraph(&g, &s)?;
    let report = match args.algo.as_deref() {
        Some(name) => audit_bounds(&g, &s, name.parse()?)?,
        None => hop_stretch(&g, &s)?,
    };
    emit_report(&report, args.report.as_deref())
}

fn cmd_audit(args: AuditArgs) -> Result<u8> {
    let kind: SpannerKind = args.algo.parse()?;
    let g = load_graph(&args.input)?;
    let s = build_spanner(kind, &g)?;
    let report = audit_bounds(&g, &s, kind)?;
    write_artifacts(
        &g,
        kind,
        &s,
        args.out.as_deref(),
        args.svg.as_deref(),
        args.dump_nets.as_deref(),
        false,
    )?;
    emit_report(&report, args.report.as_deref())
}

fn cmd_demo() -> Result<u8> {
    let results = suite::run_all();
    for result in &results {
        println!("{}", result.line());
    }
    Ok(if results.iter().all(|r| r.pass) { 0 } else { 2 })
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
