//! Sparse bounded-hop spanners for unit disk graphs.
//!
//! A unit disk graph connects two points of a planar point set whenever
//! their distance is at most one. This crate builds sparse spanning
//! subgraphs in which adjacent points of the original graph stay within a
//! fixed hop distance of each other, along with the supporting machinery:
//! hexagonal tilings, epsilon-nets on disk hulls, instance generators,
//! verifiers for hop stretch and sparsity bounds, and impossibility
//! certificates for bounded-degree spanners.
//!
//! The constructions trade hops for edges:
//!
//! * [`spanner::build_hop5`]: 5-hop spanner with at most `5.5 n` edges,
//! * [`spanner::build_hop3`]: 3-hop spanner with at most `11 n` edges,
//! * [`spanner::build_hop2`]: 2-hop spanner with `O(n log n)` edges,
//! * [`spanner::build_circle_hop4`]: plane 4-hop spanner for concyclic
//!   points.
//!
//! Everything is deterministic: the same input produces byte-identical
//! output, and generators are seeded.

pub mod error;
pub mod gen;
pub mod geom;
pub mod hex;
pub mod io;
pub mod nets;
pub mod spanner;
pub mod suite;
pub mod verify;
pub mod udg;

pub use error::{Error, Result};
pub use geom::{Point2D, PointSet};
pub use spanner::{build_spanner, SpannerGraph, SpannerKind};
pub use udg::UnitDiskGraph;
