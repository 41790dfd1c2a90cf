//! Intersection graphs of single-bend paths on a rectangular grid.
//!
//! Paths occupy grid edges; two paths are adjacent exactly when they share
//! one. This crate models such representations, derives their intersection
//! graphs, computes a coloring with at most four colors in which no maximal
//! clique of size two or more is monochromatic and one color class is an
//! independent set, and verifies the result against two independent maximal
//! clique enumerations.
//!
//! The pipeline in [`recolor::clique_color`] runs in three steps: per-line
//! interval two-coloring ([`interval`]), detection of grid points whose stem
//! triples are monocolored (a,a) ([`claw`]), and a point-local recoloring
//! pass ([`recolor`]) whose safety rules are re-checked at plan time.

pub mod claw;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod model;
pub mod recolor;
pub mod verify;

pub use claw::{ClawAnalyzer, ClawStem};
pub use generate::{cycle_instance, random_instance, sun3_instance, GenParams, Preset, SplitMix64};
pub use graph::{derive_graph, EdgeBuckets, IntersectionGraph};
pub use interval::{base_coloring, color_line, peo_order, LineInstance, PathColor, SegColor};
pub use model::{
    bend_index, grid_edges_of, parse_representation, serialize_representation, Direction, EpgPath,
    EpgRepresentation, GridBounds, GridEdge, GridPoint, ModelError, Orientation, PathId, Segment,
    Shape,
};
pub use recolor::{
    apply_plan, clique_color, parse_coloring, plan_point, plan_recolorings, ColoringOutcome,
    PlanStats, Recoloring, RecoloringPlan,
};
pub use verify::{
    enumerate_cliques_graph, enumerate_cliques_repr, verify_coloring, CliqueKind, CliqueReport,
    VerificationReport, VerifyError, DEFAULT_ORACLE_BOUND,
};
