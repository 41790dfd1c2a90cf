//! Point-local structure around bends.
//!
//! A stem triple at a grid point `x` is one of the four edge triples
//! {stem, perpendicular pair}. A claw clique candidate for a stem is the set
//! of paths covering two of its three edges: the bend paths at `x` whose
//! shape contains the stem, plus every path running straight through `x`
//! across the stem. A stem is *hot* when such a candidate exists and all of
//! its members carry the pair color (a,a) — a sound over-approximation of
//! "center of a monocolored (a,a) claw clique" that the recoloring pass
//! treats as its work list. `exact_mono_claws` additionally checks maximality
//! in the graph and is kept for diagnostics.

use std::collections::BTreeMap;

use crate::graph::{EdgeBuckets, IntersectionGraph};
use crate::interval::PathColor;
use crate::model::{
    Direction, EpgRepresentation, GridPoint, Orientation, PathId, Shape,
};

/// A stem triple: a grid point plus the direction of the edge shared by the
/// triple's two bend shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClawStem {
    pub center: GridPoint,
    pub stem: Direction,
}

impl std::fmt::Display for ClawStem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} stem {}", self.center, self.stem)
    }
}

#[derive(Clone, Debug, Default)]
struct PointBends {
    by_shape: [Vec<PathId>; 4],
}

/// Per-point queries over a fixed representation and its edge index.
pub struct ClawAnalyzer<'a> {
    repr: &'a EpgRepresentation,
    buckets: &'a EdgeBuckets,
    bends: BTreeMap<GridPoint, PointBends>,
}

impl<'a> ClawAnalyzer<'a> {
    pub fn new(repr: &'a EpgRepresentation, buckets: &'a EdgeBuckets) -> Self {
        let mut bends: BTreeMap<GridPoint, PointBends> = BTreeMap::new();
        for p in repr.paths() {
            if let Some(corner) = p.bend_point() {
                let shape = p.shape().expect("bend path has a shape");
                bends.entry(corner).or_default().by_shape[shape.index()].push(p.id);
            }
        }
        for pb in bends.values_mut() {
            for ids in &mut pb.by_shape {
                ids.sort_unstable();
            }
        }
        ClawAnalyzer {
            repr,
            buckets,
            bends,
        }
    }

    pub fn repr(&self) -> &EpgRepresentation {
        self.repr
    }

    /// Grid points carrying at least one bend, in row-major order.
    pub fn bend_points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.bends.keys().copied()
    }

    /// Bend paths at `x` of the given shape, id-sorted.
    pub fn bends_at(&self, x: GridPoint, shape: Shape) -> &[PathId] {
        self.bends
            .get(&x)
            .map(|pb| pb.by_shape[shape.index()].as_slice())
            .unwrap_or(&[])
    }

    /// All bend paths at `x`, id-sorted.
    pub fn all_bends_at(&self, x: GridPoint) -> Vec<PathId> {
        let mut out: Vec<PathId> = Shape::ALL
            .iter()
            .flat_map(|&s| self.bends_at(x, s).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Paths passing straight through `x` along the given axis.
    pub fn through(&self, x: GridPoint, orientation: Orientation) -> Vec<PathId> {
        self.buckets.through(x, orientation)
    }

    /// Paths covering two of the three edges of the stem triple at `x`:
    /// bends at `x` whose shape contains the stem, plus the straight-through
    /// paths across it. A single-bend path can never hold all three edges.
    pub fn paths_with_two_edges(&self, x: GridPoint, stem: Direction) -> Vec<PathId> {
        let [s1, s2] = Shape::with_arm(stem);
        let cross = stem.axis().flip();
        let mut out: Vec<PathId> = self
            .bends_at(x, s1)
            .iter()
            .chain(self.bends_at(x, s2))
            .copied()
            .collect();
        let through = self.through(x, cross);
        debug_assert!(
            through.iter().all(|id| !out.contains(id)),
            "a path bending at {x} cannot also run through it"
        );
        out.extend(through);
        out.sort_unstable();
        out
    }

    /// A shape is missing at `x` when no bend path of that shape sits there,
    /// or at least one that does is not colored (a,a).
    pub fn is_missing<C>(&self, x: GridPoint, shape: Shape, colors: &C) -> bool
    where
        C: Fn(PathId) -> PathColor,
    {
        let bends = self.bends_at(x, shape);
        bends.is_empty() || bends.iter().any(|&id| !colors(id).is_aa())
    }

    pub fn missing_shapes<C>(&self, x: GridPoint, colors: &C) -> Vec<Shape>
    where
        C: Fn(PathId) -> PathColor,
    {
        Shape::ALL
            .into_iter()
            .filter(|&s| self.is_missing(x, s, colors))
            .collect()
    }

    /// The candidate member set for the stem triple at `x`, present exactly
    /// when every pair of the triple is covered: both bend shapes occur at
    /// `x` and some path runs straight through across the stem. Color-blind.
    pub fn claw_candidate(&self, x: GridPoint, stem: Direction) -> Option<Vec<PathId>> {
        let [s1, s2] = Shape::with_arm(stem);
        if self.bends_at(x, s1).is_empty() || self.bends_at(x, s2).is_empty() {
            return None;
        }
        if self.through(x, stem.axis().flip()).is_empty() {
            return None;
        }
        Some(self.paths_with_two_edges(x, stem))
    }

    /// Stems at `x` whose candidate exists and is entirely colored (a,a).
    pub fn hot_stems<C>(&self, x: GridPoint, colors: &C) -> Vec<Direction>
    where
        C: Fn(PathId) -> PathColor,
    {
        Direction::ALL
            .into_iter()
            .filter(|&d| {
                self.claw_candidate(x, d)
                    .is_some_and(|members| members.iter().all(|&id| colors(id).is_aa()))
            })
            .collect()
    }

    /// Diagnostic refinement of `hot_stems`: keeps only stems whose member
    /// set is a maximal clique of the graph. Always a subset of `hot_stems`.
    pub fn exact_mono_claws<C>(
        &self,
        x: GridPoint,
        graph: &IntersectionGraph,
        colors: &C,
    ) -> Vec<Direction>
    where
        C: Fn(PathId) -> PathColor,
    {
        self.hot_stems(x, colors)
            .into_iter()
            .filter(|&d| {
                let members = self.paths_with_two_edges(x, d);
                members.len() >= 2 && !extendable(graph, &members)
            })
            .collect()
    }
}

/// True when some vertex outside `members` is adjacent to all of them.
pub(crate) fn extendable(graph: &IntersectionGraph, members: &[PathId]) -> bool {
    let probe = members
        .iter()
        .copied()
        .min_by_key(|&id| graph.degree(id))
        .expect("non-empty member set");
    graph
        .neighbors(probe)
        .any(|v| !members.contains(&v) && members.iter().all(|&m| m == v || graph.are_adjacent(v, m)))
}
