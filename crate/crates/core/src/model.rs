//! Data model for single-bend path systems on a rectangular grid.
//!
//! A representation is a collection of paths, each made of at most one
//! horizontal and one vertical run of grid edges meeting at a bend point.
//! Columns grow east, rows grow north. Two paths are adjacent in the derived
//! graph exactly when they share a grid edge; sharing only a grid point does
//! not count. Everything downstream (line coloring, claw analysis, clique
//! enumeration) is phrased in terms of the edge sets defined here.
//!
//! Segments are stored as half-open intervals of edge anchors, so "the
//! segments intersect" is exactly `max(lo, lo') < min(hi, hi')` with no
//! point-touch corner cases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Identifier of a path within a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathId(pub u64);

impl fmt::Display for PathId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Axis of a segment or grid edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    H,
    V,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::H => Orientation::V,
            Orientation::V => Orientation::H,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::H => write!(f, "H"),
            Orientation::V => write!(f, "V"),
        }
    }
}

/// A grid point. Ordered row-major (row first, then column), which fixes the
/// iteration order of every per-point pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub col: i64,
    pub row: i64,
}

impl GridPoint {
    pub fn new(col: i64, row: i64) -> Self {
        GridPoint { col, row }
    }
}

impl Ord for GridPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for GridPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// One grid edge in canonical form: an H edge is keyed by its west endpoint,
/// a V edge by its south endpoint, so every edge has a unique encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    pub orientation: Orientation,
    pub anchor: GridPoint,
}

impl GridEdge {
    /// Horizontal edge from (col,row) to (col+1,row).
    pub fn h(col: i64, row: i64) -> Self {
        GridEdge {
            orientation: Orientation::H,
            anchor: GridPoint::new(col, row),
        }
    }

    /// Vertical edge from (col,row) to (col,row+1).
    pub fn v(col: i64, row: i64) -> Self {
        GridEdge {
            orientation: Orientation::V,
            anchor: GridPoint::new(col, row),
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.orientation, self.anchor.col, self.anchor.row)
    }
}

/// Compass direction of a grid edge leaving a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    N,
    E,
    S,
    W,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::N, Direction::E, Direction::S, Direction::W];

    pub fn is_vertical(self) -> bool {
        matches!(self, Direction::N | Direction::S)
    }

    pub fn axis(self) -> Orientation {
        if self.is_vertical() {
            Orientation::V
        } else {
            Orientation::H
        }
    }

    /// The two directions orthogonal to `self`; together with `self` they
    /// form the stem triple at a point.
    pub fn perpendicular(self) -> [Direction; 2] {
        if self.is_vertical() {
            [Direction::E, Direction::W]
        } else {
            [Direction::N, Direction::S]
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Direction::N => 'N',
            Direction::E => 'E',
            Direction::S => 'S',
            Direction::W => 'W',
        };
        write!(f, "{c}")
    }
}

/// The grid edge incident to `x` in direction `d`, in canonical anchor form.
pub fn edge_at(x: GridPoint, d: Direction) -> GridEdge {
    match d {
        Direction::N => GridEdge::v(x.col, x.row),
        Direction::S => GridEdge::v(x.col, x.row - 1),
        Direction::E => GridEdge::h(x.col, x.row),
        Direction::W => GridEdge::h(x.col - 1, x.row),
    }
}

/// Bend shape: the pair of directions in which the vertical and horizontal
/// arms leave the corner (NE = vertical goes north, horizontal goes east).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    NE,
    NW,
    SE,
    SW,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::NE, Shape::NW, Shape::SE, Shape::SW];

    /// The shape whose arms point in the exactly opposite directions.
    /// An involution that swaps NE with SW and NW with SE.
    pub fn antipode(self) -> Shape {
        match self {
            Shape::NE => Shape::SW,
            Shape::SW => Shape::NE,
            Shape::NW => Shape::SE,
            Shape::SE => Shape::NW,
        }
    }

    pub fn vertical(self) -> Direction {
        match self {
            Shape::NE | Shape::NW => Direction::N,
            Shape::SE | Shape::SW => Direction::S,
        }
    }

    pub fn horizontal(self) -> Direction {
        match self {
            Shape::NE | Shape::SE => Direction::E,
            Shape::NW | Shape::SW => Direction::W,
        }
    }

    pub fn contains(self, d: Direction) -> bool {
        self.vertical() == d || self.horizontal() == d
    }

    pub fn of(vertical: Direction, horizontal: Direction) -> Shape {
        debug_assert!(vertical.is_vertical() && !horizontal.is_vertical());
        match (vertical, horizontal) {
            (Direction::N, Direction::E) => Shape::NE,
            (Direction::N, Direction::W) => Shape::NW,
            (Direction::S, Direction::E) => Shape::SE,
            (Direction::S, Direction::W) => Shape::SW,
            _ => unreachable!(),
        }
    }

    /// The two bend shapes whose arm set contains `stem`.
    pub fn with_arm(stem: Direction) -> [Shape; 2] {
        match stem {
            Direction::N => [Shape::NE, Shape::NW],
            Direction::S => [Shape::SE, Shape::SW],
            Direction::E => [Shape::NE, Shape::SE],
            Direction::W => [Shape::NW, Shape::SW],
        }
    }

    pub fn index(self) -> usize {
        match self {
            Shape::NE => 0,
            Shape::NW => 1,
            Shape::SE => 2,
            Shape::SW => 3,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::NE => "NE",
            Shape::NW => "NW",
            Shape::SE => "SE",
            Shape::SW => "SW",
        };
        write!(f, "{s}")
    }
}

/// A run of grid edges on one row or column. `lo..hi` are point coordinates
/// along the line; the run occupies the edges anchored `lo..hi-1`, so it is
/// never empty (`lo < hi`) and two runs on the same line share an edge iff
/// their intervals overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub orientation: Orientation,
    /// Row index for H segments, column index for V segments.
    pub line: i64,
    pub lo: i64,
    pub hi: i64,
}

impl Segment {
    pub fn h(row: i64, lo: i64, hi: i64) -> Self {
        assert!(lo < hi, "empty horizontal segment");
        Segment {
            orientation: Orientation::H,
            line: row,
            lo,
            hi,
        }
    }

    pub fn v(col: i64, lo: i64, hi: i64) -> Self {
        assert!(lo < hi, "empty vertical segment");
        Segment {
            orientation: Orientation::V,
            line: col,
            lo,
            hi,
        }
    }

    /// Number of grid edges in the run.
    pub fn edge_len(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        let seg = *self;
        (seg.lo..seg.hi).map(move |a| match seg.orientation {
            Orientation::H => GridEdge::h(a, seg.line),
            Orientation::V => GridEdge::v(seg.line, a),
        })
    }

    /// True when the two runs share at least one grid edge.
    pub fn overlaps(&self, other: &Segment) -> bool {
        self.orientation == other.orientation
            && self.line == other.line
            && self.lo.max(other.lo) < self.hi.min(other.hi)
    }

    /// Non-strict containment of `other`'s edge set in `self`'s.
    pub fn contains_seg(&self, other: &Segment) -> bool {
        self.orientation == other.orientation
            && self.line == other.line
            && self.lo <= other.lo
            && other.hi <= self.hi
    }

    pub fn contains_edge(&self, e: &GridEdge) -> bool {
        if e.orientation != self.orientation {
            return false;
        }
        let (line, along) = match e.orientation {
            Orientation::H => (e.anchor.row, e.anchor.col),
            Orientation::V => (e.anchor.col, e.anchor.row),
        };
        line == self.line && self.lo <= along && along < self.hi
    }
}

/// Geometry of a path with a bend: the corner plus the far endpoint of each
/// arm. `h_end != corner.col` and `v_end != corner.row`, so both arms hold at
/// least one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bend {
    pub corner: GridPoint,
    pub h_end: i64,
    pub v_end: i64,
}

impl Bend {
    pub fn shape(&self) -> Shape {
        let vertical = if self.v_end > self.corner.row {
            Direction::N
        } else {
            Direction::S
        };
        let horizontal = if self.h_end > self.corner.col {
            Direction::E
        } else {
            Direction::W
        };
        Shape::of(vertical, horizontal)
    }

    pub fn h_segment(&self) -> Segment {
        Segment::h(
            self.corner.row,
            self.h_end.min(self.corner.col),
            self.h_end.max(self.corner.col),
        )
    }

    pub fn v_segment(&self) -> Segment {
        Segment::v(
            self.corner.col,
            self.v_end.min(self.corner.row),
            self.v_end.max(self.corner.row),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathKind {
    H(Segment),
    V(Segment),
    Bend(Bend),
}

/// One path of the representation: a straight horizontal or vertical run, or
/// two runs joined at a bend point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpgPath {
    pub id: PathId,
    pub kind: PathKind,
}

impl EpgPath {
    /// Straight horizontal path on `row` spanning points `c1..=c2` (`c1 < c2`).
    pub fn horizontal(id: u64, row: i64, c1: i64, c2: i64) -> Self {
        EpgPath {
            id: PathId(id),
            kind: PathKind::H(Segment::h(row, c1, c2)),
        }
    }

    /// Straight vertical path on `col` spanning points `r1..=r2` (`r1 < r2`).
    pub fn vertical(id: u64, col: i64, r1: i64, r2: i64) -> Self {
        EpgPath {
            id: PathId(id),
            kind: PathKind::V(Segment::v(col, r1, r2)),
        }
    }

    pub fn bend(id: u64, corner: GridPoint, h_end: i64, v_end: i64) -> Self {
        assert!(h_end != corner.col, "empty horizontal arm");
        assert!(v_end != corner.row, "empty vertical arm");
        EpgPath {
            id: PathId(id),
            kind: PathKind::Bend(Bend { corner, h_end, v_end }),
        }
    }

    pub fn h_segment(&self) -> Option<Segment> {
        match &self.kind {
            PathKind::H(s) => Some(*s),
            PathKind::V(_) => None,
            PathKind::Bend(b) => Some(b.h_segment()),
        }
    }

    pub fn v_segment(&self) -> Option<Segment> {
        match &self.kind {
            PathKind::H(_) => None,
            PathKind::V(s) => Some(*s),
            PathKind::Bend(b) => Some(b.v_segment()),
        }
    }

    pub fn segment(&self, orientation: Orientation) -> Option<Segment> {
        match orientation {
            Orientation::H => self.h_segment(),
            Orientation::V => self.v_segment(),
        }
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> {
        self.h_segment().into_iter().chain(self.v_segment())
    }

    pub fn bend_point(&self) -> Option<GridPoint> {
        match &self.kind {
            PathKind::Bend(b) => Some(b.corner),
            _ => None,
        }
    }

    pub fn shape(&self) -> Option<Shape> {
        match &self.kind {
            PathKind::Bend(b) => Some(b.shape()),
            _ => None,
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        self.segments().flat_map(|s| s.edges().collect::<Vec<_>>())
    }

    pub fn edge_count(&self) -> i64 {
        self.segments().map(|s| s.edge_len()).sum()
    }
}

/// Declared grid extent: points live in `0..width` columns and `0..height` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub width: i64,
    pub height: i64,
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate path id {0}")]
    DuplicateId(PathId),
    #[error("path {0}: empty segment")]
    EmptySegment(PathId),
    #[error("path {id}: coordinate out of bounds ({detail})")]
    OutOfBounds { id: PathId, detail: String },
    #[error("path {id}: {message}")]
    Malformed { id: PathId, message: String },
    #[error("invalid grid declaration: {0}")]
    Grid(String),
}

/// A validated collection of paths, immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpgRepresentation {
    grid: Option<GridBounds>,
    paths: Vec<EpgPath>,
    by_id: HashMap<PathId, usize>,
}

impl EpgRepresentation {
    /// Validates ids, segment non-emptiness, non-negative coordinates and,
    /// when bounds are declared, containment in the grid.
    pub fn new(grid: Option<GridBounds>, paths: Vec<EpgPath>) -> Result<Self, ModelError> {
        if let Some(g) = grid {
            if g.width < 1 || g.height < 1 {
                return Err(ModelError::Grid(format!(
                    "width and height must be at least 1, got {}x{}",
                    g.width, g.height
                )));
            }
        }
        let mut by_id = HashMap::with_capacity(paths.len());
        for (i, p) in paths.iter().enumerate() {
            if by_id.insert(p.id, i).is_some() {
                return Err(ModelError::DuplicateId(p.id));
            }
            for seg in p.segments() {
                if seg.lo >= seg.hi {
                    return Err(ModelError::EmptySegment(p.id));
                }
                let (min_col, max_col, min_row, max_row) = match seg.orientation {
                    Orientation::H => (seg.lo, seg.hi, seg.line, seg.line),
                    Orientation::V => (seg.line, seg.line, seg.lo, seg.hi),
                };
                if min_col < 0 || min_row < 0 {
                    return Err(ModelError::OutOfBounds {
                        id: p.id,
                        detail: "negative coordinate".into(),
                    });
                }
                if let Some(g) = grid {
                    if max_col > g.width - 1 || max_row > g.height - 1 {
                        return Err(ModelError::OutOfBounds {
                            id: p.id,
                            detail: format!(
                                "segment reaches ({max_col},{max_row}), grid is {}x{}",
                                g.width, g.height
                            ),
                        });
                    }
                }
            }
        }
        Ok(EpgRepresentation { grid, paths, by_id })
    }

    pub fn grid(&self) -> Option<GridBounds> {
        self.grid
    }

    pub fn paths(&self) -> &[EpgPath] {
        &self.paths
    }

    pub fn path(&self, id: PathId) -> Option<&EpgPath> {
        self.by_id.get(&id).map(|&i| &self.paths[i])
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = PathId> + '_ {
        self.paths.iter().map(|p| p.id)
    }

    /// Declared bounds, or the bounding box of the paths when absent.
    pub fn bounding_box(&self) -> GridBounds {
        if let Some(g) = self.grid {
            return g;
        }
        let mut width = 1;
        let mut height = 1;
        for p in &self.paths {
            for seg in p.segments() {
                let (c, r) = match seg.orientation {
                    Orientation::H => (seg.hi, seg.line),
                    Orientation::V => (seg.line, seg.hi),
                };
                width = width.max(c + 1);
                height = height.max(r + 1);
            }
        }
        GridBounds { width, height }
    }
}

/// The set of grid edges a path occupies.
pub fn grid_edges_of(path: &EpgPath) -> std::collections::BTreeSet<GridEdge> {
    path.edges().collect()
}

/// Bend paths grouped by bend point and shape, id-sorted within each group.
pub fn bend_index(
    repr: &EpgRepresentation,
) -> BTreeMap<GridPoint, BTreeMap<Shape, Vec<PathId>>> {
    let mut index: BTreeMap<GridPoint, BTreeMap<Shape, Vec<PathId>>> = BTreeMap::new();
    for p in repr.paths() {
        if let PathKind::Bend(b) = &p.kind {
            index
                .entry(b.corner)
                .or_default()
                .entry(b.shape())
                .or_default()
                .push(p.id);
        }
    }
    for shapes in index.values_mut() {
        for ids in shapes.values_mut() {
            ids.sort_unstable();
        }
    }
    index
}

// --- instance file format ---------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grid: Option<GridBounds>,
    paths: Vec<RawPath>,
}

/// Field order here fixes the canonical key order of the serialized form.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPath {
    id: u64,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    row: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    corner: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h_end: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v_end: Option<i64>,
}

impl RawPath {
    fn empty(kind: &str, id: u64) -> Self {
        RawPath {
            id,
            kind: kind.to_string(),
            row: None,
            c1: None,
            c2: None,
            col: None,
            r1: None,
            r2: None,
            corner: None,
            h_end: None,
            v_end: None,
        }
    }
}

fn field<T: Copy>(id: PathId, name: &str, v: Option<T>) -> Result<T, ModelError> {
    v.ok_or_else(|| ModelError::Malformed {
        id,
        message: format!("missing field `{name}`"),
    })
}

fn reject_extra(id: PathId, kind: &str, extras: &[(&str, bool)]) -> Result<(), ModelError> {
    for (name, present) in extras {
        if *present {
            return Err(ModelError::Malformed {
                id,
                message: format!("field `{name}` is not valid for kind \"{kind}\""),
            });
        }
    }
    Ok(())
}

/// Parses an instance file and validates every invariant of the model.
pub fn parse_representation(text: &str) -> Result<EpgRepresentation, ModelError> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| ModelError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut paths = Vec::with_capacity(raw.paths.len());
    for rp in &raw.paths {
        let id = PathId(rp.id);
        let path = match rp.kind.as_str() {
            "H" => {
                reject_extra(
                    id,
                    "H",
                    &[
                        ("col", rp.col.is_some()),
                        ("r1", rp.r1.is_some()),
                        ("r2", rp.r2.is_some()),
                        ("corner", rp.corner.is_some()),
                        ("h_end", rp.h_end.is_some()),
                        ("v_end", rp.v_end.is_some()),
                    ],
                )?;
                let row = field(id, "row", rp.row)?;
                let c1 = field(id, "c1", rp.c1)?;
                let c2 = field(id, "c2", rp.c2)?;
                if c1 >= c2 {
                    return Err(ModelError::EmptySegment(id));
                }
                EpgPath {
                    id,
                    kind: PathKind::H(Segment::h(row, c1, c2)),
                }
            }
            "V" => {
                reject_extra(
                    id,
                    "V",
                    &[
                        ("row", rp.row.is_some()),
                        ("c1", rp.c1.is_some()),
                        ("c2", rp.c2.is_some()),
                        ("corner", rp.corner.is_some()),
                        ("h_end", rp.h_end.is_some()),
                        ("v_end", rp.v_end.is_some()),
                    ],
                )?;
                let col = field(id, "col", rp.col)?;
                let r1 = field(id, "r1", rp.r1)?;
                let r2 = field(id, "r2", rp.r2)?;
                if r1 >= r2 {
                    return Err(ModelError::EmptySegment(id));
                }
                EpgPath {
                    id,
                    kind: PathKind::V(Segment::v(col, r1, r2)),
                }
            }
            "bend" => {
                reject_extra(
                    id,
                    "bend",
                    &[
                        ("row", rp.row.is_some()),
                        ("c1", rp.c1.is_some()),
                        ("c2", rp.c2.is_some()),
                        ("col", rp.col.is_some()),
                        ("r1", rp.r1.is_some()),
                        ("r2", rp.r2.is_some()),
                    ],
                )?;
                let (col, row) = field(id, "corner", rp.corner)?;
                let h_end = field(id, "h_end", rp.h_end)?;
                let v_end = field(id, "v_end", rp.v_end)?;
                if h_end == col || v_end == row {
                    return Err(ModelError::EmptySegment(id));
                }
                EpgPath {
                    id,
                    kind: PathKind::Bend(Bend {
                        corner: GridPoint::new(col, row),
                        h_end,
                        v_end,
                    }),
                }
            }
            other => {
                return Err(ModelError::Malformed {
                    id,
                    message: format!("unknown kind \"{other}\""),
                })
            }
        };
        paths.push(path);
    }
    EpgRepresentation::new(raw.grid, paths)
}

/// Serializes with canonical key order; `parse(serialize(r))` is structurally
/// identical to `r`, and serialization is idempotent byte for byte.
pub fn serialize_representation(repr: &EpgRepresentation) -> String {
    let paths = repr
        .paths()
        .iter()
        .map(|p| match &p.kind {
            PathKind::H(s) => {
                let mut rp = RawPath::empty("H", p.id.0);
                rp.row = Some(s.line);
                rp.c1 = Some(s.lo);
                rp.c2 = Some(s.hi);
                rp
            }
            PathKind::V(s) => {
                let mut rp = RawPath::empty("V", p.id.0);
                rp.col = Some(s.line);
                rp.r1 = Some(s.lo);
                rp.r2 = Some(s.hi);
                rp
            }
            PathKind::Bend(b) => {
                let mut rp = RawPath::empty("bend", p.id.0);
                rp.corner = Some((b.corner.col, b.corner.row));
                rp.h_end = Some(b.h_end);
                rp.v_end = Some(b.v_end);
                rp
            }
        })
        .collect();
    let raw = RawInstance {
        grid: repr.grid(),
        paths,
    };
    serde_json::to_string(&raw).expect("instance serialization cannot fail")
}
