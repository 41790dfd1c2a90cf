//! Derived intersection graph and the per-edge path index it is built from.
//!
//! Adjacency is computed by bucketing paths per grid edge rather than by an
//! all-pairs scan, so the cost tracks total edge multiplicity.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::{BuildHasherDefault, Hasher};

use crate::model::{edge_at, Direction, EpgRepresentation, GridEdge, GridPoint, Orientation, PathId};

/// Grid edges packed into one word: orientation bit plus zigzag coordinates.
/// Anchors can be -1 (west/south lookups at the origin), hence the zigzag.
fn edge_key(e: GridEdge) -> u64 {
    let zz = |v: i64| -> u64 {
        let z = ((v << 1) ^ (v >> 63)) as u64;
        debug_assert!(z < (1 << 31), "coordinate out of key range");
        z
    };
    let orientation = match e.orientation {
        Orientation::H => 0u64,
        Orientation::V => 1u64,
    };
    orientation | zz(e.anchor.col) << 1 | zz(e.anchor.row) << 32
}

fn edge_from_key(key: u64) -> GridEdge {
    let unzz = |z: u64| -> i64 { ((z >> 1) as i64) ^ -((z & 1) as i64) };
    let anchor = GridPoint::new(unzz((key >> 1) & 0x7FFF_FFFF), unzz(key >> 32));
    match key & 1 {
        0 => GridEdge::h(anchor.col, anchor.row),
        _ => GridEdge::v(anchor.col, anchor.row),
    }
}

/// Multiply-xor mixer over the packed key; the edge map is hot enough that
/// the default hasher shows up in profiles.
#[derive(Clone, Copy, Default)]
struct EdgeKeyHasher(u64);

impl Hasher for EdgeKeyHasher {
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("edge keys hash as u64");
    }

    fn write_u64(&mut self, key: u64) {
        let mut z = key.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        self.0 = z ^ (z >> 31);
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

type EdgeMap<V> = HashMap<u64, V, BuildHasherDefault<EdgeKeyHasher>>;

/// For every occupied grid edge, the id-sorted list of paths covering it.
#[derive(Clone, Debug, Default)]
pub struct EdgeBuckets {
    buckets: EdgeMap<Vec<PathId>>,
}

impl EdgeBuckets {
    pub fn build(repr: &EpgRepresentation) -> Self {
        let mut buckets: EdgeMap<Vec<PathId>> = EdgeMap::default();
        for p in repr.paths() {
            for seg in p.segments() {
                for e in seg.edges() {
                    buckets.entry(edge_key(e)).or_default().push(p.id);
                }
            }
        }
        for ids in buckets.values_mut() {
            ids.sort_unstable();
        }
        EdgeBuckets { buckets }
    }

    pub fn paths_on(&self, e: GridEdge) -> &[PathId] {
        self.buckets
            .get(&edge_key(e))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Occupied edges in canonical order.
    pub fn edges_sorted(&self) -> Vec<GridEdge> {
        let mut edges: Vec<GridEdge> = self.buckets.keys().map(|&k| edge_from_key(k)).collect();
        edges.sort_unstable();
        edges
    }

    /// Paths that pass strictly through `x` along the given axis, i.e. cover
    /// both incident edges on that line. Includes bend paths bending
    /// elsewhere whose arm runs through `x`; never includes a path bending at
    /// `x` itself, whose arms stop there.
    pub fn through(&self, x: GridPoint, orientation: Orientation) -> Vec<PathId> {
        let (before, after) = match orientation {
            Orientation::H => (edge_at(x, Direction::W), edge_at(x, Direction::E)),
            Orientation::V => (edge_at(x, Direction::S), edge_at(x, Direction::N)),
        };
        intersect_sorted(self.paths_on(before), self.paths_on(after))
    }
}

fn intersect_sorted(a: &[PathId], b: &[PathId]) -> Vec<PathId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The intersection graph of a representation: vertices are path ids,
/// adjacency means sharing at least one grid edge. Stored index-based with
/// sorted neighbor lists; vertices iterate in ascending id order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntersectionGraph {
    ids: Vec<PathId>,
    index: HashMap<PathId, usize>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl IntersectionGraph {
    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = PathId> + '_ {
        self.ids.iter().copied()
    }

    pub fn contains(&self, u: PathId) -> bool {
        self.index.contains_key(&u)
    }

    pub fn neighbors(&self, u: PathId) -> impl Iterator<Item = PathId> + '_ {
        self.index
            .get(&u)
            .into_iter()
            .flat_map(|&i| self.adj[i].iter().map(|&j| self.ids[j as usize]))
    }

    pub fn degree(&self, u: PathId) -> usize {
        self.index.get(&u).map(|&i| self.adj[i].len()).unwrap_or(0)
    }

    pub fn are_adjacent(&self, u: PathId, v: PathId) -> bool {
        let (Some(&i), Some(&j)) = (self.index.get(&u), self.index.get(&v)) else {
            return false;
        };
        i != j && self.adj[i].binary_search(&(j as u32)).is_ok()
    }

    /// Undirected edges, each reported once with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (PathId, PathId)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, ns)| {
            ns.iter()
                .copied()
                .filter(move |&j| (i as u32) < j)
                .map(move |j| (self.ids[i], self.ids[j as usize]))
        })
    }

    /// DOT rendering: every vertex listed, one `u -- v` line per adjacency.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the intersection graph from a prebuilt edge index.
pub fn derive_graph_with(repr: &EpgRepresentation, buckets: &EdgeBuckets) -> IntersectionGraph {
    let mut ids: Vec<PathId> = repr.ids().collect();
    ids.sort_unstable();
    let index: HashMap<PathId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); ids.len()];
    for bucket in buckets.buckets.values() {
        for (i, &u) in bucket.iter().enumerate() {
            let ui = index[&u] as u32;
            for &v in &bucket[i + 1..] {
                let vi = index[&v] as u32;
                adj[ui as usize].push(vi);
                adj[vi as usize].push(ui);
            }
        }
    }
    let mut edge_count = 0;
    for ns in &mut adj {
        ns.sort_unstable();
        ns.dedup();
        edge_count += ns.len();
    }
    IntersectionGraph {
        ids,
        index,
        adj,
        edge_count: edge_count / 2,
    }
}

pub fn derive_graph(repr: &EpgRepresentation) -> IntersectionGraph {
    derive_graph_with(repr, &EdgeBuckets::build(repr))
}
