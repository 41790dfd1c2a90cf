//! Independent validation of colorings.
//!
//! Maximal cliques are enumerated two ways: from the representation (every
//! grid edge's cover set plus every fully covered stem triple, filtered down
//! to the maximal ones) and from the graph alone by pivoted recursive
//! search. The first route is what `verify_coloring` trusts; the second is a
//! desk-scale oracle used to cross-check it.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

use crate::claw::{extendable, ClawAnalyzer, ClawStem};
use crate::graph::{EdgeBuckets, IntersectionGraph};
use crate::model::{Direction, EpgRepresentation, GridEdge, PathId};

/// Cap on oracle input size; beyond it the exponential worst case is real.
pub const DEFAULT_ORACLE_BOUND: usize = 200;

/// How a maximal clique is witnessed in the representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueKind {
    /// All members share this grid edge.
    Edge(GridEdge),
    /// Members are the two-edge coverers of this stem triple.
    Claw(ClawStem),
}

/// A maximal clique of size >= 2, tagged with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueReport {
    /// Ascending path ids.
    pub members: Vec<PathId>,
    pub kind: CliqueKind,
}

impl std::fmt::Display for CliqueReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let members = self
            .members
            .iter()
            .map(|id| id.to_string())
            .collect::<Vec<_>>()
            .join(",");
        match self.kind {
            CliqueKind::Edge(e) => write!(f, "edge {{{members}}} @ {e}"),
            CliqueKind::Claw(s) => write!(f, "claw {{{members}}} @ {s}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("graph has {vertices} vertices, oracle bound is {bound}")]
    OracleBound { vertices: usize, bound: usize },
    #[error("no color assigned to path {0}")]
    MissingColor(PathId),
}

/// Enumerates every maximal clique of size >= 2 straight from the
/// representation. Candidates are the cover set of each occupied grid edge
/// and the two-edge path set of each fully covered stem triple; non-maximal
/// candidates are dropped by an explicit extendability check.
pub fn enumerate_cliques_repr(
    repr: &EpgRepresentation,
    graph: &IntersectionGraph,
) -> Vec<CliqueReport> {
    let buckets = EdgeBuckets::build(repr);
    enumerate_cliques_repr_with(repr, graph, &buckets)
}

pub fn enumerate_cliques_repr_with(
    repr: &EpgRepresentation,
    graph: &IntersectionGraph,
    buckets: &EdgeBuckets,
) -> Vec<CliqueReport> {
    let an = ClawAnalyzer::new(repr, buckets);
    let mut seen: HashSet<Vec<PathId>> = HashSet::new();
    let mut out: Vec<CliqueReport> = Vec::new();

    for e in buckets.edges_sorted() {
        let members = buckets.paths_on(e);
        if members.len() < 2 || seen.contains(members) {
            continue;
        }
        if extendable(graph, members) {
            continue;
        }
        seen.insert(members.to_vec());
        out.push(CliqueReport {
            members: members.to_vec(),
            kind: CliqueKind::Edge(e),
        });
    }

    for x in an.bend_points() {
        for stem in Direction::ALL {
            let Some(members) = an.claw_candidate(x, stem) else {
                continue;
            };
            if members.len() < 2 || seen.contains(&members) {
                continue;
            }
            if extendable(graph, &members) {
                continue;
            }
            seen.insert(members.clone());
            out.push(CliqueReport {
                members,
                kind: CliqueKind::Claw(ClawStem { center: x, stem }),
            });
        }
    }

    out.sort_by(|a, b| a.members.cmp(&b.members));
    out
}

/// Pivoted recursive enumeration of all maximal cliques of size >= 2,
/// independent of the representation. Refuses graphs above `bound`.
pub fn enumerate_cliques_graph(
    graph: &IntersectionGraph,
    bound: usize,
) -> Result<Vec<Vec<PathId>>, VerifyError> {
    let n = graph.vertex_count();
    if n > bound {
        return Err(VerifyError::OracleBound {
            vertices: n,
            bound,
        });
    }
    let ids: Vec<PathId> = graph.vertices().collect();
    let index: BTreeMap<PathId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<BTreeSet<usize>> = ids
        .iter()
        .map(|&v| graph.neighbors(v).map(|w| index[&w]).collect())
        .collect();

    let mut cliques = Vec::new();
    let p: BTreeSet<usize> = (0..n).collect();
    bron_kerbosch(&adj, BTreeSet::new(), p, BTreeSet::new(), &mut cliques);

    let mut out: Vec<Vec<PathId>> = cliques
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| c.into_iter().map(|i| ids[i]).collect())
        .collect();
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: BTreeSet<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.into_iter().collect());
        return;
    }
    // Pivot on the highest-degree vertex of P union X.
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| adj[u].len())
        .expect("P or X non-empty");
    let todo: Vec<usize> = p.iter().copied().filter(|v| !adj[pivot].contains(v)).collect();
    for v in todo {
        let mut next_r = r.clone();
        next_r.insert(v);
        let next_p = p.intersection(&adj[v]).copied().collect();
        let next_x = x.intersection(&adj[v]).copied().collect();
        bron_kerbosch(adj, next_r, next_p, next_x, out);
        p.remove(&v);
        x.insert(v);
    }
}

/// Outcome of checking a coloring against every maximal clique.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub valid: bool,
    /// Monocolored cliques with the offending color.
    pub violations: Vec<(CliqueReport, u8)>,
    pub class4_independent: bool,
    pub clique_count: usize,
}

/// Validates a coloring: every maximal clique of size >= 2 must see at least
/// two colors and all colors must be in 1..=4. When the graph is inside the
/// oracle bound, the representation-based enumeration is cross-checked
/// against the pivoted search; a mismatch is a bug, and panics.
pub fn verify_coloring(
    repr: &EpgRepresentation,
    coloring: &BTreeMap<PathId, u8>,
) -> Result<VerificationReport, VerifyError> {
    let buckets = EdgeBuckets::build(repr);
    let graph = crate::graph::derive_graph_with(repr, &buckets);
    for id in repr.ids() {
        if !coloring.contains_key(&id) {
            return Err(VerifyError::MissingColor(id));
        }
    }

    let cliques = enumerate_cliques_repr_with(repr, &graph, &buckets);
    if graph.vertex_count() <= DEFAULT_ORACLE_BOUND {
        let oracle = enumerate_cliques_graph(&graph, DEFAULT_ORACLE_BOUND)
            .expect("bound checked above");
        let from_repr: Vec<Vec<PathId>> = cliques.iter().map(|c| c.members.clone()).collect();
        assert_eq!(
            from_repr, oracle,
            "representation-based clique enumeration disagrees with the graph oracle"
        );
    }

    let mut violations = Vec::new();
    for clique in &cliques {
        let first = coloring[&clique.members[0]];
        if clique.members.iter().all(|id| coloring[id] == first) {
            violations.push((clique.clone(), first));
        }
    }

    let class4_independent = !graph
        .edges()
        .any(|(u, v)| coloring[&u] == 4 && coloring[&v] == 4);
    let colors_in_range = coloring.values().all(|c| (1..=4).contains(c));
    let clique_count = cliques.len();

    Ok(VerificationReport {
        valid: violations.is_empty() && colors_in_range,
        violations,
        class4_independent,
        clique_count,
    })
}
