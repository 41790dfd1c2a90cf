//! Two-coloring of the segments on each grid line.
//!
//! The segments of one row (or column) form an interval graph, and sorting
//! them by right endpoint is a perfect elimination ordering. Walking that
//! order backwards and giving an entry color `b` exactly when all of its
//! already-colored neighbors got `a` yields a coloring where the `b` entries
//! on a line are pairwise disjoint and no line clique of size two or more is
//! monochromatic. Combining the row color and the column color of every path
//! (missing components count as `a`) gives the base pair coloring that the
//! recoloring pass starts from.

use std::collections::BTreeMap;

use crate::model::{EpgRepresentation, Orientation, PathId};

/// Color of a single segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SegColor {
    A,
    B,
}

/// Pair of segment colors (horizontal component, vertical component).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathColor {
    pub h: SegColor,
    pub v: SegColor,
}

impl PathColor {
    pub const AA: PathColor = PathColor {
        h: SegColor::A,
        v: SegColor::A,
    };
    pub const AB: PathColor = PathColor {
        h: SegColor::A,
        v: SegColor::B,
    };
    pub const BA: PathColor = PathColor {
        h: SegColor::B,
        v: SegColor::A,
    };
    pub const BB: PathColor = PathColor {
        h: SegColor::B,
        v: SegColor::B,
    };

    pub fn is_aa(self) -> bool {
        self == PathColor::AA
    }

    /// Final palette: (a,a) -> 1, (a,b) -> 2, (b,a) -> 3, (b,b) -> 4.
    pub fn final_color(self) -> u8 {
        match (self.h, self.v) {
            (SegColor::A, SegColor::A) => 1,
            (SegColor::A, SegColor::B) => 2,
            (SegColor::B, SegColor::A) => 3,
            (SegColor::B, SegColor::B) => 4,
        }
    }

    pub fn component(self, orientation: Orientation) -> SegColor {
        match orientation {
            Orientation::H => self.h,
            Orientation::V => self.v,
        }
    }

    /// Returns the color with the given component set to `b`.
    pub fn with_b(self, orientation: Orientation) -> PathColor {
        match orientation {
            Orientation::H => PathColor { h: SegColor::B, ..self },
            Orientation::V => PathColor { v: SegColor::B, ..self },
        }
    }

    pub fn pair_code(self) -> &'static str {
        match (self.h, self.v) {
            (SegColor::A, SegColor::A) => "aa",
            (SegColor::A, SegColor::B) => "ab",
            (SegColor::B, SegColor::A) => "ba",
            (SegColor::B, SegColor::B) => "bb",
        }
    }

    pub fn from_pair_code(code: &str) -> Option<PathColor> {
        match code {
            "aa" => Some(PathColor::AA),
            "ab" => Some(PathColor::AB),
            "ba" => Some(PathColor::BA),
            "bb" => Some(PathColor::BB),
            _ => None,
        }
    }
}

/// One segment of a line instance, identified by its owning path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineEntry {
    pub id: PathId,
    pub lo: i64,
    pub hi: i64,
}

/// All segments living on one grid line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInstance {
    pub orientation: Orientation,
    pub line: i64,
    pub entries: Vec<LineEntry>,
}

/// Collects the line instances of a representation: every row that carries a
/// horizontal segment, then every column that carries a vertical one.
pub fn line_instances(repr: &EpgRepresentation) -> Vec<LineInstance> {
    let mut rows: BTreeMap<i64, Vec<LineEntry>> = BTreeMap::new();
    let mut cols: BTreeMap<i64, Vec<LineEntry>> = BTreeMap::new();
    for p in repr.paths() {
        if let Some(s) = p.h_segment() {
            rows.entry(s.line).or_default().push(LineEntry {
                id: p.id,
                lo: s.lo,
                hi: s.hi,
            });
        }
        if let Some(s) = p.v_segment() {
            cols.entry(s.line).or_default().push(LineEntry {
                id: p.id,
                lo: s.lo,
                hi: s.hi,
            });
        }
    }
    let mut out = Vec::with_capacity(rows.len() + cols.len());
    for (line, entries) in rows {
        out.push(LineInstance {
            orientation: Orientation::H,
            line,
            entries,
        });
    }
    for (line, entries) in cols {
        out.push(LineInstance {
            orientation: Orientation::V,
            line,
            entries,
        });
    }
    out
}

/// Perfect elimination ordering of a line: ascending right endpoint, ties by
/// left endpoint, then id. For every position, the later entries overlapping
/// it pairwise overlap.
pub fn peo_order(line: &LineInstance) -> Vec<LineEntry> {
    let mut entries = line.entries.clone();
    entries.sort_unstable_by_key(|e| (e.hi, e.lo, e.id));
    entries
}

/// Two-colors one line along the reversed elimination ordering. The last
/// entry gets `a`; an earlier entry gets `b` iff every already-colored
/// overlapping entry got `a` (vacuously `b` when there is none). The `b`
/// entries end up pairwise disjoint.
pub fn color_line(line: &LineInstance) -> BTreeMap<PathId, SegColor> {
    let order = peo_order(line);
    let mut colors = BTreeMap::new();
    if order.is_empty() {
        return colors;
    }
    let last = order.len() - 1;
    colors.insert(order[last].id, SegColor::A);
    // A later entry overlaps an earlier one iff its lo is below the earlier
    // hi, so tracking the minimum lo among b-colored entries decides the
    // "all colored neighbors got a" test in one comparison.
    let mut min_b_lo = i64::MAX;
    for e in order[..last].iter().rev() {
        let all_a = min_b_lo >= e.hi;
        let color = if all_a { SegColor::B } else { SegColor::A };
        if color == SegColor::B {
            min_b_lo = min_b_lo.min(e.lo);
        }
        colors.insert(e.id, color);
    }
    colors
}

/// The base pair coloring: each path combines its row color and column
/// color; a missing component is fixed to `a`.
pub fn base_coloring(repr: &EpgRepresentation) -> BTreeMap<PathId, PathColor> {
    let mut colors: BTreeMap<PathId, PathColor> =
        repr.ids().map(|id| (id, PathColor::AA)).collect();
    for line in line_instances(repr) {
        let line_colors = color_line(&line);
        for (id, c) in line_colors {
            let entry = colors.get_mut(&id).expect("line entry id belongs to repr");
            match line.orientation {
                Orientation::H => entry.h = c,
                Orientation::V => entry.v = c,
            }
        }
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EpgPath;

    fn line(entries: &[(u64, i64, i64)]) -> LineInstance {
        LineInstance {
            orientation: Orientation::H,
            line: 0,
            entries: entries
                .iter()
                .map(|&(id, lo, hi)| LineEntry {
                    id: PathId(id),
                    lo,
                    hi,
                })
                .collect(),
        }
    }

    fn ids(entries: &[LineEntry]) -> Vec<u64> {
        entries.iter().map(|e| e.id.0).collect()
    }

    #[test]
    fn peo_sorts_by_right_endpoint() {
        let order = peo_order(&line(&[(1, 0, 3), (2, 2, 5), (3, 4, 6)]));
        assert_eq!(ids(&order), vec![1, 2, 3]);
    }

    #[test]
    fn peo_breaks_ties_by_id() {
        let order = peo_order(&line(&[(8, 0, 4), (7, 0, 4)]));
        assert_eq!(ids(&order), vec![7, 8]);
    }

    #[test]
    fn color_line_matches_hand_run() {
        let colors = color_line(&line(&[(1, 0, 3), (2, 2, 5), (3, 4, 6)]));
        assert_eq!(colors[&PathId(3)], SegColor::A);
        assert_eq!(colors[&PathId(2)], SegColor::B);
        assert_eq!(colors[&PathId(1)], SegColor::A);
    }

    #[test]
    fn single_entry_gets_a() {
        let colors = color_line(&line(&[(5, 2, 9)]));
        assert_eq!(colors[&PathId(5)], SegColor::A);
    }

    #[test]
    fn disjoint_entry_gets_vacuous_b() {
        let colors = color_line(&line(&[(1, 0, 1), (2, 2, 3)]));
        assert_eq!(colors[&PathId(2)], SegColor::A);
        assert_eq!(colors[&PathId(1)], SegColor::B);
    }

    #[test]
    fn b_entries_are_pairwise_disjoint() {
        let inst = line(&[
            (1, 0, 4),
            (2, 1, 3),
            (3, 2, 6),
            (4, 5, 9),
            (5, 0, 2),
            (6, 7, 8),
        ]);
        let colors = color_line(&inst);
        let b: Vec<_> = inst
            .entries
            .iter()
            .filter(|e| colors[&e.id] == SegColor::B)
            .collect();
        for (i, x) in b.iter().enumerate() {
            for y in &b[i + 1..] {
                let overlap = x.lo.max(y.lo) < x.hi.min(y.hi);
                assert!(!overlap, "b entries {} and {} overlap", x.id, y.id);
            }
        }
    }

    #[test]
    fn lone_h_path_is_aa() {
        let repr =
            EpgRepresentation::new(None, vec![EpgPath::horizontal(1, 0, 0, 3)]).unwrap();
        let base = base_coloring(&repr);
        assert_eq!(base[&PathId(1)], PathColor::AA);
        assert_eq!(base[&PathId(1)].final_color(), 1);
    }

    #[test]
    fn sun3_base_coloring() {
        let repr = crate::generate::sun3_instance();
        let base = base_coloring(&repr);
        let expect = [
            (1, PathColor::AA),
            (2, PathColor::AA),
            (3, PathColor::BB),
            (4, PathColor::AA),
            (5, PathColor::AA),
            (6, PathColor::BA),
        ];
        for (id, color) in expect {
            assert_eq!(base[&PathId(id)], color, "path {id}");
        }
    }

    #[test]
    fn equal_twins_split_by_id() {
        let repr = EpgRepresentation::new(
            None,
            vec![
                EpgPath::horizontal(1, 0, 2, 6),
                EpgPath::horizontal(2, 0, 2, 6),
            ],
        )
        .unwrap();
        let base = base_coloring(&repr);
        assert_eq!(base[&PathId(1)], PathColor::BA);
        assert_eq!(base[&PathId(2)], PathColor::AA);
    }

    #[test]
    fn final_color_map() {
        assert_eq!(PathColor::AA.final_color(), 1);
        assert_eq!(PathColor::AB.final_color(), 2);
        assert_eq!(PathColor::BA.final_color(), 3);
        assert_eq!(PathColor::BB.final_color(), 4);
        for code in ["aa", "ab", "ba", "bb"] {
            assert_eq!(PathColor::from_pair_code(code).unwrap().pair_code(), code);
        }
    }
}
