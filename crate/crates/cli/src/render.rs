//! Static SVG rendering of an instance, optionally tinted by a coloring.
//!
//! Overlapping segments on one line are offset into lanes so every path
//! stays visible; exactly one polyline is emitted per path, plus a dot per
//! bend point.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use b1epg::{EpgRepresentation, Orientation, PathId, Segment};

const CELL: f64 = 40.0;
const MARGIN: f64 = 30.0;
const LANE_STEP: f64 = 4.0;
const LANES: i64 = 5;

/// Final palette for colors 1..=4.
const PALETTE: [&str; 4] = ["#1f77b4", "#2ca02c", "#d62728", "#9467bd"];

pub fn render_svg(repr: &EpgRepresentation, coloring: Option<&BTreeMap<PathId, u8>>) -> String {
    let bounds = repr.bounding_box();
    let (cols, rows) = (bounds.width.max(2), bounds.height.max(2));
    let width = MARGIN * 2.0 + (cols - 1) as f64 * CELL;
    let height = MARGIN * 2.0 + (rows - 1) as f64 * CELL;

    // Rows grow north but SVG y grows down.
    let sx = |col: i64| MARGIN + col as f64 * CELL;
    let sy = |row: i64| height - (MARGIN + row as f64 * CELL);

    let lanes = assign_lanes(repr);
    let lane_shift = |id: PathId, seg: &Segment| -> f64 {
        let lane = lanes.get(&(id, seg.orientation)).copied().unwrap_or(0);
        (lane % LANES) as f64 * LANE_STEP
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(svg, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for c in 0..cols {
        let x = sx(c);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.1}" y1="{:.1}" x2="{x:.1}" y2="{:.1}"/>"#,
            sy(rows - 1),
            sy(0)
        );
    }
    for r in 0..rows {
        let y = sy(r);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}"/>"#,
            sx(0),
            sx(cols - 1)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke-width="3.5" stroke-linecap="round" stroke-opacity="0.85">"#
    );
    for p in repr.paths() {
        let stroke = coloring
            .and_then(|c| c.get(&p.id))
            .and_then(|&c| PALETTE.get(c as usize - 1).copied())
            .unwrap_or("#555555");
        let points: Vec<(f64, f64)> = match (p.h_segment(), p.v_segment(), p.bend_point()) {
            (Some(h), None, None) => {
                let y = sy(h.line) - lane_shift(p.id, &h);
                vec![(sx(h.lo), y), (sx(h.hi), y)]
            }
            (None, Some(v), None) => {
                let x = sx(v.line) + lane_shift(p.id, &v);
                vec![(x, sy(v.lo)), (x, sy(v.hi))]
            }
            (Some(h), Some(v), Some(corner)) => {
                let y = sy(h.line) - lane_shift(p.id, &h);
                let x = sx(v.line) + lane_shift(p.id, &v);
                let h_far = if h.lo == corner.col { h.hi } else { h.lo };
                let v_far = if v.lo == corner.row { v.hi } else { v.lo };
                vec![(sx(h_far), y), (x, y), (x, sy(v_far))]
            }
            _ => unreachable!("path is straight or bent"),
        };
        let coords = points
            .iter()
            .map(|(x, y)| format!("{x:.1},{y:.1}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            svg,
            r#"<polyline points="{coords}" stroke="{stroke}"><title>path {}</title></polyline>"#,
            p.id
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r##"<g fill="#222222">"##);
    for p in repr.paths() {
        if let Some(corner) = p.bend_point() {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.1}" cy="{:.1}" r="2.5"/>"#,
                sx(corner.col),
                sy(corner.row)
            );
        }
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}

type LineEntries = BTreeMap<(Orientation, i64), Vec<(i64, i64, PathId)>>;

/// First-fit interval lanes per grid line, keyed by (path, orientation).
fn assign_lanes(repr: &EpgRepresentation) -> BTreeMap<(PathId, Orientation), i64> {
    let mut per_line: LineEntries = BTreeMap::new();
    for p in repr.paths() {
        for seg in p.segments() {
            per_line
                .entry((seg.orientation, seg.line))
                .or_default()
                .push((seg.lo, seg.hi, p.id));
        }
    }
    let mut lanes = BTreeMap::new();
    for ((orientation, _line), mut entries) in per_line {
        entries.sort_unstable();
        let mut lane_ends: Vec<i64> = Vec::new();
        for (lo, hi, id) in entries {
            let lane = lane_ends
                .iter()
                .position(|&end| end <= lo)
                .unwrap_or_else(|| {
                    lane_ends.push(i64::MIN);
                    lane_ends.len() - 1
                });
            lane_ends[lane] = hi;
            lanes.insert((id, orientation), lane as i64);
        }
    }
    lanes
}

#[cfg(test)]
mod tests {
    use super::*;
    use b1epg::sun3_instance;

    /// Minimal well-formedness scan for the XML subset we emit: tags
    /// balance, attributes stay quoted, no stray `<` or `&`.
    fn assert_well_formed_xml(text: &str) {
        let mut stack: Vec<String> = Vec::new();
        let mut rest = text;
        while let Some(start) = rest.find('<') {
            let before = &rest[..start];
            assert!(!before.contains('&'), "unescaped ampersand");
            let end = rest[start..].find('>').expect("unclosed tag") + start;
            let tag = &rest[start + 1..end];
            rest = &rest[end + 1..];
            if let Some(name) = tag.strip_prefix('/') {
                let open = stack.pop().expect("close without open");
                assert_eq!(open, name.trim(), "mismatched close tag");
            } else if !tag.ends_with('/') && !tag.starts_with('?') && !tag.starts_with('!') {
                let name = tag.split_whitespace().next().unwrap().to_string();
                assert_eq!(tag.matches('"').count() % 2, 0, "unbalanced quotes in <{tag}>");
                stack.push(name);
            }
        }
        assert!(stack.is_empty(), "unclosed tags: {stack:?}");
        assert!(!rest.contains('>'), "stray closing bracket");
    }

    #[test]
    fn svg_is_well_formed_with_one_polyline_per_path() {
        let repr = sun3_instance();
        let svg = render_svg(&repr, None);
        assert_well_formed_xml(&svg);
        assert_eq!(svg.matches("<polyline").count(), repr.len());
        assert_eq!(svg.matches("<circle").count(), 2); // two bend paths
    }

    #[test]
    fn svg_uses_palette_when_coloring_given() {
        let repr = sun3_instance();
        let coloring = b1epg::clique_color(&repr).colors;
        let svg = render_svg(&repr, Some(&coloring));
        assert_well_formed_xml(&svg);
        assert!(svg.contains(PALETTE[0]));
        assert!(svg.contains(PALETTE[3])); // path 3 is color 4
    }

    #[test]
    fn overlapping_paths_get_distinct_lanes() {
        let repr = b1epg::EpgRepresentation::new(
            None,
            vec![
                b1epg::EpgPath::horizontal(1, 0, 0, 4),
                b1epg::EpgPath::horizontal(2, 0, 1, 5),
            ],
        )
        .unwrap();
        let lanes = assign_lanes(&repr);
        assert_ne!(
            lanes[&(PathId(1), Orientation::H)],
            lanes[&(PathId(2), Orientation::H)]
        );
    }
}
