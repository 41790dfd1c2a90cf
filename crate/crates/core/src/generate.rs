//! Seeded instance generation and canonical fixtures.
//!
//! The generator is deterministic per seed and uses an in-repo splitmix64,
//! so identical parameters reproduce identical bytes anywhere. The clustered
//! preset piles bends of mixed shapes onto a few attractor points and runs
//! straight paths through them, which is what actually provokes monocolored
//! claw candidates; uniform placement almost never does.

use thiserror::Error;

use crate::model::{EpgPath, EpgRepresentation, GridBounds, GridPoint};

/// splitmix64: public-domain 64-bit generator, stable across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform in `lo..hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo < hi);
        lo + self.below((hi - lo) as u64) as i64
    }

    /// Bernoulli draw from the top 53 bits.
    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) / ((1u64 << 53) as f64) < p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Uniform,
    Clustered,
}

/// Generation parameters. The kind mix must sum to 1.
#[derive(Clone, Debug)]
pub struct GenParams {
    pub paths: usize,
    pub width: i64,
    pub height: i64,
    pub p_h: f64,
    pub p_v: f64,
    pub p_bend: f64,
    pub max_len: i64,
    pub seed: u64,
    pub preset: Preset,
    /// Clustered preset: cap on bends placed per attractor point.
    pub max_bends_per_point: usize,
}

impl GenParams {
    pub fn uniform(paths: usize, width: i64, height: i64, seed: u64) -> Self {
        GenParams {
            paths,
            width,
            height,
            p_h: 0.35,
            p_v: 0.35,
            p_bend: 0.30,
            max_len: 6,
            seed,
            preset: Preset::Uniform,
            max_bends_per_point: 8,
        }
    }

    pub fn clustered(paths: usize, width: i64, height: i64, seed: u64) -> Self {
        GenParams {
            paths,
            width,
            height,
            p_h: 0.27,
            p_v: 0.27,
            p_bend: 0.46,
            max_len: 4,
            seed,
            preset: Preset::Clustered,
            max_bends_per_point: 8,
        }
    }

    /// Scaling-bench instances: clustered bends, grid area proportional to
    /// the path count so edge multiplicities stay bounded as `n` grows.
    pub fn bench(paths: usize, seed: u64) -> Self {
        let side = (((paths as f64).sqrt() * 3.0).ceil() as i64).max(16);
        GenParams::clustered(paths, side, side, seed)
    }
}

#[derive(Debug, Error)]
pub enum GenError {
    #[error("grid {width}x{height} too small to place a path")]
    GridTooSmall { width: i64, height: i64 },
    #[error("kind probabilities sum to {0}, expected 1")]
    BadMix(f64),
    #[error("max segment length must be at least 1, got {0}")]
    BadLength(i64),
}

struct Attractors {
    points: Vec<GridPoint>,
    bend_counts: Vec<usize>,
}

/// Generates a representation with `params.paths` paths, deterministically
/// from the seed. Disconnected outputs are allowed.
pub fn random_instance(params: &GenParams) -> Result<EpgRepresentation, GenError> {
    let mix = params.p_h + params.p_v + params.p_bend;
    if (mix - 1.0).abs() > 1e-9 || params.p_h < 0.0 || params.p_v < 0.0 || params.p_bend < 0.0 {
        return Err(GenError::BadMix(mix));
    }
    if params.max_len < 1 {
        return Err(GenError::BadLength(params.max_len));
    }
    if params.paths > 0 && (params.width < 2 || params.height < 2) {
        return Err(GenError::GridTooSmall {
            width: params.width,
            height: params.height,
        });
    }

    let mut rng = SplitMix64::new(params.seed);
    let mut attractors = None;
    if params.preset == Preset::Clustered && params.width >= 3 && params.height >= 3 {
        // Margin 2 leaves room for length-2 west/south arms, which the color
        // sinks below rely on; fall back to margin 1 on small grids.
        let margin = if params.width >= 7 && params.height >= 7 { 2 } else { 1 };
        // One attractor per ~20 paths keeps per-point multiplicities bounded
        // as instances scale.
        let count = (params.paths / 20).max(1);
        let points = (0..count)
            .map(|_| {
                GridPoint::new(
                    rng.range_i64(margin, params.width - margin),
                    rng.range_i64(margin, params.height - margin),
                )
            })
            .collect::<Vec<_>>();
        attractors = Some(Attractors {
            bend_counts: vec![0; points.len()],
            points,
        });
    }

    let mut paths = Vec::with_capacity(params.paths);
    for i in 0..params.paths {
        let id = i as u64 + 1;
        let roll = ((rng.next_u64() >> 11) as f64) / ((1u64 << 53) as f64);
        let path = if roll < params.p_h {
            gen_straight(&mut rng, params, attractors.as_ref(), id, true)
        } else if roll < params.p_h + params.p_v {
            gen_straight(&mut rng, params, attractors.as_ref(), id, false)
        } else {
            gen_bend(&mut rng, params, attractors.as_mut(), id)
        };
        paths.push(path);
    }

    Ok(EpgRepresentation::new(
        Some(GridBounds {
            width: params.width,
            height: params.height,
        }),
        paths,
    )
    .expect("generated paths are valid by construction"))
}

fn gen_straight(
    rng: &mut SplitMix64,
    params: &GenParams,
    attractors: Option<&Attractors>,
    id: u64,
    horizontal: bool,
) -> EpgPath {
    let extent = if horizontal { params.width } else { params.height };
    let lines = if horizontal { params.height } else { params.width };

    // Clustered straights either run through an attractor, covering the
    // straight pair of its stem triples, or act as color sinks: a short
    // segment ending at the attractor or a long one starting there soaks up
    // color b on the line, which is what lets the arms of the bends at the
    // attractor all come out a.
    if let Some(at) = attractors {
        let role = rng.below(10);
        if role < 8 {
            let a = at.points[rng.below(at.points.len() as u64) as usize];
            let (line, along) = if horizontal { (a.row, a.col) } else { (a.col, a.row) };
            if role < 5 && along >= 1 && along <= extent - 2 {
                // Straight through the attractor.
                let back = 1 + rng.below(params.max_len.min(along) as u64) as i64;
                let fwd = 1 + rng.below(params.max_len.min(extent - 1 - along) as u64) as i64;
                let (lo, hi) = (along - back, along + fwd);
                return if horizontal {
                    EpgPath::horizontal(id, line, lo, hi)
                } else {
                    EpgPath::vertical(id, line, lo, hi)
                };
            }
            if role >= 5 {
                // Sink: outlast every arm on the high side, or undercut the
                // length-2 arms on the low side.
                let (lo, hi) = if rng.chance(0.5) && along <= extent - 2 {
                    (along, along + (params.max_len + 1).min(extent - 1 - along))
                } else if along >= 1 {
                    (along - 1, along)
                } else {
                    (along, along + 1)
                };
                return if horizontal {
                    EpgPath::horizontal(id, line, lo, hi)
                } else {
                    EpgPath::vertical(id, line, lo, hi)
                };
            }
        }
    }

    let len = 1 + rng.below(params.max_len.min(extent - 1) as u64) as i64;
    let line = rng.range_i64(0, lines);
    let lo = rng.range_i64(0, extent - len);
    if horizontal {
        EpgPath::horizontal(id, line, lo, lo + len)
    } else {
        EpgPath::vertical(id, line, lo, lo + len)
    }
}

fn gen_bend(
    rng: &mut SplitMix64,
    params: &GenParams,
    attractors: Option<&mut Attractors>,
    id: u64,
) -> EpgPath {
    // At an attractor, cycle through the four shapes so a saturated point
    // carries all of them; attractors sit off the border, so every arm
    // direction has room.
    if let Some(at) = attractors {
        if rng.chance(0.85) {
            let i = rng.below(at.points.len() as u64) as usize;
            if at.bend_counts[i] < params.max_bends_per_point {
                let turn = at.bend_counts[i];
                at.bend_counts[i] += 1;
                let corner = at.points[i];
                let go_east = turn % 2 == 0;
                let go_north = (turn / 2) % 2 == 0;
                return bend_at_attractor(rng, params, id, corner, go_east, go_north);
            }
        }
    }

    let corner = random_corner(rng, params);
    // Pick arm directions with room; every corner has room on at least one
    // side of each axis because the grid is at least 2x2.
    let east_room = params.width - 1 - corner.col;
    let west_room = corner.col;
    let go_east = if east_room == 0 {
        false
    } else if west_room == 0 {
        true
    } else {
        rng.chance(0.5)
    };
    let north_room = params.height - 1 - corner.row;
    let south_room = corner.row;
    let go_north = if north_room == 0 {
        false
    } else if south_room == 0 {
        true
    } else {
        rng.chance(0.5)
    };
    bend_with_room(rng, params, id, corner, go_east, go_north)
}

/// Attractor bends keep east/north arms one short of the room (so a sink
/// can outlast them) and west/south arms at length two or more (so the
/// length-1 sink sits later in the elimination order).
fn bend_at_attractor(
    rng: &mut SplitMix64,
    params: &GenParams,
    id: u64,
    corner: GridPoint,
    go_east: bool,
    go_north: bool,
) -> EpgPath {
    let high_arm = |rng: &mut SplitMix64, room: i64| -> i64 {
        let cap = params.max_len.min(room - 1).max(1);
        1 + rng.below(cap as u64) as i64
    };
    let low_arm = |rng: &mut SplitMix64, room: i64| -> i64 {
        let cap = params.max_len.min(room);
        if cap >= 2 {
            2 + rng.below(cap as u64 - 1) as i64
        } else {
            1
        }
    };
    let h_len = if go_east {
        high_arm(rng, params.width - 1 - corner.col)
    } else {
        low_arm(rng, corner.col)
    };
    let h_end = if go_east { corner.col + h_len } else { corner.col - h_len };
    let v_len = if go_north {
        high_arm(rng, params.height - 1 - corner.row)
    } else {
        low_arm(rng, corner.row)
    };
    let v_end = if go_north { corner.row + v_len } else { corner.row - v_len };
    EpgPath::bend(id, corner, h_end, v_end)
}

fn bend_with_room(
    rng: &mut SplitMix64,
    params: &GenParams,
    id: u64,
    corner: GridPoint,
    go_east: bool,
    go_north: bool,
) -> EpgPath {
    let h_room = if go_east {
        params.width - 1 - corner.col
    } else {
        corner.col
    };
    let h_len = 1 + rng.below(params.max_len.min(h_room) as u64) as i64;
    let h_end = if go_east { corner.col + h_len } else { corner.col - h_len };

    let v_room = if go_north {
        params.height - 1 - corner.row
    } else {
        corner.row
    };
    let v_len = 1 + rng.below(params.max_len.min(v_room) as u64) as i64;
    let v_end = if go_north { corner.row + v_len } else { corner.row - v_len };

    EpgPath::bend(id, corner, h_end, v_end)
}

fn random_corner(rng: &mut SplitMix64, params: &GenParams) -> GridPoint {
    GridPoint::new(
        rng.range_i64(0, params.width),
        rng.range_i64(0, params.height),
    )
}

/// The six-path fixture whose derived graph is the 3-sun: inner triangle
/// {2,3,5}, outer vertices 1, 4, 6 of degree two.
pub fn sun3_instance() -> EpgRepresentation {
    EpgRepresentation::new(
        None,
        vec![
            EpgPath::vertical(1, 2, 3, 5),
            EpgPath::bend(2, GridPoint::new(2, 2), 0, 4),
            EpgPath::bend(3, GridPoint::new(2, 2), 4, 4),
            EpgPath::horizontal(4, 2, 2, 4),
            EpgPath::horizontal(5, 2, 1, 3),
            EpgPath::horizontal(6, 2, 0, 2),
        ],
    )
    .expect("fixture is valid")
}

/// A representation whose derived graph is the chordless cycle on `n`
/// vertices: consecutive paths overlap in exactly one grid edge.
///
/// Even cycles walk the perimeter of a rectangle, each path taking two
/// consecutive walk edges. Odd cycles use a base row, two posts, and a
/// zig-zag of bends two rows up.
pub fn cycle_instance(n: usize) -> EpgRepresentation {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let paths = match n {
        3 => vec![
            EpgPath::bend(1, GridPoint::new(1, 1), 2, 2), // NE
            EpgPath::bend(2, GridPoint::new(1, 1), 0, 2), // NW
            EpgPath::horizontal(3, 1, 0, 2),
        ],
        n if n % 2 == 0 => {
            let a = (n as i64) / 2 - 1;
            let mut walk: Vec<(GridPoint, GridPoint)> = Vec::with_capacity(n);
            for c in 0..a {
                walk.push((GridPoint::new(c, 0), GridPoint::new(c + 1, 0)));
            }
            walk.push((GridPoint::new(a, 0), GridPoint::new(a, 1)));
            for c in (0..a).rev() {
                walk.push((GridPoint::new(c + 1, 1), GridPoint::new(c, 1)));
            }
            walk.push((GridPoint::new(0, 1), GridPoint::new(0, 0)));
            (0..n)
                .map(|i| path_from_walk_pair(i as u64 + 1, walk[i], walk[(i + 1) % n]))
                .collect()
        }
        _ => {
            let n = n as i64;
            let mut paths = vec![
                EpgPath::horizontal(1, 0, 0, n - 1),
                EpgPath::bend(2, GridPoint::new(1, 0), 0, 2), // NW post
            ];
            for m in 0..n - 3 {
                let id = m as u64 + 3;
                if m % 2 == 0 {
                    // SE zig at column m+1: down to the previous post/zag,
                    // east across two edges.
                    paths.push(EpgPath::bend(id, GridPoint::new(m + 1, 2), m + 3, 1));
                } else {
                    // SW zag at column m+2.
                    paths.push(EpgPath::bend(id, GridPoint::new(m + 2, 2), m + 1, 1));
                }
            }
            paths.push(EpgPath::bend(n as u64, GridPoint::new(n - 2, 0), n - 1, 2)); // NE post
            paths
        }
    };
    EpgRepresentation::new(None, paths).expect("cycle construction is valid")
}

/// Builds the path covering two consecutive edges of a rectilinear walk:
/// straight when collinear, a bend at the shared point otherwise.
fn path_from_walk_pair(
    id: u64,
    (a1, a2): (GridPoint, GridPoint),
    (b1, b2): (GridPoint, GridPoint),
) -> EpgPath {
    debug_assert_eq!(a2, b1, "walk edges must be consecutive");
    let corner = a2;
    if a1.row == b2.row && a1.row == corner.row {
        let (lo, hi) = (a1.col.min(b2.col), a1.col.max(b2.col));
        EpgPath::horizontal(id, corner.row, lo, hi)
    } else if a1.col == b2.col && a1.col == corner.col {
        let (lo, hi) = (a1.row.min(b2.row), a1.row.max(b2.row));
        EpgPath::vertical(id, corner.col, lo, hi)
    } else {
        let (h_end, v_end) = if a1.row == corner.row {
            (a1.col, b2.row)
        } else {
            (b2.col, a1.row)
        };
        EpgPath::bend(id, corner, h_end, v_end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::derive_graph;
    use crate::model::{serialize_representation, PathId};

    #[test]
    fn empty_request_yields_empty_representation() {
        let params = GenParams::uniform(0, 10, 10, 1);
        let r = random_instance(&params).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn same_seed_same_bytes() {
        let params = GenParams::clustered(60, 20, 20, 0xDEADBEEF);
        let a = serialize_representation(&random_instance(&params).unwrap());
        let b = serialize_representation(&random_instance(&params).unwrap());
        assert_eq!(a, b);
        let other = GenParams::clustered(60, 20, 20, 0xDEADBEEF + 1);
        let c = serialize_representation(&random_instance(&other).unwrap());
        assert_ne!(a, c);
    }

    #[test]
    fn generated_instances_validate_and_fit() {
        for seed in 0..20 {
            for params in [
                GenParams::uniform(50, 12, 9, seed),
                GenParams::clustered(50, 12, 9, seed),
            ] {
                let r = random_instance(&params).unwrap();
                assert_eq!(r.len(), 50);
                let text = serialize_representation(&r);
                let back = crate::model::parse_representation(&text).unwrap();
                assert_eq!(back, r);
            }
        }
    }

    #[test]
    fn tiny_grid_is_rejected() {
        let params = GenParams::uniform(3, 1, 9, 0);
        assert!(matches!(
            random_instance(&params),
            Err(GenError::GridTooSmall { .. })
        ));
    }

    #[test]
    fn sun3_is_the_three_sun() {
        let g = derive_graph(&sun3_instance());
        let deg = |id: u64| g.degree(PathId(id));
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        // Inner triangle pairwise adjacent, outer vertices of degree two.
        for (u, v) in [(2, 3), (2, 5), (3, 5)] {
            assert!(g.are_adjacent(PathId(u), PathId(v)));
        }
        assert_eq!((deg(1), deg(4), deg(6)), (2, 2, 2));
        assert_eq!((deg(2), deg(3), deg(5)), (4, 4, 4));
        for (u, v) in [(1, 4), (1, 6), (4, 6)] {
            assert!(!g.are_adjacent(PathId(u), PathId(v)));
        }
    }

    #[test]
    fn cycles_are_chordless() {
        for n in 3..=12 {
            let r = cycle_instance(n);
            let g = derive_graph(&r);
            assert_eq!(g.vertex_count(), n, "C{n} vertex count");
            assert_eq!(g.edge_count(), n, "C{n} edge count");
            for i in 0..n as u64 {
                let u = PathId(i + 1);
                assert_eq!(g.degree(u), 2, "C{n} vertex {u} degree");
                let next = PathId((i + 1) % n as u64 + 1);
                assert!(g.are_adjacent(u, next), "C{n}: {u} ~ {next}");
            }
        }
    }
}
