//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criteria are checked at pinned thresholds:
//!   1. four colors + valid verification on 1,000 seeded instances in < 60 s
//!   2. color class 4 independent; recolored paths never end on 1 or 4
//!   3. representation enumeration == graph oracle on 500 instances (n <= 60)
//!   4. the six-path sun fixture: one claw clique {2,3,5} + three edge cliques
//!   5. odd cycles need 3 colors (exhaustive), even cycles stay valid
//!   6. zero rule violations; clustered preset fires Cases 1-3 per 1,000
//!   7. empirical near-linear scaling of the coloring pipeline up to 16k
//!   8. plan/apply order independence, byte-identical colorings

use std::collections::BTreeMap;
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use b1epg::graph::derive_graph_with;
use b1epg::recolor::{apply_plan, plan_point, PlanStats, Recoloring};
use b1epg::{
    clique_color, cycle_instance, derive_graph, enumerate_cliques_graph, enumerate_cliques_repr,
    random_instance, sun3_instance, verify_coloring, ClawAnalyzer, CliqueKind, ColoringOutcome,
    Direction, EdgeBuckets, EpgRepresentation, GenParams, GridPoint, PathColor, PathId,
    SplitMix64,
};

/// Serializes the criteria so wall-clock measurements are undisturbed.
fn gate() -> MutexGuard<'static, ()> {
    static GATE: Mutex<()> = Mutex::new(());
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

struct InstanceRun {
    outcome: ColoringOutcome,
    valid: bool,
    class4_independent: bool,
}

struct SuiteRun {
    elapsed: Duration,
    runs: Vec<InstanceRun>,
}

/// 1,000 instances, uniform and clustered, n <= 200 on grids <= 50x50,
/// colored and verified; computed once and shared by criteria 1 and 2.
fn main_suite() -> &'static SuiteRun {
    static SUITE: OnceLock<SuiteRun> = OnceLock::new();
    SUITE.get_or_init(|| {
        let start = Instant::now();
        let mut runs = Vec::with_capacity(1000);
        for i in 0..1000u64 {
            let seed = 0xACCE_0001u64.wrapping_add(i);
            let mut rng = SplitMix64::new(seed);
            let n = 20 + rng.below(181) as usize; // 20..=200
            let side = rng.range_i64(12, 51); // 12..=50
            let params = if i < 500 {
                GenParams::uniform(n, side, side, seed)
            } else {
                GenParams::clustered(n, side, side, seed)
            };
            let repr = random_instance(&params).expect("suite instance");
            let outcome = clique_color(&repr);
            let report = verify_coloring(&repr, &outcome.colors).expect("total coloring");
            runs.push(InstanceRun {
                outcome,
                valid: report.valid,
                class4_independent: report.class4_independent,
            });
        }
        SuiteRun {
            elapsed: start.elapsed(),
            runs,
        }
    })
}

#[test]
fn criterion_1_four_colors_and_valid_on_1000_instances() {
    let _gate = gate();
    let suite = main_suite();
    for (i, run) in suite.runs.iter().enumerate() {
        assert!(
            run.outcome.colors.values().all(|c| (1..=4).contains(c)),
            "instance {i} uses a color outside 1..=4"
        );
        assert!(run.valid, "instance {i} failed verification");
    }
    assert!(
        suite.elapsed < Duration::from_secs(60),
        "suite took {:?}, budget is 60 s",
        suite.elapsed
    );
    println!(
        "criterion 1 (four colors, 100% valid, < 60 s): PASS — 1000 instances in {:.1?}",
        suite.elapsed
    );
}

#[test]
fn criterion_2_class_four_independent_and_rule_one() {
    let _gate = gate();
    let suite = main_suite();
    for (i, run) in suite.runs.iter().enumerate() {
        assert!(run.class4_independent, "instance {i}: class 4 not independent");
        for id in &run.outcome.recolored {
            let c = run.outcome.colors[id];
            assert!(
                c == 2 || c == 3,
                "instance {i}: recolored path {id} has final color {c}"
            );
        }
    }
    let recolored: usize = suite.runs.iter().map(|r| r.outcome.recolored.len()).sum();
    println!(
        "criterion 2 (class 4 independent, recolored colors in {{2,3}}): PASS — {recolored} recolorings checked"
    );
}

#[test]
fn criterion_3_oracle_equivalence_on_500_small_instances() {
    let _gate = gate();
    let mut cliques_seen = 0usize;
    for i in 0..500u64 {
        let seed = 0xACCE_0002u64.wrapping_add(i);
        let mut rng = SplitMix64::new(seed);
        let n = 5 + rng.below(56) as usize; // 5..=60
        let side = rng.range_i64(8, 31);
        let params = if i % 2 == 0 {
            GenParams::clustered(n, side, side, seed)
        } else {
            GenParams::uniform(n, side, side, seed)
        };
        let repr = random_instance(&params).expect("instance");
        let graph = derive_graph(&repr);
        let from_repr: Vec<Vec<PathId>> = enumerate_cliques_repr(&repr, &graph)
            .into_iter()
            .map(|c| c.members)
            .collect();
        let oracle = enumerate_cliques_graph(&graph, 200).expect("within bound");
        assert_eq!(from_repr, oracle, "instance {i}: clique families differ");
        cliques_seen += oracle.len();
    }
    println!(
        "criterion 3 (representation vs oracle clique enumeration): PASS — 500 instances, {cliques_seen} cliques, 0 discrepancies"
    );
}

#[test]
fn criterion_4_sun_fixture_cliques() {
    let _gate = gate();
    let repr = sun3_instance();
    let graph = derive_graph(&repr);
    let cliques = enumerate_cliques_repr(&repr, &graph);
    assert_eq!(cliques.len(), 4, "expected exactly 4 maximal cliques");
    let expect: Vec<(Vec<u64>, bool)> = vec![
        (vec![1, 2, 3], false),
        (vec![2, 3, 5], true),
        (vec![2, 5, 6], false),
        (vec![3, 4, 5], false),
    ];
    for (clique, (members, is_claw)) in cliques.iter().zip(&expect) {
        let got: Vec<u64> = clique.members.iter().map(|id| id.0).collect();
        assert_eq!(&got, members);
        assert_eq!(
            matches!(clique.kind, CliqueKind::Claw(_)),
            *is_claw,
            "clique {members:?} kind mismatch"
        );
    }
    println!(
        "criterion 4 (sun fixture: {{2,3,5}} claw, three edge cliques): PASS — 4 cliques classified"
    );
}

fn exhaustive_two_coloring_exists(repr: &EpgRepresentation) -> bool {
    let graph = derive_graph(repr);
    let cliques = enumerate_cliques_graph(&graph, 64).expect("small cycle");
    let ids: Vec<PathId> = repr.ids().collect();
    (0..(1u64 << ids.len())).any(|mask| {
        let color = |id: PathId| (mask >> ids.iter().position(|&x| x == id).unwrap()) & 1;
        cliques
            .iter()
            .all(|c| c.iter().any(|&v| color(v) != color(c[0])))
    })
}

#[test]
fn criterion_5_odd_cycles_need_three_colors() {
    let _gate = gate();
    for n in [5usize, 7] {
        let repr = cycle_instance(n);
        assert!(
            !exhaustive_two_coloring_exists(&repr),
            "C{n} should not be 2-clique-colorable"
        );
        let outcome = clique_color(&repr);
        let report = verify_coloring(&repr, &outcome.colors).unwrap();
        assert!(report.valid, "pipeline coloring of C{n} invalid");
        let distinct: std::collections::BTreeSet<u8> =
            outcome.colors.values().copied().collect();
        assert!(
            distinct.len() >= 3,
            "C{n} pipeline used {} colors",
            distinct.len()
        );
    }
    for n in [4usize, 6] {
        let repr = cycle_instance(n);
        assert!(exhaustive_two_coloring_exists(&repr), "C{n} is 2-colorable");
        let outcome = clique_color(&repr);
        let report = verify_coloring(&repr, &outcome.colors).unwrap();
        assert!(report.valid, "pipeline coloring of C{n} invalid");
    }
    println!(
        "criterion 5 (C5/C7 need 3 colors by exhaustion, C4/C6 valid): PASS — 4 cycles checked"
    );
}

#[test]
fn criterion_6_rules_hold_and_clustered_fires_all_cases() {
    let _gate = gate();
    // Rule violations panic inside plan_point, so completing the suite with
    // non-zero check counts is the zero-violation evidence.
    let mut total = PlanStats::default();
    for i in 0..1000u64 {
        let seed = 0xACCE_0006u64.wrapping_add(i);
        let mut rng = SplitMix64::new(seed);
        let n = 20 + rng.below(181) as usize;
        let side = rng.range_i64(12, 51);
        let params = GenParams::clustered(n, side, side, seed);
        let repr = random_instance(&params).expect("instance");
        let outcome = clique_color(&repr);
        total.merge(&outcome.stats);
    }
    assert!(total.rule_checks > 0, "no planned points at all");
    assert!(total.case1 >= 1, "Case 1 never fired in 1000 instances");
    assert!(total.case2 >= 1, "Case 2 never fired in 1000 instances");
    assert!(total.case3 >= 1, "Case 3 never fired in 1000 instances");
    assert_eq!(total.exact_fallbacks, 0, "exact detector fallback fired");
    println!(
        "criterion 6 (rules I-IV, case coverage): PASS — case1={} case2={} case3={} rule_checks={} violations=0",
        total.case1, total.case2, total.case3, total.rule_checks
    );
}

#[test]
fn criterion_7_empirical_scaling() {
    let _gate = gate();
    let sizes = [1_000usize, 2_000, 4_000, 8_000, 16_000];
    let instances: Vec<EpgRepresentation> = sizes
        .iter()
        .map(|&n| random_instance(&GenParams::bench(n, 0xBE_0007)).expect("bench instance"))
        .collect();
    for repr in &instances {
        std::hint::black_box(clique_color(repr)); // warm caches and allocator
    }
    // Single-threaded, best of seven; repetitions are interleaved across
    // sizes so transient machine noise cannot camp on one of them.
    let mut times = vec![f64::INFINITY; sizes.len()];
    for _rep in 0..7 {
        for (i, repr) in instances.iter().enumerate() {
            let start = Instant::now();
            let outcome = clique_color(repr);
            let secs = start.elapsed().as_secs_f64();
            std::hint::black_box(&outcome);
            times[i] = times[i].min(secs);
        }
    }
    let mut ratios = Vec::new();
    for w in times.windows(2) {
        let ratio = w[1] / w[0];
        ratios.push(ratio);
        assert!(
            ratio <= 2.5,
            "doubling ratio {ratio:.2} exceeds 2.5 (times: {times:?})"
        );
    }
    let t16k = *times.last().unwrap();
    assert!(t16k < 5.0, "16k paths took {t16k:.2} s, budget is 5 s");
    println!(
        "criterion 7 (scaling <= 2.5x per doubling, 16k < 5 s): PASS — times {} ms, ratios {}",
        times
            .iter()
            .map(|t| format!("{:.1}", t * 1e3))
            .collect::<Vec<_>>()
            .join("/"),
        ratios
            .iter()
            .map(|r| format!("{r:.2}"))
            .collect::<Vec<_>>()
            .join("/")
    );
}

/// Plans points in the given order and applies in that same order.
fn color_with_point_order(
    repr: &EpgRepresentation,
    reverse: bool,
) -> (BTreeMap<PathId, PathColor>, Vec<Recoloring>) {
    let buckets = EdgeBuckets::build(repr);
    let graph = derive_graph_with(repr, &buckets);
    let an = ClawAnalyzer::new(repr, &buckets);
    let base = b1epg::base_coloring(repr);
    let lookup = |id: PathId| base[&id];
    let mut points: Vec<GridPoint> = an.bend_points().collect();
    if reverse {
        points.reverse();
    }
    let mut stats = PlanStats::default();
    let mut plan: Vec<Recoloring> = Vec::new();
    for x in points {
        let hot: Vec<Direction> = an.hot_stems(x, &lookup);
        if hot.is_empty() {
            continue;
        }
        plan.extend(plan_point(&an, &graph, x, &base, &hot, &mut stats));
    }
    (apply_plan(&base, &plan), plan)
}

#[test]
fn criterion_8_point_order_independence() {
    let _gate = gate();
    let mut nonempty = 0;
    for i in 0..100u64 {
        let seed = 0xACCE_0008u64.wrapping_add(i);
        let mut rng = SplitMix64::new(seed);
        let n = 20 + rng.below(181) as usize;
        let side = rng.range_i64(12, 51);
        let repr =
            random_instance(&GenParams::clustered(n, side, side, seed)).expect("instance");
        let (forward, plan_fwd) = color_with_point_order(&repr, false);
        let (backward, plan_bwd) = color_with_point_order(&repr, true);
        assert_eq!(forward, backward, "instance {i}: colorings differ");
        if !plan_fwd.is_empty() {
            nonempty += 1;
        }
        // Same plan as a set, reversed as a sequence.
        let mut fwd_sorted: Vec<_> = plan_fwd.iter().map(|r| (r.id, r.color)).collect();
        let mut bwd_sorted: Vec<_> = plan_bwd.iter().map(|r| (r.id, r.color)).collect();
        fwd_sorted.sort_by_key(|&(id, _)| id);
        bwd_sorted.sort_by_key(|&(id, _)| id);
        assert_eq!(fwd_sorted, bwd_sorted);

        // Byte-identical serialized colorings.
        let json = |pairs: &BTreeMap<PathId, PathColor>, plan: &[Recoloring]| {
            let mut recolored: Vec<PathId> = plan.iter().map(|r| r.id).collect();
            recolored.sort_unstable();
            ColoringOutcome {
                colors: pairs.iter().map(|(&id, c)| (id, c.final_color())).collect(),
                pairs: pairs.clone(),
                recolored,
                stats: PlanStats::default(),
            }
            .to_json()
        };
        assert_eq!(
            json(&forward, &plan_fwd),
            json(&backward, &plan_bwd),
            "instance {i}: serialized colorings differ"
        );
    }
    assert!(nonempty >= 20, "only {nonempty} instances exercised recoloring");
    println!(
        "criterion 8 (point order independence): PASS — 100 instances, {nonempty} with non-empty plans, byte-identical"
    );
}
