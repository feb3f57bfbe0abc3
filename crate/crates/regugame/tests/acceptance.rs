//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (visible with `cargo test -- --nocapture`).

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regugame::{
    backward_induction, brute_force_spne, build_third_party_game, classify_equilibrium,
    decision, demo_report, dishonest_expected_payoff, honest_payoff, r_feasibility_bound,
    solve_bimatrix_2x2, spne_thresholds_consumer_model, terminal, third_party_min_penalty,
    Bimatrix2x2, CrossCheck, ExtensiveGame, GameNodeSpec, MarketParams, PenaltyBound, PlayerId,
    Scenario, TieBreak, Value,
};

fn v(n: i64) -> Value {
    Value::from(n)
}

fn vr(n: i64, d: i64) -> Value {
    Value::ratio(n, d)
}

fn within(a: &Value, b: &Value, tolerance_num: i64, tolerance_den: i64) -> bool {
    (a - b).abs() <= Value::ratio(tolerance_num, tolerance_den)
}

#[test]
fn criterion_1_minimum_penalty_table() {
    let started = Instant::now();
    let expected = [
        (vr(1, 5), v(16)),
        (vr(2, 5), v(6)),
        (vr(3, 5), vr(8, 3)),
        (vr(4, 5), v(1)),
        (v(1), v(0)),
    ];
    for (r, want) in &expected {
        let params = MarketParams::baseline().with_audit_prob(r.clone());
        let got = third_party_min_penalty(&params).unwrap();
        assert!(
            within(&got, want, 1, 1_000_000_000),
            "p_min at r = {r:?}: got {got:?}, want {want:?}"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "PASS criterion 1: p_min over r in {{0.2,0.4,0.6,0.8,1.0}} = {{16, 6, 8/3, 1, 0}} \
         within 1e-9 ({elapsed:?})"
    );
}

#[test]
fn criterion_2_honest_dishonest_payoffs_and_incentive_identity() {
    let baseline = MarketParams::baseline();
    assert_eq!(honest_payoff(&baseline), v(5), "honest payoff must be 5");

    let boundary = baseline.clone().with_audit_prob(vr(2, 5)).with_penalty(v(6));
    let dishonest = dishonest_expected_payoff(&boundary);
    assert!(
        within(&dishonest, &v(5), 1, 1_000_000_000_000),
        "dishonest at (r, p) = (0.4, 6) is {dishonest:?}"
    );

    // Honesty minus fraud must equal 4r + rp - 4 at the baseline; both sides
    // are evaluated independently on random samples.
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_817);
    for _ in 0..100 {
        let r = vr(rng.gen_range(1..=1000), 1000);
        let p = vr(rng.gen_range(0..=20_000), 1000);
        let params = baseline
            .clone()
            .with_audit_prob(r.clone())
            .with_penalty(p.clone());
        let lhs = honest_payoff(&params) - dishonest_expected_payoff(&params);
        let rhs = v(4) * &r + &(&r * &p) - v(4);
        assert!(
            within(&lhs, &rhs, 1, 1_000_000_000),
            "incentive gap mismatch at r = {r:?}, p = {p:?}"
        );
        assert_eq!(
            !lhs.is_negative(),
            v(4) * &r + &(&r * &p) >= v(4),
            "deterrence indicator mismatch at r = {r:?}, p = {p:?}"
        );
    }
    println!(
        "PASS criterion 2: honest = 5 exactly, dishonest(0.4, 6) = 5 within 1e-12, \
         and honest - dishonest = 4r + rp - 4 on 100 seeded samples within 1e-9"
    );
}

#[test]
fn criterion_3_feasibility_bound() {
    let region = r_feasibility_bound(&MarketParams::baseline()).unwrap();
    let bound = region.bound.expect("bound defined at the baseline");
    assert!(
        within(&bound, &vr(14, 9), 1, 1_000_000_000_000),
        "bound is {bound:?}"
    );
    assert!(!region.feasible);
    println!("PASS criterion 3: r_bound = 14/9 within 1e-12 and infeasible");
}

#[test]
fn criterion_4_consumer_purchase_condition_and_thresholds() {
    let report = spne_thresholds_consumer_model(&MarketParams::baseline()).unwrap();
    let buy = report
        .conditions
        .iter()
        .find(|c| c.name == "buy")
        .expect("buy condition present");
    assert!(buy.satisfied, "14 > 12 must hold");
    assert_eq!(report.p_min, PenaltyBound::Finite(v(4)));
    assert_eq!(report.m_max, Some(v(6)));
    println!("PASS criterion 4: buy condition 14 > 12 satisfied, p_min = 4, m_max = 6");
}

#[test]
fn criterion_5_bimatrix_mixed_equilibrium() {
    let json = include_str!("../testdata/supplier_retailer.json");
    let game = Bimatrix2x2::from_json(json).unwrap();
    let solution = solve_bimatrix_2x2(&game);
    assert!(solution.pure_nash.is_empty(), "no pure Nash expected");
    let mixed = solution.mixed.expect("mixed equilibrium exists");
    assert!(within(&mixed.row_prob, &vr(17, 43), 1, 1_000_000_000));
    assert!(within(&mixed.col_prob, &vr(4, 11), 1, 1_000_000_000));
    // Three significant figures: 39.5% and 36.4%.
    assert_eq!(mixed.row_prob.decimal_places(4), "0.3953");
    assert_eq!(mixed.col_prob.decimal_places(4), "0.3636");
    assert_eq!((mixed.row_prob.to_f64() * 1000.0).round(), 395.0);
    assert_eq!((mixed.col_prob.to_f64() * 1000.0).round(), 364.0);
    println!(
        "PASS criterion 5: no pure NE; mixed = (17/43, 4/11) within 1e-9, \
         i.e. 39.5% and 36.4% to three significant figures"
    );
}

/// Random game trees for the oracle cross-check: depth at most 4, at most 3
/// actions per decision node, at most 2 chance nodes, integer payoffs in
/// [-5, 5]. Trees whose pure-profile count would dwarf the enumeration are
/// redrawn.
struct TreeSampler {
    rng: ChaCha8Rng,
}

impl TreeSampler {
    fn new(seed: u64) -> Self {
        TreeSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn terminal_node(&mut self) -> GameNodeSpec {
        terminal([
            v(self.rng.gen_range(-5..=5)),
            v(self.rng.gen_range(-5..=5)),
        ])
    }

    fn node(&mut self, depth: usize, chance_budget: &mut u32) -> GameNodeSpec {
        if depth >= 4 {
            return self.terminal_node();
        }
        let stop_probability = [0.0, 0.35, 0.5, 0.65][depth];
        if depth > 0 && self.rng.gen_bool(stop_probability) {
            return self.terminal_node();
        }
        if *chance_budget > 0 && self.rng.gen_bool(0.25) {
            *chance_budget -= 1;
            let branches = self.rng.gen_range(2..=3usize);
            let weights: Vec<i64> = (0..branches).map(|_| self.rng.gen_range(1..=5)).collect();
            let total: i64 = weights.iter().sum();
            let specs: Vec<(String, Value, GameNodeSpec)> = weights
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    (
                        format!("chance{i}"),
                        vr(*w, total),
                        self.node(depth + 1, chance_budget),
                    )
                })
                .collect();
            return regugame::chance(specs);
        }
        let owner = self.rng.gen_range(0..2usize);
        let count = if self.rng.gen_bool(0.15) {
            1
        } else {
            self.rng.gen_range(2..=3usize)
        };
        let actions: Vec<(String, GameNodeSpec)> = (0..count)
            .map(|i| (format!("act{i}"), self.node(depth + 1, chance_budget)))
            .collect();
        decision(owner, actions)
    }

    fn game(&mut self) -> ExtensiveGame {
        loop {
            let mut chance_budget = 2;
            let root = self.node(0, &mut chance_budget);
            let game = ExtensiveGame::new(["P1", "P2"], root);
            let profiles: u128 = game
                .node_ids()
                .map(|id| match game.node(id) {
                    regugame::game::Node::Decision { actions, .. } => actions.len() as u128,
                    _ => 1,
                })
                .product();
            if (1..=2000).contains(&profiles) {
                return game;
            }
        }
    }
}

#[test]
fn criterion_6_solver_oracle_equivalence_on_200_random_trees() {
    let started = Instant::now();
    let mut sampler = TreeSampler::new(42);
    let mut total_profiles = 0usize;
    for index in 0..200 {
        let game = sampler.game();
        let equilibria = brute_force_spne(&game).unwrap();
        total_profiles += equilibria.len();
        let as_set: BTreeSet<_> = equilibria.iter().collect();
        for tie_break in [TieBreak::FirstDeclared, TieBreak::LexicographicLabel] {
            let solution = backward_induction(&game, tie_break).unwrap();
            assert!(
                as_set.contains(solution.chosen()),
                "tree {index}: backward induction profile missing from the brute-force set \
                 under {tie_break:?}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "PASS criterion 6: induction profile contained in the brute-force SPNE set on \
         200 seeded trees ({total_profiles} equilibria total, {elapsed:?})"
    );
}

#[test]
fn criterion_7_threshold_solver_consistency_on_a_20x20_grid() {
    let baseline = MarketParams::baseline();
    let mut boundary_cells = 0;
    let mut checked = 0;
    for k in 1..=20 {
        for p in 0..20 {
            let params = baseline
                .clone()
                .with_audit_prob(vr(k, 20))
                .with_penalty(v(p));
            let classification = classify_equilibrium(&params, Scenario::ThirdParty).unwrap();
            match classification.cross_check {
                CrossCheck::Boundary => boundary_cells += 1,
                CrossCheck::Agrees => checked += 1,
                CrossCheck::Disagrees => panic!(
                    "threshold verdict and solver disagree off-boundary at r = {k}/20, p = {p}"
                ),
            }
        }
    }
    assert!(boundary_cells > 0, "the grid crosses the boundary somewhere");
    println!(
        "PASS criterion 7: verdict matches the solved game on all {checked} non-tie cells \
         ({boundary_cells} boundary cells excluded)"
    );
}

#[test]
fn criterion_8_monotonicity_and_the_penalty_identity() {
    let baseline = MarketParams::baseline();
    let d_minus_a = &baseline.price_conventional - &baseline.price_organic;
    let c = baseline.cost_gap();
    let mut previous: Option<Value> = None;
    for k in 1..=100 {
        let r = vr(k, 100);
        let p_min =
            third_party_min_penalty(&baseline.clone().with_audit_prob(r.clone())).unwrap();
        let identity = &r * &p_min - &(&r * &d_minus_a) - &c;
        assert!(
            within(&identity, &Value::zero(), 1, 1_000_000_000_000),
            "identity residue {identity:?} at r = {k}/100"
        );
        if let Some(prev) = &previous {
            assert!(p_min < *prev, "p_min must strictly decrease at r = {k}/100");
        }
        previous = Some(p_min);
    }
    println!(
        "PASS criterion 8: p_min strictly decreasing and r*p_min - r(d - a) - c = 0 \
         within 1e-12 for r = 0.01..=1.00"
    );
}

#[test]
fn criterion_9_demo_runs_are_byte_identical() {
    let bin = env!("CARGO_BIN_EXE_regugame");
    let run = || {
        Command::new(bin)
            .arg("demo")
            .env_remove("REGUGAME_FORMAT")
            .output()
            .expect("demo runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.status.code(), second.status.code());
    assert_eq!(first.stdout, second.stdout, "demo output must be byte-stable");
    assert!(!first.stdout.is_empty());

    // The library-level report is byte-stable too.
    let a = demo_report(&MarketParams::baseline()).unwrap();
    let b = demo_report(&MarketParams::baseline()).unwrap();
    assert_eq!(a.markdown, b.markdown);
    println!("PASS criterion 9: two consecutive demo runs are byte-identical");
}

/// The acceptance examples lean on the consumer being pinned to "buy"; make
/// sure the pinning helper and the builders stay consistent with the closed
/// forms used above.
#[test]
fn closed_forms_match_the_solved_third_party_game() {
    for k in [1i64, 7, 13, 20] {
        for p in [0i64, 2, 6, 17] {
            let params = MarketParams::baseline()
                .with_audit_prob(vr(k, 20))
                .with_penalty(v(p));
            let game = build_third_party_game(&params).unwrap();
            let buying = game.restrict_actions(PlayerId(1), &["buy"]).unwrap();
            let solution = backward_induction(&buying, TieBreak::FirstDeclared).unwrap();
            let root = buying.root();
            let honest = honest_payoff(&params);
            let dishonest = dishonest_expected_payoff(&params);
            let expected = if honest >= dishonest { &honest } else { &dishonest };
            assert_eq!(&solution.value(root)[0], expected);
        }
    }
}
