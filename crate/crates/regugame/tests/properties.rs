//! Property tests for the solver and threshold invariants: affine payoff
//! invariance, tie-break independence, chance-node linearity, oracle
//! containment on random trees, mixed-equilibrium indifference, and currency
//! scale invariance.

use proptest::prelude::*;

use regugame::game::Node;
use regugame::{
    backward_induction, brute_force_spne, chance, classify_equilibrium, decision,
    dishonest_expected_payoff, honest_payoff, solve_bimatrix_2x2, terminal,
    third_party_min_penalty, Bimatrix2x2, CrossCheck, ExtensiveGame, GameNodeSpec, MarketParams,
    Scenario, TieBreak, Value, Verdict,
};

fn v(n: i64) -> Value {
    Value::from(n)
}

fn leaf_strategy() -> impl Strategy<Value = GameNodeSpec> {
    (-5i64..=5, -5i64..=5).prop_map(|(a, b)| terminal([v(a), v(b)]))
}

fn node_strategy() -> impl Strategy<Value = GameNodeSpec> {
    leaf_strategy().prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            3 => (0usize..2, prop::collection::vec(inner.clone(), 1..=3)).prop_map(
                |(owner, children)| {
                    decision(
                        owner,
                        children
                            .into_iter()
                            .enumerate()
                            .map(|(i, child)| (format!("act{i}"), child)),
                    )
                }
            ),
            1 => prop::collection::vec((1i64..=5, inner), 2..=3).prop_map(|branches| {
                let total: i64 = branches.iter().map(|(w, _)| *w).sum();
                chance(
                    branches
                        .into_iter()
                        .enumerate()
                        .map(|(i, (w, child))| (format!("draw{i}"), Value::ratio(w, total), child)),
                )
            }),
        ]
    })
}

fn game_strategy() -> impl Strategy<Value = ExtensiveGame> {
    node_strategy().prop_map(|root| ExtensiveGame::new(["P1", "P2"], root))
}

fn profile_count(game: &ExtensiveGame) -> u128 {
    game.node_ids()
        .map(|id| match game.node(id) {
            Node::Decision { actions, .. } => actions.len() as u128,
            _ => 1,
        })
        .product()
}

/// Applies `u_i -> scale * u_i + shift_i` to every terminal payoff.
fn affine_transform(spec: GameNodeSpec, scale: &Value, shifts: &[Value; 2]) -> GameNodeSpec {
    match spec {
        GameNodeSpec::Terminal { payoff } => terminal(
            payoff
                .into_iter()
                .zip(shifts)
                .map(|(u, k)| scale * &u + k)
                .collect::<Vec<_>>(),
        ),
        GameNodeSpec::Decision { owner, actions } => decision(
            owner,
            actions
                .into_iter()
                .map(|a| (a.label, affine_transform(a.child, scale, shifts))),
        ),
        GameNodeSpec::Chance { branches } => chance(branches.into_iter().map(|b| {
            (
                b.label,
                b.prob,
                affine_transform(b.child, scale, shifts),
            )
        })),
    }
}

proptest! {
    #[test]
    fn edges_count_and_outcome_bijection(game in game_strategy()) {
        let edges: usize = game.node_ids().map(|id| game.node(id).children().len()).sum();
        prop_assert_eq!(edges, game.len() - 1);

        let outcomes = game.terminal_outcomes().unwrap();
        let terminals = game
            .node_ids()
            .filter(|id| game.node(*id).is_terminal())
            .count();
        prop_assert_eq!(outcomes.len(), terminals);
        let mut nodes: Vec<_> = outcomes.iter().map(|o| o.node).collect();
        nodes.dedup();
        prop_assert_eq!(nodes.len(), terminals, "every terminal appears exactly once");
    }

    #[test]
    fn json_round_trip(game in game_strategy()) {
        let json = game.to_json().unwrap();
        let back = ExtensiveGame::from_json(&json).unwrap();
        prop_assert_eq!(back, game);
    }

    #[test]
    fn induction_profile_is_subgame_perfect(game in game_strategy()) {
        prop_assume!(profile_count(&game) <= 512);
        let equilibria = brute_force_spne(&game).unwrap();
        for tie_break in [TieBreak::FirstDeclared, TieBreak::LexicographicLabel] {
            let solution = backward_induction(&game, tie_break).unwrap();
            prop_assert!(equilibria.contains(solution.chosen()));
        }
    }

    #[test]
    fn tie_free_games_solve_identically_under_either_tie_break(game in game_strategy()) {
        let first = backward_induction(&game, TieBreak::FirstDeclared).unwrap();
        if first.tie_log().is_empty() {
            let lex = backward_induction(&game, TieBreak::LexicographicLabel).unwrap();
            prop_assert_eq!(first, lex);
        }
    }

    #[test]
    fn decision_values_are_the_movers_maximum(game in game_strategy()) {
        let solution = backward_induction(&game, TieBreak::FirstDeclared).unwrap();
        for id in game.node_ids() {
            if let Node::Decision { owner, actions } = game.node(id) {
                let best = actions
                    .iter()
                    .map(|a| &solution.value(a.child)[owner.0])
                    .max()
                    .unwrap();
                prop_assert_eq!(&solution.value(id)[owner.0], best);
                let chosen = solution.chosen_at(id).unwrap();
                let chosen_child = actions.iter().find(|a| a.label == chosen).unwrap().child;
                prop_assert_eq!(solution.value(id), solution.value(chosen_child));
            }
        }
    }

    #[test]
    fn affine_payoff_transforms_map_the_solution(
        root in node_strategy(),
        scale_num in 1i64..=5,
        shift_a in -3i64..=3,
        shift_b in -3i64..=3,
    ) {
        let scale = Value::ratio(scale_num, 2);
        let shifts = [v(shift_a), v(shift_b)];
        let game = ExtensiveGame::new(["P1", "P2"], root.clone());
        let transformed = ExtensiveGame::new(
            ["P1", "P2"],
            affine_transform(root, &scale, &shifts),
        );
        let original = backward_induction(&game, TieBreak::FirstDeclared).unwrap();
        let mapped = backward_induction(&transformed, TieBreak::FirstDeclared).unwrap();
        // Positive scaling and shifts create or destroy no ties.
        prop_assert_eq!(original.tie_log(), mapped.tie_log());
        prop_assert_eq!(original.chosen(), mapped.chosen());
        for id in game.node_ids() {
            for (player, shift) in shifts.iter().enumerate() {
                let expected = &scale * &original.value(id)[player] + shift;
                prop_assert_eq!(&mapped.value(id)[player], &expected);
            }
        }
    }

    #[test]
    fn root_value_is_linear_in_a_chance_probability(
        left in node_strategy(),
        right in node_strategy(),
    ) {
        let value_at = |num: i64, den: i64| {
            let game = ExtensiveGame::new(
                ["P1", "P2"],
                chance([
                    ("left", Value::ratio(num, den), left.clone()),
                    ("right", Value::ratio(den - num, den), right.clone()),
                ]),
            );
            backward_induction(&game, TieBreak::FirstDeclared)
                .unwrap()
                .root_value()
                .to_vec()
        };
        let at_zero = value_at(0, 4);
        let at_half = value_at(2, 4);
        let at_one = value_at(4, 4);
        for player in 0..2 {
            let interpolated = (&at_zero[player] + &at_one[player]) / v(2);
            prop_assert_eq!(&at_half[player], &interpolated);
        }
    }
}

fn bimatrix_strategy() -> impl Strategy<Value = Bimatrix2x2> {
    prop::collection::vec(-20i64..=20, 8).prop_map(|cells| Bimatrix2x2 {
        row_player: "Row".to_string(),
        col_player: "Col".to_string(),
        row_actions: ["r0".to_string(), "r1".to_string()],
        col_actions: ["c0".to_string(), "c1".to_string()],
        payoffs: [
            [
                (v(cells[0]), v(cells[1])),
                (v(cells[2]), v(cells[3])),
            ],
            [
                (v(cells[4]), v(cells[5])),
                (v(cells[6]), v(cells[7])),
            ],
        ],
    })
}

proptest! {
    #[test]
    fn mixed_equilibrium_equalizes_both_players(game in bimatrix_strategy()) {
        let solution = solve_bimatrix_2x2(&game);
        if let Some(mixed) = solution.mixed {
            prop_assert!(!mixed.row_prob.is_negative() && mixed.row_prob <= Value::one());
            prop_assert!(!mixed.col_prob.is_negative() && mixed.col_prob <= Value::one());
            let q = &mixed.row_prob;
            let not_q = Value::one() - q;
            let col_first = q * &game.payoffs[0][0].1 + &(&not_q * &game.payoffs[1][0].1);
            let col_second = q * &game.payoffs[0][1].1 + &(&not_q * &game.payoffs[1][1].1);
            prop_assert_eq!(col_first, col_second, "column player indifferent");
            let m = &mixed.col_prob;
            let not_m = Value::one() - m;
            let row_first = m * &game.payoffs[0][0].0 + &(&not_m * &game.payoffs[0][1].0);
            let row_second = m * &game.payoffs[1][0].0 + &(&not_m * &game.payoffs[1][1].0);
            prop_assert_eq!(row_first, row_second, "row player indifferent");
        }
    }

    #[test]
    fn pure_equilibria_admit_no_profitable_deviation(game in bimatrix_strategy()) {
        let solution = solve_bimatrix_2x2(&game);
        for i in 0..2usize {
            for j in 0..2usize {
                let stable = game.payoffs[i][j].0 >= game.payoffs[1 - i][j].0
                    && game.payoffs[i][j].1 >= game.payoffs[i][1 - j].1;
                prop_assert_eq!(solution.pure_nash.contains(&(i, j)), stable);
            }
        }
    }

    #[test]
    fn mixed_probabilities_survive_affine_payoff_maps(
        game in bimatrix_strategy(),
        scale_num in 1i64..=5,
        row_shift in -4i64..=4,
        col_shift in -4i64..=4,
    ) {
        let scale = Value::ratio(scale_num, 2);
        let mut mapped = game.clone();
        for row in mapped.payoffs.iter_mut() {
            for cell in row.iter_mut() {
                cell.0 = &scale * &cell.0 + &v(row_shift);
                cell.1 = &scale * &cell.1 + &v(col_shift);
            }
        }
        let original = solve_bimatrix_2x2(&game);
        let transformed = solve_bimatrix_2x2(&mapped);
        prop_assert_eq!(original.degenerate, transformed.degenerate);
        prop_assert_eq!(&original.pure_nash, &transformed.pure_nash);
        match (original.mixed, transformed.mixed) {
            (Some(a), Some(b)) => {
                prop_assert_eq!(a.row_prob, b.row_prob);
                prop_assert_eq!(a.col_prob, b.col_prob);
            }
            (None, None) => {}
            (a, b) => prop_assert!(false, "mixed presence changed: {a:?} vs {b:?}"),
        }
    }
}

fn params_strategy() -> impl Strategy<Value = MarketParams> {
    (
        0i64..=40,  // price gap a - d
        1i64..=30,  // conventional price d
        1i64..=20,  // cost gap c
        0i64..=15,  // conventional cost K_c
        0i64..=25,  // utility gap s - f
        0i64..=30,  // conventional utility f
        0i64..=10,  // monitoring cost m
        0i64..=40,  // penalty p
        0i64..=10,  // reputational loss t
        0i64..=20,  // audit probability numerator over 20
    )
        .prop_map(
            |(price_gap, d, c, k_c, utility_gap, f, m, p, t, r_num)| MarketParams {
                price_organic: v(d + price_gap),
                price_conventional: v(d),
                cost_organic: v(k_c + c),
                cost_conventional: v(k_c),
                utility_organic: v(f + utility_gap),
                utility_conventional: v(f),
                monitor_cost: v(m),
                penalty: v(p),
                reputation_loss: v(t),
                audit_prob: Value::ratio(r_num, 20),
            },
        )
}

proptest! {
    #[test]
    fn generated_params_are_valid(params in params_strategy()) {
        prop_assert!(params.validate().is_ok());
    }

    #[test]
    fn penalty_floor_identity_or_active_clamp(params in params_strategy()) {
        prop_assume!(!params.audit_prob.is_zero());
        let p_min = third_party_min_penalty(&params).unwrap();
        let r = &params.audit_prob;
        let d_minus_a = &params.price_conventional - &params.price_organic;
        let c = params.cost_gap();
        let unclamped = &d_minus_a + &(&c / r);
        if unclamped.is_negative() {
            prop_assert_eq!(p_min, Value::zero());
        } else {
            prop_assert_eq!(&p_min, &unclamped);
            prop_assert_eq!(r * &p_min, r * &d_minus_a + &c);
        }
    }

    #[test]
    fn deterrence_boundary_matches_the_payoff_comparison(params in params_strategy()) {
        prop_assume!(!params.audit_prob.is_zero());
        let p_min = third_party_min_penalty(&params).unwrap();
        let honest = honest_payoff(&params);
        let dishonest = dishonest_expected_payoff(&params);
        // The closed form deters exactly where the payoff comparison says so,
        // except inside the clamp where fraud is already unprofitable.
        prop_assert_eq!(params.penalty >= p_min, honest >= dishonest);
    }

    #[test]
    fn currency_scaling_preserves_structure(
        params in params_strategy(),
        scale_num in 1i64..=6,
    ) {
        let factor = Value::ratio(scale_num, 2);
        let scaled = params.scale_currency(&factor);
        prop_assert!(scaled.validate().is_ok());
        prop_assert_eq!(
            honest_payoff(&scaled),
            &factor * &honest_payoff(&params)
        );
        prop_assert_eq!(
            dishonest_expected_payoff(&scaled),
            &factor * &dishonest_expected_payoff(&params)
        );
        if !params.audit_prob.is_zero() {
            prop_assert_eq!(
                third_party_min_penalty(&scaled).unwrap(),
                &factor * &third_party_min_penalty(&params).unwrap()
            );
        }
        let base_region = regugame::r_feasibility_bound(&params).unwrap();
        let scaled_region = regugame::r_feasibility_bound(&scaled).unwrap();
        prop_assert_eq!(base_region.bound, scaled_region.bound);
        prop_assert_eq!(base_region.feasible, scaled_region.feasible);
    }

    #[test]
    fn third_party_classification_never_disagrees_off_boundary(params in params_strategy()) {
        let classification = classify_equilibrium(&params, Scenario::ThirdParty).unwrap();
        let buys = params.utility_organic > params.price_organic;
        if buys {
            prop_assert_ne!(classification.cross_check, CrossCheck::Disagrees);
        } else {
            prop_assert_ne!(classification.report.verdict, Verdict::HonestTrade);
        }
    }
}
