//! Cross-check backward induction against exhaustive enumeration: list every
//! subgame-perfect pure profile of a small game and confirm the induction
//! pass lands inside the set under both tie-breaks.
//!
//! ```bash
//! cargo run -p regugame --example oracle_cross_check
//! ```

use regugame::{
    backward_induction, brute_force_spne, build_third_party_game, MarketParams, TieBreak, Value,
};

fn main() {
    // Certain audits with a zero penalty leave the producer exactly
    // indifferent, so the game has several subgame-perfect profiles.
    let params = MarketParams::baseline().with_audit_prob(Value::one());
    let game = build_third_party_game(&params).unwrap();

    let equilibria = brute_force_spne(&game).unwrap();
    println!("{} subgame-perfect pure profile(s):", equilibria.len());
    for profile in &equilibria {
        let actions: Vec<String> = profile
            .iter()
            .map(|(node, action)| format!("{node}:{action}"))
            .collect();
        println!("  {}", actions.join(" "));
    }

    for tie_break in [TieBreak::FirstDeclared, TieBreak::LexicographicLabel] {
        let solution = backward_induction(&game, tie_break).unwrap();
        assert!(equilibria.contains(solution.chosen()));
        println!(
            "{tie_break:?}: picks {:?} with {} tie(s) logged",
            solution.chosen_at(game.root()).unwrap(),
            solution.tie_log().len()
        );
    }
}
