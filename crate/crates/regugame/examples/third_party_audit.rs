//! Third-party audits: how the audit probability trades off against the
//! penalty, and why audits alone cannot deter at the reference parameters.
//!
//! ```bash
//! cargo run -p regugame --example third_party_audit
//! ```

use regugame::{
    classify_equilibrium, dishonest_expected_payoff, honest_payoff, r_feasibility_bound,
    third_party_min_penalty, MarketParams, Scenario, Value,
};

fn main() {
    let baseline = MarketParams::baseline();
    println!("honest margin: {}", honest_payoff(&baseline));

    println!("\naudit probability vs minimum deterring penalty:");
    for k in 1..=5 {
        let r = Value::ratio(k, 5);
        let params = baseline.clone().with_audit_prob(r.clone());
        let p_min = third_party_min_penalty(&params).unwrap();
        println!(
            "  r = {r}: p_min = {p} (= {exact}), expected fraud margin at p = 0: {fraud}",
            p = p_min,
            exact = p_min.fraction_string(),
            fraud = dishonest_expected_payoff(&params),
        );
    }

    // Can the audit probability deter on its own, with no penalty at all?
    let region = r_feasibility_bound(&baseline).unwrap();
    let bound = region.bound.unwrap();
    println!(
        "\npenalty-free deterrence needs r > {} ≈ {}: {}",
        bound.fraction_string(),
        bound.decimal_places(4),
        if region.feasible {
            "attainable"
        } else {
            "not attainable for any r in [0, 1]"
        }
    );

    // Classify two policy mixes against the solved game.
    for (r, p) in [((4, 5), 2i64), ((1, 5), 10)] {
        let params = baseline
            .clone()
            .with_audit_prob(Value::ratio(r.0, r.1))
            .with_penalty(Value::from(p));
        let c = classify_equilibrium(&params, Scenario::ThirdParty).unwrap();
        println!(
            "r = {}/{}, p = {p}: verdict {}, solver sees {:?} ({:?})",
            r.0, r.1, c.report.verdict, c.producer_choice, c.cross_check
        );
    }
}
