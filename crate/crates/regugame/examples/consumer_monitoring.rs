//! Consumer-financed monitoring: when does "produce organic, monitor, buy"
//! become self-enforcing?
//!
//! ```bash
//! cargo run -p regugame --example consumer_monitoring
//! ```

use regugame::render::threshold_markdown;
use regugame::{
    build_consumer_monitoring_game, spne_thresholds_consumer_model, MarketParams, Value,
};

fn main() {
    // Deterrence needs the penalty above the cost gap (4 here) and
    // monitoring cheaper than the utility edge of telling goods apart (6).
    let params = MarketParams::baseline()
        .with_penalty(Value::from(5))
        .with_monitor_cost(Value::from(1));

    let report = spne_thresholds_consumer_model(&params).unwrap();
    print!("{}", threshold_markdown(&report));

    // The game behind the thresholds, as labelled outcomes.
    let game = build_consumer_monitoring_game(&params).unwrap();
    println!("\nterminal outcomes (producer, consumer):");
    for outcome in game.terminal_outcomes().unwrap() {
        let payoffs: Vec<String> = outcome.payoffs.iter().map(|v| v.to_string()).collect();
        println!("  {:<30} ({})", outcome.path.join("/"), payoffs.join(", "));
    }

    // Push the monitoring cost past s - f and honest trade collapses.
    let expensive = params.with_monitor_cost(Value::from(7));
    let report = spne_thresholds_consumer_model(&expensive).unwrap();
    println!("\nwith monitoring at 7: verdict {}", report.verdict);
}
