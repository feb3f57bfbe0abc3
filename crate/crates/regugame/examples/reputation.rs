//! Reputation-backed monitoring: a caught fraudster loses the sale on top of
//! the fine, and deceived buyers punish the market with lost trust.
//!
//! ```bash
//! cargo run -p regugame --example reputation
//! ```

use regugame::render::threshold_markdown;
use regugame::{reputation_conditions, MarketParams, Value};

fn main() {
    for (penalty, reputation_loss) in [(0i64, 0i64), (7, 0), (7, 5)] {
        let params = MarketParams::baseline()
            .with_penalty(Value::from(penalty))
            .with_monitor_cost(Value::from(1))
            .with_reputation_loss(Value::from(reputation_loss));
        let report = reputation_conditions(&params).unwrap();
        println!("p = {penalty}, t = {reputation_loss}:");
        print!("{}", threshold_markdown(&report));
        println!();
    }
}
