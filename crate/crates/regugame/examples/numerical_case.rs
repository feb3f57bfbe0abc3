//! Print the full numerical-case report: parameter echo, producer payoffs,
//! the minimum-penalty table, the purchase condition and the
//! audit-feasibility verdict. Byte-identical on every run.
//!
//! ```bash
//! cargo run -p regugame --example numerical_case
//! ```

use regugame::{demo_report, MarketParams};

fn main() {
    let report = demo_report(&MarketParams::baseline()).unwrap();
    print!("{}", report.markdown);
}
