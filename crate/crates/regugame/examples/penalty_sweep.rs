//! Emit the minimum-penalty sweep as CSV, ready for a spreadsheet or plot.
//! Each numeric column carries an exact-fraction twin so nothing is lost to
//! rounding.
//!
//! ```bash
//! cargo run -p regugame --example penalty_sweep > sweep.csv
//! ```

use regugame::policy::sweep_csv;
use regugame::{penalty_sweep, MarketParams, SweepSpec, Value};

fn main() {
    let grid: Vec<Value> = (1..=10).map(|k| Value::ratio(k, 10)).collect();
    let spec = SweepSpec::over_audit_prob(grid, MarketParams::baseline());
    let rows = penalty_sweep(&spec).unwrap();
    print!("{}", sweep_csv(&rows));
}
