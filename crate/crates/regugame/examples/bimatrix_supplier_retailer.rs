//! The supplier/retailer monitoring game as a 2x2 bimatrix (payoffs in
//! thousands): no pure equilibrium exists, so both sides mix. The mixing
//! probabilities come from making the *opponent* indifferent, which is why
//! the supplier's organic probability is pinned by the retailer's payoffs.
//!
//! ```bash
//! cargo run -p regugame --example bimatrix_supplier_retailer
//! ```

use regugame::render::bimatrix_markdown;
use regugame::{solve_bimatrix_2x2, Bimatrix2x2, Value};

fn main() {
    let game = Bimatrix2x2 {
        row_player: "Supplier".to_string(),
        col_player: "Retailer".to_string(),
        row_actions: ["organic".to_string(), "non-organic".to_string()],
        col_actions: ["monitor".to_string(), "not-monitor".to_string()],
        payoffs: [
            [
                (Value::from(15), Value::from(-30)),
                (Value::from(15), Value::from(100)),
            ],
            [
                (Value::from(-20), Value::from(-75)),
                (Value::from(35), Value::from(-160)),
            ],
        ],
    };

    let solution = solve_bimatrix_2x2(&game);
    print!("{}", bimatrix_markdown(&game, &solution));
}
