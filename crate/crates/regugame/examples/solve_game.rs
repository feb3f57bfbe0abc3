//! Build a small extensive-form game two ways (builder API and JSON), then
//! solve it by backward induction.
//!
//! ```bash
//! cargo run -p regugame --example solve_game
//! ```

use regugame::render::SolutionView;
use regugame::{
    backward_induction, decision, terminal, validate_game, ExtensiveGame, TieBreak,
};

fn main() {
    // A market-entry game: the entrant moves, the incumbent responds.
    let game = ExtensiveGame::new(
        ["Entrant", "Incumbent"],
        decision(
            0,
            [
                (
                    "enter",
                    decision(
                        1,
                        [
                            ("accommodate", terminal([2, 1])),
                            ("fight", terminal([-1, -1])),
                        ],
                    ),
                ),
                ("stay-out", terminal([0, 3])),
            ],
        ),
    );

    let report = validate_game(&game);
    println!("validation: {report}");

    let solution = backward_induction(&game, TieBreak::FirstDeclared).unwrap();
    print!("{}", SolutionView::new(&game, &solution).to_markdown());

    // The same game round-trips through its JSON wire format.
    let json = game.to_json().unwrap();
    let reparsed = ExtensiveGame::from_json(&json).unwrap();
    assert_eq!(reparsed, game);
    println!("\nJSON wire format:\n{json}");
}
