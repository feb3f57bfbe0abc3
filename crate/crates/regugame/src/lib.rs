//! Solvers for producer–consumer regulation games in credence-good markets.
//!
//! The library models monitoring and deterrence in markets where buyers
//! cannot verify a quality claim (the running example is organic food). It
//! provides:
//!
//! - exact rational arithmetic for all payoffs and probabilities ([`value`]);
//! - finite extensive-form game trees with decision, chance and terminal
//!   nodes, validation and a JSON wire format ([`game`]);
//! - backward induction with explicit tie handling, plus a brute-force
//!   subgame-perfect-equilibrium enumerator used as an independent
//!   cross-check ([`solver`]);
//! - pure and mixed equilibria of 2x2 bimatrix games ([`bimatrix`]);
//! - three monitoring scenarios (consumer-financed, reputation-backed and
//!   third-party audits) with closed-form deterrence thresholds ([`market`]);
//! - parameter sweeps, equilibrium-regime classification and a reproducible
//!   numerical-case report ([`policy`]).
//!
//! # Example
//!
//! ```
//! use regugame::{
//!     backward_induction, build_third_party_game, third_party_min_penalty,
//!     MarketParams, TieBreak, Value,
//! };
//!
//! let params = MarketParams::baseline()
//!     .with_audit_prob(Value::ratio(2, 5))
//!     .with_penalty(Value::from(6));
//!
//! // With audits two times out of five, a penalty of 6 is exactly the
//! // deterrence floor...
//! assert_eq!(third_party_min_penalty(&params).unwrap(), Value::from(6));
//!
//! // ...and the producer is indifferent between honesty and fraud.
//! let game = build_third_party_game(&params).unwrap();
//! let solution = backward_induction(&game, TieBreak::FirstDeclared).unwrap();
//! assert_eq!(solution.chosen_at(game.root()), Some("organic"));
//! ```
//!
//! Each major capability also has a runnable example under `examples/`; see
//! the README for the list.

pub mod bimatrix;
pub mod cli;
pub mod game;
pub mod market;
pub mod policy;
pub mod render;
pub mod solver;
pub mod value;

pub use bimatrix::{
    solve_bimatrix_2x2, strictly_dominates, Bimatrix2x2, BimatrixSolution, MatrixPlayer,
    MixedEquilibrium,
};
pub use game::{
    chance, decision, terminal, validate_game, ExtensiveGame, GameError, GameNodeSpec, GameSpec,
    NodeId, Outcome, PlayerId, ValidationReport,
};
pub use market::{
    build_consumer_monitoring_game, build_reputation_game, build_scenario_game,
    build_third_party_game, dishonest_expected_payoff, honest_payoff, r_feasibility_bound,
    reputation_conditions, spne_thresholds_consumer_model, third_party_min_penalty,
    third_party_report, threshold_report, Condition, MarketParams, ParamsError, PenaltyBound,
    RegionBound, Scenario, ThresholdError, ThresholdReport, Verdict,
};
pub use policy::{
    classify_equilibrium, demo_report, feasibility_grid, parse_sweep_csv, penalty_sweep,
    CellVerdict, Classification, CrossCheck, DemoReport, FeasibilityGrid, SweepParameter,
    SweepRow, SweepSpec,
};
pub use solver::{
    backward_induction, brute_force_spne, strictly_dominates_at, PureProfile, Solution,
    SolveError, TieBreak,
};
pub use value::Value;
