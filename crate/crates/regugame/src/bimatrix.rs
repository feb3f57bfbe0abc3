//! Two-by-two bimatrix games: pure Nash equilibria by best-response checks
//! and the mixed equilibrium from the two opponent-indifference equations.
//!
//! Each player's mixing probability is pinned by the *other* player's
//! payoffs: the row mix makes the column player indifferent between its two
//! actions, and vice versa. When an indifference equation has a zero
//! coefficient (as in dominance-solvable games) the mix is undefined and the
//! game is flagged degenerate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::value::Value;

/// A two-player game with two actions per player. `payoffs[i][j]` holds the
/// (row, column) payoff pair when the row player picks action `i` and the
/// column player picks action `j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bimatrix2x2 {
    pub row_player: String,
    pub col_player: String,
    pub row_actions: [String; 2],
    pub col_actions: [String; 2],
    pub payoffs: [[(Value, Value); 2]; 2],
}

impl Bimatrix2x2 {
    pub fn from_json(json: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(json)
    }

    fn row_payoff(&self, i: usize, j: usize) -> &Value {
        &self.payoffs[i][j].0
    }

    fn col_payoff(&self, i: usize, j: usize) -> &Value {
        &self.payoffs[i][j].1
    }
}

/// A mixed equilibrium: the probability each player assigns to its *first*
/// action, plus the expected payoff pair at the mix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixedEquilibrium {
    pub row_prob: Value,
    pub col_prob: Value,
    pub expected_payoffs: (Value, Value),
}

/// Everything [`solve_bimatrix_2x2`] finds: pure equilibria as action-index
/// pairs, the mixed equilibrium when the indifference probabilities land in
/// [0, 1], and a degeneracy flag for zero-coefficient indifference equations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BimatrixSolution {
    pub pure_nash: Vec<(usize, usize)>,
    pub mixed: Option<MixedEquilibrium>,
    pub degenerate: bool,
}

/// Which side of the bimatrix a player occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixPlayer {
    Row,
    Col,
}

#[derive(Debug, Error)]
pub enum BimatrixError {
    #[error("action index {index} out of range for a 2x2 game")]
    BadAction { index: usize },
}

/// Solves a 2x2 bimatrix game exactly.
pub fn solve_bimatrix_2x2(game: &Bimatrix2x2) -> BimatrixSolution {
    let mut pure_nash = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let row_ok = game.row_payoff(i, j) >= game.row_payoff(1 - i, j);
            let col_ok = game.col_payoff(i, j) >= game.col_payoff(i, 1 - j);
            if row_ok && col_ok {
                pure_nash.push((i, j));
            }
        }
    }

    // Row mix q on the first row action makes the column player indifferent:
    //   q*c00 + (1-q)*c10 = q*c01 + (1-q)*c11
    let col_coeff = game.col_payoff(0, 0) - game.col_payoff(1, 0) - game.col_payoff(0, 1)
        + game.col_payoff(1, 1);
    let col_rhs = game.col_payoff(1, 1) - game.col_payoff(1, 0);
    // Column mix m on the first column action makes the row player indifferent:
    //   m*r00 + (1-m)*r01 = m*r10 + (1-m)*r11
    let row_coeff = game.row_payoff(0, 0) - game.row_payoff(0, 1) - game.row_payoff(1, 0)
        + game.row_payoff(1, 1);
    let row_rhs = game.row_payoff(1, 1) - game.row_payoff(0, 1);

    let degenerate = col_coeff.is_zero() || row_coeff.is_zero();
    let mixed = if degenerate {
        None
    } else {
        let row_prob = col_rhs / col_coeff;
        let col_prob = row_rhs / row_coeff;
        let in_range = |p: &Value| !p.is_negative() && *p <= Value::one();
        if in_range(&row_prob) && in_range(&col_prob) {
            let counter_row = Value::one() - &row_prob;
            let counter_col = Value::one() - &col_prob;
            let weight = |i: usize, j: usize| -> Value {
                let pi = if i == 0 { &row_prob } else { &counter_row };
                let pj = if j == 0 { &col_prob } else { &counter_col };
                pi * pj
            };
            let mut expected = (Value::zero(), Value::zero());
            for i in 0..2 {
                for j in 0..2 {
                    let w = weight(i, j);
                    expected.0 += &(&w * game.row_payoff(i, j));
                    expected.1 += &(&w * game.col_payoff(i, j));
                }
            }
            Some(MixedEquilibrium {
                row_prob,
                col_prob,
                expected_payoffs: expected,
            })
        } else {
            None
        }
    };

    BimatrixSolution {
        pure_nash,
        mixed,
        degenerate,
    }
}

/// True when `action_a` yields `player` strictly more than `action_b`
/// against both opponent actions.
pub fn strictly_dominates(
    game: &Bimatrix2x2,
    player: MatrixPlayer,
    action_a: usize,
    action_b: usize,
) -> Result<bool, BimatrixError> {
    for index in [action_a, action_b] {
        if index >= 2 {
            return Err(BimatrixError::BadAction { index });
        }
    }
    let dominated = match player {
        MatrixPlayer::Row => {
            (0..2).all(|j| game.row_payoff(action_a, j) > game.row_payoff(action_b, j))
        }
        MatrixPlayer::Col => {
            (0..2).all(|i| game.col_payoff(i, action_a) > game.col_payoff(i, action_b))
        }
    };
    Ok(dominated)
}
