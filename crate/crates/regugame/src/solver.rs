//! Exact solvers for extensive-form games.
//!
//! [`backward_induction`] replaces each decision node with the mover's best
//! continuation value, leaves to root; chance nodes carry the
//! probability-weighted average of their children. [`brute_force_spne`]
//! enumerates every pure strategy profile and keeps the subgame-perfect ones;
//! it exists as an independent cross-check for the induction pass and is
//! capped at one million profiles.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::game::{validate_game, ExtensiveGame, Node, NodeId, PlayerId, ValidationReport};
use crate::value::Value;

/// How a decision node resolves payoff-equal actions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Keep the first action in declared order (the default).
    #[default]
    FirstDeclared,
    /// Among tied actions, keep the lexicographically smallest label.
    LexicographicLabel,
}

/// Result of backward induction: continuation values for every node, the
/// chosen action at each decision node, and the nodes where the mover was
/// indifferent between two or more actions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Solution {
    root: NodeId,
    node_values: Vec<Vec<Value>>,
    chosen: BTreeMap<NodeId, String>,
    tie_log: Vec<NodeId>,
}

impl Solution {
    pub fn value(&self, id: NodeId) -> &[Value] {
        &self.node_values[id.0]
    }

    pub fn root_value(&self) -> &[Value] {
        &self.node_values[self.root.0]
    }

    pub fn chosen(&self) -> &BTreeMap<NodeId, String> {
        &self.chosen
    }

    pub fn chosen_at(&self, id: NodeId) -> Option<&str> {
        self.chosen.get(&id).map(String::as_str)
    }

    pub fn tie_log(&self) -> &[NodeId] {
        &self.tie_log
    }

    pub fn has_tie_at(&self, id: NodeId) -> bool {
        self.tie_log.contains(&id)
    }
}

/// A pure strategy profile: one action label per decision node.
pub type PureProfile = BTreeMap<NodeId, String>;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("invalid game: {0}")]
    InvalidGame(ValidationReport),
    #[error("{count} pure strategy profiles exceed the enumeration bound of {bound}")]
    ProfileBound { count: u128, bound: u128 },
    #[error("node {node} is not a decision node")]
    NotADecision { node: NodeId },
    #[error("no action labelled `{label}` at node {node}")]
    UnknownAction { node: NodeId, label: String },
}

const PROFILE_BOUND: u128 = 1_000_000;

fn ensure_valid(game: &ExtensiveGame) -> Result<(), SolveError> {
    let report = validate_game(game);
    if report.ok {
        Ok(())
    } else {
        Err(SolveError::InvalidGame(report))
    }
}

/// Solves a validated game bottom-up. Deterministic for fixed inputs: the
/// chosen action at a tied decision node follows `tie_break`, and every tie
/// is recorded in the solution's tie log.
pub fn backward_induction(
    game: &ExtensiveGame,
    tie_break: TieBreak,
) -> Result<Solution, SolveError> {
    ensure_valid(game)?;
    let mut node_values: Vec<Vec<Value>> = vec![Vec::new(); game.len()];
    let mut chosen = BTreeMap::new();
    let mut tie_log = Vec::new();

    for id in game.bottom_up_order() {
        match game.node(id) {
            Node::Terminal { payoffs } => node_values[id.0] = payoffs.clone(),
            Node::Chance { branches } => {
                let mut value = vec![Value::zero(); game.num_players()];
                for branch in branches {
                    let child = &node_values[branch.child.0];
                    for (acc, v) in value.iter_mut().zip(child) {
                        *acc += &(&branch.prob * v);
                    }
                }
                node_values[id.0] = value;
            }
            Node::Decision { owner, actions } => {
                let mover = owner.0;
                let best = actions
                    .iter()
                    .map(|a| &node_values[a.child.0][mover])
                    .max()
                    .expect("validated decision node has actions")
                    .clone();
                let tied: Vec<&crate::game::Action> = actions
                    .iter()
                    .filter(|a| node_values[a.child.0][mover] == best)
                    .collect();
                let pick = match tie_break {
                    TieBreak::FirstDeclared => tied[0],
                    TieBreak::LexicographicLabel => tied
                        .iter()
                        .min_by(|a, b| a.label.cmp(&b.label))
                        .expect("at least one tied action"),
                };
                if tied.len() > 1 {
                    tie_log.push(id);
                }
                chosen.insert(id, pick.label.clone());
                let value = node_values[pick.child.0].clone();
                node_values[id.0] = value;
            }
        }
    }
    tie_log.sort();

    Ok(Solution {
        root: game.root(),
        node_values,
        chosen,
        tie_log,
    })
}

/// Enumerates every pure strategy profile and returns those that survive the
/// one-shot-deviation check at every decision node, in enumeration order.
/// The set always contains the profile picked by [`backward_induction`],
/// whatever the tie-break.
pub fn brute_force_spne(game: &ExtensiveGame) -> Result<Vec<PureProfile>, SolveError> {
    ensure_valid(game)?;
    let decisions: Vec<(NodeId, usize)> = game
        .node_ids()
        .filter_map(|id| match game.node(id) {
            Node::Decision { actions, .. } => Some((id, actions.len())),
            _ => None,
        })
        .collect();
    let count: u128 = decisions.iter().map(|(_, n)| *n as u128).product();
    if count > PROFILE_BOUND {
        return Err(SolveError::ProfileBound {
            count,
            bound: PROFILE_BOUND,
        });
    }

    let order = game.bottom_up_order();
    let mut equilibria = Vec::new();
    let mut assignment = vec![0usize; decisions.len()];
    let mut values: Vec<Vec<Value>> = vec![Vec::new(); game.len()];
    loop {
        // Evaluate every node under the current profile.
        let pick = |id: NodeId, assignment: &[usize]| -> usize {
            let slot = decisions
                .iter()
                .position(|(d, _)| *d == id)
                .expect("decision node is indexed");
            assignment[slot]
        };
        for &id in &order {
            match game.node(id) {
                Node::Terminal { payoffs } => values[id.0] = payoffs.clone(),
                Node::Chance { branches } => {
                    let mut value = vec![Value::zero(); game.num_players()];
                    for branch in branches {
                        let child = &values[branch.child.0];
                        for (acc, v) in value.iter_mut().zip(child) {
                            *acc += &(&branch.prob * v);
                        }
                    }
                    values[id.0] = value;
                }
                Node::Decision { actions, .. } => {
                    let choice = pick(id, &assignment);
                    let value = values[actions[choice].child.0].clone();
                    values[id.0] = value;
                }
            }
        }
        // One-shot deviation check: the assigned action must maximize the
        // mover's continuation value at every decision node.
        let mut subgame_perfect = true;
        'check: for &(id, _) in &decisions {
            let Node::Decision { owner, actions } = game.node(id) else {
                unreachable!()
            };
            let choice = pick(id, &assignment);
            let own = &values[actions[choice].child.0][owner.0];
            for action in actions {
                if &values[action.child.0][owner.0] > own {
                    subgame_perfect = false;
                    break 'check;
                }
            }
        }
        if subgame_perfect {
            let profile: PureProfile = decisions
                .iter()
                .enumerate()
                .map(|(slot, (id, _))| {
                    let Node::Decision { actions, .. } = game.node(*id) else {
                        unreachable!()
                    };
                    (*id, actions[assignment[slot]].label.clone())
                })
                .collect();
            equilibria.push(profile);
        }
        // Advance the mixed-radix counter.
        let mut carry = true;
        for (slot, (_, radix)) in decisions.iter().enumerate() {
            if !carry {
                break;
            }
            assignment[slot] += 1;
            if assignment[slot] < *radix {
                carry = false;
            } else {
                assignment[slot] = 0;
            }
        }
        if carry {
            break;
        }
    }
    Ok(equilibria)
}

/// True when, at decision node `node`, taking `action_a` guarantees its owner
/// strictly more than `action_b` can ever yield: the owner's worst
/// continuation value under `action_a` exceeds the best one under `action_b`,
/// with chance branches averaged. For terminal children this reduces to a
/// plain payoff comparison.
pub fn strictly_dominates_at(
    game: &ExtensiveGame,
    node: NodeId,
    action_a: &str,
    action_b: &str,
) -> Result<bool, SolveError> {
    ensure_valid(game)?;
    let Node::Decision { owner, actions } = game.node(node) else {
        return Err(SolveError::NotADecision { node });
    };
    let child_of = |label: &str| -> Result<NodeId, SolveError> {
        actions
            .iter()
            .find(|a| a.label == label)
            .map(|a| a.child)
            .ok_or_else(|| SolveError::UnknownAction {
                node,
                label: label.to_string(),
            })
    };
    let a = child_of(action_a)?;
    let b = child_of(action_b)?;
    let worst_a = continuation_extreme(game, a, *owner, Extreme::Min);
    let best_b = continuation_extreme(game, b, *owner, Extreme::Max);
    Ok(worst_a > best_b)
}

#[derive(Clone, Copy)]
enum Extreme {
    Min,
    Max,
}

/// The owner's least (or greatest) achievable value in the subtree at `id`,
/// over all pure continuations by every player, chance taken in expectation.
fn continuation_extreme(
    game: &ExtensiveGame,
    id: NodeId,
    player: PlayerId,
    extreme: Extreme,
) -> Value {
    match game.node(id) {
        Node::Terminal { payoffs } => payoffs[player.0].clone(),
        Node::Chance { branches } => branches
            .iter()
            .map(|b| &b.prob * &continuation_extreme(game, b.child, player, extreme))
            .sum(),
        Node::Decision { actions, .. } => {
            let values = actions
                .iter()
                .map(|a| continuation_extreme(game, a.child, player, extreme));
            match extreme {
                Extreme::Min => values.min(),
                Extreme::Max => values.max(),
            }
            .expect("validated decision node has actions")
        }
    }
}
