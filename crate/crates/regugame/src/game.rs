//! Finite extensive-form games with perfect information.
//!
//! A game is a rooted tree over three node kinds: decision nodes (one player
//! picks among labelled actions), chance nodes (a labelled branch is drawn
//! with a fixed probability) and terminal nodes (one payoff per player).
//! Nodes live in an arena indexed by [`NodeId`]; [`validate_game`] checks the
//! structural invariants, and the nested [`GameSpec`] form provides the JSON
//! wire format used by the CLI.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::value::Value;

/// Index of a player in the game's player list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlayerId(pub usize);

/// Index of a node in the game's arena.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub usize);

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A labelled move out of a decision node.
#[derive(Clone, Debug, PartialEq)]
pub struct Action {
    pub label: String,
    pub child: NodeId,
}

/// A labelled probabilistic branch out of a chance node.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub label: String,
    pub prob: Value,
    pub child: NodeId,
}

/// Payload of one arena slot.
#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Decision { owner: PlayerId, actions: Vec<Action> },
    Chance { branches: Vec<Branch> },
    Terminal { payoffs: Vec<Value> },
}

impl Node {
    /// Children in declared order (empty for terminals).
    pub fn children(&self) -> Vec<NodeId> {
        match self {
            Node::Decision { actions, .. } => actions.iter().map(|a| a.child).collect(),
            Node::Chance { branches } => branches.iter().map(|b| b.child).collect(),
            Node::Terminal { .. } => Vec::new(),
        }
    }

    pub fn is_terminal(&self) -> bool {
        matches!(self, Node::Terminal { .. })
    }
}

/// A finite perfect-information game tree.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensiveGame {
    players: Vec<String>,
    nodes: Vec<Node>,
    root: NodeId,
}

/// One violated structural rule.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub node: NodeId,
    pub message: String,
}

/// Outcome of [`validate_game`]: `ok` holds exactly when no rule is violated.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("game is valid");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  [{}] node {}: {}", v.rule, v.node, v.message)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("invalid game: {0}")]
    Invalid(ValidationReport),
    #[error("player {player} has no action labelled `{label}` at node {node}")]
    UnknownAction {
        player: PlayerId,
        node: NodeId,
        label: String,
    },
    #[error("restricting player {player} leaves node {node} without actions")]
    EmptyRestriction { player: PlayerId, node: NodeId },
    #[error("bad game JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// A terminal node reached from the root, with the labels walked to get there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub path: Vec<String>,
    pub node: NodeId,
    pub payoffs: Vec<Value>,
}

impl ExtensiveGame {
    /// Builds a game from a nested node description.
    pub fn new<S: Into<String>>(players: impl IntoIterator<Item = S>, root: GameNodeSpec) -> Self {
        GameSpec {
            players: players.into_iter().map(Into::into).collect(),
            root,
        }
        .into_game()
    }

    /// Assembles a game from raw arena parts, without any validation. Callers
    /// are expected to run [`validate_game`] before solving.
    pub fn from_raw_parts(players: Vec<String>, nodes: Vec<Node>, root: NodeId) -> Self {
        ExtensiveGame {
            players,
            nodes,
            root,
        }
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn player_index(&self, name: &str) -> Option<PlayerId> {
        self.players.iter().position(|p| p == name).map(PlayerId)
    }

    /// Node ids ordered so that every child precedes its parent. Requires a
    /// validated tree.
    pub fn bottom_up_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                order.push(id);
            } else {
                stack.push((id, true));
                for child in self.node(id).children() {
                    stack.push((child, false));
                }
            }
        }
        order
    }

    /// All terminal nodes in depth-first declared-order, with root paths.
    pub fn terminal_outcomes(&self) -> Result<Vec<Outcome>, GameError> {
        let report = validate_game(self);
        if !report.ok {
            return Err(GameError::Invalid(report));
        }
        let mut outcomes = Vec::new();
        let mut path = Vec::new();
        self.collect_outcomes(self.root, &mut path, &mut outcomes);
        Ok(outcomes)
    }

    fn collect_outcomes(&self, id: NodeId, path: &mut Vec<String>, out: &mut Vec<Outcome>) {
        match self.node(id) {
            Node::Terminal { payoffs } => out.push(Outcome {
                path: path.clone(),
                node: id,
                payoffs: payoffs.clone(),
            }),
            Node::Decision { actions, .. } => {
                for action in actions {
                    path.push(action.label.clone());
                    self.collect_outcomes(action.child, path, out);
                    path.pop();
                }
            }
            Node::Chance { branches } => {
                for branch in branches {
                    path.push(branch.label.clone());
                    self.collect_outcomes(branch.child, path, out);
                    path.pop();
                }
            }
        }
    }

    /// Action labels from the root to `id` (requires a validated tree).
    pub fn path_to(&self, target: NodeId) -> Option<Vec<String>> {
        fn walk(
            g: &ExtensiveGame,
            id: NodeId,
            target: NodeId,
            path: &mut Vec<String>,
        ) -> bool {
            if id == target {
                return true;
            }
            let labelled: Vec<(String, NodeId)> = match g.node(id) {
                Node::Decision { actions, .. } => actions
                    .iter()
                    .map(|a| (a.label.clone(), a.child))
                    .collect(),
                Node::Chance { branches } => branches
                    .iter()
                    .map(|b| (b.label.clone(), b.child))
                    .collect(),
                Node::Terminal { .. } => Vec::new(),
            };
            for (label, child) in labelled {
                path.push(label);
                if walk(g, child, target, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = Vec::new();
        walk(self, self.root, target, &mut path).then_some(path)
    }

    /// Returns a copy in which every decision node owned by `player` keeps
    /// only the actions whose label appears in `allowed`. Used to pin one
    /// player to a fixed strategy before solving.
    pub fn restrict_actions(
        &self,
        player: PlayerId,
        allowed: &[&str],
    ) -> Result<ExtensiveGame, GameError> {
        let report = validate_game(self);
        if !report.ok {
            return Err(GameError::Invalid(report));
        }
        let spec = self.to_spec()?;
        let root = restrict_spec(spec.root, player, allowed)?;
        Ok(ExtensiveGame::new(spec.players, root))
    }

    /// Nested form of this game. Fails if the arena is not a valid tree.
    pub fn to_spec(&self) -> Result<GameSpec, GameError> {
        let report = validate_game(self);
        if !report.ok {
            return Err(GameError::Invalid(report));
        }
        Ok(GameSpec {
            players: self.players.clone(),
            root: self.node_spec(self.root),
        })
    }

    fn node_spec(&self, id: NodeId) -> GameNodeSpec {
        match self.node(id) {
            Node::Terminal { payoffs } => GameNodeSpec::Terminal {
                payoff: payoffs.clone(),
            },
            Node::Decision { owner, actions } => GameNodeSpec::Decision {
                owner: owner.0,
                actions: actions
                    .iter()
                    .map(|a| ActionSpec {
                        label: a.label.clone(),
                        child: self.node_spec(a.child),
                    })
                    .collect(),
            },
            Node::Chance { branches } => GameNodeSpec::Chance {
                branches: branches
                    .iter()
                    .map(|b| BranchSpec {
                        label: b.label.clone(),
                        prob: b.prob.clone(),
                        child: self.node_spec(b.child),
                    })
                    .collect(),
            },
        }
    }

    pub fn from_json(json: &str) -> Result<ExtensiveGame, GameError> {
        let spec: GameSpec = serde_json::from_str(json)?;
        Ok(spec.into_game())
    }

    pub fn to_json(&self) -> Result<String, GameError> {
        let spec = self.to_spec()?;
        Ok(serde_json::to_string_pretty(&spec).expect("game spec serializes"))
    }
}

fn restrict_spec(
    spec: GameNodeSpec,
    player: PlayerId,
    allowed: &[&str],
) -> Result<GameNodeSpec, GameError> {
    match spec {
        GameNodeSpec::Terminal { payoff } => Ok(GameNodeSpec::Terminal { payoff }),
        GameNodeSpec::Chance { branches } => Ok(GameNodeSpec::Chance {
            branches: branches
                .into_iter()
                .map(|b| {
                    Ok(BranchSpec {
                        child: restrict_spec(b.child, player, allowed)?,
                        ..b
                    })
                })
                .collect::<Result<_, GameError>>()?,
        }),
        GameNodeSpec::Decision { owner, actions } => {
            let kept: Vec<ActionSpec> = actions
                .into_iter()
                .filter(|a| owner != player.0 || allowed.contains(&a.label.as_str()))
                .map(|a| {
                    Ok(ActionSpec {
                        label: a.label,
                        child: restrict_spec(a.child, player, allowed)?,
                    })
                })
                .collect::<Result<_, GameError>>()?;
            if kept.is_empty() {
                return Err(GameError::EmptyRestriction {
                    player,
                    // The offending node id is lost in nested form; report the
                    // root as the anchor.
                    node: NodeId(0),
                });
            }
            Ok(GameNodeSpec::Decision {
                owner,
                actions: kept,
            })
        }
    }
}

/// Nested node description: the JSON wire format and the builder vocabulary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GameNodeSpec {
    Decision {
        owner: usize,
        actions: Vec<ActionSpec>,
    },
    Chance {
        branches: Vec<BranchSpec>,
    },
    Terminal {
        payoff: Vec<Value>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub label: String,
    pub child: GameNodeSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchSpec {
    pub label: String,
    pub prob: Value,
    pub child: GameNodeSpec,
}

/// Nested form of a whole game: `{"players": [...], "root": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GameSpec {
    pub players: Vec<String>,
    pub root: GameNodeSpec,
}

impl GameSpec {
    /// Flattens the nested description into an arena, depth-first.
    pub fn into_game(self) -> ExtensiveGame {
        let mut nodes = Vec::new();
        let root = flatten(self.root, &mut nodes);
        ExtensiveGame {
            players: self.players,
            nodes,
            root,
        }
    }
}

fn flatten(spec: GameNodeSpec, nodes: &mut Vec<Node>) -> NodeId {
    let id = NodeId(nodes.len());
    // Reserve the slot so parents precede children in the arena.
    nodes.push(Node::Terminal { payoffs: vec![] });
    let node = match spec {
        GameNodeSpec::Terminal { payoff } => Node::Terminal { payoffs: payoff },
        GameNodeSpec::Decision { owner, actions } => Node::Decision {
            owner: PlayerId(owner),
            actions: actions
                .into_iter()
                .map(|a| Action {
                    label: a.label,
                    child: flatten(a.child, nodes),
                })
                .collect(),
        },
        GameNodeSpec::Chance { branches } => Node::Chance {
            branches: branches
                .into_iter()
                .map(|b| Branch {
                    label: b.label,
                    prob: b.prob,
                    child: flatten(b.child, nodes),
                })
                .collect(),
        },
    };
    nodes[id.0] = node;
    id
}

/// Builder shorthand for a decision node.
pub fn decision<S: Into<String>>(
    owner: usize,
    actions: impl IntoIterator<Item = (S, GameNodeSpec)>,
) -> GameNodeSpec {
    GameNodeSpec::Decision {
        owner,
        actions: actions
            .into_iter()
            .map(|(label, child)| ActionSpec {
                label: label.into(),
                child,
            })
            .collect(),
    }
}

/// Builder shorthand for a chance node.
pub fn chance<S: Into<String>>(
    branches: impl IntoIterator<Item = (S, Value, GameNodeSpec)>,
) -> GameNodeSpec {
    GameNodeSpec::Chance {
        branches: branches
            .into_iter()
            .map(|(label, prob, child)| BranchSpec {
                label: label.into(),
                prob,
                child,
            })
            .collect(),
    }
}

/// Builder shorthand for a terminal node.
pub fn terminal<V: Into<Value>>(payoffs: impl IntoIterator<Item = V>) -> GameNodeSpec {
    GameNodeSpec::Terminal {
        payoff: payoffs.into_iter().map(Into::into).collect(),
    }
}

/// Checks every structural invariant and reports all violations found.
/// Violations are data, not failures: the function never panics on bad input.
pub fn validate_game(game: &ExtensiveGame) -> ValidationReport {
    let mut violations = Vec::new();
    let n = game.nodes.len();

    if game.players.is_empty() {
        violations.push(Violation {
            rule: "players",
            node: game.root,
            message: "player list is empty".to_string(),
        });
    }
    if game.root.0 >= n {
        violations.push(Violation {
            rule: "bounds",
            node: game.root,
            message: format!("root index {} out of bounds for {} node(s)", game.root, n),
        });
        return ValidationReport::from_violations(violations);
    }

    let mut bounds_ok = true;
    for id in game.node_ids() {
        for child in game.node(id).children() {
            if child.0 >= n {
                bounds_ok = false;
                violations.push(Violation {
                    rule: "bounds",
                    node: id,
                    message: format!("child index {child} out of bounds"),
                });
            }
        }
    }
    if !bounds_ok {
        return ValidationReport::from_violations(violations);
    }

    // Tree shape: root has no parent, every other node exactly one, all
    // reachable, no cycles.
    let mut parents: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for id in game.node_ids() {
        for child in game.node(id).children() {
            parents[child.0].push(id);
        }
    }
    if !parents[game.root.0].is_empty() {
        violations.push(Violation {
            rule: "not-a-tree",
            node: game.root,
            message: format!(
                "root is a child of node {}",
                parents[game.root.0][0]
            ),
        });
    }
    for id in game.node_ids() {
        if id != game.root && parents[id.0].len() > 1 {
            violations.push(Violation {
                rule: "not-a-tree",
                node: id,
                message: format!("node has {} parents", parents[id.0].len()),
            });
        }
    }
    // Colored DFS: a back edge to a node still on the stack is a cycle; a
    // finished-node revisit is a shared child, already caught by the parent
    // counts above.
    const UNSEEN: u8 = 0;
    const ON_STACK: u8 = 1;
    const DONE: u8 = 2;
    let mut color = vec![UNSEEN; n];
    let mut stack = vec![(game.root, false)];
    while let Some((id, leaving)) = stack.pop() {
        if leaving {
            color[id.0] = DONE;
            continue;
        }
        match color[id.0] {
            ON_STACK => {
                violations.push(Violation {
                    rule: "not-a-tree",
                    node: id,
                    message: "cycle detected".to_string(),
                });
                continue;
            }
            DONE => continue,
            _ => {}
        }
        color[id.0] = ON_STACK;
        stack.push((id, true));
        for child in game.node(id).children() {
            stack.push((child, false));
        }
    }
    for id in game.node_ids() {
        if color[id.0] == UNSEEN {
            violations.push(Violation {
                rule: "not-a-tree",
                node: id,
                message: "node unreachable from root".to_string(),
            });
        }
    }

    let tolerance = Value::ratio(1, 1_000_000_000);
    for id in game.node_ids() {
        match game.node(id) {
            Node::Decision { owner, actions } => {
                if owner.0 >= game.players.len() {
                    violations.push(Violation {
                        rule: "player-bounds",
                        node: id,
                        message: format!(
                            "owner {} out of bounds for {} player(s)",
                            owner,
                            game.players.len()
                        ),
                    });
                }
                if actions.is_empty() {
                    violations.push(Violation {
                        rule: "empty-decision",
                        node: id,
                        message: "decision node has no actions".to_string(),
                    });
                }
                let mut seen = BTreeSet::new();
                for action in actions {
                    if !seen.insert(action.label.as_str()) {
                        violations.push(Violation {
                            rule: "duplicate-action-label",
                            node: id,
                            message: format!("duplicate action label `{}`", action.label),
                        });
                    }
                }
            }
            Node::Chance { branches } => {
                for branch in branches {
                    if branch.prob.is_negative() || branch.prob > Value::one() {
                        violations.push(Violation {
                            rule: "probability-range",
                            node: id,
                            message: format!(
                                "branch `{}` probability {} outside [0, 1]",
                                branch.label,
                                branch.prob.fraction_string()
                            ),
                        });
                    }
                }
                let sum: Value = branches.iter().map(|b| &b.prob).sum();
                if (&sum - &Value::one()).abs() > tolerance {
                    violations.push(Violation {
                        rule: "probability-sum",
                        node: id,
                        message: format!(
                            "branch probabilities sum to {}, not 1",
                            sum.fraction_string()
                        ),
                    });
                }
            }
            Node::Terminal { payoffs } => {
                if payoffs.len() != game.players.len() {
                    violations.push(Violation {
                        rule: "payoff-length",
                        node: id,
                        message: format!(
                            "payoff vector has {} entries for {} player(s)",
                            payoffs.len(),
                            game.players.len()
                        ),
                    });
                }
            }
        }
    }

    ValidationReport::from_violations(violations)
}
