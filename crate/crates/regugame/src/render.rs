//! Text output for the CLI: markdown, CSV and JSON views of reports,
//! solutions and equilibria. All renderings are deterministic functions of
//! their inputs, with no timestamps and no locale-dependent formatting.

use serde::Serialize;

use crate::bimatrix::{Bimatrix2x2, BimatrixSolution};
use crate::game::{ExtensiveGame, Node, NodeId};
use crate::market::ThresholdReport;
use crate::policy::{sweep_csv, DemoReport, SweepRow};
use crate::solver::Solution;
use crate::value::Value;

/// Supported output encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<OutputFormat> {
        match s {
            "md" | "markdown" => Some(OutputFormat::Markdown),
            "csv" => Some(OutputFormat::Csv),
            "json" => Some(OutputFormat::Json),
            _ => None,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

/// One decision of a solved game, addressed by its path from the root.
#[derive(Clone, Debug, Serialize)]
pub struct DecisionView {
    pub node: NodeId,
    pub path: String,
    pub player: String,
    pub action: String,
    pub tie: bool,
    pub value: Vec<Value>,
}

/// A solution joined with its game: paths, player names and labels instead
/// of bare node ids.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionView {
    pub players: Vec<String>,
    pub root_value: Vec<Value>,
    pub decisions: Vec<DecisionView>,
    pub ties: usize,
}

impl SolutionView {
    pub fn new(game: &ExtensiveGame, solution: &Solution) -> SolutionView {
        let mut decisions = Vec::new();
        for id in game.node_ids() {
            if let Node::Decision { owner, .. } = game.node(id) {
                let action = solution
                    .chosen_at(id)
                    .expect("every decision node has a chosen action")
                    .to_string();
                let path = game
                    .path_to(id)
                    .map(|labels| {
                        if labels.is_empty() {
                            "(root)".to_string()
                        } else {
                            labels.join("/")
                        }
                    })
                    .unwrap_or_else(|| "(root)".to_string());
                decisions.push(DecisionView {
                    node: id,
                    path,
                    player: game.players()[owner.0].clone(),
                    action,
                    tie: solution.has_tie_at(id),
                    value: solution.value(id).to_vec(),
                });
            }
        }
        SolutionView {
            players: game.players().to_vec(),
            root_value: solution.root_value().to_vec(),
            decisions,
            ties: solution.tie_log().len(),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Backward induction\n\n");
        out.push_str(&format!(
            "root value: ({})\n\n",
            join_values(&self.root_value)
        ));
        out.push_str("| node | path | player | action | tie | value |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for d in &self.decisions {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | ({}) |\n",
                d.node,
                d.path,
                d.player,
                d.action,
                if d.tie { "yes" } else { "no" },
                join_values(&d.value),
            ));
        }
        if self.ties > 0 {
            out.push_str(&format!(
                "\n{} decision node(s) had payoff-equal actions; the tie-break picked one.\n",
                self.ties
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("node,path,player,action,tie");
        for p in &self.players {
            out.push_str(&format!(",value_{p}"));
        }
        out.push('\n');
        for d in &self.decisions {
            out.push_str(&format!(
                "{},{},{},{},{}",
                d.node.0, d.path, d.player, d.action, d.tie
            ));
            for v in &d.value {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

fn join_values(values: &[Value]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn threshold_markdown(report: &ThresholdReport) -> String {
    let mut out = format!("# Thresholds: {} scenario\n\n", report.scenario);
    let mut summary = vec![format!("p_min = {}", report.p_min)];
    if let Some(m_max) = &report.m_max {
        summary.push(format!("m_max = {m_max}"));
    }
    if let Some(t_min) = &report.t_min {
        summary.push(format!("t_min = {t_min}"));
    }
    if let Some(r_bound) = &report.r_bound {
        summary.push(format!(
            "r_bound = {} ≈ {}",
            r_bound.fraction_string(),
            r_bound.decimal_places(4)
        ));
    }
    out.push_str(&summary.join(", "));
    out.push_str("\n\n| condition | inequality | satisfied |\n|---|---|---|\n");
    for c in &report.conditions {
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            c.name, c.inequality, c.satisfied
        ));
    }
    out.push_str(&format!("\nverdict: {}\n", report.verdict));
    if let Some(unmonitored) = &report.unmonitored_verdict {
        out.push_str(&format!("unmonitored subgame: {unmonitored}\n"));
    }
    for note in &report.notes {
        out.push_str(&format!("\nnote: {note}\n"));
    }
    out
}

pub fn threshold_csv(report: &ThresholdReport) -> String {
    let mut out = String::from("kind,name,detail,value\n");
    out.push_str(&format!("scenario,,,{}\n", report.scenario));
    out.push_str(&format!("threshold,p_min,,{}\n", report.p_min));
    if let Some(m_max) = &report.m_max {
        out.push_str(&format!("threshold,m_max,,{m_max}\n"));
    }
    if let Some(t_min) = &report.t_min {
        out.push_str(&format!("threshold,t_min,,{t_min}\n"));
    }
    if let Some(r_bound) = &report.r_bound {
        out.push_str(&format!(
            "threshold,r_bound,{},{}\n",
            r_bound.fraction_string(),
            r_bound
        ));
    }
    for c in &report.conditions {
        out.push_str(&format!(
            "condition,{},{},{}\n",
            c.name,
            c.inequality.replace(',', ";"),
            c.satisfied
        ));
    }
    out.push_str(&format!("verdict,,,{}\n", report.verdict));
    if let Some(unmonitored) = &report.unmonitored_verdict {
        out.push_str(&format!("verdict,unmonitored,,{unmonitored}\n"));
    }
    out
}

pub fn bimatrix_markdown(game: &Bimatrix2x2, solution: &BimatrixSolution) -> String {
    let mut out = format!(
        "# Bimatrix game: {} vs {}\n\n",
        game.row_player, game.col_player
    );
    out.push_str(&format!(
        "| | {} | {} |\n|---|---|---|\n",
        game.col_actions[0], game.col_actions[1]
    ));
    for i in 0..2 {
        out.push_str(&format!(
            "| {} | ({}, {}) | ({}, {}) |\n",
            game.row_actions[i],
            game.payoffs[i][0].0,
            game.payoffs[i][0].1,
            game.payoffs[i][1].0,
            game.payoffs[i][1].1,
        ));
    }
    out.push('\n');
    out.push_str(&bimatrix_summary(game, solution));
    out.push('\n');
    if let Some(mixed) = &solution.mixed {
        out.push_str(&format!(
            "\nexact mix: {} plays {} with probability {}, {} plays {} with probability {}\n",
            game.row_player,
            game.row_actions[0],
            mixed.row_prob.fraction_string(),
            game.col_player,
            game.col_actions[0],
            mixed.col_prob.fraction_string(),
        ));
        out.push_str(&format!(
            "expected payoffs: ({}, {})\n",
            mixed.expected_payoffs.0, mixed.expected_payoffs.1
        ));
    }
    if solution.degenerate {
        out.push_str("\nthe indifference equations are degenerate: no mixing probability can equalize one player's actions\n");
    }
    out
}

/// One-line summary, e.g. `no pure NE; mixed: row 0.3953, col 0.3636`.
pub fn bimatrix_summary(game: &Bimatrix2x2, solution: &BimatrixSolution) -> String {
    let pure = if solution.pure_nash.is_empty() {
        "no pure NE".to_string()
    } else {
        let cells: Vec<String> = solution
            .pure_nash
            .iter()
            .map(|(i, j)| format!("({}, {})", game.row_actions[*i], game.col_actions[*j]))
            .collect();
        format!("pure NE: {}", cells.join(", "))
    };
    match &solution.mixed {
        Some(mixed) => format!(
            "{pure}; mixed: row {}, col {}",
            mixed.row_prob.decimal_places(4),
            mixed.col_prob.decimal_places(4)
        ),
        None => format!("{pure}; no mixed equilibrium"),
    }
}

pub fn bimatrix_csv(game: &Bimatrix2x2, solution: &BimatrixSolution) -> String {
    let mut out = String::from("kind,row,col,value\n");
    for (i, j) in &solution.pure_nash {
        out.push_str(&format!(
            "pure,{},{},\n",
            game.row_actions[*i], game.col_actions[*j]
        ));
    }
    if let Some(mixed) = &solution.mixed {
        out.push_str(&format!(
            "mixed_row,{},,{}\n",
            game.row_actions[0],
            mixed.row_prob.fraction_string()
        ));
        out.push_str(&format!(
            "mixed_col,{},,{}\n",
            game.col_actions[0],
            mixed.col_prob.fraction_string()
        ));
        out.push_str(&format!(
            "expected,,,{}|{}\n",
            mixed.expected_payoffs.0, mixed.expected_payoffs.1
        ));
    }
    out.push_str(&format!("degenerate,,,{}\n", solution.degenerate));
    out
}

pub fn sweep_markdown(rows: &[SweepRow]) -> String {
    let mut out = String::from("# Minimum penalty by audit probability\n\n");
    out.push_str("| r | p_min | p_min (exact) | honest | dishonest | verdict |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for row in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            row.swept,
            row.p_min,
            row.p_min.fraction_string(),
            row.honest,
            row.dishonest,
            row.verdict,
        ));
    }
    out
}

pub fn sweep_rows_csv(rows: &[SweepRow]) -> String {
    sweep_csv(rows)
}

/// Concatenates the demo's named CSV payloads, one `# name` heading each.
pub fn demo_csv(report: &DemoReport) -> String {
    let mut out = String::new();
    for (i, payload) in report.csv_payloads.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# {}\n{}", payload.name, payload.csv));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::{threshold_report, MarketParams, Scenario};
    use crate::policy::demo_report;
    use crate::solver::{backward_induction, TieBreak};

    #[test]
    fn consumer_threshold_markdown_quotes_the_summary_line() {
        let report = threshold_report(&MarketParams::baseline(), Scenario::Consumer).unwrap();
        let md = threshold_markdown(&report);
        assert!(md.contains("p_min = 4, m_max = 6"));
    }

    #[test]
    fn bimatrix_summary_formats_the_mixed_probabilities() {
        let game = Bimatrix2x2 {
            row_player: "Supplier".into(),
            col_player: "Retailer".into(),
            row_actions: ["organic".into(), "non-organic".into()],
            col_actions: ["monitor".into(), "not-monitor".into()],
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
        let solution = crate::bimatrix::solve_bimatrix_2x2(&game);
        assert_eq!(
            bimatrix_summary(&game, &solution),
            "no pure NE; mixed: row 0.3953, col 0.3636"
        );
    }

    #[test]
    fn solution_view_names_paths_and_players() {
        let params = MarketParams::baseline().with_audit_prob(Value::ratio(1, 2));
        let game = crate::market::build_third_party_game(&params).unwrap();
        let solution = backward_induction(&game, TieBreak::FirstDeclared).unwrap();
        let view = SolutionView::new(&game, &solution);
        assert_eq!(view.players, vec!["Producer", "Consumer"]);
        let root = view
            .decisions
            .iter()
            .find(|d| d.path == "(root)")
            .expect("root decision present");
        assert_eq!(root.player, "Producer");
        let md = view.to_markdown();
        assert!(md.contains("| (root) | Producer |"));
        let csv = view.to_csv();
        assert!(csv.starts_with("node,path,player,action,tie,value_Producer,value_Consumer"));
    }

    #[test]
    fn demo_csv_concatenates_named_payloads() {
        let report = demo_report(&MarketParams::baseline()).unwrap();
        let csv = demo_csv(&report);
        assert!(csv.starts_with("# baseline\n"));
        assert!(csv.contains("\n# penalty_sweep\n"));
    }
}
