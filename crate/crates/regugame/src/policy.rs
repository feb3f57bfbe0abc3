//! Parameter sweeps, equilibrium-regime classification and the reproducible
//! numerical-case report.
//!
//! Everything here is a pure function of its inputs, so reports are
//! byte-stable across runs. CSV payloads carry each numeric column twice:
//! a decimal rendering for spreadsheets and an exact-fraction side column
//! (`*_exact`) so that parsing a payload recovers the original values
//! losslessly.

use serde::Serialize;
use thiserror::Error;

use crate::game::PlayerId;
use crate::market::{
    build_scenario_game, dishonest_expected_payoff, honest_payoff, r_feasibility_bound,
    third_party_min_penalty, threshold_report, MarketParams, ParamsError, PenaltyBound,
    RegionBound, Scenario, ThresholdError, ThresholdReport, Verdict,
};
use crate::solver::{backward_induction, SolveError, TieBreak};
use crate::value::Value;

/// Which parameter a sweep varies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SweepParameter {
    /// Audit probability `r`.
    AuditProb,
    /// Penalty `p`.
    Penalty,
    /// Monitoring cost `m`.
    MonitorCost,
    /// Reputational loss `t`.
    ReputationLoss,
}

impl SweepParameter {
    pub fn symbol(self) -> &'static str {
        match self {
            SweepParameter::AuditProb => "r",
            SweepParameter::Penalty => "p",
            SweepParameter::MonitorCost => "m",
            SweepParameter::ReputationLoss => "t",
        }
    }

    pub fn parse(s: &str) -> Option<SweepParameter> {
        match s {
            "r" => Some(SweepParameter::AuditProb),
            "p" => Some(SweepParameter::Penalty),
            "m" => Some(SweepParameter::MonitorCost),
            "t" => Some(SweepParameter::ReputationLoss),
            _ => None,
        }
    }
}

/// A sweep request: the varied parameter, its grid, and the fixed remainder.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub grid: Vec<Value>,
    pub fixed: MarketParams,
}

impl SweepSpec {
    /// Sweeps the audit probability over `grid` with everything else fixed.
    pub fn over_audit_prob(grid: Vec<Value>, fixed: MarketParams) -> Self {
        SweepSpec {
            parameter: SweepParameter::AuditProb,
            grid,
            fixed,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        self.fixed.validate()?;
        if self.grid.is_empty() {
            return Err(SweepError::EmptyGrid);
        }
        for pair in self.grid.windows(2) {
            if pair[0] >= pair[1] {
                return Err(SweepError::NotIncreasing {
                    at: pair[1].fraction_string(),
                });
            }
        }
        for value in &self.grid {
            let in_range = match self.parameter {
                SweepParameter::AuditProb => !value.is_negative() && *value <= Value::one(),
                _ => !value.is_negative(),
            };
            if !in_range {
                return Err(SweepError::OutOfRange {
                    symbol: self.parameter.symbol(),
                    value: value.fraction_string(),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep grid is empty")]
    EmptyGrid,
    #[error("sweep grid is not strictly increasing at {at}")]
    NotIncreasing { at: String },
    #[error("grid value {value} is outside the legal range of {symbol}")]
    OutOfRange { symbol: &'static str, value: String },
    #[error("penalty sweeps vary the audit probability r, not {symbol}")]
    UnsupportedParameter { symbol: &'static str },
    #[error("audit probability 0 in the grid: the minimum penalty is unbounded there")]
    ZeroAuditProb,
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("bad CSV payload: {0}")]
    Csv(String),
}

/// Regime of one grid cell, decided by exact comparison against the
/// deterrence threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CellVerdict {
    Honest,
    Fraud,
    /// The penalty sits exactly on the threshold: both producer strategies
    /// tie and the regime is not assigned.
    Tie,
}

impl CellVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CellVerdict::Honest => "honest",
            CellVerdict::Fraud => "fraud",
            CellVerdict::Tie => "tie",
        }
    }

    fn parse(s: &str) -> Option<CellVerdict> {
        match s {
            "honest" => Some(CellVerdict::Honest),
            "fraud" => Some(CellVerdict::Fraud),
            "tie" => Some(CellVerdict::Tie),
            _ => None,
        }
    }
}

impl std::fmt::Display for CellVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One row of a penalty sweep: the swept audit probability, the minimum
/// deterring penalty there, the regime at the fixed penalty, and the two
/// producer payoffs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub swept: Value,
    pub p_min: Value,
    pub verdict: CellVerdict,
    pub honest: Value,
    pub dishonest: Value,
}

fn cell_verdict(penalty: &Value, p_min: &Value) -> CellVerdict {
    match penalty.cmp(p_min) {
        std::cmp::Ordering::Greater => CellVerdict::Honest,
        std::cmp::Ordering::Less => CellVerdict::Fraud,
        std::cmp::Ordering::Equal => CellVerdict::Tie,
    }
}

/// Minimum-penalty sweep over an audit-probability grid. The `p_min` column
/// is nonincreasing in `r`; each row also evaluates the producer's honest
/// and expected fraudulent payoff at the sweep's fixed penalty.
pub fn penalty_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>, SweepError> {
    spec.validate()?;
    if spec.parameter != SweepParameter::AuditProb {
        return Err(SweepError::UnsupportedParameter {
            symbol: spec.parameter.symbol(),
        });
    }
    if spec.grid.iter().any(Value::is_zero) {
        return Err(SweepError::ZeroAuditProb);
    }
    let mut rows = Vec::with_capacity(spec.grid.len());
    for r in &spec.grid {
        let params = spec.fixed.clone().with_audit_prob(r.clone());
        let p_min = match third_party_min_penalty(&params) {
            Ok(p) => p,
            Err(ThresholdError::NeverAudited) => unreachable!("grid zeros rejected above"),
            Err(ThresholdError::Params(e)) => return Err(e.into()),
        };
        let verdict = cell_verdict(&params.penalty, &p_min);
        rows.push(SweepRow {
            swept: r.clone(),
            p_min,
            verdict,
            honest: honest_payoff(&params),
            dishonest: dishonest_expected_payoff(&params),
        });
    }
    debug_assert!(
        rows.windows(2).all(|w| w[0].p_min >= w[1].p_min),
        "p_min must be nonincreasing in r"
    );
    Ok(rows)
}

/// How the threshold verdict compares with the solved game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CrossCheck {
    /// The solver's producer choice matches the threshold verdict.
    Agrees,
    /// They differ away from any boundary.
    Disagrees,
    /// The parameters sit on the deterrence boundary; both strategies tie.
    Boundary,
}

/// Producer behaviour read off the solved game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProducerChoice {
    Honest,
    Fraud,
    Tie,
}

/// Threshold verdict for a scenario together with a solver cross-check: the
/// scenario game is built, the consumer is pinned to the cooperative strategy
/// the thresholds presuppose (monitor-and-buy, or plain buy under third-party
/// audits), and backward induction reveals the producer's best response.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub scenario: Scenario,
    pub report: ThresholdReport,
    pub producer_choice: ProducerChoice,
    pub cross_check: CrossCheck,
}

const CONSUMER: PlayerId = PlayerId(1);

pub fn classify_equilibrium(
    params: &MarketParams,
    scenario: Scenario,
) -> Result<Classification, SweepError> {
    let report = threshold_report(params, scenario)?;
    let game = build_scenario_game(params, scenario)?;
    let compliant: &[&str] = match scenario {
        Scenario::Consumer | Scenario::Reputation => &["monitor", "buy"],
        Scenario::ThirdParty => &["buy"],
    };
    let restricted = game
        .restrict_actions(CONSUMER, compliant)
        .expect("scenario games expose the compliant actions");
    let solution = backward_induction(&restricted, TieBreak::FirstDeclared)?;
    let root = restricted.root();
    let producer_choice = if solution.has_tie_at(root) {
        ProducerChoice::Tie
    } else {
        match solution.chosen_at(root) {
            Some("organic") => ProducerChoice::Honest,
            _ => ProducerChoice::Fraud,
        }
    };
    let boundary = match (&report.p_min, scenario) {
        (PenaltyBound::Finite(p_min), Scenario::ThirdParty) => {
            (&params.penalty - p_min).abs() <= Value::ratio(1, 1_000_000_000)
        }
        _ => producer_choice == ProducerChoice::Tie,
    };
    let cross_check = if boundary {
        CrossCheck::Boundary
    } else {
        let honest_predicted = report.verdict == Verdict::HonestTrade;
        let honest_solved = producer_choice == ProducerChoice::Honest;
        if honest_predicted == honest_solved {
            CrossCheck::Agrees
        } else {
            CrossCheck::Disagrees
        }
    };
    Ok(Classification {
        scenario,
        report,
        producer_choice,
        cross_check,
    })
}

/// Regime verdicts over an `(r, p)` grid: rows indexed by penalty, columns by
/// audit probability. The honest region is upward-closed in `p` and
/// rightward-closed in `r`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeasibilityGrid {
    pub r_grid: Vec<Value>,
    pub p_grid: Vec<Value>,
    /// `cells[pi][ri]`, row-major.
    pub cells: Vec<Vec<CellVerdict>>,
}

pub fn feasibility_grid(
    params: &MarketParams,
    r_grid: &[Value],
    p_grid: &[Value],
) -> Result<FeasibilityGrid, SweepError> {
    params.validate()?;
    for (name, grid) in [("r", r_grid), ("p", p_grid)] {
        if grid.is_empty() {
            return Err(SweepError::EmptyGrid);
        }
        for pair in grid.windows(2) {
            if pair[0] >= pair[1] {
                return Err(SweepError::NotIncreasing {
                    at: format!("{} (grid {})", pair[1].fraction_string(), name),
                });
            }
        }
    }
    if r_grid.iter().any(Value::is_negative) || r_grid.iter().any(|r| *r > Value::one()) {
        return Err(SweepError::OutOfRange {
            symbol: "r",
            value: "outside [0, 1]".to_string(),
        });
    }
    let mut cells = Vec::with_capacity(p_grid.len());
    for p in p_grid {
        if p.is_negative() {
            return Err(SweepError::OutOfRange {
                symbol: "p",
                value: p.fraction_string(),
            });
        }
        let mut row = Vec::with_capacity(r_grid.len());
        for r in r_grid {
            let cell = if r.is_zero() {
                // Audits never happen: the penalty floor is unbounded.
                CellVerdict::Fraud
            } else {
                let params = params.clone().with_audit_prob(r.clone());
                let p_min = match third_party_min_penalty(&params) {
                    Ok(v) => v,
                    Err(ThresholdError::NeverAudited) => unreachable!("r > 0 here"),
                    Err(ThresholdError::Params(e)) => return Err(e.into()),
                };
                cell_verdict(p, &p_min)
            };
            row.push(cell);
        }
        cells.push(row);
    }
    debug_assert!(honest_region_closed(&cells));
    Ok(FeasibilityGrid {
        r_grid: r_grid.to_vec(),
        p_grid: p_grid.to_vec(),
        cells,
    })
}

fn honest_region_closed(cells: &[Vec<CellVerdict>]) -> bool {
    let rows = cells.len();
    for (pi, row) in cells.iter().enumerate() {
        for (ri, cell) in row.iter().enumerate() {
            if *cell == CellVerdict::Honest {
                let up = (pi + 1..rows).all(|pj| cells[pj][ri] == CellVerdict::Honest);
                let right = (ri + 1..row.len()).all(|rj| cells[pi][rj] == CellVerdict::Honest);
                if !up || !right {
                    return false;
                }
            }
        }
    }
    true
}

/// One named CSV payload of a [`DemoReport`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedCsv {
    pub name: &'static str,
    pub csv: String,
}

/// The reproducible numerical-case report: a parameter echo, the producer's
/// honest and expected fraudulent payoffs, the minimum-penalty table over the
/// reference audit grid, the consumer purchase check, and the
/// audit-probability feasibility verdict. Byte-stable across runs.
#[derive(Clone, Debug, Serialize)]
pub struct DemoReport {
    pub markdown: String,
    pub csv_payloads: Vec<NamedCsv>,
    pub sweep_rows: Vec<SweepRow>,
    pub honest: Value,
    pub consumer: ThresholdReport,
    pub region: RegionBound,
}

/// The audit-probability grid the demo sweeps: 0.2 through 1.0 in fifths.
pub fn demo_grid() -> Vec<Value> {
    (1..=5).map(|k| Value::ratio(k, 5)).collect()
}

pub fn demo_report(params: &MarketParams) -> Result<DemoReport, SweepError> {
    params.validate()?;
    let spec = SweepSpec::over_audit_prob(demo_grid(), params.clone());
    let sweep_rows = penalty_sweep(&spec)?;
    let honest = honest_payoff(params);
    let consumer = threshold_report(params, Scenario::Consumer)?;
    let region = r_feasibility_bound(params)?;

    let a = &params.price_organic;
    let d = &params.price_conventional;
    let k_o = &params.cost_organic;
    let k_c = &params.cost_conventional;
    let s = &params.utility_organic;
    let f = &params.utility_conventional;

    let mut md = String::new();
    md.push_str("# Regulation game: numerical case\n\n");
    md.push_str("## Baseline parameters\n\n");
    md.push_str("| symbol | description | value |\n|---|---|---|\n");
    for (symbol, description, value) in [
        ("a", "price of organic food", a),
        ("d", "price of conventional food", d),
        ("K_o", "cost of organic production", k_o),
        ("K_c", "cost of conventional production", k_c),
        ("s", "utility from organic consumption", s),
        ("f", "utility from conventional consumption", f),
        ("m", "monitoring cost", &params.monitor_cost),
        ("p", "penalty", &params.penalty),
        ("t", "reputational loss", &params.reputation_loss),
        ("r", "audit probability", &params.audit_prob),
    ] {
        md.push_str(&format!("| {symbol} | {description} | {value} |\n"));
    }

    md.push_str("\n## Producer payoffs under third-party audits\n\n");
    md.push_str(&format!("honest = {honest}\n\n"));
    md.push_str(&format!(
        "dishonest(r, p) = r*({caught} - p) + (1 - r)*{unseen}, at p = {p}:\n\n",
        caught = d - k_c,
        unseen = a - k_c,
        p = params.penalty,
    ));
    for row in &sweep_rows {
        md.push_str(&format!(
            "- r = {r}: dishonest = {v}\n",
            r = row.swept,
            v = row.dishonest
        ));
    }

    md.push_str("\n## Minimum penalty by audit probability\n\n");
    md.push_str("| r | p_min | p_min (exact) | verdict at p |\n|---|---|---|---|\n");
    for row in &sweep_rows {
        md.push_str(&format!(
            "| {r} | {p} | {exact} | {verdict} |\n",
            r = row.swept,
            p = row.p_min,
            exact = row.p_min.fraction_string(),
            verdict = row.verdict,
        ));
    }

    md.push_str("\n## Consumer purchase condition\n\n");
    let buy_ok = consumer
        .conditions
        .iter()
        .find(|c| c.name == "buy")
        .map(|c| c.satisfied)
        .unwrap_or(false);
    md.push_str(&format!(
        "buy requires s > a: {s} > {a} is {answer}\n\n",
        answer = if buy_ok { "satisfied" } else { "violated" },
    ));
    let m_max = consumer.m_max.clone().expect("consumer report has m_max");
    md.push_str(&format!(
        "p_min = {p}, m_max = {m}\n",
        p = consumer.p_min,
        m = m_max
    ));

    md.push_str("\n## Audit-probability feasibility\n\n");
    match &region.bound {
        Some(bound) => {
            let status = if region.feasible {
                "feasible"
            } else {
                "infeasible"
            };
            md.push_str(&format!(
                "r_bound = {exact} ≈ {approx}, {status}\n",
                exact = bound.fraction_string(),
                approx = bound.decimal_places(4),
            ));
        }
        None => md.push_str("r_bound undefined: the bound's denominator vanishes\n"),
    }

    let csv_payloads = vec![
        NamedCsv {
            name: "baseline",
            csv: baseline_csv(params),
        },
        NamedCsv {
            name: "penalty_sweep",
            csv: sweep_csv(&sweep_rows),
        },
    ];

    Ok(DemoReport {
        markdown: md,
        csv_payloads,
        sweep_rows,
        honest,
        consumer,
        region,
    })
}

fn baseline_csv(params: &MarketParams) -> String {
    let mut out = String::from("symbol,description,value,value_exact\n");
    for (symbol, description, value) in [
        ("a", "price of organic food", &params.price_organic),
        ("d", "price of conventional food", &params.price_conventional),
        ("K_o", "cost of organic production", &params.cost_organic),
        (
            "K_c",
            "cost of conventional production",
            &params.cost_conventional,
        ),
        ("s", "utility from organic consumption", &params.utility_organic),
        (
            "f",
            "utility from conventional consumption",
            &params.utility_conventional,
        ),
        ("m", "monitoring cost", &params.monitor_cost),
        ("p", "penalty", &params.penalty),
        ("t", "reputational loss", &params.reputation_loss),
        ("r", "audit probability", &params.audit_prob),
    ] {
        out.push_str(&format!(
            "{symbol},{description},{value},{exact}\n",
            exact = value.fraction_string()
        ));
    }
    out
}

/// Renders sweep rows as CSV with exact-fraction side columns.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "r,r_exact,p_min,p_min_exact,honest,honest_exact,dishonest,dishonest_exact,verdict\n",
    );
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.swept,
            row.swept.fraction_string(),
            row.p_min,
            row.p_min.fraction_string(),
            row.honest,
            row.honest.fraction_string(),
            row.dishonest,
            row.dishonest.fraction_string(),
            row.verdict,
        ));
    }
    out
}

/// Parses a payload produced by [`sweep_csv`], recovering the exact values
/// from the `*_exact` columns.
pub fn parse_sweep_csv(csv: &str) -> Result<Vec<SweepRow>, SweepError> {
    let mut lines = csv.lines();
    let header = lines.next().ok_or_else(|| SweepError::Csv("empty".into()))?;
    let expected =
        "r,r_exact,p_min,p_min_exact,honest,honest_exact,dishonest,dishonest_exact,verdict";
    if header != expected {
        return Err(SweepError::Csv(format!("unexpected header `{header}`")));
    }
    let mut rows = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 9 {
            return Err(SweepError::Csv(format!(
                "expected 9 fields, found {} in `{line}`",
                fields.len()
            )));
        }
        let value = |s: &str| {
            Value::parse(s).map_err(|e| SweepError::Csv(format!("bad number in `{line}`: {e}")))
        };
        rows.push(SweepRow {
            swept: value(fields[1])?,
            p_min: value(fields[3])?,
            honest: value(fields[5])?,
            dishonest: value(fields[7])?,
            verdict: CellVerdict::parse(fields[8])
                .ok_or_else(|| SweepError::Csv(format!("bad verdict in `{line}`")))?,
        });
    }
    Ok(rows)
}
