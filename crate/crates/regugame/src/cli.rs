//! Batch command-line interface.
//!
//! Five subcommands cover the library surface: `solve` (backward induction on
//! a scenario or a raw game file), `thresholds`, `sweep`, `bimatrix` and
//! `demo`. Output goes to stdout or `--out`; diagnostics go to stderr. Exit
//! codes: 0 on success, 2 for malformed input or invalid parameters, 1 for
//! domain errors such as a minimum-penalty query at audit probability zero.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bimatrix::{solve_bimatrix_2x2, Bimatrix2x2};
use crate::game::ExtensiveGame;
use crate::market::{build_scenario_game, threshold_report, MarketParams, Scenario};
use crate::policy::{demo_report, penalty_sweep, SweepError, SweepSpec};
use crate::render::{
    bimatrix_csv, bimatrix_markdown, demo_csv, sweep_markdown, sweep_rows_csv, threshold_csv,
    threshold_markdown, to_json, OutputFormat, SolutionView,
};
use crate::solver::{backward_induction, TieBreak};
use crate::value::Value;

#[derive(Parser, Debug)]
#[command(
    name = "regugame",
    version,
    about = "Monitoring and deterrence games for credence-good markets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Md,
    Csv,
    Json,
}

impl FormatArg {
    fn as_output(self) -> OutputFormat {
        match self {
            FormatArg::Md => OutputFormat::Markdown,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScenarioArg {
    Consumer,
    Reputation,
    ThirdParty,
}

impl ScenarioArg {
    fn as_scenario(self) -> Scenario {
        match self {
            ScenarioArg::Consumer => Scenario::Consumer,
            ScenarioArg::Reputation => Scenario::Reputation,
            ScenarioArg::ThirdParty => Scenario::ThirdParty,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TieBreakArg {
    First,
    Lex,
}

impl TieBreakArg {
    fn as_tie_break(self) -> TieBreak {
        match self {
            TieBreakArg::First => TieBreak::FirstDeclared,
            TieBreakArg::Lex => TieBreak::LexicographicLabel,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve a game by backward induction. With --scenario the params file
    /// is a MarketParams JSON; without it, a raw game JSON.
    Solve {
        /// Input file: MarketParams JSON (with --scenario) or game JSON.
        #[arg(long)]
        params: PathBuf,
        /// Scenario to build from the parameters.
        #[arg(long, value_enum)]
        scenario: Option<ScenarioArg>,
        /// How payoff-equal actions are resolved.
        #[arg(long, value_enum, default_value = "first")]
        tie_break: TieBreakArg,
        #[arg(long, value_enum, env = "REGUGAME_FORMAT", default_value = "md")]
        format: FormatArg,
        /// Output destination: a path, or "stdout".
        #[arg(long, default_value = "stdout")]
        out: String,
    },
    /// Closed-form deterrence thresholds for one scenario.
    Thresholds {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, value_enum)]
        scenario: ScenarioArg,
        #[arg(long, value_enum, env = "REGUGAME_FORMAT", default_value = "md")]
        format: FormatArg,
        #[arg(long, default_value = "stdout")]
        out: String,
    },
    /// Minimum-penalty sweep over an audit-probability grid.
    Sweep {
        #[arg(long)]
        params: PathBuf,
        /// Grid as start:stop:steps, e.g. 0.2:1.0:5.
        #[arg(long, default_value = "0.2:1.0:5")]
        grid: String,
        #[arg(long, value_enum, env = "REGUGAME_FORMAT", default_value = "md")]
        format: FormatArg,
        #[arg(long, default_value = "stdout")]
        out: String,
    },
    /// Pure and mixed equilibria of a 2x2 bimatrix game JSON.
    Bimatrix {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, value_enum, env = "REGUGAME_FORMAT", default_value = "md")]
        format: FormatArg,
        #[arg(long, default_value = "stdout")]
        out: String,
    },
    /// The reference numerical-case report.
    Demo {
        /// MarketParams JSON; defaults to the built-in baseline.
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long, value_enum, env = "REGUGAME_FORMAT", default_value = "md")]
        format: FormatArg,
        #[arg(long, default_value = "stdout")]
        out: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input or invalid parameters: exit code 2.
    #[error("{0}")]
    Input(String),
    /// Well-formed input that the model rejects: exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_params(path: &Path) -> Result<MarketParams, CliError> {
    let text = read_file(path)?;
    MarketParams::from_json(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn emit(out: &str, content: &str) -> Result<(), CliError> {
    if out == "stdout" {
        print!("{content}");
        Ok(())
    } else {
        fs::write(out, content)
            .map_err(|e| CliError::Input(format!("cannot write {out}: {e}")))
    }
}

/// Parses a `start:stop:steps` grid into strictly increasing exact values.
pub fn parse_grid(spec: &str) -> Result<Vec<Value>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, steps] = parts[..] else {
        return Err(CliError::Input(format!(
            "grid `{spec}` is not start:stop:steps"
        )));
    };
    let start = Value::parse(start).map_err(|e| CliError::Input(e.to_string()))?;
    let stop = Value::parse(stop).map_err(|e| CliError::Input(e.to_string()))?;
    let steps: usize = steps
        .parse()
        .map_err(|_| CliError::Input(format!("grid steps `{steps}` is not an integer")))?;
    if steps == 0 {
        return Err(CliError::Input("grid needs at least one step".to_string()));
    }
    if steps == 1 {
        if start != stop {
            return Err(CliError::Input(
                "a single-step grid needs start == stop".to_string(),
            ));
        }
        return Ok(vec![start]);
    }
    if start >= stop {
        return Err(CliError::Input(
            "grid start must be below stop".to_string(),
        ));
    }
    let span = &stop - &start;
    let last = Value::from((steps - 1) as i64);
    Ok((0..steps)
        .map(|k| &start + &(&span * &Value::from(k as i64) / &last))
        .collect())
}

fn sweep_error(e: SweepError) -> CliError {
    match e {
        SweepError::Params(inner) => CliError::Input(inner.to_string()),
        other => CliError::Domain(other.to_string()),
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve {
            params,
            scenario,
            tie_break,
            format,
            out,
        } => {
            let game = match scenario {
                Some(arg) => {
                    let market = load_params(params)?;
                    build_scenario_game(&market, arg.as_scenario())
                        .map_err(|e| CliError::Input(e.to_string()))?
                }
                None => {
                    let text = read_file(params)?;
                    ExtensiveGame::from_json(&text)
                        .map_err(|e| CliError::Input(e.to_string()))?
                }
            };
            let solution = backward_induction(&game, tie_break.as_tie_break())
                .map_err(|e| CliError::Input(e.to_string()))?;
            let view = SolutionView::new(&game, &solution);
            let content = match format.as_output() {
                OutputFormat::Markdown => view.to_markdown(),
                OutputFormat::Csv => view.to_csv(),
                OutputFormat::Json => to_json(&view),
            };
            emit(out, &content)
        }
        Command::Thresholds {
            params,
            scenario,
            format,
            out,
        } => {
            let market = load_params(params)?;
            let report = threshold_report(&market, scenario.as_scenario())
                .map_err(|e| CliError::Input(e.to_string()))?;
            let content = match format.as_output() {
                OutputFormat::Markdown => threshold_markdown(&report),
                OutputFormat::Csv => threshold_csv(&report),
                OutputFormat::Json => to_json(&report),
            };
            emit(out, &content)
        }
        Command::Sweep {
            params,
            grid,
            format,
            out,
        } => {
            let market = load_params(params)?;
            let grid = parse_grid(grid)?;
            let spec = SweepSpec::over_audit_prob(grid, market);
            let rows = penalty_sweep(&spec).map_err(sweep_error)?;
            let content = match format.as_output() {
                OutputFormat::Markdown => sweep_markdown(&rows),
                OutputFormat::Csv => sweep_rows_csv(&rows),
                OutputFormat::Json => to_json(&rows),
            };
            emit(out, &content)
        }
        Command::Bimatrix {
            params,
            format,
            out,
        } => {
            let text = read_file(params)?;
            let game =
                Bimatrix2x2::from_json(&text).map_err(|e| CliError::Input(e.to_string()))?;
            let solution = solve_bimatrix_2x2(&game);
            let content = match format.as_output() {
                OutputFormat::Markdown => bimatrix_markdown(&game, &solution),
                OutputFormat::Csv => bimatrix_csv(&game, &solution),
                OutputFormat::Json => to_json(&solution),
            };
            emit(out, &content)
        }
        Command::Demo {
            params,
            format,
            out,
        } => {
            let market = match params {
                Some(path) => load_params(path)?,
                None => MarketParams::baseline(),
            };
            let report = demo_report(&market).map_err(sweep_error)?;
            let content = match format.as_output() {
                OutputFormat::Markdown => report.markdown.clone(),
                OutputFormat::Csv => demo_csv(&report),
                OutputFormat::Json => to_json(&report),
            };
            emit(out, &content)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let grid = parse_grid("0.2:1.0:5").unwrap();
        let expected: Vec<Value> = (1..=5).map(|k| Value::ratio(k, 5)).collect();
        assert_eq!(grid, expected);
        assert_eq!(parse_grid("0.5:0.5:1").unwrap(), vec![Value::ratio(1, 2)]);
        assert!(parse_grid("0.2:1.0").is_err());
        assert!(parse_grid("1.0:0.2:5").is_err());
        assert!(parse_grid("0.2:1.0:0").is_err());
        assert!(parse_grid("0.2:0.3:1").is_err());
        assert!(parse_grid("x:1:5").is_err());
    }

    #[test]
    fn grid_values_are_exact_rationals() {
        let grid = parse_grid("0:1:3").unwrap();
        assert_eq!(
            grid,
            vec![Value::zero(), Value::ratio(1, 2), Value::one()]
        );
    }
}
