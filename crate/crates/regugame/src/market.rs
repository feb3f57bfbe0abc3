//! Market parameters, the three producer–consumer monitoring scenarios, and
//! their closed-form deterrence thresholds.
//!
//! All scenarios share one parameter set ([`MarketParams`]): prices for
//! organic and conventional goods, production costs, consumption utilities,
//! the monitoring cost, the fraud penalty, a reputational loss, and the audit
//! probability. Three builders turn a parameter set into a solvable game
//! tree:
//!
//! - [`build_consumer_monitoring_game`]: the consumer decides whether to pay
//!   for monitoring before buying; a caught fraudster pays the penalty.
//! - [`build_reputation_game`]: as above, but a caught fraudster also loses
//!   the sale (payoff `-p - m`), and an undetected fraud costs the buyer a
//!   reputational loss `t` on top of the organic price.
//! - [`build_third_party_game`]: an external auditor catches fraud with
//!   probability `r`; a revealed product sells at the conventional price.
//!
//! The threshold calculators answer the planner's question directly: how
//! large must the penalty (or how small the monitoring cost, or how frequent
//! the audit) be for honest trade to be the producer's best response.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{chance, decision, terminal, ExtensiveGame, GameNodeSpec};
use crate::value::Value;

/// Economic parameters shared by every scenario.
///
/// Invariants: `price_organic >= price_conventional`,
/// `cost_organic > cost_conventional >= 0`,
/// `utility_organic >= utility_conventional` (equality models goods the
/// consumer cannot tell apart), and `monitor_cost`, `penalty`,
/// `reputation_loss` nonnegative with `audit_prob` in [0, 1].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarketParams {
    /// Price of organic food (`a`).
    pub price_organic: Value,
    /// Price of conventional food (`d`).
    pub price_conventional: Value,
    /// Cost of organic production (`K_o`).
    pub cost_organic: Value,
    /// Cost of conventional production (`K_c`).
    pub cost_conventional: Value,
    /// Utility from consuming organic food (`s`).
    pub utility_organic: Value,
    /// Utility from consuming conventional food (`f`).
    pub utility_conventional: Value,
    /// Cost of monitoring (`m`).
    pub monitor_cost: Value,
    /// Fine for fraud caught by monitoring (`p`).
    pub penalty: Value,
    /// Market loss borne by a buyer deceived without monitoring (`t`).
    #[serde(default)]
    pub reputation_loss: Value,
    /// Probability that a third-party audit catches fraud (`r`).
    #[serde(default)]
    pub audit_prob: Value,
}

#[derive(Debug, Error)]
pub enum ParamsError {
    #[error("invalid market parameters: {}", violations.join("; "))]
    Invalid { violations: Vec<String> },
    #[error("bad parameter JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Raised when a threshold is undefined for the given parameters.
#[derive(Debug, Error)]
pub enum ThresholdError {
    #[error("deterrence infeasible: with audit probability 0 the penalty is never applied")]
    NeverAudited,
    #[error(transparent)]
    Params(#[from] ParamsError),
}

impl MarketParams {
    /// The reference parameter set used by the demo report: organic sells at
    /// 12 against a conventional price of 8, costs are 7 vs 3, and utilities
    /// 14 vs 8. Penalty, monitoring cost, reputational loss and audit
    /// probability start at zero.
    pub fn baseline() -> Self {
        MarketParams {
            price_organic: Value::from(12),
            price_conventional: Value::from(8),
            cost_organic: Value::from(7),
            cost_conventional: Value::from(3),
            utility_organic: Value::from(14),
            utility_conventional: Value::from(8),
            monitor_cost: Value::zero(),
            penalty: Value::zero(),
            reputation_loss: Value::zero(),
            audit_prob: Value::zero(),
        }
    }

    pub fn with_penalty(mut self, p: impl Into<Value>) -> Self {
        self.penalty = p.into();
        self
    }

    pub fn with_monitor_cost(mut self, m: impl Into<Value>) -> Self {
        self.monitor_cost = m.into();
        self
    }

    pub fn with_reputation_loss(mut self, t: impl Into<Value>) -> Self {
        self.reputation_loss = t.into();
        self
    }

    pub fn with_audit_prob(mut self, r: impl Into<Value>) -> Self {
        self.audit_prob = r.into();
        self
    }

    /// Extra cost of producing organically: `c = K_o - K_c`, the margin a
    /// fraudster pockets by faking the claim.
    pub fn cost_gap(&self) -> Value {
        &self.cost_organic - &self.cost_conventional
    }

    pub fn validate(&self) -> Result<(), ParamsError> {
        let mut violations = Vec::new();
        if self.price_organic < self.price_conventional {
            violations.push(format!(
                "price_organic ({}) must be >= price_conventional ({})",
                self.price_organic, self.price_conventional
            ));
        }
        if self.cost_organic <= self.cost_conventional {
            violations.push(format!(
                "cost_organic ({}) must exceed cost_conventional ({})",
                self.cost_organic, self.cost_conventional
            ));
        }
        if self.cost_conventional.is_negative() {
            violations.push(format!(
                "cost_conventional ({}) must be >= 0",
                self.cost_conventional
            ));
        }
        if self.utility_organic < self.utility_conventional {
            violations.push(format!(
                "utility_organic ({}) must be >= utility_conventional ({})",
                self.utility_organic, self.utility_conventional
            ));
        }
        for (name, value) in [
            ("monitor_cost", &self.monitor_cost),
            ("penalty", &self.penalty),
            ("reputation_loss", &self.reputation_loss),
        ] {
            if value.is_negative() {
                violations.push(format!("{name} ({value}) must be >= 0"));
            }
        }
        if self.audit_prob.is_negative() || self.audit_prob > Value::one() {
            violations.push(format!(
                "audit_prob ({}) must lie in [0, 1]",
                self.audit_prob
            ));
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ParamsError::Invalid { violations })
        }
    }

    pub fn from_json(json: &str) -> Result<Self, ParamsError> {
        let params: MarketParams = serde_json::from_str(json)?;
        params.validate()?;
        Ok(params)
    }

    /// Multiplies every currency-denominated field by `factor`, leaving the
    /// audit probability untouched. Thresholds scale with it; verdicts away
    /// from equality boundaries do not change.
    pub fn scale_currency(&self, factor: &Value) -> MarketParams {
        MarketParams {
            price_organic: factor * &self.price_organic,
            price_conventional: factor * &self.price_conventional,
            cost_organic: factor * &self.cost_organic,
            cost_conventional: factor * &self.cost_conventional,
            utility_organic: factor * &self.utility_organic,
            utility_conventional: factor * &self.utility_conventional,
            monitor_cost: factor * &self.monitor_cost,
            penalty: factor * &self.penalty,
            reputation_loss: factor * &self.reputation_loss,
            audit_prob: self.audit_prob.clone(),
        }
    }
}

/// The three monitoring scenarios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Consumer,
    Reputation,
    ThirdParty,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Consumer => "consumer",
            Scenario::Reputation => "reputation",
            Scenario::ThirdParty => "third-party",
        }
    }

    pub fn parse(s: &str) -> Option<Scenario> {
        match s {
            "consumer" => Some(Scenario::Consumer),
            "reputation" => Some(Scenario::Reputation),
            "third-party" | "third_party" => Some(Scenario::ThirdParty),
            _ => None,
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Overall reading of a scenario at the given parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Honest production and purchase form an equilibrium.
    HonestTrade,
    /// Fraud is (weakly) profitable somewhere on the equilibrium path.
    FraudRisk,
    /// No pure strategy profile is stable.
    NoPureEquilibrium,
    /// The market breaks down regardless of honesty (e.g. the buyer never
    /// values the good above its price).
    Infeasible,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::HonestTrade => "HonestTrade",
            Verdict::FraudRisk => "FraudRisk",
            Verdict::NoPureEquilibrium => "NoPureEquilibrium",
            Verdict::Infeasible => "Infeasible",
        };
        f.write_str(s)
    }
}

/// A minimum penalty, which may be unattainable (no audit ever happens).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum PenaltyBound {
    Finite(Value),
    Infinite,
}

impl PenaltyBound {
    pub fn as_finite(&self) -> Option<&Value> {
        match self {
            PenaltyBound::Finite(v) => Some(v),
            PenaltyBound::Infinite => None,
        }
    }
}

impl std::fmt::Display for PenaltyBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PenaltyBound::Finite(v) => write!(f, "{v}"),
            PenaltyBound::Infinite => f.write_str("inf"),
        }
    }
}

/// One named inequality, evaluated at the current parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub inequality: String,
    pub satisfied: bool,
}

/// Closed-form thresholds and the condition checklist for one scenario.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub scenario: Scenario,
    /// Smallest penalty that deters fraud (strictness depends on scenario).
    pub p_min: PenaltyBound,
    /// Largest monitoring cost the consumer will pay (consumer scenario).
    pub m_max: Option<Value>,
    /// Smallest reputational loss that blocks blind purchases (reputation
    /// scenario). May be negative, in which case any `t >= 0` suffices.
    pub t_min: Option<Value>,
    /// Audit probability above which no penalty is needed at all
    /// (third-party scenario); `None` when its denominator vanishes.
    pub r_bound: Option<Value>,
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    /// Reading of the subgame where monitoring never happens (reputation
    /// scenario only): the cheat/refuse cycle admits no pure equilibrium.
    pub unmonitored_verdict: Option<Verdict>,
    pub notes: Vec<String>,
}

/// Feasibility of deterring fraud through the audit probability alone.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionBound {
    /// `(2a - 2K_o + c) / (a - K_o + c)`; audits deter without any penalty
    /// only when the probability exceeds this.
    pub bound: Option<Value>,
    /// True when some probability in (0, 1] clears the bound.
    pub feasible: bool,
    /// True when the bound's denominator `a - K_o + c` is positive, the only
    /// regime in which the inequality direction is meaningful.
    pub denominator_sign_ok: bool,
}

const PRODUCER: usize = 0;
const CONSUMER: usize = 1;

fn purchase_node(buy: (Value, Value), dont_buy: (Value, Value)) -> GameNodeSpec {
    decision(
        CONSUMER,
        [
            ("buy", terminal([buy.0, buy.1])),
            ("dont-buy", terminal([dont_buy.0, dont_buy.1])),
        ],
    )
}

/// The consumer-monitoring game: the producer claims organic (honestly or
/// not), then the consumer decides whether to monitor and whether to buy.
///
/// Terminal payoffs are (producer, consumer); with `a, d` the two prices,
/// `K_o, K_c` the two costs, `s, f` the two utilities, `m` the monitoring
/// cost and `p` the penalty:
///
/// ```text
/// organic, monitor:     buy (a-K_o, s-a-m)     dont-buy (-K_o, -m)
/// organic, not-monitor: buy (a-K_o, s-a)       dont-buy (-K_o, 0)
/// fraud,   monitor:     buy (a-p-K_c, f-d-m)   dont-buy (-p-K_c, -m)
/// fraud,   not-monitor: buy (a-K_c, f-d)       dont-buy (-K_c, 0)
/// ```
///
/// The penalty applies on detection whether or not the sale happens.
pub fn build_consumer_monitoring_game(
    params: &MarketParams,
) -> Result<ExtensiveGame, ParamsError> {
    params.validate()?;
    let a = &params.price_organic;
    let d = &params.price_conventional;
    let k_o = &params.cost_organic;
    let k_c = &params.cost_conventional;
    let s = &params.utility_organic;
    let f = &params.utility_conventional;
    let m = &params.monitor_cost;
    let p = &params.penalty;

    let organic_branch = decision(
        CONSUMER,
        [
            (
                "monitor",
                purchase_node((a - k_o, s - a - m), (-k_o, -m)),
            ),
            (
                "not-monitor",
                purchase_node((a - k_o, s - a), (-k_o, Value::zero())),
            ),
        ],
    );
    let fraud_branch = decision(
        CONSUMER,
        [
            (
                "monitor",
                purchase_node((a - p - k_c, f - d - m), (-p - k_c, -m)),
            ),
            (
                "not-monitor",
                purchase_node((a - k_c, f - d), (-k_c, Value::zero())),
            ),
        ],
    );
    Ok(ExtensiveGame::new(
        ["Producer", "Consumer"],
        decision(
            PRODUCER,
            [("organic", organic_branch), ("fraud", fraud_branch)],
        ),
    ))
}

/// The reputation variant of the consumer-monitoring game. Two payoffs
/// change: a monitored fraudster loses the sale as well as the fine
/// (producer payoff `-p - m` at both monitored fraud terminals), and a buyer
/// deceived without monitoring bears the reputational loss `t` on top of
/// paying the organic price for a conventional good (consumer payoff
/// `f - a - t`).
pub fn build_reputation_game(params: &MarketParams) -> Result<ExtensiveGame, ParamsError> {
    params.validate()?;
    let a = &params.price_organic;
    let d = &params.price_conventional;
    let k_o = &params.cost_organic;
    let k_c = &params.cost_conventional;
    let s = &params.utility_organic;
    let f = &params.utility_conventional;
    let m = &params.monitor_cost;
    let p = &params.penalty;
    let t = &params.reputation_loss;

    let organic_branch = decision(
        CONSUMER,
        [
            (
                "monitor",
                purchase_node((a - k_o, s - a - m), (-k_o, -m)),
            ),
            (
                "not-monitor",
                purchase_node((a - k_o, s - a), (-k_o, Value::zero())),
            ),
        ],
    );
    let caught = -p - m;
    let fraud_branch = decision(
        CONSUMER,
        [
            (
                "monitor",
                purchase_node((caught.clone(), f - d - m), (caught, -m)),
            ),
            (
                "not-monitor",
                purchase_node((a - k_c, f - a - t), (-k_c, Value::zero())),
            ),
        ],
    );
    Ok(ExtensiveGame::new(
        ["Producer", "Consumer"],
        decision(
            PRODUCER,
            [("organic", organic_branch), ("fraud", fraud_branch)],
        ),
    ))
}

/// The third-party monitoring game. The producer's fraudulent claim is
/// audited with probability `r`; a revealed product sells at the
/// conventional price `d` and triggers the penalty, an unrevealed one sells
/// at the organic price `a`.
///
/// ```text
/// organic:           buy (a-K_o, s-a)        dont-buy (-K_o, 0)
/// fraud, audited:    buy (d-p-K_c, f-d)      dont-buy (-p-K_c, 0)
/// fraud, unaudited:  buy (a-K_c, f-a)        dont-buy (-K_c, 0)
/// ```
pub fn build_third_party_game(params: &MarketParams) -> Result<ExtensiveGame, ParamsError> {
    params.validate()?;
    let a = &params.price_organic;
    let d = &params.price_conventional;
    let k_o = &params.cost_organic;
    let k_c = &params.cost_conventional;
    let s = &params.utility_organic;
    let f = &params.utility_conventional;
    let p = &params.penalty;
    let r = &params.audit_prob;

    let organic_branch = purchase_node((a - k_o, s - a), (-k_o, Value::zero()));
    let fraud_branch = chance([
        (
            "audited",
            r.clone(),
            purchase_node((d - p - k_c, f - d), (-p - k_c, Value::zero())),
        ),
        (
            "unaudited",
            Value::one() - r,
            purchase_node((a - k_c, f - a), (-k_c, Value::zero())),
        ),
    ]);
    Ok(ExtensiveGame::new(
        ["Producer", "Consumer"],
        decision(
            PRODUCER,
            [("organic", organic_branch), ("fraud", fraud_branch)],
        ),
    ))
}

/// An honest producer's margin: `a - K_o`.
pub fn honest_payoff(params: &MarketParams) -> Value {
    &params.price_organic - &params.cost_organic
}

/// A fraudulent producer's expected margin under third-party audits:
/// `r*(d - p - K_c) + (1 - r)*(a - K_c)`.
pub fn dishonest_expected_payoff(params: &MarketParams) -> Value {
    let r = &params.audit_prob;
    let caught = &params.price_conventional - &params.penalty - &params.cost_conventional;
    let unseen = &params.price_organic - &params.cost_conventional;
    r * &caught + &((Value::one() - r) * &unseen)
}

/// Smallest penalty making honesty weakly preferred under audit probability
/// `r`: `max(0, (d - a) + c/r)` with `c = K_o - K_c`. Fails when `r = 0`,
/// since a penalty that is never applied deters nothing.
pub fn third_party_min_penalty(params: &MarketParams) -> Result<Value, ThresholdError> {
    params.validate()?;
    let r = &params.audit_prob;
    if r.is_zero() {
        return Err(ThresholdError::NeverAudited);
    }
    let raw =
        (&params.price_conventional - &params.price_organic) + &(params.cost_gap() / r);
    Ok(raw.max(Value::zero()))
}

/// Audit probability above which fraud is unprofitable even with a zero
/// penalty. Undefined when the denominator `a - K_o + c` vanishes.
pub fn r_feasibility_bound(params: &MarketParams) -> Result<RegionBound, ParamsError> {
    params.validate()?;
    let a = &params.price_organic;
    let k_o = &params.cost_organic;
    let c = params.cost_gap();
    let denom = a - k_o + &c;
    if denom.is_zero() {
        return Ok(RegionBound {
            bound: None,
            feasible: false,
            denominator_sign_ok: false,
        });
    }
    let two = Value::from(2);
    let numer = &two * a - &(&two * k_o) + &c;
    let bound = numer / &denom;
    let denominator_sign_ok = !denom.is_negative();
    let feasible = denominator_sign_ok && bound < Value::one();
    Ok(RegionBound {
        bound: Some(bound),
        feasible,
        denominator_sign_ok,
    })
}

/// Thresholds for the consumer-monitoring scenario: the penalty must exceed
/// the cost gap (`p > c`), monitoring must cost less than the utility edge of
/// telling goods apart (`m < s - f`), and the buyer must value organic food
/// above its price (`s > a`). All three strictly give honest trade.
pub fn spne_thresholds_consumer_model(
    params: &MarketParams,
) -> Result<ThresholdReport, ParamsError> {
    params.validate()?;
    let c = params.cost_gap();
    let m_max = &params.utility_organic - &params.utility_conventional;
    let buy = params.utility_organic > params.price_organic;
    let deter = params.penalty > c;
    let monitor = params.monitor_cost < m_max;
    let conditions = vec![
        Condition {
            name: "buy",
            inequality: format!(
                "s > a: {} > {}",
                params.utility_organic, params.price_organic
            ),
            satisfied: buy,
        },
        Condition {
            name: "deter",
            inequality: format!("p > c: {} > {}", params.penalty, c),
            satisfied: deter,
        },
        Condition {
            name: "monitor",
            inequality: format!("m < s - f: {} < {}", params.monitor_cost, m_max),
            satisfied: monitor,
        },
    ];
    let verdict = if !buy {
        Verdict::Infeasible
    } else if deter && monitor {
        Verdict::HonestTrade
    } else {
        Verdict::FraudRisk
    };
    Ok(ThresholdReport {
        scenario: Scenario::Consumer,
        p_min: PenaltyBound::Finite(c),
        m_max: Some(m_max),
        t_min: None,
        r_bound: None,
        conditions,
        verdict,
        unmonitored_verdict: None,
        notes: Vec::new(),
    })
}

/// Conditions for the reputation scenario. Under monitoring, honesty needs
/// `p > a - K_o + m`; the buyer participates when `s > a`; fraud is always
/// cheaper unmonitored (`K_c < K_o` by construction); and a reputational
/// loss `t > f - a` stops blind purchases of suspect goods. The subgame
/// without monitoring cycles between cheating and refusal, so it carries a
/// standing no-pure-equilibrium verdict.
pub fn reputation_conditions(params: &MarketParams) -> Result<ThresholdReport, ParamsError> {
    params.validate()?;
    let a = &params.price_organic;
    let k_o = &params.cost_organic;
    let f = &params.utility_conventional;
    let m = &params.monitor_cost;
    let p_threshold = a - k_o + m;
    let t_min = f - a;
    let deter = params.penalty > p_threshold;
    let buy = params.utility_organic > params.price_organic;
    let reject = params.reputation_loss > t_min;
    let conditions = vec![
        Condition {
            name: "deter-monitored",
            inequality: format!("p > a - K_o + m: {} > {}", params.penalty, p_threshold),
            satisfied: deter,
        },
        Condition {
            name: "buy",
            inequality: format!("s > a: {} > {}", params.utility_organic, a),
            satisfied: buy,
        },
        Condition {
            name: "cheap-fraud",
            inequality: format!(
                "K_c < K_o: {} < {}",
                params.cost_conventional, params.cost_organic
            ),
            satisfied: true,
        },
        Condition {
            name: "reject-mislabeled",
            inequality: format!("t > f - a: {} > {}", params.reputation_loss, t_min),
            satisfied: reject,
        },
    ];
    let verdict = if !buy {
        Verdict::Infeasible
    } else if deter {
        Verdict::HonestTrade
    } else {
        Verdict::FraudRisk
    };
    Ok(ThresholdReport {
        scenario: Scenario::Reputation,
        p_min: PenaltyBound::Finite(p_threshold),
        m_max: None,
        t_min: Some(t_min),
        r_bound: None,
        conditions,
        verdict,
        unmonitored_verdict: Some(Verdict::NoPureEquilibrium),
        notes: vec![
            "deterrence uses the threshold p > a - K_o + m; the raw payoff comparison \
             a - K_o > -p - m alone would only require p > K_o - a - m"
                .to_string(),
            "without monitoring the producer cheats and the buyer, expecting it, refuses: \
             no pure strategy profile is stable"
                .to_string(),
        ],
    })
}

/// Full threshold report for the third-party scenario at the current
/// parameters: minimum penalty at the given audit probability, the
/// penalty-free audit bound, and the incentive checklist.
pub fn third_party_report(params: &MarketParams) -> Result<ThresholdReport, ParamsError> {
    params.validate()?;
    let buy = params.utility_organic > params.price_organic;
    let region = r_feasibility_bound(params)?;
    let (p_min, deter) = match third_party_min_penalty(params) {
        Ok(p_min) => {
            let deter = params.penalty >= p_min;
            (PenaltyBound::Finite(p_min), deter)
        }
        Err(ThresholdError::NeverAudited) => (PenaltyBound::Infinite, false),
        Err(ThresholdError::Params(e)) => return Err(e),
    };
    let mut conditions = vec![
        Condition {
            name: "buy",
            inequality: format!(
                "s > a: {} > {}",
                params.utility_organic, params.price_organic
            ),
            satisfied: buy,
        },
        Condition {
            name: "deter",
            inequality: format!("p >= p_min(r): {} >= {}", params.penalty, p_min),
            satisfied: deter,
        },
    ];
    if let Some(bound) = &region.bound {
        conditions.push(Condition {
            name: "penalty-free-region",
            inequality: format!(
                "some r in (0, 1] exceeds {} (= {})",
                bound,
                bound.fraction_string()
            ),
            satisfied: region.feasible,
        });
    }
    let verdict = if !buy {
        Verdict::Infeasible
    } else if deter {
        Verdict::HonestTrade
    } else {
        Verdict::FraudRisk
    };
    let mut notes = vec![
        "p_min solves the incentive constraint a - K_o >= r(d - p - K_c) + (1 - r)(a - K_c) \
         for p, giving p >= (d - a) + (K_o - K_c)/r, clamped below at 0"
            .to_string(),
    ];
    if params.audit_prob.is_zero() {
        notes.push(
            "audit probability is 0: the penalty is never applied and no finite value deters"
                .to_string(),
        );
    }
    Ok(ThresholdReport {
        scenario: Scenario::ThirdParty,
        p_min,
        m_max: None,
        t_min: None,
        r_bound: region.bound,
        conditions,
        verdict,
        unmonitored_verdict: None,
        notes,
    })
}

/// Dispatches to the scenario's threshold calculator.
pub fn threshold_report(
    params: &MarketParams,
    scenario: Scenario,
) -> Result<ThresholdReport, ParamsError> {
    match scenario {
        Scenario::Consumer => spne_thresholds_consumer_model(params),
        Scenario::Reputation => reputation_conditions(params),
        Scenario::ThirdParty => third_party_report(params),
    }
}

/// Builds the scenario's game tree.
pub fn build_scenario_game(
    params: &MarketParams,
    scenario: Scenario,
) -> Result<ExtensiveGame, ParamsError> {
    match scenario {
        Scenario::Consumer => build_consumer_monitoring_game(params),
        Scenario::Reputation => build_reputation_game(params),
        Scenario::ThirdParty => build_third_party_game(params),
    }
}
