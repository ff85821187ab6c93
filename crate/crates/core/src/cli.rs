//! Command-line surface: gamma sweeps reproducing the payoff-vs-entanglement
//! diagrams, threshold reports, tensor dumps, best-response queries, oracle
//! verification and single-profile payoffs.
//!
//! Exit codes: 0 success, 2 configuration/validation, 3 I/O, 4 empty result.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::equilibrium::{
    self, best_response, is_nash, thresholds, EquilibriumProfile, Region, Thresholds,
};
use crate::error::GameError;
use crate::oracle;
use crate::payoff_tensor::PayoffTensor;
use crate::quantum_core::{expected_payoffs, final_state, Entanglement, PayoffTable};
use crate::strategy_space::{parse_strategy, unitary_from_vec4, StrategyVec4};

/// Offset used when injecting extra samples on both sides of each threshold.
const THRESHOLD_NUDGE: f64 = 1e-9;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        CliError::config(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Two-parameter strategy subset (3-vectors).
    #[value(name = "two-param")]
    TwoParam,
    /// Full SU(2) strategy space (4-vectors).
    Full,
}

impl Space {
    fn dim(&self) -> usize {
        match self {
            Space::TwoParam => 3,
            Space::Full => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Parser)]
pub struct GameArgs {
    /// Payoff table as r,p,t,s (must satisfy t > r > p > s).
    #[arg(long, value_name = "r,p,t,s")]
    pub payoffs: String,

    /// Strategy space.
    #[arg(long, value_enum, default_value = "two-param")]
    pub space: Space,

    /// Interpret all angle inputs as degrees instead of radians.
    #[arg(long)]
    pub degrees: bool,
}

impl GameArgs {
    fn table(&self) -> CliResult<PayoffTable> {
        let nums: Vec<f64> = self
            .payoffs
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::config(format!("invalid payoff value '{p}'")))
            })
            .collect::<CliResult<_>>()?;
        let [r, p, t, s]: [f64; 4] = nums
            .try_into()
            .map_err(|_| CliError::config("--payoffs expects exactly four values r,p,t,s"))?;
        Ok(PayoffTable::new(r, p, t, s)?)
    }

    fn angle(&self, v: f64) -> f64 {
        if self.degrees {
            v.to_radians()
        } else {
            v
        }
    }

    fn gamma(&self, v: f64) -> CliResult<Entanglement> {
        Ok(Entanglement::new(self.angle(v))?)
    }

    fn tensor(&self, gamma: Entanglement) -> CliResult<PayoffTensor> {
        let table = self.table()?;
        Ok(match self.space {
            Space::TwoParam => PayoffTensor::build_two_param(&table, gamma),
            Space::Full => PayoffTensor::build_full(&table, gamma),
        })
    }

    fn strategy(&self, text: &str) -> CliResult<Vec<f64>> {
        Ok(parse_strategy(text, self.space.dim(), self.degrees)?)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qpd",
    about = "Quantum Prisoners' Dilemma analysis: payoffs, equilibria, \
             entanglement thresholds and phase diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep gamma and classify the game at each sample.
    Sweep {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 0.0)]
        gamma_min: f64,
        /// Defaults to pi/2 (or 90 with --degrees).
        #[arg(long)]
        gamma_max: Option<f64>,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Nash re-verification tolerance for the emitted rows.
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a matplotlib script rendering the sweep (requires
        /// --format csv and --out).
        #[arg(long)]
        plot_script: Option<PathBuf>,
    },
    /// Report the analytic thresholds and region layout of a table.
    Thresholds {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dump the nonzero payoff-tensor elements as JSON.
    Tensor {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best response to a strategy via the maximal eigenpair.
    BestResponse {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        gamma: f64,
        /// Opponent strategy literal: C, D, Q, vec3:w,y,z, vec4:w,x,y,z or
        /// angles:theta,phi. Numeric vectors are normalized.
        #[arg(long)]
        strategy: String,
    },
    /// Compare the eigen best response against the grid-search oracle.
    Verify {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        strategy: String,
        #[arg(long, default_value_t = 32)]
        grid_n: usize,
    },
    /// Payoffs of a single strategy profile via tensor and simulation.
    Payoff {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        strategy_a: String,
        #[arg(long)]
        strategy_b: String,
    },
}

/// Configuration of one sweep, resolved to radians.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub table: PayoffTable,
    pub space: Space,
    pub gamma_min: f64,
    pub gamma_max: f64,
    pub steps: usize,
    pub eps: f64,
}

impl SweepConfig {
    pub fn new(
        table: PayoffTable,
        space: Space,
        gamma_min: f64,
        gamma_max: f64,
        steps: usize,
        eps: f64,
    ) -> CliResult<Self> {
        Entanglement::new(gamma_min)?;
        Entanglement::new(gamma_max)?;
        if gamma_min >= gamma_max {
            return Err(CliError::config(format!(
                "gamma range is empty: [{gamma_min}, {gamma_max}]"
            )));
        }
        if steps < 2 {
            return Err(CliError::config("steps must be at least 2"));
        }
        if eps <= 0.0 {
            return Err(CliError::config("eps must be positive"));
        }
        Ok(Self {
            table,
            space,
            gamma_min,
            gamma_max,
            steps,
            eps,
        })
    }
}

/// One classified sample of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub gamma: f64,
    pub region: Region,
    pub boundary: bool,
    pub verified: bool,
    pub equilibrium_count: usize,
    pub equilibria: Vec<EquilibriumProfile>,
    pub thresholds: Thresholds,
}

/// Gamma samples of a sweep: an even grid plus two extra points straddling
/// each threshold inside the range, so discontinuities render faithfully.
fn gamma_samples(config: &SweepConfig) -> Vec<f64> {
    let th = thresholds(&config.table);
    let mut samples: Vec<f64> = (0..config.steps)
        .map(|i| {
            let g = config.gamma_min
                + (config.gamma_max - config.gamma_min) * i as f64 / (config.steps - 1) as f64;
            // guard against rounding drifting the endpoints out of range
            g.clamp(config.gamma_min, config.gamma_max)
        })
        .collect();
    let relevant = match config.space {
        Space::TwoParam => vec![th.gamma_th1, th.gamma_th2],
        Space::Full => vec![th.gamma_b],
    };
    for t in relevant {
        for nudged in [t - THRESHOLD_NUDGE, t + THRESHOLD_NUDGE] {
            if nudged > config.gamma_min && nudged < config.gamma_max {
                samples.push(nudged);
            }
        }
    }
    samples.sort_by(f64::total_cmp);
    samples.dedup();
    samples
}

/// Classify every gamma sample and re-verify each reported equilibrium.
pub fn run_sweep(config: &SweepConfig) -> CliResult<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for g in gamma_samples(config) {
        let gamma = Entanglement::new(g)?;
        let report = match config.space {
            Space::TwoParam => equilibrium::classify_region_twoparam(&config.table, gamma)?,
            Space::Full => equilibrium::classify_region_full(&config.table, gamma)?,
        };
        let tensor = match config.space {
            Space::TwoParam => PayoffTensor::build_two_param(&config.table, gamma),
            Space::Full => PayoffTensor::build_full(&config.table, gamma),
        };
        let mut verified = !report.equilibria.is_empty();
        for eq in &report.equilibria {
            if !is_nash(&tensor, &eq.strategy_a, &eq.strategy_b, config.eps)? {
                verified = false;
            }
        }
        rows.push(SweepRow {
            gamma: g,
            region: report.region,
            boundary: report.boundary,
            verified,
            equilibrium_count: report.equilibria.len(),
            equilibria: report.equilibria,
            thresholds: report.thresholds,
        });
    }
    Ok(rows)
}

/// Format with 12 significant digits, deterministically.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let prec = (11 - exp).max(0) as usize;
    format!("{v:.prec$}")
}

fn fmt_strategy(v: &[f64]) -> String {
    let comps: Vec<String> = v.iter().map(|c| fmt_sig(*c)).collect();
    let prefix = if v.len() == 3 { "vec3" } else { "vec4" };
    format!("{prefix}:{}", comps.join(","))
}

/// Serialize sweep rows as CSV with one line per equilibrium (an empty
/// equilibrium block for rows without any).
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "gamma",
        "region",
        "eq_index",
        "strategy_a",
        "strategy_b",
        "payoff_a",
        "payoff_b",
    ])
    .expect("in-memory write");
    for row in rows {
        if row.equilibria.is_empty() {
            w.write_record([
                fmt_sig(row.gamma),
                row.region.to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ])
            .expect("in-memory write");
        }
        for (idx, eq) in row.equilibria.iter().enumerate() {
            w.write_record([
                fmt_sig(row.gamma),
                row.region.to_string(),
                idx.to_string(),
                fmt_strategy(&eq.strategy_a),
                fmt_strategy(&eq.strategy_b),
                fmt_sig(eq.payoff_a),
                fmt_sig(eq.payoff_b),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("csv is utf-8")
}

/// A self-contained matplotlib script rendering payoff vs gamma from the CSV,
/// with vertical lines at the thresholds that fall inside the range.
pub fn plot_script_text(rows: &[SweepRow], csv_path: &Path) -> CliResult<String> {
    let first = rows.first().ok_or(CliError {
        code: 4,
        message: "cannot emit a plot script for an empty sweep".into(),
    })?;
    let last = rows.last().unwrap();
    let th = first.thresholds;
    let full_space = rows
        .iter()
        .any(|r| matches!(r.region, Region::InfiniteFamily | Region::NoPureNE));
    let lines: &[(f64, &str)] = if full_space {
        &[(th.gamma_b, "gamma_b")]
    } else {
        &[(th.gamma_th1, "gamma_th1"), (th.gamma_th2, "gamma_th2")]
    };
    let mut vlines = String::new();
    for &(value, label) in lines {
        if value > first.gamma && value < last.gamma {
            vlines.push_str(&format!(
                "ax.axvline({value:?}, color=\"gray\", linestyle=\"--\", label=\"{label}\")\n"
            ));
        }
    }
    Ok(format!(
        r#"#!/usr/bin/env python3
"""Render payoff vs entanglement from a sweep CSV."""
import csv
from collections import defaultdict

import matplotlib.pyplot as plt

series = defaultdict(list)
with open({csv:?}) as fh:
    for row in csv.DictReader(fh):
        if row["payoff_a"] == "":
            continue
        series[row["eq_index"]].append((float(row["gamma"]), float(row["payoff_a"])))

fig, ax = plt.subplots()
for eq_index in sorted(series):
    xs, ys = zip(*sorted(series[eq_index]))
    ax.plot(xs, ys, marker=".", linestyle="none", label=f"equilibrium {{eq_index}}")
{vlines}ax.set_xlabel("gamma (rad)")
ax.set_ylabel("payoff of Alice")
ax.legend()
fig.savefig({png:?}, dpi=150)
print("wrote", {png:?})
"#,
        csv = csv_path.display().to_string(),
        vlines = vlines,
        png = csv_path.with_extension("png").display().to_string(),
    ))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ThresholdReport {
    table: TableEcho,
    regime: String,
    thresholds: Thresholds,
    two_param_layout: String,
    full_layout: String,
}

#[derive(Serialize)]
struct TableEcho {
    r: f64,
    p: f64,
    t: f64,
    s: f64,
}

fn threshold_report(table: &PayoffTable) -> ThresholdReport {
    let th = thresholds(table);
    let regime = equilibrium::regime(table);
    let lo = th.gamma_th1.min(th.gamma_th2);
    let hi = th.gamma_th1.max(th.gamma_th2);
    let two_param_layout = match regime {
        equilibrium::Regime::SumLess => format!(
            "classical [0, {}), transitional [{}, {}], quantum ({}, pi/2]",
            fmt_sig(lo),
            fmt_sig(lo),
            fmt_sig(hi),
            fmt_sig(hi)
        ),
        equilibrium::Regime::SumEqual => format!(
            "classical [0, {}), quantum ({}, pi/2]",
            fmt_sig(lo),
            fmt_sig(lo)
        ),
        equilibrium::Regime::SumGreater => format!(
            "classical [0, {}), coexistent [{}, {}], quantum ({}, pi/2]",
            fmt_sig(lo),
            fmt_sig(lo),
            fmt_sig(hi),
            fmt_sig(hi)
        ),
    };
    let full_layout = format!(
        "infinite equilibrium family [0, {}), no pure equilibrium ({}, pi/2]",
        fmt_sig(th.gamma_b),
        fmt_sig(th.gamma_b)
    );
    ThresholdReport {
        table: TableEcho {
            r: table.r(),
            p: table.p(),
            t: table.t(),
            s: table.s(),
        },
        regime: regime.to_string(),
        thresholds: th,
        two_param_layout,
        full_layout,
    }
}

#[derive(Serialize)]
struct MethodResult {
    strategy: Vec<f64>,
    payoff: f64,
}

#[derive(Serialize)]
struct VerifyReport {
    method_result: MethodResult,
    oracle_result: MethodResult,
    gap: f64,
}

#[derive(Serialize)]
struct PayoffReport {
    payoff_a: f64,
    payoff_b: f64,
    simulation_payoff_a: f64,
    simulation_payoff_b: f64,
    max_deviation: f64,
}

pub fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Sweep {
            game,
            gamma_min,
            gamma_max,
            steps,
            format,
            eps,
            out,
            plot_script,
        } => {
            let table = game.table()?;
            let gamma_max = gamma_max
                .map(|v| game.angle(v))
                .unwrap_or(std::f64::consts::FRAC_PI_2);
            let config = SweepConfig::new(
                table,
                game.space,
                game.angle(gamma_min),
                gamma_max,
                steps,
                eps,
            )?;
            let rows = run_sweep(&config)?;
            let content = match format {
                Format::Csv => rows_to_csv(&rows),
                Format::Json => to_json(&rows),
            };
            write_output(&out, &content)?;
            if let Some(script_path) = plot_script {
                let csv_path = out.as_ref().ok_or_else(|| {
                    CliError::config("--plot-script requires --out with a CSV path")
                })?;
                if format != Format::Csv {
                    return Err(CliError::config("--plot-script requires --format csv"));
                }
                let script = plot_script_text(&rows, csv_path)?;
                std::fs::write(&script_path, script).map_err(|e| {
                    CliError::io(format!("cannot write {}: {e}", script_path.display()))
                })?;
            }
            Ok(())
        }
        Command::Thresholds { game, format } => {
            let table = game.table()?;
            let report = threshold_report(&table);
            match format {
                Format::Json => write_output(&None, &to_json(&report)),
                Format::Csv => {
                    // plain text; the report is not tabular
                    let text = format!(
                        "payoffs: r={} p={} t={} s={}\nregime: {}\ngamma_th1 = {}\n\
                         gamma_th2 = {}\ngamma_b   = {}\ntwo-parameter: {}\nfull space: {}\n",
                        report.table.r,
                        report.table.p,
                        report.table.t,
                        report.table.s,
                        report.regime,
                        fmt_sig(report.thresholds.gamma_th1),
                        fmt_sig(report.thresholds.gamma_th2),
                        fmt_sig(report.thresholds.gamma_b),
                        report.two_param_layout,
                        report.full_layout
                    );
                    write_output(&None, &text)
                }
            }
        }
        Command::Tensor { game, gamma, out } => {
            let tensor = game.tensor(game.gamma(gamma)?)?;
            write_output(&out, &to_json(&tensor.nonzero_entries()))
        }
        Command::BestResponse {
            game,
            gamma,
            strategy,
        } => {
            let tensor = game.tensor(game.gamma(gamma)?)?;
            let u = game.strategy(&strategy)?;
            let pair = best_response(&tensor, &u)?;
            let report = MethodResult {
                strategy: pair.vector,
                payoff: pair.value,
            };
            write_output(&None, &to_json(&report))
        }
        Command::Verify {
            game,
            gamma,
            strategy,
            grid_n,
        } => {
            let tensor = game.tensor(game.gamma(gamma)?)?;
            let u = game.strategy(&strategy)?;
            let pair = best_response(&tensor, &u)?;
            let (grid_strategy, grid_payoff) = oracle::grid_best_response(&tensor, &u, grid_n)?;
            let report = VerifyReport {
                gap: pair.value - grid_payoff,
                method_result: MethodResult {
                    strategy: pair.vector,
                    payoff: pair.value,
                },
                oracle_result: MethodResult {
                    strategy: grid_strategy,
                    payoff: grid_payoff,
                },
            };
            write_output(&None, &to_json(&report))
        }
        Command::Payoff {
            game,
            gamma,
            strategy_a,
            strategy_b,
        } => {
            let gamma = game.gamma(gamma)?;
            let tensor = game.tensor(gamma)?;
            let u_a = game.strategy(&strategy_a)?;
            let u_b = game.strategy(&strategy_b)?;
            let pair = tensor.payoffs(&u_a, &u_b)?;
            let embed = |v: &[f64]| -> StrategyVec4 {
                match v.len() {
                    4 => StrategyVec4::new(v[0], v[1], v[2], v[3]),
                    _ => StrategyVec4::new(v[0], 0.0, v[1], v[2]),
                }
                .expect("parsed strategies are unit")
            };
            let state = final_state(
                &unitary_from_vec4(&embed(&u_a)),
                &unitary_from_vec4(&embed(&u_b)),
                gamma,
            );
            let sim = expected_payoffs(&state, tensor.table())?;
            let report = PayoffReport {
                payoff_a: pair.payoff_a,
                payoff_b: pair.payoff_b,
                simulation_payoff_a: sim.payoff_a,
                simulation_payoff_b: sim.payoff_b,
                max_deviation: (pair.payoff_a - sim.payoff_a)
                    .abs()
                    .max((pair.payoff_b - sim.payoff_b).abs()),
            };
            write_output(&None, &to_json(&report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(r: f64, p: f64, t: f64, s: f64) -> PayoffTable {
        PayoffTable::new(r, p, t, s).unwrap()
    }

    #[test]
    fn fmt_sig_examples() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(3.0), "3.00000000000");
        assert_eq!(fmt_sig(0.46364760900080615), "0.463647609001");
        assert_eq!(fmt_sig(-1.5), "-1.50000000000");
        assert_eq!(fmt_sig(125.0), "125.000000000");
    }

    #[test]
    fn sweep_config_validation() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        assert!(SweepConfig::new(tb, Space::TwoParam, 0.5, 0.2, 10, 1e-9).is_err());
        assert!(SweepConfig::new(tb, Space::TwoParam, 0.0, 1.0, 1, 1e-9).is_err());
        assert!(SweepConfig::new(tb, Space::TwoParam, 0.0, 1.0, 10, 0.0).is_err());
        assert!(SweepConfig::new(tb, Space::TwoParam, -0.1, 1.0, 10, 1e-9).is_err());
    }

    #[test]
    fn sweep_injects_threshold_samples() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let config =
            SweepConfig::new(tb, Space::TwoParam, 0.0, std::f64::consts::FRAC_PI_2, 10, 1e-9)
                .unwrap();
        let samples = gamma_samples(&config);
        let th = thresholds(&tb);
        assert_eq!(samples.len(), 14);
        for t in [th.gamma_th1, th.gamma_th2] {
            assert!(samples.iter().any(|g| (g - (t - THRESHOLD_NUDGE)).abs() < 1e-15));
            assert!(samples.iter().any(|g| (g - (t + THRESHOLD_NUDGE)).abs() < 1e-15));
        }
        assert!(samples.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sweep_rows_are_verified_and_sorted() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let config = SweepConfig::new(
            tb,
            Space::TwoParam,
            0.0,
            std::f64::consts::FRAC_PI_2,
            25,
            1e-9,
        )
        .unwrap();
        let rows = run_sweep(&config).unwrap();
        assert!(rows.windows(2).all(|w| w[0].gamma < w[1].gamma));
        for row in &rows {
            assert!(row.verified, "row at gamma {} not verified", row.gamma);
            assert_eq!(row.equilibrium_count, row.equilibria.len());
        }
    }

    #[test]
    fn no_pure_ne_rows_are_unverified_and_empty() {
        let tb = table(3.0, 1.0, 5.0, 0.0);
        let config = SweepConfig::new(tb, Space::Full, 1.0, 1.5, 5, 1e-9).unwrap();
        let rows = run_sweep(&config).unwrap();
        for row in &rows {
            assert_eq!(row.region, Region::NoPureNE);
            assert!(!row.verified);
            assert_eq!(row.equilibrium_count, 0);
        }
        let csv = rows_to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "gamma,region,eq_index,strategy_a,strategy_b,payoff_a,payoff_b"
        );
        assert!(lines.next().unwrap().contains("no-pure-ne,,,,,"));
    }

    #[test]
    fn plot_script_requires_rows() {
        let err = plot_script_text(&[], Path::new("rows.csv")).unwrap_err();
        assert_eq!(err.code, 4);
    }
}
