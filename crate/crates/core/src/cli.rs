//! Command-line front end. Exit codes: 0 success, 1 property violation or
//! counterexample, 2 usage or input error.

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::adversary::{random_thin, random_thin_keep_hamilton};
use crate::bigraph::{complete_bipartite, sample_random, BalancedBipartiteGraph, RandomModel};
use crate::cycles::{even_cycle_spectrum_with_budget, standard_hamilton, CycleCertificate, SpectrumMode, Verdict, DEFAULT_DFS_BUDGET};
use crate::directions::{audit_directions, lemma5_check, lemma5_range, GoodnessParams};
use crate::error::{Error, Result};
use crate::experiments::{
    audit_csv, chernoff_check, derive_seed, direction_audit_trials, records_to_csv, resilience_sweep, tightness_csv,
    tightness_trial, tightness_trials, verify_theorem1, SweepConfig, TightnessMode,
};
use crate::shortcuts::{hypergraph_probe, shortcut_census};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_EPS: f64 = 0.2;
const DEFAULT_DELTA: f64 = 0.3;

/// `ε′ = ε/17`
fn default_eps_prime(eps: f64) -> f64 {
    eps / 17.0
}

/// `β = min(δ/3, ε′)`
fn default_beta(eps: f64) -> f64 {
    (DEFAULT_DELTA / 3.0).min(default_eps_prime(eps))
}

#[derive(Parser, Debug)]
#[command(name = "bipancyclic", about = "Cycle-spectrum certification and experiments on random balanced bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample G(n, n, p) and write it in bbg format.
    Gen {
        #[arg(long)]
        n: usize,
        /// Probability, or an expression like `5*n^(-2/3)`.
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Add the standard Hamilton cycle.
        #[arg(long)]
        plant: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Randomly delete edges off a Hamilton cycle.
    Thin {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with = "fraction")]
        target: Option<usize>,
        /// Keep `⌈fraction · e(G)⌉` edges.
        #[arg(long)]
        fraction: Option<f64>,
        /// File with a `cycle ...` line; defaults to the standard cycle.
        #[arg(long)]
        hamilton: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Even cycle spectrum of a graph as JSON.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
        /// `exhaustive` or `certificate`.
        #[arg(long, default_value = "certificate")]
        mode: String,
        #[arg(long)]
        hamilton: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DFS_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive check that dense Hamiltonian subgraphs of K_{n,n} are bipancyclic.
    Theorem1 {
        #[arg(long)]
        n: usize,
    },
    /// Plant, thin and certify many samples; writes CSV.
    ResilienceSweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_DFS_BUDGET)]
        budget: u64,
        /// Fill the `ms` column (breaks byte-identical reruns).
        #[arg(long)]
        timing: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact shortcut counts against the lower bound, as JSON.
    ShortcutCensus {
        /// Graph file; without it K_{n,n} (or a planted sample when --p is set) is used.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        eps_prime: Option<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Size, density and degree-moment probes of the shortcut hypergraph, as JSON.
    HypergraphProbe {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        /// One of 1, 2, 3; all three when omitted.
        #[arg(long)]
        moment_i: Option<usize>,
        #[arg(long, default_value_t = 100)]
        moment_trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Bad-direction counts of G(n, n, p) samples; CSV, or JSON with --l.
    DirectionAudit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: String,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        eps_prime: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also count close crossings between directions i and i + l/2.
        #[arg(long)]
        l: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Close-crossing structure checks over all directions, as JSON.
    Lemma5Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: f64,
        /// Every admissible even l when omitted.
        #[arg(long)]
        l: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Edge-deletion constructions that keep a Hamilton cycle.
    Tightness {
        /// `c4-breaker` or `fan`.
        #[arg(long)]
        mode: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run this many derived-seed trials and write CSV instead.
        #[arg(long)]
        trials: Option<usize>,
        /// Output graph (single run) or CSV (with --trials).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Empirical binomial tails against the Chernoff bound, as JSON.
    ChernoffCheck {
        /// Binomial number of trials.
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.5,1")]
        eps: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Evaluates `p` given as a number or as `[c*]n^(a[/b])`.
pub fn parse_probability(expr: &str, n: usize) -> Result<f64> {
    let bad = || Error::invalid(format!("cannot read probability `{expr}`"));
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let value = match s.find("n^") {
        None => s.parse::<f64>().map_err(|_| bad())?,
        Some(pos) => {
            let coeff = match &s[..pos] {
                "" => 1.0,
                head => head.strip_suffix('*').ok_or_else(bad)?.parse::<f64>().map_err(|_| bad())?,
            };
            let exp = s[pos + 2..].trim_start_matches('(').trim_end_matches(')');
            let exp = match exp.split_once('/') {
                Some((a, b)) => {
                    a.parse::<f64>().map_err(|_| bad())? / b.parse::<f64>().map_err(|_| bad())?
                }
                None => exp.parse::<f64>().map_err(|_| bad())?,
            };
            coeff * (n as f64).powf(exp)
        }
    };
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::invalid(format!("probability `{expr}` evaluates to {value}, outside [0, 1]")));
    }
    Ok(value)
}

/// Reads `key = value` lines; `#` starts a comment.
fn read_config(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: k + 1,
            message: format!("expected key=value, got {line:?}"),
        })?;
        pairs.push((key.trim().replace('_', "-"), value.trim().to_string()));
    }
    Ok(pairs)
}

/// Splices `--config file` values into `args` for keys not given explicitly.
fn apply_config(args: Vec<String>) -> Result<Vec<String>> {
    let Some(pos) = args.iter().position(|a| a == "--config") else {
        return Ok(args);
    };
    let path = args.get(pos + 1).ok_or_else(|| Error::invalid("--config needs a file"))?.clone();
    let mut out: Vec<String> = args[..pos].iter().chain(&args[pos + 2..]).cloned().collect();
    let given: HashSet<String> = out
        .iter()
        .filter_map(|a| a.strip_prefix("--").map(|k| k.split('=').next().unwrap_or(k).to_string()))
        .collect();
    for (key, value) in read_config(Path::new(&path))? {
        if given.contains(&key) {
            continue;
        }
        match value.as_str() {
            "true" => out.push(format!("--{key}")),
            "false" => {}
            _ => {
                out.push(format!("--{key}"));
                out.push(value);
            }
        }
    }
    Ok(out)
}

fn read_graph(path: &Path) -> Result<BalancedBipartiteGraph> {
    BalancedBipartiteGraph::from_bbg(&fs::read_to_string(path)?)
}

fn read_hamilton(path: Option<&Path>, g: &BalancedBipartiteGraph) -> Result<CycleCertificate> {
    match path {
        None => standard_hamilton(g.n()),
        Some(p) => {
            let text = fs::read_to_string(p)?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Error::invalid(format!("{} is empty", p.display())))?;
            CycleCertificate::from_line(line)
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen { n, p, seed, plant, output } => {
            let p = parse_probability(&p, n)?;
            let mut g = sample_random(&RandomModel::new(n, p, seed)?);
            if plant {
                g = g.with_standard_cycle()?;
            }
            emit(out, output.as_deref(), &g.to_bbg())?;
            Ok(EXIT_OK)
        }
        Command::Thin { input, target, fraction, hamilton, seed, output, log } => {
            let g = read_graph(&input)?;
            let target = match (target, fraction) {
                (Some(t), _) => t,
                (None, Some(f)) if (0.0..=1.0).contains(&f) => (f * g.edge_count() as f64).ceil() as usize,
                (None, Some(f)) => return Err(Error::invalid(format!("fraction {f} outside [0, 1]"))),
                (None, None) => return Err(Error::invalid("one of --target or --fraction is required")),
            };
            let h = read_hamilton(hamilton.as_deref(), &g)?;
            let (thin, deletions) = random_thin_keep_hamilton(&g, &h, target, seed)?;
            if let Some(path) = log {
                fs::write(path, deletions.to_text())?;
            }
            emit(out, output.as_deref(), &thin.to_bbg())?;
            Ok(EXIT_OK)
        }
        Command::Spectrum { input, mode, hamilton, budget, output } => {
            let g = read_graph(&input)?;
            let mode: SpectrumMode = mode.parse()?;
            let h = match (mode, hamilton) {
                (_, Some(path)) => Some(read_hamilton(Some(&path), &g)?),
                (SpectrumMode::CertificateSearch, None) => Some(standard_hamilton(g.n())?),
                (SpectrumMode::Exhaustive, None) => None,
            };
            let report = even_cycle_spectrum_with_budget(&g, h.as_ref(), mode, budget)?;
            emit(out, output.as_deref(), &format!("{}\n", report.to_json()))?;
            Ok(code(!matches!(report.verdict(), Verdict::No { .. })))
        }
        Command::Theorem1 { n } => {
            let r = verify_theorem1(n)?;
            writeln!(
                out,
                "n = {}: {} dense subgraphs, {} Hamiltonian, {} counterexamples",
                r.n,
                r.checked,
                r.hamiltonian,
                r.counterexamples.len()
            )?;
            for edges in &r.counterexamples {
                let list: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
                writeln!(out, "counterexample: {}", list.join(" "))?;
            }
            Ok(code(r.counterexamples.is_empty()))
        }
        Command::ResilienceSweep { n, p, eps, trials, seed, budget, timing, output } => {
            let p = parse_probability(&p, n)?;
            let config = SweepConfig { budget, timing, ..SweepConfig::new(n, p, eps, trials, seed) };
            let records = resilience_sweep(&config)?;
            emit(out, output.as_deref(), &records_to_csv(&records))?;
            Ok(code(records.iter().all(|r| !matches!(r.verdict, Verdict::No { .. }))))
        }
        Command::ShortcutCensus { input, n, p, seed, eps_prime, output } => {
            let g = match (input, n) {
                (Some(path), _) => read_graph(&path)?,
                (None, Some(n)) => match p {
                    Some(p) => sample_random(&RandomModel::new(n, parse_probability(&p, n)?, seed)?).with_standard_cycle()?,
                    None => complete_bipartite(n)?,
                },
                (None, None) => return Err(Error::invalid("one of --input or --n is required")),
            };
            let report = shortcut_census(&g, eps_prime.unwrap_or(default_eps_prime(DEFAULT_EPS)))?;
            emit(out, output.as_deref(), &json(&report))?;
            Ok(code(report.all_pass()))
        }
        Command::HypergraphProbe { n, l, eps, trials, q, moment_i, moment_trials, seed, output } => {
            let is: Vec<usize> = moment_i.map_or(vec![1, 2, 3], |i| vec![i]);
            let probe = hypergraph_probe(n, l, eps, trials, q, &is, moment_trials, seed)?;
            emit(out, output.as_deref(), &json(&probe))?;
            Ok(EXIT_OK)
        }
        Command::DirectionAudit { n, p, beta, eps_prime, eps, trials, seed, l, output } => {
            let p = parse_probability(&p, n)?;
            let beta = beta.unwrap_or(default_beta(eps));
            let eps_prime = eps_prime.unwrap_or(default_eps_prime(eps));
            match l {
                None => {
                    let rows = direction_audit_trials(n, p, beta, eps_prime, trials, seed)?;
                    emit(out, output.as_deref(), &audit_csv(n, p, beta, eps_prime, &rows))?;
                    Ok(code(rows.iter().all(|r| r.within_bound)))
                }
                Some(l) => {
                    let params = GoodnessParams::new(n, beta, eps_prime, p)?;
                    let mut reports = Vec::with_capacity(trials);
                    for t in 0..trials {
                        let trial_seed = derive_seed(seed, t as u64);
                        let g = sample_random(&RandomModel::new(n, p, trial_seed)?);
                        let keep = ((0.5 + eps) * g.edge_count() as f64).ceil() as usize;
                        let empty = BalancedBipartiteGraph::empty(n)?;
                        let (sub, _) = random_thin(&g, &empty, keep, derive_seed(trial_seed, 0));
                        reports.push(audit_directions(&g, &params, Some(&sub), Some(eps), Some(l))?);
                    }
                    emit(out, output.as_deref(), &json(&reports))?;
                    Ok(code(reports.iter().all(|r| r.within_bound)))
                }
            }
        }
        Command::Lemma5Check { n, beta, l, output } => {
            let ls: Vec<usize> = match l {
                Some(l) => vec![l],
                None => {
                    let (lo, hi) = lemma5_range(n, beta)?;
                    (lo..=hi).step_by(2).collect()
                }
            };
            let reports = ls.iter().map(|&l| lemma5_check(n, beta, l)).collect::<Result<Vec<_>>>()?;
            emit(out, output.as_deref(), &json(&reports))?;
            Ok(code(reports.iter().all(|r| r.holds)))
        }
        Command::Tightness { mode, n, p, seed, trials, output, log } => {
            let mode: TightnessMode = mode.parse()?;
            let p = parse_probability(&p, n)?;
            match trials {
                Some(trials) => {
                    let rows = tightness_trials(mode, n, p, trials, seed)?;
                    emit(out, output.as_deref(), &tightness_csv(&rows))?;
                    Ok(EXIT_OK)
                }
                None => {
                    let summary = tightness_trial(mode, n, p, 0, seed)?;
                    if let Some(path) = output {
                        fs::write(path, summary.graph.to_bbg())?;
                    }
                    if let Some(path) = log {
                        fs::write(path, summary.log.to_text())?;
                    }
                    if summary.c4_discrepancy == Some(true) {
                        writeln!(
                            out,
                            "note: {} 4-cycles survive the fan construction; its output is not 4-cycle-free",
                            summary.c4_after
                        )?;
                    }
                    out.write_all(json(&summary).as_bytes())?;
                    Ok(code(summary.hamiltonian))
                }
            }
        }
        Command::ChernoffCheck { n, p, samples, eps, seed, output } => {
            let rows = chernoff_check(n, p, samples, &eps, seed)?;
            emit(out, output.as_deref(), &json(&rows))?;
            Ok(code(rows.iter().all(|r| r.pass)))
        }
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn run_with_io<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<String> = argv.into_iter().map(|a| a.into().to_string_lossy().into_owned()).collect();
    let args = match apply_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn run_subcommand<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}
