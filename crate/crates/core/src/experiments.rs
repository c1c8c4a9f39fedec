//! Seeded, reproducible experiment runners. Trials run in parallel; rows come
//! back in trial order, so output bytes never depend on scheduling.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::Serialize;

use crate::adversary::{fan_construction, fan_kept_pairs, quadrilateral_breaker, random_thin_keep_hamilton};
use crate::bigraph::{chernoff_tail_bound, sample_random, BalancedBipartiteGraph, Edge, RandomModel};
use crate::cycles::{
    cycle_length_mask_raw, even_cycle_spectrum_with_budget, standard_hamilton, SpectrumMode, Verdict,
    DEFAULT_DFS_BUDGET,
};
use crate::directions::{audit_directions, GoodnessParams};
use crate::error::{Error, Result};

/// Per-trial seed: splitmix64 of `master + (trial + 1) * 0x9E3779B97F4A7C15`.
pub fn derive_seed(master: u64, trial: u64) -> u64 {
    let mut z = master.wrapping_add(trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Largest `n` accepted by [`verify_theorem1`].
pub const THEOREM1_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub n: usize,
    /// Subgraphs of `K_{n,n}` with more than `n^2/2` edges.
    pub checked: u64,
    pub hamiltonian: u64,
    /// Hamiltonian, dense and not bipancyclic, as edge lists.
    pub counterexamples: Vec<Vec<Edge>>,
}

/// Checks every subgraph of `K_{n,n}` with more than `n^2/2` edges: each
/// Hamiltonian one must contain every even cycle length from 4 to `2n`.
pub fn verify_theorem1(n: usize) -> Result<Theorem1Report> {
    if !(2..=THEOREM1_MAX_N).contains(&n) {
        return Err(Error::invalid(format!("n = {n} outside [2, {THEOREM1_MAX_N}]")));
    }
    let m = n * n;
    let two_n = 2 * n;
    let all_even: u64 = (4..=two_n).step_by(2).fold(0, |acc, t| acc | 1 << t);
    let (checked, hamiltonian, mut counterexamples) = (0u64..1 << m)
        .into_par_iter()
        .filter(|mask| 2 * mask.count_ones() as usize > m)
        .fold(
            || (0u64, 0u64, Vec::new()),
            |(c, h, mut bad), mask| {
                let mut adj = vec![0u32; two_n];
                for k in 0..m {
                    if mask >> k & 1 == 1 {
                        let e = Edge::from_index(k, n);
                        adj[e.even()] |= 1 << e.odd();
                        adj[e.odd()] |= 1 << e.even();
                    }
                }
                let lengths = cycle_length_mask_raw(&adj);
                let ham = lengths >> two_n & 1 == 1;
                if ham && lengths & all_even != all_even {
                    bad.push(mask);
                }
                (c + 1, h + ham as u64, bad)
            },
        )
        .reduce(
            || (0, 0, Vec::new()),
            |(c1, h1, mut b1), (c2, h2, b2)| {
                b1.extend(b2);
                (c1 + c2, h1 + h2, b1)
            },
        );
    counterexamples.sort_unstable();
    Ok(Theorem1Report {
        n,
        checked,
        hamiltonian,
        counterexamples: counterexamples
            .into_iter()
            .map(|mask| (0..m).filter(|k| mask >> k & 1 == 1).map(|k| Edge::from_index(k, n)).collect())
            .collect(),
    })
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial is needed"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub n: usize,
    pub p: f64,
    pub eps: f64,
    pub trials: usize,
    pub master_seed: u64,
    /// Backtracking budget per length.
    pub budget: u64,
    /// Record wall-clock time; off by default so CSV output is reproducible.
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(n: usize, p: f64, eps: f64, trials: usize, master_seed: u64) -> Self {
        SweepConfig { n, p, eps, trials, master_seed, budget: DEFAULT_DFS_BUDGET, timing: false }
    }

    fn validate(&self) -> Result<()> {
        RandomModel::new(self.n, self.p, 0)?;
        if self.n < 2 {
            return Err(Error::invalid("resilience sweeps need n >= 2"));
        }
        if !(self.eps > 0.0 && self.eps <= 0.5) {
            return Err(Error::invalid(format!("eps = {} outside (0, 1/2]", self.eps)));
        }
        check_trials(self.trials)
    }

    /// `⌈(1/2 + ε) e⌉`
    pub fn target(&self, edges: usize) -> usize {
        ((0.5 + self.eps) * edges as f64).ceil() as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub p: String,
    pub eps: String,
    /// Edges of the sample with the Hamilton cycle planted.
    pub edges_sampled: usize,
    pub edges_final: usize,
    pub verdict: Verdict,
    pub ms: u128,
}

pub const SWEEP_HEADER: &str = "trial,seed,n,p,eps,edges_sampled,edges_final,verdict,missing,unknown,ms";

impl TrialRecord {
    pub fn csv_row(&self) -> String {
        let (missing, unknown) = match &self.verdict {
            Verdict::Yes => (String::new(), String::new()),
            Verdict::No { missing, unknown } => (join(missing), join(unknown)),
            Verdict::Unknown { unknown } => (String::new(), join(unknown)),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.trial,
            self.seed,
            self.n,
            self.p,
            self.eps,
            self.edges_sampled,
            self.edges_final,
            self.verdict.as_str(),
            missing,
            unknown,
            self.ms
        )
    }
}

pub fn records_to_csv(records: &[TrialRecord]) -> String {
    let mut out = format!("{SWEEP_HEADER}\n");
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// One resilience trial from its derived seed: plant `C_{2n}` into a sample,
/// thin to `⌈(1/2 + ε) e⌉` edges keeping the cycle, certify the spectrum.
pub fn resilience_trial(config: &SweepConfig, trial: usize, seed: u64) -> Result<TrialRecord> {
    let start = Instant::now();
    let n = config.n;
    let g = sample_random(&RandomModel::new(n, config.p, seed)?).with_standard_cycle()?;
    let target = config.target(g.edge_count());
    if target < 2 * n {
        return Err(Error::invalid(format!(
            "target {target} edges is below 2n = {}; raise p or eps",
            2 * n
        )));
    }
    let hamilton = standard_hamilton(n)?;
    let (thin, _) = random_thin_keep_hamilton(&g, &hamilton, target, derive_seed(seed, 0))?;
    let report = even_cycle_spectrum_with_budget(&thin, Some(&hamilton), SpectrumMode::CertificateSearch, config.budget)?;
    report.revalidate(&thin)?;
    Ok(TrialRecord {
        trial,
        seed,
        n,
        p: config.p.to_string(),
        eps: config.eps.to_string(),
        edges_sampled: g.edge_count(),
        edges_final: thin.edge_count(),
        verdict: report.verdict(),
        ms: if config.timing { start.elapsed().as_millis() } else { 0 },
    })
}

pub fn resilience_sweep(config: &SweepConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    (0..config.trials)
        .into_par_iter()
        .map(|t| resilience_trial(config, t, derive_seed(config.master_seed, t as u64)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditTrial {
    pub trial: usize,
    pub seed: u64,
    pub edges: usize,
    pub bad_count: usize,
    pub bad_bound: f64,
    pub within_bound: bool,
}

pub const AUDIT_HEADER: &str = "trial,seed,n,p,beta,eps_prime,edges,bad_count,bad_bound,within_bound";

/// Counts bad directions in independent samples of `G(n, n, p)`.
pub fn direction_audit_trials(
    n: usize,
    p: f64,
    beta: f64,
    eps_prime: f64,
    trials: usize,
    master_seed: u64,
) -> Result<Vec<AuditTrial>> {
    let params = GoodnessParams::new(n, beta, eps_prime, p)?;
    check_trials(trials)?;
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = derive_seed(master_seed, trial as u64);
            let g = sample_random(&RandomModel::new(n, p, seed)?);
            let report = audit_directions(&g, &params, None, None, None)?;
            Ok(AuditTrial {
                trial,
                seed,
                edges: g.edge_count(),
                bad_count: report.bad_count,
                bad_bound: report.bad_bound,
                within_bound: report.within_bound,
            })
        })
        .collect()
}

pub fn audit_csv(n: usize, p: f64, beta: f64, eps_prime: f64, rows: &[AuditTrial]) -> String {
    let mut out = format!("{AUDIT_HEADER}\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{n},{p},{beta},{eps_prime},{},{},{},{}",
            r.trial, r.seed, r.edges, r.bad_count, r.bad_bound, r.within_bound
        );
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TightnessMode {
    C4Breaker,
    Fan,
}

impl std::str::FromStr for TightnessMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c4-breaker" => Ok(TightnessMode::C4Breaker),
            "fan" => Ok(TightnessMode::Fan),
            other => Err(Error::invalid(format!("unknown tightness mode `{other}`"))),
        }
    }
}

/// One tightness run. `graph` and `log` belong to the graph the summary
/// describes; for the fan mode that is the raw sample.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TightnessSummary {
    pub mode: TightnessMode,
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub edges_before: usize,
    pub c4_before: u64,
    pub deleted: usize,
    pub edges_after: usize,
    pub deleted_fraction: f64,
    pub c4_after: u64,
    /// The output keeps the standard Hamilton cycle (for the fan mode: when
    /// applied to the sample with `C_{2n}` planted).
    pub hamiltonian: bool,
    /// Fan mode: `p (n^2 + n + 2) / 2`.
    pub expected_after: Option<f64>,
    /// Fan mode: a 4-cycle survived although the construction is meant to avoid them.
    pub c4_discrepancy: Option<bool>,
    #[serde(skip)]
    pub graph: BalancedBipartiteGraph,
    #[serde(skip)]
    pub log: crate::adversary::DeletionLog,
}

pub fn tightness_trial(mode: TightnessMode, n: usize, p: f64, trial: usize, seed: u64) -> Result<TightnessSummary> {
    let sample = sample_random(&RandomModel::new(n, p, seed)?);
    match mode {
        TightnessMode::C4Breaker => {
            let g = sample.with_standard_cycle()?;
            let (out, log) = quadrilateral_breaker(&g, &standard_hamilton(n)?, None)?;
            let c4_after = out.four_cycle_count();
            if c4_after != 0 {
                return Err(Error::Internal(format!("{c4_after} 4-cycles survived the breaker")));
            }
            Ok(TightnessSummary {
                mode,
                trial,
                seed,
                n,
                p,
                edges_before: g.edge_count(),
                c4_before: g.four_cycle_count(),
                deleted: log.len(),
                edges_after: out.edge_count(),
                deleted_fraction: log.len() as f64 / g.edge_count().max(1) as f64,
                c4_after,
                hamiltonian: out.contains_standard_cycle(),
                expected_after: None,
                c4_discrepancy: None,
                graph: out,
                log,
            })
        }
        TightnessMode::Fan => {
            let (out, log) = fan_construction(&sample);
            let (planted, _) = fan_construction(&sample.with_standard_cycle()?);
            let c4_after = out.four_cycle_count();
            Ok(TightnessSummary {
                mode,
                trial,
                seed,
                n,
                p,
                edges_before: sample.edge_count(),
                c4_before: sample.four_cycle_count(),
                deleted: log.len(),
                edges_after: out.edge_count(),
                deleted_fraction: log.len() as f64 / sample.edge_count().max(1) as f64,
                c4_after,
                hamiltonian: planted.contains_standard_cycle(),
                expected_after: Some(p * fan_kept_pairs(n) as f64),
                c4_discrepancy: Some(c4_after > 0),
                graph: out,
                log,
            })
        }
    }
}

pub fn tightness_trials(mode: TightnessMode, n: usize, p: f64, trials: usize, master_seed: u64) -> Result<Vec<TightnessSummary>> {
    check_trials(trials)?;
    (0..trials)
        .into_par_iter()
        .map(|t| tightness_trial(mode, n, p, t, derive_seed(master_seed, t as u64)))
        .collect()
}

pub const TIGHTNESS_HEADER: &str =
    "trial,seed,mode,n,p,edges_before,c4_before,deleted,edges_after,deleted_fraction,c4_after,hamiltonian,expected_after,c4_discrepancy";

pub fn tightness_csv(rows: &[TightnessSummary]) -> String {
    let mut out = format!("{TIGHTNESS_HEADER}\n");
    for r in rows {
        let mode = match r.mode {
            TightnessMode::C4Breaker => "c4-breaker",
            TightnessMode::Fan => "fan",
        };
        let _ = writeln!(
            out,
            "{},{},{mode},{},{},{},{},{},{},{},{},{},{},{}",
            r.trial,
            r.seed,
            r.n,
            r.p,
            r.edges_before,
            r.c4_before,
            r.deleted,
            r.edges_after,
            r.deleted_fraction,
            r.c4_after,
            r.hamiltonian,
            r.expected_after.map(|x| x.to_string()).unwrap_or_default(),
            r.c4_discrepancy.map(|x| x.to_string()).unwrap_or_default(),
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChernoffRow {
    pub eps: f64,
    pub mean: f64,
    /// Fraction of samples with `|X - mean| >= eps * mean`.
    pub observed: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Slack allowed on top of the bound for sampling noise.
pub const CHERNOFF_SLACK: f64 = 3.0 * 0.003_162_277_660_168_379_5; // 3 * 10^(-2.5)

/// Draws `samples` values of `Binomial(trials, p)` and compares the observed
/// two-sided tail frequency with the bound for each `eps`.
pub fn chernoff_check(trials: u64, p: f64, samples: usize, eps: &[f64], seed: u64) -> Result<Vec<ChernoffRow>> {
    let dist = Binomial::new(trials, p).map_err(|e| Error::invalid(format!("binomial({trials}, {p}): {e}")))?;
    if samples == 0 {
        return Err(Error::invalid("at least one sample is needed"));
    }
    let mean = trials as f64 * p;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<u64> = (0..samples).map(|_| dist.sample(&mut rng)).collect();
    eps.iter()
        .map(|&e| {
            let bound = chernoff_tail_bound(e, mean)?;
            let hits = draws.iter().filter(|&&x| (x as f64 - mean).abs() >= e * mean).count();
            let observed = hits as f64 / samples as f64;
            Ok(ChernoffRow { eps: e, mean, observed, bound, pass: observed <= bound + CHERNOFF_SLACK })
        })
        .collect()
}
