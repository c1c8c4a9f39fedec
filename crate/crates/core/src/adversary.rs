//! Edge-deletion adversaries: breaking every 4-cycle while keeping a Hamilton
//! cycle, the fan construction, and seeded random thinning.

use std::fmt;
use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bigraph::{BalancedBipartiteGraph, Edge};
use crate::cycles::{certificate_graph, validate_cycle, CycleCertificate};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DeletionReason {
    /// Breaks a 4-cycle.
    C4,
    /// Edge at vertex 0 other than `{0, 1}` and `{0, 2n-1}`.
    Hub,
    /// Edge `{i, j}` with even `i >= 2` and `j >= i + 3`.
    Fan,
    /// Random thinning.
    Thin,
}

impl DeletionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            DeletionReason::C4 => "c4",
            DeletionReason::Hub => "hub",
            DeletionReason::Fan => "fan",
            DeletionReason::Thin => "thin",
        }
    }
}

impl fmt::Display for DeletionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DeletionReason {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c4" => Ok(DeletionReason::C4),
            "hub" => Ok(DeletionReason::Hub),
            "fan" => Ok(DeletionReason::Fan),
            "thin" => Ok(DeletionReason::Thin),
            other => Err(Error::invalid(format!("unknown deletion reason {other:?}"))),
        }
    }
}

/// Deleted edges in deletion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeletionLog {
    entries: Vec<(Edge, DeletionReason)>,
}

impl DeletionLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: Edge, reason: DeletionReason) {
        self.entries.push((e, reason));
    }

    pub fn entries(&self) -> &[(Edge, DeletionReason)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, reason: DeletionReason) -> usize {
        self.entries.iter().filter(|(_, r)| *r == reason).count()
    }

    /// `del <even> <odd> <reason>` per line.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(e, r)| format!("del {} {} {}\n", e.even(), e.odd(), r))
            .collect()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut log = DeletionLog::new();
        for (k, line) in text.lines().enumerate() {
            let parse_err = |message: String| Error::Parse { line: k + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [tag, u, v, reason] = fields[..] else {
                return Err(parse_err(format!("expected `del <u> <v> <reason>`, got {line:?}")));
            };
            if tag != "del" {
                return Err(parse_err(format!("expected `del`, got {tag:?}")));
            }
            let label = |s: &str| s.parse::<usize>().map_err(|e| parse_err(format!("{s:?}: {e}")));
            let e = Edge::new(label(u)?, label(v)?).ok_or_else(|| parse_err(format!("{u} and {v} share a class")))?;
            log.push(e, reason.parse().map_err(|e: Error| parse_err(e.to_string()))?);
        }
        Ok(log)
    }

    /// Applies the deletions to `g` in order.
    pub fn replay(&self, g: &BalancedBipartiteGraph) -> Result<BalancedBipartiteGraph> {
        g.remove_edges(self.entries.iter().map(|(e, _)| e))
    }
}

fn check_hamilton(g: &BalancedBipartiteGraph, hamilton: &CycleCertificate) -> Result<BalancedBipartiteGraph> {
    validate_cycle(g, hamilton).map_err(Error::InvalidCycle)?;
    if hamilton.len() != g.vertex_count() {
        return Err(Error::invalid(format!(
            "hamilton certificate has length {}, expected {}",
            hamilton.len(),
            g.vertex_count()
        )));
    }
    certificate_graph(g.n(), &[hamilton], &[])
}

/// Deletes one non-Hamilton edge from 4-cycles until none remain.
///
/// Every 4-cycle has two even vertices `a < b` and two common neighbors, so a
/// single pass over even pairs suffices: deletions only shrink common
/// neighborhoods. With `seed = None` the 4-cycle through the two smallest
/// common neighbors is broken at its smallest non-Hamilton edge; with a seed
/// both choices are random.
pub fn quadrilateral_breaker(
    g: &BalancedBipartiteGraph,
    hamilton: &CycleCertificate,
    seed: Option<u64>,
) -> Result<(BalancedBipartiteGraph, DeletionLog)> {
    let n = g.n();
    if n < 3 {
        return Err(Error::invalid("n = 2 is degenerate: the Hamilton cycle is itself a 4-cycle"));
    }
    let h = check_hamilton(g, hamilton)?;
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut out = g.clone();
    let mut log = DeletionLog::new();
    let words = g.words();
    for a in (0..2 * n).step_by(2) {
        for b in (a + 2..2 * n).step_by(2) {
            loop {
                let common: Vec<usize> = (0..words)
                    .flat_map(|w| {
                        let x = out.row(a)[w] & out.row(b)[w];
                        crate::bigraph::bits_of(x).map(move |bit| 2 * (64 * w + bit) + 1)
                    })
                    .collect();
                if common.len() < 2 {
                    break;
                }
                let (c1, c2) = match rng.as_mut() {
                    None => (common[0], common[1]),
                    Some(r) => {
                        let i = r.random_range(0..common.len());
                        let mut j = r.random_range(0..common.len() - 1);
                        if j >= i {
                            j += 1;
                        }
                        (common[i], common[j])
                    }
                };
                let mut eligible: Vec<Edge> = [(a, c1), (a, c2), (b, c1), (b, c2)]
                    .into_iter()
                    .map(|(u, v)| Edge::new(u, v).expect("even-odd pair"))
                    .filter(|&e| !h.contains(e))
                    .collect();
                eligible.sort();
                let victim = match rng.as_mut() {
                    None => eligible.first().copied(),
                    Some(r) => eligible.choose(r).copied(),
                }
                .ok_or_else(|| Error::Internal(format!("4-cycle {a}-{c1}-{b}-{c2} lies on the Hamilton cycle")))?;
                out.remove(victim);
                log.push(victim, DeletionReason::C4);
            }
        }
    }
    Ok((out, log))
}

/// Vertex 0 keeps only the neighbors 1 and `2n-1`; every even `i >= 2` keeps
/// only odd neighbors `j <= i + 1` (labels compared as integers).
pub fn fan_construction(g: &BalancedBipartiteGraph) -> (BalancedBipartiteGraph, DeletionLog) {
    let last = g.vertex_count() - 1;
    let mut log = DeletionLog::new();
    for e in g.edges() {
        let (i, j) = e.endpoints();
        if i == 0 {
            if j != 1 && j != last {
                log.push(e, DeletionReason::Hub);
            }
        } else if j >= i + 3 {
            log.push(e, DeletionReason::Fan);
        }
    }
    let out = log.replay(g).expect("logged edges come from g");
    (out, log)
}

/// Edges kept by [`fan_construction`] on `K_{n,n}`: `(n^2 + n + 2) / 2`.
pub fn fan_kept_pairs(n: usize) -> usize {
    (n * n + n + 2) / 2
}

/// Deletes uniformly random edges outside `protected` until `target` remain
/// (or only protected edges are left).
pub fn random_thin(
    g: &BalancedBipartiteGraph,
    protected: &BalancedBipartiteGraph,
    target: usize,
    seed: u64,
) -> (BalancedBipartiteGraph, DeletionLog) {
    let mut candidates: Vec<Edge> = g.edges().filter(|&e| !protected.contains(e)).collect();
    let excess = g.edge_count().saturating_sub(target).min(candidates.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (chosen, _) = candidates.partial_shuffle(&mut rng, excess);
    let mut log = DeletionLog::new();
    for &e in chosen.iter() {
        log.push(e, DeletionReason::Thin);
    }
    let out = log.replay(g).expect("victims come from g");
    (out, log)
}

/// Random thinning down to `max(target, 2n)` edges that never touches `hamilton`.
pub fn random_thin_keep_hamilton(
    g: &BalancedBipartiteGraph,
    hamilton: &CycleCertificate,
    target: usize,
    seed: u64,
) -> Result<(BalancedBipartiteGraph, DeletionLog)> {
    let h = check_hamilton(g, hamilton)?;
    if target < g.vertex_count() {
        return Err(Error::invalid(format!(
            "target {target} is below 2n = {}",
            g.vertex_count()
        )));
    }
    Ok(random_thin(g, &h, target, seed))
}
