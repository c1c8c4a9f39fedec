//! Cycle certificates and the even-cycle spectrum engine.
//!
//! Two engines answer "does `g` contain a cycle of length `t`":
//!
//! * exhaustive search (small `n`), where every answer is definitive;
//! * certificate search, which relabels `g` so a known Hamilton cycle becomes
//!   `0, 1, ..., 2n-1` and then looks for crossing chord pairs, then
//!   shortcuts, and only then falls back to budgeted backtracking.
//!
//! A length is reported `Absent` only after a complete search.

use std::fmt;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bigraph::{BalancedBipartiteGraph, Edge, ParityPermutation};
use crate::directions::DirectionIndex;
use crate::error::{Error, Result};
use crate::shortcuts;

/// Largest `n` accepted by the exhaustive spectrum mode.
pub const EXHAUSTIVE_MAX_N: usize = 6;
/// Default cap on `n` for [`hamiltonian_bruteforce`].
pub const HAMILTON_BRUTEFORCE_CAP: usize = 7;
/// Default backtracking budget (extension steps) per length in certificate mode.
pub const DEFAULT_DFS_BUDGET: u64 = 1_000_000;

/// An explicit vertex sequence claimed to be a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleCertificate {
    vertices: Vec<usize>,
}

impl CycleCertificate {
    pub fn new(vertices: Vec<usize>) -> Self {
        CycleCertificate { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs, including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let t = self.vertices.len();
        (0..t).map(move |k| (self.vertices[k], self.vertices[(k + 1) % t]))
    }

    pub fn relabel(&self, perm: &ParityPermutation) -> Self {
        CycleCertificate {
            vertices: self.vertices.iter().map(|&v| perm.apply(v)).collect(),
        }
    }

    /// `cycle <t> v0 v1 ... v{t-1}`
    pub fn to_line(&self) -> String {
        let mut s = format!("cycle {}", self.vertices.len());
        for v in &self.vertices {
            s.push(' ');
            s.push_str(&v.to_string());
        }
        s
    }

    pub fn from_line(line: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let mut parts = line.trim_end_matches('\n').split(' ');
        if parts.next() != Some("cycle") {
            return Err(bad("expected `cycle <t> ...`".into()));
        }
        let t: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("missing cycle length".into()))?;
        let vertices = parts
            .map(|s| s.parse::<usize>().map_err(|_| bad(format!("bad label `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if vertices.len() != t {
            return Err(bad(format!("declared length {t} but {} labels", vertices.len())));
        }
        Ok(CycleCertificate { vertices })
    }
}

impl fmt::Display for CycleCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Why a certificate does not witness a cycle of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleDefect {
    OddLength(usize),
    TooShort(usize),
    LabelOutOfRange(usize),
    RepeatedLabel(usize),
    ParityClash(usize, usize),
    MissingEdge(usize, usize),
}

impl fmt::Display for CycleDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleDefect::OddLength(t) => write!(f, "odd length {t}"),
            CycleDefect::TooShort(t) => write!(f, "length {t} is below 4"),
            CycleDefect::LabelOutOfRange(v) => write!(f, "label {v} out of range"),
            CycleDefect::RepeatedLabel(v) => write!(f, "label {v} repeated"),
            CycleDefect::ParityClash(u, v) => write!(f, "{u} and {v} have the same parity"),
            CycleDefect::MissingEdge(u, v) => write!(f, "missing edge {{{u}, {v}}}"),
        }
    }
}

/// Checks that `c` is a cycle of `g`: even length at least 4, distinct
/// labels, alternating parity, and every cyclic consecutive pair an edge.
pub fn validate_cycle(g: &BalancedBipartiteGraph, c: &CycleCertificate) -> Result<(), CycleDefect> {
    let t = c.len();
    let two_n = g.vertex_count();
    if let Some(&v) = c.vertices.iter().find(|&&v| v >= two_n) {
        return Err(CycleDefect::LabelOutOfRange(v));
    }
    if t % 2 == 1 {
        return Err(CycleDefect::OddLength(t));
    }
    if t < 4 {
        return Err(CycleDefect::TooShort(t));
    }
    let mut seen = vec![false; two_n];
    for &v in &c.vertices {
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleDefect::RepeatedLabel(v));
        }
    }
    for (u, v) in c.edges() {
        if u % 2 == v % 2 {
            return Err(CycleDefect::ParityClash(u, v));
        }
    }
    for (u, v) in c.edges() {
        if !g.has_edge(u, v) {
            return Err(CycleDefect::MissingEdge(u, v));
        }
    }
    Ok(())
}

/// `0, 1, ..., 2n-1`
pub fn standard_hamilton(n: usize) -> Result<CycleCertificate> {
    if n < 2 {
        return Err(Error::invalid("the standard Hamilton cycle needs n >= 2"));
    }
    Ok(CycleCertificate::new((0..2 * n).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CycleCertificate),
    /// Complete search found nothing.
    Absent,
    /// Budget ran out first.
    Unknown,
}

fn check_length(g: &BalancedBipartiteGraph, t: usize) -> Result<()> {
    if t % 2 == 1 || t < 4 || t > g.vertex_count() {
        return Err(Error::invalid(format!(
            "cycle length {t} must be even and in [4, {}]",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Backtracking search for a cycle of length `t`.
///
/// Cycles are enumerated by their smallest label `s`; the path from `s` only
/// uses labels above `s`, neighbors are tried in ascending order, and a branch
/// is cut when the BFS distance back to `s` (inside the labels above `s`)
/// exceeds the steps left. `budget` caps the number of path extensions;
/// `None` searches to completion.
pub fn find_cycle_of_length(
    g: &BalancedBipartiteGraph,
    t: usize,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    check_length(g, t)?;
    let mut steps = 0u64;
    Ok(search_cycle(g, t, budget, &mut steps))
}

fn search_cycle(g: &BalancedBipartiteGraph, t: usize, budget: Option<u64>, steps: &mut u64) -> SearchOutcome {
    let two_n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..two_n).map(|v| g.neighbors(v).collect()).collect();
    let mut dist = vec![usize::MAX; two_n];
    let mut on_path = vec![false; two_n];
    let mut path = Vec::with_capacity(t);
    let mut queue = std::collections::VecDeque::new();

    for s in 0..two_n.saturating_sub(t - 1) {
        // Distances from s restricted to labels >= s.
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if w > s && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (s + 1..two_n).filter(|&v| dist[v] != usize::MAX).count() < t - 1 {
            continue;
        }
        path.clear();
        path.push(s);
        on_path.iter_mut().for_each(|b| *b = false);
        on_path[s] = true;
        match extend(&adj, &dist, t, budget, steps, &mut path, &mut on_path) {
            Extend::Found => return SearchOutcome::Found(CycleCertificate::new(path)),
            Extend::OutOfBudget => return SearchOutcome::Unknown,
            Extend::Exhausted => {}
        }
    }
    SearchOutcome::Absent
}

enum Extend {
    Found,
    Exhausted,
    OutOfBudget,
}

fn extend(
    adj: &[Vec<usize>],
    dist: &[usize],
    t: usize,
    budget: Option<u64>,
    steps: &mut u64,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Extend {
    let s = path[0];
    let v = *path.last().expect("path starts non-empty");
    if path.len() == t {
        return if adj[v].binary_search(&s).is_ok() {
            Extend::Found
        } else {
            Extend::Exhausted
        };
    }
    // After adding w the path has len+1 vertices; t - len - 1 more, then the
    // closing edge: dist[w] <= t - len.
    let slack = t - path.len();
    for &w in &adj[v] {
        if w <= s || on_path[w] || dist[w] > slack {
            continue;
        }
        *steps += 1;
        if budget.is_some_and(|b| *steps > b) {
            return Extend::OutOfBudget;
        }
        path.push(w);
        on_path[w] = true;
        match extend(adj, dist, t, budget, steps, path, on_path) {
            Extend::Exhausted => {}
            // The search stops here; `path` is the answer when found.
            other => return other,
        }
        on_path[w] = false;
        path.pop();
    }
    Extend::Exhausted
}

/// Set of cycle lengths present in a graph with `2n <= 24`, as a bitmask
/// (bit `t` set when a cycle of length `t` exists).
///
/// Dynamic program over vertex subsets: for each smallest vertex `s`, the
/// table holds, per subset of labels `>= s` containing `s`, the endpoints of
/// simple paths from `s` covering exactly that subset.
pub fn cycle_length_mask(g: &BalancedBipartiteGraph) -> Result<u64> {
    let two_n = g.vertex_count();
    if two_n > 24 {
        return Err(Error::invalid("cycle_length_mask supports at most 24 vertices"));
    }
    let adj: Vec<u32> = (0..two_n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    Ok(cycle_length_mask_raw(&adj))
}

pub(crate) fn cycle_length_mask_raw(adj: &[u32]) -> u64 {
    let two_n = adj.len();
    let mut lengths = 0u64;
    let mut dp: Vec<u32> = Vec::new();
    for s in 0..two_n.saturating_sub(3) {
        // Local bit k stands for label s + k.
        let k = two_n - s;
        let local: Vec<u32> = (s..two_n).map(|v| adj[v] >> s).collect();
        dp.clear();
        dp.resize(1 << k, 0);
        dp[1] = 1;
        for mask in (1u32..1 << k).step_by(2) {
            let ends = dp[mask as usize];
            if ends == 0 {
                continue;
            }
            let size = mask.count_ones();
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                if size >= 4 && local[v] & 1 == 1 {
                    lengths |= 1 << size;
                }
                let mut next = local[v] & !mask;
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    dp[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    lengths
}

/// Definitive Hamiltonicity test by backtracking, for `n <= 7`.
pub fn hamiltonian_bruteforce(g: &BalancedBipartiteGraph) -> Result<bool> {
    hamiltonian_bruteforce_with_cap(g, HAMILTON_BRUTEFORCE_CAP)
}

pub fn hamiltonian_bruteforce_with_cap(g: &BalancedBipartiteGraph, cap: usize) -> Result<bool> {
    let n = g.n();
    if n > cap || n > 31 {
        return Err(Error::invalid(format!(
            "n = {n} exceeds the brute-force cap {cap}; supply a planted Hamilton cycle instead"
        )));
    }
    if n < 2 {
        return Ok(false);
    }
    let two_n = 2 * n;
    let adj: Vec<u64> = (0..two_n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect();
    if adj.iter().any(|a| a.count_ones() < 2) {
        return Ok(false);
    }
    let full = (1u64 << two_n) - 1;
    fn go(adj: &[u64], full: u64, v: usize, visited: u64) -> bool {
        if visited == full {
            return adj[v] & 1 == 1;
        }
        let mut next = adj[v] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            let vis = visited | 1 << w;
            // Every unvisited vertex still needs two usable neighbors
            // (unvisited ones, the current end, or the start).
            let usable = !vis | 1 << w | 1;
            let mut rest = full & !vis;
            let mut dead = false;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (adj[u] & usable).count_ones() < 2 {
                    dead = true;
                    break;
                }
            }
            if !dead && go(adj, full, w, vis) {
                return true;
            }
        }
        false
    }
    Ok(go(&adj, full, 0, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMode {
    Exhaustive,
    CertificateSearch,
}

impl SpectrumMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumMode::Exhaustive => "exhaustive",
            SpectrumMode::CertificateSearch => "certificate-search",
        }
    }
}

impl std::str::FromStr for SpectrumMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SpectrumMode::Exhaustive),
            "certificate" | "certificate-search" => Ok(SpectrumMode::CertificateSearch),
            other => Err(Error::invalid(format!("unknown spectrum mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthStatus {
    Certified(CycleCertificate),
    Absent,
    Unknown,
}

impl LengthStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            LengthStatus::Certified(_) => "certified",
            LengthStatus::Absent => "absent",
            LengthStatus::Unknown => "unknown",
        }
    }
}

/// How a certified length was obtained in certificate mode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpectrumStats {
    pub by_hamilton: usize,
    pub by_crossing: usize,
    pub by_shortcut: usize,
    pub by_backtracking: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: usize,
    pub mode: SpectrumMode,
    /// One entry per even `t` in `[4, 2n]`, ascending.
    pub lengths: Vec<(usize, LengthStatus)>,
    /// Backtracking extension steps spent.
    pub budget_used: u64,
    pub stats: SpectrumStats,
}

impl SpectrumReport {
    pub fn status(&self, t: usize) -> Option<&LengthStatus> {
        self.lengths.iter().find(|(len, _)| *len == t).map(|(_, s)| s)
    }

    pub fn certified(&self) -> impl Iterator<Item = (usize, &CycleCertificate)> {
        self.lengths.iter().filter_map(|(t, s)| match s {
            LengthStatus::Certified(c) => Some((*t, c)),
            _ => None,
        })
    }

    pub fn missing(&self) -> Vec<usize> {
        self.lengths_with(|s| matches!(s, LengthStatus::Absent))
    }

    pub fn unknown(&self) -> Vec<usize> {
        self.lengths_with(|s| matches!(s, LengthStatus::Unknown))
    }

    fn lengths_with(&self, pred: impl Fn(&LengthStatus) -> bool) -> Vec<usize> {
        self.lengths.iter().filter(|(_, s)| pred(s)).map(|(t, _)| *t).collect()
    }

    pub fn verdict(&self) -> Verdict {
        let missing = self.missing();
        let unknown = self.unknown();
        if !missing.is_empty() {
            Verdict::No { missing, unknown }
        } else if !unknown.is_empty() {
            Verdict::Unknown { unknown }
        } else {
            Verdict::Yes
        }
    }

    /// Re-checks every certificate against `g`.
    pub fn revalidate(&self, g: &BalancedBipartiteGraph) -> Result<()> {
        for (t, c) in self.certified() {
            validate_cycle(g, c).map_err(Error::InvalidCycle)?;
            if c.len() != t {
                return Err(Error::Internal(format!("certificate for {t} has length {}", c.len())));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct LengthMap<'a>(&'a [(usize, LengthStatus)]);

impl Serialize for LengthMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (t, status) in self.0 {
            map.serialize_entry(&t.to_string(), status.as_str())?;
        }
        map.end()
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpectrumReport", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("mode", self.mode.as_str())?;
        st.serialize_field("lengths", &LengthMap(&self.lengths))?;
        st.serialize_field("verdict", self.verdict().as_str())?;
        st.serialize_field("budget_used", &self.budget_used)?;
        st.serialize_field("stats", &self.stats)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No { missing: Vec<usize>, unknown: Vec<usize> },
    Unknown { unknown: Vec<usize> },
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No { .. } => "no",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

/// Per-length status for every even `t` in `[4, 2n]`.
///
/// Exhaustive mode needs `n <= 6` and ignores `hamilton` apart from
/// validating it. Certificate mode needs a Hamilton cycle of `g`.
pub fn even_cycle_spectrum(
    g: &BalancedBipartiteGraph,
    hamilton: Option<&CycleCertificate>,
    mode: SpectrumMode,
) -> Result<SpectrumReport> {
    even_cycle_spectrum_with_budget(g, hamilton, mode, DEFAULT_DFS_BUDGET)
}

pub fn even_cycle_spectrum_with_budget(
    g: &BalancedBipartiteGraph,
    hamilton: Option<&CycleCertificate>,
    mode: SpectrumMode,
    budget: u64,
) -> Result<SpectrumReport> {
    if let Some(h) = hamilton {
        validate_cycle(g, h).map_err(Error::InvalidCycle)?;
        if h.len() != g.vertex_count() {
            return Err(Error::invalid(format!(
                "hamilton certificate has length {}, expected {}",
                h.len(),
                g.vertex_count()
            )));
        }
    }
    let n = g.n();
    let ts: Vec<usize> = (4..=2 * n).step_by(2).collect();
    match mode {
        SpectrumMode::Exhaustive => {
            if n > EXHAUSTIVE_MAX_N {
                return Err(Error::invalid(format!(
                    "exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}, got {n}"
                )));
            }
            let mut budget_used = 0;
            let mut lengths = Vec::with_capacity(ts.len());
            for &t in &ts {
                let status = match search_cycle(g, t, None, &mut budget_used) {
                    SearchOutcome::Found(c) => LengthStatus::Certified(c),
                    SearchOutcome::Absent => LengthStatus::Absent,
                    SearchOutcome::Unknown => unreachable!("unbudgeted search is complete"),
                };
                lengths.push((t, status));
            }
            let stats = SpectrumStats {
                by_backtracking: lengths.iter().filter(|(_, s)| matches!(s, LengthStatus::Certified(_))).count(),
                ..SpectrumStats::default()
            };
            let report = SpectrumReport { n, mode, lengths, budget_used, stats };
            report.revalidate(g)?;
            Ok(report)
        }
        SpectrumMode::CertificateSearch => {
            let h = hamilton.ok_or_else(|| Error::invalid("certificate mode needs a Hamilton cycle"))?;
            certificate_spectrum(g, h, &ts, budget)
        }
    }
}

/// The relabeling that sends `hamilton` to `0, 1, ..., 2n-1`.
pub fn canonical_frame(hamilton: &CycleCertificate) -> Result<ParityPermutation> {
    let verts = hamilton.vertices();
    let start = match verts.first() {
        Some(v) if v % 2 == 0 => 0,
        Some(_) => 1,
        None => return Err(Error::invalid("empty Hamilton cycle")),
    };
    let two_n = verts.len();
    let mut mapping = vec![0; two_n];
    for k in 0..two_n {
        mapping[verts[(start + k) % two_n]] = k;
    }
    ParityPermutation::new(mapping)
}

enum Source {
    Crossing,
    Shortcut,
    Backtracking,
}

fn certificate_spectrum(
    g: &BalancedBipartiteGraph,
    hamilton: &CycleCertificate,
    ts: &[usize],
    budget: u64,
) -> Result<SpectrumReport> {
    let n = g.n();
    let two_n = 2 * n;
    let to_canon = canonical_frame(hamilton)?;
    let back = to_canon.inverse();
    let canon = g.relabel(&to_canon)?;
    let index = DirectionIndex::new(&canon);

    let results: Vec<(usize, LengthStatus, Option<Source>, u64)> = ts
        .par_iter()
        .map(|&t| {
            if t == two_n {
                return (t, LengthStatus::Certified(hamilton.clone()), None, 0);
            }
            if let Some(c) = index.find_crossing_cycle(t) {
                return (t, LengthStatus::Certified(c.relabel(&back)), Some(Source::Crossing), 0);
            }
            if let Some(c) = shortcuts::find_shortcut_cycle(&canon, t) {
                return (t, LengthStatus::Certified(c.relabel(&back)), Some(Source::Shortcut), 0);
            }
            let mut steps = 0;
            let status = match search_cycle(&canon, t, Some(budget), &mut steps) {
                SearchOutcome::Found(c) => LengthStatus::Certified(c.relabel(&back)),
                SearchOutcome::Absent => LengthStatus::Absent,
                SearchOutcome::Unknown => LengthStatus::Unknown,
            };
            (t, status, Some(Source::Backtracking), steps)
        })
        .collect();

    let mut stats = SpectrumStats::default();
    let mut budget_used = 0;
    let mut lengths = Vec::with_capacity(results.len());
    for (t, status, source, steps) in results {
        budget_used += steps;
        if matches!(status, LengthStatus::Certified(_)) {
            match source {
                None => stats.by_hamilton += 1,
                Some(Source::Crossing) => stats.by_crossing += 1,
                Some(Source::Shortcut) => stats.by_shortcut += 1,
                Some(Source::Backtracking) => stats.by_backtracking += 1,
            }
        }
        lengths.push((t, status));
    }
    let report = SpectrumReport {
        n,
        mode: SpectrumMode::CertificateSearch,
        lengths,
        budget_used,
        stats,
    };
    report.revalidate(g)?;
    Ok(report)
}

/// Thin wrapper over [`even_cycle_spectrum`].
pub fn is_bipancyclic(
    g: &BalancedBipartiteGraph,
    hamilton: Option<&CycleCertificate>,
    mode: SpectrumMode,
) -> Result<Verdict> {
    Ok(even_cycle_spectrum(g, hamilton, mode)?.verdict())
}

/// Graph of a certificate's edges (used to build `C_{2n} ∪ X` style oracles).
pub fn certificate_graph(n: usize, certs: &[&CycleCertificate], extra: &[Edge]) -> Result<BalancedBipartiteGraph> {
    let mut g = BalancedBipartiteGraph::empty(n)?;
    for c in certs {
        for (u, v) in c.edges() {
            g.insert(Edge::checked(u, v, n)?);
        }
    }
    for &e in extra {
        g.insert(e);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::{complete_bipartite, cycle_graph, sample_random, RandomModel};
    use proptest::prelude::*;

    fn c8_plus(extra: &[(usize, usize)]) -> BalancedBipartiteGraph {
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend_from_slice(extra);
        BalancedBipartiteGraph::from_edges(4, edges).unwrap()
    }

    #[test]
    fn standard_hamilton_examples() {
        assert_eq!(standard_hamilton(2).unwrap().vertices(), &[0, 1, 2, 3]);
        let h4 = standard_hamilton(4).unwrap();
        assert_eq!(h4.vertices(), &(0..8).collect::<Vec<_>>()[..]);
        assert!(validate_cycle(&complete_bipartite(4).unwrap(), &h4).is_ok());
        assert_eq!(standard_hamilton(3).unwrap().len(), 6);
        assert!(standard_hamilton(1).is_err());
    }

    #[test]
    fn validation_reasons() {
        let c8 = cycle_graph(4).unwrap();
        assert!(validate_cycle(&c8, &standard_hamilton(4).unwrap()).is_ok());
        assert_eq!(
            validate_cycle(&c8, &CycleCertificate::new(vec![0, 1, 2])),
            Err(CycleDefect::OddLength(3))
        );
        assert_eq!(
            validate_cycle(&c8, &CycleCertificate::new(vec![0, 1, 2, 5])),
            Err(CycleDefect::MissingEdge(2, 5))
        );
        assert_eq!(
            validate_cycle(&c8, &CycleCertificate::new(vec![0, 1, 0, 1])),
            Err(CycleDefect::RepeatedLabel(0))
        );
        assert_eq!(
            validate_cycle(&c8, &CycleCertificate::new(vec![0, 2, 1, 3])),
            Err(CycleDefect::ParityClash(0, 2))
        );
        assert_eq!(
            validate_cycle(&c8, &CycleCertificate::new(vec![0, 9, 2, 3])),
            Err(CycleDefect::LabelOutOfRange(9))
        );
        assert_eq!(
            validate_cycle(&c8, &CycleCertificate::new(vec![0, 1])),
            Err(CycleDefect::TooShort(2))
        );
    }

    #[test]
    fn certificate_line_round_trip() {
        let c = CycleCertificate::new(vec![0, 1, 2, 3]);
        assert_eq!(c.to_line(), "cycle 4 0 1 2 3");
        assert_eq!(CycleCertificate::from_line("cycle 4 0 1 2 3").unwrap(), c);
        assert!(CycleCertificate::from_line("cycle 5 0 1 2 3").is_err());
        assert!(CycleCertificate::from_line("cycles 4 0 1 2 3").is_err());
    }

    #[test]
    fn find_cycle_examples() {
        let k33 = complete_bipartite(3).unwrap();
        match find_cycle_of_length(&k33, 4, None).unwrap() {
            SearchOutcome::Found(c) => assert_eq!(c.vertices(), &[0, 1, 2, 3]),
            other => panic!("{other:?}"),
        }
        let c8 = cycle_graph(4).unwrap();
        assert_eq!(find_cycle_of_length(&c8, 6, None).unwrap(), SearchOutcome::Absent);
        let chorded = c8_plus(&[(0, 3)]);
        assert_eq!(
            find_cycle_of_length(&chorded, 4, None).unwrap(),
            SearchOutcome::Found(CycleCertificate::new(vec![0, 1, 2, 3]))
        );
        assert!(find_cycle_of_length(&c8, 5, None).is_err());
        assert!(find_cycle_of_length(&c8, 10, None).is_err());
        assert!(find_cycle_of_length(&c8, 2, None).is_err());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let k = complete_bipartite(6).unwrap();
        let g = k.remove_edges(&[Edge::new(0, 1).unwrap()]).unwrap();
        assert_eq!(find_cycle_of_length(&g, 12, Some(1)).unwrap(), SearchOutcome::Unknown);
    }

    #[test]
    fn spectrum_examples() {
        let k44 = complete_bipartite(4).unwrap();
        let r = even_cycle_spectrum(&k44, None, SpectrumMode::Exhaustive).unwrap();
        assert!(r.lengths.iter().all(|(_, s)| matches!(s, LengthStatus::Certified(_))));
        assert_eq!(r.lengths.len(), 3);

        let c8 = cycle_graph(4).unwrap();
        let r = even_cycle_spectrum(&c8, None, SpectrumMode::Exhaustive).unwrap();
        assert_eq!(r.missing(), vec![4, 6]);
        assert!(matches!(r.status(8), Some(LengthStatus::Certified(_))));
        assert_eq!(
            r.to_json(),
            r#"{"n":4,"mode":"exhaustive","lengths":{"4":"absent","6":"absent","8":"certified"},"verdict":"no","budget_used":"#
                .to_string()
                + &r.budget_used.to_string()
                + r#","stats":{"by_hamilton":0,"by_crossing":0,"by_shortcut":0,"by_backtracking":1}}"#
        );

        let h = standard_hamilton(4).unwrap();
        let r = even_cycle_spectrum(&c8, Some(&h), SpectrumMode::CertificateSearch).unwrap();
        assert_eq!(r.missing(), vec![4, 6]);
        assert!(even_cycle_spectrum(&c8, None, SpectrumMode::CertificateSearch).is_err());
        assert!(even_cycle_spectrum(&complete_bipartite(7).unwrap(), None, SpectrumMode::Exhaustive).is_err());
        let bad = CycleCertificate::new(vec![0, 1, 2, 3]);
        assert!(even_cycle_spectrum(&c8, Some(&bad), SpectrumMode::Exhaustive).is_err());
    }

    #[test]
    fn bipancyclic_examples() {
        assert_eq!(
            is_bipancyclic(&complete_bipartite(3).unwrap(), None, SpectrumMode::Exhaustive).unwrap(),
            Verdict::Yes
        );
        assert_eq!(
            is_bipancyclic(&cycle_graph(4).unwrap(), None, SpectrumMode::Exhaustive).unwrap(),
            Verdict::No { missing: vec![4, 6], unknown: vec![] }
        );
        for n in 2..=6 {
            let k = complete_bipartite(n).unwrap();
            assert_eq!(is_bipancyclic(&k, None, SpectrumMode::Exhaustive).unwrap(), Verdict::Yes);
            let h = standard_hamilton(n).unwrap();
            assert_eq!(is_bipancyclic(&k, Some(&h), SpectrumMode::CertificateSearch).unwrap(), Verdict::Yes);
        }
    }

    #[test]
    fn hamiltonian_examples() {
        let c8 = cycle_graph(4).unwrap();
        assert!(hamiltonian_bruteforce(&c8).unwrap());
        let broken = c8.remove_edges(&[Edge::new(0, 1).unwrap()]).unwrap();
        assert!(!hamiltonian_bruteforce(&broken).unwrap());
        assert!(hamiltonian_bruteforce(&complete_bipartite(2).unwrap()).unwrap());
        assert!(hamiltonian_bruteforce(&complete_bipartite(8).unwrap()).is_err());
        assert!(hamiltonian_bruteforce(&complete_bipartite(7).unwrap()).unwrap());
    }

    #[test]
    fn relabeled_hamilton_cycle() {
        // Hamilton cycle of K_{3,3} starting at an odd vertex, not in standard order.
        let k = complete_bipartite(3).unwrap();
        let h = CycleCertificate::new(vec![3, 0, 5, 4, 1, 2]);
        assert!(validate_cycle(&k, &h).is_ok());
        let r = even_cycle_spectrum(&k, Some(&h), SpectrumMode::CertificateSearch).unwrap();
        assert_eq!(r.verdict(), Verdict::Yes);
        r.revalidate(&k).unwrap();
    }

    #[test]
    fn length_mask_on_known_graphs() {
        assert_eq!(cycle_length_mask(&cycle_graph(4).unwrap()).unwrap(), 1 << 8);
        assert_eq!(
            cycle_length_mask(&complete_bipartite(4).unwrap()).unwrap(),
            1 << 4 | 1 << 6 | 1 << 8
        );
    }

    fn small_graph() -> impl Strategy<Value = BalancedBipartiteGraph> {
        (2usize..=6, any::<u64>(), 0.2f64..0.9).prop_map(|(n, seed, p)| {
            sample_random(&RandomModel::new(n, p, seed).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exhaustive_agrees_with_subset_dp(g in small_graph()) {
            let r = even_cycle_spectrum(&g, None, SpectrumMode::Exhaustive).unwrap();
            let mask = cycle_length_mask(&g).unwrap();
            for (t, s) in &r.lengths {
                prop_assert_eq!(matches!(s, LengthStatus::Certified(_)), mask >> t & 1 == 1);
            }
            prop_assert_eq!(hamiltonian_bruteforce(&g).unwrap(), mask >> g.vertex_count() & 1 == 1);
        }

        #[test]
        fn certificate_mode_agrees_where_definitive(g in small_graph()) {
            let g = g.with_standard_cycle().unwrap();
            let h = standard_hamilton(g.n()).unwrap();
            let ex = even_cycle_spectrum(&g, None, SpectrumMode::Exhaustive).unwrap();
            let cs = even_cycle_spectrum(&g, Some(&h), SpectrumMode::CertificateSearch).unwrap();
            for ((t, a), (_, b)) in ex.lengths.iter().zip(&cs.lengths) {
                if !matches!(b, LengthStatus::Unknown) {
                    prop_assert_eq!(a.as_str(), b.as_str(), "length {}", t);
                }
            }
        }

        #[test]
        fn spectrum_monotone_under_edge_addition(g in small_graph(), extra_seed: u64) {
            let more = sample_random(&RandomModel::new(g.n(), 0.3, extra_seed).unwrap());
            let extra: Vec<Edge> = more.edges().collect();
            let h = g.with_edges(&extra).unwrap();
            let before = even_cycle_spectrum(&g, None, SpectrumMode::Exhaustive).unwrap();
            let after = even_cycle_spectrum(&h, None, SpectrumMode::Exhaustive).unwrap();
            for ((t, a), (_, b)) in before.lengths.iter().zip(&after.lengths) {
                if matches!(a, LengthStatus::Certified(_)) {
                    prop_assert!(matches!(b, LengthStatus::Certified(_)), "length {} lost", t);
                }
            }
        }
    }
}
