//! `l`-shortcuts: four chords of the standard Hamilton cycle whose union with
//! it contains cycles of lengths `l + 8` and `2n - l`.
//!
//! A shortcut is given by anchors `i1, i2, i3, i4` and has chords
//! `{i1, i3}`, `{i1+1, i4}`, `{i2, i4+l+1}`, `{i2+1, i3+1}` (mod `2n`). Type I
//! places the eight endpoints clockwise as
//! `i1, i1+1, i2, i2+1, i3, i3+1, i4, i4+l+1`; type II as
//! `i1, i1+1, i2, i2+1, i4, i4+l+1, i3, i3+1`. "Clockwise" means the offsets
//! from `i1` are strictly increasing.

use std::ops::ControlFlow;

use rand::distr::{Bernoulli, Distribution};
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bigraph::{complete_bipartite, BalancedBipartiteGraph, Edge};
use crate::cycles::CycleCertificate;
use crate::error::{Error, Result};

/// Largest `n` for which the shortcut hypergraph of `K_{n,n}` is materialized.
pub const HYPERGRAPH_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ShortcutKind {
    TypeI,
    TypeII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Shortcut {
    pub n: usize,
    pub kind: ShortcutKind,
    /// `[i1, i2, i3, i4]`
    pub anchors: [usize; 4],
    pub l: usize,
}

impl Shortcut {
    /// Checks every structural condition of an `l`-shortcut.
    pub fn new(n: usize, kind: ShortcutKind, anchors: [usize; 4], l: usize) -> Result<Self> {
        let two_n = 2 * n;
        if l % 2 == 1 || l > n {
            return Err(Error::invalid(format!("l = {l} must be even in [0, n]")));
        }
        if anchors.iter().any(|&a| a >= two_n) {
            return Err(Error::invalid(format!("anchors {anchors:?} out of range")));
        }
        let s = Shortcut { n, kind, anchors, l };
        let [i1, i2, ..] = anchors;
        if i1 % 2 != i2 % 2 {
            return Err(Error::invalid("i1 + 1 and i2 must lie in different classes"));
        }
        let offsets = s.positions().map(|p| (p + two_n - i1) % two_n);
        if offsets.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "positions {:?} are not distinct and clockwise",
                s.positions()
            )));
        }
        for (u, v) in s.chord_labels() {
            match Edge::new(u, v) {
                Some(e) if !e.is_cycle_edge(n) => {}
                Some(e) => return Err(Error::invalid(format!("chord {e} is a cycle edge"))),
                None => return Err(Error::invalid(format!("chord {{{u}, {v}}} joins one class"))),
            }
        }
        Ok(s)
    }

    fn at(&self, base: usize, plus: usize) -> usize {
        (base + plus) % (2 * self.n)
    }

    /// The eight endpoint positions in the clockwise order of the kind.
    pub fn positions(&self) -> [usize; 8] {
        let [i1, i2, i3, i4] = self.anchors;
        let (a, b, c, d) = (self.at(i1, 1), self.at(i2, 1), self.at(i3, 1), self.at(i4, self.l + 1));
        match self.kind {
            ShortcutKind::TypeI => [i1, a, i2, b, i3, c, i4, d],
            ShortcutKind::TypeII => [i1, a, i2, b, i4, d, i3, c],
        }
    }

    fn chord_labels(&self) -> [(usize, usize); 4] {
        let [i1, i2, i3, i4] = self.anchors;
        [
            (i1, i3),
            (self.at(i1, 1), i4),
            (i2, self.at(i4, self.l + 1)),
            (self.at(i2, 1), self.at(i3, 1)),
        ]
    }

    /// `{i1, i3}, {i1+1, i4}, {i2, i4+l+1}, {i2+1, i3+1}`
    pub fn chords(&self) -> [Edge; 4] {
        self.chord_labels().map(|(u, v)| Edge::new(u, v).expect("validated on construction"))
    }

    /// Chords in ascending order; two shortcuts with equal keys are the same hyperedge.
    pub fn chord_key(&self) -> [Edge; 4] {
        let mut c = self.chords();
        c.sort();
        c
    }
}

/// Recognizes four edges as an `l`-shortcut, recovering kind and anchors.
///
/// When several anchor assignments fit, the smallest `(kind, anchors)` wins.
pub fn classify_shortcut(n: usize, chords: [Edge; 4], l: usize) -> Result<Option<Shortcut>> {
    if l % 2 == 1 {
        return Err(Error::invalid(format!("l = {l} must be even")));
    }
    if l > n {
        return Ok(None);
    }
    let two_n = 2 * n;
    let mut key = chords;
    key.sort();
    if key.windows(2).any(|w| w[0] == w[1]) || chords.iter().any(|e| e.odd() >= two_n) {
        return Ok(None);
    }
    let mut best: Option<Shortcut> = None;
    // The chord {i1, i3} fixes i1 and i3 (either orientation); the rest follows.
    for first in chords {
        for (i1, i3) in [(first.even(), first.odd()), (first.odd(), first.even())] {
            let i1p = (i1 + 1) % two_n;
            let Some(i4) = chords.iter().find_map(|e| other_end(*e, i1p)) else { continue };
            let i3p = (i3 + 1) % two_n;
            let Some(i2p) = chords.iter().find_map(|e| other_end(*e, i3p)) else { continue };
            let i2 = (i2p + two_n - 1) % two_n;
            for kind in [ShortcutKind::TypeI, ShortcutKind::TypeII] {
                if let Ok(s) = Shortcut::new(n, kind, [i1, i2, i3, i4], l) {
                    if s.chord_key() == key && best.is_none_or(|b| (s.kind, s.anchors) < (b.kind, b.anchors)) {
                        best = Some(s);
                    }
                }
            }
        }
    }
    Ok(best)
}

fn other_end(e: Edge, v: usize) -> Option<usize> {
    if e.even() == v {
        Some(e.odd())
    } else if e.odd() == v {
        Some(e.even())
    } else {
        None
    }
}

fn check_l(g: &BalancedBipartiteGraph, l: usize) -> Result<()> {
    if l % 2 == 1 || l > g.n() {
        return Err(Error::invalid(format!("l = {l} must be even in [0, n]")));
    }
    Ok(())
}

/// Candidate offsets (from `i1`) for `i3` and `i4` given `i1` and `i2 = i1 + off2`.
fn candidates(g: &BalancedBipartiteGraph, l: usize, i1: usize, off2: usize) -> (Vec<usize>, Vec<usize>) {
    let two_n = g.vertex_count();
    let at = |o: usize| (i1 + o) % two_n;
    let (i1p, i2, i2p) = (at(1), at(off2), at(off2 + 1));
    // i3 has the other parity; i3 + 1 must come before wrapping back to i1.
    let c3 = (off2 + 3..two_n - 1)
        .step_by(2)
        .filter(|&o| g.has_edge(i1, at(o)) && g.has_edge(i2p, at(o + 1)))
        .collect();
    // i4 has i1's parity; i4 + l + 1 must come before wrapping back to i1.
    let c4 = if two_n >= l + 2 {
        (off2 + 2..two_n - l - 1)
            .step_by(2)
            .filter(|&o| g.has_edge(i1p, at(o)) && g.has_edge(i2, at(o + l + 1)))
            .collect()
    } else {
        Vec::new()
    };
    (c3, c4)
}

/// Calls `f` on every `l`-shortcut of `g` (chords in `g`, standard frame).
///
/// Order: `i1` ascending, then the clockwise offsets of `i2`, `i3`, `i4` from `i1`.
pub fn visit_shortcuts<F>(g: &BalancedBipartiteGraph, l: usize, mut f: F) -> Result<()>
where
    F: FnMut(&Shortcut) -> ControlFlow<()>,
{
    check_l(g, l)?;
    let n = g.n();
    let two_n = 2 * n;
    for i1 in 0..two_n {
        for off2 in (2..two_n).step_by(2) {
            let (c3, c4) = candidates(g, l, i1, off2);
            if c3.is_empty() || c4.is_empty() {
                continue;
            }
            for &o3 in &c3 {
                for &o4 in &c4 {
                    let kind = if o3 + 1 < o4 {
                        ShortcutKind::TypeI
                    } else if o4 + l + 1 < o3 {
                        ShortcutKind::TypeII
                    } else {
                        continue;
                    };
                    let anchors = [i1, (i1 + off2) % two_n, (i1 + o3) % two_n, (i1 + o4) % two_n];
                    let s = Shortcut { n, kind, anchors, l };
                    debug_assert!(Shortcut::new(n, kind, anchors, l).is_ok());
                    if f(&s).is_break() {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutEnumeration {
    pub shortcuts: Vec<Shortcut>,
    /// Number visited; equals `shortcuts.len()`.
    pub total: u64,
    /// True when the cap stopped the enumeration early.
    pub truncated: bool,
}

/// Collects the `l`-shortcuts of `g`, stopping after `cap` if given.
pub fn enumerate_shortcuts(g: &BalancedBipartiteGraph, l: usize, cap: Option<usize>) -> Result<ShortcutEnumeration> {
    let mut shortcuts = Vec::new();
    let mut truncated = false;
    visit_shortcuts(g, l, |s| {
        if cap.is_some_and(|c| shortcuts.len() >= c) {
            truncated = true;
            return ControlFlow::Break(());
        }
        shortcuts.push(*s);
        ControlFlow::Continue(())
    })?;
    Ok(ShortcutEnumeration { total: shortcuts.len() as u64, shortcuts, truncated })
}

/// Number of `l`-shortcuts of `g`, without materializing them.
pub fn count_shortcuts(g: &BalancedBipartiteGraph, l: usize) -> Result<u64> {
    check_l(g, l)?;
    let two_n = g.vertex_count();
    Ok((0..two_n)
        .into_par_iter()
        .map(|i1| {
            let mut total = 0u64;
            let mut prefix = vec![0u64; two_n + 1];
            for off2 in (2..two_n).step_by(2) {
                let (c3, c4) = candidates(g, l, i1, off2);
                if c3.is_empty() || c4.is_empty() {
                    continue;
                }
                // prefix[o] = #{o4 in c4 : o4 < o}
                prefix.iter_mut().for_each(|x| *x = 0);
                for &o4 in &c4 {
                    prefix[o4 + 1] += 1;
                }
                for o in 1..=two_n {
                    prefix[o] += prefix[o - 1];
                }
                let all = c4.len() as u64;
                for &o3 in &c3 {
                    // Type I: o4 > o3 + 1.
                    total += all - prefix[(o3 + 2).min(two_n)];
                    // Type II: o4 < o3 - l - 1.
                    if o3 > l + 1 {
                        total += prefix[o3 - l - 1];
                    }
                }
            }
            total
        })
        .sum())
}

/// Reference enumeration that tries every anchor 4-tuple and both kinds. `O(n^4)`.
pub fn enumerate_shortcuts_naive(g: &BalancedBipartiteGraph, l: usize) -> Result<Vec<Shortcut>> {
    check_l(g, l)?;
    let n = g.n();
    let two_n = 2 * n;
    let mut out = Vec::new();
    for i1 in 0..two_n {
        for i2 in 0..two_n {
            for i3 in 0..two_n {
                for i4 in 0..two_n {
                    for kind in [ShortcutKind::TypeI, ShortcutKind::TypeII] {
                        if let Ok(s) = Shortcut::new(n, kind, [i1, i2, i3, i4], l) {
                            if s.chords().iter().all(|&e| g.contains(e)) {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Cycles of lengths `l + 8` and `2n - l` in `C_{2n} ∪ chords(s)`.
pub fn splice_shortcut(s: &Shortcut) -> Result<(CycleCertificate, CycleCertificate)> {
    let s = Shortcut::new(s.n, s.kind, s.anchors, s.l)?;
    let n = s.n;
    let two_n = 2 * n;
    if s.l + 8 > two_n {
        return Err(Error::invalid(format!("l + 8 = {} exceeds 2n = {two_n}", s.l + 8)));
    }
    let l = s.l;
    let [i1, i2, i3, i4] = s.anchors;
    let at = |base: usize, plus: usize| (base + plus) % two_n;
    // Clockwise walk from `from` to `to`, both included.
    let fwd = |from: usize, to: usize| {
        let len = (to + two_n - from) % two_n;
        (0..=len).map(move |k| (from + k) % two_n)
    };
    let back = |from: usize, to: usize| {
        let len = (from + two_n - to) % two_n;
        (0..=len).map(move |k| (from + two_n - k) % two_n)
    };

    // i1, i1+1 -> i4 .. i4+l+1 -> i2, i2+1 -> i3+1, i3 -> i1
    let mut short = vec![i1, at(i1, 1)];
    short.extend(fwd(i4, at(i4, l + 1)));
    short.extend([i2, at(i2, 1), at(i3, 1), i3]);

    let long: Vec<usize> = match s.kind {
        // i1+1 .. i2 -> i4+l+1 .. i1 -> i3 .. i2+1 -> i3+1 .. i4 -> i1+1
        ShortcutKind::TypeI => fwd(at(i1, 1), i2)
            .chain(fwd(at(i4, l + 1), i1))
            .chain(back(i3, at(i2, 1)))
            .chain(fwd(at(i3, 1), i4))
            .collect(),
        // i1+1 .. i2 -> i4+l+1 .. i3 -> i1 .. i3+1 -> i2+1 .. i4 -> i1+1
        ShortcutKind::TypeII => fwd(at(i1, 1), i2)
            .chain(fwd(at(i4, l + 1), i3))
            .chain(back(i1, at(i3, 1)))
            .chain(fwd(at(i2, 1), i4))
            .collect(),
    };
    let (short, long) = (CycleCertificate::new(short), CycleCertificate::new(long));
    if short.len() != l + 8 || long.len() != two_n - l {
        return Err(Error::Internal(format!(
            "splice of {s:?} produced lengths {} and {}",
            short.len(),
            long.len()
        )));
    }
    Ok((short, long))
}

/// A cycle of length `t` from a shortcut of `g` (standard frame): the short
/// splice with `l = t - 8` or the long splice with `l = 2n - t`.
pub fn find_shortcut_cycle(g: &BalancedBipartiteGraph, t: usize) -> Option<CycleCertificate> {
    let n = g.n();
    let two_n = 2 * n;
    let first = |l: usize| {
        let mut found = None;
        visit_shortcuts(g, l, |s| {
            found = Some(*s);
            ControlFlow::Break(())
        })
        .ok()?;
        found
    };
    if t >= 8 && t - 8 <= n {
        if let Some(s) = first(t - 8) {
            return splice_shortcut(&s).ok().map(|(short, _)| short);
        }
    }
    if t <= two_n && two_n - t <= n && two_n - t + 8 <= two_n {
        if let Some(s) = first(two_n - t) {
            return splice_shortcut(&s).ok().map(|(_, long)| long);
        }
    }
    None
}

/// `ε′^8 n^4 / (4 · 16^7)`, for `0 < ε′ < 1`.
pub fn lemma1_threshold(eps_prime: f64, n: usize) -> Result<f64> {
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(Error::invalid(format!("eps' = {eps_prime} outside (0, 1)")));
    }
    Ok(eps_prime.powi(8) * (n as f64).powi(4) / (4.0 * 16f64.powi(7)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusEntry {
    pub l: usize,
    pub count: u64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub eps_prime: f64,
    pub edge_count: usize,
    pub entries: Vec<CensusEntry>,
}

impl CensusReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Exact shortcut counts for every even `l <= ε′n/8` against the lower bound,
/// for a graph with at least `(1 + ε′)n²/2` edges.
pub fn shortcut_census(g: &BalancedBipartiteGraph, eps_prime: f64) -> Result<CensusReport> {
    let n = g.n();
    let needed = (1.0 + eps_prime) * (n * n) as f64 / 2.0;
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(Error::invalid(format!("eps' = {eps_prime} outside (0, 1)")));
    }
    if (g.edge_count() as f64) < needed {
        return Err(Error::Hypothesis(format!(
            "e(G) = {} is below (1 + eps')n^2/2 = {needed}",
            g.edge_count()
        )));
    }
    let threshold = lemma1_threshold(eps_prime, n)?;
    let max_l = (eps_prime * n as f64 / 8.0).floor() as usize;
    let entries = (0..=max_l)
        .step_by(2)
        .map(|l| {
            let count = count_shortcuts(g, l)?;
            Ok(CensusEntry { l, count, threshold, pass: count as f64 >= threshold })
        })
        .collect::<Result<_>>()?;
    Ok(CensusReport { n, eps_prime, edge_count: g.edge_count(), entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HypergraphSize {
    pub n: usize,
    pub l: usize,
    pub vertices: usize,
    pub hyperedges: u64,
}

fn check_hypergraph_args(n: usize, l: usize, cap: usize) -> Result<()> {
    if n == 0 || n > cap {
        return Err(Error::invalid(format!("n = {n} outside [1, {cap}]")));
    }
    if l % 2 == 1 || l > n {
        return Err(Error::invalid(format!("l = {l} must be even in [0, n]")));
    }
    Ok(())
}

/// Vertex and hyperedge counts of the shortcut hypergraph on `E(K_{n,n})`.
pub fn hypergraph_size(n: usize, l: usize) -> Result<HypergraphSize> {
    hypergraph_size_with_cap(n, l, HYPERGRAPH_MAX_N)
}

pub fn hypergraph_size_with_cap(n: usize, l: usize, cap: usize) -> Result<HypergraphSize> {
    check_hypergraph_args(n, l, cap)?;
    let k = complete_bipartite(n)?;
    Ok(HypergraphSize { n, l, vertices: n * n, hyperedges: count_shortcuts(&k, l)? })
}

/// Hyperedges as 4-tuples of `K_{n,n}` edge indices.
fn hyperedges(n: usize, l: usize) -> Result<Vec<[u32; 4]>> {
    let k = complete_bipartite(n)?;
    let mut out = Vec::new();
    visit_shortcuts(&k, l, |s| {
        out.push(s.chords().map(|e| e.index(n) as u32));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// `f(ε) = 4ε^8 / 16^6`
pub fn density_function(eps: f64) -> f64 {
    4.0 * eps.powi(8) / 16f64.powi(6)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensitySample {
    pub eps: f64,
    pub u_size: usize,
    /// Hyperedges with all four vertices in `U`.
    pub count: u64,
    /// `2 f(ε) |E(H)|`
    pub bound: f64,
    pub pass: bool,
}

/// Samples uniform `U ⊆ E(K_{n,n})` of size `⌈(1/2 + ε)n²⌉` and counts the
/// hyperedges inside each.
pub fn hypergraph_density_probe(n: usize, l: usize, eps: f64, trials: usize, seed: u64) -> Result<Vec<DensitySample>> {
    check_hypergraph_args(n, l, HYPERGRAPH_MAX_N)?;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(format!("eps = {eps} outside (0, 1)")));
    }
    let edges = hyperedges(n, l)?;
    let total = n * n;
    let u_size = (((0.5 + eps) * total as f64).ceil() as usize).min(total);
    let bound = 2.0 * density_function(eps) * edges.len() as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut member = vec![false; total];
    Ok((0..trials)
        .map(|_| {
            member.iter_mut().for_each(|m| *m = false);
            for v in index::sample(&mut rng, total, u_size) {
                member[v] = true;
            }
            let count = edges.iter().filter(|x| x.iter().all(|&v| member[v as usize])).count() as u64;
            DensitySample { eps, u_size, count, bound, pass: count as f64 >= bound }
        })
        .collect())
}

/// Density count for an explicit `U` (edge indices of `K_{n,n}`).
pub fn hyperedges_inside(n: usize, l: usize, u: &[Edge]) -> Result<u64> {
    check_hypergraph_args(n, l, HYPERGRAPH_MAX_N)?;
    let mut member = vec![false; n * n];
    for e in u {
        member[e.index(n)] = true;
    }
    Ok(hyperedges(n, l)?
        .iter()
        .filter(|x| x.iter().all(|&v| member[v as usize]))
        .count() as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentSample {
    pub i: usize,
    pub q: f64,
    pub trials: usize,
    /// Mean over trials of `Σ_v deg_i(v, V_q)^2`.
    pub mean: f64,
    /// `q^(2i) |E|^2 / |V|`
    pub denominator: f64,
    /// `mean / denominator`
    pub implied_k: f64,
}

/// Monte Carlo estimate of `E[Σ_v deg_i(v, V_q)^2]` on the shortcut
/// hypergraph, where `deg_i(v, U)` counts hyperedges through `v` with at
/// least `i` of their other vertices in `U`.
pub fn hypergraph_degree_moment(n: usize, l: usize, i: usize, q: f64, trials: usize, seed: u64) -> Result<MomentSample> {
    check_hypergraph_args(n, l, HYPERGRAPH_MAX_N)?;
    if !(1..=3).contains(&i) {
        return Err(Error::invalid(format!("i = {i} must be 1, 2 or 3")));
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::invalid(format!("q = {q} outside (0, 1]")));
    }
    if trials == 0 {
        return Err(Error::invalid("at least one trial is needed"));
    }
    let edges = hyperedges(n, l)?;
    let vertices = n * n;
    // With q = 1 every vertex survives and one trial is exact.
    let trials = if q == 1.0 { 1 } else { trials };
    let coin = Bernoulli::new(q).expect("q checked");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut member = vec![false; vertices];
    let mut deg = vec![0u64; vertices];
    let mut sum = 0f64;
    for _ in 0..trials {
        for m in member.iter_mut() {
            *m = coin.sample(&mut rng);
        }
        deg.iter_mut().for_each(|d| *d = 0);
        for x in &edges {
            let inside = x.iter().filter(|&&v| member[v as usize]).count();
            for &v in x {
                if inside - member[v as usize] as usize >= i {
                    deg[v as usize] += 1;
                }
            }
        }
        sum += deg.iter().map(|&d| (d * d) as f64).sum::<f64>();
    }
    let mean = sum / trials as f64;
    let e = edges.len() as f64;
    let denominator = q.powi(2 * i as i32) * e * e / vertices as f64;
    Ok(MomentSample {
        i,
        q,
        trials,
        mean,
        denominator,
        implied_k: if denominator > 0.0 { mean / denominator } else { f64::NAN },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypergraphProbe {
    pub n: usize,
    pub l: usize,
    pub vertices: usize,
    pub hyperedges: u64,
    /// `2n^4`
    pub hyperedge_upper_bound: u64,
    /// `|E| / n^4`
    pub density_ratio: f64,
    pub density: Vec<DensitySample>,
    pub moments: Vec<MomentSample>,
}

/// Size, density samples and degree moments (for each `i` in `moment_is`) in one report.
#[allow(clippy::too_many_arguments)]
pub fn hypergraph_probe(
    n: usize,
    l: usize,
    eps: f64,
    density_trials: usize,
    q: f64,
    moment_is: &[usize],
    moment_trials: usize,
    seed: u64,
) -> Result<HypergraphProbe> {
    let size = hypergraph_size(n, l)?;
    let density = hypergraph_density_probe(n, l, eps, density_trials, seed)?;
    let moments = moment_is
        .iter()
        .map(|&i| hypergraph_degree_moment(n, l, i, q, moment_trials, seed.wrapping_add(i as u64)))
        .collect::<Result<_>>()?;
    let n4 = (n as u64).pow(4);
    Ok(HypergraphProbe {
        n,
        l,
        vertices: size.vertices,
        hyperedges: size.hyperedges,
        hyperedge_upper_bound: 2 * n4,
        density_ratio: size.hyperedges as f64 / n4 as f64,
        density,
        moments,
    })
}
