//! Balanced bipartite graphs on the labels `0..2n`.
//!
//! Even labels form one class and odd labels the other, so the identity
//! labeling is always allowable and the cycle `0, 1, ..., 2n-1` alternates
//! classes. Adjacency is stored as `2n` rows of `n`-bit masks: the row of an
//! even label `2a` has bit `b` set when `{2a, 2b+1}` is an edge, and the row of
//! an odd label `2b+1` has bit `a` set for the same edge.

use std::fmt;

use rand::distr::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// An unordered edge stored as `(even, odd)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    even: usize,
    odd: usize,
}

impl Edge {
    /// Builds an edge from two labels of opposite parity, in either order.
    pub fn new(u: usize, v: usize) -> Option<Edge> {
        match (u % 2, v % 2) {
            (0, 1) => Some(Edge { even: u, odd: v }),
            (1, 0) => Some(Edge { even: v, odd: u }),
            _ => None,
        }
    }

    /// Like [`Edge::new`] but also checks both labels are below `2n`.
    pub fn checked(u: usize, v: usize, n: usize) -> Result<Edge> {
        match Edge::new(u, v) {
            Some(e) if u < 2 * n && v < 2 * n => Ok(e),
            _ => Err(Error::InvalidEdge { u, v, n }),
        }
    }

    pub fn even(self) -> usize {
        self.even
    }

    pub fn odd(self) -> usize {
        self.odd
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.even, self.odd)
    }

    pub fn contains(self, v: usize) -> bool {
        self.even == v || self.odd == v
    }

    /// True if this edge is one of the `{i, i+1}` edges of the standard cycle on `2n` labels.
    pub fn is_cycle_edge(self, n: usize) -> bool {
        let two_n = 2 * n;
        let d = (self.even + two_n - self.odd) % two_n;
        d == 1 || d == two_n - 1
    }

    /// Index of this edge among the `n^2` edges of `K_{n,n}`.
    pub fn index(self, n: usize) -> usize {
        (self.even / 2) * n + self.odd / 2
    }

    pub fn from_index(index: usize, n: usize) -> Edge {
        Edge {
            even: 2 * (index / n),
            odd: 2 * (index % n) + 1,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.even, self.odd)
    }
}

/// A balanced bipartite graph on `[2n]` with the parity classes as bipartition.
///
/// Values are immutable once built; operations that delete or add edges
/// return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BalancedBipartiteGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl fmt::Debug for BalancedBipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BalancedBipartiteGraph")
            .field("n", &self.n)
            .field("edge_count", &self.edge_count)
            .finish()
    }
}

impl BalancedBipartiteGraph {
    /// The graph on `[2n]` with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        let words = n.div_ceil(64);
        Ok(BalancedBipartiteGraph {
            n,
            words,
            rows: vec![0; 2 * n * words],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list, rejecting invalid labels and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            let e = Edge::checked(u, v, n)?;
            if !g.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Neighbor mask of label `v`, indexed by `label / 2` of the opposite class.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= 2 * self.n || v >= 2 * self.n {
            return false;
        }
        match Edge::new(u, v) {
            Some(e) => self.contains(e),
            None => false,
        }
    }

    pub fn contains(&self, e: Edge) -> bool {
        if e.odd >= 2 * self.n || e.even >= 2 * self.n {
            return false;
        }
        let b = e.odd / 2;
        self.rows[e.even * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let offset = 1 - v % 2;
        iter_bits(self.row(v)).map(move |b| 2 * b + offset)
    }

    /// Edges in ascending `(even, odd)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |a| {
            iter_bits(self.row(2 * a)).map(move |b| Edge {
                even: 2 * a,
                odd: 2 * b + 1,
            })
        })
    }

    /// `|N(u) ∩ N(v)|` for two labels of the same class.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of 4-cycles. Every 4-cycle has exactly two even vertices, so
    /// this is the sum of `C(|N(a) ∩ N(b)|, 2)` over pairs of even labels.
    pub fn four_cycle_count(&self) -> u64 {
        let mut total = 0u64;
        for a in 0..self.n {
            for b in a + 1..self.n {
                let c = self.common_neighbors(2 * a, 2 * b) as u64;
                total += c * c.saturating_sub(1) / 2;
            }
        }
        total
    }

    /// Some 4-cycle `[a, c1, b, c2]` with `a < b` even, if one exists.
    pub fn find_four_cycle(&self) -> Option<[usize; 4]> {
        for a in 0..self.n {
            for b in a + 1..self.n {
                let mut common = self
                    .row(2 * a)
                    .iter()
                    .zip(self.row(2 * b))
                    .enumerate()
                    .flat_map(|(w, (x, y))| bits_of(x & y).map(move |bit| 64 * w + bit));
                if let (Some(c1), Some(c2)) = (common.next(), common.next()) {
                    return Some([2 * a, 2 * c1 + 1, 2 * b, 2 * c2 + 1]);
                }
            }
        }
        None
    }

    /// True if every edge `{i, i+1}` of the standard Hamilton cycle is present.
    pub fn contains_standard_cycle(&self) -> bool {
        let two_n = 2 * self.n;
        self.n >= 2 && (0..two_n).all(|i| self.has_edge(i, (i + 1) % two_n))
    }

    /// Returns a copy without `victims`; every victim must be present.
    pub fn remove_edges<'a, I>(&self, victims: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &e in victims {
            if !g.remove(e) {
                return Err(Error::MissingEdge(e));
            }
        }
        Ok(g)
    }

    /// Returns a copy with `extra` added; edges already present are ignored.
    pub fn with_edges<'a, I>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &e in extra {
            Edge::checked(e.even, e.odd, self.n)?;
            g.insert(e);
        }
        Ok(g)
    }

    /// Union with the standard Hamilton cycle `0, 1, ..., 2n-1`.
    pub fn with_standard_cycle(&self) -> Result<Self> {
        let cycle = standard_cycle_edges(self.n)?;
        self.with_edges(&cycle)
    }

    /// True if every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &BalancedBipartiteGraph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn insert(&mut self, e: Edge) -> bool {
        if self.contains(e) {
            return false;
        }
        let (a, b) = (e.even / 2, e.odd / 2);
        self.rows[e.even * self.words + b / 64] |= 1 << (b % 64);
        self.rows[e.odd * self.words + a / 64] |= 1 << (a % 64);
        self.edge_count += 1;
        true
    }

    pub(crate) fn remove(&mut self, e: Edge) -> bool {
        if !self.contains(e) {
            return false;
        }
        let (a, b) = (e.even / 2, e.odd / 2);
        self.rows[e.even * self.words + b / 64] &= !(1 << (b % 64));
        self.rows[e.odd * self.words + a / 64] &= !(1 << (a % 64));
        self.edge_count -= 1;
        true
    }

    /// Serializes to the `bbg 1` text format.
    pub fn to_bbg(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.edge_count);
        out.push_str("bbg 1\n");
        out.push_str(&format!("n {}\n", self.n));
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.even, e.odd));
        }
        out
    }

    /// Parses the `bbg 1` text format. Edge lines must be in canonical
    /// ascending `(even, odd)` order so that parsing and writing round-trip
    /// byte for byte.
    pub fn from_bbg(text: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        if text.contains('\r') {
            return Err(parse_err(1, "CR characters are not allowed".into()));
        }
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, "bbg 1")) => {}
            Some((ln, other)) => return Err(parse_err(ln, format!("expected `bbg 1`, found `{other}`"))),
            None => return Err(parse_err(1, "empty input".into())),
        }
        let n = match lines.next() {
            Some((ln, l)) => l
                .strip_prefix("n ")
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| parse_err(ln, format!("expected `n <n>`, found `{l}`")))?,
            None => return Err(parse_err(2, "missing `n <n>` line".into())),
        };
        let mut g = Self::empty(n).map_err(|e| parse_err(2, e.to_string()))?;
        let mut prev: Option<Edge> = None;
        for (ln, l) in lines {
            let mut parts = l.split(' ');
            let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(u), Some(v), None) => (
                    u.parse::<usize>().map_err(|_| parse_err(ln, format!("bad label `{u}`")))?,
                    v.parse::<usize>().map_err(|_| parse_err(ln, format!("bad label `{v}`")))?,
                ),
                _ => return Err(parse_err(ln, format!("expected `<even> <odd>`, found `{l}`"))),
            };
            if u % 2 != 0 {
                return Err(parse_err(ln, "first label must be even".into()));
            }
            let e = Edge::checked(u, v, n).map_err(|e| parse_err(ln, e.to_string()))?;
            if prev.is_some_and(|p| p >= e) {
                return Err(parse_err(ln, "edges must be strictly ascending by (even, odd)".into()));
            }
            prev = Some(e);
            g.insert(e);
        }
        Ok(g)
    }

    /// Relabels every vertex through `perm`.
    pub fn relabel(&self, perm: &ParityPermutation) -> Result<Self> {
        if perm.len() != 2 * self.n {
            return Err(Error::invalid(format!(
                "permutation acts on {} labels, graph has {}",
                perm.len(),
                2 * self.n
            )));
        }
        let mut g = Self::empty(self.n)?;
        for e in self.edges() {
            g.insert(perm.apply_edge(e));
        }
        Ok(g)
    }
}

/// The `2n` edges `{i, i+1}` of the standard Hamilton cycle.
pub fn standard_cycle_edges(n: usize) -> Result<Vec<Edge>> {
    if n < 2 {
        return Err(Error::invalid("the standard Hamilton cycle needs n >= 2"));
    }
    let two_n = 2 * n;
    let mut edges: Vec<Edge> = (0..two_n)
        .map(|i| Edge::new(i, (i + 1) % two_n).expect("consecutive labels alternate parity"))
        .collect();
    edges.sort();
    Ok(edges)
}

/// The standard Hamilton cycle as a graph.
pub fn cycle_graph(n: usize) -> Result<BalancedBipartiteGraph> {
    let mut g = BalancedBipartiteGraph::empty(n)?;
    for e in standard_cycle_edges(n)? {
        g.insert(e);
    }
    Ok(g)
}

/// `K_{n,n}`: all `n^2` even–odd pairs.
pub fn complete_bipartite(n: usize) -> Result<BalancedBipartiteGraph> {
    let mut g = BalancedBipartiteGraph::empty(n)?;
    let full = n / 64;
    let rem = n % 64;
    for v in 0..2 * n {
        let row = &mut g.rows[v * g.words..(v + 1) * g.words];
        for w in row.iter_mut().take(full) {
            *w = u64::MAX;
        }
        if rem > 0 {
            row[full] = (1u64 << rem) - 1;
        }
    }
    g.edge_count = n * n;
    Ok(g)
}

/// Parameters of `G(n, n, p)` together with the generator seed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomModel {
    n: usize,
    p: f64,
    seed: u64,
}

impl RandomModel {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(format!("p = {p} is not a probability")));
        }
        Ok(RandomModel { n, p, seed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Samples `G(n, n, p)`.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`.
/// Pairs are decided in canonical order (ascending even label, then
/// ascending odd label), one Bernoulli draw each, so the output is a pure
/// function of `(n, p, seed)`.
pub fn sample_random(model: &RandomModel) -> BalancedBipartiteGraph {
    let n = model.n;
    let mut g = BalancedBipartiteGraph::empty(n).expect("model validated n >= 1");
    let coin = Bernoulli::new(model.p).expect("model validated p");
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
    for a in 0..n {
        for b in 0..n {
            if coin.sample(&mut rng) {
                g.insert(Edge {
                    even: 2 * a,
                    odd: 2 * b + 1,
                });
            }
        }
    }
    g
}

/// A relabeling of `[2n]` that maps even labels to even labels and odd to odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityPermutation {
    mapping: Vec<usize>,
}

impl ParityPermutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let len = mapping.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::invalid("a parity permutation acts on an even number of labels"));
        }
        let mut seen = vec![false; len];
        for (from, &to) in mapping.iter().enumerate() {
            if to >= len || seen[to] {
                return Err(Error::invalid("mapping is not a bijection"));
            }
            if from % 2 != to % 2 {
                return Err(Error::invalid(format!("{from} -> {to} changes parity")));
            }
            seen[to] = true;
        }
        Ok(ParityPermutation { mapping })
    }

    pub fn identity(two_n: usize) -> Self {
        ParityPermutation {
            mapping: (0..two_n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.mapping[v]
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        Edge::new(self.mapping[e.even], self.mapping[e.odd]).expect("parity preserved")
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (from, &to) in self.mapping.iter().enumerate() {
            inv[to] = from;
        }
        ParityPermutation { mapping: inv }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.mapping
    }
}

/// `‖i‖`: distance of `i` from `0` on a cycle of length `two_n`.
pub fn circ_dist(i: i64, two_n: usize) -> usize {
    debug_assert!(two_n >= 4 && two_n.is_multiple_of(2));
    let r = i.rem_euclid(two_n as i64) as usize;
    r.min(two_n - r)
}

/// Chernoff bound `P(|X - EX| >= eps EX) <= 2 exp(-eps^2 EX / 3)` for binomial `X`,
/// valid for `0 < eps <= 3/2`.
pub fn chernoff_tail_bound(eps: f64, mean: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 1.5) {
        return Err(Error::invalid(format!("eps = {eps} outside (0, 3/2]")));
    }
    if !(mean > 0.0 && mean.is_finite()) {
        return Err(Error::invalid(format!("mean = {mean} must be positive")));
    }
    Ok(2.0 * (-eps * eps * mean / 3.0).exp())
}

pub(crate) fn bits_of(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter()
        .enumerate()
        .flat_map(|(w, &word)| bits_of(word).map(move |b| 64 * w + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_small() {
        let g = complete_bipartite(2).unwrap();
        let edges: Vec<_> = g.edges().map(Edge::endpoints).collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (2, 1), (2, 3)]);
        assert_eq!(complete_bipartite(3).unwrap().edge_count(), 9);
        assert!(complete_bipartite(4).unwrap().contains_standard_cycle());
        assert!(complete_bipartite(0).is_err());
        let big = complete_bipartite(130).unwrap();
        assert_eq!(big.edge_count(), 130 * 130);
        assert_eq!(big.edges().count(), 130 * 130);
        assert_eq!(big.degree(259), 130);
    }

    #[test]
    fn sample_extremes() {
        let empty = sample_random(&RandomModel::new(100, 0.0, 7).unwrap());
        assert_eq!(empty.edge_count(), 0);
        let full = sample_random(&RandomModel::new(100, 1.0, 7).unwrap());
        assert_eq!(full, complete_bipartite(100).unwrap());
        assert!(RandomModel::new(10, 1.5, 0).is_err());
        assert!(RandomModel::new(10, -0.1, 0).is_err());
    }

    #[test]
    fn sample_golden() {
        // Frozen from the first run of the ChaCha8 generator; a change here
        // means previously published experiment seeds no longer replay.
        let g = sample_random(&RandomModel::new(200, 0.1, 42).unwrap());
        assert_eq!(g.edge_count(), GOLDEN_200_01_42);
        let band = 3.0 * 0.1 * 4000.0;
        assert!((g.edge_count() as f64 - 4000.0).abs() <= band);
        let small = sample_random(&RandomModel::new(4, 0.5, 1).unwrap());
        assert_eq!(small.to_bbg(), GOLDEN_4_05_1);
    }

    const GOLDEN_200_01_42: usize = 4005;
    const GOLDEN_4_05_1: &str = "bbg 1\nn 4\n0 1\n0 3\n0 7\n2 1\n2 5\n2 7\n4 5\n6 1\n6 3\n6 5\n6 7\n";

    #[test]
    fn remove_edges_contract() {
        let k = complete_bipartite(2).unwrap();
        let e01 = Edge::new(0, 1).unwrap();
        let g = k.remove_edges(&[e01]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(k.edge_count(), 4);
        assert_eq!(k.remove_edges(&[]).unwrap(), k);
        assert!(matches!(g.remove_edges(&[e01]), Err(Error::MissingEdge(_))));

        let c8 = cycle_graph(4).unwrap();
        let path = c8.remove_edges(&[e01]).unwrap();
        assert!(!path.contains_standard_cycle());
        assert_eq!(path.edge_count(), 7);
    }

    #[test]
    fn circ_dist_examples() {
        assert_eq!(circ_dist(3, 8), 3);
        assert_eq!(circ_dist(7, 8), 1);
        assert_eq!(circ_dist(4, 8), 4);
        assert_eq!(circ_dist(-3, 8), 3);
        assert_eq!(circ_dist(0, 8), 0);
    }

    #[test]
    fn chernoff_examples() {
        let b = chernoff_tail_bound(1.0, 10.0).unwrap();
        assert!((b - 2.0 * (-10.0f64 / 3.0).exp()).abs() < 1e-15);
        assert!((b - 0.0713).abs() < 1e-4);
        let b = chernoff_tail_bound(1.5, 12.0).unwrap();
        assert!((b - 2.0 * (-9.0f64).exp()).abs() < 1e-15);
        assert!((b - 2.47e-4).abs() < 1e-6);
        assert!(chernoff_tail_bound(0.5, 0.0).is_err());
        assert!(chernoff_tail_bound(0.0, 1.0).is_err());
        assert!(chernoff_tail_bound(1.6, 1.0).is_err());
    }

    #[test]
    fn bbg_format() {
        let g = complete_bipartite(2).unwrap();
        assert_eq!(g.to_bbg(), "bbg 1\nn 2\n0 1\n0 3\n2 1\n2 3\n");
        assert_eq!(BalancedBipartiteGraph::from_bbg(&g.to_bbg()).unwrap(), g);
        assert!(BalancedBipartiteGraph::from_bbg("bbg 2\nn 2\n").is_err());
        assert!(BalancedBipartiteGraph::from_bbg("bbg 1\nn 2\n0 3\n0 1\n").is_err());
        assert!(BalancedBipartiteGraph::from_bbg("bbg 1\nn 2\n1 0\n").is_err());
        assert!(BalancedBipartiteGraph::from_bbg("bbg 1\nn 2\n0 5\n").is_err());
        assert!(BalancedBipartiteGraph::from_bbg("bbg 1\nn 2\n0  1\n").is_err());
        assert!(BalancedBipartiteGraph::from_bbg("bbg 1\r\nn 2\r\n").is_err());
        let empty = BalancedBipartiteGraph::from_bbg("bbg 1\nn 3\n").unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn invalid_edges_rejected() {
        assert!(BalancedBipartiteGraph::from_edges(2, [(0, 2)]).is_err());
        assert!(BalancedBipartiteGraph::from_edges(2, [(0, 5)]).is_err());
        assert!(matches!(
            BalancedBipartiteGraph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(_))
        ));
    }

    #[test]
    fn four_cycles_counted() {
        assert_eq!(cycle_graph(4).unwrap().four_cycle_count(), 0);
        assert_eq!(cycle_graph(2).unwrap().four_cycle_count(), 1);
        // K_{3,3}: C(3,2) pairs on each side -> 3 * 3 = 9 four-cycles.
        assert_eq!(complete_bipartite(3).unwrap().four_cycle_count(), 9);
        assert!(cycle_graph(4).unwrap().find_four_cycle().is_none());
        assert_eq!(complete_bipartite(3).unwrap().find_four_cycle(), Some([0, 1, 2, 3]));
    }

    #[test]
    fn cycle_edge_detection() {
        assert!(Edge::new(0, 7).unwrap().is_cycle_edge(4));
        assert!(Edge::new(2, 3).unwrap().is_cycle_edge(4));
        assert!(!Edge::new(0, 3).unwrap().is_cycle_edge(4));
    }

    #[test]
    fn parity_permutation_checks() {
        assert!(ParityPermutation::new(vec![1, 0]).is_err());
        assert!(ParityPermutation::new(vec![0, 1, 0, 3]).is_err());
        let p = ParityPermutation::new(vec![2, 3, 0, 1]).unwrap();
        assert_eq!(p.inverse().apply(p.apply(1)), 1);
        let g = BalancedBipartiteGraph::from_edges(2, [(0, 1)]).unwrap();
        let h = g.relabel(&p).unwrap();
        assert!(h.has_edge(2, 3));
    }

    fn graph_strategy() -> impl Strategy<Value = BalancedBipartiteGraph> {
        (1usize..12, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| {
            sample_random(&RandomModel::new(n, p, seed).unwrap())
        })
    }

    proptest! {
        #[test]
        fn sampled_graphs_are_bipartite_and_deterministic(n in 1usize..40, p in 0.0f64..=1.0, seed: u64) {
            let model = RandomModel::new(n, p, seed).unwrap();
            let g = sample_random(&model);
            prop_assert!(g.edges().all(|e| e.even() % 2 == 0 && e.odd() % 2 == 1));
            prop_assert!(g.edge_count() <= n * n);
            prop_assert_eq!(g.edges().count(), g.edge_count());
            prop_assert_eq!(&g, &sample_random(&model));
        }

        #[test]
        fn bbg_round_trips(g in graph_strategy()) {
            let text = g.to_bbg();
            let back = BalancedBipartiteGraph::from_bbg(&text).unwrap();
            prop_assert_eq!(back.to_bbg(), text);
        }

        #[test]
        fn circ_dist_symmetric(i in -1000i64..1000, half in 2usize..200) {
            let m = 2 * half;
            prop_assert_eq!(circ_dist(i, m), circ_dist(m as i64 - i, m));
            prop_assert!(circ_dist(i, m) <= half);
        }

        #[test]
        fn removal_never_grows(g in graph_strategy(), pick in any::<u64>()) {
            let edges: Vec<Edge> = g.edges().filter(|e| (e.index(g.n()) as u64 ^ pick).is_multiple_of(3)).collect();
            let h = g.remove_edges(&edges).unwrap();
            prop_assert_eq!(h.edge_count(), g.edge_count() - edges.len());
            prop_assert!(h.is_subgraph_of(&g));
        }
    }
}
