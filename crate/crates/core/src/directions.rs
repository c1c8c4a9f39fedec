//! Direction classes of `K_{n,n}` relative to the standard Hamilton cycle.
//!
//! Direction `i` (for `0 <= i < n`) is the set of `n` edges `{x, y}` with
//! `x + y ≡ 2i + 1 (mod 2n)`: on a drawing of the cycle these are parallel
//! chords. Within a direction, edge `e_t = {i - t, i + 1 + t}` has rank `t`,
//! so `e_0 = {i, i+1}` is a cycle edge and rank grows with the distance from
//! the arc between `i` and `i + 1`.

use serde::Serialize;

use crate::bigraph::{circ_dist, BalancedBipartiteGraph, Edge};
use crate::cycles::CycleCertificate;
use crate::error::{Error, Result};

/// Direction index of an edge.
pub fn direction_of(n: usize, e: Edge) -> usize {
    ((e.even() + e.odd() - 1) / 2) % n
}

/// Rank of an edge within its direction (0-based).
pub fn rank_in_direction(n: usize, e: Edge) -> usize {
    let two_n = 2 * n;
    let i = direction_of(n, e);
    let t = (i + two_n - e.even()) % two_n;
    if t < n {
        t
    } else {
        (i + two_n - e.odd()) % two_n
    }
}

fn edge_at(n: usize, i: usize, t: usize) -> Edge {
    let two_n = 2 * n;
    Edge::new((i + two_n - t) % two_n, (i + 1 + t) % two_n).expect("direction edges alternate parity")
}

/// Direction `i` in rank order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionView {
    pub n: usize,
    pub i: usize,
    pub edges: Vec<Edge>,
}

pub fn direction_edges(n: usize, i: usize) -> Result<DirectionView> {
    if n == 0 || i >= n {
        return Err(Error::invalid(format!("direction {i} out of range for n = {n}")));
    }
    Ok(DirectionView {
        n,
        i,
        edges: (0..n).map(|t| edge_at(n, i, t)).collect(),
    })
}

/// Window length `w = round(2βn)` for `β ∈ (0, 1/6)`, requiring `1 <= w` and `2w <= n`.
pub fn window_len(n: usize, beta: f64) -> Result<usize> {
    if !(beta > 0.0 && beta < 1.0 / 6.0) {
        return Err(Error::invalid(format!("beta = {beta} outside (0, 1/6)")));
    }
    let w = (2.0 * beta * n as f64).round() as usize;
    if w == 0 || 2 * w > n {
        return Err(Error::invalid(format!(
            "window round(2 * {beta} * {n}) = {w} must satisfy 1 <= w <= n/2"
        )));
    }
    Ok(w)
}

/// `(β, ε′, p)` together with the derived window length.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GoodnessParams {
    pub beta: f64,
    pub eps_prime: f64,
    pub p: f64,
    pub window: usize,
}

impl GoodnessParams {
    pub fn new(n: usize, beta: f64, eps_prime: f64, p: f64) -> Result<Self> {
        if !(eps_prime > 0.0 && eps_prime < 1.0 / 6.0) {
            return Err(Error::invalid(format!("eps' = {eps_prime} outside (0, 1/6)")));
        }
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::invalid(format!("p = {p} outside (0, 1]")));
        }
        Ok(GoodnessParams {
            beta,
            eps_prime,
            p,
            window: window_len(n, beta)?,
        })
    }
}

/// `E_i^k`: the `w` consecutive edges starting at rank `k` (1-based), `1 <= k <= n - w + 1`.
pub fn interval_edges(n: usize, i: usize, k: usize, params: &GoodnessParams) -> Result<Vec<Edge>> {
    let view = direction_edges(n, i)?;
    let w = params.window;
    if k == 0 || k + w > n + 1 {
        return Err(Error::invalid(format!("interval start {k} outside [1, {}]", n + 1 - w)));
    }
    Ok(view.edges[k - 1..k - 1 + w].to_vec())
}

/// `M_i`: ranks `w+1 ..= n-w` (1-based).
pub fn middle_edges(n: usize, i: usize, params: &GoodnessParams) -> Result<Vec<Edge>> {
    let view = direction_edges(n, i)?;
    let w = params.window;
    Ok(view.edges[w..n - w].to_vec())
}

/// Two chords (non-cycle edges) with four distinct endpoints that alternate
/// around the cycle.
pub fn is_crossing(n: usize, e1: Edge, e2: Edge) -> bool {
    if e1.is_cycle_edge(n) || e2.is_cycle_edge(n) {
        return false;
    }
    let (a, b) = sorted(e1);
    let (c, d) = e2.endpoints();
    if c == a || c == b || d == a || d == b {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

/// A crossing where some pair of endpoints is within circular distance `window`.
pub fn is_close_crossing(n: usize, e1: Edge, e2: Edge, window: usize) -> bool {
    if !is_crossing(n, e1, e2) {
        return false;
    }
    let two_n = 2 * n;
    let (x1, y1) = e1.endpoints();
    let (x2, y2) = e2.endpoints();
    let d = |u: usize, v: usize| circ_dist(u as i64 - v as i64, two_n);
    d(x1, x2).min(d(x1, y2)).min(d(y1, x2)).min(d(y1, y2)) <= window
}

fn sorted(e: Edge) -> (usize, usize) {
    let (x, y) = e.endpoints();
    (x.min(y), x.max(y))
}

/// The two cycles of `C_{2n} ∪ {e1, e2}` through both chords, for crossing
/// `e1 ∈ E_i` and `e2 ∈ E_{i + l/2}`. Returns `(length l+2, length 2n-l+2)`.
pub fn splice_crossing(n: usize, e1: Edge, e2: Edge, l: usize) -> Result<(CycleCertificate, CycleCertificate)> {
    let two_n = 2 * n;
    if l % 2 == 1 || l < 2 || l + 2 > two_n {
        return Err(Error::invalid(format!("l = {l} must be even in [2, 2n-2]")));
    }
    if !is_crossing(n, e1, e2) {
        return Err(Error::invalid(format!("{e1} and {e2} do not cross")));
    }
    let s1 = e1.even() + e1.odd();
    let s2 = e2.even() + e2.odd();
    if (s2 + two_n - s1 % two_n) % two_n != l % two_n {
        return Err(Error::invalid(format!(
            "{e2} is not in the direction l/2 = {} steps after {e1}",
            l / 2
        )));
    }
    // Name the endpoints a < b < c < d with {a, c} and {b, d} the chords.
    let (p, q) = sorted(e1);
    let (r, s) = sorted(e2);
    let (a, c, b, d) = if p < r { (p, q, r, s) } else { (r, s, p, q) };
    // a..=b forward, then d down to c.
    let mut near: Vec<usize> = (a..=b).collect();
    near.extend((c..=d).rev());
    // a, then c down to b, then d forward around to a-1.
    let mut far = vec![a];
    far.extend((b..=c).rev());
    far.extend(d..two_n);
    far.extend(0..a);
    let (near, far) = (CycleCertificate::new(near), CycleCertificate::new(far));
    if near.len() == l + 2 {
        Ok((near, far))
    } else {
        debug_assert_eq!(far.len(), l + 2);
        Ok((far, near))
    }
}

/// Chords of a graph (in the standard frame) bucketed by direction, in rank order.
#[derive(Clone, Debug)]
pub struct DirectionIndex {
    n: usize,
    chords: Vec<Vec<Edge>>,
}

impl DirectionIndex {
    pub fn new(g: &BalancedBipartiteGraph) -> Self {
        let n = g.n();
        let mut chords = vec![Vec::new(); n];
        for e in g.edges().filter(|e| !e.is_cycle_edge(n)) {
            chords[direction_of(n, e)].push(e);
        }
        for c in &mut chords {
            c.sort_by_key(|&e| rank_in_direction(n, e));
        }
        DirectionIndex { n, chords }
    }

    pub fn chords(&self, i: usize) -> &[Edge] {
        &self.chords[i]
    }

    /// A cycle of length `t` built from a crossing chord pair in directions
    /// `i` and `i + (t-2)/2`, if the graph has one.
    pub fn find_crossing_cycle(&self, t: usize) -> Option<CycleCertificate> {
        let n = self.n;
        if t % 2 == 1 || t < 4 || t > 2 * n {
            return None;
        }
        let l = t - 2;
        for i in 0..n {
            let j = (i + l / 2) % n;
            for &e1 in &self.chords[i] {
                for &e2 in &self.chords[j] {
                    if is_crossing(n, e1, e2) {
                        let (short, _) = splice_crossing(n, e1, e2, l).expect("crossing pair in matching directions");
                        return Some(short);
                    }
                }
            }
        }
        None
    }
}

/// Which window first broke a goodness condition.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "window", rename_all = "snake_case")]
pub enum GoodnessViolation {
    /// `E_i^k` (1-based start `k`).
    Interval { k: usize, count: usize, expected: f64, tolerance: f64 },
    Middle { count: usize, expected: f64, tolerance: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GoodnessVerdict {
    pub direction: usize,
    pub good: bool,
    pub first_violation: Option<GoodnessViolation>,
}

/// `(β, ε′, p)`-goodness of direction `i`: every full window `E_i^k` holds
/// `w·p ± ε′·w·p` edges of `g`, and `M_i` holds `(n-2w)·p ± ε′·(n-2w)·p`.
pub fn direction_goodness(g: &BalancedBipartiteGraph, i: usize, params: &GoodnessParams) -> Result<GoodnessVerdict> {
    let n = g.n();
    let view = direction_edges(n, i)?;
    let w = params.window;
    if 2 * w > n {
        return Err(Error::invalid("window too large for this n"));
    }
    let present: Vec<usize> = view.edges.iter().map(|&e| g.contains(e) as usize).collect();
    let (p, eps) = (params.p, params.eps_prime);

    let expected = w as f64 * p;
    let tolerance = eps * expected;
    let mut count: usize = present[..w].iter().sum();
    for k in 1..=n - w + 1 {
        if k > 1 {
            count = count + present[k + w - 2] - present[k - 2];
        }
        if (count as f64 - expected).abs() > tolerance {
            return Ok(GoodnessVerdict {
                direction: i,
                good: false,
                first_violation: Some(GoodnessViolation::Interval { k, count, expected, tolerance }),
            });
        }
    }
    let middle = n - 2 * w;
    let count: usize = present[w..n - w].iter().sum();
    let expected = middle as f64 * p;
    let tolerance = eps * expected;
    if (count as f64 - expected).abs() > tolerance {
        return Ok(GoodnessVerdict {
            direction: i,
            good: false,
            first_violation: Some(GoodnessViolation::Middle { count, expected, tolerance }),
        });
    }
    Ok(GoodnessVerdict { direction: i, good: true, first_violation: None })
}

/// Close-crossing counts between good directions `i` and `i + l/2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingCounts {
    pub l: usize,
    /// True for `l = n`, where `E_{i+l/2} = E_{i-l/2}` and the counts are skipped.
    pub unaudited: bool,
    /// Close crossings of `g` between pairs of good directions.
    pub x: Option<u64>,
    /// Of those, the ones with an edge missing from the subgraph.
    pub y: Option<u64>,
    /// `4(1 - 4ε′ - 4β)βn³p²`
    pub x_lower_reference: f64,
    /// `(4 - 2ε + ε′)βn³p²`, when `ε` is given.
    pub y_upper_reference: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub params: GoodnessParams,
    pub bad_directions: Vec<usize>,
    pub bad_count: usize,
    /// `n^(5/6)`
    pub bad_bound: f64,
    pub within_bound: bool,
    pub crossings: Option<CrossingCounts>,
}

/// Lists the directions of `g` that are not good and, when `l` is given,
/// counts close crossings between good directions `i` and `i + l/2`.
pub fn audit_directions(
    g: &BalancedBipartiteGraph,
    params: &GoodnessParams,
    sub: Option<&BalancedBipartiteGraph>,
    eps: Option<f64>,
    l: Option<usize>,
) -> Result<AuditReport> {
    let n = g.n();
    if let Some(s) = sub {
        if !s.is_subgraph_of(g) {
            return Err(Error::invalid("g' is not a subgraph of g"));
        }
    }
    let good: Vec<bool> = (0..n)
        .map(|i| direction_goodness(g, i, params).map(|v| v.good))
        .collect::<Result<_>>()?;
    let bad_directions: Vec<usize> = (0..n).filter(|&i| !good[i]).collect();
    let bad_bound = (n as f64).powf(5.0 / 6.0);

    let crossings = match l {
        None => None,
        Some(l) => {
            if l % 2 == 1 || l < 2 || l + 2 > 2 * n {
                return Err(Error::invalid(format!("l = {l} must be even in [2, 2n-2]")));
            }
            let (beta, eps_p, p) = (params.beta, params.eps_prime, params.p);
            let scale = beta * (n as f64).powi(3) * p * p;
            let x_lower_reference = 4.0 * (1.0 - 4.0 * eps_p - 4.0 * beta) * scale;
            let y_upper_reference = eps.map(|e| (4.0 - 2.0 * e + eps_p) * scale);
            if l == n {
                Some(CrossingCounts { l, unaudited: true, x: None, y: None, x_lower_reference, y_upper_reference })
            } else {
                let index = DirectionIndex::new(g);
                let (mut x, mut y) = (0u64, 0u64);
                for i in 0..n {
                    let j = (i + l / 2) % n;
                    if !good[i] || !good[j] {
                        continue;
                    }
                    for &e1 in index.chords(i) {
                        for &e2 in index.chords(j) {
                            if is_close_crossing(n, e1, e2, params.window) {
                                x += 1;
                                if let Some(s) = sub {
                                    if !s.contains(e1) || !s.contains(e2) {
                                        y += 1;
                                    }
                                }
                            }
                        }
                    }
                }
                Some(CrossingCounts {
                    l,
                    unaudited: false,
                    x: Some(x),
                    y: sub.map(|_| y),
                    x_lower_reference,
                    y_upper_reference,
                })
            }
        }
    };

    Ok(AuditReport {
        n,
        params: *params,
        bad_count: bad_directions.len(),
        within_bound: bad_directions.len() as f64 <= bad_bound,
        bad_directions,
        bad_bound,
        crossings,
    })
}

/// Admissible `l` for the close-crossing structure checks: even `l` with
/// `2w + 1 <= l <= 2n - 2w - 1`.
pub fn lemma5_range(n: usize, beta: f64) -> Result<(usize, usize)> {
    let w = window_len(n, beta)?;
    let lo = 2 * w + 2; // smallest even l >= 2w + 1
    let hi = 2 * n - 2 * w - 2; // largest even l <= 2n - 2w - 1
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Violation {
    /// 1, 2 or 3.
    pub statement: u8,
    pub direction: usize,
    /// Rank (1-based) of the edge of `E_i` involved, if any.
    pub rank: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma5Report {
    pub n: usize,
    pub beta: f64,
    pub window: usize,
    pub l: usize,
    /// Largest number of close-crossing partners of any edge.
    pub max_partners: usize,
    /// Smallest, over directions, number of edges whose partners are exactly two full windows.
    pub min_exact_edges: usize,
    pub violation_count: usize,
    /// First few violations with witnesses.
    pub violations: Vec<Lemma5Violation>,
    pub holds: bool,
}

const MAX_REPORTED_VIOLATIONS: usize = 32;

/// Can `ranks` (sorted, 1-based) be covered by two windows of length `w`
/// with starts in `1..=n-w+1`?
fn coverable_by_two_windows(ranks: &[usize], w: usize) -> bool {
    match ranks.first() {
        None => true,
        Some(&first) => {
            let rest: Vec<usize> = ranks.iter().copied().filter(|&r| r >= first + w).collect();
            match (rest.first(), rest.last()) {
                (Some(lo), Some(hi)) => hi - lo < w,
                _ => true,
            }
        }
    }
}

/// Are `ranks` (sorted, 1-based) exactly the union of two disjoint full windows?
fn is_two_windows(ranks: &[usize], w: usize) -> bool {
    ranks.len() == 2 * w
        && ranks[..w].windows(2).all(|p| p[1] == p[0] + 1)
        && ranks[w..].windows(2).all(|p| p[1] == p[0] + 1)
}

/// Exhaustively checks, for every direction `i` and edge of `E_i`, the close
/// crossings it forms with `E_{i + l/2}`:
///
/// 1. at most `2w` partners, coverable by two windows;
/// 2. at least `n - 2w` edges have exactly `2w` partners forming two windows;
/// 3. the edges in (2) include `M_i`.
pub fn lemma5_check(n: usize, beta: f64, l: usize) -> Result<Lemma5Report> {
    let w = window_len(n, beta)?;
    if l % 2 == 1 {
        return Err(Error::invalid(format!("l = {l} must be even")));
    }
    let (lo, hi) = lemma5_range(n, beta)?;
    if l < lo || l > hi {
        return Err(Error::invalid(format!("l = {l} outside the admissible range [{lo}, {hi}]")));
    }
    let mut violations = Vec::new();
    let mut violation_count = 0;
    let mut record = |v: Lemma5Violation| {
        violation_count += 1;
        if violations.len() < MAX_REPORTED_VIOLATIONS {
            violations.push(v);
        }
    };
    let mut max_partners = 0;
    let mut min_exact_edges = usize::MAX;
    for i in 0..n {
        let j = (i + l / 2) % n;
        let mine = direction_edges(n, i)?.edges;
        let theirs = direction_edges(n, j)?.edges;
        let mut exact = vec![false; n];
        for (t, &e1) in mine.iter().enumerate() {
            let partners: Vec<usize> = theirs
                .iter()
                .enumerate()
                .filter(|(_, &e2)| is_close_crossing(n, e1, e2, w))
                .map(|(r, _)| r + 1)
                .collect();
            max_partners = max_partners.max(partners.len());
            if partners.len() > 2 * w || !coverable_by_two_windows(&partners, w) {
                record(Lemma5Violation {
                    statement: 1,
                    direction: i,
                    rank: Some(t + 1),
                    detail: format!("{e1} has close-crossing partner ranks {partners:?}"),
                });
            }
            exact[t] = is_two_windows(&partners, w);
        }
        let exact_count = exact.iter().filter(|&&b| b).count();
        min_exact_edges = min_exact_edges.min(exact_count);
        if exact_count < n - 2 * w {
            record(Lemma5Violation {
                statement: 2,
                direction: i,
                rank: None,
                detail: format!("only {exact_count} edges have exactly 2w = {} partners in two windows", 2 * w),
            });
        }
        for t in w..n - w {
            if !exact[t] {
                record(Lemma5Violation {
                    statement: 3,
                    direction: i,
                    rank: Some(t + 1),
                    detail: format!("middle edge {} lacks the two-window partner set", mine[t]),
                });
            }
        }
    }
    Ok(Lemma5Report {
        n,
        beta,
        window: w,
        l,
        max_partners,
        min_exact_edges,
        holds: violation_count == 0,
        violation_count,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::{complete_bipartite, sample_random, RandomModel};
    use crate::cycles::{certificate_graph, validate_cycle};
    use proptest::prelude::*;

    fn edge(u: usize, v: usize) -> Edge {
        Edge::new(u, v).unwrap()
    }

    #[test]
    fn direction_example() {
        let v = direction_edges(4, 1).unwrap();
        assert_eq!(v.edges, vec![edge(1, 2), edge(0, 3), edge(7, 4), edge(6, 5)]);
        assert!(direction_edges(4, 4).is_err());
        for (t, &e) in v.edges.iter().enumerate() {
            assert_eq!((e.even() + e.odd()) % 8, 3);
            assert_eq!(direction_of(4, e), 1);
            assert_eq!(rank_in_direction(4, e), t);
        }
    }

    #[test]
    fn directions_partition_complete_graph() {
        for n in 1..=64 {
            let mut seen = vec![false; n * n];
            for i in 0..n {
                let v = direction_edges(n, i).unwrap();
                assert_eq!(v.edges.len(), n);
                assert_eq!(v.edges[0], edge(i, i + 1));
                for &e in &v.edges {
                    assert!(!std::mem::replace(&mut seen[e.index(n)], true));
                    assert_eq!((e.even() + e.odd()) % (2 * n), (2 * i + 1) % (2 * n));
                }
            }
            assert!(seen.iter().all(|&b| b));
        }
    }

    #[test]
    fn ranks_symmetric_under_arc_reflection() {
        // x -> 2i + 1 - x fixes direction i and each of its edges.
        let n = 9;
        for i in 0..n {
            for (t, e) in direction_edges(n, i).unwrap().edges.into_iter().enumerate() {
                let r = |x: usize| (2 * i + 1 + 2 * n - x) % (2 * n);
                assert_eq!(rank_in_direction(n, edge(r(e.even()), r(e.odd()))), t);
            }
        }
    }

    #[test]
    fn windows_and_middle() {
        let params = GoodnessParams::new(10, 0.1, 0.1, 0.5).unwrap();
        assert_eq!(params.window, 2);
        let e0 = direction_edges(10, 0).unwrap().edges;
        assert_eq!(interval_edges(10, 0, 1, &params).unwrap(), e0[..2].to_vec());
        assert_eq!(interval_edges(10, 0, 9, &params).unwrap(), e0[8..].to_vec());
        assert!(interval_edges(10, 0, 10, &params).is_err());
        assert!(interval_edges(10, 0, 0, &params).is_err());
        let m = middle_edges(10, 0, &params).unwrap();
        assert_eq!(m.len(), 6);
        assert!(m.iter().all(|e| !interval_edges(10, 0, 1, &params).unwrap().contains(e)));
        assert!(m.iter().all(|e| !interval_edges(10, 0, 9, &params).unwrap().contains(e)));

        let near = GoodnessParams::new(12, 0.16, 0.1, 0.5).unwrap();
        assert_eq!(near.window, 4);
        assert_eq!(middle_edges(12, 3, &near).unwrap().len(), 4);
        assert!(GoodnessParams::new(12, 0.2, 0.1, 0.5).is_err());
        assert!(GoodnessParams::new(12, 0.1, 0.2, 0.5).is_err());
        assert!(GoodnessParams::new(2, 0.1, 0.1, 0.5).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert!(is_crossing(4, edge(0, 3), edge(1, 6)));
        assert!(!is_crossing(4, edge(0, 3), edge(0, 5)));
        assert!(!is_crossing(4, edge(0, 5), edge(1, 4)));
        // Cycle edges never cross.
        assert!(!is_crossing(4, edge(0, 3), edge(1, 2)));
        assert!(is_close_crossing(8, edge(0, 7), edge(1, 8), 4));
        assert!(is_crossing(16, edge(0, 15), edge(5, 22)));
        assert!(!is_close_crossing(16, edge(0, 15), edge(5, 22), 4));
        assert!(is_close_crossing(16, edge(0, 15), edge(5, 22), 5));
        assert!(!is_close_crossing(4, edge(0, 5), edge(1, 4), 100));
    }

    #[test]
    fn splice_crossing_example() {
        let (a, b) = splice_crossing(4, edge(0, 3), edge(1, 6), 4).unwrap();
        assert_eq!(a.vertices(), &[0, 1, 6, 5, 4, 3]);
        assert_eq!(b.vertices(), &[0, 3, 2, 1, 6, 7]);
        assert!(splice_crossing(4, edge(0, 3), edge(1, 6), 2).is_err());
        assert!(splice_crossing(4, edge(0, 5), edge(1, 4), 4).is_err());
        assert!(splice_crossing(4, edge(0, 3), edge(1, 6), 3).is_err());
    }

    #[test]
    fn splice_crossing_extremes() {
        let n = 6;
        let mut saw_min = false;
        let mut saw_max = false;
        for i in 0..n {
            for l in [2, 2 * n - 2] {
                let j = (i + l / 2) % n;
                for &e1 in &direction_edges(n, i).unwrap().edges {
                    for &e2 in &direction_edges(n, j).unwrap().edges {
                        if is_crossing(n, e1, e2) {
                            let (s, long) = splice_crossing(n, e1, e2, l).unwrap();
                            assert_eq!(s.len(), l + 2);
                            assert_eq!(long.len(), 2 * n - l + 2);
                            saw_min |= l == 2;
                            saw_max |= l == 2 * n - 2;
                        }
                    }
                }
            }
        }
        assert!(saw_min && saw_max);
    }

    #[test]
    fn goodness_extremes() {
        let n = 30;
        let k = complete_bipartite(n).unwrap();
        let full = GoodnessParams::new(n, 0.1, 0.01, 1.0).unwrap();
        assert!((0..n).all(|i| direction_goodness(&k, i, &full).unwrap().good));
        let empty = BalancedBipartiteGraph::empty(n).unwrap();
        let half = GoodnessParams::new(n, 0.1, 0.1, 0.5).unwrap();
        for i in 0..n {
            let v = direction_goodness(&empty, i, &half).unwrap();
            assert!(!v.good);
            assert!(matches!(v.first_violation, Some(GoodnessViolation::Interval { k: 1, count: 0, .. })));
        }
        let report = audit_directions(&k, &full, Some(&k), Some(0.2), Some(10)).unwrap();
        assert_eq!(report.bad_count, 0);
        assert!(report.within_bound);
        assert_eq!(report.crossings.as_ref().unwrap().y, Some(0));
        assert!(audit_directions(&k, &full, None, None, Some(n)).unwrap().crossings.unwrap().unaudited);
        assert!(audit_directions(&empty, &half, Some(&k), None, None).is_err());
    }

    #[test]
    fn lemma5_small_cases() {
        let r = lemma5_check(30, 0.1, 14).unwrap();
        assert!(r.holds, "{r:?}");
        let r = lemma5_check(50, 0.05, 12).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(lemma5_check(30, 0.1, 10).is_err());
        assert!(lemma5_check(30, 0.1, 13).is_err());
    }

    #[test]
    fn two_window_cover() {
        assert!(coverable_by_two_windows(&[1, 2, 7, 8], 2));
        assert!(!coverable_by_two_windows(&[1, 4, 7], 2));
        assert!(coverable_by_two_windows(&[], 3));
        assert!(is_two_windows(&[1, 2, 3, 4], 2));
        assert!(is_two_windows(&[1, 2, 5, 6], 2));
        assert!(!is_two_windows(&[1, 3, 5, 6], 2));
    }

    proptest! {
        #[test]
        fn crossing_symmetric(n in 3usize..20, a in any::<usize>(), b in any::<usize>(), c in any::<usize>(), d in any::<usize>(), w in 1usize..6) {
            let two_n = 2 * n;
            let e1 = Edge::new(2 * (a % n), 2 * (b % n) + 1).unwrap();
            let e2 = Edge::new(2 * (c % n), 2 * (d % n) + 1).unwrap();
            prop_assert_eq!(is_crossing(n, e1, e2), is_crossing(n, e2, e1));
            prop_assert_eq!(is_close_crossing(n, e1, e2, w), is_close_crossing(n, e2, e1, w));
            let _ = two_n;
        }

        #[test]
        fn goodness_monotone_in_eps(seed: u64, e1 in 0.01f64..0.16, e2 in 0.01f64..0.16) {
            let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
            let n = 40;
            let g = sample_random(&RandomModel::new(n, 0.3, seed).unwrap());
            let a = GoodnessParams::new(n, 0.1, lo, 0.3).unwrap();
            let b = GoodnessParams::new(n, 0.1, hi, 0.3).unwrap();
            for i in 0..n {
                if direction_goodness(&g, i, &a).unwrap().good {
                    prop_assert!(direction_goodness(&g, i, &b).unwrap().good);
                }
            }
        }

        #[test]
        fn splice_outputs_validate(n in 4usize..12, i in any::<usize>(), half in any::<usize>(), r1 in any::<usize>(), r2 in any::<usize>()) {
            let i = i % n;
            let l = 2 * (1 + half % (n - 1));
            let j = (i + l / 2) % n;
            let e1 = direction_edges(n, i).unwrap().edges[r1 % n];
            let e2 = direction_edges(n, j).unwrap().edges[r2 % n];
            if is_crossing(n, e1, e2) {
                let (s, long) = splice_crossing(n, e1, e2, l).unwrap();
                let host = certificate_graph(n, &[&crate::cycles::standard_hamilton(n).unwrap()], &[e1, e2]).unwrap();
                prop_assert!(validate_cycle(&host, &s).is_ok());
                prop_assert!(validate_cycle(&host, &long).is_ok());
                prop_assert_eq!(s.len(), l + 2);
                prop_assert_eq!(long.len(), 2 * n - l + 2);
            }
        }
    }
}
