//! Test-side oracles that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every simple cycle length of the Hamilton cycle `0, 1, ..., two_n - 1`
/// plus `chords`.
///
/// The graph is compressed to the chord endpoints: consecutive endpoints
/// around the cycle are joined by an arc weighted with its length, and each
/// chord is a unit edge. Simple cycles of the compressed multigraph are in
/// bijection with cycles of the original graph that use at least one chord.
pub fn cycle_lengths(two_n: usize, chords: &[(usize, usize)]) -> BTreeSet<usize> {
    let lengths = BTreeSet::from([two_n]);
    let mut points: Vec<usize> = chords.iter().flat_map(|&(u, v)| [u, v]).collect();
    points.sort_unstable();
    points.dedup();
    if points.is_empty() {
        return lengths;
    }
    let idx = |v: usize| points.binary_search(&v).unwrap();
    // (a, b, weight)
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let k = points.len();
    for j in 0..k {
        let (from, to) = (points[j], points[(j + 1) % k]);
        let w = (to + two_n - from) % two_n;
        edges.push((j, (j + 1) % k, w));
    }
    for &(u, v) in chords {
        edges.push((idx(u), idx(v), 1));
    }
    let mut incident = vec![Vec::new(); k];
    for (id, &(a, b, _)) in edges.iter().enumerate() {
        incident[a].push(id);
        incident[b].push(id);
    }

    struct Search<'a> {
        edges: &'a [(usize, usize, usize)],
        incident: &'a [Vec<usize>],
        on_path: Vec<bool>,
        used: Vec<bool>,
        start: usize,
        out: BTreeSet<usize>,
    }

    impl Search<'_> {
        fn walk(&mut self, at: usize, len: usize) {
            for &id in &self.incident[at] {
                if self.used[id] {
                    continue;
                }
                let (a, b, w) = self.edges[id];
                let next = if a == at { b } else { a };
                if next == self.start {
                    self.out.insert(len + w);
                    continue;
                }
                if next < self.start || self.on_path[next] {
                    continue;
                }
                self.used[id] = true;
                self.on_path[next] = true;
                self.walk(next, len + w);
                self.on_path[next] = false;
                self.used[id] = false;
            }
        }
    }

    let mut search = Search {
        edges: &edges,
        incident: &incident,
        on_path: vec![false; k],
        used: vec![false; edges.len()],
        start: 0,
        out: lengths,
    };
    for s in 0..k {
        search.start = s;
        search.on_path[s] = true;
        search.walk(s, 0);
        search.on_path[s] = false;
    }
    search.out
}

/// Is `walk` a simple cycle of the Hamilton cycle on `two_n` labels plus `chords`?
pub fn is_cycle(two_n: usize, chords: &[(usize, usize)], walk: &[usize]) -> bool {
    let adjacent = |u: usize, v: usize| {
        (u + 1) % two_n == v
            || (v + 1) % two_n == u
            || chords.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    };
    let distinct: BTreeSet<usize> = walk.iter().copied().collect();
    walk.len() >= 4
        && distinct.len() == walk.len()
        && walk.iter().all(|&v| v < two_n)
        && (0..walk.len()).all(|j| adjacent(walk[j], walk[(j + 1) % walk.len()]))
}

/// Do chords `{a, b}` and `{c, d}` (four distinct labels) alternate around the cycle?
pub fn alternate(e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    let inside = |x: usize| a < x && x < b;
    let labels = BTreeSet::from([e.0, e.1, f.0, f.1]);
    labels.len() == 4 && inside(f.0) != inside(f.1)
}

/// Odd-even pairs of `K_{n,n}` that are not edges of the Hamilton cycle.
pub fn all_chords(n: usize) -> Vec<(usize, usize)> {
    let two_n = 2 * n;
    let mut out = Vec::new();
    for even in (0..two_n).step_by(2) {
        for odd in (1..two_n).step_by(2) {
            let on_cycle = (even + 1) % two_n == odd || (odd + 1) % two_n == even;
            if !on_cycle {
                out.push((even, odd));
            }
        }
    }
    out
}
