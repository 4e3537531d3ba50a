//! Matchings of the underlying graph and the matching-side classification:
//! the exchange property of perfect matchings, Koenig-ness, (very)
//! well-coveredness, girth, and short-cycle probes.
//!
//! The exchange property of a perfect matching `P`, checked by
//! [`property_p_violation`]: for every pair of edges `{a, b}` and `{a', b'}`
//! of the graph with `{b, b'}` in `P`, the pair `{a, a'}` is also an edge.

use crate::covers;
use crate::exec::{self, Exec};
use crate::graph::SimpleGraph;
use crate::{Error, Result, VertexSet};
use serde::Serialize;
use std::collections::HashMap;
use std::ops::ControlFlow;

/// A validated matching: edges stored as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(g: &SimpleGraph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Matching> {
        let mut normalized = Vec::new();
        let mut used = VertexSet::EMPTY;
        for (a, b) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if !g.contains_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if used.contains(w) {
                    return Err(Error::NotAMatching(w));
                }
                used.insert(w);
            }
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        Ok(Matching { edges: normalized })
    }

    /// Edges produced by the enumerators are already normalized and sorted.
    fn from_sorted(edges: Vec<(usize, usize)>) -> Matching {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v));
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn matched_vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn is_perfect(&self, g: &SimpleGraph) -> bool {
        2 * self.edges.len() == g.vertex_count()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// One maximum matching, found by branch and bound over the lowest-index
/// uncovered vertex (skip it, or match it to each free neighbor in ascending
/// order), memoized on the covered set.
pub fn maximum_matching(g: &SimpleGraph, bound: usize) -> Result<Matching> {
    g.ensure_within(bound)?;
    let n = g.vertex_count();
    let mut memo: HashMap<u64, usize> = HashMap::new();

    fn best(g: &SimpleGraph, n: usize, used: VertexSet, memo: &mut HashMap<u64, usize>) -> usize {
        let v = match used.complement(n).smallest() {
            None => return 0,
            Some(v) => v,
        };
        if let Some(&s) = memo.get(&used.bits()) {
            return s;
        }
        let mut result = best(g, n, used.with(v), memo);
        for u in g.adjacency(v).difference(used).iter() {
            result = result.max(1 + best(g, n, used.with(v).with(u), memo));
        }
        memo.insert(used.bits(), result);
        result
    }

    let mut edges = Vec::new();
    let mut used = VertexSet::EMPTY;
    while let Some(v) = used.complement(n).smallest() {
        let target = best(g, n, used, &mut memo);
        if best(g, n, used.with(v), &mut memo) == target {
            used.insert(v);
            continue;
        }
        let u = g
            .adjacency(v)
            .difference(used)
            .iter()
            .find(|&u| 1 + best(g, n, used.with(v).with(u), &mut memo) == target)
            .expect("matching v must reach the memoized optimum");
        edges.push((v, u));
        used = used.with(v).with(u);
    }
    Ok(Matching::from_sorted(edges))
}

/// Matching number.
pub fn matching_number(g: &SimpleGraph, bound: usize) -> Result<usize> {
    Ok(maximum_matching(g, bound)?.len())
}

/// Visits every perfect matching in a fixed order: always extend at the
/// lowest-index unmatched vertex, trying partners in ascending order. The
/// visitor can stop the walk early.
pub fn visit_perfect_matchings<F>(g: &SimpleGraph, bound: usize, mut f: F) -> Result<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    g.ensure_within(bound)?;
    let n = g.vertex_count();

    fn extend<F>(g: &SimpleGraph, n: usize, used: VertexSet, acc: &mut Vec<(usize, usize)>, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Matching) -> ControlFlow<()>,
    {
        let v = match used.complement(n).smallest() {
            None => return f(&Matching::from_sorted(acc.clone())),
            Some(v) => v,
        };
        for u in g.adjacency(v).difference(used).iter() {
            acc.push((v, u));
            let flow = extend(g, n, used.with(v).with(u), acc, f);
            acc.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    let _ = extend(g, n, VertexSet::EMPTY, &mut Vec::new(), &mut f);
    Ok(())
}

/// All perfect matchings, in visitor order.
pub fn enumerate_perfect_matchings(g: &SimpleGraph, bound: usize) -> Result<Vec<Matching>> {
    enumerate_perfect_matchings_with(g, bound, Exec::default())
}

/// Parallel mode fans out over the partner choices of vertex 0; each branch
/// is walked sequentially and the branch results are concatenated in partner
/// order, so the output order matches sequential mode.
pub fn enumerate_perfect_matchings_with(g: &SimpleGraph, bound: usize, exec: Exec) -> Result<Vec<Matching>> {
    g.ensure_within(bound)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(vec![Matching::from_sorted(Vec::new())]);
    }
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    let collect_under = |first: usize| -> Vec<Matching> {
        let mut out = Vec::new();
        let g2 = g;
        let mut acc = vec![(0, first)];
        fn extend(g: &SimpleGraph, n: usize, used: VertexSet, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
            let v = match used.complement(n).smallest() {
                None => {
                    out.push(Matching::from_sorted(acc.clone()));
                    return;
                }
                Some(v) => v,
            };
            for u in g.adjacency(v).difference(used).iter() {
                acc.push((v, u));
                extend(g, n, used.with(v).with(u), acc, out);
                acc.pop();
            }
        }
        extend(g2, n, VertexSet::EMPTY.with(0).with(first), &mut acc, &mut out);
        out
    };
    let firsts = g.adjacency(0).to_vec();
    Ok(exec::map_slice(exec, &firsts, |&u| collect_under(u)).into_iter().flatten().collect())
}

/// A failure of the exchange property: `{a, b}` and `{a_prime, b_prime}` are
/// edges, `{b, b_prime}` is in the matching, yet `{a, a_prime}` is not an
/// edge (or `a == a_prime`, leaving no edge to ask for).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PViolation {
    pub a: usize,
    pub b: usize,
    pub a_prime: usize,
    pub b_prime: usize,
}

/// First exchange-property violation in scan order: matching edges in stored
/// order, both orientations each, neighbors ascending. Pairs where `a` is
/// `b_prime` itself or `a_prime` is `b` are satisfied by the matching edge
/// and are skipped.
pub fn property_p_violation(g: &SimpleGraph, m: &Matching) -> Option<PViolation> {
    for &(u, v) in m.edges() {
        for (b, b_prime) in [(u, v), (v, u)] {
            for a in g.adjacency(b).iter() {
                if a == b_prime {
                    continue;
                }
                for a_prime in g.adjacency(b_prime).iter() {
                    if a_prime == b {
                        continue;
                    }
                    if a == a_prime || !g.contains_edge(a.min(a_prime), a.max(a_prime)) {
                        return Some(PViolation { a, b, a_prime, b_prime });
                    }
                }
            }
        }
    }
    None
}

pub fn has_property_p(g: &SimpleGraph, m: &Matching) -> bool {
    property_p_violation(g, m).is_none()
}

/// A 4-cycle `a - b - c - d - a` whose opposite edges `{a, b}` and `{c, d}`
/// both lie in the matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FourCycle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// All 4-cycles with two matching edges, scanning matching-edge pairs in
/// stored order and trying the second edge in both orientations.
pub fn four_cycles_with_two_matching_edges(g: &SimpleGraph, m: &Matching) -> Vec<FourCycle> {
    let mut found = Vec::new();
    let edges = m.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (u, v) = edges[j];
            for (c, d) in [(u, v), (v, u)] {
                if g.contains_edge(b.min(c), b.max(c)) && g.contains_edge(d.min(a), d.max(a)) {
                    found.push(FourCycle { a, b, c, d });
                }
            }
        }
    }
    found
}

/// Koenig: minimum vertex cover and maximum matching have equal size.
pub fn is_konig(g: &SimpleGraph, bound: usize) -> Result<bool> {
    Ok(covers::tau(g, bound)? == matching_number(g, bound)?)
}

/// Well-covered: every maximal stable set has the same size, equivalently
/// every minimal vertex cover does.
pub fn is_well_covered(g: &SimpleGraph, bound: usize) -> Result<bool> {
    let covers = covers::enumerate_minimal_covers(g, bound)?;
    Ok(covers.windows(2).all(|w| w[0].len() == w[1].len()))
}

/// Very well-covered: no isolated vertices and every maximal stable set has
/// size exactly `n / 2`.
pub fn is_very_well_covered(g: &SimpleGraph, bound: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n == 0 || n % 2 == 1 || !g.isolated_vertices().is_empty() {
        return Ok(false);
    }
    let covers = covers::enumerate_minimal_covers(g, bound)?;
    Ok(covers.iter().all(|c| c.len() == n / 2))
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// True when every cycle is longer than `k` (in particular on forests).
    pub fn exceeds(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g > k,
            Girth::Infinite => true,
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_some(g),
            Girth::Infinite => serializer.serialize_none(),
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

/// Girth by BFS from every vertex: a non-tree edge scanned at depths
/// `d(u), d(w)` closes a cycle of length at most `d(u) + d(w) + 1`, and the
/// minimum of those candidates over all roots is exact.
pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.adjacency(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Whether some cycle has exactly `k` vertices, by depth-first path
/// enumeration anchored at each cycle's lowest vertex.
pub fn has_cycle_of_length(g: &SimpleGraph, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    fn walk(g: &SimpleGraph, start: usize, current: usize, visited: VertexSet, depth: usize, k: usize) -> bool {
        if depth == k - 1 {
            return g.adjacency(current).contains(start);
        }
        g.adjacency(current)
            .iter()
            .any(|w| w > start && !visited.contains(w) && walk(g, start, w, visited.with(w), depth + 1, k))
    }
    Ok((0..g.vertex_count()).any(|s| walk(g, s, s, VertexSet::singleton(s), 0, k)))
}
