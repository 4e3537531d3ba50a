//! Vertex covers, the L-partition, and strong covers.
//!
//! For a cover `C` of the underlying graph, each `x` in `C` falls in exactly
//! one part: `L1` if some out-neighbor lies outside `C`, else `L2` if some
//! in-neighbor lies outside `C`, else `L3` (all neighbors inside `C`, which
//! happens exactly when `C \ {x}` fails to cover some edge at no vertex, i.e.
//! `C` is non-minimal at `x`). `C` is a strong cover when every `x` in `L3`
//! receives an edge `(y, x)` from some weighted vertex `y` in `L2 + L3`.
//!
//! Cover enumeration walks stable sets of the underlying graph (covers are
//! exactly complements of stable sets) branching on vertices in descending
//! degree order, instead of scanning raw subsets.

use crate::exec::{self, Exec};
use crate::graph::{SimpleGraph, WeightedOrientedGraph};
use crate::{Error, Result, VertexSet};
use serde::Serialize;

/// The `L1/L2/L3` split of a vertex cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LPartition {
    pub l1: VertexSet,
    pub l2: VertexSet,
    pub l3: VertexSet,
}

/// A cover together with its partition and the strong-cover evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverAnalysis {
    pub cover: VertexSet,
    pub l1: VertexSet,
    pub l2: VertexSet,
    pub l3: VertexSet,
    pub strong: bool,
    /// When strong: one in-edge `(y, x)` per `x` in `L3`, ascending in `x`,
    /// with `y` the smallest eligible in-neighbor.
    pub witnesses: Vec<(usize, usize)>,
    /// When not strong: the first `x` in `L3` with no eligible in-edge.
    pub failing: Option<usize>,
}

fn check_vertices(n: usize, c: VertexSet) -> Result<()> {
    if let Some(v) = c.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { index: v, n });
    }
    Ok(())
}

pub fn is_vertex_cover(g: &SimpleGraph, c: VertexSet) -> Result<bool> {
    check_vertices(g.vertex_count(), c)?;
    Ok(g.edges().iter().all(|&(u, v)| c.contains(u) || c.contains(v)))
}

/// All maximal stable sets, by Bron-Kerbosch with pivoting over
/// non-adjacency.
fn maximal_stable_sets(g: &SimpleGraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let compat: Vec<VertexSet> = (0..n)
        .map(|v| g.adjacency(v).union(VertexSet::singleton(v)).complement(n))
        .collect();
    let mut out = Vec::new();
    fn bk(compat: &[VertexSet], r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(compat[u]).len())
            .expect("p or x nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(compat[pivot]).to_vec() {
            bk(compat, r.with(v), p.intersection(compat[v]), x.intersection(compat[v]), out);
            p.remove(v);
            x.insert(v);
        }
    }
    bk(&compat, VertexSet::EMPTY, VertexSet::full(n), VertexSet::EMPTY, &mut out);
    out
}

/// All minimal vertex covers, sorted by cardinality then set value. Each
/// candidate (complement of a maximal stable set) is re-verified minimal
/// directly.
pub fn enumerate_minimal_covers(g: &SimpleGraph, bound: usize) -> Result<Vec<VertexSet>> {
    g.ensure_within(bound)?;
    let n = g.vertex_count();
    let mut covers: Vec<VertexSet> = maximal_stable_sets(g).into_iter().map(|s| s.complement(n)).collect();
    for &c in &covers {
        debug_assert!(is_vertex_cover(g, c).unwrap());
        assert!(
            c.iter().all(|x| !is_vertex_cover(g, c.without(x)).unwrap()),
            "complement of a maximal stable set must be a minimal cover"
        );
    }
    covers.sort_unstable_by_key(|c| (c.len(), c.bits()));
    Ok(covers)
}

/// Minimum vertex cover cardinality, by branch and bound on uncovered edges.
pub fn tau(g: &SimpleGraph, bound: usize) -> Result<usize> {
    g.ensure_within(bound)?;
    fn bnb(g: &SimpleGraph, c: VertexSet, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        match g.edges().iter().find(|&&(u, v)| !c.contains(u) && !c.contains(v)) {
            None => *best = size,
            Some(&(u, v)) => {
                bnb(g, c.with(u), size + 1, best);
                bnb(g, c.with(v), size + 1, best);
            }
        }
    }
    let mut best = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(0);
    }
    bnb(g, VertexSet::EMPTY, 0, &mut best);
    Ok(best)
}

/// The L-partition of a cover of the underlying graph of `d`.
pub fn l_partition(d: &WeightedOrientedGraph, c: VertexSet) -> Result<LPartition> {
    let g = d.underlying();
    if !is_vertex_cover(&g, c)? {
        return Err(Error::NotACover(c));
    }
    Ok(partition_unchecked(d, c))
}

fn partition_unchecked(d: &WeightedOrientedGraph, c: VertexSet) -> LPartition {
    let outside = c.complement(d.vertex_count());
    let mut l1 = VertexSet::EMPTY;
    let mut l2 = VertexSet::EMPTY;
    let mut l3 = VertexSet::EMPTY;
    for x in c.iter() {
        if !d.out_neighbors(x).intersection(outside).is_empty() {
            l1.insert(x);
        } else if !d.in_neighbors(x).intersection(outside).is_empty() {
            l2.insert(x);
        } else {
            l3.insert(x);
        }
    }
    LPartition { l1, l2, l3 }
}

/// Completes the partition with the strong-cover check.
pub fn analyze_cover(d: &WeightedOrientedGraph, c: VertexSet) -> Result<CoverAnalysis> {
    let g = d.underlying();
    if !is_vertex_cover(&g, c)? {
        return Err(Error::NotACover(c));
    }
    Ok(analyze_unchecked(d, c))
}

fn analyze_unchecked(d: &WeightedOrientedGraph, c: VertexSet) -> CoverAnalysis {
    let LPartition { l1, l2, l3 } = partition_unchecked(d, c);
    let eligible = l2.union(l3).intersection(d.weighted_vertices());
    let mut witnesses = Vec::new();
    for x in l3.iter() {
        match d.in_neighbors(x).intersection(eligible).smallest() {
            Some(y) => witnesses.push((y, x)),
            None => {
                return CoverAnalysis {
                    cover: c,
                    l1,
                    l2,
                    l3,
                    strong: false,
                    witnesses: Vec::new(),
                    failing: Some(x),
                }
            }
        }
    }
    CoverAnalysis { cover: c, l1, l2, l3, strong: true, witnesses, failing: None }
}

pub fn is_strong_cover(d: &WeightedOrientedGraph, c: VertexSet) -> Result<bool> {
    Ok(analyze_cover(d, c)?.strong)
}

/// Walks every stable set of `g` (vertices in descending degree order) and
/// hands the complement cover to `leaf`; collected results keep search order.
fn scan_covers<R, F>(g: &SimpleGraph, exec: Exec, leaf: F) -> Vec<R>
where
    R: Send,
    F: Fn(VertexSet) -> Option<R> + Sync,
{
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // Expand the first levels into subproblems, then finish each subtree.
    let split = n.min(match exec {
        Exec::Sequential => 0,
        #[cfg(feature = "parallel")]
        Exec::Parallel => 10,
    });
    let mut states = vec![(0usize, VertexSet::EMPTY)];
    for _ in 0..split {
        let mut next = Vec::with_capacity(states.len() * 2);
        for (pos, s) in states {
            let v = order[pos];
            next.push((pos + 1, s));
            if g.adjacency(v).intersection(s).is_empty() {
                next.push((pos + 1, s.with(v)));
            }
        }
        states = next;
    }

    let run = |&(pos, s): &(usize, VertexSet)| {
        let mut found = Vec::new();
        let mut stack = vec![(pos, s)];
        while let Some((pos, s)) = stack.pop() {
            if pos == n {
                if let Some(r) = leaf(s.complement(n)) {
                    found.push(r);
                }
                continue;
            }
            let v = order[pos];
            // include-branch pushed last so it pops first; order is fixed,
            // not meaningful
            stack.push((pos + 1, s));
            if g.adjacency(v).intersection(s).is_empty() {
                stack.push((pos + 1, s.with(v)));
            }
        }
        found
    };
    exec::map_slice(exec, &states, run).into_iter().flatten().collect()
}

/// Every strong vertex cover of `d` (over all covers, not only minimal ones),
/// sorted by cardinality then set value.
pub fn enumerate_strong_covers(d: &WeightedOrientedGraph, bound: usize) -> Result<Vec<CoverAnalysis>> {
    enumerate_strong_covers_with(d, bound, Exec::default())
}

pub fn enumerate_strong_covers_with(
    d: &WeightedOrientedGraph,
    bound: usize,
    exec: Exec,
) -> Result<Vec<CoverAnalysis>> {
    crate::check_bound(d.vertex_count(), bound)?;
    let g = d.underlying();
    let mut found = scan_covers(&g, exec, |cover| {
        let analysis = analyze_unchecked(d, cover);
        analysis.strong.then_some(analysis)
    });
    found.sort_unstable_by_key(|a| (a.cover.len(), a.cover.bits()));
    Ok(found)
}

/// All vertex covers, for small-n reference checks.
pub fn enumerate_covers(g: &SimpleGraph, bound: usize) -> Result<Vec<VertexSet>> {
    g.ensure_within(bound)?;
    let mut covers = scan_covers(g, Exec::Sequential, Some);
    covers.sort_unstable_by_key(|c| (c.len(), c.bits()));
    Ok(covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::DEFAULT_BOUND;

    fn vs(vertices: &[usize]) -> VertexSet {
        vertices.iter().copied().collect()
    }

    /// 1-indexed labels, matching the x-labels of the samples.
    fn xs(vertices: &[usize]) -> VertexSet {
        vertices.iter().map(|v| v - 1).collect()
    }

    #[test]
    fn cover_membership() {
        let g = samples::fig1_left().underlying();
        assert!(is_vertex_cover(&g, xs(&[1, 2, 5])).unwrap());
        assert!(!is_vertex_cover(&g, VertexSet::EMPTY).unwrap());
        assert!(is_vertex_cover(&g, VertexSet::full(6)).unwrap());
        assert!(matches!(
            is_vertex_cover(&g, VertexSet::singleton(9)).unwrap_err(),
            Error::VertexOutOfRange { index: 9, .. }
        ));
    }

    #[test]
    fn minimal_covers_of_small_graphs() {
        let single = samples::single_edge().underlying();
        assert_eq!(enumerate_minimal_covers(&single, DEFAULT_BOUND).unwrap(), vec![vs(&[0]), vs(&[1])]);

        let c4 = samples::cycle(4).underlying();
        assert_eq!(enumerate_minimal_covers(&c4, DEFAULT_BOUND).unwrap(), vec![vs(&[0, 2]), vs(&[1, 3])]);

        let fig = samples::fig1_left().underlying();
        let covers = enumerate_minimal_covers(&fig, DEFAULT_BOUND).unwrap();
        assert_eq!(covers, vec![xs(&[1, 2, 5]), xs(&[1, 3, 5]), xs(&[2, 4, 5]), xs(&[2, 4, 6])]);
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(&samples::single_edge().underlying(), DEFAULT_BOUND).unwrap(), 1);
        assert_eq!(tau(&samples::fig1_left().underlying(), DEFAULT_BOUND).unwrap(), 3);
        assert_eq!(tau(&samples::fig3().underlying(), DEFAULT_BOUND).unwrap(), 4);
        assert_eq!(tau(&crate::SimpleGraph::new(3, vec![]).unwrap(), DEFAULT_BOUND).unwrap(), 0);
        assert!(tau(&crate::SimpleGraph::new(30, vec![]).unwrap(), 24).is_err());
    }

    #[test]
    fn partition_of_named_covers() {
        // Whole vertex set: nothing sees the outside.
        let d = samples::fig1_left();
        let p = l_partition(&d, VertexSet::full(6)).unwrap();
        assert!(p.l1.is_empty() && p.l2.is_empty());
        assert_eq!(p.l3, VertexSet::full(6));

        let p = l_partition(&d, xs(&[1, 2, 5])).unwrap();
        assert_eq!(p.l1, xs(&[1, 2, 5]));
        assert!(p.l3.is_empty());

        let d = samples::fig2_left();
        let p = l_partition(&d, xs(&[1, 2, 3, 5])).unwrap();
        assert_eq!(p.l1, xs(&[1, 3]));
        assert_eq!(p.l2, xs(&[5]));
        assert_eq!(p.l3, xs(&[2]));

        assert_eq!(l_partition(&d, VertexSet::EMPTY).unwrap_err(), Error::NotACover(VertexSet::EMPTY));
    }

    #[test]
    fn strong_cover_checks() {
        let d = samples::fig1_left();
        // Minimal covers are strong vacuously.
        assert!(is_strong_cover(&d, xs(&[1, 2, 5])).unwrap());

        // V(D) is not strong: x1 is a source in L3.
        let full = analyze_cover(&d, VertexSet::full(6)).unwrap();
        assert!(!full.strong);
        assert_eq!(full.failing, Some(0));

        // All weights 1 and L3 nonempty: no witness can exist.
        let path = samples::path(3);
        let all = analyze_cover(&path, VertexSet::full(3)).unwrap();
        assert!(!all.strong);

        // The size-5 strong cover of fig1_left, witnessed through x5.
        let c = xs(&[1, 3, 4, 5, 6]);
        let a = analyze_cover(&d, c).unwrap();
        assert!(a.strong);
        assert_eq!(a.l3, xs(&[4, 6]));
        assert_eq!(a.witnesses, vec![(4, 3), (4, 5)]);
    }

    #[test]
    fn strong_cover_enumerations() {
        let single = samples::single_edge();
        let strong = enumerate_strong_covers(&single, DEFAULT_BOUND).unwrap();
        let covers: Vec<VertexSet> = strong.iter().map(|a| a.cover).collect();
        assert_eq!(covers, vec![vs(&[0]), vs(&[1])]);

        // fig1_left: the four minimal covers plus one of size five.
        let strong = enumerate_strong_covers(&samples::fig1_left(), DEFAULT_BOUND).unwrap();
        let sizes: Vec<usize> = strong.iter().map(|a| a.cover.len()).collect();
        assert_eq!(sizes, vec![3, 3, 3, 3, 5]);
        assert_eq!(strong[4].cover, xs(&[1, 3, 4, 5, 6]));

        // fig2_left: unmixed, all strong covers share cardinality 3.
        let strong = enumerate_strong_covers(&samples::fig2_left(), DEFAULT_BOUND).unwrap();
        assert!(strong.iter().all(|a| a.cover.len() == 3));
        assert_eq!(strong.len(), 3);
    }

    #[test]
    fn enumeration_matches_sequential_mode() {
        let d = samples::fig2_right();
        let default_mode = enumerate_strong_covers(&d, DEFAULT_BOUND).unwrap();
        let sequential = enumerate_strong_covers_with(&d, DEFAULT_BOUND, Exec::Sequential).unwrap();
        assert_eq!(default_mode, sequential);
    }

    #[test]
    fn brute_force_agreement_on_samples() {
        for d in samples::all_figures() {
            let g = d.underlying();
            let n = g.vertex_count();
            // Raw subset scan as the reference.
            let mut brute_minimal = Vec::new();
            let mut brute_strong = Vec::new();
            for bits in 0..1u64 << n {
                let c = VertexSet::from_bits(bits);
                if !is_vertex_cover(&g, c).unwrap() {
                    continue;
                }
                if c.iter().all(|x| !is_vertex_cover(&g, c.without(x)).unwrap()) {
                    brute_minimal.push(c);
                }
                if analyze_cover(&d, c).unwrap().strong {
                    brute_strong.push(c);
                }
            }
            brute_minimal.sort_unstable_by_key(|c| (c.len(), c.bits()));
            brute_strong.sort_unstable_by_key(|c| (c.len(), c.bits()));

            assert_eq!(enumerate_minimal_covers(&g, DEFAULT_BOUND).unwrap(), brute_minimal, "{:?}", d.name());
            let strong: Vec<VertexSet> =
                enumerate_strong_covers(&d, DEFAULT_BOUND).unwrap().iter().map(|a| a.cover).collect();
            assert_eq!(strong, brute_strong, "{:?}", d.name());
        }
    }
}
