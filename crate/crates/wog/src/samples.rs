//! Bundled example graphs.
//!
//! The five `fig*` graphs mirror the JSON fixture corpus in `fixtures/` at
//! the repository root; a test in the cli crate keeps the two in sync. They
//! cover the interesting verdict combinations: `fig1_left` and `fig1_right`
//! are mixed although their underlying graphs are unmixed Koenig graphs,
//! `fig2_left` and `fig2_right` are unmixed but not Cohen-Macaulay, and
//! `fig3` is Cohen-Macaulay.

use crate::graph::{build_graph, GraphSpec, Normalization, WeightedOrientedGraph};

/// Graph on `x1..xn` with the given directed edges (1-indexed labels) and
/// weight overrides. Panics on invalid input; callers are fixed vectors.
pub fn xgraph(name: &str, n: usize, edges: &[(usize, usize)], heavy: &[(usize, u32)]) -> WeightedOrientedGraph {
    let vertices = (1..=n)
        .map(|i| {
            let w = heavy.iter().find(|&&(v, _)| v == i).map_or(1, |&(_, w)| w);
            (format!("x{i}"), w)
        })
        .collect();
    let edges = edges.iter().map(|&(a, b)| (format!("x{a}"), format!("x{b}"))).collect();
    let spec = GraphSpec { name: Some(name.to_owned()), vertices, edges };
    build_graph(&spec, Normalization::Rewrite).expect("sample graphs are valid")
}

/// Six vertices, w(x5)=2. Mixed: its strong covers have cardinalities 3 and 5.
pub fn fig1_left() -> WeightedOrientedGraph {
    xgraph(
        "fig1_left",
        6,
        &[(1, 4), (1, 2), (2, 5), (2, 3), (5, 4), (5, 6)],
        &[(5, 2)],
    )
}

/// Six vertices, w(x1)=w(x2)=2. Mixed: strong covers of cardinalities 3 and 4.
pub fn fig1_right() -> WeightedOrientedGraph {
    xgraph(
        "fig1_right",
        6,
        &[(1, 2), (2, 3), (4, 1), (2, 5), (6, 3), (3, 1)],
        &[(1, 2), (2, 2)],
    )
}

/// Six vertices, w(x5)=2. Unmixed but not Cohen-Macaulay: every perfect
/// matching of the underlying graph has two edges on a 4-cycle.
pub fn fig2_left() -> WeightedOrientedGraph {
    xgraph(
        "fig2_left",
        6,
        &[(1, 4), (5, 1), (2, 5), (3, 2), (3, 6), (6, 5), (3, 1)],
        &[(5, 2)],
    )
}

/// Ten vertices, w(x3)=2. Unmixed but not Cohen-Macaulay.
pub fn fig2_right() -> WeightedOrientedGraph {
    xgraph(
        "fig2_right",
        10,
        &[
            (1, 2), (3, 2), (6, 7), (2, 7), (3, 7), (8, 3),
            (9, 3), (9, 4), (9, 10), (5, 10), (4, 5), (5, 3),
        ],
        &[(3, 2)],
    )
}

/// Eight vertices, w(x1)=w(x2)=2. Cohen-Macaulay (hence unmixed).
pub fn fig3() -> WeightedOrientedGraph {
    xgraph(
        "fig3",
        8,
        &[
            (7, 2), (6, 1), (2, 5), (1, 3), (1, 5),
            (5, 4), (1, 2), (3, 4), (2, 3), (3, 8),
        ],
        &[(1, 2), (2, 2)],
    )
}

pub fn all_figures() -> Vec<WeightedOrientedGraph> {
    vec![fig1_left(), fig1_right(), fig2_left(), fig2_right(), fig3()]
}

/// Directed path x1 -> x2 -> ... -> xn, all weights 1.
pub fn path(n: usize) -> WeightedOrientedGraph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    xgraph(&format!("path{n}"), n, &edges, &[])
}

/// Directed cycle x1 -> x2 -> ... -> xn -> x1, all weights 1.
pub fn cycle(n: usize) -> WeightedOrientedGraph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    xgraph(&format!("cycle{n}"), n, &edges, &[])
}

/// Single directed edge x1 -> x2. Both endpoints are forced to weight 1 by
/// the source/sink convention.
pub fn single_edge() -> WeightedOrientedGraph {
    xgraph("single_edge", 2, &[(1, 2)], &[])
}

/// Triangle x1x2x3, all weights 1.
pub fn triangle() -> WeightedOrientedGraph {
    xgraph("triangle", 3, &[(1, 2), (2, 3), (1, 3)], &[])
}
