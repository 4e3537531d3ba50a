//! Graph types and construction.
//!
//! A [`WeightedOrientedGraph`] is a finite simple directed graph with a
//! positive integer weight per vertex. Vertices are referred to by dense
//! indices internally; the string labels given at construction are kept for
//! rendering. The underlying undirected [`SimpleGraph`] forgets orientation
//! and weights.
//!
//! Construction enforces the standing conventions of the subject: no loops,
//! no parallel or anti-parallel edge pairs, and weight 1 on every source and
//! sink. The weight of a source or sink never changes the edge ideal, so
//! [`Normalization::Rewrite`] silently rewrites such weights to 1 and records
//! the rewrite; [`Normalization::Strict`] rejects the input instead.

use crate::{check_bound, fnv1a64, Error, Result, VertexSet, MAX_VERTICES};
use serde::Serialize;

/// Raw description of a weighted oriented graph, prior to validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub name: Option<String>,
    /// `(label, weight)` per vertex, in declaration order.
    pub vertices: Vec<(String, u32)>,
    /// Directed edges `(tail, head)` by label.
    pub edges: Vec<(String, String)>,
}

/// What to do with a source or sink whose declared weight exceeds 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// Rewrite the weight to 1 and log the event.
    #[default]
    Rewrite,
    /// Reject the input.
    Strict,
}

/// Record of one construction-time weight rewrite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizationEvent {
    pub vertex: usize,
    pub label: String,
    /// `"source"` or `"sink"`; an isolated vertex reports as a source.
    pub role: &'static str,
    pub original_weight: u32,
}

#[derive(Debug, Clone)]
pub struct WeightedOrientedGraph {
    name: Option<String>,
    labels: Vec<String>,
    weights: Vec<u32>,
    /// Directed `(tail, head)` index pairs, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    out_nbrs: Vec<VertexSet>,
    in_nbrs: Vec<VertexSet>,
    normalization_log: Vec<NormalizationEvent>,
}

/// Equality is structural: name, labels, weights, edges. The normalization
/// log documents how a particular value was built and is ignored.
impl PartialEq for WeightedOrientedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.labels == other.labels
            && self.weights == other.weights
            && self.edges == other.edges
    }
}
impl Eq for WeightedOrientedGraph {}

/// One generator `x_tail * x_head^exponent` of the edge ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonomialGenerator {
    pub tail: usize,
    pub head: usize,
    pub exponent: u32,
}

impl MonomialGenerator {
    pub fn render(&self, labels: &[String]) -> String {
        if self.exponent == 1 {
            format!("{}*{}", labels[self.tail], labels[self.head])
        } else {
            format!("{}*{}^{}", labels[self.tail], labels[self.head], self.exponent)
        }
    }
}

/// Stable identification of an instance for reports and fuzz logs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceDigest {
    pub name: Option<String>,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// FNV-1a over the canonical edge list; stable across versions.
    pub edge_hash: u64,
    pub weights: Vec<u32>,
}

pub fn build_graph(spec: &GraphSpec, normalization: Normalization) -> Result<WeightedOrientedGraph> {
    let mut labels = Vec::with_capacity(spec.vertices.len());
    let mut weights = Vec::with_capacity(spec.vertices.len());
    for (label, weight) in &spec.vertices {
        if labels.contains(label) {
            return Err(Error::DuplicateVertex(label.clone()));
        }
        labels.push(label.clone());
        weights.push(*weight);
    }
    let index_of = |label: &String| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.clone()))
    };
    let mut edges = Vec::with_capacity(spec.edges.len());
    for (tail, head) in &spec.edges {
        edges.push((index_of(tail)?, index_of(head)?));
    }
    WeightedOrientedGraph::from_parts(spec.name.clone(), labels, weights, edges, normalization)
}

impl WeightedOrientedGraph {
    /// Index-based constructor behind [`build_graph`]; also the entry point
    /// for generated instances.
    pub fn from_parts(
        name: Option<String>,
        labels: Vec<String>,
        weights: Vec<u32>,
        mut edges: Vec<(usize, usize)>,
        normalization: Normalization,
    ) -> Result<WeightedOrientedGraph> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        assert_eq!(weights.len(), n, "one weight per vertex");
        for (v, &w) in weights.iter().enumerate() {
            if w < 1 {
                return Err(Error::InvalidWeight { label: labels[v].clone(), weight: w });
            }
        }
        edges.sort_unstable();
        for &(a, b) in &edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(labels[a].clone()));
            }
        }
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(labels[w[0].0].clone(), labels[w[0].1].clone()));
            }
        }
        for &(a, b) in &edges {
            if edges.binary_search(&(b, a)).is_ok() {
                return Err(Error::BothOrientations(labels[a].clone(), labels[b].clone()));
            }
        }

        let mut out_nbrs = vec![VertexSet::EMPTY; n];
        let mut in_nbrs = vec![VertexSet::EMPTY; n];
        for &(a, b) in &edges {
            out_nbrs[a].insert(b);
            in_nbrs[b].insert(a);
        }

        let mut g = WeightedOrientedGraph {
            name,
            labels,
            weights,
            edges,
            out_nbrs,
            in_nbrs,
            normalization_log: Vec::new(),
        };
        g.apply_normalization(normalization)?;
        Ok(g)
    }

    fn apply_normalization(&mut self, normalization: Normalization) -> Result<()> {
        for v in 0..self.vertex_count() {
            if self.weights[v] == 1 {
                continue;
            }
            let role = if self.in_nbrs[v].is_empty() {
                "source"
            } else if self.out_nbrs[v].is_empty() {
                "sink"
            } else {
                continue;
            };
            match normalization {
                Normalization::Strict => {
                    return Err(Error::NotNormalized {
                        role,
                        label: self.labels[v].clone(),
                        weight: self.weights[v],
                    });
                }
                Normalization::Rewrite => {
                    self.normalization_log.push(NormalizationEvent {
                        vertex: v,
                        label: self.labels[v].clone(),
                        role,
                        original_weight: self.weights[v],
                    });
                    self.weights[v] = 1;
                }
            }
        }
        Ok(())
    }

    /// Copy with source and sink weights rewritten to 1. Identity on builder
    /// output; needed after [`delete_vertices`](Self::delete_vertices), which
    /// keeps weights and may expose a weighted vertex as a new source or sink.
    pub fn normalized(&self) -> WeightedOrientedGraph {
        let mut g = self.clone();
        g.apply_normalization(Normalization::Rewrite)
            .expect("rewrite never fails");
        g
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of the vertex with the given label.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Vertices of weight above 1.
    pub fn weighted_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.weights[v] > 1).collect()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_nbrs[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_nbrs[v]
    }

    pub fn all_neighbors(&self, v: usize) -> VertexSet {
        self.out_nbrs[v].union(self.in_nbrs[v])
    }

    /// `(out, in, all)` neighborhoods of the vertex with the given label.
    pub fn neighbors(&self, label: &str) -> Result<(VertexSet, VertexSet, VertexSet)> {
        let v = self.vertex(label)?;
        Ok((self.out_nbrs[v], self.in_nbrs[v], self.all_neighbors(v)))
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_nbrs[v].is_empty() && !self.out_nbrs[v].is_empty()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_nbrs[v].is_empty() && !self.in_nbrs[v].is_empty()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.out_nbrs[v].is_empty() && self.in_nbrs[v].is_empty()
    }

    pub fn normalization_log(&self) -> &[NormalizationEvent] {
        &self.normalization_log
    }

    /// Underlying undirected graph on the same vertex indices.
    pub fn underlying(&self) -> SimpleGraph {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        SimpleGraph::new(self.vertex_count(), edges).expect("validated at construction")
    }

    /// Induced subgraph on `V \ a`, reindexed densely. Labels and weights of
    /// surviving vertices are kept unchanged, so the result may have sources
    /// or sinks of weight above 1; see [`normalized`](Self::normalized).
    pub fn delete_vertices(&self, a: VertexSet) -> Result<WeightedOrientedGraph> {
        let n = self.vertex_count();
        if let Some(v) = a.iter().find(|&v| v >= n) {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !a.contains(v)).collect();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(s, t)| !a.contains(s) && !a.contains(t))
            .map(|&(s, t)| (new_index[s], new_index[t]))
            .collect();
        let mut g = WeightedOrientedGraph {
            name: self.name.clone(),
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            weights: keep.iter().map(|&v| self.weights[v]).collect(),
            edges,
            out_nbrs: Vec::new(),
            in_nbrs: Vec::new(),
            normalization_log: Vec::new(),
        };
        g.rebuild_neighbor_sets();
        Ok(g)
    }

    fn rebuild_neighbor_sets(&mut self) {
        let n = self.vertex_count();
        self.out_nbrs = vec![VertexSet::EMPTY; n];
        self.in_nbrs = vec![VertexSet::EMPTY; n];
        for &(a, b) in &self.edges {
            self.out_nbrs[a].insert(b);
            self.in_nbrs[b].insert(a);
        }
        self.edges.sort_unstable();
    }

    /// One generator per edge, in edge order: `x_tail * x_head^{w(head)}`.
    pub fn edge_ideal_generators(&self) -> Vec<MonomialGenerator> {
        self.edges
            .iter()
            .map(|&(tail, head)| MonomialGenerator { tail, head, exponent: self.weights[head] })
            .collect()
    }

    /// Copy with every weight above 2 lowered to 2. Idempotent; both deciders
    /// are invariant under it.
    pub fn cap_weights(&self) -> WeightedOrientedGraph {
        let mut g = self.clone();
        for w in &mut g.weights {
            *w = (*w).min(2);
        }
        g
    }

    pub fn digest(&self) -> InstanceDigest {
        let bytes = self
            .edges
            .iter()
            .flat_map(|&(a, b)| [a as u8, b as u8]);
        InstanceDigest {
            name: self.name.clone(),
            vertex_count: self.vertex_count(),
            edge_count: self.edges.len(),
            edge_hash: fnv1a64(bytes),
            weights: self.weights.clone(),
        }
    }
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    /// Undirected edges `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<SimpleGraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in &edges {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(format!("{u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(SimpleGraph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn adjacency(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_degree_one_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 1)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for u in self.adj[v].difference(comp).iter() {
                    comp.insert(u);
                    frontier.push(u);
                }
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph, reindexed densely in ascending vertex order.
    pub fn induced(&self, vs: VertexSet) -> SimpleGraph {
        let keep = vs.to_vec();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| vs.contains(u) && vs.contains(v))
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        SimpleGraph::new(keep.len(), edges).expect("subgraph of a valid graph")
    }

    pub fn connected_components(&self) -> Vec<SimpleGraph> {
        self.component_sets().into_iter().map(|c| self.induced(c)).collect()
    }

    pub(crate) fn ensure_within(&self, bound: usize) -> Result<()> {
        check_bound(self.n, bound)
    }
}
