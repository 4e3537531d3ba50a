//! The matching-based deciders.
//!
//! Each decider strips isolated vertices, splits the rest into connected
//! components, and gates every component on a hypothesis of its underlying
//! graph. A gated component is then certified or refuted through perfect
//! matchings:
//!
//! * unmixedness: the component must carry a perfect matching with the
//!   exchange property whose out-neighborhood condition holds. One matching
//!   suffices: a graph either has no perfect matching with the exchange
//!   property, or all of its perfect matchings have it and the
//!   out-neighborhood condition holds for all of them or none.
//! * Cohen-Macaulayness (after capping weights at 2): some perfect matching
//!   must have the exchange property, lie on no 4-cycle with two of its
//!   edges, and satisfy the out-neighborhood condition. All matchings are
//!   tried in enumeration order until one is accepted.
//!
//! Verdicts conjoin over components with `false` dominating
//! `not_applicable` dominating `true`. Components whose underlying graph
//! fits no gate leave the decision `not_applicable`. All vertex indices in
//! traces refer to the input graph.

use crate::graph::{SimpleGraph, WeightedOrientedGraph};
use crate::matching::{self, FourCycle, Girth, Matching, PViolation};
use crate::{Error, Result, VertexSet};
use serde::Serialize;
use std::ops::ControlFlow;

/// Identifiers for the decision rules cited in traces and reports.
pub const RULE_KONIG_UNMIXED: &str = "konig-matching-criterion";
pub const RULE_CYCLE_FREE_357: &str = "cycle-free-357-matching-criterion";
pub const RULE_VWC: &str = "very-well-covered-matching-criterion";
pub const RULE_KONIG_CM: &str = "konig-cm-criterion";
pub const RULE_CYCLE_FREE_35: &str = "cycle-free-35-cm-criterion";
pub const RULE_CONJUNCTION: &str = "component-conjunction";
pub const RULE_ISOLATED: &str = "isolated-vertices";
pub const RULE_NONE: &str = "none-applicable";

/// Rejected matchings recorded per component before the trace stops listing
/// them (the count keeps running).
const REJECTION_TRACE_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::NotApplicable => None,
        }
    }

    /// Conjunction: `False` dominates, then `NotApplicable`.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (False, _) | (_, False) => False,
            (NotApplicable, _) | (_, NotApplicable) => NotApplicable,
            _ => True,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

/// The gate hypotheses of the whole underlying graph, reported alongside
/// every decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub konig: bool,
    pub no_3_5_7_cycles: bool,
    pub no_3_5_cycles: bool,
    pub no_4_cycles: bool,
    pub girth: Girth,
    pub girth_gt_7: bool,
    pub very_well_covered: bool,
}

/// Computes the gate hypotheses on the underlying graph of `d`.
pub fn applicability(d: &WeightedOrientedGraph, bound: usize) -> Result<Hypotheses> {
    let g = d.underlying();
    crate::check_bound(g.vertex_count(), bound)?;
    let has3 = matching::has_cycle_of_length(&g, 3)?;
    let has4 = matching::has_cycle_of_length(&g, 4)?;
    let has5 = matching::has_cycle_of_length(&g, 5)?;
    let has7 = matching::has_cycle_of_length(&g, 7)?;
    let girth = matching::girth(&g);
    Ok(Hypotheses {
        konig: matching::is_konig(&g, bound)?,
        no_3_5_7_cycles: !has3 && !has5 && !has7,
        no_3_5_cycles: !has3 && !has5,
        no_4_cycles: !has4,
        girth,
        girth_gt_7: girth.exceeds(7),
        very_well_covered: matching::is_very_well_covered(&g, bound)?,
    })
}

/// A failure of the out-neighborhood condition: `weighted_vertex` has weight
/// above 1, `out_neighbor` is one of its out-neighbors, `partner` is the
/// matching partner of that out-neighbor, and `offending` is a neighbor of
/// `partner` outside the out-neighborhood of `weighted_vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Condition2Violation {
    pub weighted_vertex: usize,
    pub out_neighbor: usize,
    pub partner: usize,
    pub offending: usize,
}

/// First out-neighborhood failure of a perfect matching, scanning weighted
/// vertices in ascending order, their out-neighbors in ascending order, and
/// reporting the smallest offending neighbor. `None` means the condition
/// holds: for every weighted vertex `a` and out-neighbor `b'` of `a`, the
/// whole neighborhood of the partner of `b'` lies inside the
/// out-neighborhood of `a`.
pub fn out_neighborhood_condition(
    d: &WeightedOrientedGraph,
    m: &Matching,
) -> Result<Option<Condition2Violation>> {
    if m.matched_vertices() != d.vertex_set() {
        return Err(Error::NotPerfect);
    }
    let g = d.underlying();
    for a in d.weighted_vertices().iter() {
        for b_prime in d.out_neighbors(a).iter() {
            let b = m.partner(b_prime).expect("perfect matching covers every vertex");
            if let Some(offending) = g.adjacency(b).difference(d.out_neighbors(a)).smallest() {
                return Ok(Some(Condition2Violation {
                    weighted_vertex: a,
                    out_neighbor: b_prime,
                    partner: b,
                    offending,
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RejectionReason {
    PropertyP { violation: PViolation },
    FourCycle { cycle: FourCycle },
    OutNeighborhood { violation: Condition2Violation },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RejectedMatching {
    pub matching: Vec<(usize, usize)>,
    pub reason: RejectionReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentDetail {
    /// No gate hypothesis holds for this component.
    GateFailed,
    NoPerfectMatching,
    PropertyPFailed {
        matching: Vec<(usize, usize)>,
        violation: PViolation,
    },
    OutNeighborhoodFailed {
        matching: Vec<(usize, usize)>,
        violation: Condition2Violation,
    },
    /// Every examined perfect matching was rejected. `rejected` lists the
    /// first few with reasons; `examined` counts all of them.
    AllMatchingsRejected {
        examined: usize,
        rejected: Vec<RejectedMatching>,
    },
    Certified {
        matching: Vec<(usize, usize)>,
        /// True when the verdict rests on the first matching alone: always
        /// for unmixedness, and under `first_matching_only` for
        /// Cohen-Macaulayness.
        single_matching_shortcut: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentTrace {
    pub vertices: VertexSet,
    pub rule: String,
    pub verdict: Verdict,
    pub detail: ComponentDetail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    /// Isolated vertices, stripped before the component split; they affect
    /// neither verdict.
    pub isolated: VertexSet,
    pub components: Vec<ComponentTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    /// Rule carrying the verdict: the single component's rule, or
    /// `component-conjunction`, or `isolated-vertices` when nothing is left
    /// after stripping.
    pub theorem: String,
    pub hypotheses: Hypotheses,
    pub trace: Trace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideConfig {
    /// Vertex-count ceiling for the whole input graph.
    pub bound: usize,
    /// Cohen-Macaulayness only: stop after the first perfect matching in
    /// enumeration order instead of searching for an accepting one. Faster
    /// on matching-rich graphs but may refute where the full search
    /// certifies.
    pub first_matching_only: bool,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig { bound: crate::DEFAULT_BOUND, first_matching_only: false }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Question {
    Unmixed,
    CohenMacaulay,
}

/// Decides unmixedness of the edge ideal of `d`. Weights are renormalized on
/// entry; `first_matching_only` is ignored (one matching always suffices
/// here).
pub fn decide_unmixed(d: &WeightedOrientedGraph, config: &DecideConfig) -> Result<Decision> {
    run(&d.normalized(), config, Question::Unmixed)
}

/// Decides Cohen-Macaulayness of the edge ideal of `d`. Weights are
/// renormalized and capped at 2 on entry; the verdict only depends on which
/// vertices weigh more than 1.
pub fn decide_cm(d: &WeightedOrientedGraph, config: &DecideConfig) -> Result<Decision> {
    run(&d.normalized().cap_weights(), config, Question::CohenMacaulay)
}

fn run(d: &WeightedOrientedGraph, config: &DecideConfig, question: Question) -> Result<Decision> {
    crate::check_bound(d.vertex_count(), config.bound)?;
    let g = d.underlying();
    let hypotheses = applicability(d, config.bound)?;
    let isolated = g.isolated_vertices();
    let n = g.vertex_count();

    let mut components = Vec::new();
    for comp in g.component_sets() {
        if comp.len() == 1 {
            continue;
        }
        let sub = d.delete_vertices(comp.complement(n))?;
        let map = comp.to_vec();
        let rule = gate(&sub.underlying(), config.bound, question)?;
        let (verdict, detail) = match rule {
            None => (Verdict::NotApplicable, ComponentDetail::GateFailed),
            Some(_) => match question {
                Question::Unmixed => certify_unmixed(&sub, config)?,
                Question::CohenMacaulay => certify_cm(&sub, config)?,
            },
        };
        components.push(ComponentTrace {
            vertices: comp,
            rule: rule.unwrap_or(RULE_NONE).to_string(),
            verdict,
            detail: remap_detail(detail, &map),
        });
    }

    let verdict = components.iter().fold(Verdict::True, |acc, c| acc.and(c.verdict));
    let theorem = match components.len() {
        0 => RULE_ISOLATED.to_string(),
        1 => components[0].rule.clone(),
        _ => RULE_CONJUNCTION.to_string(),
    };
    Ok(Decision { verdict, theorem, hypotheses, trace: Trace { isolated, components } })
}

/// First gate arm whose hypothesis holds on the component.
fn gate(g: &SimpleGraph, bound: usize, question: Question) -> Result<Option<&'static str>> {
    if matching::is_konig(g, bound)? {
        return Ok(Some(match question {
            Question::Unmixed => RULE_KONIG_UNMIXED,
            Question::CohenMacaulay => RULE_KONIG_CM,
        }));
    }
    let lengths: &[usize] = match question {
        Question::Unmixed => &[3, 5, 7],
        Question::CohenMacaulay => &[3, 5],
    };
    let mut cycle_free = true;
    for &k in lengths {
        if matching::has_cycle_of_length(g, k)? {
            cycle_free = false;
            break;
        }
    }
    if cycle_free {
        return Ok(Some(match question {
            Question::Unmixed => RULE_CYCLE_FREE_357,
            Question::CohenMacaulay => RULE_CYCLE_FREE_35,
        }));
    }
    if question == Question::Unmixed && matching::is_very_well_covered(g, bound)? {
        return Ok(Some(RULE_VWC));
    }
    Ok(None)
}

fn certify_unmixed(sub: &WeightedOrientedGraph, config: &DecideConfig) -> Result<(Verdict, ComponentDetail)> {
    let g = sub.underlying();
    let m = matching::maximum_matching(&g, config.bound)?;
    if !m.is_perfect(&g) {
        return Ok((Verdict::False, ComponentDetail::NoPerfectMatching));
    }
    if let Some(violation) = matching::property_p_violation(&g, &m) {
        return Ok((
            Verdict::False,
            ComponentDetail::PropertyPFailed { matching: m.edges().to_vec(), violation },
        ));
    }
    if let Some(violation) = out_neighborhood_condition(sub, &m)? {
        return Ok((
            Verdict::False,
            ComponentDetail::OutNeighborhoodFailed { matching: m.edges().to_vec(), violation },
        ));
    }
    Ok((
        Verdict::True,
        ComponentDetail::Certified { matching: m.edges().to_vec(), single_matching_shortcut: true },
    ))
}

fn certify_cm(sub: &WeightedOrientedGraph, config: &DecideConfig) -> Result<(Verdict, ComponentDetail)> {
    let g = sub.underlying();
    let mut examined = 0usize;
    let mut rejected = Vec::new();
    let mut certificate = None;
    matching::visit_perfect_matchings(&g, config.bound, |m| {
        examined += 1;
        let reason = if let Some(violation) = matching::property_p_violation(&g, m) {
            Some(RejectionReason::PropertyP { violation })
        } else if let Some(&cycle) = matching::four_cycles_with_two_matching_edges(&g, m).first() {
            Some(RejectionReason::FourCycle { cycle })
        } else {
            out_neighborhood_condition(sub, m)
                .expect("enumerated matchings are perfect")
                .map(|violation| RejectionReason::OutNeighborhood { violation })
        };
        match reason {
            None => {
                certificate = Some(m.clone());
                ControlFlow::Break(())
            }
            Some(reason) => {
                if rejected.len() < REJECTION_TRACE_CAP {
                    rejected.push(RejectedMatching { matching: m.edges().to_vec(), reason });
                }
                if config.first_matching_only {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            }
        }
    })?;
    Ok(match certificate {
        Some(m) => (
            Verdict::True,
            ComponentDetail::Certified {
                matching: m.edges().to_vec(),
                single_matching_shortcut: config.first_matching_only,
            },
        ),
        None if examined == 0 => (Verdict::False, ComponentDetail::NoPerfectMatching),
        None => (Verdict::False, ComponentDetail::AllMatchingsRejected { examined, rejected }),
    })
}

/// Rewrites component-local indices back to the input graph through the
/// (ascending) component vertex list.
fn remap_detail(detail: ComponentDetail, map: &[usize]) -> ComponentDetail {
    let edge = |(u, v): (usize, usize)| (map[u], map[v]);
    let edges = |m: Vec<(usize, usize)>| m.into_iter().map(edge).collect();
    let pv = |v: PViolation| PViolation {
        a: map[v.a],
        b: map[v.b],
        a_prime: map[v.a_prime],
        b_prime: map[v.b_prime],
    };
    let c2 = |v: Condition2Violation| Condition2Violation {
        weighted_vertex: map[v.weighted_vertex],
        out_neighbor: map[v.out_neighbor],
        partner: map[v.partner],
        offending: map[v.offending],
    };
    let fc = |c: FourCycle| FourCycle { a: map[c.a], b: map[c.b], c: map[c.c], d: map[c.d] };
    match detail {
        ComponentDetail::GateFailed => ComponentDetail::GateFailed,
        ComponentDetail::NoPerfectMatching => ComponentDetail::NoPerfectMatching,
        ComponentDetail::PropertyPFailed { matching, violation } => {
            ComponentDetail::PropertyPFailed { matching: edges(matching), violation: pv(violation) }
        }
        ComponentDetail::OutNeighborhoodFailed { matching, violation } => {
            ComponentDetail::OutNeighborhoodFailed { matching: edges(matching), violation: c2(violation) }
        }
        ComponentDetail::AllMatchingsRejected { examined, rejected } => ComponentDetail::AllMatchingsRejected {
            examined,
            rejected: rejected
                .into_iter()
                .map(|r| RejectedMatching {
                    matching: edges(r.matching),
                    reason: match r.reason {
                        RejectionReason::PropertyP { violation } => {
                            RejectionReason::PropertyP { violation: pv(violation) }
                        }
                        RejectionReason::FourCycle { cycle } => RejectionReason::FourCycle { cycle: fc(cycle) },
                        RejectionReason::OutNeighborhood { violation } => {
                            RejectionReason::OutNeighborhood { violation: c2(violation) }
                        }
                    },
                })
                .collect(),
        },
        ComponentDetail::Certified { matching, single_matching_shortcut } => {
            ComponentDetail::Certified { matching: edges(matching), single_matching_shortcut }
        }
    }
}
