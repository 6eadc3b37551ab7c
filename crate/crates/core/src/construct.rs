//! Maximum matchings whose unsaturated vertices pairwise share no neighbour,
//! built from the Gallai–Edmonds structure of a regular graph.
//!
//! Every pipeline decomposes `G`, contracts the components of `G[D]` into
//! `H(A, B)`, chooses a matching of `H` (and for `k = 5` a second, auxiliary
//! one), picks in every component the vertex to leave uncovered, and
//! assembles the final matching from near-perfect matchings of the
//! components.

use serde::Serialize;

use crate::error::{Error, Result, Witness};
use crate::gallai_edmonds::{
    contract, decompose, good_vertices, ContractedBipartite, GallaiEdmonds,
};
use crate::graph::{Multigraph, VertexSet};
use crate::matching::{
    is_maximum, maximum_matching, near_perfect_avoiding, perfect_matching, BipartiteMatching,
    Matching,
};
use crate::packing::{refined_packing_logged, saturate_w, split_packing};

/// Which construction produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// At most one vertex is unsaturated, so any maximum matching works.
    #[serde(rename = "deficiency-le-1")]
    DeficiencyAtMostOne,
    #[serde(rename = "simple-k")]
    SimpleK,
    #[serde(rename = "multi-4")]
    Multi4,
    #[serde(rename = "multi-5")]
    Multi5,
    /// Multigraphs of degree at most 3.
    #[serde(rename = "multi-low")]
    MultiLow,
    /// Uncertified attempt outside the supported regimes.
    #[serde(rename = "best-effort")]
    BestEffort,
}

impl Regime {
    pub fn tag(self) -> &'static str {
        match self {
            Regime::DeficiencyAtMostOne => "deficiency-le-1",
            Regime::SimpleK => "simple-k",
            Regime::Multi4 => "multi-4",
            Regime::Multi5 => "multi-5",
            Regime::MultiLow => "multi-low",
            Regime::BestEffort => "best-effort",
        }
    }
}

/// Why a component leaves a particular vertex uncovered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AvoidReason {
    /// The vertex is covered by a lifted edge of the H-matching.
    Matched,
    /// The vertex has no neighbour outside its component.
    Good,
    /// The vertex is the lifted end of an auxiliary-matching edge.
    Auxiliary,
    /// Best-effort choice with no guarantee.
    Arbitrary,
}

#[derive(Debug, Clone, Serialize)]
pub struct AvoidChoice {
    /// Index of the component in the decomposition.
    pub component: usize,
    pub vertex: usize,
    pub reason: AvoidReason,
}

/// The choices that determine the assembled matching.
#[derive(Debug, Clone)]
pub struct ConstructionPlan {
    /// The H-matching `M`: covers `A` and every component it matches.
    pub h_matching: BipartiteMatching,
    /// The auxiliary H-matching `M'`; empty outside the `k = 5` pipeline.
    pub h_matching_aux: BipartiteMatching,
    /// Vertices that will stay unsaturated, at most one per component.
    pub x: VertexSet,
    /// Per component (decomposition order), the vertex its near-perfect
    /// matching leaves uncovered.
    pub avoid: Vec<AvoidChoice>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSummary {
    pub d: usize,
    pub a: usize,
    pub c: usize,
    pub components: usize,
    /// `|[Q_i, A]|` per component in decomposition order.
    pub edges_to_a: Vec<u32>,
    /// B-side vertices (as component indices) in W and U.
    pub w: Vec<usize>,
    pub u: Vec<usize>,
    /// Edges of `M` and `M'` lifted to `G`, as `(a, v)` with `v` in a component.
    pub h_matching: Vec<(usize, usize)>,
    pub h_matching_aux: Vec<(usize, usize)>,
    pub avoid: Vec<AvoidChoice>,
    pub exchange_steps: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    pub regime: Regime,
    pub n: usize,
    pub k: u32,
    pub nu: usize,
    pub deficiency: usize,
    pub matching: Matching,
    pub unsaturated: VertexSet,
    pub property_holds: bool,
    pub decomposition: Option<DecompositionSummary>,
}

/// Three vertices `(u, v, w)` with `u`, `v` unsaturated and `w` adjacent to both.
pub fn shared_neighbour(g: &Multigraph, m: &Matching) -> Option<(usize, usize, usize)> {
    let mut owner: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for u in m.unsaturated().iter() {
        for w in g.neighbours(u) {
            match owner[w] {
                Some(v) => return Some((v, u, w)),
                None => owner[w] = Some(u),
            }
        }
    }
    None
}

/// True iff `m` is a maximum matching of `g` and no two `m`-unsaturated
/// vertices have a common neighbour.
pub fn verify_property(g: &Multigraph, m: &Matching) -> Result<bool> {
    Ok(is_maximum(g, m)? && shared_neighbour(g, m).is_none())
}

/// The regime [`construct`] dispatches `g` to, given its deficiency:
/// one of the [`Regime`] tags, `non-regular` or `unsupported`.
pub fn regime_tag(g: &Multigraph, deficiency: usize) -> &'static str {
    let Some(k) = g.degree_profile().regular else {
        return "non-regular";
    };
    if deficiency <= 1 {
        return Regime::DeficiencyAtMostOne.tag();
    }
    if g.is_simple() {
        return Regime::SimpleK.tag();
    }
    match k {
        0..=3 => Regime::MultiLow.tag(),
        4 => Regime::Multi4.tag(),
        5 => Regime::Multi5.tag(),
        _ => "unsupported",
    }
}

fn regular_degree(g: &Multigraph) -> Result<u32> {
    let p = g.degree_profile();
    p.regular.ok_or(Error::NotRegular {
        min: p.min,
        max: p.max,
    })
}

fn expect_degree(g: &Multigraph, k: u32) -> Result<()> {
    let d = regular_degree(g)?;
    if d != k {
        return Err(Error::Contract(format!(
            "expected a {k}-regular graph, got {d}-regular"
        )));
    }
    Ok(())
}

fn shortcut(g: &Multigraph, k: u32) -> Result<ConstructionReport> {
    let m = maximum_matching(g);
    finish(g, k, Regime::DeficiencyAtMostOne, m, None)
}

fn finish(
    g: &Multigraph,
    k: u32,
    regime: Regime,
    matching: Matching,
    decomposition: Option<DecompositionSummary>,
) -> Result<ConstructionReport> {
    let property_holds = verify_property(g, &matching)?;
    let n = g.vertex_count();
    Ok(ConstructionReport {
        regime,
        n,
        k,
        nu: matching.len(),
        deficiency: n - 2 * matching.len(),
        unsaturated: matching.unsaturated(),
        matching,
        property_holds,
        decomposition,
    })
}

/// Dispatches on the regime of a regular graph.
///
/// * deficiency at most one: any maximum matching;
/// * simple graphs, any `k`: [`construct_simple`];
/// * multigraphs with `k <= 3`, `k = 4`, `k = 5`: the matching pipelines;
/// * multigraphs with `k = 6` or `k >= 7`: [`Error::Unsupported`]. See
///   [`construct_best_effort`] for an uncertified attempt.
pub fn construct(g: &Multigraph) -> Result<ConstructionReport> {
    let k = regular_degree(g)?;
    let ge = decompose(g)?;
    if ge.deficiency() <= 1 {
        return shortcut(g, k);
    }
    if g.is_simple() {
        return run_pipeline(g, k, &ge, Regime::SimpleK);
    }
    match k {
        0..=3 => run_pipeline(g, k, &ge, Regime::MultiLow),
        4 => run_pipeline(g, k, &ge, Regime::Multi4),
        5 => run_pipeline(g, k, &ge, Regime::Multi5),
        6 => Err(Error::Unsupported(
            "6-regular multigraphs with deficiency >= 2 are not covered by any construction".into(),
        )),
        _ => Err(Error::Unsupported(format!(
            "{k}-regular multigraphs may have no such matching; no construction applies"
        ))),
    }
}

/// Pipeline for simple `k`-regular graphs.
pub fn construct_simple(g: &Multigraph, k: u32) -> Result<ConstructionReport> {
    expect_degree(g, k)?;
    if !g.is_simple() {
        return Err(Error::Contract(
            "construct_simple needs a simple graph".into(),
        ));
    }
    let ge = decompose(g)?;
    if ge.deficiency() <= 1 {
        return shortcut(g, k);
    }
    run_pipeline(g, k, &ge, Regime::SimpleK)
}

/// Pipeline for 4-regular multigraphs.
pub fn construct_4regular(g: &Multigraph) -> Result<ConstructionReport> {
    expect_degree(g, 4)?;
    let ge = decompose(g)?;
    if ge.deficiency() <= 1 {
        return shortcut(g, 4);
    }
    run_pipeline(g, 4, &ge, Regime::Multi4)
}

/// Pipeline for 5-regular multigraphs.
pub fn construct_5regular(g: &Multigraph) -> Result<ConstructionReport> {
    expect_degree(g, 5)?;
    let ge = decompose(g)?;
    if ge.deficiency() <= 1 {
        return shortcut(g, 5);
    }
    run_pipeline(g, 5, &ge, Regime::Multi5)
}

/// Runs the good-vertex pipeline on any regular graph without certifying
/// the outcome: components with neither a matched vertex nor a good vertex
/// leave their lowest vertex uncovered. `property_holds` reports whether
/// the attempt happened to succeed; `false` says nothing about existence.
pub fn construct_best_effort(g: &Multigraph) -> Result<ConstructionReport> {
    let k = regular_degree(g)?;
    let ge = decompose(g)?;
    if ge.deficiency() <= 1 {
        return shortcut(g, k);
    }
    run_pipeline(g, k, &ge, Regime::BestEffort)
}

fn run_pipeline(
    g: &Multigraph,
    k: u32,
    ge: &GallaiEdmonds,
    regime: Regime,
) -> Result<ConstructionReport> {
    if k == 0 {
        // Edgeless: nothing can be matched and no vertex has a neighbour.
        return finish(g, k, regime, Matching::empty(g.vertex_count()), None);
    }
    let h = contract(g, ge, k)?;
    let (m, aux, exchange_steps) = match regime {
        Regime::Multi5 => five_regular_matchings(&h)?,
        _ => (
            saturate_w(&h.graph, &h.w)?,
            BipartiteMatching::empty(h.graph.a_count(), h.b_count()),
            0,
        ),
    };
    let plan = build_plan(g, ge, &h, m, aux, regime)?;
    let matching = assemble(g, ge, &h, &plan)?;
    let summary = DecompositionSummary {
        d: ge.d.len(),
        a: ge.a.len(),
        c: ge.c.len(),
        components: ge.components.len(),
        edges_to_a: ge.edges_to_a.clone(),
        w: h.w.iter().map(|&b| h.component_index[b]).collect(),
        u: h.u.iter().map(|&b| h.component_index[b]).collect(),
        h_matching: lifted(g, &h, &plan.h_matching),
        h_matching_aux: lifted(g, &h, &plan.h_matching_aux),
        avoid: plan.avoid.clone(),
        exchange_steps,
    };
    let report = finish(g, k, regime, matching, Some(summary))?;
    if regime != Regime::BestEffort {
        check_report(g, ge, &plan, &report)?;
    }
    Ok(report)
}

fn lifted(g: &Multigraph, h: &ContractedBipartite, m: &BipartiteMatching) -> Vec<(usize, usize)> {
    m.pairs()
        .into_iter()
        .map(|(a, b)| (h.a_side[a], h.lift(g, a, b)))
        .collect()
}

/// `M` and `M'` for the 5-regular pipeline. With `Delta(A) <= 3` the
/// refined packing's degree condition fails, but then `W ∪ U` itself has
/// minimum degree at least `Delta(A)` and a single matching covers it.
fn five_regular_matchings(
    h: &ContractedBipartite,
) -> Result<(BipartiteMatching, BipartiteMatching, usize)> {
    let empty = BipartiteMatching::empty(h.graph.a_count(), h.b_count());
    if h.graph.max_degree_a() <= 3 {
        let mut both: Vec<usize> = h.w.iter().chain(&h.u).copied().collect();
        both.sort_unstable();
        return Ok((saturate_w(&h.graph, &both)?, empty, 0));
    }
    let (s, log) = refined_packing_logged(&h.graph, &h.w, &h.u)?;
    let (m, aux) = split_packing(&s, &h.w)?;
    Ok((m, aux, log.steps.len()))
}

fn build_plan(
    g: &Multigraph,
    ge: &GallaiEdmonds,
    h: &ContractedBipartite,
    m: BipartiteMatching,
    aux: BipartiteMatching,
    regime: Regime,
) -> Result<ConstructionPlan> {
    let mut avoid: Vec<Option<AvoidChoice>> = vec![None; ge.components.len()];
    let mut x = Vec::new();
    for b in 0..h.b_count() {
        let component = h.component_index[b];
        let q = &h.components[b];
        let (vertex, reason) = if let Some(a) = m.mate_of_b(b) {
            (h.lift(g, a, b), AvoidReason::Matched)
        } else if let Some(v) = good_vertices(g, q).iter().next() {
            (v, AvoidReason::Good)
        } else if let (Some(a), Regime::Multi5) = (aux.mate_of_b(b), regime) {
            check_triangle_component(g, ge, component, q)?;
            (h.lift(g, a, b), AvoidReason::Auxiliary)
        } else if regime == Regime::BestEffort {
            (q.as_slice()[0], AvoidReason::Arbitrary)
        } else {
            return Err(Error::theory(
                missing_good_vertex_fact(regime, h.degree_b(b), h.k),
                Witness::Component {
                    index: component,
                    vertices: q.as_slice().to_vec(),
                },
            ));
        };
        if reason != AvoidReason::Matched {
            x.push(vertex);
        }
        avoid[component] = Some(AvoidChoice {
            component,
            vertex,
            reason,
        });
    }
    Ok(ConstructionPlan {
        h_matching: m,
        h_matching_aux: aux,
        x: x.into_iter().collect(),
        avoid: avoid
            .into_iter()
            .map(|a| a.expect("every component is a B-vertex"))
            .collect(),
    })
}

fn missing_good_vertex_fact(regime: Regime, d_h: u32, k: u32) -> String {
    match regime {
        Regime::SimpleK => format!(
            "an unmatched component of a simple graph with |[Q,A]| = {d_h} < k = {k} has more \
             than k vertices and hence a good vertex"
        ),
        Regime::Multi4 => "an unmatched component with |[Q,A]| = 2 has a good vertex".into(),
        Regime::MultiLow => {
            format!("an unmatched component with |[Q,A]| = {d_h} < {k} <= 3 has a good vertex")
        }
        _ => format!(
            "a component without a good vertex has |Q| = |[Q,A]| = 3 and is covered by M or M' \
             (|[Q,A]| = {d_h})"
        ),
    }
}

/// A 5-regular component without a good vertex is a triangle whose vertices
/// each send exactly one edge to `A`.
fn check_triangle_component(
    g: &Multigraph,
    ge: &GallaiEdmonds,
    index: usize,
    q: &VertexSet,
) -> Result<()> {
    let in_a = ge.a.to_mask(g.vertex_count());
    let ok = q.len() == 3
        && q.iter().all(|v| {
            g.adjacency(v)
                .iter()
                .filter(|&&(w, _)| in_a[w])
                .map(|&(_, m)| m)
                .sum::<u32>()
                == 1
        });
    if ok {
        Ok(())
    } else {
        Err(Error::theory(
            "a component with no good vertex has |Q| = 3 = |[Q,A]| and each vertex has a unique \
             neighbour in A",
            Witness::Component {
                index,
                vertices: q.as_slice().to_vec(),
            },
        ))
    }
}

/// `M*`: the lifted H-matching, a perfect matching of `G[C]`, and for every
/// component a near-perfect matching leaving its chosen vertex uncovered.
pub fn assemble(
    g: &Multigraph,
    ge: &GallaiEdmonds,
    h: &ContractedBipartite,
    plan: &ConstructionPlan,
) -> Result<Matching> {
    let n = g.vertex_count();
    let mut m = Matching::empty(n);
    for (a, b) in plan.h_matching.pairs() {
        let v = h.lift(g, a, b);
        if plan.avoid[h.component_index[b]].vertex != v {
            return Err(Error::Contract(format!(
                "component {} must avoid the matched vertex {v}",
                h.component_index[b]
            )));
        }
        m.insert(h.a_side[a], v);
    }
    let (gc, c_ids) = g.induced(ge.c.as_slice());
    let mc = perfect_matching(&gc).ok_or_else(|| {
        Error::theory(
            "G[C] has a perfect matching",
            Witness::Vertices {
                vertices: c_ids.clone(),
            },
        )
    })?;
    for (u, v) in mc.pairs() {
        m.insert(c_ids[u], c_ids[v]);
    }
    for (i, q) in ge.components.iter().enumerate() {
        let target = plan.avoid[i].vertex;
        let (sub, ids) = g.induced(q.as_slice());
        let local = ids
            .iter()
            .position(|&v| v == target)
            .ok_or_else(|| Error::Contract(format!("vertex {target} is not in component {i}")))?;
        let mi = near_perfect_avoiding(&sub, local).map_err(|e| match e {
            Error::NotFactorCritical { vertex } => Error::NotFactorCritical {
                vertex: ids[vertex],
            },
            other => other,
        })?;
        for (u, v) in mi.pairs() {
            m.insert(ids[u], ids[v]);
        }
    }
    m.check_against(g)?;
    let expected = ge.c.len() / 2 + (ge.d.len() - ge.components.len()) / 2 + ge.a.len();
    if m.len() != expected {
        return Err(Error::theory(
            "|M*| = |C|/2 + (|D| - c(D))/2 + |A|",
            Witness::Count {
                expected,
                actual: m.len(),
            },
        ));
    }
    Ok(m)
}

/// Post-conditions of every construction, re-checked on the output.
fn check_report(
    g: &Multigraph,
    ge: &GallaiEdmonds,
    plan: &ConstructionPlan,
    report: &ConstructionReport,
) -> Result<()> {
    if report.unsaturated.len() != ge.deficiency() {
        return Err(Error::theory(
            "the number of unsaturated vertices equals the deficiency",
            Witness::Count {
                expected: ge.deficiency(),
                actual: report.unsaturated.len(),
            },
        ));
    }
    if report.unsaturated != plan.x {
        return Err(Error::theory(
            "the unsaturated vertices are exactly the chosen set X",
            Witness::Vertices {
                vertices: report.unsaturated.as_slice().to_vec(),
            },
        ));
    }
    if let Some((u, v, w)) = shared_neighbour(g, &report.matching) {
        return Err(Error::theory(
            "no two unsaturated vertices share a neighbour",
            Witness::Vertices {
                vertices: vec![u, v, w],
            },
        ));
    }
    if !report.property_holds {
        return Err(Error::theory(
            "the assembled matching is maximum",
            Witness::Count {
                expected: ge.nu,
                actual: report.matching.len(),
            },
        ));
    }
    Ok(())
}
