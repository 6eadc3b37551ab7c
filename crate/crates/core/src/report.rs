//! Versioned JSON envelopes for everything the CLI prints.

use serde::Serialize;

use crate::construct::regime_tag;
use crate::gallai_edmonds::{contract, good_vertices, GallaiEdmonds};
use crate::graph::{Multigraph, VertexSet};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty-printed JSON object `{"schema": 1, "kind": kind, ...body}`.
pub fn to_json<T: Serialize>(kind: &str, body: &T) -> String {
    serde_json::to_string_pretty(&Envelope {
        schema: SCHEMA_VERSION,
        kind,
        body,
    })
    .expect("report types serialise")
}

/// Single-line variant of [`to_json`] for JSON-lines streams.
pub fn to_json_line<T: Serialize>(kind: &str, body: &T) -> String {
    serde_json::to_string(&Envelope {
        schema: SCHEMA_VERSION,
        kind,
        body,
    })
    .expect("report types serialise")
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractedSummary {
    /// Component indices in B-side order (non-increasing `d_H`).
    pub order: Vec<usize>,
    pub degrees: Vec<u32>,
    /// Component indices with `d_H >= k`.
    pub w: Vec<usize>,
    /// Component indices with `d_H = 3` (only for `k = 5`).
    pub u: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport<'a> {
    pub regime: &'static str,
    pub n: usize,
    pub regular: Option<u32>,
    pub deficiency: usize,
    pub decomposition: &'a GallaiEdmonds,
    /// Good vertices of each component, in component order.
    pub good_vertices: Vec<VertexSet>,
    /// Present for regular graphs whose deficiency is at least 2.
    pub contracted: Option<ContractedSummary>,
}

impl<'a> DecompositionReport<'a> {
    pub fn new(g: &Multigraph, ge: &'a GallaiEdmonds) -> Self {
        let regular = g.degree_profile().regular;
        let contracted = regular
            .filter(|&k| k > 0 && ge.deficiency() >= 2)
            .and_then(|k| contract(g, ge, k).ok())
            .map(|h| ContractedSummary {
                degrees: (0..h.b_count()).map(|b| h.degree_b(b)).collect(),
                w: h.w.iter().map(|&b| h.component_index[b]).collect(),
                u: h.u.iter().map(|&b| h.component_index[b]).collect(),
                order: h.component_index,
            });
        DecompositionReport {
            regime: regime_tag(g, ge.deficiency()),
            n: g.vertex_count(),
            regular,
            deficiency: ge.deficiency(),
            decomposition: ge,
            good_vertices: ge.components.iter().map(|q| good_vertices(g, q)).collect(),
            contracted,
        }
    }
}
