//! Maximum matchings of regular (multi)graphs in which no two unsaturated
//! vertices share a neighbour.
//!
//! The crate decomposes a graph with the Gallai–Edmonds structure theorem,
//! solves matching and path-packing problems on the contracted bipartite
//! graph, and assembles the result from near-perfect matchings of the
//! factor-critical pieces. A brute-force oracle and an exhaustive generator
//! of small regular graphs cross-check the constructions.
//!
//! ```
//! use regmatch::{construct, fixture, verify_property};
//!
//! let g = fixture("qt4").unwrap();
//! let report = construct(&g).unwrap();
//! assert!(report.property_holds);
//! assert!(verify_property(&g, &report.matching).unwrap());
//! ```

pub mod construct;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gallai_edmonds;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod packing;
pub mod report;
pub mod scan;

pub use construct::{
    assemble, construct, construct_4regular, construct_5regular, construct_best_effort,
    construct_simple, regime_tag, shared_neighbour, verify_property, AvoidChoice, AvoidReason,
    ConstructionPlan, ConstructionReport, DecompositionSummary, Regime,
};
pub use enumerate::{canonical_form, regular_graphs};
pub use error::{Error, Result, TheoryViolation, Witness};
pub use fixtures::{fixture, FIXTURE_NAMES};
pub use gallai_edmonds::{
    certify_factor_critical, contract, decompose, good_vertices, ContractedBipartite, GallaiEdmonds,
};
pub use generate::{gen_gadget_regular, gen_random_regular};
pub use graph::{DegreeProfile, EdgeRecord, Multigraph, VertexSet};
pub use io::{
    parse_graph6, parse_matching_pairs, parse_mel, write_graph6, write_matching, write_mel,
    GraphFormat,
};
pub use matching::{
    bipartite_max_matching, is_maximum, matching_number, maximum_matching, near_perfect_avoiding,
    perfect_matching, BipartiteGraph, BipartiteMatching, Matching,
};
pub use oracle::{
    enumerate_maximum_matchings, enumerate_maximum_matchings_within, exists_good_maximum_matching,
    exists_good_maximum_matching_within, OracleVerdict, DEFAULT_MAX_SUPPORT_EDGES,
};
pub use packing::{
    p2p3_packing, refined_packing, refined_packing_by_flow, refined_packing_logged, saturate_w,
    split_packing, ExchangeCase, ExchangeLog, ExchangeStep, Packing, PackingComponent,
};
pub use scan::{
    exhaustive_graphs, exhaustive_regular_scan, random_graphs, random_regular_scan, scan_graph,
    scan_graphs, RandomSource, ScanRecord, ScanReport, ScanSummary,
};
