//! Gallai–Edmonds partition `(D, A, C)` and the bipartite graph `H(A, B)`
//! obtained by shrinking every component of `G[D]` to a single vertex.

use serde::Serialize;

use crate::error::{Error, Result, Witness};
use crate::graph::{components_within, Multigraph, VertexSet};
use crate::matching::{
    matching_number_without, maximum_matching, near_perfect_avoiding, perfect_matching,
    BipartiteGraph, Matching,
};

#[derive(Debug, Clone, Serialize)]
pub struct GallaiEdmonds {
    /// Vertices missed by at least one maximum matching.
    pub d: VertexSet,
    /// Vertices outside `D` with a neighbour in `D`.
    pub a: VertexSet,
    pub c: VertexSet,
    /// Components of `G[D]`, ordered by smallest member.
    pub components: Vec<VertexSet>,
    /// `|[Q_i, A]|` per component, counting multiplicity.
    pub edges_to_a: Vec<u32>,
    /// Matching number of the host graph.
    pub nu: usize,
    #[serde(skip)]
    component_of: Vec<Option<usize>>,
    #[serde(skip)]
    witness: Matching,
}

impl GallaiEdmonds {
    pub fn vertex_count(&self) -> usize {
        self.component_of.len()
    }

    /// `n - 2 nu`: the number of vertices every maximum matching misses.
    pub fn deficiency(&self) -> usize {
        self.vertex_count() - 2 * self.nu
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component_of[v]
    }

    /// The maximum matching computed while decomposing.
    pub fn maximum_matching(&self) -> &Matching {
        &self.witness
    }

    /// Re-checks every structural guarantee of the decomposition against
    /// `g`. The parity and edge-count facts are only checked when `g` is
    /// regular.
    pub fn check_invariants(&self, g: &Multigraph) -> Result<()> {
        let n = g.vertex_count();
        let in_d = self.d.to_mask(n);
        let in_a = self.a.to_mask(n);
        let in_c = self.c.to_mask(n);
        for v in 0..n {
            if u8::from(in_d[v]) + u8::from(in_a[v]) + u8::from(in_c[v]) != 1 {
                return Err(Error::theory(
                    "D, A, C must partition V(G)",
                    Witness::Vertices { vertices: vec![v] },
                ));
            }
        }
        let expected_a: VertexSet = self
            .d
            .neighbourhood(g)
            .iter()
            .filter(|&v| !in_d[v])
            .collect();
        if expected_a != self.a {
            return Err(Error::theory(
                "A must equal N(D) \\ D",
                Witness::Vertices {
                    vertices: expected_a.as_slice().to_vec(),
                },
            ));
        }
        for (i, q) in self.components.iter().enumerate() {
            let (sub, _) = g.induced(q.as_slice());
            if !certify_factor_critical(&sub) {
                return Err(Error::theory(
                    "components of G[D] are factor-critical",
                    Witness::Component {
                        index: i,
                        vertices: q.as_slice().to_vec(),
                    },
                ));
            }
        }
        let (gc, _) = g.induced(self.c.as_slice());
        if perfect_matching(&gc).is_none() {
            return Err(Error::theory(
                "G[C] has a perfect matching",
                Witness::Vertices {
                    vertices: self.c.as_slice().to_vec(),
                },
            ));
        }
        let cd = self.components.len();
        let predicted = self.c.len() / 2 + (self.d.len() - cd) / 2 + self.a.len();
        if predicted != self.nu {
            return Err(Error::theory(
                "|M| = |C|/2 + (|D| - c(D))/2 + |A|",
                Witness::Count {
                    expected: predicted,
                    actual: self.nu,
                },
            ));
        }
        if self.deficiency() >= 2 && cd < self.a.len() + 2 {
            return Err(Error::theory(
                "c(D) >= |A| + 2 when the deficiency is at least 2",
                Witness::Count {
                    expected: self.a.len() + 2,
                    actual: cd,
                },
            ));
        }
        // Every maximum matching matches A into distinct components of G[D].
        let mut hit = vec![false; cd];
        for a in self.a.iter() {
            let comp = self.witness.mate(a).and_then(|w| self.component_of[w]);
            match comp {
                Some(i) if !hit[i] => hit[i] = true,
                _ => {
                    return Err(Error::theory(
                        "maximum matchings match A into distinct components of G[D]",
                        Witness::Vertices { vertices: vec![a] },
                    ))
                }
            }
        }
        if let Some(k) = g.degree_profile().regular {
            for (i, &e) in self.edges_to_a.iter().enumerate() {
                if e % 2 != k % 2 {
                    return Err(Error::theory(
                        "|[Q_i, A]| has the parity of k",
                        Witness::Parity {
                            component: i,
                            edges_to_a: e,
                            k,
                        },
                    ));
                }
            }
            let total: u64 = self.edges_to_a.iter().map(|&e| u64::from(e)).sum();
            if total > u64::from(k) * self.a.len() as u64 {
                return Err(Error::theory(
                    "|[D, A]| <= k |A|",
                    Witness::Count {
                        expected: k as usize * self.a.len(),
                        actual: total as usize,
                    },
                ));
            }
        }
        Ok(())
    }
}

/// Computes the partition; `v` is in `D` iff `nu(G - v) = nu(G)`. All
/// invariants are re-checked before returning.
pub fn decompose(g: &Multigraph) -> Result<GallaiEdmonds> {
    let n = g.vertex_count();
    let m = maximum_matching(g);
    let nu = m.len();
    let in_d: Vec<bool> = (0..n)
        .map(|v| matching_number_without(g, &m, v) == nu)
        .collect();
    let d = VertexSet::from_mask(&in_d);
    let a: VertexSet = d.neighbourhood(g).iter().filter(|&v| !in_d[v]).collect();
    let in_a = a.to_mask(n);
    let c: VertexSet = (0..n).filter(|&v| !in_d[v] && !in_a[v]).collect();
    let components: Vec<VertexSet> = components_within(g, &in_d)
        .into_iter()
        .map(VertexSet::from)
        .collect();
    let mut component_of = vec![None; n];
    for (i, q) in components.iter().enumerate() {
        for v in q.iter() {
            component_of[v] = Some(i);
        }
    }
    let edges_to_a = components
        .iter()
        .map(|q| {
            q.iter()
                .flat_map(|v| g.adjacency(v).iter())
                .filter(|&&(w, _)| in_a[w])
                .map(|&(_, mult)| mult)
                .sum()
        })
        .collect();
    let ge = GallaiEdmonds {
        d,
        a,
        c,
        components,
        edges_to_a,
        nu,
        component_of,
        witness: m,
    };
    ge.check_invariants(g)?;
    Ok(ge)
}

/// True iff `q - v` has a perfect matching for every vertex `v`.
pub fn certify_factor_critical(q: &Multigraph) -> bool {
    let n = q.vertex_count();
    n % 2 == 1 && (0..n).all(|v| near_perfect_avoiding(q, v).is_ok())
}

/// Vertices of `q` whose neighbours all lie in `q`.
pub fn good_vertices(g: &Multigraph, q: &VertexSet) -> VertexSet {
    q.iter()
        .filter(|&v| g.neighbours(v).all(|w| q.contains(w)))
        .collect()
}

/// `H(A, B)`: A-side vertices keep their identity, each component of `G[D]`
/// becomes one B-side vertex. B is ordered by non-increasing `d_H`, ties by
/// smallest member.
#[derive(Debug, Clone)]
pub struct ContractedBipartite {
    pub graph: BipartiteGraph,
    /// Original ids of the A-side, in increasing order.
    pub a_side: Vec<usize>,
    /// For each B-side vertex, the index of its component in the decomposition.
    pub component_index: Vec<usize>,
    /// For each B-side vertex, the vertices of its component.
    pub components: Vec<VertexSet>,
    /// B-side vertices with `d_H >= k`.
    pub w: Vec<usize>,
    /// B-side vertices with `d_H = 3`; only populated for `k = 5`.
    pub u: Vec<usize>,
    pub k: u32,
}

impl ContractedBipartite {
    pub fn degree_b(&self, b: usize) -> u32 {
        self.graph.degree_b(b)
    }

    pub fn b_count(&self) -> usize {
        self.graph.b_count()
    }

    /// Number of leading B-side vertices with `d_H >= k`; the remaining
    /// ones all have `d_H < k`.
    pub fn threshold(&self) -> usize {
        self.w.len()
    }

    /// Lifts the H-edge `(a, b)` to a G-edge: the lowest-id vertex of the
    /// component adjacent to `a`.
    pub fn lift(&self, g: &Multigraph, a: usize, b: usize) -> usize {
        let a_id = self.a_side[a];
        self.components[b]
            .iter()
            .find(|&v| g.has_edge(v, a_id))
            .expect("H-edge has a G realisation")
    }
}

pub fn contract(g: &Multigraph, ge: &GallaiEdmonds, k: u32) -> Result<ContractedBipartite> {
    match g.degree_profile() {
        p if p.regular == Some(k) => {}
        p => {
            return Err(Error::Contract(format!(
                "contraction expects a {k}-regular graph, got degrees {}..{}",
                p.min, p.max
            )))
        }
    }
    let mut order: Vec<usize> = (0..ge.components.len()).collect();
    order.sort_by_key(|&i| {
        (
            std::cmp::Reverse(ge.edges_to_a[i]),
            ge.components[i].as_slice()[0],
        )
    });
    let mut b_of_component = vec![0; order.len()];
    for (b, &i) in order.iter().enumerate() {
        b_of_component[i] = b;
    }
    let a_side: Vec<usize> = ge.a.iter().collect();
    let mut edges = Vec::new();
    for (ai, &a) in a_side.iter().enumerate() {
        for &(w, mult) in g.adjacency(a) {
            if let Some(i) = ge.component_of(w) {
                edges.push((ai, b_of_component[i], mult));
            }
        }
    }
    let graph = BipartiteGraph::new(a_side.len(), order.len(), edges)?;
    let w: Vec<usize> = (0..order.len())
        .filter(|&b| graph.degree_b(b) >= k)
        .collect();
    let u: Vec<usize> = if k == 5 {
        (0..order.len())
            .filter(|&b| graph.degree_b(b) == 3)
            .collect()
    } else {
        Vec::new()
    };
    if ge.deficiency() >= 2 && w.len() == order.len() {
        return Err(Error::theory(
            "some component has fewer than k edges to A (t < |A|)",
            Witness::Count {
                expected: order.len(),
                actual: w.len(),
            },
        ));
    }
    Ok(ContractedBipartite {
        components: order.iter().map(|&i| ge.components[i].clone()).collect(),
        component_index: order,
        graph,
        a_side,
        w,
        u,
        k,
    })
}
