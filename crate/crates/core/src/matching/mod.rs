//! Matchings: the [`Matching`] value type, maximum matching in general
//! graphs (blossom search), bipartite matching, Berge certification and
//! (near-)perfect matchings.
//!
//! All searches run on the simple support of the multigraph. Parallel edges
//! never matter to a matching.

mod bipartite;
mod blossom;

pub use bipartite::{BipartiteGraph, BipartiteMatching};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// Pairwise vertex-disjoint edges of some host graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    /// Validates that `pairs` are disjoint edges of `g`.
    pub fn from_pairs(g: &Multigraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = g.vertex_count();
        let mut m = Matching::empty(n);
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::Contract(format!("pair {u}-{v} out of range")));
            }
            if !g.has_edge(u, v) {
                return Err(Error::Contract(format!(
                    "{u}-{v} is not an edge of the graph"
                )));
            }
            if m.mate[u].is_some() || m.mate[v].is_some() {
                return Err(Error::Contract(format!(
                    "pair {u}-{v} shares a vertex with another pair"
                )));
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        Ok(m)
    }

    pub(crate) fn from_mates(mate: Vec<Option<usize>>) -> Self {
        debug_assert!(mate
            .iter()
            .enumerate()
            .all(|(v, m)| m.is_none_or(|w| mate[w] == Some(v))));
        Matching { mate }
    }

    /// Adds the pair `{u, v}`; both endpoints must be free.
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        assert!(
            self.mate[u].is_none() && self.mate[v].is_none(),
            "inserting {u}-{v} into a matching that already covers an endpoint"
        );
        self.mate[u] = Some(v);
        self.mate[v] = Some(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.mate.iter().all(Option::is_none)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn unsaturated(&self) -> VertexSet {
        (0..self.mate.len())
            .filter(|&v| self.mate[v].is_none())
            .collect()
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Checks the matching against a host graph.
    pub fn check_against(&self, g: &Multigraph) -> Result<()> {
        if self.mate.len() != g.vertex_count() {
            return Err(Error::Contract(format!(
                "matching over {} vertices used with a graph on {}",
                self.mate.len(),
                g.vertex_count()
            )));
        }
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if self.mate[v] != Some(u) {
                    return Err(Error::Contract(format!("mate table inconsistent at {u}")));
                }
                if !g.has_edge(u, v) {
                    return Err(Error::Contract(format!("{u}-{v} is not an edge")));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

/// A maximum matching of `g`, found by blossom augmentation started from the
/// lowest-id exposed vertex.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    maximum_matching_from(g, Matching::empty(g.vertex_count()))
}

/// Grows `initial` to a maximum matching. Augmentation never unsaturates a
/// vertex, so everything `initial` covers stays covered.
pub fn maximum_matching_from(g: &Multigraph, initial: Matching) -> Matching {
    debug_assert!(initial.check_against(g).is_ok());
    let support = g.support();
    Matching::from_mates(blossom::maximise(&support, initial.mate))
}

/// Matching number of `g`.
pub fn matching_number(g: &Multigraph) -> usize {
    maximum_matching(g).len()
}

/// Berge certificate: true iff no `m`-augmenting path exists.
pub fn is_maximum(g: &Multigraph, m: &Matching) -> Result<bool> {
    m.check_against(g)?;
    Ok(!blossom::has_augmenting_path(&g.support(), &m.mate))
}

/// Matching number of `g - v`, given a maximum matching `m` of `g`.
///
/// Only `v`'s former partner can start an augmenting path after `v` is
/// deleted, so a single blossom search decides the answer.
pub fn matching_number_without(g: &Multigraph, m: &Matching, v: usize) -> usize {
    let Some(u) = m.mate(v) else {
        return m.len();
    };
    let mut support = g.support();
    for list in &mut support {
        list.retain(|&w| w != v);
    }
    support[v].clear();
    let mut mate = m.mate.clone();
    mate[u] = None;
    mate[v] = None;
    if blossom::has_augmenting_path_from(&support, &mate, u) {
        m.len()
    } else {
        m.len() - 1
    }
}

/// Maximum matching of a bipartite graph whose sides are `left` and its
/// complement. Fails if some edge stays inside one side.
pub fn bipartite_max_matching(g: &Multigraph, left: &VertexSet) -> Result<Matching> {
    let n = g.vertex_count();
    let in_left = left.to_mask(n);
    let mut a_index = vec![usize::MAX; n];
    let mut b_index = vec![usize::MAX; n];
    let (mut a_ids, mut b_ids) = (Vec::new(), Vec::new());
    for v in 0..n {
        if in_left[v] {
            a_index[v] = a_ids.len();
            a_ids.push(v);
        } else {
            b_index[v] = b_ids.len();
            b_ids.push(v);
        }
    }
    let mut edges = Vec::new();
    for e in g.edges() {
        match (in_left[e.u], in_left[e.v]) {
            (true, false) => edges.push((a_index[e.u], b_index[e.v], e.multiplicity)),
            (false, true) => edges.push((a_index[e.v], b_index[e.u], e.multiplicity)),
            _ => return Err(Error::NotBipartite(e.u, e.v)),
        }
    }
    let h = BipartiteGraph::new(a_ids.len(), b_ids.len(), edges)?;
    let bm = h.maximum_matching();
    let mut m = Matching::empty(n);
    for (a, b) in bm.pairs() {
        m.insert(a_ids[a], b_ids[b]);
    }
    Ok(m)
}

/// A perfect matching of `g`, or `None` when none exists.
pub fn perfect_matching(g: &Multigraph) -> Option<Matching> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return None;
    }
    let m = maximum_matching(g);
    (2 * m.len() == n).then_some(m)
}

/// Perfect matching of `q - v`, i.e. a near-perfect matching of `q` that
/// misses exactly `v`.
pub fn near_perfect_avoiding(q: &Multigraph, v: usize) -> Result<Matching> {
    let n = q.vertex_count();
    if v >= n {
        return Err(Error::Contract(format!(
            "vertex {v} not in a graph on {n} vertices"
        )));
    }
    let mut support = q.support();
    for list in &mut support {
        list.retain(|&w| w != v);
    }
    support[v].clear();
    let mate = blossom::maximise(&support, vec![None; n]);
    let m = Matching::from_mates(mate);
    if 2 * m.len() + 1 == n {
        Ok(m)
    } else {
        Err(Error::NotFactorCritical { vertex: v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn small_maximum_matchings() {
        let k2 = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(maximum_matching(&k2).len(), 1);
        let c5 = cycle(5);
        let m = maximum_matching(&c5);
        assert_eq!(m.len(), 2);
        assert_eq!(m.unsaturated().len(), 1);
        assert_eq!(maximum_matching(&fixture("petersen").unwrap()).len(), 5);
        assert_eq!(maximum_matching(&Multigraph::empty(0)).len(), 0);
    }

    #[test]
    fn berge_check() {
        let c5 = cycle(5);
        let one = Matching::from_pairs(&c5, &[(0, 1)]).unwrap();
        assert!(!is_maximum(&c5, &one).unwrap());
        let two = Matching::from_pairs(&c5, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_maximum(&c5, &two).unwrap());
        let qt4 = fixture("qt4").unwrap();
        assert!(is_maximum(&qt4, &maximum_matching(&qt4)).unwrap());
    }

    #[test]
    fn from_pairs_rejects_non_matchings() {
        let c5 = cycle(5);
        assert!(Matching::from_pairs(&c5, &[(0, 2)]).is_err());
        assert!(Matching::from_pairs(&c5, &[(0, 1), (1, 2)]).is_err());
        let bogus = Matching::from_mates(vec![Some(2), None, Some(0), None, None]);
        assert!(matches!(is_maximum(&c5, &bogus), Err(Error::Contract(_))));
    }

    #[test]
    fn bipartite_examples() {
        let star = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let m = bipartite_max_matching(&star, &VertexSet::from(vec![0])).unwrap();
        assert_eq!(m.len(), 1);
        let c4 = cycle(4);
        assert_eq!(
            bipartite_max_matching(&c4, &VertexSet::from(vec![0, 2]))
                .unwrap()
                .len(),
            2
        );
        assert!(matches!(
            bipartite_max_matching(&c4, &VertexSet::from(vec![0, 1])),
            Err(Error::NotBipartite(_, _))
        ));
    }

    #[test]
    fn perfect_and_near_perfect() {
        let k2 = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(perfect_matching(&k2).unwrap().pairs(), vec![(0, 1)]);
        assert!(perfect_matching(&cycle(3)).is_none());
        let c3 = cycle(3);
        for v in 0..3 {
            let m = near_perfect_avoiding(&c3, v).unwrap();
            assert_eq!(m.len(), 1);
            assert!(!m.is_saturated(v));
        }
        let dtri = fixture("dtri").unwrap();
        assert_eq!(
            near_perfect_avoiding(&dtri, 0).unwrap().pairs(),
            vec![(1, 2)]
        );
        let p3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            near_perfect_avoiding(&p3, 1),
            Err(Error::NotFactorCritical { vertex: 1 })
        ));
    }

    #[test]
    fn near_perfect_on_k5_gadget() {
        // K5 plus doubled {0,1} and {2,3}: vertex 4 has degree 4.
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v, 1));
            }
        }
        edges.push((0, 1, 1));
        edges.push((2, 3, 1));
        let q = Multigraph::new(5, edges).unwrap();
        assert_eq!(q.degree(4), 4);
        let m = near_perfect_avoiding(&q, 4).unwrap();
        assert_eq!(m.len(), 2);
        assert!(!m.is_saturated(4));
    }

    #[test]
    fn warm_start_keeps_saturation() {
        let c6 = cycle(6);
        let start = Matching::from_pairs(&c6, &[(1, 2)]).unwrap();
        let m = maximum_matching_from(&c6, start);
        assert_eq!(m.len(), 3);
        assert!(m.is_saturated(1) && m.is_saturated(2));
    }
}
