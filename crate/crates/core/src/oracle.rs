//! Brute-force ground truth for small graphs.
//!
//! Nothing here touches the blossom search or the constructions: maximum
//! matchings are found by exhaustive enumeration and the "no two
//! unsaturated vertices share a neighbour" test is re-implemented on plain
//! adjacency lists.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matching::Matching;

/// Default cap on the number of distinct adjacent pairs.
pub const DEFAULT_MAX_SUPPORT_EDGES: usize = 24;

#[derive(Debug, Clone, Serialize)]
pub struct OracleVerdict {
    pub nu: usize,
    pub maximum_matching_count: usize,
    pub good_exists: bool,
    /// The first good maximum matching in enumeration order.
    pub witness: Option<Matching>,
}

fn support_edge_count(g: &Multigraph) -> usize {
    g.edges().len()
}

fn check_budget(g: &Multigraph, max_support_edges: usize) -> Result<()> {
    let e = support_edge_count(g);
    if e > max_support_edges {
        return Err(Error::Budget(format!(
            "{e} adjacent pairs exceed the oracle limit of {max_support_edges}"
        )));
    }
    Ok(())
}

struct Enumerator<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<Option<usize>>,
    best: usize,
    found: Vec<Vec<Option<usize>>>,
}

impl Enumerator<'_> {
    /// Decides vertices in increasing order: each undecided vertex is either
    /// left unmatched or matched to a later free neighbour. Every matching
    /// arises from exactly one decision sequence.
    fn run(&mut self, v: usize, size: usize) {
        let n = self.adj.len();
        let mut v = v;
        while v < n && self.mate[v].is_some() {
            v += 1;
        }
        if v == n {
            if size > self.best {
                self.best = size;
                self.found.clear();
            }
            if size == self.best {
                self.found.push(self.mate.clone());
            }
            return;
        }
        let undecided = (v..n).filter(|&w| self.mate[w].is_none()).count();
        if size + undecided / 2 < self.best {
            return;
        }
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if w > v && self.mate[w].is_none() {
                self.mate[v] = Some(w);
                self.mate[w] = Some(v);
                self.run(v + 1, size + 1);
                self.mate[v] = None;
                self.mate[w] = None;
            }
        }
        self.run(v + 1, size);
    }
}

/// All maximum matchings of `g` in a fixed order, within the default budget.
pub fn enumerate_maximum_matchings(g: &Multigraph) -> Result<Vec<Matching>> {
    enumerate_maximum_matchings_within(g, DEFAULT_MAX_SUPPORT_EDGES)
}

pub fn enumerate_maximum_matchings_within(
    g: &Multigraph,
    max_support_edges: usize,
) -> Result<Vec<Matching>> {
    check_budget(g, max_support_edges)?;
    let adj = g.support();
    let mut e = Enumerator {
        adj: &adj,
        mate: vec![None; adj.len()],
        best: 0,
        found: Vec::new(),
    };
    e.run(0, 0);
    Ok(e.found.into_iter().map(Matching::from_mates).collect())
}

/// Whether the unsaturated vertices of `mate` pairwise have disjoint
/// neighbourhoods.
fn unsaturated_spread(adj: &[Vec<usize>], mate: &Matching) -> bool {
    let free: Vec<usize> = (0..adj.len()).filter(|&v| mate.mate(v).is_none()).collect();
    for (i, &u) in free.iter().enumerate() {
        for &v in &free[i + 1..] {
            if adj[u].iter().any(|w| adj[v].contains(w)) {
                return false;
            }
        }
    }
    true
}

/// Decides whether `g` has a maximum matching whose unsaturated vertices
/// pairwise share no neighbour, within the default budget.
pub fn exists_good_maximum_matching(g: &Multigraph) -> Result<OracleVerdict> {
    exists_good_maximum_matching_within(g, DEFAULT_MAX_SUPPORT_EDGES)
}

pub fn exists_good_maximum_matching_within(
    g: &Multigraph,
    max_support_edges: usize,
) -> Result<OracleVerdict> {
    let all = enumerate_maximum_matchings_within(g, max_support_edges)?;
    let adj = g.support();
    let nu = all.first().map_or(0, Matching::len);
    let witness = all.iter().find(|m| unsaturated_spread(&adj, m)).cloned();
    Ok(OracleVerdict {
        nu,
        maximum_matching_count: all.len(),
        good_exists: witness.is_some(),
        witness,
    })
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
    fn small_counts() {
        assert_eq!(enumerate_maximum_matchings(&cycle(3)).unwrap().len(), 3);
        assert_eq!(enumerate_maximum_matchings(&cycle(5)).unwrap().len(), 5);
        let k2 = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_maximum_matchings(&k2).unwrap().len(), 1);
        assert!(enumerate_maximum_matchings(&cycle(5))
            .unwrap()
            .iter()
            .all(|m| m.len() == 2));
    }

    #[test]
    fn empty_graph_has_one_empty_matching() {
        let all = enumerate_maximum_matchings(&Multigraph::empty(3)).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn verdicts() {
        let v = exists_good_maximum_matching(&cycle(5)).unwrap();
        assert!(v.good_exists && v.nu == 2);
        let v = exists_good_maximum_matching(&fixture("dtri").unwrap()).unwrap();
        assert!(v.good_exists && v.nu == 1);
        let v = exists_good_maximum_matching(&fixture("qt4").unwrap()).unwrap();
        assert!(v.good_exists && v.nu == 6);
    }

    #[test]
    fn star_has_no_good_matching() {
        let star = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let v = exists_good_maximum_matching(&star).unwrap();
        assert_eq!(v.nu, 1);
        assert_eq!(v.maximum_matching_count, 3);
        assert!(!v.good_exists && v.witness.is_none());
    }

    #[test]
    fn budget_guard() {
        let mut pairs = Vec::new();
        for u in 0..8 {
            for v in u + 1..8 {
                pairs.push((u, v));
            }
        }
        let k8 = Multigraph::from_pairs(8, &pairs).unwrap();
        assert!(matches!(
            enumerate_maximum_matchings(&k8),
            Err(Error::Budget(_))
        ));
        assert_eq!(
            enumerate_maximum_matchings_within(&k8, 28).unwrap().len(),
            105
        );
    }
}
