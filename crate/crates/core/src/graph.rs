//! Loopless multigraphs with dense integer vertex ids.
//!
//! Parallel edges are stored as a multiplicity on a single record per
//! unordered pair. Degrees count multiplicities; neighbourhoods are sets of
//! distinct vertices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// One edge record `{u, v}` with `u < v` and its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<EdgeRecord>,
    // neighbour, multiplicity; sorted by neighbour
    adjacency: Vec<Vec<(usize, u32)>>,
}

/// Minimum and maximum degree, plus the common degree when they agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: u32,
    pub max: u32,
    pub regular: Option<u32>,
}

impl Multigraph {
    /// Builds a graph from `(u, v, multiplicity)` triples. Records for the
    /// same unordered pair are merged by summing their multiplicities.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut merged: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "loop at vertex {u}; graphs must be loopless"
                )));
            }
            if m == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has multiplicity 0"
                )));
            }
            let key = (u.min(v), u.max(v));
            let slot = merged.entry(key).or_insert(0);
            *slot = slot
                .checked_add(m)
                .ok_or_else(|| Error::InvalidGraph(format!("multiplicity overflow on {u}-{v}")))?;
        }
        let edges: Vec<EdgeRecord> = merged
            .into_iter()
            .map(|((u, v), multiplicity)| EdgeRecord { u, v, multiplicity })
            .collect();
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push((e.v, e.multiplicity));
            adjacency[e.v].push((e.u, e.multiplicity));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Multigraph {
            n,
            edges,
            adjacency,
        })
    }

    /// Simple graph from a list of pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(u, v)| (u, v, 1)))
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edge records sorted by `(u, v)`.
    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    /// Total number of edges counting multiplicity.
    pub fn edge_total(&self) -> u64 {
        self.edges.iter().map(|e| u64::from(e.multiplicity)).sum()
    }

    /// `(neighbour, multiplicity)` pairs, sorted by neighbour.
    pub fn adjacency(&self, v: usize) -> &[(usize, u32)] {
        &self.adjacency[v]
    }

    /// Distinct neighbours of `v` in increasing order.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adjacency[v].iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        match self.adjacency[u].binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.adjacency[u][i].1,
            Err(_) => 0,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.multiplicity(u, v) > 0
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.multiplicity == 1)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        if self.n == 0 {
            return DegreeProfile {
                min: 0,
                max: 0,
                regular: Some(0),
            };
        }
        let mut min = u32::MAX;
        let mut max = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            min = min.min(d);
            max = max.max(d);
        }
        DegreeProfile {
            min,
            max,
            regular: (min == max).then_some(min),
        }
    }

    /// Underlying simple graph as sorted neighbour lists.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.adjacency
            .iter()
            .map(|list| list.iter().map(|&(w, _)| w).collect())
            .collect()
    }

    /// Same vertex set, every multiplicity collapsed to 1.
    pub fn simple_support(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    multiplicity: 1,
                    ..*e
                })
                .collect(),
            adjacency: self
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&(w, _)| (w, 1)).collect())
                .collect(),
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the order
    /// given. Returns the subgraph and the map from new id to old id.
    pub fn induced(&self, vertices: &[usize]) -> (Multigraph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let (a, b) = (local[e.u], local[e.v]);
            if a != usize::MAX && b != usize::MAX {
                edges.push((a, b, e.multiplicity));
            }
        }
        let g = Multigraph::new(vertices.len(), edges).expect("induced subgraph of a valid graph");
        (g, vertices.to_vec())
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_within(self, &vec![true; self.n])
    }
}

/// Components of the subgraph induced by the vertices with `mask[v]`.
pub(crate) fn components_within(g: &Multigraph, mask: &[bool]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !mask[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for w in g.neighbours(v) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    /// `N(X)`: every vertex adjacent to a member, members included when
    /// adjacent to another member.
    pub fn neighbourhood(&self, g: &Multigraph) -> VertexSet {
        self.0.iter().flat_map(|&v| g.neighbours(v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_parallel_records() {
        let g = Multigraph::new(2, [(0, 1, 2), (1, 0, 2)]).unwrap();
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.multiplicity(0, 1), 4);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.neighbours(0).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn rejects_loops_and_zero() {
        assert!(matches!(
            Multigraph::new(2, [(0, 0, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Multigraph::new(2, [(0, 1, 0)]).is_err());
        assert!(Multigraph::new(2, [(0, 2, 1)]).is_err());
    }

    #[test]
    fn degree_profiles() {
        let k2 = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(
            k2.degree_profile(),
            DegreeProfile {
                min: 1,
                max: 1,
                regular: Some(1)
            }
        );
        let dtri = Multigraph::new(3, [(0, 1, 2), (0, 2, 2), (1, 2, 2)]).unwrap();
        assert_eq!(dtri.degree_profile().regular, Some(4));
        let p3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            p3.degree_profile(),
            DegreeProfile {
                min: 1,
                max: 2,
                regular: None
            }
        );
    }

    #[test]
    fn induced_and_components() {
        let g = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        let (h, map) = g.induced(&[1, 2, 4]);
        assert_eq!(h.edges().len(), 1);
        assert_eq!(map, vec![1, 2, 4]);
    }

    #[test]
    fn vertex_set_dedups() {
        let s: VertexSet = vec![3, 1, 3, 2].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(s.contains(2));
    }
}
