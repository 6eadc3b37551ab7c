use crate::error::{Error, Result};

/// Bipartite multigraph with sides indexed `0..a_count` and `0..b_count`.
/// Degrees count multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    adj_a: Vec<Vec<(usize, u32)>>,
    adj_b: Vec<Vec<(usize, u32)>>,
}

/// Matching of a [`BipartiteGraph`], stored from both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteMatching {
    pub(crate) mate_a: Vec<Option<usize>>,
    pub(crate) mate_b: Vec<Option<usize>>,
}

impl BipartiteGraph {
    /// Builds the graph from `(a, b, multiplicity)` triples; repeated pairs
    /// are summed.
    pub fn new<I>(a_count: usize, b_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut adj_a: Vec<Vec<(usize, u32)>> = vec![Vec::new(); a_count];
        for (a, b, m) in edges {
            if a >= a_count || b >= b_count {
                return Err(Error::InvalidGraph(format!(
                    "bipartite edge {a}-{b} out of range"
                )));
            }
            if m == 0 {
                return Err(Error::InvalidGraph(format!(
                    "bipartite edge {a}-{b} has multiplicity 0"
                )));
            }
            adj_a[a].push((b, m));
        }
        let mut adj_b: Vec<Vec<(usize, u32)>> = vec![Vec::new(); b_count];
        for (a, list) in adj_a.iter_mut().enumerate() {
            list.sort_unstable();
            let mut merged: Vec<(usize, u32)> = Vec::with_capacity(list.len());
            for &(b, m) in list.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == b => last.1 += m,
                    _ => merged.push((b, m)),
                }
            }
            for &(b, m) in &merged {
                adj_b[b].push((a, m));
            }
            *list = merged;
        }
        Ok(BipartiteGraph { adj_a, adj_b })
    }

    pub fn a_count(&self) -> usize {
        self.adj_a.len()
    }

    pub fn b_count(&self) -> usize {
        self.adj_b.len()
    }

    pub fn adjacency_a(&self, a: usize) -> &[(usize, u32)] {
        &self.adj_a[a]
    }

    pub fn adjacency_b(&self, b: usize) -> &[(usize, u32)] {
        &self.adj_b[b]
    }

    pub fn neighbours_a(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj_a[a].iter().map(|&(b, _)| b)
    }

    pub fn neighbours_b(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj_b[b].iter().map(|&(a, _)| a)
    }

    pub fn degree_a(&self, a: usize) -> u32 {
        self.adj_a[a].iter().map(|&(_, m)| m).sum()
    }

    pub fn degree_b(&self, b: usize) -> u32 {
        self.adj_b[b].iter().map(|&(_, m)| m).sum()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.a_count() && self.adj_a[a].binary_search_by_key(&b, |&(x, _)| x).is_ok()
    }

    pub fn max_degree_a(&self) -> u32 {
        (0..self.a_count())
            .map(|a| self.degree_a(a))
            .max()
            .unwrap_or(0)
    }

    /// Edges as `(a, b, multiplicity)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        self.adj_a
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().map(move |&(b, m)| (a, b, m)))
            .collect()
    }

    /// Kuhn's augmenting-path algorithm from the A side.
    pub fn maximum_matching(&self) -> BipartiteMatching {
        let mut m = BipartiteMatching::empty(self.a_count(), self.b_count());
        self.augment_to_maximum(&mut m);
        m
    }

    /// Augments `m` until it is maximum. Covered vertices stay covered.
    pub fn augment_to_maximum(&self, m: &mut BipartiteMatching) {
        loop {
            let mut improved = false;
            for a in 0..self.a_count() {
                if m.mate_a[a].is_none() {
                    let mut seen = vec![false; self.b_count()];
                    if self.try_kuhn_from_a(a, m, &mut seen) {
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        debug_assert!(self.is_maximum(m));
    }

    fn try_kuhn_from_a(&self, a: usize, m: &mut BipartiteMatching, seen: &mut [bool]) -> bool {
        for &(b, _) in &self.adj_a[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            let free = match m.mate_b[b] {
                None => true,
                Some(a2) => self.try_kuhn_from_a(a2, m, seen),
            };
            if free {
                m.mate_a[a] = Some(b);
                m.mate_b[b] = Some(a);
                return true;
            }
        }
        false
    }

    /// Tries to cover B-vertex `b` by an alternating path from the B side,
    /// restricted to B-vertices with `allowed[b]`. Used for Hall-type
    /// saturation of a subset of B.
    pub(crate) fn try_kuhn_from_b(
        &self,
        b: usize,
        m: &mut BipartiteMatching,
        seen: &mut [bool],
        allowed: &[bool],
    ) -> bool {
        for &(a, _) in &self.adj_b[b] {
            if seen[a] {
                continue;
            }
            seen[a] = true;
            let free = match m.mate_a[a] {
                None => true,
                Some(b2) => allowed[b2] && self.try_kuhn_from_b(b2, m, seen, allowed),
            };
            if free {
                m.mate_b[b] = Some(a);
                m.mate_a[a] = Some(b);
                return true;
            }
        }
        false
    }

    /// Berge check by alternating BFS from every exposed A-vertex.
    pub fn is_maximum(&self, m: &BipartiteMatching) -> bool {
        let mut seen_b = vec![false; self.b_count()];
        let mut queue: Vec<usize> = (0..self.a_count())
            .filter(|&a| m.mate_a[a].is_none())
            .collect();
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for &(b, _) in &self.adj_a[a] {
                if seen_b[b] {
                    continue;
                }
                seen_b[b] = true;
                match m.mate_b[b] {
                    None => return false,
                    Some(a2) => queue.push(a2),
                }
            }
        }
        true
    }

    pub fn is_matching(&self, m: &BipartiteMatching) -> bool {
        m.mate_a.len() == self.a_count()
            && m.mate_b.len() == self.b_count()
            && m.mate_a.iter().enumerate().all(|(a, mb)| match *mb {
                None => true,
                Some(b) => m.mate_b[b] == Some(a) && self.has_edge(a, b),
            })
            && m.mate_b
                .iter()
                .enumerate()
                .all(|(b, ma)| ma.is_none_or(|a| m.mate_a[a] == Some(b)))
    }
}

impl BipartiteMatching {
    pub fn empty(a_count: usize, b_count: usize) -> Self {
        BipartiteMatching {
            mate_a: vec![None; a_count],
            mate_b: vec![None; b_count],
        }
    }

    pub fn from_pairs(a_count: usize, b_count: usize, pairs: &[(usize, usize)]) -> Self {
        let mut m = Self::empty(a_count, b_count);
        for &(a, b) in pairs {
            assert!(m.mate_a[a].is_none() && m.mate_b[b].is_none());
            m.mate_a[a] = Some(b);
            m.mate_b[b] = Some(a);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.mate_a.iter().filter(|x| x.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate_of_a(&self, a: usize) -> Option<usize> {
        self.mate_a[a]
    }

    pub fn mate_of_b(&self, b: usize) -> Option<usize> {
        self.mate_b[b]
    }

    /// `(a, b)` pairs sorted by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate_a
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| (a, b)))
            .collect()
    }
}
