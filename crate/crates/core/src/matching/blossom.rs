//! Edmonds' blossom search, O(V^3) per maximum matching.
//!
//! Operates on sorted simple adjacency lists. Roots are tried in increasing
//! id order so results are deterministic.

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], mate: &[Option<usize>]) -> Self {
        let n = adj.len();
        Search {
            adj,
            mate: mate.iter().map(|m| m.unwrap_or(NONE)).collect(),
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Exposed endpoint of an augmenting path from `root`, if any. The path
    /// itself is recorded in `parent`/`mate`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn into_mates(self) -> Vec<Option<usize>> {
        self.mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect()
    }
}

pub(super) fn maximise(adj: &[Vec<usize>], initial: Vec<Option<usize>>) -> Vec<Option<usize>> {
    let mut search = Search::new(adj, &initial);
    for root in 0..adj.len() {
        if search.mate[root] != NONE {
            continue;
        }
        // A root with no augmenting path now never gains one later.
        if let Some(end) = search.find_path(root) {
            #[cfg(debug_assertions)]
            let before: Vec<bool> = search.mate.iter().map(|&m| m != NONE).collect();
            search.augment(end);
            #[cfg(debug_assertions)]
            {
                let gained = search
                    .mate
                    .iter()
                    .zip(&before)
                    .filter(|(&m, &was)| m != NONE && !was)
                    .count();
                assert_eq!(
                    gained, 2,
                    "augmentation must cover exactly two new vertices"
                );
                assert!(
                    before
                        .iter()
                        .zip(&search.mate)
                        .all(|(&was, &m)| !was || m != NONE),
                    "augmentation unsaturated a vertex"
                );
            }
        }
    }
    search.into_mates()
}

/// Whether an augmenting path starts at the exposed vertex `root`.
pub(super) fn has_augmenting_path_from(
    adj: &[Vec<usize>],
    mate: &[Option<usize>],
    root: usize,
) -> bool {
    debug_assert!(mate[root].is_none());
    Search::new(adj, mate).find_path(root).is_some()
}

pub(super) fn has_augmenting_path(adj: &[Vec<usize>], mate: &[Option<usize>]) -> bool {
    let mut search = Search::new(adj, mate);
    (0..adj.len()).any(|root| mate[root].is_none() && search.find_path(root).is_some())
}
