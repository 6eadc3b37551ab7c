//! Exhaustive generation of small `k`-regular (multi)graphs, one per
//! isomorphism class.
//!
//! The multiplicity matrix is filled row by row. When filling row `i`,
//! later vertices whose columns agree on rows `0..i` are interchangeable,
//! so their row-`i` entries are forced to be non-increasing. After each row
//! the residual degrees of the later vertices must be realisable among
//! themselves. Survivors are reduced to a canonical labelling, which
//! removes the remaining isomorphic copies exactly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest order accepted by [`regular_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

const MAX_LABELLED: usize = 20_000_000;

struct Search {
    n: usize,
    simple: bool,
    m: Vec<Vec<u32>>,
    residual: Vec<u32>,
    labelled: usize,
    out: BTreeMap<Vec<u32>, Multigraph>,
}

impl Search {
    fn row(&mut self, i: usize) -> Result<()> {
        if i + 1 >= self.n {
            if self.residual.iter().all(|&r| r == 0) {
                self.emit()?;
            }
            return Ok(());
        }
        // For each later column, the previous later column with the same
        // history over rows 0..i, if any.
        let prev_same: Vec<Option<usize>> = (0..self.n)
            .map(|j| {
                (i + 1..j)
                    .rev()
                    .find(|&jp| j > i && (0..i).all(|r| self.m[r][j] == self.m[r][jp]))
            })
            .collect();
        let need = self.residual[i];
        self.fill(i, i + 1, need, &prev_same)
    }

    fn fill(
        &mut self,
        i: usize,
        j: usize,
        remaining: u32,
        prev_same: &[Option<usize>],
    ) -> Result<()> {
        if j == self.n {
            if remaining == 0 && self.realisable(i + 1) {
                let own = std::mem::take(&mut self.residual[i]);
                let outcome = self.row(i + 1);
                self.residual[i] = own;
                outcome?;
            }
            return Ok(());
        }
        let cap = |s: &Search, c: usize| {
            if s.simple {
                s.residual[c].min(1)
            } else {
                s.residual[c]
            }
        };
        let later: u32 = (j + 1..self.n).map(|c| cap(self, c)).sum();
        let mut hi = remaining.min(cap(self, j));
        if let Some(p) = prev_same[j] {
            hi = hi.min(self.m[i][p]);
        }
        let lo = remaining.saturating_sub(later);
        for value in (lo..=hi).rev() {
            self.m[i][j] = value;
            self.m[j][i] = value;
            self.residual[j] -= value;
            self.fill(i, j + 1, remaining - value, prev_same)?;
            self.residual[j] += value;
        }
        self.m[i][j] = 0;
        self.m[j][i] = 0;
        Ok(())
    }

    /// Whether the residual degrees of vertices `from..n` can be realised by
    /// a graph on those vertices alone.
    fn realisable(&self, from: usize) -> bool {
        let mut seq: Vec<u32> = self.residual[from..].to_vec();
        let sum: u64 = seq.iter().map(|&d| u64::from(d)).sum();
        if sum % 2 == 1 {
            return false;
        }
        if !self.simple {
            let max = seq.iter().copied().max().unwrap_or(0);
            return 2 * u64::from(max) <= sum;
        }
        // Erdős–Gallai.
        seq.sort_unstable_by(|a, b| b.cmp(a));
        let len = seq.len() as u64;
        let mut prefix = 0u64;
        for (idx, &d) in seq.iter().enumerate() {
            let r = idx as u64 + 1;
            prefix += u64::from(d);
            let tail: u64 = seq[idx + 1..].iter().map(|&x| u64::from(x).min(r)).sum();
            if prefix > r * (r - 1) + tail {
                return false;
            }
            if r == len {
                break;
            }
        }
        true
    }

    fn emit(&mut self) -> Result<()> {
        self.labelled += 1;
        if self.labelled > MAX_LABELLED {
            return Err(Error::Budget(format!(
                "more than {MAX_LABELLED} labelled candidates"
            )));
        }
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.m[u][v] > 0 {
                    edges.push((u, v, self.m[u][v]));
                }
            }
        }
        let g = Multigraph::new(self.n, edges)?;
        let (code, perm) = canonical_form(&g);
        self.out.entry(code).or_insert_with(|| relabel(&g, &perm));
        Ok(())
    }
}

/// Every `k`-regular graph on `n` vertices up to isomorphism (simple graphs
/// only when `simple`), in increasing order of canonical code. Graphs are
/// returned in their canonical labelling.
pub fn regular_graphs(n: usize, k: u32, simple: bool) -> Result<Vec<Multigraph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Budget(format!(
            "exhaustive enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    if (n as u64 * u64::from(k)) % 2 == 1
        || (simple && k as usize >= n.max(1) && k > 0)
        || (n == 1 && k > 0)
    {
        return Ok(Vec::new());
    }
    let mut s = Search {
        n,
        simple,
        m: vec![vec![0; n]; n],
        residual: vec![k; n],
        labelled: 0,
        out: BTreeMap::new(),
    };
    if n == 0 {
        return Ok(vec![Multigraph::empty(0)]);
    }
    s.row(0)?;
    Ok(s.out.into_values().collect())
}

/// Renames vertex `perm[i]` of `g` to `i`.
fn relabel(g: &Multigraph, perm: &[usize]) -> Multigraph {
    let mut position = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        position[v] = i;
    }
    Multigraph::new(
        g.vertex_count(),
        g.edges()
            .iter()
            .map(|e| (position[e.u], position[e.v], e.multiplicity)),
    )
    .expect("relabelling preserves validity")
}

fn code_for(g: &Multigraph, perm: &[usize]) -> Vec<u32> {
    let n = perm.len();
    let mut code = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            code.push(g.multiplicity(perm[i], perm[j]));
        }
    }
    code
}

/// Splits cells until every vertex in a cell sees each cell with the same
/// total multiplicity and the same number of neighbours.
fn refine(g: &Multigraph, cells: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut changed = true;
    while changed {
        changed = false;
        let mut cell_of = vec![0; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        for splitter in 0..cells.len() {
            let key = |v: usize| {
                g.adjacency(v)
                    .iter()
                    .filter(|&&(w, _)| cell_of[w] == splitter)
                    .fold((0u32, 0u32), |(s, c), &(_, m)| (s + m, c + 1))
            };
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<((u32, u32), usize)> =
                    cell.iter().map(|&v| (key(v), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for idx in 1..=keyed.len() {
                    if idx == keyed.len() || keyed[idx].0 != keyed[start].0 {
                        next.push(keyed[start..idx].iter().map(|&(_, v)| v).collect());
                        start = idx;
                    }
                }
            }
            if next.len() != cells.len() {
                *cells = next;
                changed = true;
                break;
            }
        }
    }
}

/// Lexicographically largest adjacency code over all leaves of the
/// individualisation-refinement tree, with the labelling achieving it.
pub fn canonical_form(g: &Multigraph) -> (Vec<u32>, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    explore(g, cells, &mut best);
    best.expect("the search tree has a leaf")
}

fn explore(g: &Multigraph, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_for(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        explore(g, next, best);
    }
}
