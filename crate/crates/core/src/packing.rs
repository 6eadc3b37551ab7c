//! Bipartite subroutines on `H(A, B)`:
//!
//! * [`saturate_w`]: a maximum matching covering a prescribed set `W` of
//!   B-vertices whose degrees dominate the A-side.
//! * [`p2p3_packing`]: a `{P2, P3}`-packing covering `A` and `W` with every
//!   B-vertex used at most once, when `Delta(A) <= 2 delta(W)`.
//! * [`refined_packing`]: additionally covers `U` and never places two
//!   W-vertices in one component.
//! * [`split_packing`]: splits such a packing into two matchings.
//!
//! Packings here have B-side degree at most one, so every component is a
//! star centred on an A-vertex with one or two B-leaves.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result, Witness};
use crate::matching::{BipartiteGraph, BipartiteMatching};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Packing {
    leaves: Vec<Vec<usize>>,
    center: Vec<Option<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum PackingComponent {
    P2 { a: usize, b: usize },
    P3 { b1: usize, a: usize, b2: usize },
}

impl PackingComponent {
    pub fn center(&self) -> usize {
        match *self {
            PackingComponent::P2 { a, .. } | PackingComponent::P3 { a, .. } => a,
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        match *self {
            PackingComponent::P2 { b, .. } => vec![b],
            PackingComponent::P3 { b1, b2, .. } => vec![b1, b2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    A(usize),
    B(usize),
}

impl Packing {
    pub fn empty(a_count: usize, b_count: usize) -> Self {
        Packing {
            leaves: vec![Vec::new(); a_count],
            center: vec![None; b_count],
        }
    }

    pub fn from_matching(m: &BipartiteMatching) -> Self {
        let mut p = Packing::empty(m.mate_a.len(), m.mate_b.len());
        for (a, b) in m.pairs() {
            p.attach(a, b);
        }
        p
    }

    /// Builds a packing from explicit components, checking disjointness.
    pub fn from_components(
        a_count: usize,
        b_count: usize,
        components: &[PackingComponent],
    ) -> Result<Self> {
        let mut p = Packing::empty(a_count, b_count);
        for c in components {
            let a = c.center();
            if a >= a_count || !p.leaves[a].is_empty() {
                return Err(Error::Contract(format!(
                    "centre {a} reused or out of range"
                )));
            }
            for b in c.leaves() {
                if b >= b_count || p.center[b].is_some() {
                    return Err(Error::Contract(format!("leaf {b} reused or out of range")));
                }
                p.attach(a, b);
            }
        }
        Ok(p)
    }

    fn attach(&mut self, a: usize, b: usize) {
        debug_assert!(self.center[b].is_none());
        self.center[b] = Some(a);
        let list = &mut self.leaves[a];
        let pos = list.partition_point(|&x| x < b);
        list.insert(pos, b);
    }

    fn detach(&mut self, a: usize, b: usize) {
        debug_assert_eq!(self.center[b], Some(a));
        self.center[b] = None;
        self.leaves[a].retain(|&x| x != b);
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.center[b] == Some(a)
    }

    pub fn center_of(&self, b: usize) -> Option<usize> {
        self.center[b]
    }

    pub fn leaves_of(&self, a: usize) -> &[usize] {
        &self.leaves[a]
    }

    pub fn covers_b(&self, b: usize) -> bool {
        self.center[b].is_some()
    }

    pub fn covers_a(&self, a: usize) -> bool {
        !self.leaves[a].is_empty()
    }

    /// Components ordered by centre.
    pub fn components(&self) -> Vec<PackingComponent> {
        self.leaves
            .iter()
            .enumerate()
            .filter_map(|(a, l)| match l.as_slice() {
                [] => None,
                [b] => Some(PackingComponent::P2 { a, b: *b }),
                [b1, b2] => Some(PackingComponent::P3 {
                    b1: *b1,
                    a,
                    b2: *b2,
                }),
                _ => unreachable!("A-vertex with more than two leaves"),
            })
            .collect()
    }

    /// Edges-exist and component-shape check against `h`.
    pub fn is_valid_in(&self, h: &BipartiteGraph) -> bool {
        self.leaves.len() == h.a_count()
            && self.center.len() == h.b_count()
            && self.leaves.iter().enumerate().all(|(a, l)| {
                l.len() <= 2
                    && l.iter()
                        .all(|&b| h.has_edge(a, b) && self.center[b] == Some(a))
            })
    }

    /// Toggles every edge on the alternating path. Removals happen first so
    /// the single-centre invariant on B holds throughout.
    fn toggle_path(&mut self, path: &[Node]) {
        let edges: Vec<(usize, usize)> = path
            .windows(2)
            .map(|w| match (w[0], w[1]) {
                (Node::A(a), Node::B(b)) | (Node::B(b), Node::A(a)) => (a, b),
                _ => unreachable!("path alternates between sides"),
            })
            .collect();
        let (remove, add): (Vec<_>, Vec<_>) =
            edges.iter().partition(|&&(a, b)| self.contains_edge(a, b));
        for (a, b) in remove {
            self.detach(a, b);
        }
        for (a, b) in add {
            self.attach(a, b);
        }
    }
}

fn check_a_saturating(h: &BipartiteGraph) -> Result<BipartiteMatching> {
    let m = h.maximum_matching();
    if m.len() != h.a_count() {
        return Err(Error::Contract(format!(
            "maximum matchings of H must cover A: nu(H) = {} < |A| = {}",
            m.len(),
            h.a_count()
        )));
    }
    Ok(m)
}

fn min_degree(h: &BipartiteGraph, set: &[usize]) -> Option<u32> {
    set.iter().map(|&b| h.degree_b(b)).min()
}

fn max_degree(h: &BipartiteGraph, set: &[usize]) -> Option<u32> {
    set.iter().map(|&b| h.degree_b(b)).max()
}

fn mask(len: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut m = vec![false; len];
    for &b in set {
        if b >= len {
            return Err(Error::Contract(format!("B-vertex {b} out of range")));
        }
        m[b] = true;
    }
    Ok(m)
}

/// A maximum matching of `h` that covers every vertex of `w` (and, as every
/// maximum matching does, all of `A`).
///
/// First saturates `w` inside the subgraph on `w ∪ N(w)`, then augments to
/// maximum size; augmenting paths never uncover a vertex. Hall's condition
/// on `w` is guaranteed when `delta(w) >= Delta(A)`. Without that bound the
/// call still succeeds whenever `w` can be saturated, and reports
/// [`Error::Infeasible`] otherwise.
pub fn saturate_w(h: &BipartiteGraph, w: &[usize]) -> Result<BipartiteMatching> {
    check_a_saturating(h)?;
    let degree_bound = min_degree(h, w).is_none_or(|dw| dw >= h.max_degree_a());
    let in_w = mask(h.b_count(), w)?;
    let mut m = BipartiteMatching::empty(h.a_count(), h.b_count());
    for &b in w {
        if m.mate_b[b].is_some() {
            continue;
        }
        let mut seen = vec![false; h.a_count()];
        if !h.try_kuhn_from_b(b, &mut m, &mut seen, &in_w) {
            let (set, neighbours) = hall_violator(h, &m, b);
            if degree_bound {
                return Err(Error::theory(
                    "Hall's condition holds on W when delta(W) >= Delta(A)",
                    Witness::HallViolator { set, neighbours },
                ));
            }
            return Err(Error::Infeasible(format!(
                "W cannot be saturated: {set:?} has only the neighbours {neighbours:?}"
            )));
        }
    }
    h.augment_to_maximum(&mut m);
    debug_assert!(w.iter().all(|&b| m.mate_b[b].is_some()));
    debug_assert!(m.len() == h.a_count());
    Ok(m)
}

/// W-vertices reachable from the exposed `root` by alternating paths,
/// together with their neighbourhood: a set with `|N(S)| < |S|`.
fn hall_violator(
    h: &BipartiteGraph,
    m: &BipartiteMatching,
    root: usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut set = vec![root];
    let mut seen_a = vec![false; h.a_count()];
    let mut neighbours = Vec::new();
    let mut head = 0;
    while head < set.len() {
        let b = set[head];
        head += 1;
        for a in h.neighbours_b(b) {
            if !seen_a[a] {
                seen_a[a] = true;
                neighbours.push(a);
                if let Some(b2) = m.mate_a[a] {
                    set.push(b2);
                }
            }
        }
    }
    set.sort_unstable();
    neighbours.sort_unstable();
    (set, neighbours)
}

/// Directed reachability in `h` with packing edges oriented A -> B and all
/// other edges B -> A.
struct Orientation {
    parent_a: Vec<Option<usize>>,
    parent_b: Vec<Option<usize>>,
    seen_a: Vec<bool>,
    seen_b: Vec<bool>,
    order: Vec<Node>,
}

impl Orientation {
    /// Breadth-first search from `start`. `stop` is consulted on every newly
    /// reached vertex; the search halts at the first vertex it accepts.
    fn search(
        h: &BipartiteGraph,
        s: &Packing,
        start: Node,
        mut stop: impl FnMut(Node) -> bool,
    ) -> (Self, Option<Node>) {
        let mut o = Orientation {
            parent_a: vec![None; h.a_count()],
            parent_b: vec![None; h.b_count()],
            seen_a: vec![false; h.a_count()],
            seen_b: vec![false; h.b_count()],
            order: vec![start],
        };
        match start {
            Node::A(a) => o.seen_a[a] = true,
            Node::B(b) => o.seen_b[b] = true,
        }
        let mut head = 0;
        while head < o.order.len() {
            let node = o.order[head];
            head += 1;
            match node {
                Node::A(a) => {
                    for &b in s.leaves_of(a) {
                        if !o.seen_b[b] {
                            o.seen_b[b] = true;
                            o.parent_b[b] = Some(a);
                            o.order.push(Node::B(b));
                            if stop(Node::B(b)) {
                                return (o, Some(Node::B(b)));
                            }
                        }
                    }
                }
                Node::B(b) => {
                    for a in h.neighbours_b(b) {
                        if !o.seen_a[a] && !s.contains_edge(a, b) {
                            o.seen_a[a] = true;
                            o.parent_a[a] = Some(b);
                            o.order.push(Node::A(a));
                            if stop(Node::A(a)) {
                                return (o, Some(Node::A(a)));
                            }
                        }
                    }
                }
            }
        }
        (o, None)
    }

    /// Path from the search root to `end`, root first.
    fn path_to(&self, end: Node) -> Vec<Node> {
        let mut path = vec![end];
        let mut cur = end;
        loop {
            let prev = match cur {
                Node::A(a) => self.parent_a[a].map(Node::B),
                Node::B(b) => self.parent_b[b].map(Node::A),
            };
            match prev {
                Some(p) => {
                    path.push(p);
                    cur = p;
                }
                None => break,
            }
        }
        path.reverse();
        path
    }

    fn reached_a(&self) -> Vec<usize> {
        (0..self.seen_a.len()).filter(|&a| self.seen_a[a]).collect()
    }

    fn reached_b(&self) -> Vec<usize> {
        (0..self.seen_b.len()).filter(|&b| self.seen_b[b]).collect()
    }
}

/// A `{P2, P3}`-packing covering `A` and `w` in which every B-vertex has
/// packing degree at most one. Requires `Delta(A) <= 2 delta(w)` and that
/// every maximum matching of `h` covers `A`.
pub fn p2p3_packing(h: &BipartiteGraph, w: &[usize]) -> Result<Packing> {
    let start = check_a_saturating(h)?;
    let delta_a = h.max_degree_a();
    let delta_w = min_degree(h, w);
    if let Some(dw) = delta_w {
        if delta_a > 2 * dw {
            return Err(Error::Contract(format!(
                "p2p3_packing needs Delta(A) <= 2 delta(W), got {delta_a} > 2*{dw}"
            )));
        }
    }
    let in_w = mask(h.b_count(), w)?;
    let mut s = Packing::from_matching(&start);
    let mut covered_w = w.iter().filter(|&&b| s.covers_b(b)).count();
    for &x in w {
        if s.covers_b(x) {
            continue;
        }
        // Extend a neighbouring P2 into a P3 when possible.
        if let Some(y) = h.neighbours_b(x).find(|&y| s.leaves_of(y).len() == 1) {
            s.attach(y, x);
        } else {
            let (reach, end) = Orientation::search(h, &s, Node::B(x), |node| match node {
                Node::A(a) => s.leaves_of(a).len() < 2,
                Node::B(b) => !in_w[b],
            });
            match end {
                Some(end) => s.toggle_path(&reach.path_to(end)),
                None => {
                    return Err(stalled_packing(
                        h,
                        &s,
                        &reach,
                        &in_w,
                        delta_w.unwrap_or(0),
                        delta_a,
                    ))
                }
            }
        }
        let now = w.iter().filter(|&&b| s.covers_b(b)).count();
        assert!(now > covered_w, "W-coverage must strictly increase");
        covered_w = now;
        debug_assert!(s.is_valid_in(h) && (0..h.a_count()).all(|a| s.covers_a(a)));
    }
    Ok(s)
}

fn stalled_packing(
    h: &BipartiteGraph,
    s: &Packing,
    reach: &Orientation,
    in_w: &[bool],
    delta_w: u32,
    delta_a: u32,
) -> Error {
    let a_side = reach.reached_a();
    let b_side = reach.reached_b();
    // What the counting argument predicts once augmentation stalls.
    let shape = 2 * a_side.len() + 1 == b_side.len()
        && a_side.iter().all(|&a| s.leaves_of(a).len() == 2)
        && b_side.iter().all(|&b| in_w[b]);
    let counting =
        u64::from(delta_w) * b_side.len() as u64 <= u64::from(delta_a) * a_side.len() as u64;
    debug_assert!(b_side
        .iter()
        .all(|&b| h.neighbours_b(b).all(|a| reach.seen_a[a])));
    Error::theory(
        format!(
            "augmenting search stalled; reachable-set shape {} and counting inequality {} \
             (so Delta(A) > 2 delta(W))",
            if shape { "holds" } else { "fails" },
            if counting { "holds" } else { "fails" },
        ),
        Witness::Reachable {
            a_side,
            b_side,
            min_degree_w: delta_w,
            max_degree_a: delta_a,
        },
    )
}

/// Network whose integral circulations are packings. Units flow from the
/// source through a B-vertex to an A-vertex and on to the sink. Leaves in W
/// pass through a gate in front of their A-vertex. Each A-vertex takes one
/// or two units. Each vertex of W ∪ U sends exactly one unit. The second
/// unit through a gate costs one, so the cost counts two-W components.
struct PackingFlow {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
struct Arc {
    from: usize,
    to: usize,
    lower: u32,
    cap: u32,
    cost: i64,
    flow: u32,
}

impl PackingFlow {
    fn add(&mut self, from: usize, to: usize, lower: u32, cap: u32, cost: i64, flow: u32) -> usize {
        self.arcs.push(Arc {
            from,
            to,
            lower,
            cap,
            cost,
            flow,
        });
        self.out[from].push(self.arcs.len() - 1);
        self.out[to].push(self.arcs.len() - 1);
        self.arcs.len() - 1
    }

    /// Residual moves as `(arc, forward)` with their cost.
    fn residual(&self, arc: usize, at: usize) -> Option<(usize, i64)> {
        let a = &self.arcs[arc];
        if a.from == at && a.flow < a.cap {
            Some((a.to, a.cost))
        } else if a.to == at && a.flow > a.lower {
            Some((a.from, -a.cost))
        } else {
            None
        }
    }

    /// A negative-cost residual cycle as a list of `(arc, forward)`.
    fn negative_cycle(&self) -> Option<Vec<(usize, bool)>> {
        let n = self.out.len();
        let mut dist = vec![0i64; n];
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut last = None;
        for _ in 0..n {
            last = None;
            for v in 0..n {
                for &arc in &self.out[v] {
                    if let Some((w, c)) = self.residual(arc, v) {
                        if dist[v] + c < dist[w] {
                            dist[w] = dist[v] + c;
                            pred[w] = Some((v, arc));
                            last = Some(w);
                        }
                    }
                }
            }
            last?;
        }
        let mut v = last?;
        for _ in 0..n {
            v = pred[v].expect("relaxed vertex has a predecessor").0;
        }
        let start = v;
        let mut cycle = Vec::new();
        loop {
            let (u, arc) = pred[v].expect("cycle vertex has a predecessor");
            cycle.push((arc, self.arcs[arc].to == v && self.arcs[arc].from == u));
            v = u;
            if v == start {
                break;
            }
        }
        Some(cycle)
    }
}

/// Removes every two-W component from `s` by cancelling negative cycles in
/// [`PackingFlow`]; coverage of `A`, `W` and `U` is preserved throughout.
fn cancel_two_w_components(
    h: &BipartiteGraph,
    s: &mut Packing,
    in_w: &[bool],
    in_u: &[bool],
) -> Result<()> {
    let (na, nb) = (h.a_count(), h.b_count());
    let (source, sink) = (0, 1);
    let b_node = |b: usize| 2 + b;
    let gate = |a: usize| 2 + nb + a;
    let a_node = |a: usize| 2 + nb + na + a;
    let mut f = PackingFlow {
        arcs: Vec::new(),
        out: vec![Vec::new(); 2 + nb + 2 * na],
    };
    let mut leaf_arc = Vec::new();
    for b in 0..nb {
        let used = u32::from(s.covers_b(b));
        let required = u32::from(in_w[b] || in_u[b]);
        f.add(source, b_node(b), required, 1, 0, used);
        for a in h.neighbours_b(b) {
            let target = if in_w[b] { gate(a) } else { a_node(a) };
            let arc = f.add(b_node(b), target, 0, 1, 0, u32::from(s.contains_edge(a, b)));
            leaf_arc.push((arc, a, b));
        }
    }
    for a in 0..na {
        let w_leaves = s.leaves_of(a).iter().filter(|&&b| in_w[b]).count() as u32;
        f.add(gate(a), a_node(a), 0, 1, 0, w_leaves.min(1));
        f.add(gate(a), a_node(a), 0, 1, 1, w_leaves.saturating_sub(1));
        f.add(a_node(a), sink, 1, 2, 0, s.leaves_of(a).len() as u32);
    }
    f.add(
        sink,
        source,
        0,
        u32::MAX,
        0,
        s.center.iter().filter(|c| c.is_some()).count() as u32,
    );
    while let Some(cycle) = f.negative_cycle() {
        for (arc, forward) in cycle {
            if forward {
                f.arcs[arc].flow += 1;
            } else {
                f.arcs[arc].flow -= 1;
            }
        }
    }
    let mut rebuilt = Packing::empty(na, nb);
    for (arc, a, b) in leaf_arc {
        if f.arcs[arc].flow == 1 {
            rebuilt.attach(a, b);
        }
    }
    let remaining = w_counts(&rebuilt, in_w).0;
    if remaining > 0 {
        return Err(Error::theory(
            "some packing covering A, W and U has no component with two W-vertices",
            Witness::Count {
                expected: 0,
                actual: remaining,
            },
        ));
    }
    *s = rebuilt;
    Ok(())
}

/// Exact alternative to the exchange loop, exposed for cross-checking:
/// starts from the covering packing and cancels all two-W components.
pub fn refined_packing_by_flow(h: &BipartiteGraph, w: &[usize], u: &[usize]) -> Result<Packing> {
    check_a_saturating(h)?;
    let in_w = mask(h.b_count(), w)?;
    let in_u = mask(h.b_count(), u)?;
    let covered: Vec<usize> = (0..h.b_count()).filter(|&b| in_w[b] || in_u[b]).collect();
    let mut s = p2p3_packing(h, &covered)?;
    cancel_two_w_components(h, &mut s, &in_w, &in_u)?;
    Ok(s)
}

/// Which configuration of the exchange argument a step used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeCase {
    /// No other W-carrying P3 on the path; the whole path is flipped.
    Direct,
    /// The nearest W-carrying P3 on the path has two W-leaves.
    SegmentDoubleW,
    /// Nearest W-carrying P3 `w y' w'` is entered through its W-leaf.
    SegmentThroughW,
    /// Nearest W-carrying P3 is entered through its non-W leaf.
    SegmentThroughOther,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExchangeStep {
    pub case: ExchangeCase,
    pub path_len: usize,
    /// (components with two W-leaves, P3 components with one W-leaf), before.
    pub before: (usize, usize),
    pub after: (usize, usize),
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ExchangeLog {
    pub steps: Vec<ExchangeStep>,
    /// Set when the exchange loop revisited a packing or ran out of steps
    /// and the remaining two-W components were removed by cycle cancelling.
    pub fallback: bool,
}

fn w_counts(s: &Packing, in_w: &[bool]) -> (usize, usize) {
    let mut two = 0;
    let mut one_p3 = 0;
    for leaves in &s.leaves {
        let wl = leaves.iter().filter(|&&b| in_w[b]).count();
        match (leaves.len(), wl) {
            (2, 2) => two += 1,
            (2, 1) => one_p3 += 1,
            _ => {}
        }
    }
    (two, one_p3)
}

/// Packing covering `A`, `w` and `u`, B-degree at most one, and no component
/// with two W-vertices. Requires `Delta(u) < Delta(A) <= min(delta(w), 2 delta(u))`
/// and that every maximum matching of `h` covers `A`.
pub fn refined_packing(h: &BipartiteGraph, w: &[usize], u: &[usize]) -> Result<Packing> {
    refined_packing_logged(h, w, u).map(|(s, _)| s)
}

/// [`refined_packing`] plus a record of every exchange step taken.
pub fn refined_packing_logged(
    h: &BipartiteGraph,
    w: &[usize],
    u: &[usize],
) -> Result<(Packing, ExchangeLog)> {
    check_a_saturating(h)?;
    let delta_a = h.max_degree_a();
    if let Some(du) = max_degree(h, u) {
        if du >= delta_a {
            return Err(Error::Contract(format!(
                "refined_packing needs Delta(U) < Delta(A), got {du} >= {delta_a}"
            )));
        }
    }
    if let Some(dw) = min_degree(h, w) {
        if delta_a > dw {
            return Err(Error::Contract(format!(
                "refined_packing needs Delta(A) <= delta(W), got {delta_a} > {dw}"
            )));
        }
    }
    if let Some(du) = min_degree(h, u) {
        if delta_a > 2 * du {
            return Err(Error::Contract(format!(
                "refined_packing needs Delta(A) <= 2 delta(U), got {delta_a} > 2*{du}"
            )));
        }
    }
    let in_u = mask(h.b_count(), u)?;
    let mut in_w = mask(h.b_count(), w)?;
    // B-vertices of degree >= Delta(A) are treated like W: they satisfy the
    // same degree bound, and afterwards every vertex outside the enlarged
    // set has degree < Delta(A).
    for b in 0..h.b_count() {
        if !in_u[b] && h.degree_b(b) >= delta_a {
            in_w[b] = true;
        }
    }
    let covered: Vec<usize> = (0..h.b_count()).filter(|&b| in_w[b] || in_u[b]).collect();
    let mut s = p2p3_packing(h, &covered)?;
    let mut log = ExchangeLog::default();
    let mut visited: HashSet<Packing> = HashSet::new();
    let budget = 4 * (h.a_count() + 1) * (h.b_count() + 1);
    loop {
        let counts = w_counts(&s, &in_w);
        if counts.0 == 0 {
            break;
        }
        if !visited.insert(s.clone()) || log.steps.len() >= budget {
            log.fallback = true;
            cancel_two_w_components(h, &mut s, &in_w, &in_u)?;
            break;
        }
        let step = exchange_step(h, &mut s, &in_w, &in_u, delta_a)?;
        let after = w_counts(&s, &in_w);
        assert!(
            after.0 <= counts.0,
            "an exchange never creates a two-W component"
        );
        log.steps.push(ExchangeStep {
            before: counts,
            after,
            ..step
        });
        debug_assert!(s.is_valid_in(h));
        debug_assert!((0..h.a_count()).all(|a| s.covers_a(a)));
        debug_assert!(covered.iter().all(|&b| s.covers_b(b)));
    }
    Ok((s, log))
}

/// One round of the exchange argument: pick the shortest directed path from
/// the centre of a two-W component to a vertex `v` with `d(v) < Delta(A)`
/// that is either outside `U` or a P2 leaf, then flip the part of it that
/// starts at the last W-carrying P3 on the path.
fn exchange_step(
    h: &BipartiteGraph,
    s: &mut Packing,
    in_w: &[bool],
    in_u: &[bool],
    delta_a: u32,
) -> Result<ExchangeStep> {
    let is_target = |s: &Packing, node: Node| match node {
        Node::B(b) => {
            h.degree_b(b) < delta_a
                && (!in_u[b] || s.center_of(b).is_some_and(|a| s.leaves_of(a).len() == 1))
        }
        Node::A(_) => false,
    };
    let centres: Vec<usize> = (0..h.a_count())
        .filter(|&a| {
            let l = s.leaves_of(a);
            l.len() == 2 && l.iter().all(|&b| in_w[b])
        })
        .collect();
    let mut best: Option<Vec<Node>> = None;
    for &y in &centres {
        let (reach, end) = Orientation::search(h, s, Node::A(y), |node| is_target(s, node));
        match end {
            Some(end) => {
                let path = reach.path_to(end);
                if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                    best = Some(path);
                }
            }
            None if best.is_none() && y == centres[centres.len() - 1] => {
                return Err(stalled_exchange(h, s, &reach, delta_a));
            }
            None => {}
        }
    }
    let path = best.expect("some centre has a target");
    let Some(&Node::B(v)) = path.last() else {
        unreachable!("targets are B-vertices")
    };
    let keep_v = in_u[v];

    // Nearest W-carrying P3 to v among the centres on the path, excluding the root.
    let mut start = 0;
    let mut case = ExchangeCase::Direct;
    for i in (2..path.len()).step_by(2).rev() {
        let Node::A(a) = path[i] else { unreachable!() };
        let leaves = s.leaves_of(a);
        if leaves.len() == 2 && leaves.iter().any(|&b| in_w[b]) {
            let Node::B(on_path) = path[i + 1] else {
                unreachable!()
            };
            let other = leaves
                .iter()
                .copied()
                .find(|&b| b != on_path)
                .expect("P3 has two leaves");
            case = match (in_w[on_path], in_w[other]) {
                (true, true) => ExchangeCase::SegmentDoubleW,
                (true, false) => ExchangeCase::SegmentThroughW,
                (false, _) => ExchangeCase::SegmentThroughOther,
            };
            start = i;
            break;
        }
    }
    let segment = &path[start..];
    let end = if keep_v {
        segment.len() - 1
    } else {
        segment.len()
    };
    s.toggle_path(&segment[..end]);
    Ok(ExchangeStep {
        case,
        path_len: path.len() - 1,
        before: (0, 0),
        after: (0, 0),
    })
}

fn stalled_exchange(h: &BipartiteGraph, s: &Packing, reach: &Orientation, delta_a: u32) -> Error {
    let a_side = reach.reached_a();
    let (low, high): (Vec<usize>, Vec<usize>) = reach
        .reached_b()
        .into_iter()
        .partition(|&b| h.degree_b(b) < delta_a);
    debug_assert!(low.iter().all(|&b| s.center_of(b).is_some()));
    Error::theory(
        "every vertex of low degree reachable from a two-W centre is a U-leaf of a P3, \
         so |A ∩ G_y| <= |B1|/2 + |B2| - 1 contradicts the edge count",
        Witness::DegreeClasses { a_side, low, high },
    )
}

/// Splits a packing into matchings `(M, M')`: P2s go to `M`; each P3 puts
/// its edge to a W-leaf (or, with no W-leaf, its edge to the lower B-id)
/// into `M` and the other edge into `M'`.
pub fn split_packing(s: &Packing, w: &[usize]) -> Result<(BipartiteMatching, BipartiteMatching)> {
    let (a_count, b_count) = (s.leaves.len(), s.center.len());
    let in_w = mask(b_count, w)?;
    let mut m = BipartiteMatching::empty(a_count, b_count);
    let mut m_aux = BipartiteMatching::empty(a_count, b_count);
    let put = |mm: &mut BipartiteMatching, a: usize, b: usize| {
        mm.mate_a[a] = Some(b);
        mm.mate_b[b] = Some(a);
    };
    for c in s.components() {
        match c {
            PackingComponent::P2 { a, b } => put(&mut m, a, b),
            PackingComponent::P3 { b1, a, b2 } => {
                let (main, aux) = match (in_w[b1], in_w[b2]) {
                    (true, true) => {
                        return Err(Error::Contract(format!(
                            "P3 {b1}-{a}-{b2} has both ends in W"
                        )))
                    }
                    (true, false) => (b1, b2),
                    (false, true) => (b2, b1),
                    (false, false) => (b1.min(b2), b1.max(b2)),
                };
                put(&mut m, a, main);
                put(&mut m_aux, a, aux);
            }
        }
    }
    Ok((m, m_aux))
}
