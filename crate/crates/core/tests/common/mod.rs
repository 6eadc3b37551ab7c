#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regmatch::{BipartiteGraph, BipartiteMatching, Packing, PackingComponent};

/// Which degree condition a random bipartite instance must satisfy.
#[derive(Debug, Clone, Copy)]
pub enum Condition {
    /// `delta(W) >= Delta(A)`.
    Saturate,
    /// `Delta(A) <= 2 delta(W)`.
    Packing,
    /// `Delta(U) < Delta(A) <= min(delta(W), 2 delta(U))`.
    Refined,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub h: BipartiteGraph,
    pub w: Vec<usize>,
    pub u: Vec<usize>,
}

fn degrees_b(h: &BipartiteGraph) -> Vec<u32> {
    (0..h.b_count()).map(|b| h.degree_b(b)).collect()
}

/// Random bipartite multigraph in which every maximum matching covers `A`,
/// with `W` (and `U`) drawn to satisfy `condition`'s degree condition. Retries
/// until an instance with at least one W-vertex comes out.
pub fn random_instance(condition: Condition, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a_count = rng.gen_range(1..=6);
        let b_count = a_count + rng.gen_range(0..=6);
        let density = rng.gen_range(0.2..0.8);
        let mut edges = Vec::new();
        for a in 0..a_count {
            for b in 0..b_count {
                if rng.gen_bool(density) {
                    edges.push((a, b, rng.gen_range(1..=3)));
                }
            }
        }
        let Ok(h) = BipartiteGraph::new(a_count, b_count, edges) else {
            continue;
        };
        if h.maximum_matching().len() != a_count {
            continue;
        }
        let delta_a = h.max_degree_a();
        let deg = degrees_b(&h);
        let mut w: Vec<usize> = Vec::new();
        let mut u: Vec<usize> = Vec::new();
        for (b, &d) in deg.iter().enumerate() {
            let keep = rng.gen_bool(0.8);
            match condition {
                Condition::Saturate if d >= delta_a && keep => w.push(b),
                Condition::Packing if 2 * d >= delta_a && keep => w.push(b),
                Condition::Refined if d >= delta_a && keep => w.push(b),
                Condition::Refined if d < delta_a && 2 * d >= delta_a && keep => u.push(b),
                _ => {}
            }
        }
        if w.is_empty() {
            continue;
        }
        w.shuffle(&mut rng);
        w.sort_unstable();
        return Instance { h, w, u };
    }
}

/// Spreads `target` edge endpoints of B-vertex `b` over A-vertices that
/// still have room below `delta`.
fn spread(
    rng: &mut ChaCha8Rng,
    delta: u32,
    target: u32,
    b: usize,
    load: &mut [u32],
    edges: &mut Vec<(usize, usize, u32)>,
) -> bool {
    let mut left = target;
    for _ in 0..50 {
        if left == 0 {
            break;
        }
        let a = rng.gen_range(0..load.len());
        if load[a] < delta {
            let m = rng.gen_range(1..=left.min(delta - load[a]));
            load[a] += m;
            left -= m;
            edges.push((a, b, m));
        }
    }
    left == 0
}

/// Refined-packing instance with degrees packed tightly: W-vertices have
/// degree exactly `Delta(A)`, U-vertices lie in `[Delta(A)/2, Delta(A))`,
/// and A-vertices are filled close to `Delta(A)`. Such instances often force
/// two W-vertices into one component of the first packing.
pub fn tight_refined_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a_count = rng.gen_range(2..=7);
        let delta: u32 = rng.gen_range(2..=6);
        let mut load = vec![0u32; a_count];
        let mut edges = Vec::new();
        let mut w = Vec::new();
        let mut u = Vec::new();
        let mut b = 0;
        let kinds = rng.gen_range(a_count..=2 * a_count + 2);
        for _ in 0..kinds {
            let kind = rng.gen_range(0..3);
            let target = match kind {
                0 => delta,
                1 if delta >= 2 => rng.gen_range(delta.div_ceil(2)..delta),
                _ => rng.gen_range(1..=delta.max(2) - 1),
            };
            if !spread(&mut rng, delta, target, b, &mut load, &mut edges) {
                continue;
            }
            match kind {
                0 => w.push(b),
                1 if delta >= 2 => u.push(b),
                _ => {}
            }
            b += 1;
        }
        let Ok(h) = BipartiteGraph::new(a_count, b, edges) else {
            continue;
        };
        if h.a_count() == 0 || h.maximum_matching().len() != a_count || w.is_empty() {
            continue;
        }
        let delta_a = h.max_degree_a();
        let ok = w.iter().all(|&x| h.degree_b(x) >= delta_a)
            && u.iter()
                .all(|&x| h.degree_b(x) < delta_a && 2 * h.degree_b(x) >= delta_a);
        if ok {
            return Instance { h, w, u };
        }
    }
}

/// Conclusions of the packing operations checked directly: `S` lives in `h`,
/// covers `A` and `cover`, uses each B-vertex at most once, and (when
/// `no_two_w`) no component has two W-leaves.
pub fn packing_conclusions(
    h: &BipartiteGraph,
    s: &Packing,
    cover: &[usize],
    w: &[usize],
    no_two_w: bool,
) -> Result<(), String> {
    if !s.is_valid_in(h) {
        return Err("packing uses a non-edge or has a bad component".into());
    }
    let mut used_b = vec![0; h.b_count()];
    let mut centres = vec![false; h.a_count()];
    for c in s.components() {
        if std::mem::replace(&mut centres[c.center()], true) {
            return Err(format!(
                "A-vertex {} is the centre of two components",
                c.center()
            ));
        }
        for b in c.leaves() {
            used_b[b] += 1;
        }
        if no_two_w {
            if let PackingComponent::P3 { b1, b2, .. } = c {
                if w.contains(&b1) && w.contains(&b2) {
                    return Err(format!("component {c:?} has two W-vertices"));
                }
            }
        }
    }
    if let Some(b) = used_b.iter().position(|&d| d > 1) {
        return Err(format!("B-vertex {b} has packing degree > 1"));
    }
    if let Some(a) = centres.iter().position(|&c| !c) {
        return Err(format!("A-vertex {a} is uncovered"));
    }
    if let Some(&b) = cover.iter().find(|&&b| used_b[b] == 0) {
        return Err(format!("B-vertex {b} is uncovered"));
    }
    Ok(())
}

/// Whether `m` is a matching of `h` covering `A` and `w`, of maximum size.
pub fn saturating_conclusions(
    h: &BipartiteGraph,
    m: &BipartiteMatching,
    w: &[usize],
) -> Result<(), String> {
    if !h.is_matching(m) {
        return Err("not a matching of H".into());
    }
    if !h.is_maximum(m) {
        return Err("not maximum".into());
    }
    if let Some(&b) = w.iter().find(|&&b| m.mate_of_b(b).is_none()) {
        return Err(format!("W-vertex {b} is uncovered"));
    }
    if let Some(a) = (0..h.a_count()).find(|&a| m.mate_of_a(a).is_none()) {
        return Err(format!("A-vertex {a} is uncovered"));
    }
    Ok(())
}

/// Brute force: does `h` have a packing with B-degree at most one that
/// covers `A` and `cover`, with no two-W component when `no_two_w`?
pub fn packing_exists(h: &BipartiteGraph, cover: &[usize], w: &[usize], no_two_w: bool) -> bool {
    fn go(
        h: &BipartiteGraph,
        a: usize,
        used: &mut Vec<bool>,
        cover: &[usize],
        in_w: &[bool],
        no_two_w: bool,
    ) -> bool {
        if a == h.a_count() {
            return cover.iter().all(|&b| used[b]);
        }
        let nbrs: Vec<usize> = h.neighbours_a(a).collect();
        for (i, &b1) in nbrs.iter().enumerate() {
            if used[b1] {
                continue;
            }
            used[b1] = true;
            if go(h, a + 1, used, cover, in_w, no_two_w) {
                return true;
            }
            for &b2 in &nbrs[i + 1..] {
                if used[b2] || (no_two_w && in_w[b1] && in_w[b2]) {
                    continue;
                }
                used[b2] = true;
                let ok = go(h, a + 1, used, cover, in_w, no_two_w);
                used[b2] = false;
                if ok {
                    return true;
                }
            }
            used[b1] = false;
        }
        false
    }
    let mut in_w = vec![false; h.b_count()];
    for &b in w {
        in_w[b] = true;
    }
    go(h, 0, &mut vec![false; h.b_count()], cover, &in_w, no_two_w)
}
