//! Seeded random generators for regular (multi)graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

const MAX_ATTEMPTS: usize = 200_000;

/// Random `k`-regular graph on `n` vertices from the pairing model.
///
/// Points are paired one at a time; a point is only paired with partners
/// that do not create a loop (or, with `simple`, a repeated edge). A dead end
/// restarts the whole pairing. Identical arguments give identical graphs.
pub fn gen_random_regular(n: usize, k: usize, simple: bool, seed: u64) -> Result<Multigraph> {
    if (n * k) % 2 == 1 {
        return Err(Error::Infeasible(format!("n*k = {} is odd", n * k)));
    }
    if simple && k >= n && k > 0 {
        return Err(Error::Infeasible(format!(
            "a simple {k}-regular graph needs more than {k} vertices"
        )));
    }
    if !simple && n == 1 && k > 0 {
        return Err(Error::Infeasible(
            "a single vertex cannot carry edges without loops".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(edges) = try_pairing(n, k, simple, &mut rng) {
            return Multigraph::new(n, edges);
        }
    }
    Err(Error::RetryExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

fn try_pairing(
    n: usize,
    k: usize,
    simple: bool,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<(usize, usize, u32)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    points.shuffle(rng);
    let mut adjacent = vec![false; if simple { n * n } else { 0 }];
    let mut edges = Vec::with_capacity(points.len() / 2);
    while let Some(u) = points.pop() {
        let candidates: Vec<usize> = (0..points.len())
            .filter(|&i| {
                let v = points[i];
                v != u && !(simple && adjacent[u * n + v])
            })
            .collect();
        let &pick = candidates.get(rng.gen_range(0..candidates.len().max(1)))?;
        let v = points.swap_remove(pick);
        if simple {
            adjacent[u * n + v] = true;
            adjacent[v * n + u] = true;
        }
        edges.push((u, v, 1));
    }
    Some(edges)
}

/// An odd building block: internal edges over `size` local vertices plus
/// the local ids of its ports (a vertex appears once per missing degree).
struct Gadget {
    size: usize,
    edges: Vec<(usize, usize, u32)>,
    ports: Vec<usize>,
}

fn complete_minus(size: usize, removed: &[(usize, usize)]) -> Vec<(usize, usize, u32)> {
    let mut edges = Vec::new();
    for u in 0..size {
        for v in u + 1..size {
            if !removed.contains(&(u, v)) && !removed.contains(&(v, u)) {
                edges.push((u, v, 1));
            }
        }
    }
    edges
}

fn gadget_library(k: usize, simple: bool) -> Vec<Gadget> {
    let k32 = k as u32;
    let mut lib = vec![Gadget {
        size: 1,
        edges: Vec::new(),
        ports: vec![0; k],
    }];
    if simple {
        if k % 2 == 1 {
            // K_{k+2} minus a path a-p-b and a perfect matching on the rest.
            let size = k + 2;
            let mut removed = vec![(0, 1), (0, 2)];
            removed.extend((3..size).step_by(2).map(|i| (i, i + 1)));
            lib.push(Gadget {
                size,
                edges: complete_minus(size, &removed),
                ports: vec![0],
            });
            // K_{k+2} minus a triangle on the ports and a perfect matching on the rest.
            let mut removed = vec![(0, 1), (0, 2), (1, 2)];
            removed.extend((3..size).step_by(2).map(|i| (i, i + 1)));
            lib.push(Gadget {
                size,
                edges: complete_minus(size, &removed),
                ports: vec![0, 1, 2],
            });
        } else {
            lib.push(Gadget {
                size: k + 1,
                edges: complete_minus(k + 1, &[(0, 1)]),
                ports: vec![0, 1],
            });
            lib.push(Gadget {
                size: k + 1,
                edges: complete_minus(k + 1, &[]),
                ports: vec![],
            });
        }
    } else if k % 2 == 1 {
        lib.push(Gadget {
            size: 3,
            edges: vec![(0, 1, k32.div_ceil(2)), (0, 2, k32 / 2), (1, 2, k32 / 2)],
            ports: vec![2],
        });
        lib.push(Gadget {
            size: 3,
            edges: vec![(0, 1, k32 / 2), (0, 2, k32 / 2), (1, 2, k32 / 2)],
            ports: vec![0, 1, 2],
        });
        if k == 5 {
            lib.push(Gadget {
                size: 3,
                edges: vec![(0, 1, 2), (0, 2, 3), (1, 2, 1)],
                ports: vec![1, 1, 2],
            });
            let mut edges = complete_minus(5, &[]);
            edges.push((0, 1, 1));
            edges.push((2, 3, 1));
            lib.push(Gadget {
                size: 5,
                edges,
                ports: vec![4],
            });
        }
    } else if k >= 2 {
        lib.push(Gadget {
            size: 3,
            edges: vec![(0, 1, k32 / 2), (0, 2, k32 / 2), (1, 2, k32 / 2 - 1)]
                .into_iter()
                .filter(|e| e.2 > 0)
                .collect(),
            ports: vec![1, 2],
        });
        lib.push(Gadget {
            size: 3,
            edges: vec![(0, 1, k32 / 2), (0, 2, k32 / 2), (1, 2, k32 / 2)],
            ports: vec![],
        });
    }
    lib
}

/// Random `k`-regular graph assembled from `hubs` hub vertices and at least
/// `hubs + 2` odd gadgets whose spare degree is wired to the hubs. Such
/// graphs usually have no near-perfect matching, which makes them good
/// inputs for the deficiency >= 2 constructions.
pub fn gen_gadget_regular(k: usize, simple: bool, hubs: usize, seed: u64) -> Result<Multigraph> {
    if k < 2 || (simple && k < 3) {
        return Err(Error::Infeasible(format!("no gadget library for k = {k}")));
    }
    let lib = gadget_library(k, simple);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let capacity = hubs * k;
    for _ in 0..MAX_ATTEMPTS / 10 {
        let target = hubs + 2 + rng.gen_range(0..3);
        let mut chosen: Vec<&Gadget> = Vec::new();
        let mut ports = 0;
        for _ in 0..target {
            let fitting: Vec<&Gadget> = lib
                .iter()
                .filter(|g| ports + g.ports.len() <= capacity)
                .collect();
            let Some(&g) = fitting.get(rng.gen_range(0..fitting.len().max(1))) else {
                break;
            };
            ports += g.ports.len();
            chosen.push(g);
        }
        if chosen.len() < hubs + 2 || (capacity - ports) % 2 == 1 {
            continue;
        }
        if let Some(g) = wire(&chosen, hubs, k, simple, &mut rng) {
            return Ok(g);
        }
    }
    Err(Error::RetryExhausted {
        attempts: MAX_ATTEMPTS / 10,
    })
}

fn wire(
    chosen: &[&Gadget],
    hubs: usize,
    k: usize,
    simple: bool,
    rng: &mut ChaCha8Rng,
) -> Option<Multigraph> {
    let mut edges = Vec::new();
    let mut port_vertices = Vec::new();
    let mut offset = hubs;
    for g in chosen {
        edges.extend(g.edges.iter().map(|&(u, v, m)| (u + offset, v + offset, m)));
        port_vertices.extend(g.ports.iter().map(|&p| p + offset));
        offset += g.size;
    }
    let mut slots: Vec<usize> = (0..hubs).flat_map(|h| std::iter::repeat_n(h, k)).collect();
    slots.shuffle(rng);
    let leftover = slots.split_off(port_vertices.len());
    for (&p, &h) in port_vertices.iter().zip(&slots) {
        edges.push((p, h, 1));
    }
    let mut leftover = leftover;
    leftover.shuffle(rng);
    for pair in leftover.chunks(2) {
        if pair[0] == pair[1] {
            return None;
        }
        edges.push((pair[0], pair[1], 1));
    }
    let g = Multigraph::new(offset, edges).ok()?;
    (!simple || g.is_simple()).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_unique() {
        for seed in 0..5 {
            let g = gen_random_regular(4, 3, true, seed).unwrap();
            assert_eq!(g.edges().len(), 6);
            assert!(g.is_simple());
        }
    }

    #[test]
    fn parity_is_checked() {
        assert!(matches!(
            gen_random_regular(3, 3, true, 0),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            gen_random_regular(3, 3, false, 0),
            Err(Error::Infeasible(_))
        ));
        assert!(gen_random_regular(4, 4, true, 0).is_err());
    }

    #[test]
    fn multigraph_generation_is_regular_and_seeded() {
        let a = gen_random_regular(8, 4, false, 7).unwrap();
        assert_eq!(a.degree_profile().regular, Some(4));
        assert_eq!(a, gen_random_regular(8, 4, false, 7).unwrap());
        let two = gen_random_regular(2, 5, false, 1).unwrap();
        assert_eq!(two.multiplicity(0, 1), 5);
    }

    #[test]
    fn simple_generation_has_unit_multiplicities() {
        for seed in 0..20 {
            let g = gen_random_regular(12, 5, true, seed).unwrap();
            assert_eq!(g.degree_profile().regular, Some(5));
            assert!(g.edges().iter().all(|e| e.multiplicity == 1));
        }
    }

    #[test]
    fn gadget_graphs_are_regular() {
        for (k, simple) in [
            (3, true),
            (4, true),
            (5, true),
            (3, false),
            (4, false),
            (5, false),
            (7, false),
        ] {
            for hubs in 0..3 {
                if k % 2 == 1 && hubs == 0 {
                    continue;
                }
                let g = gen_gadget_regular(k, simple, hubs, 11).unwrap();
                assert_eq!(
                    g.degree_profile().regular,
                    Some(k as u32),
                    "k={k} simple={simple}"
                );
                assert!(!simple || g.is_simple());
            }
        }
    }
}
