//! Shared inputs for the benchmarks.

use regmatch::{gen_gadget_regular, gen_random_regular, Multigraph};

/// Deficient regular graphs that exercise the decomposition pipelines,
/// labelled by `(k, simple)`.
pub fn deficient_inputs(count: usize) -> Vec<(String, Multigraph)> {
    let mut out = Vec::new();
    for (k, simple) in [(3, true), (4, false), (5, false), (5, true)] {
        for seed in 0..count as u64 {
            let g = gen_gadget_regular(k, simple, 2, seed).expect("gadget parameters are feasible");
            out.push((
                format!("k{k}-{}-{seed}", if simple { "simple" } else { "multi" }),
                g,
            ));
        }
    }
    out
}

/// A random `k`-regular graph on `n` vertices with a fixed seed.
pub fn random_input(n: usize, k: usize, simple: bool) -> Multigraph {
    gen_random_regular(n, k, simple, 42).expect("random parameters are feasible")
}
