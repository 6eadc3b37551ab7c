//! Named graphs shared by the tests and the command line.
//!
//! * `petersen`: the Petersen graph, simple cubic, n = 10.
//! * `qt4`: two hubs and four triangle gadgets, 4-regular multigraph, n = 14.
//!   Gadget `i` has vertices `x, y, z` with `xy`, `xz` doubled, `yz` single,
//!   and `y, z` each joined once to hub 0 (gadgets 0, 1) or hub 1 (gadgets 2, 3).
//! * `penta5`: hub 0 joined once to each vertex of a fully doubled triangle
//!   and once to the degree-4 vertex of two copies of K5 with `{0,1}` and
//!   `{2,3}` doubled. 5-regular multigraph, n = 14.
//! * `dtri`: the doubled triangle, 4-regular, n = 3.
//! * `cubic16`: a simple cubic graph without a perfect matching: a centre
//!   joined to three copies of K4 with one edge subdivided. n = 16.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const FIXTURE_NAMES: &[&str] = &["petersen", "qt4", "penta5", "dtri", "cubic16"];

pub fn fixture(name: &str) -> Result<Multigraph> {
    let g = match name {
        "petersen" => petersen(),
        "qt4" => qt4(),
        "penta5" => penta5(),
        "dtri" => Multigraph::new(3, [(0, 1, 2), (0, 2, 2), (1, 2, 2)]),
        "cubic16" => cubic16(),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(g.expect("fixture definitions are valid"))
}

fn petersen() -> Result<Multigraph> {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::from_pairs(10, &pairs)
}

fn qt4() -> Result<Multigraph> {
    let mut edges = Vec::new();
    for i in 0..4 {
        let (x, y, z) = (2 + 3 * i, 3 + 3 * i, 4 + 3 * i);
        let hub = if i < 2 { 0 } else { 1 };
        edges.extend([(x, y, 2), (x, z, 2), (y, z, 1), (y, hub, 1), (z, hub, 1)]);
    }
    Multigraph::new(14, edges)
}

/// K5 on `base..base+5` with `{base, base+1}` and `{base+2, base+3}` doubled.
fn k5_gadget(base: usize, edges: &mut Vec<(usize, usize, u32)>) {
    for u in 0..5 {
        for v in u + 1..5 {
            let m = if (u, v) == (0, 1) || (u, v) == (2, 3) {
                2
            } else {
                1
            };
            edges.push((base + u, base + v, m));
        }
    }
}

fn penta5() -> Result<Multigraph> {
    let mut edges = vec![
        (1, 2, 2),
        (1, 3, 2),
        (2, 3, 2),
        (0, 1, 1),
        (0, 2, 1),
        (0, 3, 1),
    ];
    k5_gadget(4, &mut edges);
    k5_gadget(9, &mut edges);
    edges.push((0, 8, 1));
    edges.push((0, 13, 1));
    Multigraph::new(14, edges)
}

fn cubic16() -> Result<Multigraph> {
    let mut pairs = Vec::new();
    for g in 0..3 {
        let s = 1 + 5 * g;
        let (a, b, c, d) = (s + 1, s + 2, s + 3, s + 4);
        pairs.extend([
            (0, s),
            (s, a),
            (s, b),
            (a, c),
            (a, d),
            (b, c),
            (b, d),
            (c, d),
        ]);
    }
    Multigraph::from_pairs(16, &pairs)
}
