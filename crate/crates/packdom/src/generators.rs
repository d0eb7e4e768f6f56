//! Named graphs and seeded random instance generators.
//!
//! All randomness flows through `ChaCha8Rng` seeded from a single `u64`, so
//! every generated instance is reproducible across platforms from `(params,
//! seed)` alone.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::multigraph::Multigraph;

/// Cubic graph on 8 vertices: the 8-cycle with chords {0,5}, {1,3}, {2,6},
/// {4,7}.
pub fn h1() -> Graph {
    let mut edges = cycle_edges(8);
    edges.extend_from_slice(&[(0, 5), (1, 3), (2, 6), (4, 7)]);
    Graph::from_edges(8, &edges).unwrap()
}

/// The Wagner graph: the 8-cycle plus all four antipodal chords.
pub fn wagner() -> Graph {
    let mut edges = cycle_edges(8);
    edges.extend_from_slice(&[(0, 4), (1, 5), (2, 6), (3, 7)]);
    Graph::from_edges(8, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle 0..4, spokes to 5..9, inner 5-cycle
/// with step 2.
pub fn petersen() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Complete bipartite graph with sides {0,1,2} and {3,4,5}.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &cycle_edges(n)).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    (0..n).map(|v| (v, (v + 1) % n)).collect()
}

/// Looks up a graph by name: `h1`, `wagner`, `petersen`, `k33`, `cycle(n)`,
/// `path(n)`.
pub fn named(name: &str) -> Result<Graph> {
    match name {
        "h1" => return Ok(h1()),
        "wagner" | "h2" => return Ok(wagner()),
        "petersen" | "h3" => return Ok(petersen()),
        "k33" => return Ok(k33()),
        _ => {}
    }
    for (prefix, min) in [("cycle(", 3), ("path(", 1)] {
        if let Some(rest) = name.strip_prefix(prefix) {
            if let Some(arg) = rest.strip_suffix(')') {
                let n: usize = arg
                    .parse()
                    .map_err(|_| Error::UnknownName(name.to_string()))?;
                if n < min {
                    return Err(Error::InfeasibleParameters(format!(
                        "{prefix}{n}) needs at least {min} vertices"
                    )));
                }
                return Ok(if prefix == "cycle(" {
                    cycle(n)
                } else {
                    path(n)
                });
            }
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

pub const NAMED_GRAPHS: [&str; 4] = ["h1", "wagner", "petersen", "k33"];

/// Connected random graph with maximum degree at most `max_degree`: a random
/// spanning tree grown under the degree cap, then extra random edges while
/// the cap allows. Deterministic per `(n, max_degree, seed)`.
pub fn random_connected_max_degree(n: usize, max_degree: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    assert!(max_degree >= 2, "degree cap below 2 cannot host a tree");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut degree = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut placed: Vec<usize> = vec![order[0]];
    for &v in &order[1..] {
        let open: Vec<usize> = placed
            .iter()
            .copied()
            .filter(|&u| degree[u] < max_degree)
            .collect();
        // A tree under the cap always leaves some vertex open: the cap is at
        // least 2 and a full vertex has at least cap-1 placed neighbors.
        let &u = open
            .get(rng.gen_range(0..open.len()))
            .expect("spanning tree growth starved");
        edges.push((u.min(v), u.max(v)));
        degree[u] += 1;
        degree[v] += 1;
        placed.push(v);
    }

    let mut g = Graph::from_edges(n, &edges).unwrap();
    let extra_attempts = 2 * n;
    for _ in 0..extra_attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < max_degree && g.degree(v) < max_degree {
            let mut all = g.edges();
            all.push((u.min(v), u.max(v)));
            g = Graph::from_edges(n, &all).unwrap();
        }
    }
    g
}

/// Connected random subcubic graph, deterministic per `(n, seed)`.
pub fn random_subcubic(n: usize, seed: u64) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).unwrap();
    }
    random_connected_max_degree(n, 3, seed)
}

/// Connected random multigraph with every degree at least 2 (a loop counts
/// 2) and exactly `m` edges. Starts from a random closed spanning walk
/// (cycle; double edge for n = 2; loop for n = 1), then adds `m - n` random
/// extra edges, loops allowed. Requires `m >= n`.
pub fn random_multigraph_min2(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::InfeasibleParameters(
            "multigraph needs at least one vertex".into(),
        ));
    }
    if m < n {
        return Err(Error::InfeasibleParameters(format!(
            "need at least {n} edges for minimum degree 2 on {n} connected vertices, got {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mg = Multigraph::new(n);
    match n {
        1 => {
            mg.add_edge(0, 0)?;
        }
        2 => {
            mg.add_edge(0, 1)?;
            mg.add_edge(0, 1)?;
        }
        _ => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            for i in 0..n {
                mg.add_edge(order[i], order[(i + 1) % n])?;
            }
        }
    }
    while mg.edge_count() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        mg.add_edge(u, v)?;
    }
    Ok(mg)
}

/// Exhaustively lists multigraphs on `n` vertices with at most `max_edges`
/// edges, minimum degree 2 (loop counts 2) and, if requested, connected.
/// Labeled enumeration: isomorphic copies are all emitted. Guarded to the
/// desk-scale sizes the test sweeps need.
pub fn enumerate_multigraphs_min2(
    n: usize,
    max_edges: usize,
    connected_only: bool,
) -> Result<Vec<Multigraph>> {
    const VERTEX_CAP: usize = 6;
    const EDGE_CAP: usize = 10;
    if n > VERTEX_CAP || max_edges > EDGE_CAP {
        return Err(Error::GuardExceeded {
            n: n.max(max_edges),
            cap: VERTEX_CAP.max(EDGE_CAP),
        });
    }
    // Edge slots: unordered pairs including loops, lexicographic.
    let mut slots = Vec::new();
    for u in 0..n {
        for v in u..n {
            slots.push((u, v));
        }
    }
    let mut out = Vec::new();
    let mut multiplicity = vec![0usize; slots.len()];
    // Depth-first over multiplicity vectors with total count <= max_edges.
    fn rec(
        slots: &[(usize, usize)],
        multiplicity: &mut Vec<usize>,
        idx: usize,
        remaining: usize,
        n: usize,
        connected_only: bool,
        out: &mut Vec<Multigraph>,
    ) {
        if idx == slots.len() {
            let mut mg = Multigraph::new(n);
            for (i, &(u, v)) in slots.iter().enumerate() {
                for _ in 0..multiplicity[i] {
                    mg.add_edge(u, v).unwrap();
                }
            }
            if mg.min_degree() >= 2 && (!connected_only || mg.is_connected()) {
                out.push(mg);
            }
            return;
        }
        for count in 0..=remaining {
            multiplicity[idx] = count;
            rec(
                slots,
                multiplicity,
                idx + 1,
                remaining - count,
                n,
                connected_only,
                out,
            );
        }
        multiplicity[idx] = 0;
    }
    rec(
        &slots,
        &mut multiplicity,
        0,
        max_edges,
        n,
        connected_only,
        &mut out,
    );
    Ok(out)
}
