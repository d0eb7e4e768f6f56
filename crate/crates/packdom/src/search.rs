//! Desk-scale search harnesses over the exhaustive enumeration and the
//! random generators: where is `i = 3ρ` tight, does any small subcubic
//! graph other than the three known exceptions have `γ > 2ρ`, and does
//! random probing at maximum degree 4 ever see `i > Δ·ρ`. Results are
//! evidence, not proof; everything is deterministic for fixed parameters.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{dom_number_bruteforce_with_cap, idom_number_bruteforce_with_cap};
use crate::enumerate::{are_isomorphic, enumerate_connected_subcubic_up_to};
use crate::error::Result;
use crate::generators;
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::packing::packing_number_bruteforce_with_cap;

/// Exact `(ρ, i, γ)` for one enumerated graph.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub graph6: String,
    pub n: usize,
    pub rho: usize,
    pub i: usize,
    pub gamma: usize,
}

/// Runs the three oracles over every connected subcubic graph with at most
/// `max_n` vertices. Work fans out over a thread pool; rows come back in
/// enumeration order regardless of scheduling.
pub fn oracle_sweep(max_n: usize) -> Result<Vec<(Graph, SweepRow)>> {
    let levels = enumerate_connected_subcubic_up_to(max_n)?;
    let graphs: Vec<Graph> = levels.into_iter().flatten().collect();
    let cap = max_n.max(crate::packing::DEFAULT_ORACLE_CAP);
    graphs
        .into_par_iter()
        .map(|g| {
            let row = SweepRow {
                graph6: encode_graph6(&g)?,
                n: g.n(),
                rho: packing_number_bruteforce_with_cap(&g, cap)?,
                i: idom_number_bruteforce_with_cap(&g, cap)?,
                gamma: dom_number_bruteforce_with_cap(&g, cap)?,
            };
            Ok((g, row))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Tight3Report {
    pub max_n: usize,
    pub graphs_checked: usize,
    /// Connected subcubic graphs with `i = 3ρ`, in enumeration order.
    pub tight: Vec<SweepRow>,
}

/// Lists every connected subcubic graph on at most `max_n` vertices whose
/// independent domination number equals three times its packing number.
pub fn search_tight3(max_n: usize) -> Result<Tight3Report> {
    let rows = oracle_sweep(max_n)?;
    let graphs_checked = rows.len();
    let tight = rows
        .into_iter()
        .filter(|(_, r)| r.i == 3 * r.rho)
        .map(|(_, r)| r)
        .collect();
    Ok(Tight3Report {
        max_n,
        graphs_checked,
        tight,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KnownException {
    pub name: String,
    pub row: SweepRow,
}

#[derive(Debug, Clone, Serialize)]
pub struct Conj2RhoReport {
    pub max_n: usize,
    pub graphs_checked: usize,
    /// Graphs with `γ > 2ρ` that are none of h1, wagner, petersen.
    pub violations: Vec<SweepRow>,
    /// The known exceptions, as encountered, with their oracle values.
    pub known_exceptions: Vec<KnownException>,
}

/// Sweeps for `γ > 2ρ`. The three known exceptional graphs are reported
/// separately from any genuine violation.
pub fn search_conj2rho(max_n: usize) -> Result<Conj2RhoReport> {
    let rows = oracle_sweep(max_n)?;
    let graphs_checked = rows.len();
    let known: [(&str, Graph); 3] = [
        ("h1", generators::h1()),
        ("wagner", generators::wagner()),
        ("petersen", generators::petersen()),
    ];
    let mut violations = Vec::new();
    let mut known_exceptions = Vec::new();
    for (g, row) in rows {
        if row.gamma <= 2 * row.rho {
            continue;
        }
        match known.iter().find(|(_, k)| are_isomorphic(&g, k)) {
            Some((name, _)) => known_exceptions.push(KnownException {
                name: (*name).to_string(),
                row,
            }),
            None => violations.push(row),
        }
    }
    Ok(Conj2RhoReport {
        max_n,
        graphs_checked,
        violations,
        known_exceptions,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Delta4Sample {
    pub seed: u64,
    pub graph6: String,
    pub n: usize,
    pub max_degree: usize,
    pub rho: usize,
    pub i: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Delta4Report {
    pub max_n: usize,
    pub seed: u64,
    pub budget: usize,
    pub samples: usize,
    /// Samples with `i > Δ·ρ` (none expected).
    pub counterexamples: Vec<Delta4Sample>,
}

/// Randomly probes connected graphs of maximum degree at most 4 for
/// `i > Δ·ρ`, spending `budget` samples with `2 ≤ n ≤ max_n`. Oracle-bound,
/// so `max_n` is capped like the oracles themselves.
pub fn search_delta4(max_n: usize, seed: u64, budget: usize) -> Result<Delta4Report> {
    let max_n = max_n.max(2);
    if max_n > crate::packing::DEFAULT_ORACLE_CAP {
        return Err(crate::error::Error::GuardExceeded {
            n: max_n,
            cap: crate::packing::DEFAULT_ORACLE_CAP,
        });
    }
    let counterexamples: Vec<Delta4Sample> = (0..budget as u64)
        .into_par_iter()
        .map(|i| -> Result<Option<Delta4Sample>> {
            let sample_seed = seed.wrapping_add(i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut rng = ChaCha8Rng::seed_from_u64(sample_seed);
            let n = rng.gen_range(2..=max_n);
            let g = generators::random_connected_max_degree(n, 4, sample_seed);
            let rho = packing_number_bruteforce_with_cap(&g, max_n)?;
            let idom = idom_number_bruteforce_with_cap(&g, max_n)?;
            let delta = g.max_degree();
            if idom > delta * rho {
                Ok(Some(Delta4Sample {
                    seed: sample_seed,
                    graph6: encode_graph6(&g)?,
                    n,
                    max_degree: delta,
                    rho,
                    i: idom,
                }))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<Option<Delta4Sample>>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Delta4Report {
        max_n,
        seed,
        budget,
        samples: budget,
        counterexamples,
    })
}
