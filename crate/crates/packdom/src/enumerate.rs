//! Isomorphism-free enumeration of small connected subcubic graphs.
//!
//! Graphs are grown one vertex at a time: every connected graph with at
//! least two vertices keeps a non-cut vertex, so every isomorphism class on
//! `k+1` vertices arises from some class on `k` vertices by attaching a new
//! vertex to a nonempty set of at most three vertices of degree at most 2.
//! Deduplication is a two-stage check: an iterated degree-refinement key
//! sorts candidates into buckets, and a backtracking isomorphism test
//! settles ties within a bucket. Guarded at [`ENUMERATION_CAP`] vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATION_CAP: usize = 10;

/// One round of color refinement: a vertex's new color hashes its old color
/// with the sorted multiset of its neighbors' old colors.
fn refine_round(g: &Graph, colors: &[u64]) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
            nb.sort_unstable();
            let mut h = fnv(0xcbf2_9ce4_8422_2325, colors[v]);
            for c in nb {
                h = fnv(h, c);
            }
            h
        })
        .collect()
}

fn fnv(state: u64, value: u64) -> u64 {
    let mut h = state;
    for byte in value.to_le_bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    h
}

/// Stable per-vertex colors after `n` refinement rounds.
pub(crate) fn refinement_colors(g: &Graph) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    for _ in 0..g.n() {
        colors = refine_round(g, &colors);
    }
    colors
}

/// Isomorphism-invariant bucket key: vertex and edge counts plus the sorted
/// refinement colors.
fn bucket_key(g: &Graph) -> Vec<u64> {
    let mut key = vec![g.n() as u64, g.edge_count() as u64];
    let mut colors = refinement_colors(g);
    colors.sort_unstable();
    key.extend(colors);
    key
}

/// Backtracking isomorphism test. Refinement colors restrict the candidate
/// images of every vertex, which keeps the search tiny on the bounded-degree
/// graphs handled here.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ca = refinement_colors(a);
    let cb = refinement_colors(b);
    {
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    let n = a.n();
    // Match scarce colors first.
    let mut color_count: HashMap<u64, usize> = HashMap::new();
    for &c in &ca {
        *color_count.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color_count[&ca[v]], v));

    struct IsoSearch<'a> {
        a: &'a Graph,
        b: &'a Graph,
        ca: &'a [u64],
        cb: &'a [u64],
        order: &'a [usize],
        image: Vec<usize>,
        used: Vec<bool>,
    }

    impl IsoSearch<'_> {
        fn extend(&mut self, pos: usize) -> bool {
            if pos == self.order.len() {
                return true;
            }
            let v = self.order[pos];
            'candidates: for w in 0..self.b.n() {
                if self.used[w] || self.cb[w] != self.ca[v] {
                    continue;
                }
                for &x in self.a.neighbors(v) {
                    if self.image[x] != usize::MAX && !self.b.has_edge(w, self.image[x]) {
                        continue 'candidates;
                    }
                }
                // Reverse check: a mapped preimage adjacent in b must be
                // adjacent in a. (Forward checks alone would also suffice
                // at full placement, since edge counts match.)
                for &y in self.b.neighbors(w) {
                    if let Some(x) = self.image.iter().position(|&im| im == y) {
                        if !self.a.has_edge(v, x) {
                            continue 'candidates;
                        }
                    }
                }
                self.image[v] = w;
                self.used[w] = true;
                if self.extend(pos + 1) {
                    return true;
                }
                self.image[v] = usize::MAX;
                self.used[w] = false;
            }
            false
        }
    }

    IsoSearch {
        a,
        b,
        ca: &ca,
        cb: &cb,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    }
    .extend(0)
}

/// All nonempty subsets of `candidates` with at most 3 elements.
fn attachment_sets(candidates: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let k = candidates.len();
    for i in 0..k {
        out.push(vec![candidates[i]]);
        for j in (i + 1)..k {
            out.push(vec![candidates[i], candidates[j]]);
            for l in (j + 1)..k {
                out.push(vec![candidates[i], candidates[j], candidates[l]]);
            }
        }
    }
    out
}

/// Every connected graph with maximum degree at most 3 on exactly `n`
/// vertices, one representative per isomorphism class, in deterministic
/// order.
pub fn enumerate_connected_subcubic(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_levels(n)?.pop().unwrap_or_default())
}

/// Same, but for every order `1..=n` at once (index 0 holds the graphs on
/// one vertex).
pub fn enumerate_connected_subcubic_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    enumerate_levels(n)
}

fn enumerate_levels(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::GuardExceeded {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(1)]];
    for k in 1..n {
        let mut next: Vec<Graph> = Vec::new();
        let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        for parent in &levels[k - 1] {
            let open: Vec<usize> = (0..k).filter(|&v| parent.degree(v) <= 2).collect();
            for attach in attachment_sets(&open) {
                let mut edges = parent.edges();
                for &u in &attach {
                    edges.push((u, k));
                }
                let candidate = Graph::from_edges(k + 1, &edges).expect("valid extension");
                let key = bucket_key(&candidate);
                let bucket = buckets.entry(key).or_default();
                if bucket.iter().any(|&i| are_isomorphic(&next[i], &candidate)) {
                    continue;
                }
                bucket.push(next.len());
                next.push(candidate);
            }
        }
        levels.push(next);
    }
    Ok(levels)
}
