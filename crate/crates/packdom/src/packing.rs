//! Packings: vertex sets whose members are pairwise at distance at least 3
//! (equivalently, whose closed neighborhoods are pairwise disjoint).
//! Validators work on graphs of any size; the exhaustive oracles guard at
//! [`DEFAULT_ORACLE_CAP`] vertices and refuse to run unbounded.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex cap for the exponential searches. Callers that know what they are
/// doing can use the `_with_cap` variants.
pub const DEFAULT_ORACLE_CAP: usize = 20;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::GuardExceeded { n: g.n(), cap });
    }
    Ok(())
}

fn check_set(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            set: s.universe(),
            graph: g.n(),
        });
    }
    Ok(())
}

/// Vertices within distance 2 of `v`, including `v`: the closed 2-ball.
fn ball2(g: &Graph, v: usize) -> Vec<usize> {
    let mut marks = vec![false; g.n()];
    marks[v] = true;
    for &u in g.neighbors(v) {
        marks[u] = true;
        for &w in g.neighbors(u) {
            marks[w] = true;
        }
    }
    marks
        .iter()
        .enumerate()
        .filter_map(|(x, &m)| m.then_some(x))
        .collect()
}

fn ball2_masks(g: &Graph) -> Vec<u64> {
    debug_assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| ball2(g, v).iter().fold(0u64, |acc, &x| acc | (1 << x)))
        .collect()
}

/// True iff all pairwise distances within `s` are at least 3. Checked two
/// ways (distances, and disjointness of closed neighborhoods) and
/// cross-asserted.
pub fn is_packing(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_set(g, s)?;
    let members: Vec<usize> = s.iter().collect();

    // Route 1: pairwise distance >= 3 via bounded BFS (2-balls).
    let mut by_distance = true;
    'outer: for (i, &u) in members.iter().enumerate() {
        let ball = ball2(g, u);
        for &v in &members[i + 1..] {
            if ball.binary_search(&v).is_ok() {
                by_distance = false;
                break 'outer;
            }
        }
    }

    // Route 2: closed neighborhoods pairwise disjoint.
    let mut owner = vec![usize::MAX; g.n()];
    let mut by_neighborhoods = true;
    'outer2: for &u in &members {
        for x in std::iter::once(u).chain(g.neighbors(u).iter().copied()) {
            if owner[x] != usize::MAX {
                by_neighborhoods = false;
                break 'outer2;
            }
            owner[x] = u;
        }
    }

    assert_eq!(
        by_distance, by_neighborhoods,
        "distance and neighborhood packing checks disagree"
    );
    Ok(by_distance)
}

/// True iff `s` is a packing and no outside vertex can be added while
/// keeping all pairwise distances at least 3.
pub fn is_maximal_packing(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !is_packing(g, s)? {
        return Err(Error::NotAPacking);
    }
    // v can be added iff no member lies within distance 2 of v.
    let mut blocked = vec![false; g.n()];
    for u in s.iter() {
        for x in ball2(g, u) {
            blocked[x] = true;
        }
    }
    Ok((0..g.n()).all(|v| s.contains(v) || blocked[v]))
}

/// Greedy maximal packing scanning vertices in the given order.
pub fn greedy_maximal_packing_ordered(g: &Graph, order: &[usize]) -> Result<VertexSet> {
    let mut blocked = vec![false; g.n()];
    let mut out = VertexSet::empty(g.n());
    for &v in order {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if !blocked[v] {
            out.insert(v);
            for x in ball2(g, v) {
                blocked[x] = true;
            }
        }
    }
    debug_assert!(is_maximal_packing(g, &out).unwrap());
    Ok(out)
}

/// Greedy maximal packing over a seeded pseudo-random vertex order
/// (ChaCha8-shuffled permutation of the identity).
pub fn greedy_maximal_packing(g: &Graph, seed: u64) -> VertexSet {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    greedy_maximal_packing_ordered(g, &order).expect("identity-derived order is valid")
}

/// Streams every maximal packing of `g` exactly once, in lexicographic
/// order of the member lists. Intended for graphs of at most
/// [`DEFAULT_ORACLE_CAP`] vertices.
pub fn maximal_packings(g: &Graph) -> Result<MaximalPackingIter<'_>> {
    check_cap(g, DEFAULT_ORACLE_CAP)?;
    Ok(MaximalPackingIter {
        g,
        balls: ball2_masks(g),
        full: (1u64 << g.n()) - 1,
        stack: vec![(0, Vec::new(), 0, 0)],
    })
}

/// Depth-first enumeration over increasing vertex indices. A node carries
/// `(next candidate, chosen, blocked mask, covered mask)`; a packing is
/// maximal exactly when its 2-balls cover every vertex.
pub struct MaximalPackingIter<'a> {
    g: &'a Graph,
    balls: Vec<u64>,
    full: u64,
    stack: Vec<(usize, Vec<usize>, u64, u64)>,
}

impl Iterator for MaximalPackingIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((next, chosen, blocked, covered)) = self.stack.pop() {
            if next == self.g.n() {
                if covered == self.full {
                    return Some(
                        VertexSet::from_members(self.g.n(), chosen).expect("members in range"),
                    );
                }
                continue;
            }
            // Explore "skip next" after "take next" once popped, so push the
            // skip branch first.
            self.stack
                .push((next + 1, chosen.clone(), blocked, covered));
            if blocked & (1 << next) == 0 {
                let mut with = chosen;
                with.push(next);
                self.stack.push((
                    next + 1,
                    with,
                    blocked | self.balls[next],
                    covered | self.balls[next],
                ));
            }
        }
        None
    }
}

/// First `limit` maximal packings in lexicographic order (all of them if
/// fewer exist).
pub fn enumerate_maximal_packings(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    Ok(maximal_packings(g)?.take(limit).collect())
}

/// Exact packing number by exhaustive search with distance-3 pruning.
pub fn packing_number_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    check_cap(g, cap.min(64))?;
    let balls = ball2_masks(g);
    fn rec(n: usize, balls: &[u64], next: usize, blocked: u64, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        if next == n || size + (n - next) <= *best {
            return;
        }
        if blocked & (1 << next) == 0 {
            rec(n, balls, next + 1, blocked | balls[next], size + 1, best);
        }
        rec(n, balls, next + 1, blocked, size, best);
    }
    let mut best = 0;
    rec(g.n(), &balls, 0, 0, 0, &mut best);
    Ok(best)
}

pub fn packing_number_bruteforce(g: &Graph) -> Result<usize> {
    packing_number_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}
