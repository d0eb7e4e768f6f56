//! Dominating sets, independent dominating sets, and exact brute-force
//! oracles for the domination number and the independent domination number.
//! The minimum searches run over sets of increasing size, so small optima
//! are found early; both guard at [`DEFAULT_ORACLE_CAP`] vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::packing::DEFAULT_ORACLE_CAP;

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

/// True iff every vertex is in `a` or adjacent to a member of `a`.
pub fn is_dominating(g: &Graph, a: &VertexSet) -> Result<bool> {
    check_set(g, a)?;
    let mut covered = a.marks();
    for u in a.iter() {
        for &v in g.neighbors(u) {
            covered[v] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

pub fn is_independent(g: &Graph, a: &VertexSet) -> Result<bool> {
    check_set(g, a)?;
    Ok(a.iter()
        .all(|u| g.neighbors(u).iter().all(|&v| !a.contains(v))))
}

/// True iff `a` is independent and dominates `g` — equivalently, iff `a` is
/// a maximal independent set.
pub fn is_independent_dominating(g: &Graph, a: &VertexSet) -> Result<bool> {
    Ok(is_independent(g, a)? && is_dominating(g, a)?)
}

/// Greedy maximal independent set scanning vertices in the given order. By
/// maximality the result dominates the graph.
pub fn greedy_maximal_independent_set_ordered(g: &Graph, order: &[usize]) -> Result<VertexSet> {
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
            blocked[v] = true;
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    debug_assert!(is_independent_dominating(g, &out).unwrap());
    Ok(out)
}

/// Greedy maximal independent set over a seeded pseudo-random vertex order
/// (ChaCha8-shuffled permutation of the identity).
pub fn greedy_maximal_independent_set(g: &Graph, seed: u64) -> VertexSet {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    greedy_maximal_independent_set_ordered(g, &order).expect("identity-derived order is valid")
}

fn closed_neighborhood_masks(g: &Graph) -> Vec<u64> {
    debug_assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &u| acc | (1 << u))
        })
        .collect()
}

/// Searches for a dominating set of size exactly `k`; lexicographically
/// least witness if one exists.
fn dominating_of_size(nb: &[u64], full: u64, k: usize) -> Option<Vec<usize>> {
    fn rec(
        nb: &[u64],
        full: u64,
        next: usize,
        left: usize,
        covered: u64,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let n = nb.len();
        if left == 0 {
            return covered == full;
        }
        if n - next < left {
            return false;
        }
        for v in next..=(n - left) {
            chosen.push(v);
            if rec(nb, full, v + 1, left - 1, covered | nb[v], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    rec(nb, full, 0, k, 0, &mut chosen).then_some(chosen)
}

/// Searches for an independent dominating set of size exactly `k`.
fn independent_dominating_of_size(nb: &[u64], full: u64, k: usize) -> Option<Vec<usize>> {
    fn rec(
        nb: &[u64],
        full: u64,
        next: usize,
        left: usize,
        covered: u64,
        blocked: u64,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let n = nb.len();
        if left == 0 {
            return covered == full;
        }
        if n - next < left {
            return false;
        }
        for v in next..=(n - left) {
            if blocked & (1 << v) != 0 {
                continue;
            }
            chosen.push(v);
            if rec(
                nb,
                full,
                v + 1,
                left - 1,
                covered | nb[v],
                blocked | nb[v],
                chosen,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    rec(nb, full, 0, k, 0, 0, &mut chosen).then_some(chosen)
}

/// Lexicographically least minimum dominating set.
pub fn min_dominating_set_with_cap(g: &Graph, cap: usize) -> Result<VertexSet> {
    check_cap(g, cap.min(64))?;
    let nb = closed_neighborhood_masks(g);
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    for k in 0..=g.n() {
        if let Some(witness) = dominating_of_size(&nb, full, k) {
            return VertexSet::from_members(g.n(), witness);
        }
    }
    unreachable!("the full vertex set dominates");
}

/// Exact domination number.
pub fn dom_number_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    Ok(min_dominating_set_with_cap(g, cap)?.len())
}

pub fn dom_number_bruteforce(g: &Graph) -> Result<usize> {
    dom_number_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}

/// Lexicographically least minimum independent dominating set, found by
/// enumerating independent sets in nondecreasing size and testing
/// domination.
pub fn min_independent_dominating_set_with_cap(g: &Graph, cap: usize) -> Result<VertexSet> {
    check_cap(g, cap.min(64))?;
    let nb = closed_neighborhood_masks(g);
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    for k in 0..=g.n() {
        if let Some(witness) = independent_dominating_of_size(&nb, full, k) {
            return VertexSet::from_members(g.n(), witness);
        }
    }
    unreachable!("every graph has a maximal independent set");
}

/// Exact independent domination number.
pub fn idom_number_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    Ok(min_independent_dominating_set_with_cap(g, cap)?.len())
}

pub fn idom_number_bruteforce(g: &Graph) -> Result<usize> {
    idom_number_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn vs(universe: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(universe, members.iter().copied()).unwrap()
    }

    #[test]
    fn independent_dominating_examples() {
        let k33 = generators::k33();
        assert!(is_independent_dominating(&k33, &vs(6, &[0, 1, 2])).unwrap());
        assert!(!is_independent_dominating(&k33, &vs(6, &[0, 3])).unwrap());

        let c5 = generators::cycle(5);
        assert!(is_independent_dominating(&c5, &vs(5, &[0, 2])).unwrap());
        assert!(!is_independent_dominating(&c5, &vs(5, &[0])).unwrap());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(idom_number_bruteforce(&generators::k33()).unwrap(), 3);
        assert_eq!(idom_number_bruteforce(&generators::cycle(5)).unwrap(), 2);
        assert_eq!(idom_number_bruteforce(&generators::petersen()).unwrap(), 3);

        assert_eq!(dom_number_bruteforce(&generators::k33()).unwrap(), 2);
        assert_eq!(dom_number_bruteforce(&generators::h1()).unwrap(), 3);
        assert_eq!(dom_number_bruteforce(&generators::cycle(6)).unwrap(), 2);
    }

    #[test]
    fn witnesses_are_lexicographically_least_and_valid() {
        for (name, g) in [
            ("petersen", generators::petersen()),
            ("wagner", generators::wagner()),
            ("c7", generators::cycle(7)),
        ] {
            let w = min_independent_dominating_set_with_cap(&g, 20).unwrap();
            assert!(is_independent_dominating(&g, &w).unwrap(), "{name}");
            let d = min_dominating_set_with_cap(&g, 20).unwrap();
            assert!(is_dominating(&g, &d).unwrap(), "{name}");
            assert!(d.len() <= w.len(), "{name}: gamma <= i violated");
        }
        // Lexicographic: C4's minimum independent dominating sets are
        // {0,2} and {1,3}; the reported witness must be {0,2}.
        let c4 = generators::cycle(4);
        assert_eq!(
            min_independent_dominating_set_with_cap(&c4, 20)
                .unwrap()
                .as_slice(),
            &[0, 2]
        );
    }

    #[test]
    fn gamma_at_most_i_on_random_instances() {
        for seed in 0..15 {
            let g = generators::random_subcubic(3 + (seed as usize) % 12, seed);
            let gamma = dom_number_bruteforce(&g).unwrap();
            let i = idom_number_bruteforce(&g).unwrap();
            assert!(gamma <= i, "seed {seed}");
        }
    }

    #[test]
    fn greedy_mis_examples() {
        let edgeless = Graph::empty(4);
        assert_eq!(
            greedy_maximal_independent_set_ordered(&edgeless, &[0, 1, 2, 3])
                .unwrap()
                .len(),
            4
        );

        let k33 = generators::k33();
        assert_eq!(
            greedy_maximal_independent_set_ordered(&k33, &[0, 1, 2, 3, 4, 5])
                .unwrap()
                .as_slice(),
            &[0, 1, 2]
        );

        let c4 = generators::cycle(4);
        assert_eq!(
            greedy_maximal_independent_set_ordered(&c4, &[0, 1, 2, 3])
                .unwrap()
                .as_slice(),
            &[0, 2]
        );

        for seed in 0..10 {
            let g = generators::random_subcubic(25, seed);
            let a = greedy_maximal_independent_set(&g, seed);
            assert!(is_independent_dominating(&g, &a).unwrap());
            assert_eq!(a, greedy_maximal_independent_set(&g, seed));
        }
    }

    #[test]
    fn oracle_guard_trips() {
        let g = generators::random_subcubic(30, 2);
        assert!(matches!(
            idom_number_bruteforce(&g),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            dom_number_bruteforce(&g),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
