//! Source-free orientations of multigraphs.
//!
//! Any multigraph whose components all have minimum degree 2 can be oriented
//! so that no vertex has in-degree 0. The construction is by repair: start
//! from an arbitrary orientation and, while a source `v` exists, find some
//! vertex `w` reachable from `v` with in-degree at least 2 and reverse a
//! directed `v → w` path. Each repair step strictly lowers the number of
//! sources and leaves the in- and out-degrees of every other vertex alone.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::multigraph::{Multigraph, Orientation};

/// One repair step: the path of edge ids that was reversed, leading from a
/// source to a vertex that had in-degree at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceEliminationStep {
    pub source: usize,
    pub target: usize,
    pub reversed_path: Vec<usize>,
}

/// Vertices reachable from `origin` by a directed path of length at least 1.
/// `origin` itself is a member exactly when it lies on a directed closed walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReachSet {
    pub origin: usize,
    pub members: VertexSet,
}

/// Directs every edge from its lower-indexed stored endpoint to the higher;
/// loops keep their stored order. Deterministic for a given multigraph.
pub fn orient_arbitrary(m: &Multigraph) -> Orientation {
    let forward = m.edges().iter().map(|e| e.u <= e.v).collect();
    Orientation::new(m.clone(), forward)
}

pub fn sources(d: &Orientation) -> VertexSet {
    d.sources()
}

/// Sorted out-arcs `(head, edge id)` per vertex; loops excluded since they
/// never extend a simple directed path.
fn out_arc_lists(d: &Orientation) -> Vec<Vec<(usize, usize)>> {
    let mut lists = vec![Vec::new(); d.n()];
    for (tail, head, e) in d.arcs() {
        if tail != head {
            lists[tail].push((head, e));
        }
    }
    for list in &mut lists {
        list.sort_unstable();
    }
    lists
}

/// Breadth-first search along arcs from `v`. Returns per-vertex parent edge
/// ids (`usize::MAX` for unreached or the origin) and the visit distances.
fn directed_bfs(d: &Orientation, v: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let lists = out_arc_lists(d);
    let mut parent = vec![usize::MAX; d.n()];
    let mut dist = vec![None; d.n()];
    dist[v] = Some(0);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &(head, e) in &lists[u] {
            if dist[head].is_none() {
                dist[head] = Some(du + 1);
                parent[head] = e;
                queue.push_back(head);
            }
        }
    }
    (parent, dist)
}

pub fn reach_plus(d: &Orientation, v: usize) -> Result<ReachSet> {
    if v >= d.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: d.n(),
        });
    }
    let lists = out_arc_lists(d);
    let mut members = VertexSet::empty(d.n());
    let mut seen = vec![false; d.n()];
    let mut queue = VecDeque::new();
    // Seed with the out-neighbors so that `v` itself only enters through a
    // closed walk. A loop at `v` is such a walk.
    for &(head, _) in &lists[v] {
        if !seen[head] {
            seen[head] = true;
            queue.push_back(head);
        }
    }
    if d.arcs().any(|(tail, head, _)| tail == v && head == v) {
        members.insert(v);
    }
    while let Some(u) = queue.pop_front() {
        members.insert(u);
        for &(head, _) in &lists[u] {
            if !seen[head] {
                seen[head] = true;
                queue.push_back(head);
            }
        }
    }
    Ok(ReachSet { origin: v, members })
}

/// Repairs the source `v`: reverses the breadth-first path from `v` to the
/// nearest reachable vertex of in-degree at least 2 (ties broken by lowest
/// vertex index). In the result neither `v` nor the target is a source and
/// every other vertex keeps its in- and out-degree.
pub fn eliminate_source(d: &Orientation, v: usize) -> Result<(Orientation, SourceEliminationStep)> {
    if v >= d.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: d.n(),
        });
    }
    if d.in_degree(v) != 0 {
        return Err(Error::NotASource { vertex: v });
    }
    let in_deg = d.in_degrees();
    let (parent, dist) = directed_bfs(d, v);
    let target = (0..d.n())
        .filter(|&w| w != v && dist[w].is_some() && in_deg[w] >= 2)
        .min_by_key(|&w| (dist[w].unwrap(), w));
    let Some(w) = target else {
        return Err(Error::inconsistency(
            "no reachable vertex of in-degree >= 2; the component cannot have minimum degree 2",
            serde_json::json!({ "source": v, "multigraph": d.multigraph() }),
        ));
    };
    // Walk the parent edges back from w to v.
    let mut path = Vec::new();
    let mut cur = w;
    while cur != v {
        let e = parent[cur];
        path.push(e);
        cur = if d.tail(e) == cur {
            d.head(e)
        } else {
            d.tail(e)
        };
    }
    path.reverse();
    let next = d.with_reversed(&path);
    debug_assert!(next.sources().len() < d.sources().len());
    Ok((
        next,
        SourceEliminationStep {
            source: v,
            target: w,
            reversed_path: path,
        },
    ))
}

/// Orients `m` with no sources. Requires every component to have minimum
/// degree at least 2 (a loop counts 2). The returned step list replays the
/// construction from the arbitrary initial orientation.
pub fn orient_no_sources(m: &Multigraph) -> Result<(Orientation, Vec<SourceEliminationStep>)> {
    for comp in m.components() {
        for &v in &comp {
            let deg = m.degree(v);
            if deg < 2 {
                return Err(Error::DegreeTooLow {
                    vertex: v,
                    degree: deg,
                });
            }
        }
    }
    let mut d = orient_arbitrary(m);
    let mut steps = Vec::new();
    loop {
        let srcs = d.sources();
        let Some(v) = srcs.iter().next() else {
            break;
        };
        let (next, step) = eliminate_source(&d, v)?;
        steps.push(step);
        d = next;
    }
    Ok((d, steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn arbitrary_orientation_points_low_to_high() {
        let d = orient_arbitrary(&triangle());
        let arcs: Vec<_> = d.arcs().map(|(t, h, _)| (t, h)).collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (0, 2)]);

        let double = Multigraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        let d = orient_arbitrary(&double);
        let arcs: Vec<_> = d.arcs().map(|(t, h, _)| (t, h)).collect();
        assert_eq!(arcs, vec![(0, 1), (0, 1)]);

        assert_eq!(orient_arbitrary(&Multigraph::new(0)).arcs().count(), 0);
    }

    #[test]
    fn sources_examples() {
        let d = orient_arbitrary(&triangle());
        assert_eq!(d.sources().as_slice(), &[0]);

        // Directed 3-cycle.
        let cyc = Orientation::new(
            Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            vec![true; 3],
        );
        assert!(cyc.sources().is_empty());

        let looped = Orientation::new(Multigraph::from_edges(1, &[(0, 0)]).unwrap(), vec![true]);
        assert!(looped.sources().is_empty());
    }

    #[test]
    fn reach_plus_examples() {
        let path = Orientation::new(
            Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(),
            vec![true, true],
        );
        assert_eq!(reach_plus(&path, 0).unwrap().members.as_slice(), &[1, 2]);

        let cyc = Orientation::new(
            Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            vec![true; 3],
        );
        assert_eq!(reach_plus(&cyc, 0).unwrap().members.as_slice(), &[0, 1, 2]);

        let isolated = Orientation::new(Multigraph::new(2), Vec::new());
        assert!(reach_plus(&isolated, 0).unwrap().members.is_empty());
    }

    #[test]
    fn eliminate_source_on_triangle() {
        let d = orient_arbitrary(&triangle());
        let (next, step) = eliminate_source(&d, 0).unwrap();
        assert_eq!(step.source, 0);
        assert_eq!(step.target, 2);
        assert!(next.sources().is_empty());
    }

    #[test]
    fn eliminate_source_on_double_edge() {
        let double = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let d = orient_arbitrary(&double);
        let (next, step) = eliminate_source(&d, 0).unwrap();
        assert_eq!((step.source, step.target), (0, 1));
        assert_eq!(step.reversed_path.len(), 1);
        assert!(next.sources().is_empty());
    }

    #[test]
    fn eliminate_source_on_c4() {
        let m = Multigraph::from_edges(4, &[(0, 1), (1, 2), (3, 2), (3, 0)]).unwrap();
        let d = Orientation::new(m, vec![true; 4]);
        assert_eq!(d.sources().as_slice(), &[3]);
        let before_in: Vec<_> = d.in_degrees();
        let (next, step) = eliminate_source(&d, 3).unwrap();
        assert_eq!((step.source, step.target), (3, 2));
        assert!(next.sources().is_empty());
        // Degrees elsewhere are preserved.
        let after_in = next.in_degrees();
        for v in 0..4 {
            if v != step.source && v != step.target {
                assert_eq!(before_in[v], after_in[v]);
            }
        }
    }

    #[test]
    fn eliminate_source_reverses_a_longer_path() {
        // 0 -> 1 -> 2 -> 3 -> 4 -> 2: the only in-degree-2 vertex sits two
        // arcs away from the source.
        let m = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = Orientation::new(m, vec![true, true, true, true, false]);
        assert_eq!(d.sources().as_slice(), &[0]);
        let (next, step) = eliminate_source(&d, 0).unwrap();
        assert_eq!(step.target, 2);
        assert_eq!(step.reversed_path, vec![0, 1]);
        assert!(next.sources().is_empty());
        for v in [1, 3, 4] {
            assert_eq!(d.in_degree(v), next.in_degree(v));
            assert_eq!(d.out_degree(v), next.out_degree(v));
        }
    }

    #[test]
    fn eliminate_source_rejects_non_source() {
        let d = orient_arbitrary(&triangle());
        assert!(matches!(
            eliminate_source(&d, 1),
            Err(Error::NotASource { vertex: 1 })
        ));
    }

    #[test]
    fn orient_no_sources_examples() {
        let (d, _) = orient_no_sources(&triangle()).unwrap();
        assert!(d.sources().is_empty());

        let double = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let (d, _) = orient_no_sources(&double).unwrap();
        assert!(d.sources().is_empty());
        let mut arcs: Vec<_> = d.arcs().map(|(t, h, _)| (t, h)).collect();
        arcs.sort_unstable();
        assert_eq!(arcs, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn orient_no_sources_rejects_low_degree() {
        let path = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            orient_no_sources(&path),
            Err(Error::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn orientation_preserves_edge_multiset_and_step_invariants() {
        // A dense little instance with parallels and a loop.
        let m = Multigraph::from_edges(
            5,
            &[
                (0, 1),
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (2, 2),
                (3, 4),
            ],
        )
        .unwrap();
        let (d, steps) = orient_no_sources(&m).unwrap();
        assert!(d.sources().is_empty());
        assert_eq!(d.multigraph().edge_multiset(), m.edge_multiset());

        // Replay: every step strictly decreases the source count and leaves
        // other degrees untouched.
        let mut cur = orient_arbitrary(&m);
        assert!(steps.len() <= cur.sources().len());
        for step in &steps {
            let next = cur.with_reversed(&step.reversed_path);
            assert!(next.sources().len() < cur.sources().len());
            for v in 0..m.n() {
                if v != step.source && v != step.target {
                    assert_eq!(cur.in_degree(v), next.in_degree(v));
                    assert_eq!(cur.out_degree(v), next.out_degree(v));
                }
            }
            cur = next;
        }
        assert_eq!(cur, d);
    }
}
