//! Undirected multigraphs (parallel edges and loops allowed) and edge
//! orientations over them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Where a derived multigraph edge came from: the index of a matching edge
/// in the originating graph, plus which matching endpoint sits next to which
/// stored endpoint (`near_u` is adjacent to the edge's `u`, `near_v` to its
/// `v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeProvenance {
    pub matching_edge: usize,
    pub near_u: usize,
    pub near_v: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiEdge {
    pub u: usize,
    pub v: usize,
    pub provenance: Option<EdgeProvenance>,
}

/// A multigraph on vertices `0..n`. Edge identities are dense indices into
/// the edge list; a loop contributes 2 to the degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<MultiEdge>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = Multigraph::new(n);
        for &(u, v) in edges {
            m.add_edge(u, v)?;
        }
        Ok(m)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        self.add_edge_with(u, v, None)
    }

    pub fn add_edge_with(
        &mut self,
        u: usize,
        v: usize,
        provenance: Option<EdgeProvenance>,
    ) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        self.edges.push(MultiEdge { u, v, provenance });
        Ok(self.edges.len() - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> &MultiEdge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].u == self.edges[e].v
    }

    /// Number of edge slots at `v`; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Incident edge ids per vertex; a loop appears once in its vertex list.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, e) in self.edges.iter().enumerate() {
            inc[e.u].push(id);
            if e.u != e.v {
                inc[e.v].push(id);
            }
        }
        inc
    }

    /// Connected components of the underlying graph, ordered by smallest
    /// member. Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &e in &inc[u] {
                    let other = if self.edges[e].u == u {
                        self.edges[e].v
                    } else {
                        self.edges[e].u
                    };
                    if !seen[other] {
                        seen[other] = true;
                        block.push(other);
                        queue.push_back(other);
                    }
                }
            }
            block.sort_unstable();
            comps.push(block);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Edge multiset disregarding identities and provenance, for equality
    /// checks between a multigraph and a reconstruction of it.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut ms: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        ms.sort_unstable();
        ms
    }
}

/// A direction for every edge of a multigraph. `forward[e]` means the edge
/// is directed from its stored `u` endpoint to its stored `v` endpoint; a
/// loop contributes 1 to both the in- and out-degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Multigraph,
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(graph: Multigraph, forward: Vec<bool>) -> Self {
        assert_eq!(graph.edge_count(), forward.len());
        Orientation { graph, forward }
    }

    pub fn multigraph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn tail(&self, e: usize) -> usize {
        let edge = self.graph.edge(e);
        if self.forward[e] {
            edge.u
        } else {
            edge.v
        }
    }

    pub fn head(&self, e: usize) -> usize {
        let edge = self.graph.edge(e);
        if self.forward[e] {
            edge.v
        } else {
            edge.u
        }
    }

    pub fn is_forward(&self, e: usize) -> bool {
        self.forward[e]
    }

    /// Arcs as `(tail, head, edge id)` triples in edge-id order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.graph.edge_count()).map(|e| (self.tail(e), self.head(e), e))
    }

    /// Number of arcs pointing at `v`; a loop at `v` counts once.
    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.graph.edge_count())
            .filter(|&e| self.head(e) == v)
            .count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.graph.edge_count())
            .filter(|&e| self.tail(e) == v)
            .count()
    }

    /// In-degrees of all vertices in one pass.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.graph.n()];
        for e in 0..self.graph.edge_count() {
            deg[self.head(e)] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.graph.n()];
        for e in 0..self.graph.edge_count() {
            deg[self.tail(e)] += 1;
        }
        deg
    }

    /// Vertices with in-degree 0. A vertex carrying a loop is never a
    /// source because its loop points at it.
    pub fn sources(&self) -> VertexSet {
        let deg = self.in_degrees();
        let mut out = VertexSet::empty(self.graph.n());
        for (v, &d) in deg.iter().enumerate() {
            if d == 0 {
                out.insert(v);
            }
        }
        out
    }

    /// A copy with the listed edges reversed.
    pub fn with_reversed(&self, edges: &[usize]) -> Orientation {
        let mut forward = self.forward.clone();
        for &e in edges {
            forward[e] = !forward[e];
        }
        Orientation {
            graph: self.graph.clone(),
            forward,
        }
    }

    pub fn into_multigraph(self) -> Multigraph {
        self.graph
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_counts_two_towards_degree() {
        let mut m = Multigraph::new(2);
        m.add_edge(0, 0).unwrap();
        m.add_edge(0, 1).unwrap();
        assert_eq!(m.degree(0), 3);
        assert_eq!(m.degree(1), 1);
        assert_eq!(m.min_degree(), 1);
    }

    #[test]
    fn loop_gives_in_and_out_degree_one() {
        let mut m = Multigraph::new(1);
        m.add_edge(0, 0).unwrap();
        let d = Orientation::new(m, vec![true]);
        assert_eq!(d.in_degree(0), 1);
        assert_eq!(d.out_degree(0), 1);
        assert!(d.sources().is_empty());
    }

    #[test]
    fn degree_sums_match_edge_count() {
        let m = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (3, 3)]).unwrap();
        let d = Orientation::new(m, vec![true, false, true, true]);
        let m = d.multigraph();
        let ins: usize = (0..m.n()).map(|v| d.in_degree(v)).sum();
        let outs: usize = (0..m.n()).map(|v| d.out_degree(v)).sum();
        assert_eq!(ins, m.edge_count());
        assert_eq!(ins, outs);
        assert_eq!(d.in_degrees(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn components_isolate_loops() {
        let m = Multigraph::from_edges(4, &[(0, 1), (2, 2)]).unwrap();
        let comps = m.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3]]);
    }
}
