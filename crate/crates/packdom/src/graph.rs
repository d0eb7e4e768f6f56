//! Simple undirected graphs with dense vertex indices and sorted adjacency,
//! plus the handful of traversal and decomposition primitives everything
//! else is built on.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// A set of vertices of a graph on `universe` vertices.
///
/// Members are kept sorted, so iteration order is deterministic and two sets
/// over the same universe compare by value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            universe,
            members: (0..universe).collect(),
        }
    }

    /// Builds a set from arbitrary (possibly unsorted, possibly duplicated)
    /// indices, rejecting anything outside `[0, universe)`.
    pub fn from_members(universe: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
        }
        Ok(VertexSet { universe, members })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Ok(pos) = self.members.binary_search(&v) {
            self.members.remove(pos);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        VertexSet {
            universe: self.universe,
            members,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Membership marks, indexed by vertex.
    pub fn marks(&self) -> Vec<bool> {
        let mut marks = vec![false; self.universe];
        for &v in &self.members {
            marks[v] = true;
        }
        marks
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.members.len()))?;
        for v in &self.members {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted; construction rejects loops, duplicate edges
/// and out-of-range endpoints, so a `Graph` value is always well formed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "loops are not allowed in a simple graph",
            });
        }
        if self.adj[u].contains(&v) {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "duplicate edge",
            });
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                set: s.universe(),
                graph: self.n,
            });
        }
        Ok(())
    }

    /// Breadth-first distances from `start`; `None` marks unreachable
    /// vertices rather than a sentinel that could alias a real distance.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path distance between `u` and `v`, `None` if disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        Ok(self.bfs_distances(u)[v])
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                block.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(VertexSet {
                universe: self.n,
                members: block,
            });
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `s`, together with the mapping from new vertex
    /// indices back to the originals.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map: Vec<usize> = s.iter().collect();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut sub = Graph::empty(map.len());
        for (new, &old) in map.iter().enumerate() {
            for &nb in &self.adj[old] {
                if inv[nb] != usize::MAX {
                    sub.adj[new].push(inv[nb]);
                }
            }
            sub.adj[new].sort_unstable();
        }
        Ok((sub, map))
    }
}

/// Decomposition of a graph of maximum degree at most 2 into cycles, paths
/// (with explicit end vertices) and isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTwoDecomposition {
    /// Each cycle as a closed walk's vertex sequence (first vertex is the
    /// smallest on the cycle; it is not repeated at the end).
    pub cycles: Vec<Vec<usize>>,
    /// Each path from one end vertex to the other, starting at the smaller
    /// end vertex. Single edges appear here as two-vertex paths.
    pub paths: Vec<Vec<usize>>,
    pub isolated: VertexSet,
}

/// Splits a graph with `Δ ≤ 2` into its cycle, path and isolated-vertex
/// components. Fails on any vertex of degree 3 or more.
pub fn decompose_deg_le2(h: &Graph) -> Result<DegreeTwoDecomposition> {
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) > 2) {
        return Err(Error::DegreeTooHigh {
            found: h.degree(v),
            limit: 2,
        });
    }
    let mut seen = vec![false; h.n()];
    let mut cycles = Vec::new();
    let mut paths = Vec::new();
    let mut isolated = VertexSet::empty(h.n());

    // Paths first: walk from each unvisited endpoint (degree ≤ 1).
    for start in 0..h.n() {
        if seen[start] || h.degree(start) > 1 {
            continue;
        }
        seen[start] = true;
        if h.degree(start) == 0 {
            isolated.insert(start);
            continue;
        }
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = h.neighbors(start)[0];
        loop {
            seen[cur] = true;
            walk.push(cur);
            let next = h.neighbors(cur).iter().copied().find(|&x| x != prev);
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        if walk[0] > *walk.last().unwrap() {
            walk.reverse();
        }
        paths.push(walk);
    }

    // Everything left unvisited lies on a cycle.
    for start in 0..h.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut walk = vec![start];
        let mut prev = start;
        // Deterministic direction: leave the smallest vertex towards its
        // smaller neighbor.
        let mut cur = h.neighbors(start)[0];
        while cur != start {
            seen[cur] = true;
            walk.push(cur);
            let next = h
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&x| x != prev)
                .expect("cycle vertex has two neighbors");
            prev = cur;
            cur = next;
        }
        cycles.push(walk);
    }

    cycles.sort();
    paths.sort();
    Ok(DegreeTwoDecomposition {
        cycles,
        paths,
        isolated,
    })
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}
