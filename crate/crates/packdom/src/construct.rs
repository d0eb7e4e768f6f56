//! The constructive pipeline: from a connected subcubic graph `G` and a
//! maximal packing `S` to an independent dominating set `Â` with
//! `|Â| ≤ 3·|S|`, recording a replayable trace.
//!
//! Outline. `N = N(S)` dominates `G` and induces a graph `H` of maximum
//! degree 2 (every `N`-vertex spends one edge on its unique `S`-neighbor).
//! `H` splits into cycles, paths and isolated vertices; the single-edge
//! paths form an induced matching `M` with endpoint set `W`. A set
//! `A ⊆ N` is kept that contains both endpoints of every longer path and is
//! a maximal independent set of `H`. The obstruction measure is
//! `X(A)`: degree-3 packing vertices whose whole neighborhood lies in `W`
//! and misses `A`. While `X(A)` is nonempty, an auxiliary multigraph `Q` on
//! the candidate obstructions (one edge per witnessing `M`-edge, loops
//! allowed and counting 2) either has a vertex of degree at most 2 — then a
//! path swap re-picks matched endpoints along a shortest `Q`-path and
//! removes exactly one obstruction — or is cubic, and flipping `A` along a
//! source-free orientation of the relevant components empties `X` outright.
//! Finally the packing vertices and outer vertices still undominated by `A`
//! are patched in, and a one-to-one size certificate is built.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::domination;
use crate::error::{Error, Result};
use crate::graph::{decompose_deg_le2, Graph, VertexSet};
use crate::matching::max_bipartite_matching;
use crate::multigraph::{EdgeProvenance, Multigraph};
use crate::orient;
use crate::packing;

fn serialize_partial_map<S: Serializer>(
    map: &[Option<usize>],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let pairs: Vec<(usize, usize)> = map
        .iter()
        .enumerate()
        .filter_map(|(v, s)| s.map(|s| (v, s)))
        .collect();
    let mut seq = serializer.serialize_seq(Some(pairs.len()))?;
    for p in &pairs {
        seq.serialize_element(p)?;
    }
    seq.end()
}

/// The static scaffolding shared by every step of a run.
#[derive(Debug, Clone, Serialize)]
pub struct Frame {
    /// The maximal packing `S`.
    pub packing: VertexSet,
    /// `N = N(S)`.
    #[serde(rename = "n")]
    pub n_set: VertexSet,
    /// `R = V \ N[S]`.
    #[serde(rename = "r")]
    pub r_set: VertexSet,
    /// Unique `S`-neighbor of each `N`-vertex.
    #[serde(serialize_with = "serialize_partial_map")]
    pub s_of: Vec<Option<usize>>,
    /// `H = G[N]` with its vertex mapping back to `G`.
    pub h: Graph,
    pub h_map: Vec<usize>,
    #[serde(skip)]
    pub h_inv: Vec<Option<usize>>,
    /// Decomposition of `H`, in `G` vertex ids.
    pub cycles: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
    pub isolated: VertexSet,
    /// The induced matching `M`: path components that are single edges.
    #[serde(rename = "m")]
    pub m_edges: Vec<(usize, usize)>,
    /// Endpoints of `M`.
    #[serde(rename = "w")]
    pub w_set: VertexSet,
    /// Involution pairing each `W`-vertex with its `M`-partner.
    #[serde(serialize_with = "serialize_partial_map")]
    pub partner: Vec<Option<usize>>,
}

impl Frame {
    /// Neighbors of `v` inside `H`, reported as `G` vertex ids.
    fn h_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let hv = self.h_inv[v].expect("vertex not in N");
        self.h.neighbors(hv).iter().map(move |&u| self.h_map[u])
    }

    fn h_degree(&self, v: usize) -> usize {
        match self.h_inv[v] {
            Some(hv) => self.h.degree(hv),
            None => 0,
        }
    }
}

/// A candidate set `A ⊆ N` together with its obstruction set `X(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ASet {
    pub members: VertexSet,
    pub x: VertexSet,
}

/// The auxiliary multigraph built from one `(A, frame)` state.
#[derive(Debug, Clone)]
pub struct QFrame {
    /// Vertices of `Q` in `G` ids: the degree-3 packing vertices whose whole
    /// neighborhood lies in `W`.
    pub vertices: Vec<usize>,
    /// Compact index per `G` id.
    pub vertex_index: Vec<Option<usize>>,
    /// `Q` itself, on compact indices; each edge's provenance names its
    /// witnessing `M`-edge and which endpoint hugs which side.
    pub q: Multigraph,
    /// Compact indices of the components that contain an `X(A)` vertex.
    pub qprime: Vec<usize>,
}

impl QFrame {
    pub fn qprime_gids(&self) -> Vec<usize> {
        self.qprime.iter().map(|&c| self.vertices[c]).collect()
    }
}

/// What a single improvement step did, in `G` vertex ids.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum StepDescriptor {
    Initial,
    PathSwap {
        v: usize,
        w: usize,
        q_path: Vec<usize>,
        u2: usize,
        v2: usize,
        removed: Vec<usize>,
        added: Vec<usize>,
    },
    OrientationFlip {
        arcs: Vec<FlipArc>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct FlipArc {
    pub tail: usize,
    pub head: usize,
    pub matching_edge: usize,
    pub removed: usize,
    pub added: usize,
    pub is_loop: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AStep {
    pub a: VertexSet,
    pub x: VertexSet,
    pub step: StepDescriptor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InjectionPart {
    N,
    S1,
    S2,
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectionPair {
    pub source: usize,
    pub target: usize,
    pub part: InjectionPart,
}

/// A verified one-to-one map from `Â` into `N ⊔ S₁ ⊔ S₂`.
#[derive(Debug, Clone, Serialize)]
pub struct Injection {
    pub pairs: Vec<InjectionPair>,
}

/// Size accounting for one component run. Degree histograms are recorded
/// both over `S'` and over all of `S`, since only the latter makes
/// `|N| ≤ |S₁| + 2|S₂| + 3|S₃|` unconditional; the final bound is asserted
/// directly and does not depend on either reading.
#[derive(Debug, Clone, Serialize)]
pub struct SizeAudit {
    pub n_size: usize,
    pub a_size: usize,
    pub s_prime_size: usize,
    pub z_size: usize,
    pub a_hat_size: usize,
    pub bound: usize,
    pub s_prime_by_degree: [usize; 4],
    pub s_by_degree: [usize; 4],
}

/// Full record of one connected-component run.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructionTrace {
    pub frame: Frame,
    pub a_history: Vec<AStep>,
    pub s_prime: VertexSet,
    pub t: VertexSet,
    pub z: VertexSet,
    pub a_hat: VertexSet,
    pub injection: Option<Injection>,
    pub anomalies: Vec<String>,
    pub sizes: SizeAudit,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ComponentOutcome {
    /// An isolated vertex: it lies in the packing and maps to itself.
    SingleVertex { vertex: usize },
    /// A full pipeline run, in component-local vertex ids.
    Constructed { trace: Box<ConstructionTrace> },
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentTrace {
    /// Component-local id to global vertex id.
    pub vertex_map: Vec<usize>,
    pub outcome: ComponentOutcome,
}

/// Result of a whole run: the independent dominating set, its certified
/// bound `3·|S|`, and one trace per component.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructOutcome {
    pub a_hat: VertexSet,
    pub bound: usize,
    pub packing_size: usize,
    pub components: Vec<ComponentTrace>,
}

fn inconsistency_ctx(frame: &Frame, extra: serde_json::Value) -> serde_json::Value {
    serde_json::json!({ "frame": frame, "detail": extra })
}

/// Builds the static frame. `g` must be connected with at least two
/// vertices and maximum degree 3; `s` must be a maximal packing.
pub fn build_frame(g: &Graph, s: &VertexSet) -> Result<Frame> {
    if g.n() < 2 {
        return Err(Error::InfeasibleParameters(
            "frame needs at least two vertices; single vertices are handled by construct".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.max_degree() > 3 {
        return Err(Error::DegreeTooHigh {
            found: g.max_degree(),
            limit: 3,
        });
    }
    if !packing::is_maximal_packing(g, s)? {
        return Err(Error::NotMaximalPacking);
    }

    let mut s_of: Vec<Option<usize>> = vec![None; g.n()];
    let mut n_members = Vec::new();
    for sv in s.iter() {
        for &v in g.neighbors(sv) {
            match s_of[v] {
                None => {
                    s_of[v] = Some(sv);
                    n_members.push(v);
                }
                Some(_) => {
                    return Err(Error::inconsistency(
                        "an N-vertex has two packing neighbors",
                        serde_json::json!({ "vertex": v }),
                    ))
                }
            }
        }
    }
    let n_set = VertexSet::from_members(g.n(), n_members)?;
    if !n_set.is_disjoint(s) {
        return Err(Error::inconsistency(
            "packing vertices are pairwise non-adjacent, so S and N(S) must be disjoint",
            serde_json::json!({ "s": s, "n": n_set }),
        ));
    }
    let mut r_set = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if !s.contains(v) && !n_set.contains(v) {
            r_set.insert(v);
        }
    }
    if !domination::is_dominating(g, &n_set)? {
        return Err(Error::inconsistency(
            "N(S) fails to dominate a connected graph despite S being a maximal packing",
            serde_json::json!({ "s": s, "n": n_set }),
        ));
    }

    let (h, h_map) = g.induced_subgraph(&n_set)?;
    if h.max_degree() > 2 {
        return Err(Error::inconsistency(
            "G[N] has a vertex of degree 3",
            serde_json::json!({ "n": n_set }),
        ));
    }
    let mut h_inv = vec![None; g.n()];
    for (new, &old) in h_map.iter().enumerate() {
        h_inv[old] = Some(new);
    }
    let dec = decompose_deg_le2(&h)?;
    let to_g = |walk: &Vec<usize>| walk.iter().map(|&v| h_map[v]).collect::<Vec<usize>>();
    let cycles: Vec<Vec<usize>> = dec.cycles.iter().map(to_g).collect();
    let paths: Vec<Vec<usize>> = dec.paths.iter().map(to_g).collect();
    let isolated = VertexSet::from_members(g.n(), dec.isolated.iter().map(|v| h_map[v]))?;

    let mut m_edges: Vec<(usize, usize)> = paths
        .iter()
        .filter(|p| p.len() == 2)
        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
        .collect();
    m_edges.sort_unstable();
    let mut partner = vec![None; g.n()];
    let mut w_members = Vec::new();
    for &(a, b) in &m_edges {
        partner[a] = Some(b);
        partner[b] = Some(a);
        w_members.push(a);
        w_members.push(b);
    }
    let w_set = VertexSet::from_members(g.n(), w_members)?;

    Ok(Frame {
        packing: s.clone(),
        n_set,
        r_set,
        s_of,
        h,
        h_map,
        h_inv,
        cycles,
        paths,
        isolated,
        m_edges,
        w_set,
        partner,
    })
}

/// `X(B)` for `B ⊆ N`: packing vertices of degree 3 whose neighborhood is
/// contained in `(N \ B) ∩ W`.
pub fn x_of(g: &Graph, frame: &Frame, b: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for sv in frame.packing.iter() {
        if g.degree(sv) != 3 {
            continue;
        }
        if g.neighbors(sv)
            .iter()
            .all(|&v| frame.w_set.contains(v) && !b.contains(v))
        {
            out.insert(sv);
        }
    }
    out
}

/// Checks the two standing conditions on a candidate `A`: it contains both
/// endpoints of every `H`-path on 3 or more vertices, and it is a maximal
/// independent set of `H`.
pub fn check_conditions(g: &Graph, frame: &Frame, members: &VertexSet) -> Result<()> {
    let fail = |msg: &str, detail: serde_json::Value| {
        Err(Error::inconsistency(
            format!("candidate A violates its invariant: {msg}"),
            inconsistency_ctx(frame, detail),
        ))
    };
    if members.universe() != g.n() {
        return fail("universe mismatch", serde_json::json!({}));
    }
    if !members.is_subset(&frame.n_set) {
        return fail(
            "A must be a subset of N",
            serde_json::json!({ "a": members }),
        );
    }
    for path in &frame.paths {
        if path.len() >= 3 {
            let (a, b) = (path[0], *path.last().unwrap());
            if !members.contains(a) || !members.contains(b) {
                return fail(
                    "missing an endpoint of a long H-path",
                    serde_json::json!({ "path": path, "a": members }),
                );
            }
        }
    }
    for v in members.iter() {
        if frame.h_neighbors(v).any(|u| members.contains(u)) {
            return fail(
                "A is not independent in H",
                serde_json::json!({ "vertex": v, "a": members }),
            );
        }
    }
    for v in frame.n_set.iter() {
        if !members.contains(v) && !frame.h_neighbors(v).any(|u| members.contains(u)) {
            return fail(
                "A is not maximal independent in H",
                serde_json::json!({ "vertex": v, "a": members }),
            );
        }
    }
    Ok(())
}

fn aset_from_members(g: &Graph, frame: &Frame, members: VertexSet) -> Result<ASet> {
    check_conditions(g, frame, &members)?;
    let x = x_of(g, frame, &members);
    Ok(ASet { members, x })
}

/// The deterministic starting set: endpoints of every long `H`-path, every
/// isolated `H`-vertex, then a greedy lowest-index-first completion to a
/// maximal independent set of `H` (each `M`-edge contributes its lower
/// endpoint; cycles fill greedily).
pub fn initial_a(g: &Graph, frame: &Frame) -> Result<ASet> {
    let mut members = frame.isolated.clone();
    for path in &frame.paths {
        if path.len() >= 3 {
            members.insert(path[0]);
            members.insert(*path.last().unwrap());
        }
    }
    for v in frame.n_set.iter() {
        if !members.contains(v) && !frame.h_neighbors(v).any(|u| members.contains(u)) {
            members.insert(v);
        }
    }
    aset_from_members(g, frame, members)
}

/// Builds `Q` on the degree-3 packing vertices whose whole neighborhood is
/// inside `W`: one edge per `M`-edge both of whose endpoints hug such
/// vertices (a loop when both hug the same one), plus the sub-collection
/// `Q'` of components that contain an `X(A)` vertex.
pub fn build_q(g: &Graph, frame: &Frame, a: &ASet) -> Result<QFrame> {
    let n_minus_w = frame.n_set.difference(&frame.w_set);
    let x_nw = x_of(g, frame, &n_minus_w);
    debug_assert!(a.x.is_subset(&x_nw));

    let vertices: Vec<usize> = x_nw.iter().collect();
    let mut vertex_index = vec![None; g.n()];
    for (idx, &v) in vertices.iter().enumerate() {
        vertex_index[v] = Some(idx);
    }
    let mut q = Multigraph::new(vertices.len());
    for (mi, &(ea, eb)) in frame.m_edges.iter().enumerate() {
        let sa = frame.s_of[ea].expect("M endpoints lie in N");
        let sb = frame.s_of[eb].expect("M endpoints lie in N");
        if let (Some(ca), Some(cb)) = (vertex_index[sa], vertex_index[sb]) {
            q.add_edge_with(
                ca,
                cb,
                Some(EdgeProvenance {
                    matching_edge: mi,
                    near_u: ea,
                    near_v: eb,
                }),
            )?;
        }
    }
    let mut qprime = Vec::new();
    for comp in q.components() {
        if comp.iter().any(|&c| a.x.contains(vertices[c])) {
            qprime.extend(comp);
        }
    }
    qprime.sort_unstable();
    Ok(QFrame {
        vertices,
        vertex_index,
        q,
        qprime,
    })
}

/// Shortest path in `Q` from `from` to the nearest `X(A)` vertex, as
/// compact vertex ids plus the edge ids between them. Breadth-first with
/// neighbors scanned in (vertex, edge) order; ties go to the lowest vertex.
fn nearest_x_path(qf: &QFrame, a: &ASet, from: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); qf.q.n()];
    for (id, e) in qf.q.edges().iter().enumerate() {
        if e.u != e.v {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let mut parent_edge = vec![usize::MAX; qf.q.n()];
    let mut parent = vec![usize::MAX; qf.q.n()];
    let mut dist = vec![None; qf.q.n()];
    dist[from] = Some(0usize);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &(other, id) in &adjacency[u] {
            if dist[other].is_none() {
                dist[other] = Some(dist[u].unwrap() + 1);
                parent[other] = u;
                parent_edge[other] = id;
                queue.push_back(other);
            }
        }
    }
    let target = (0..qf.q.n())
        .filter(|&c| dist[c].is_some() && a.x.contains(qf.vertices[c]))
        .min_by_key(|&c| (dist[c].unwrap(), c))?;
    let mut vertices = vec![target];
    let mut edges = Vec::new();
    let mut cur = target;
    while cur != from {
        edges.push(parent_edge[cur]);
        cur = parent[cur];
        vertices.push(cur);
    }
    vertices.reverse();
    edges.reverse();
    Some((vertices, edges))
}

/// The swap improvement at a `Q'`-vertex `v` of degree at most 2. Walks the
/// shortest `Q`-path from `v` to the nearest obstruction `w` (`w = v` when
/// `v` is itself one), trades the matched endpoints along it, and replaces
/// one further matched neighbor of `v` whose partner can never be part of
/// an obstruction. Exactly `w` leaves `X`.
pub fn path_swap(
    g: &Graph,
    frame: &Frame,
    a: &ASet,
    qf: &QFrame,
    v: usize,
) -> Result<(ASet, StepDescriptor)> {
    let fail = |msg: String, detail: serde_json::Value| -> Error {
        Error::inconsistency(msg, inconsistency_ctx(frame, detail))
    };
    let vc = qf.vertex_index[v]
        .filter(|c| qf.qprime.binary_search(c).is_ok())
        .ok_or_else(|| {
            fail(
                format!("path_swap target {v} is not a Q' vertex"),
                serde_json::json!({}),
            )
        })?;
    if qf.q.degree(vc) > 2 {
        return Err(fail(
            format!("path_swap target {v} has Q-degree {}", qf.q.degree(vc)),
            serde_json::json!({}),
        ));
    }
    if a.x.is_empty() {
        return Err(fail("path_swap with empty X".into(), serde_json::json!({})));
    }

    let (path_compact, path_edges) = if a.x.contains(v) {
        (vec![vc], Vec::new())
    } else {
        nearest_x_path(qf, a, vc).ok_or_else(|| {
            fail(
                format!("no obstruction reachable from {v} inside Q'"),
                serde_json::json!({ "x": &a.x }),
            )
        })?
    };
    let path_gids: Vec<usize> = path_compact.iter().map(|&c| qf.vertices[c]).collect();
    let w = *path_gids.last().unwrap();

    // Matched endpoints along the path: x_i hugs w_i, y_i hugs w_{i+1}.
    let mut swap_out = Vec::new();
    let mut swap_in = Vec::new();
    for (i, &e) in path_edges.iter().enumerate() {
        let edge = qf.q.edge(e);
        let prov = edge.provenance.expect("Q edges carry provenance");
        let (xi, yi) = if edge.u == path_compact[i] {
            (prov.near_u, prov.near_v)
        } else {
            (prov.near_v, prov.near_u)
        };
        swap_out.push(xi);
        swap_in.push(yi);
    }

    // u2: a matched neighbor of v whose partner has no neighbor among the
    // Q vertices. Degree at most 2 guarantees one exists.
    let u2 = g
        .neighbors(v)
        .iter()
        .copied()
        .find(|&u| {
            frame.partner[u].is_some_and(|p| {
                g.neighbors(p)
                    .iter()
                    .all(|&nb| qf.vertex_index[nb].is_none())
            })
        })
        .ok_or_else(|| {
            fail(
                format!("no qualifying replacement neighbor at {v}"),
                serde_json::json!({ "neighbors": g.neighbors(v), "q_vertices": &qf.vertices }),
            )
        })?;
    let v2 = frame.partner[u2].expect("u2 is matched");

    let mut members = a.members.clone();
    members.remove(v2);
    for &x in &swap_out {
        members.remove(x);
    }
    members.insert(u2);
    for &y in &swap_in {
        members.insert(y);
    }

    let next = aset_from_members(g, frame, members)?;
    let mut expected = a.x.clone();
    expected.remove(w);
    if next.x != expected {
        return Err(fail(
            "path swap did not remove exactly its target obstruction".into(),
            serde_json::json!({ "before": &a.x, "after": &next.x, "w": w }),
        ));
    }

    let mut removed = vec![v2];
    removed.extend_from_slice(&swap_out);
    let mut added = vec![u2];
    added.extend_from_slice(&swap_in);
    let step = StepDescriptor::PathSwap {
        v,
        w,
        q_path: path_gids,
        u2,
        v2,
        removed,
        added,
    };
    Ok((next, step))
}

/// The flip improvement when `Q'` is cubic: orient `Q'` without sources and
/// move every matched pair from its tail-hugging endpoint to its
/// head-hugging endpoint. Every vertex of `Q'` has an in-arc, so every
/// obstruction gains an `A`-neighbor and `X` empties. An empty `Q'` flips
/// nothing and returns `A` unchanged (only possible when `X` was already
/// empty, since obstructions sit inside `Q'`).
pub fn orientation_flip(
    g: &Graph,
    frame: &Frame,
    a: &ASet,
    qf: &QFrame,
) -> Result<(ASet, StepDescriptor)> {
    let fail = |msg: String, detail: serde_json::Value| -> Error {
        Error::inconsistency(msg, inconsistency_ctx(frame, detail))
    };
    for &c in &qf.qprime {
        if qf.q.degree(c) != 3 {
            return Err(fail(
                format!(
                    "orientation_flip needs a cubic Q', but vertex {} has degree {}",
                    qf.vertices[c],
                    qf.q.degree(c)
                ),
                serde_json::json!({}),
            ));
        }
    }

    // Extract Q' with its provenance, remembering original edge ids.
    let mut compact = vec![None; qf.q.n()];
    for (i, &c) in qf.qprime.iter().enumerate() {
        compact[c] = Some(i);
    }
    let mut sub = Multigraph::new(qf.qprime.len());
    for e in qf.q.edges() {
        if let (Some(cu), Some(cv)) = (compact[e.u], compact[e.v]) {
            sub.add_edge_with(cu, cv, e.provenance)?;
        }
    }
    let (oriented, _steps) = orient::orient_no_sources(&sub)?;

    let mut arcs = Vec::new();
    let mut members = a.members.clone();
    for (sub_id, edge) in sub.edges().iter().enumerate() {
        let prov = edge.provenance.expect("Q edges carry provenance");
        let forward = oriented.is_forward(sub_id);
        let (removed_v, added_v) = if forward {
            (prov.near_u, prov.near_v)
        } else {
            (prov.near_v, prov.near_u)
        };
        let tail_g = qf.vertices[qf.qprime[oriented.tail(sub_id)]];
        let head_g = qf.vertices[qf.qprime[oriented.head(sub_id)]];
        arcs.push(FlipArc {
            tail: tail_g,
            head: head_g,
            matching_edge: prov.matching_edge,
            removed: removed_v,
            added: added_v,
            is_loop: edge.u == edge.v,
        });
        members.remove(removed_v);
        members.insert(added_v);
    }

    let next = aset_from_members(g, frame, members)?;
    if !next.x.is_empty() {
        return Err(fail(
            "orientation flip left obstructions behind".into(),
            serde_json::json!({ "x": &next.x }),
        ));
    }
    Ok((next, StepDescriptor::OrientationFlip { arcs }))
}

/// Drives the improvement loop until `X(A)` is empty. Each pass either
/// swaps at the lowest `Q'`-vertex of degree at most 2 (removing exactly
/// one obstruction) or, with `Q'` cubic, flips along a source-free
/// orientation (removing all of them).
pub fn minimize_x(
    g: &Graph,
    frame: &Frame,
    start: ASet,
) -> Result<(ASet, Vec<AStep>, Vec<String>)> {
    let mut a = start;
    let mut steps = Vec::new();
    let mut anomalies = Vec::new();
    let budget = a.x.len() + 1;
    for _ in 0..=budget {
        if a.x.is_empty() {
            return Ok((a, steps, anomalies));
        }
        let qf = build_q(g, frame, &a)?;
        let low = qf
            .qprime
            .iter()
            .copied()
            .filter(|&c| qf.q.degree(c) <= 2)
            .min_by_key(|&c| qf.vertices[c]);
        let before = a.x.len();
        let (next, step) = match low {
            Some(c) => path_swap(g, frame, &a, &qf, qf.vertices[c])?,
            None => {
                let (next, step) = orientation_flip(g, frame, &a, &qf)?;
                if let StepDescriptor::OrientationFlip { arcs } = &step {
                    for arc in arcs {
                        if arc.is_loop {
                            anomalies.push(format!(
                                "orientation flip crossed a loop at packing vertex {} (matching edge {})",
                                arc.tail, arc.matching_edge
                            ));
                        }
                    }
                }
                (next, step)
            }
        };
        if next.x.len() >= before {
            return Err(Error::inconsistency(
                "improvement step failed to shrink X",
                inconsistency_ctx(
                    frame,
                    serde_json::json!({ "before": before, "after": next.x.len() }),
                ),
            ));
        }
        steps.push(AStep {
            a: next.members.clone(),
            x: next.x.clone(),
            step,
        });
        a = next;
    }
    Err(Error::inconsistency(
        "improvement loop exceeded its budget",
        inconsistency_ctx(frame, serde_json::json!({ "budget": budget })),
    ))
}

/// Output of [`finalize`], before injection bookkeeping.
#[derive(Debug, Clone)]
pub struct Finalized {
    pub s_prime: VertexSet,
    pub t: VertexSet,
    pub z: VertexSet,
    pub a_hat: VertexSet,
}

/// Patches the finished `A` into an independent dominating set: adds the
/// packing vertices with no `A`-neighbor and an independent dominating set
/// of the still-undominated outer vertices, then asserts independence,
/// domination and the `3·|S|` bound.
pub fn finalize(g: &Graph, frame: &Frame, a: &ASet) -> Result<Finalized> {
    if !a.x.is_empty() {
        return Err(Error::inconsistency(
            "finalize requires an empty obstruction set",
            inconsistency_ctx(frame, serde_json::json!({ "x": &a.x })),
        ));
    }
    check_conditions(g, frame, &a.members)?;

    let undominated = |v: usize| !g.neighbors(v).iter().any(|&u| a.members.contains(u));
    let s_prime = VertexSet::from_members(g.n(), frame.packing.iter().filter(|&v| undominated(v)))?;
    let t = VertexSet::from_members(g.n(), frame.r_set.iter().filter(|&v| undominated(v)))?;

    let (gt, t_map) = g.induced_subgraph(&t)?;
    let order: Vec<usize> = (0..gt.n()).collect();
    let z_local = domination::greedy_maximal_independent_set_ordered(&gt, &order)?;
    let z = VertexSet::from_members(g.n(), z_local.iter().map(|v| t_map[v]))?;

    let a_hat = a.members.union(&s_prime).union(&z);
    debug_assert_eq!(a_hat.len(), a.members.len() + s_prime.len() + z.len());

    if !domination::is_independent_dominating(g, &a_hat)? {
        return Err(Error::inconsistency(
            "final set is not an independent dominating set",
            inconsistency_ctx(
                frame,
                serde_json::json!({ "a": &a.members, "s_prime": &s_prime, "z": &z }),
            ),
        ));
    }
    let bound = 3 * frame.packing.len();
    if a_hat.len() > bound {
        return Err(Error::inconsistency(
            "final set exceeds the 3|S| bound",
            inconsistency_ctx(
                frame,
                serde_json::json!({ "size": a_hat.len(), "bound": bound }),
            ),
        ));
    }
    Ok(Finalized {
        s_prime,
        t,
        z,
        a_hat,
    })
}

/// Builds the one-to-one size certificate `Â → N ⊔ S₁ ⊔ S₂`: identity on
/// `A` and on the degree-1 and degree-2 members of `S'`; degree-3 members
/// of `S'` map to a neighbor with two `N`-neighbors; members of `Z` map to
/// an `N`-neighbor. A maximum bipartite matching picks pairwise-distinct
/// targets; failure to match perfectly is reported, never repaired.
pub fn size_injection(g: &Graph, frame: &Frame, fin: &Finalized, a: &ASet) -> Result<Injection> {
    let mut pairs = Vec::new();
    for v in a.members.iter() {
        pairs.push(InjectionPair {
            source: v,
            target: v,
            part: InjectionPart::N,
        });
    }
    let mut left: Vec<usize> = Vec::new();
    for sv in fin.s_prime.iter() {
        match g.degree(sv) {
            1 => pairs.push(InjectionPair {
                source: sv,
                target: sv,
                part: InjectionPart::S1,
            }),
            2 => pairs.push(InjectionPair {
                source: sv,
                target: sv,
                part: InjectionPart::S2,
            }),
            3 => left.push(sv),
            d => {
                return Err(Error::inconsistency(
                    format!("packing vertex {sv} has degree {d} in a connected graph"),
                    inconsistency_ctx(frame, serde_json::json!({})),
                ))
            }
        }
    }
    let s3_count = left.len();
    left.extend(fin.z.iter());

    // Candidate targets per left vertex.
    let candidates: Vec<Vec<usize>> = left
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if i < s3_count {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&c| frame.h_degree(c) == 2)
                    .collect()
            } else {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&c| frame.n_set.contains(c))
                    .collect()
            }
        })
        .collect();
    let mut targets: Vec<usize> = candidates.iter().flatten().copied().collect();
    targets.sort_unstable();
    targets.dedup();
    let target_index = |v: usize| targets.binary_search(&v).unwrap();
    let adj: Vec<Vec<usize>> = candidates
        .iter()
        .map(|list| list.iter().map(|&c| target_index(c)).collect())
        .collect();
    let matched = max_bipartite_matching(left.len(), targets.len(), &adj);
    for (i, m) in matched.iter().enumerate() {
        let Some(t) = m else {
            return Err(Error::inconsistency(
                format!(
                    "no perfect matching for the size certificate (vertex {} unmatched)",
                    left[i]
                ),
                inconsistency_ctx(
                    frame,
                    serde_json::json!({ "left": &left, "candidates": &candidates }),
                ),
            ));
        };
        let target = targets[*t];
        if a.members.contains(target) {
            return Err(Error::inconsistency(
                format!("size-certificate target {target} collides with A"),
                inconsistency_ctx(frame, serde_json::json!({})),
            ));
        }
        pairs.push(InjectionPair {
            source: left[i],
            target,
            part: InjectionPart::N,
        });
    }

    // Injectivity per codomain part.
    let mut n_targets: Vec<usize> = pairs
        .iter()
        .filter(|p| p.part == InjectionPart::N)
        .map(|p| p.target)
        .collect();
    let before = n_targets.len();
    n_targets.sort_unstable();
    n_targets.dedup();
    if n_targets.len() != before || n_targets.iter().any(|&t| !frame.n_set.contains(t)) {
        return Err(Error::inconsistency(
            "size certificate is not injective into N",
            inconsistency_ctx(frame, serde_json::json!({ "pairs_into_n": before })),
        ));
    }
    Ok(Injection { pairs })
}

fn degree_histogram(g: &Graph, set: &VertexSet) -> [usize; 4] {
    let mut h = [0usize; 4];
    for v in set.iter() {
        h[g.degree(v).min(3)] += 1;
    }
    h
}

fn run_component(g: &Graph, s: &VertexSet) -> Result<ConstructionTrace> {
    let frame = build_frame(g, s)?;
    let a0 = initial_a(g, &frame)?;
    let mut a_history = vec![AStep {
        a: a0.members.clone(),
        x: a0.x.clone(),
        step: StepDescriptor::Initial,
    }];
    let (a, steps, mut anomalies) = minimize_x(g, &frame, a0)?;
    a_history.extend(steps);
    let fin = finalize(g, &frame, &a)?;
    let injection = match size_injection(g, &frame, &fin, &a) {
        Ok(inj) => Some(inj),
        Err(err) => {
            anomalies.push(format!("size injection failed: {err}"));
            None
        }
    };
    let sizes = SizeAudit {
        n_size: frame.n_set.len(),
        a_size: a.members.len(),
        s_prime_size: fin.s_prime.len(),
        z_size: fin.z.len(),
        a_hat_size: fin.a_hat.len(),
        bound: 3 * frame.packing.len(),
        s_prime_by_degree: degree_histogram(g, &fin.s_prime),
        s_by_degree: degree_histogram(g, &frame.packing),
    };
    Ok(ConstructionTrace {
        frame,
        a_history,
        s_prime: fin.s_prime,
        t: fin.t,
        z: fin.z,
        a_hat: fin.a_hat,
        injection,
        anomalies,
        sizes,
    })
}

/// Runs the whole pipeline. `g` may be disconnected: the packing restricts
/// to a maximal packing of every component, components are processed
/// independently, and the results are glued back together. Guarantees that
/// the returned set is an independent dominating set of `g` of size at most
/// `3·|s|`.
pub fn construct(g: &Graph, s: &VertexSet) -> Result<ConstructOutcome> {
    if g.max_degree() > 3 {
        return Err(Error::DegreeTooHigh {
            found: g.max_degree(),
            limit: 3,
        });
    }
    if !packing::is_maximal_packing(g, s)? {
        return Err(Error::NotMaximalPacking);
    }

    let mut a_hat = VertexSet::empty(g.n());
    let mut components = Vec::new();
    for comp in g.components() {
        if comp.len() == 1 {
            let v = comp.iter().next().unwrap();
            if !s.contains(v) {
                return Err(Error::inconsistency(
                    "an isolated vertex is missing from a maximal packing",
                    serde_json::json!({ "vertex": v }),
                ));
            }
            a_hat.insert(v);
            components.push(ComponentTrace {
                vertex_map: vec![v],
                outcome: ComponentOutcome::SingleVertex { vertex: v },
            });
            continue;
        }
        let (sub, map) = g.induced_subgraph(&comp)?;
        let mut inv = vec![usize::MAX; g.n()];
        for (local, &global) in map.iter().enumerate() {
            inv[global] = local;
        }
        let s_local = VertexSet::from_members(
            sub.n(),
            s.iter().filter(|&v| comp.contains(v)).map(|v| inv[v]),
        )?;
        let trace = run_component(&sub, &s_local)?;
        for v in trace.a_hat.iter() {
            a_hat.insert(map[v]);
        }
        components.push(ComponentTrace {
            vertex_map: map,
            outcome: ComponentOutcome::Constructed {
                trace: Box::new(trace),
            },
        });
    }

    let bound = 3 * s.len();
    if !domination::is_independent_dominating(g, &a_hat)? || a_hat.len() > bound {
        return Err(Error::inconsistency(
            "glued components failed the global check",
            serde_json::json!({ "a_hat": &a_hat, "bound": bound }),
        ));
    }
    Ok(ConstructOutcome {
        a_hat,
        bound,
        packing_size: s.len(),
        components,
    })
}
