//! Serializable, independently re-checkable claims about vertex sets.
//!
//! A certificate pins the graph by content digest, lists the members of the
//! claimed set, and names the property. `verify` re-checks the property from
//! scratch against a graph, so a certificate plus the graph file is a fully
//! self-contained proof object.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::domination;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::packing;

/// SHA-256 digest of the labeled graph content (vertex count plus sorted
/// edge list). Relabeling a graph changes its digest.
pub fn graph_digest(g: &Graph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("n {}\n", g.n()).as_bytes());
    for (u, v) in g.edges() {
        hasher.update(format!("e {u} {v}\n").as_bytes());
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 digest of a multigraph: vertex count plus the sorted edge
/// multiset.
pub fn multigraph_digest(m: &crate::multigraph::Multigraph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("n {}\n", m.n()).as_bytes());
    for (u, v) in m.edge_multiset() {
        hasher.update(format!("e {u} {v}\n").as_bytes());
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 digest of an arbitrary parameter string, for reports with no
/// input file.
pub fn text_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    #[serde(rename = "packing")]
    Packing,
    #[serde(rename = "maximal-packing")]
    MaximalPacking,
    #[serde(rename = "idom")]
    IndependentDominating,
    #[serde(rename = "dom")]
    Dominating,
}

impl CertificateKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "packing" => Ok(CertificateKind::Packing),
            "maximal-packing" => Ok(CertificateKind::MaximalPacking),
            "idom" => Ok(CertificateKind::IndependentDominating),
            "dom" => Ok(CertificateKind::Dominating),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateKind::Packing => "packing",
            CertificateKind::MaximalPacking => "maximal-packing",
            CertificateKind::IndependentDominating => "idom",
            CertificateKind::Dominating => "dom",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFlags {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independent: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub graph_hash: String,
    pub members: Vec<usize>,
    pub flags: CertificateFlags,
    pub bound: Option<usize>,
}

impl Certificate {
    pub fn new(g: &Graph, kind: CertificateKind, set: &VertexSet, bound: Option<usize>) -> Self {
        let flags = match kind {
            CertificateKind::Packing => CertificateFlags {
                maximal: Some(false),
                independent: None,
            },
            CertificateKind::MaximalPacking => CertificateFlags {
                maximal: Some(true),
                independent: None,
            },
            CertificateKind::IndependentDominating => CertificateFlags {
                maximal: None,
                independent: Some(true),
            },
            CertificateKind::Dominating => CertificateFlags {
                maximal: None,
                independent: Some(false),
            },
        };
        Certificate {
            kind,
            graph_hash: graph_digest(g),
            members: set.iter().collect(),
            flags,
            bound,
        }
    }

    /// Re-checks the claimed property against `g`. Fails with an error when
    /// the certificate does not even fit the graph (wrong digest, members
    /// out of range); otherwise returns whether the property holds.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        if self.graph_hash != graph_digest(g) {
            return Err(Error::InfeasibleParameters(
                "certificate digest does not match the graph".into(),
            ));
        }
        let set = VertexSet::from_members(g.n(), self.members.iter().copied())?;
        verify_kind(g, self.kind, &set)
    }
}

/// Property check shared by certificates and the CLI `verify` command.
pub fn verify_kind(g: &Graph, kind: CertificateKind, set: &VertexSet) -> Result<bool> {
    match kind {
        CertificateKind::Packing => packing::is_packing(g, set),
        CertificateKind::MaximalPacking => {
            if !packing::is_packing(g, set)? {
                return Ok(false);
            }
            packing::is_maximal_packing(g, set)
        }
        CertificateKind::IndependentDominating => domination::is_independent_dominating(g, set),
        CertificateKind::Dominating => domination::is_dominating(g, set),
    }
}
