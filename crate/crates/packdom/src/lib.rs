//! Packings, dominating sets, and a constructive size bound in subcubic
//! graphs.
//!
//! The centerpiece is [`construct::construct`]: given a graph of maximum
//! degree 3 and a maximal packing `S` (a vertex set with pairwise distance
//! at least 3), it produces an independent dominating set of size at most
//! `3 |S|`, together with a replayable trace of every step. Around it sit
//! exact brute-force oracles for the packing, domination and independent
//! domination numbers, validators, named and random graph generators,
//! isomorphism-free enumeration of small subcubic graphs, source-free
//! multigraph orientations, and desk-scale search harnesses.

pub mod certificate;
pub mod construct;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod multigraph;
pub mod orient;
pub mod packing;
pub mod search;

pub use error::{Error, Result};
pub use graph::{decompose_deg_le2, DegreeTwoDecomposition, Graph, VertexSet};
pub use multigraph::{EdgeProvenance, MultiEdge, Multigraph, Orientation};

/// The book's code listings double as doc-tests so the guide can never
/// drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/graphs-and-formats.md")]
    mod graphs_and_formats {}
    #[doc = include_str!("../../../book/src/packings-and-domination.md")]
    mod packings_and_domination {}
    #[doc = include_str!("../../../book/src/the-construction.md")]
    mod the_construction {}
    #[doc = include_str!("../../../book/src/orientations.md")]
    mod orientations {}
    #[doc = include_str!("../../../book/src/generators-and-enumeration.md")]
    mod generators_and_enumeration {}
    #[doc = include_str!("../../../book/src/searches-and-cli.md")]
    mod searches_and_cli {}
}
