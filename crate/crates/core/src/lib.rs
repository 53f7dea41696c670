//! Independent-set reconfiguration on cographs and on graphs that decompose
//! by disjoint unions and complete joins into chordal pieces.
//!
//! Tokens sit on an independent set and move one at a time: either added or
//! removed while at least `k` remain (token addition/removal), or jumped
//! between vertices at fixed size (token jumping). [`decide`] answers
//! reachability in quadratic time; [`build_witness`] produces an explicit
//! sequence on cographs.

pub mod chordal;
pub mod cotree;
pub mod engine;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod witness;

pub use cotree::{build_maximal_cotree, is_cograph, Cotree, NodeId, NodeKind};
pub use engine::{decide, tj_decide, Decision, FailureKind};
pub use error::{Error, ErrorClass, Result};
pub use graph::{Graph, GraphBuilder, VertexSet};
pub use witness::{build_witness, Step, TarSequence};
