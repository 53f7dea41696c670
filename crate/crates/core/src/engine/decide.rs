use std::fmt;

use super::freedom::{compute_freedom, NodeValues};
use super::ris::{compute_ris_tables, leaf_local_set, RisTable};
use crate::chordal::leaf_reachable;
use crate::cotree::{build_maximal_cotree, Cotree, NodeId};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Both passes of the engine for one start set and threshold.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub ris: Vec<RisTable>,
    pub values: NodeValues,
}

impl Analysis {
    pub fn new(t: &Cotree, i: &VertexSet, k: usize) -> Result<Analysis> {
        let ris = compute_ris_tables(t, i)?;
        let values = compute_freedom(t, k, &ris)?;
        Ok(Analysis { ris, values })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// One of the sets has fewer than `k` tokens, so it is not a configuration at all.
    TooFewTokens,
    /// The two sets must keep different minimum token counts on this node.
    FreedomMismatch { a: usize, b: usize },
    /// Inside this leaf the two restrictions are disconnected at threshold `ell`.
    LeafUnreachable { ell: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Failure {
    pub node: NodeId,
    pub kind: FailureKind,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FailureKind::TooFewTokens => write!(f, "a start or target set has fewer than k tokens"),
            FailureKind::FreedomMismatch { a, b } => {
                write!(f, "node #{}: minimum occupancy {a} from A but {b} from B", self.node)
            }
            FailureKind::LeafUnreachable { ell } => {
                write!(f, "leaf #{}: restrictions are disconnected at threshold {ell}", self.node)
            }
        }
    }
}

/// Outcome of a reachability query; `failure` is set exactly when unreachable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decision {
    pub reachable: bool,
    pub failure: Option<Failure>,
}

impl Decision {
    fn yes() -> Decision {
        Decision { reachable: true, failure: None }
    }

    fn no(node: NodeId, kind: FailureKind) -> Decision {
        Decision { reachable: false, failure: Some(Failure { node, kind }) }
    }
}

/// Whether `b` is reachable from `a` by adding and removing single tokens
/// while always keeping an independent set of at least `k` tokens.
pub fn decide(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize) -> Result<Decision> {
    g.require_independent(a)?;
    g.require_independent(b)?;
    if a.len() < k || b.len() < k {
        return Ok(Decision::no(0, FailureKind::TooFewTokens));
    }
    if k == 0 || a == b {
        return Ok(Decision::yes());
    }
    let t = build_maximal_cotree(g);
    decide_with_cotree(&t, a, b, k)
}

/// [`decide`] on a prebuilt decomposition. The caller vouches that `a` and `b`
/// are independent in the graph `t` represents.
pub fn decide_with_cotree(t: &Cotree, a: &VertexSet, b: &VertexSet, k: usize) -> Result<Decision> {
    if a.len() < k || b.len() < k {
        return Ok(Decision::no(t.root(), FailureKind::TooFewTokens));
    }
    if k == 0 {
        return Ok(Decision::yes());
    }
    let fa = Analysis::new(t, a, k)?.values;
    let fb = Analysis::new(t, b, k)?.values;
    for u in t.preorder() {
        let (x, y) = (fa.freedom(u), fb.freedom(u));
        if x != y {
            return Ok(Decision::no(u, FailureKind::FreedomMismatch { a: x, b: y }));
        }
        if let Some(h) = t.leaf_graph(u) {
            let (la, lb) = (leaf_local_set(t, u, a), leaf_local_set(t, u, b));
            if !leaf_reachable(h, &la, &lb, x)? {
                return Ok(Decision::no(u, FailureKind::LeafUnreachable { ell: x }));
            }
        }
    }
    Ok(Decision::yes())
}

/// Token-jumping reachability between equal-size sets: jumps at size `s`
/// correspond to add/remove sequences at threshold `s - 1`.
pub fn tj_decide(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { a: a.len(), b: b.len() });
    }
    if a.is_empty() {
        g.check_set(a)?;
        return Ok(true);
    }
    Ok(decide(g, a, b, a.len() - 1)?.reachable)
}
