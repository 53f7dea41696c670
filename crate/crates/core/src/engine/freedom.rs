//! Top-down pass: the minimum number of tokens each node must keep over all
//! sets reachable at threshold `k`, plus the accessibility flags derived from it.

use super::ris::RisTable;
use crate::cotree::{Cotree, NodeId, NodeKind};
use crate::error::{Error, Result};

/// Per-node results of the top-down pass.
///
/// `blocked(u)` means no reachable set ever places a token inside `V_u`:
/// some ancestor join keeps at least one token on its other side. `cap(u)` is
/// the largest reachable token count on `V_u` (zero when blocked).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeValues {
    freedom: Vec<usize>,
    cap: Vec<usize>,
    blocked: Vec<bool>,
}

impl NodeValues {
    pub fn freedom(&self, u: NodeId) -> usize {
        self.freedom[u]
    }

    pub fn cap(&self, u: NodeId) -> usize {
        self.cap[u]
    }

    pub fn blocked(&self, u: NodeId) -> bool {
        self.blocked[u]
    }

    pub fn freedoms(&self) -> &[usize] {
        &self.freedom
    }
}

/// Runs the top-down pass for threshold `k` given the tables of
/// [`compute_ris_tables`](super::compute_ris_tables) for the same set.
pub fn compute_freedom(t: &Cotree, k: usize, ris: &[RisTable]) -> Result<NodeValues> {
    if ris.len() != t.len() {
        return Err(Error::Precondition(format!(
            "expected {} tables, got {}",
            t.len(),
            ris.len()
        )));
    }
    let root = t.root();
    if k > ris[root].base_size() {
        return Err(Error::Precondition(format!(
            "threshold {k} exceeds set size {}",
            ris[root].base_size()
        )));
    }
    let len = t.len();
    let mut freedom = vec![0; len];
    let mut blocked = vec![false; len];
    freedom[root] = k;
    // children always carry larger ids than their parent
    for u in 0..len {
        let Some((l, r)) = t.children(u) else { continue };
        let f = freedom[u];
        blocked[l] = blocked[u];
        blocked[r] = blocked[u];
        match t.kind(u) {
            NodeKind::Join => {
                let (occupied, empty) = if ris[l].base_size() == 0 && ris[r].base_size() > 0 {
                    (r, l)
                } else {
                    (l, r)
                };
                freedom[occupied] = f;
                freedom[empty] = 0;
                if f >= 1 {
                    blocked[empty] = true;
                }
            }
            NodeKind::Union => {
                let (x, y) = ris[u].tuple(f).ok_or_else(|| {
                    Error::Internal(format!("union node {u} has no stable tuples"))
                })?;
                freedom[l] = x;
                freedom[r] = y;
            }
            NodeKind::Leaf => unreachable!("leaves have no children"),
        }
        debug_assert!(freedom[l] <= ris[l].base_size() && freedom[r] <= ris[r].base_size());
    }
    let cap = (0..len)
        .map(|u| if blocked[u] { 0 } else { ris[u].get(freedom[u]) })
        .collect();
    Ok(NodeValues { freedom, cap, blocked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_maximal_cotree;
    use crate::engine::compute_ris_tables;
    use crate::graph::{Graph, VertexSet};

    fn values(g: &Graph, i: &VertexSet, k: usize) -> (Cotree, NodeValues) {
        let t = build_maximal_cotree(g);
        let ris = compute_ris_tables(&t, i).unwrap();
        let nv = compute_freedom(&t, k, &ris).unwrap();
        (t, nv)
    }

    fn node_with(t: &Cotree, ids: &[usize]) -> NodeId {
        (0..t.len()).find(|&u| t.vertex_set(u) == ids).unwrap()
    }

    #[test]
    fn two_edges_each_keep_one_token() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let (t, nv) = values(&g, &[0, 2].into(), 2);
        assert_eq!(nv.freedom(t.root()), 2);
        assert_eq!(nv.freedom(node_with(&t, &[0, 1])), 1);
        assert_eq!(nv.freedom(node_with(&t, &[2, 3])), 1);
        // no token can move at all, so the uncovered endpoints stay empty
        assert!(nv.blocked(node_with(&t, &[1])) && nv.blocked(node_with(&t, &[3])));
        assert!(!nv.blocked(node_with(&t, &[0])));
    }

    #[test]
    fn square_blocks_the_empty_side() {
        let (t, nv) = values(&Graph::cycle(4), &[0, 2].into(), 1);
        let (occ, empty) = (node_with(&t, &[0, 2]), node_with(&t, &[1, 3]));
        assert_eq!(nv.freedom(occ), 1);
        assert_eq!(nv.freedom(empty), 0);
        assert!(nv.blocked(empty));
        assert!(nv.blocked(node_with(&t, &[3])));
        assert_eq!(nv.cap(empty), 0);
        assert_eq!(nv.cap(occ), 2);
        assert!(!nv.blocked(occ));
    }

    #[test]
    fn zero_threshold_blocks_nothing() {
        let (t, nv) = values(&Graph::cycle(4), &[0, 2].into(), 0);
        assert!((0..t.len()).all(|u| !nv.blocked(u) && nv.freedom(u) == 0));
    }

    #[test]
    fn threshold_above_set_size_is_rejected() {
        let t = build_maximal_cotree(&Graph::cycle(4));
        let ris = compute_ris_tables(&t, &[0].into()).unwrap();
        assert!(matches!(compute_freedom(&t, 2, &ris), Err(Error::Precondition(_))));
    }
}
