//! Explicit reconfiguration sequences on cographs.
//!
//! A witness from `A` to `B` walks both sets up to maximum independent sets
//! of the subgraph of vertices reachable configurations can use, then swaps
//! between those two maximum sets one module at a time.

mod jumps;
mod sequence;
mod su;

pub use jumps::{build_jump_witness, jumps_from_tar, Jump, JumpSequence};
pub use sequence::{Step, TarSequence};
pub use su::{build_su_sequence, verify_su_sequence, Recipe, SuSequence};

use crate::cotree::{build_maximal_cotree, Cotree, NodeKind};
use crate::engine::{compute_ris_tables, decide, token_counts, Analysis, NodeValues};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn require_cotree(t: &Cotree) -> Result<()> {
    if t.is_cotree() {
        Ok(())
    } else {
        Err(Error::Unsupported("explicit sequences need a cograph".into()))
    }
}

/// Vertices that some configuration reachable from the analysed set can
/// use: those whose leaf is not blocked.
pub fn accessible_subgraph(t: &Cotree, values: &NodeValues) -> Result<VertexSet> {
    require_cotree(t)?;
    Ok((0..t.len())
        .filter(|&u| t.is_leaf(u) && !values.blocked(u))
        .map(|u| t.vertex_set(u)[0])
        .collect())
}

/// [`accessible_subgraph`] computed from scratch.
pub fn accessible_vertices(g: &Graph, a: &VertexSet, k: usize) -> Result<VertexSet> {
    g.require_independent(a)?;
    if g.vertex_count() == 0 {
        return Ok(VertexSet::new());
    }
    let t = build_maximal_cotree(g);
    accessible_subgraph(&t, &Analysis::new(&t, a, k)?.values)
}

/// A maximum independent set of the cograph `t` represents.
pub fn maximum_independent_set(t: &Cotree) -> Result<VertexSet> {
    require_cotree(t)?;
    let ris = compute_ris_tables(t, &VertexSet::new())?;
    Ok(VertexSet::from_vec(su::cotree_mis(t, t.root(), &ris)))
}

/// Walk from `i` to a maximum independent set at threshold `k`, adding a
/// token on each vertex at most once. Requires that `i` can reach a maximum
/// independent set at all, which holds once inaccessible vertices are gone.
pub fn sequence_to_max(t: &Cotree, i: &VertexSet, k: usize) -> Result<TarSequence> {
    require_cotree(t)?;
    if i.len() < k {
        return Err(Error::Precondition(format!("start set has {} < k = {k} tokens", i.len())));
    }
    let ris = compute_ris_tables(t, i)?;
    let root = &ris[t.root()];
    if root.get(k) != root.alpha() {
        return Err(Error::Internal(format!(
            "start set reaches at most {} tokens at threshold {k}, below α = {}",
            root.get(k),
            root.alpha()
        )));
    }
    let su = build_su_sequence(t, t.root(), i, &ris)?;
    let mut seq = TarSequence::new(i.clone(), k);
    for r in su.steps() {
        for &v in &r.remove {
            seq.push(Step::Remove(v));
        }
        for &v in &r.add {
            seq.push(Step::Add(v));
        }
    }
    Ok(seq)
}

/// Walk of length `|A Δ B|` between two maximum independent sets that reach
/// each other at threshold `k`: repeatedly find a join node both sets use
/// whose two children are each used by only one of them, then empty that
/// node of `A`'s tokens and fill it with `B`'s.
pub fn bridge_max_sets(t: &Cotree, a_max: &VertexSet, b_max: &VertexSet, k: usize) -> Result<TarSequence> {
    require_cotree(t)?;
    let alpha = maximum_independent_set(t)?.len();
    for s in [a_max, b_max] {
        if s.len() != alpha {
            return Err(Error::Precondition(format!("{s} is not a maximum independent set (α = {alpha})")));
        }
    }
    let mut cur = a_max.clone();
    let mut seq = TarSequence::new(a_max.clone(), k);
    let preorder = t.preorder();
    while &cur != b_max {
        let ca = token_counts(t, &cur)?;
        let cb = token_counts(t, b_max)?;
        let differs = |u: usize| (ca[u] == 0) != (cb[u] == 0);
        let u = preorder
            .iter()
            .copied()
            .find(|&u| {
                t.kind(u) == NodeKind::Join
                    && !differs(u)
                    && t.children(u).is_some_and(|(l, r)| differs(l) && differs(r))
            })
            .ok_or_else(|| Error::Internal("no join node separates the two maximum sets".into()))?;
        let ids = VertexSet::from(t.vertex_set(u));
        let (out, inn) = (cur.intersection(&ids), b_max.intersection(&ids));
        if cur.len() - out.len() < k {
            return Err(Error::Precondition(format!("{a_max} and {b_max} are not connected at k = {k}")));
        }
        for v in out.iter() {
            seq.push(Step::Remove(v));
            cur.remove(v);
        }
        for v in inn.iter() {
            seq.push(Step::Add(v));
            cur.insert(v);
        }
    }
    Ok(seq)
}

/// Explicit sequence from `a` to `b` at threshold `k` on a cograph, of length
/// at most `4n - |a| - |b|`. Fails with an input error when `b` is not
/// reachable from `a`.
pub fn build_witness(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize) -> Result<TarSequence> {
    let d = decide(g, a, b, k)?;
    if !d.reachable {
        return Err(Error::Precondition(format!("{b} is not reachable from {a} at k = {k}")));
    }
    if a == b {
        return Ok(TarSequence::new(a.clone(), k));
    }
    let t = build_maximal_cotree(g);
    require_cotree(&t)?;
    let keep = accessible_subgraph(&t, &Analysis::new(&t, a, k)?.values)?;
    let ids = keep.as_slice();
    let local = |s: &VertexSet| -> Result<VertexSet> {
        s.iter()
            .map(|x| {
                ids.binary_search(&x)
                    .map_err(|_| Error::Internal(format!("vertex {x} of an endpoint is not accessible")))
            })
            .collect()
    };
    let (la, lb) = (local(a)?, local(b)?);
    let sub = g.induced_subgraph(&keep)?;
    let st = build_maximal_cotree(&sub);
    let forward = sequence_to_max(&st, &la, k)?;
    let backward = sequence_to_max(&st, &lb, k)?;
    let bridge = bridge_max_sets(&st, &forward.end(), &backward.end(), k)?;
    let mut walk = forward;
    walk.extend(bridge);
    walk.extend(backward.reversed());
    let walk = walk.map_ids(ids);
    walk.check_endpoints(g, a, b)?;
    let bound = 4 * g.vertex_count() - a.len() - b.len();
    if walk.len() > bound {
        return Err(Error::Internal(format!("witness has {} moves, above the bound {bound}", walk.len())));
    }
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
    }

    fn accessible(g: &Graph, a: &[usize], k: usize) -> VertexSet {
        accessible_vertices(g, &VertexSet::from(a), k).unwrap()
    }

    #[test]
    fn accessibility_examples() {
        assert_eq!(accessible(&Graph::cycle(4), &[0, 2], 1), VertexSet::from([0, 2]));
        assert_eq!(accessible(&Graph::cycle(4), &[0, 2], 0), VertexSet::from([0, 1, 2, 3]));
        // at k = 2 neither token of {0,2} can move
        assert_eq!(accessible(&two_k2(), &[0, 2], 2), VertexSet::from([0, 2]));
        assert_eq!(accessible(&two_k2(), &[0, 2], 1), VertexSet::from([0, 1, 2, 3]));
        assert!(matches!(accessible_vertices(&Graph::path(4), &[0].into(), 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn walks_to_maximum() {
        let t = build_maximal_cotree(&Graph::empty(2));
        let s = sequence_to_max(&t, &[0].into(), 1).unwrap();
        assert_eq!(s.sets(), vec![VertexSet::from([0]), VertexSet::from([0, 1])]);

        let t = build_maximal_cotree(&two_k2());
        assert!(sequence_to_max(&t, &[0, 2].into(), 2).unwrap().is_empty());

        // from the centre of P3 at k = 1 the two leaves are out of reach
        let p3 = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let t = build_maximal_cotree(&p3);
        assert!(matches!(sequence_to_max(&t, &[2].into(), 1), Err(Error::Internal(_))));
    }

    #[test]
    fn bridges() {
        let c4 = Graph::cycle(4);
        let t = build_maximal_cotree(&c4);
        let s = bridge_max_sets(&t, &[0, 2].into(), &[1, 3].into(), 0).unwrap();
        assert_eq!(s.len(), 4);
        s.check_endpoints(&c4, &[0, 2].into(), &[1, 3].into()).unwrap();
        assert!(bridge_max_sets(&t, &[0, 2].into(), &[0, 2].into(), 2).unwrap().is_empty());
        assert!(matches!(bridge_max_sets(&t, &[0].into(), &[1, 3].into(), 0), Err(Error::Precondition(_))));

        let g = two_k2();
        let t = build_maximal_cotree(&g);
        let s = bridge_max_sets(&t, &[0, 2].into(), &[0, 3].into(), 1).unwrap();
        assert_eq!(s.sets(), vec![VertexSet::from([0, 2]), VertexSet::from([0]), VertexSet::from([0, 3])]);
    }

    #[test]
    fn witness_examples() {
        let p3 = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let w = build_witness(&p3, &[0].into(), &[1].into(), 1).unwrap();
        w.check_endpoints(&p3, &[0].into(), &[1].into()).unwrap();
        assert!(w.len() <= 10);

        let c4 = Graph::cycle(4);
        assert!(build_witness(&c4, &[0, 2].into(), &[0, 2].into(), 1).unwrap().is_empty());
        assert!(matches!(build_witness(&c4, &[0, 2].into(), &[1, 3].into(), 1), Err(Error::Precondition(_))));
        let w = build_witness(&c4, &[0, 2].into(), &[1, 3].into(), 0).unwrap();
        assert!(w.len() <= 12);

        let g = two_k2();
        let w = build_witness(&g, &[0, 2].into(), &[1, 3].into(), 1).unwrap();
        w.check_endpoints(&g, &[0, 2].into(), &[1, 3].into()).unwrap();
        assert!(w.len() <= 12);
    }
}
