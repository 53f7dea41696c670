//! Short universal sequences: for a cotree node `u`, a chain of growing
//! independent sets of `G_u` starting at `I ∩ V_u` and ending at a maximum
//! independent set, where no vertex is ever re-added, and where for every
//! threshold `ℓ` the prefix that stays below `RIS_ℓ(u)` can be walked at
//! threshold `ℓ`.

use crate::cotree::{Cotree, NodeId, NodeKind};
use crate::engine::RisTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Moves realising one transition `C_i -> C_{i+1}`: the removals first, then
/// the additions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub remove: Vec<usize>,
    pub add: Vec<usize>,
}

impl Recipe {
    fn delta(&self) -> isize {
        self.add.len() as isize - self.remove.len() as isize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuSequence {
    node: NodeId,
    start: VertexSet,
    steps: Vec<Recipe>,
    sizes: Vec<usize>,
}

impl SuSequence {
    fn new(node: NodeId, start: VertexSet, steps: Vec<Recipe>) -> SuSequence {
        let mut sizes = vec![start.len()];
        for r in &steps {
            let next = *sizes.last().expect("nonempty") as isize + r.delta();
            sizes.push(next as usize);
        }
        SuSequence { node, start, steps, sizes }
    }

    pub fn node(&self) -> NodeId {
        self.node
    }

    /// `C_0`.
    pub fn start(&self) -> &VertexSet {
        &self.start
    }

    pub fn steps(&self) -> &[Recipe] {
        &self.steps
    }

    /// `|C_0|, ..., |C_p|`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `p`, the index of the last set.
    pub fn last_index(&self) -> usize {
        self.steps.len()
    }

    /// `C_0, ..., C_p`.
    pub fn sets(&self) -> Vec<VertexSet> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for r in &self.steps {
            for &x in &r.remove {
                cur.remove(x);
            }
            for &x in &r.add {
                cur.insert(x);
            }
            out.push(cur.clone());
        }
        out
    }

    /// `C_p`.
    pub fn end(&self) -> VertexSet {
        self.sets().pop().expect("nonempty")
    }

    /// Total number of single-token moves in the expansion.
    pub fn expansion_length(&self) -> usize {
        self.steps.iter().map(|r| r.remove.len() + r.add.len()).sum()
    }
}

/// Maximum independent set of the cograph below `u`, from the `α` values in `ris`.
pub(crate) fn cotree_mis(t: &Cotree, u: NodeId, ris: &[RisTable]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        match (t.kind(x), t.children(x)) {
            (NodeKind::Union, Some((l, r))) => stack.extend([l, r]),
            (NodeKind::Join, Some((l, r))) => {
                stack.push(if ris[r].alpha() > ris[l].alpha() { r } else { l });
            }
            _ => out.push(t.vertex_set(x)[0]),
        }
    }
    out
}

/// Largest `ℓ` with `RIS_{ℓ - other}(child) > have`, reading negative
/// thresholds as zero; `None` if even threshold zero gives no improvement.
fn improvement_limit(child: &RisTable, have: usize, other: usize) -> Option<usize> {
    let values = child.values();
    if values[0] <= have {
        return None;
    }
    Some(other + values.partition_point(|&x| x > have) - 1)
}

fn merge_union(u: NodeId, sv: SuSequence, sw: SuSequence, ris: &[RisTable], rv: &RisTable, rw: &RisTable) -> Result<SuSequence> {
    let base = ris[u].base_size();
    let (alpha_v, alpha_w) = (rv.alpha(), rw.alpha());
    let start = sv.start.union(&sw.start);
    let (mut b, mut c) = (0, 0);
    let mut vs = sv.steps.into_iter();
    let mut ws = sw.steps.into_iter();
    let mut steps = Vec::new();
    loop {
        let (q, r) = (sv.sizes[b], sw.sizes[c]);
        if q == alpha_v && r == alpha_w {
            break;
        }
        let lv = improvement_limit(rv, q, r);
        let lw = improvement_limit(rw, r, q);
        let ell = lv.max(lw).ok_or_else(|| {
            Error::Internal(format!("union node {u}: no child can grow from sizes ({q}, {r})"))
        })?;
        let ell = ell.min(base);
        let next = if lv.is_some_and(|x| x >= ell) {
            b += 1;
            vs.next()
        } else {
            c += 1;
            ws.next()
        };
        steps.push(next.ok_or_else(|| {
            Error::Internal(format!("union node {u}: child sequence ended before reaching α"))
        })?);
    }
    Ok(SuSequence::new(u, start, steps))
}

/// Builds the sequence for node `u` from the engine tables `ris` of the
/// same start set `i`. Every leaf below `u` must be a single vertex.
pub fn build_su_sequence(t: &Cotree, u: NodeId, i: &VertexSet, ris: &[RisTable]) -> Result<SuSequence> {
    let n = t.vertex_count();
    let in_i = i.mask(n);
    // Nodes whose sequence feeds into u's: a join without tokens ignores its children.
    let mut needed = Vec::new();
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        needed.push(x);
        if t.is_leaf(x) && !t.is_trivial_leaf(x) {
            return Err(Error::Unsupported(format!(
                "node {x} is a leaf with {} vertices; sequences need a cotree",
                t.vertex_set(x).len()
            )));
        }
        if let Some((l, r)) = t.children(x) {
            if t.kind(x) == NodeKind::Union || ris[x].base_size() > 0 {
                stack.extend([l, r]);
            }
        }
    }
    needed.sort_unstable_by(|a, b| b.cmp(a));

    let mut done: Vec<Option<SuSequence>> = vec![None; t.len()];
    for &x in &needed {
        let seq = match t.kind(x) {
            NodeKind::Leaf => {
                let v = t.vertex_set(x)[0];
                if in_i[v] {
                    SuSequence::new(x, [v].into(), vec![])
                } else {
                    SuSequence::new(x, VertexSet::new(), vec![Recipe { remove: vec![], add: vec![v] }])
                }
            }
            NodeKind::Join => {
                let (l, r) = t.children(x).expect("internal node");
                if ris[x].base_size() == 0 {
                    let add = cotree_mis(t, x, ris);
                    SuSequence::new(x, VertexSet::new(), vec![Recipe { remove: vec![], add }])
                } else {
                    let (occ, other) = if ris[l].base_size() > 0 { (l, r) } else { (r, l) };
                    let mut s = done[occ].take().expect("children precede parents");
                    done[other] = None;
                    if ris[occ].alpha() < ris[x].alpha() {
                        // the occupied side is exhausted; swap to the larger side
                        let remove = s.end().into_vec();
                        let add = cotree_mis(t, other, ris);
                        s.steps.push(Recipe { remove, add });
                        s = SuSequence::new(x, s.start, s.steps);
                    } else {
                        s.node = x;
                    }
                    s
                }
            }
            NodeKind::Union => {
                let (l, r) = t.children(x).expect("internal node");
                let sv = done[l].take().expect("children precede parents");
                let sw = done[r].take().expect("children precede parents");
                merge_union(x, sv, sw, ris, &ris[l], &ris[r])?
            }
        };
        done[x] = Some(seq);
    }
    Ok(done[u].take().expect("built"))
}

/// Checks the defining properties of `seq` against the graph `g` the tree
/// represents, the start set `i` and the node's table: starts at `I ∩ V_u`,
/// sizes strictly grow, no vertex is added after it has appeared, the end is
/// a maximum independent set of `G_u`, the expansion length matches
/// `2|⋃ C_j| - |C_0| - |C_p|`, and for each threshold `ℓ` every transition
/// out of a set smaller than `RIS_ℓ(u)` stays at or above `ℓ` tokens.
pub fn verify_su_sequence(t: &Cotree, g: &Graph, i: &VertexSet, seq: &SuSequence, ris_u: &RisTable) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(format!("sequence for node {}: {msg}", seq.node)));
    let vu = VertexSet::from(t.vertex_set(seq.node));
    let sets = seq.sets();
    let p = seq.last_index();
    if sets[0] != i.intersection(&vu) {
        return fail(format!("starts at {} instead of I ∩ V_u", sets[0]));
    }
    let mut seen = VertexSet::new();
    for (j, c) in sets.iter().enumerate() {
        if !c.is_subset(&vu) || !g.is_independent(c)? {
            return fail(format!("C_{j} = {c} is not an independent subset of V_u"));
        }
        if j > 0 {
            if c.len() <= sets[j - 1].len() {
                return fail(format!("|C_{j}| does not exceed |C_{}|", j - 1));
            }
            if !c.difference(&sets[j - 1]).intersection(&seen).is_empty() {
                return fail(format!("C_{j} re-adds a vertex used earlier"));
            }
        }
        seen = seen.union(c);
    }
    if sets[p].len() != ris_u.alpha() {
        return fail(format!("ends with {} vertices but α = {}", sets[p].len(), ris_u.alpha()));
    }
    let expected = 2 * seen.len() - sets[0].len() - sets[p].len();
    if seq.expansion_length() != expected {
        return fail(format!("expansion has {} moves, expected {expected}", seq.expansion_length()));
    }
    for (j, r) in seq.steps.iter().enumerate() {
        let c = &sets[j];
        let remove = VertexSet::from(&r.remove[..]);
        let add = VertexSet::from(&r.add[..]);
        if !remove.is_subset(c) || !add.intersection(c).is_empty() {
            return fail(format!("recipe {j} does not match C_{j}"));
        }
        if c.difference(&remove).union(&add) != sets[j + 1] {
            return fail(format!("recipe {j} does not produce C_{}", j + 1));
        }
    }
    for ell in 0..=ris_u.base_size() {
        for (j, c) in sets.iter().enumerate() {
            if c.len() >= ris_u.get(ell) {
                continue;
            }
            if j == p {
                return fail(format!("C_p is below RIS_{ell}"));
            }
            if c.len() - seq.steps[j].remove.len() < ell {
                return fail(format!("transition {j} drops below threshold {ell}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_maximal_cotree;
    use crate::engine::compute_ris_tables;

    fn seq_for(g: &Graph, i: &VertexSet) -> (Cotree, SuSequence, Vec<RisTable>) {
        let t = build_maximal_cotree(g);
        let ris = compute_ris_tables(&t, i).unwrap();
        let s = build_su_sequence(&t, t.root(), i, &ris).unwrap();
        verify_su_sequence(&t, g, i, &s, &ris[t.root()]).unwrap();
        (t, s, ris)
    }

    fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn occupied_leaf_is_a_single_set() {
        let (_, s, _) = seq_for(&Graph::empty(1), &[0].into());
        assert_eq!(s.sets(), vec![VertexSet::from([0])]);
    }

    #[test]
    fn two_edges_from_one_token() {
        let (_, s, _) = seq_for(&two_k2(), &[0].into());
        assert_eq!(s.sets(), vec![VertexSet::from([0]), VertexSet::from([0, 2])]);
        let (_, s, _) = seq_for(&two_k2(), &[0, 2].into());
        assert_eq!(s.sets(), vec![VertexSet::from([0, 2])]);
    }

    #[test]
    fn join_swaps_to_the_larger_side() {
        // K1 joined with 2K1: from the centre, drop it and take both leaves
        let g = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let (_, s, _) = seq_for(&g, &[2].into());
        assert_eq!(s.sets(), vec![VertexSet::from([2]), VertexSet::from([0, 1])]);
        assert_eq!(s.steps()[0].remove, vec![2]);
    }

    #[test]
    fn every_node_on_a_square() {
        let c4 = Graph::cycle(4);
        let t = build_maximal_cotree(&c4);
        let i = VertexSet::from([0]);
        let ris = compute_ris_tables(&t, &i).unwrap();
        for u in 0..t.len() {
            let s = build_su_sequence(&t, u, &i, &ris).unwrap();
            verify_su_sequence(&t, &c4, &i, &s, &ris[u]).unwrap();
        }
    }

    #[test]
    fn rejects_prime_leaves() {
        let p4 = Graph::path(4);
        let t = build_maximal_cotree(&p4);
        let ris = compute_ris_tables(&t, &VertexSet::new()).unwrap();
        assert!(matches!(build_su_sequence(&t, 0, &VertexSet::new(), &ris), Err(Error::Unsupported(_))));
    }
}
