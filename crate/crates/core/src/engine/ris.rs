//! Bottom-up pass: for every node `u` and threshold `ℓ ∈ 0..=|I ∩ V_u|`, the
//! size of the largest independent set of `G_u` reachable from `I ∩ V_u`
//! while keeping at least `ℓ` tokens.

use crate::chordal::leaf_ris_table;
use crate::cotree::{Cotree, NodeKind};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Per-node reachable-maximum table, plus the maximum `ℓ`-stable tuple for
/// every `ℓ` when the node is a union node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RisTable {
    base: usize,
    values: Vec<usize>,
    tuples: Option<Vec<(usize, usize)>>,
}

impl RisTable {
    /// Table for a node holding `base` tokens; `values[ℓ]` for `ℓ = 0..=base`.
    pub fn new(base: usize, values: Vec<usize>) -> Self {
        assert_eq!(values.len(), base + 1, "a table covers thresholds 0..=base");
        RisTable { base, values, tuples: None }
    }

    /// Single-vertex leaf: the best reachable set is always the vertex itself.
    pub fn trivial_leaf(occupied: bool) -> Self {
        let base = usize::from(occupied);
        RisTable::new(base, vec![1; base + 1])
    }

    /// `|I ∩ V_u|`.
    pub fn base_size(&self) -> usize {
        self.base
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `α(G_u)`.
    pub fn alpha(&self) -> usize {
        self.values[0]
    }

    pub fn get(&self, ell: usize) -> usize {
        self.values[ell]
    }

    /// Lookup that treats negative thresholds as threshold zero.
    pub fn get_signed(&self, ell: isize) -> usize {
        self.values[ell.max(0) as usize]
    }

    pub fn tuple(&self, ell: usize) -> Option<(usize, usize)> {
        self.tuples.as_ref().map(|t| t[ell])
    }

    pub fn tuples(&self) -> Option<&[(usize, usize)]> {
        self.tuples.as_deref()
    }
}

/// Union-node rule, computing every threshold in one sweep.
///
/// `ℓ` runs from `|I ∩ V_u|` down to zero while `(a, b)` only ever
/// decreases, iterating `a = max(0, ℓ - RIS_b(w))`, `b = max(0, ℓ - RIS_a(v))`
/// until it settles on the maximum `ℓ`-stable tuple. Total work is linear in
/// the number of tokens under `u`.
pub fn ris_union(v: &RisTable, w: &RisTable) -> RisTable {
    ris_union_traced(v, w, |_, _, _| {})
}

/// [`ris_union`], reporting `(ℓ, a, b)` on entry to each threshold and after
/// every reassignment of `(a, b)`.
pub fn ris_union_traced<F>(v: &RisTable, w: &RisTable, mut observe: F) -> RisTable
where
    F: FnMut(usize, usize, usize),
{
    let total = v.base + w.base;
    let mut values = vec![0; total + 1];
    let mut tuples = vec![(0, 0); total + 1];
    let (mut a, mut b) = (v.base, w.base);
    for ell in (0..=total).rev() {
        observe(ell, a, b);
        loop {
            let next_a = ell.saturating_sub(w.values[b]);
            let next_b = ell.saturating_sub(v.values[a]);
            if (next_a, next_b) == (a, b) {
                break;
            }
            debug_assert!(next_a <= a && next_b <= b, "stable-tuple iteration must descend");
            a = next_a;
            b = next_b;
            observe(ell, a, b);
        }
        debug_assert!(a + w.values[b] >= ell && b + v.values[a] >= ell);
        tuples[ell] = (a, b);
        values[ell] = v.values[a] + w.values[b];
    }
    RisTable { base: total, values, tuples: Some(tuples) }
}

/// Join-node rule. At most one child can hold tokens; that child's table
/// carries over for `ℓ >= 1`, and threshold zero takes the larger `α`.
pub fn ris_join(v: &RisTable, w: &RisTable) -> Result<RisTable> {
    if v.base > 0 && w.base > 0 {
        return Err(Error::Internal("both children of a join node hold tokens".into()));
    }
    let occupied = if w.base > 0 { w } else { v };
    let mut values = occupied.values.clone();
    values[0] = v.alpha().max(w.alpha());
    Ok(RisTable::new(occupied.base, values))
}

/// `|I ∩ V_u|` for every node.
pub fn token_counts(t: &Cotree, i: &VertexSet) -> Result<Vec<usize>> {
    let n = t.vertex_count();
    let mask = i.iter().try_fold(vec![false; n], |mut m, v| {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        m[v] = true;
        Ok(m)
    })?;
    let mut counts = vec![0; t.len()];
    for u in (0..t.len()).rev() {
        counts[u] = match t.children(u) {
            Some((l, r)) => counts[l] + counts[r],
            None => t.vertex_set(u).iter().filter(|&&x| mask[x]).count(),
        };
    }
    Ok(counts)
}

/// `s ∩ V_u` in the local ids of leaf `u`'s graph.
pub(crate) fn leaf_local_set(t: &Cotree, u: usize, s: &VertexSet) -> VertexSet {
    let ids = t.vertex_set(u);
    s.iter().filter_map(|x| ids.binary_search(&x).ok()).collect()
}

/// Runs the bottom-up pass over the whole tree; entry `u` is node `u`'s table.
pub fn compute_ris_tables(t: &Cotree, i: &VertexSet) -> Result<Vec<RisTable>> {
    let counts = token_counts(t, i)?;
    let mut tables: Vec<Option<RisTable>> = vec![None; t.len()];
    for u in (0..t.len()).rev() {
        let table = match t.kind(u) {
            NodeKind::Leaf => match t.leaf_graph(u) {
                None => RisTable::trivial_leaf(counts[u] == 1),
                Some(h) => leaf_ris_table(h, &leaf_local_set(t, u, i))?,
            },
            kind => {
                let (l, r) = t.children(u).expect("internal node");
                let (tl, tr) = (tables[l].as_ref().expect("child"), tables[r].as_ref().expect("child"));
                if kind == NodeKind::Union {
                    ris_union(tl, tr)
                } else if counts[l] > 0 && counts[r] > 0 {
                    return Err(Error::Precondition(format!(
                        "set is not independent: it meets both sides of join node {u}"
                    )));
                } else {
                    ris_join(tl, tr)?
                }
            }
        };
        debug_assert_eq!(table.base, counts[u]);
        tables[u] = Some(table);
    }
    Ok(tables.into_iter().map(|t| t.expect("filled")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_maximal_cotree;
    use crate::graph::Graph;

    fn table(values: &[usize]) -> RisTable {
        RisTable::new(values.len() - 1, values.to_vec())
    }

    #[test]
    fn cascading_union_table() {
        let u = ris_union(&table(&[6, 5, 5, 4]), &table(&[4, 3, 3, 3]));
        assert_eq!(u.values(), &[10, 10, 10, 10, 10, 9, 7]);
        assert_eq!(u.tuple(6), Some((3, 2)));
        assert_eq!(u.tuple(5), Some((1, 0)));
        assert_eq!(u.tuple(4), Some((0, 0)));
    }

    #[test]
    fn union_of_occupied_and_empty_leaf() {
        let u = ris_union(&RisTable::trivial_leaf(true), &RisTable::trivial_leaf(false));
        assert_eq!(u.values(), &[2, 2]);
        assert_eq!(u.tuples().unwrap(), &[(0, 0), (0, 0)]);
    }

    #[test]
    fn union_work_is_linear() {
        let v = table(&[9, 8, 8, 7, 6, 5]);
        let w = table(&[9, 9, 7, 6, 6, 5]);
        let mut steps = 0;
        ris_union_traced(&v, &w, |_, _, _| steps += 1);
        // one observation per threshold plus at most |I ∩ V_u| descents
        assert!(steps <= 2 * 11, "{steps}");
    }

    #[test]
    fn join_examples() {
        let j = ris_join(&table(&[2, 2, 2]), &table(&[1])).unwrap();
        assert_eq!(j.values(), &[2, 2, 2]);
        assert_eq!(ris_join(&table(&[1]), &table(&[3])).unwrap().values(), &[3]);
        assert_eq!(ris_join(&table(&[1, 1]), &table(&[2])).unwrap().values(), &[2, 1]);
        assert!(matches!(ris_join(&table(&[1, 1]), &table(&[1, 1])), Err(Error::Internal(_))));
    }

    #[test]
    fn whole_tree_examples() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t = build_maximal_cotree(&two_k2);
        let ris = compute_ris_tables(&t, &[0, 2].into()).unwrap();
        assert_eq!(ris[0].values(), &[2, 2, 2]);

        let k1 = build_maximal_cotree(&Graph::empty(1));
        assert_eq!(compute_ris_tables(&k1, &[0].into()).unwrap()[0].values(), &[1, 1]);

        let c4 = build_maximal_cotree(&Graph::cycle(4));
        assert_eq!(compute_ris_tables(&c4, &[0, 2].into()).unwrap()[0].values(), &[2, 2, 2]);
    }

    #[test]
    fn rejects_sets_straddling_a_join() {
        let t = build_maximal_cotree(&Graph::complete(2));
        assert!(matches!(compute_ris_tables(&t, &[0, 1].into()), Err(Error::Precondition(_))));
        assert!(matches!(
            compute_ris_tables(&t, &[5].into()),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }
}
