//! Simple undirected graphs over dense vertex ids `0..n`, plus vertex sets.
//!
//! Adjacency is a bit matrix, so `has_edge` is constant time and dense
//! graphs (joins of large cographs) stay compact. Graphs are immutable once
//! built; use [`GraphBuilder`] to assemble one.

use std::fmt;

use crate::error::{Error, Result};

/// A set of vertex ids, kept sorted and free of duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from ids in any order; duplicates collapse.
    pub fn from_vec(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_vec(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.difference(other).union(&other.difference(self))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Membership mask over `0..n`. Ids must already be in range.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    /// Re-expresses the set through an id map (`map[v]` is the new id of `v`).
    pub fn map_ids(&self, map: &[usize]) -> VertexSet {
        VertexSet::from_vec(self.iter().map(|v| map[v]).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        VertexSet::from_vec(ids.to_vec())
    }
}

impl From<&[usize]> for VertexSet {
    fn from(ids: &[usize]) -> Self {
        VertexSet::from_vec(ids.to_vec())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Incremental construction of a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        GraphBuilder { n, words, rows: vec![0; n * words], edges: 0 }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds the edge `uv`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.set_edge(u, v))
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) -> bool {
        let bit = 1u64 << (v % 64);
        let slot = &mut self.rows[u * self.words + v / 64];
        if *slot & bit != 0 {
            return false;
        }
        *slot |= bit;
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
        self.edges += 1;
        true
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            rows: self.rows,
            edges: self.edges,
            labels: (0..self.n).collect(),
        }
    }
}

/// An immutable simple undirected graph.
///
/// Every graph remembers, per vertex, the id it had in the graph it was
/// originally extracted from (`label`). Fresh graphs carry the identity map;
/// [`Graph::induced_subgraph`] composes the maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
    labels: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.set_edge(u, v);
            }
        }
        b.build()
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 1..n {
            b.set_edge(u - 1, u);
        }
        b.build()
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            b.set_edge(u, (u + 1) % n);
        }
        b.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & (1u64 << (v % 64)) != 0
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Original id of local vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.set_edge(u, v);
                }
            }
        }
        Graph { labels: self.labels.clone(), ..b.build() }
    }

    /// Fails on the first id that is out of range.
    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// First adjacent pair inside `s`, if any. Ids must be in range.
    pub fn independence_conflict(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let ids = s.as_slice();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if self.has_edge(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.independence_conflict(s).is_none())
    }

    /// Validates ids and independence in one go.
    pub fn require_independent(&self, s: &VertexSet) -> Result<()> {
        self.check_set(s)?;
        match self.independence_conflict(s) {
            Some((a, b)) => Err(Error::NotIndependent(a, b)),
            None => Ok(()),
        }
    }

    /// Whether every vertex outside `m` sees either all of `m` or none of it.
    pub fn is_module(&self, m: &VertexSet) -> Result<bool> {
        self.check_set(m)?;
        let Some(first) = m.iter().next() else {
            return Err(Error::EmptyModule);
        };
        let inside = m.mask(self.n);
        for v in (0..self.n).filter(|&v| !inside[v]) {
            let sees_first = self.has_edge(v, first);
            if m.iter().any(|x| self.has_edge(v, x) != sees_first) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The subgraph induced by `s`. Local vertex `i` is the `i`-th smallest
    /// member of `s`; labels are composed so they still name original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, ids: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(ids.len());
        for (i, &x) in ids.iter().enumerate() {
            for (j, &y) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(x, y) {
                    b.set_edge(i, j);
                }
            }
        }
        Graph { labels: ids.iter().map(|&x| self.labels[x]).collect(), ..b.build() }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn independence_examples() {
        assert!(c4().is_independent(&[0, 2].into()).unwrap());
        assert!(!c4().is_independent(&[0, 1].into()).unwrap());
        assert!(Graph::empty(3).is_independent(&[0, 1, 2].into()).unwrap());
        assert_eq!(
            c4().is_independent(&[0, 7].into()),
            Err(Error::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn module_examples() {
        assert!(c4().is_module(&[0, 2].into()).unwrap());
        assert!(!Graph::path(4).is_module(&[0, 1].into()).unwrap());
        let p4 = Graph::path(4);
        assert!(p4.is_module(&(0..4).collect()).unwrap());
        assert_eq!(p4.is_module(&VertexSet::new()), Err(Error::EmptyModule));
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = c4();
        let p = g.induced_subgraph(&[0, 1, 2].into()).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.labels(), &[0, 1, 2]);

        let two = g.induced_subgraph(&[0, 2].into()).unwrap();
        assert_eq!(two.vertex_count(), 2);
        assert_eq!(two.edge_count(), 0);
        assert_eq!(two.labels(), &[0, 2]);

        let p4 = Graph::path(4);
        let same = p4.induced_subgraph(&(0..4).collect()).unwrap();
        assert_eq!(same, p4);
    }

    #[test]
    fn induced_labels_compose() {
        let g = Graph::path(6);
        let h = g.induced_subgraph(&[1, 3, 4, 5].into()).unwrap();
        let hh = h.induced_subgraph(&[0, 2, 3].into()).unwrap();
        assert_eq!(hh.labels(), &[1, 4, 5]);
        assert!(hh.has_edge(1, 2));
        assert!(!hh.has_edge(0, 1));
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3);
        assert_eq!(b.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(b.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(b.add_edge(0, 1), Ok(true));
        assert_eq!(b.add_edge(1, 0), Ok(false));
        assert_eq!(b.build().edge_count(), 1);
    }

    #[test]
    fn neighbors_cross_word_boundaries() {
        let g = Graph::from_edges(130, [(0, 63), (0, 64), (0, 129), (5, 64)]).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![63, 64, 129]);
        assert_eq!(g.degree(64), 2);
        assert_eq!(g.complement().edge_count(), 130 * 129 / 2 - 4);
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [3, 1, 2, 1].into();
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        let b: VertexSet = [2, 5].into();
        assert_eq!(a.symmetric_difference(&b).as_slice(), &[1, 3, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(format!("{a}"), "{1,2,3}");
    }
}
