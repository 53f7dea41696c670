//! Generalized cotrees: binary union/join trees whose leaves carry graphs.
//!
//! Every node `u` owns a contiguous range of the tree's vertex order, so
//! `V_u` is a slice and the whole tree costs `O(n)` memory regardless of
//! depth. Node ids are assigned parent-before-child, which makes
//! `(0..len).rev()` a valid bottom-up order and `0..len` a valid top-down
//! order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Union,
    Join,
    Leaf,
}

impl NodeKind {
    pub fn name(self) -> &'static str {
        match self {
            NodeKind::Union => "union",
            NodeKind::Join => "join",
            NodeKind::Leaf => "leaf",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CotreeNode {
    kind: NodeKind,
    children: Option<(NodeId, NodeId)>,
    parent: Option<NodeId>,
    lo: usize,
    hi: usize,
    /// Present on nontrivial leaves only. Local vertex `i` of this graph is
    /// the `i`-th entry of the leaf's vertex slice.
    leaf_graph: Option<Graph>,
}

impl CotreeNode {
    fn placeholder(parent: Option<NodeId>, lo: usize, hi: usize) -> Self {
        CotreeNode { kind: NodeKind::Leaf, children: None, parent, lo, hi, leaf_graph: None }
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn children(&self) -> Option<(NodeId, NodeId)> {
        self.children
    }

    pub fn parent(&self) -> Option<NodeId> {
        self.parent
    }

    pub fn size(&self) -> usize {
        self.hi - self.lo
    }

    pub fn leaf_graph(&self) -> Option<&Graph> {
        self.leaf_graph.as_ref()
    }
}

#[derive(Clone, Debug)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    order: Vec<usize>,
}

impl Cotree {
    pub const ROOT: NodeId = 0;

    pub fn root(&self) -> NodeId {
        Self::ROOT
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of vertices of the represented graph.
    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn node(&self, u: NodeId) -> &CotreeNode {
        &self.nodes[u]
    }

    pub fn kind(&self, u: NodeId) -> NodeKind {
        self.nodes[u].kind
    }

    pub fn children(&self, u: NodeId) -> Option<(NodeId, NodeId)> {
        self.nodes[u].children
    }

    pub fn parent(&self, u: NodeId) -> Option<NodeId> {
        self.nodes[u].parent
    }

    /// `V_u`, in root-graph ids.
    pub fn vertex_set(&self, u: NodeId) -> &[usize] {
        let node = &self.nodes[u];
        &self.order[node.lo..node.hi]
    }

    pub fn is_leaf(&self, u: NodeId) -> bool {
        self.nodes[u].kind == NodeKind::Leaf
    }

    pub fn is_trivial_leaf(&self, u: NodeId) -> bool {
        self.is_leaf(u) && self.nodes[u].size() == 1
    }

    pub fn leaf_graph(&self, u: NodeId) -> Option<&Graph> {
        self.nodes[u].leaf_graph.as_ref()
    }

    pub fn nontrivial_leaves(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.len()).filter(|&u| self.is_leaf(u) && !self.is_trivial_leaf(u))
    }

    /// Whether every leaf holds a single vertex.
    pub fn is_cotree(&self) -> bool {
        self.nontrivial_leaves().next().is_none()
    }

    /// Leaf node holding vertex `v`, by scanning; `O(len)`.
    pub fn leaf_of(&self, v: usize) -> Option<NodeId> {
        (0..self.len()).find(|&u| self.is_leaf(u) && self.vertex_set(u).contains(&v))
    }

    /// Node ids in preorder, left child before right child.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![Self::ROOT];
        while let Some(u) = stack.pop() {
            out.push(u);
            if let Some((l, r)) = self.children(u) {
                stack.push(r);
                stack.push(l);
            }
        }
        out
    }

    // ---- construction by hand -------------------------------------------

    /// Trivial leaf holding vertex `v`.
    pub fn vertex(v: usize) -> Cotree {
        Cotree {
            nodes: vec![CotreeNode::placeholder(None, 0, 1)],
            order: vec![v],
        }
    }

    /// Leaf carrying `g`, whose local vertex `i` becomes vertex `ids[i]`.
    /// `ids` must be strictly increasing.
    pub fn graph_leaf(g: Graph, ids: Vec<usize>) -> Result<Cotree> {
        if ids.len() != g.vertex_count() {
            return Err(Error::MalformedCotree(format!(
                "leaf graph has {} vertices but {} ids were given",
                g.vertex_count(),
                ids.len()
            )));
        }
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedCotree("leaf ids must be strictly increasing".into()));
        }
        if ids.is_empty() {
            return Err(Error::MalformedCotree("leaf graph is empty".into()));
        }
        let mut node = CotreeNode::placeholder(None, 0, ids.len());
        if ids.len() > 1 {
            node.leaf_graph = Some(g);
        }
        Ok(Cotree { nodes: vec![node], order: ids })
    }

    pub fn union(left: Cotree, right: Cotree) -> Cotree {
        Self::combine(NodeKind::Union, left, right)
    }

    pub fn join(left: Cotree, right: Cotree) -> Cotree {
        Self::combine(NodeKind::Join, left, right)
    }

    fn combine(kind: NodeKind, left: Cotree, right: Cotree) -> Cotree {
        let nl = left.nodes.len();
        let off = left.order.len();
        let mut nodes = Vec::with_capacity(1 + nl + right.nodes.len());
        nodes.push(CotreeNode {
            kind,
            children: Some((1, 1 + nl)),
            parent: None,
            lo: 0,
            hi: off + right.order.len(),
            leaf_graph: None,
        });
        let shift = |mut n: CotreeNode, id_shift: usize, pos_shift: usize| {
            n.children = n.children.map(|(a, b)| (a + id_shift, b + id_shift));
            n.parent = Some(n.parent.map_or(0, |p| p + id_shift));
            n.lo += pos_shift;
            n.hi += pos_shift;
            n
        };
        nodes.extend(left.nodes.into_iter().map(|n| shift(n, 1, 0)));
        nodes.extend(right.nodes.into_iter().map(|n| shift(n, 1 + nl, off)));
        let mut order = left.order;
        order.extend(right.order);
        Cotree { nodes, order }
    }

    /// Structural check: binary shape, parent links, ranges nesting as
    /// disjoint unions, vertex ids forming a permutation of `0..n`, leaf
    /// graphs sized to their ranges, and parent ids below child ids.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedCotree(msg));
        if self.nodes.is_empty() {
            return bad("tree has no nodes".into());
        }
        let n = self.order.len();
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || seen[v] {
                return bad(format!("vertex ids are not a permutation of 0..{n}"));
            }
            seen[v] = true;
        }
        let root = &self.nodes[0];
        if root.parent.is_some() || root.lo != 0 || root.hi != n {
            return bad("root must span every vertex and have no parent".into());
        }
        for (u, node) in self.nodes.iter().enumerate() {
            if node.lo >= node.hi {
                return bad(format!("node {u} has an empty vertex set"));
            }
            match (node.kind, node.children) {
                (NodeKind::Leaf, None) => {
                    if node.size() > 1 {
                        match &node.leaf_graph {
                            Some(g) if g.vertex_count() == node.size() => {}
                            _ => return bad(format!("leaf {u} lacks a graph of matching size")),
                        }
                    }
                }
                (NodeKind::Leaf, Some(_)) => return bad(format!("leaf {u} has children")),
                (_, None) => return bad(format!("internal node {u} lacks children")),
                (_, Some((l, r))) => {
                    if l <= u || r <= u || l >= self.nodes.len() || r >= self.nodes.len() || l == r {
                        return bad(format!("node {u} has invalid child ids ({l}, {r})"));
                    }
                    let (ln, rn) = (&self.nodes[l], &self.nodes[r]);
                    if ln.parent != Some(u) || rn.parent != Some(u) {
                        return bad(format!("children of node {u} do not point back to it"));
                    }
                    if ln.lo != node.lo || ln.hi != rn.lo || rn.hi != node.hi {
                        return bad(format!("children of node {u} do not partition its vertices"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rebuilds `G_root` bottom-up from the tree.
    pub fn realize(&self) -> Result<Graph> {
        self.validate()?;
        let mut b = GraphBuilder::new(self.vertex_count());
        for u in 0..self.len() {
            match self.kind(u) {
                NodeKind::Join => {
                    let (l, r) = self.children(u).expect("validated");
                    for &x in self.vertex_set(l) {
                        for &y in self.vertex_set(r) {
                            b.set_edge(x, y);
                        }
                    }
                }
                NodeKind::Leaf => {
                    if let Some(h) = self.leaf_graph(u) {
                        let ids = self.vertex_set(u);
                        for (a, c) in h.edges() {
                            b.set_edge(ids[a], ids[c]);
                        }
                    }
                }
                NodeKind::Union => {}
            }
        }
        Ok(b.build())
    }

    /// Indented text dump: node id, kind, `|V_u|` and the vertex list.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(Self::ROOT, 0usize)];
        while let Some((u, depth)) = stack.pop() {
            let mut ids = self.vertex_set(u).to_vec();
            ids.sort_unstable();
            let kind = if self.is_leaf(u) && !self.is_trivial_leaf(u) {
                "leaf*"
            } else {
                self.kind(u).name()
            };
            let _ = writeln!(
                out,
                "{:indent$}#{u} {kind} |V|={} {:?}",
                "",
                ids.len(),
                ids,
                indent = 2 * depth
            );
            if let Some((l, r)) = self.children(u) {
                stack.push((r, depth + 1));
                stack.push((l, depth + 1));
            }
        }
        out
    }
}

/// Splits `s` (sorted) into connected components of `G[s]`, or of its
/// complement when `complement` is set. Components come out sorted and
/// ordered by smallest member.
fn split(g: &Graph, s: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut unvisited: Vec<usize> = s.to_vec();
    let mut comps = Vec::new();
    while !unvisited.is_empty() {
        let start = unvisited.remove(0);
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() && !unvisited.is_empty() {
            let x = comp[head];
            head += 1;
            unvisited.retain(|&y| {
                if g.has_edge(x, y) != complement {
                    comp.push(y);
                    false
                } else {
                    true
                }
            });
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Maximal cotree decomposition of `g`: union/join splits are applied until
/// every leaf graph is a single vertex or indecomposable (connected with a
/// connected complement). Multiway splits become left-deep binary chains.
///
/// Panics if `g` has no vertices.
pub fn build_maximal_cotree(g: &Graph) -> Cotree {
    let n = g.vertex_count();
    assert!(n > 0, "cannot decompose the empty graph");
    let mut order: Vec<usize> = (0..n).collect();
    let mut nodes = vec![CotreeNode::placeholder(None, 0, n)];
    // (node, kind of split already known to fail for it)
    let mut work: Vec<(NodeId, Option<NodeKind>)> = vec![(0, None)];

    while let Some((u, known_prime_for)) = work.pop() {
        let (lo, hi) = (nodes[u].lo, nodes[u].hi);
        if hi - lo == 1 {
            continue;
        }
        order[lo..hi].sort_unstable();
        let s = order[lo..hi].to_vec();

        let mut parts = Vec::new();
        let mut kind = NodeKind::Leaf;
        if known_prime_for != Some(NodeKind::Union) {
            parts = split(g, &s, false);
            if parts.len() > 1 {
                kind = NodeKind::Union;
            }
        }
        if kind == NodeKind::Leaf && known_prime_for != Some(NodeKind::Join) {
            parts = split(g, &s, true);
            if parts.len() > 1 {
                kind = NodeKind::Join;
            }
        }
        if kind == NodeKind::Leaf {
            nodes[u].leaf_graph = Some(g.induced_unchecked(&s));
            continue;
        }

        let mut pos = lo;
        let mut starts = Vec::with_capacity(parts.len() + 1);
        for p in &parts {
            starts.push(pos);
            order[pos..pos + p.len()].copy_from_slice(p);
            pos += p.len();
        }
        starts.push(hi);

        // u = op(prefix(c-1), part c); prefix(j) = op(prefix(j-1), part j)
        let mut cur = u;
        for j in (1..parts.len()).rev() {
            nodes[cur].kind = kind;
            let left = nodes.len();
            nodes.push(CotreeNode::placeholder(Some(cur), lo, starts[j]));
            let right = nodes.len();
            nodes.push(CotreeNode::placeholder(Some(cur), starts[j], starts[j + 1]));
            nodes[cur].children = Some((left, right));
            work.push((right, Some(kind)));
            if j == 1 {
                work.push((left, Some(kind)));
            }
            cur = left;
        }
    }
    Cotree { nodes, order }
}

/// Whether `g` is a cograph, i.e. its maximal decomposition has only
/// single-vertex leaves.
pub fn is_cograph(g: &Graph) -> bool {
    g.vertex_count() == 0 || build_maximal_cotree(g).is_cotree()
}

/// Whether every nontrivial leaf graph passes `class_test`.
pub fn classify_leaves<F>(t: &Cotree, class_test: F) -> bool
where
    F: Fn(&Graph) -> bool,
{
    t.nontrivial_leaves().all(|u| class_test(t.leaf_graph(u).expect("nontrivial leaf")))
}
