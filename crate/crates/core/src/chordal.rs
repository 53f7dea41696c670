//! Base-case solver for chordal leaf graphs.
//!
//! Chordal graphs are recognised with Lex-BFS: the reverse of a Lex-BFS
//! visit order is a perfect elimination ordering exactly when the graph is
//! chordal. A maximum independent set then falls out of a greedy pass along
//! that ordering. Since chordal graphs are even-hole-free, TAR reachability
//! inside a leaf reduces to a domination test.

use crate::engine::RisTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex elimination ordering together with whether it is perfect
/// (every vertex's later neighbours form a clique).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
    perfect: bool,
}

impl EliminationOrdering {
    /// Wraps an arbitrary ordering and checks whether it is perfect for `g`.
    pub fn check(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("vertex {v} appears twice in ordering")));
            }
        }
        if order.len() != n {
            return Err(Error::Precondition("ordering must list every vertex".into()));
        }
        let perfect = is_perfect_ordering(g, &order);
        Ok(EliminationOrdering { order, perfect })
    }

    /// Vertices in elimination order (first entry is eliminated first).
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_perfect(&self) -> bool {
        self.perfect
    }
}

fn is_perfect_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // For each v, with p its earliest later neighbour, the remaining later
    // neighbours of v must all be adjacent to p.
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        match later.iter().min_by_key(|&&w| pos[w]) {
            None => true,
            Some(&p) => later.iter().all(|&w| w == p || g.has_edge(p, w)),
        }
    })
}

/// Lex-BFS visit order, ties broken by smallest id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut classes: Vec<Vec<usize>> = if n == 0 { vec![] } else { vec![(0..n).collect()] };
    let mut visit = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let x = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        visit.push(x);
        let mut refined = Vec::with_capacity(classes.len() * 2);
        for class in classes {
            let (near, far): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&y| g.has_edge(x, y));
            if !near.is_empty() {
                refined.push(near);
            }
            if !far.is_empty() {
                refined.push(far);
            }
        }
        classes = refined;
    }
    visit
}

/// Reverse Lex-BFS ordering; perfect iff `g` is chordal.
pub fn chordality(g: &Graph) -> EliminationOrdering {
    let mut order = lex_bfs(g);
    order.reverse();
    let perfect = is_perfect_ordering(g, &order);
    EliminationOrdering { order, perfect }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_perfect()
}

/// `α(g)` and one maximum independent set, by taking each vertex along the
/// perfect elimination ordering unless a neighbour was already taken.
pub fn alpha_chordal(g: &Graph, peo: &EliminationOrdering) -> Result<(usize, VertexSet)> {
    if !peo.is_perfect() {
        return Err(Error::Precondition("ordering is not a perfect elimination ordering".into()));
    }
    let mut blocked = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    for &v in peo.order() {
        if blocked[v] {
            continue;
        }
        chosen.push(v);
        blocked[v] = true;
        for w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    Ok((chosen.len(), VertexSet::from_vec(chosen)))
}

/// Whether every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    let mut covered = s.mask(g.vertex_count());
    for v in s.iter() {
        for w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

fn require_chordal(g: &Graph) -> Result<EliminationOrdering> {
    let peo = chordality(g);
    if peo.is_perfect() {
        Ok(peo)
    } else {
        Err(Error::Unsupported(format!(
            "leaf graph on {} vertices is not chordal",
            g.vertex_count()
        )))
    }
}

/// TAR reachability between `a` and `b` in a chordal graph at threshold `ell`:
/// distinct sets are connected unless one of them is a dominating set of
/// size exactly `ell` (which leaves it isolated).
pub fn leaf_reachable(g: &Graph, a: &VertexSet, b: &VertexSet, ell: usize) -> Result<bool> {
    require_chordal(g)?;
    g.require_independent(a)?;
    g.require_independent(b)?;
    if a.len() < ell || b.len() < ell {
        return Err(Error::Precondition(format!(
            "threshold {ell} exceeds set sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a == b || ell == 0 {
        return Ok(true);
    }
    let stuck = |s: &VertexSet| s.len() == ell && is_dominating(g, s);
    Ok(!stuck(a) && !stuck(b))
}

/// Largest reachable independent set size from `i`, for every threshold
/// `0..=|i|`. Everything reaches a maximum independent set except a
/// dominating set at threshold equal to its own size, which cannot move.
pub fn leaf_ris_table(g: &Graph, i: &VertexSet) -> Result<RisTable> {
    let peo = require_chordal(g)?;
    g.require_independent(i)?;
    let (alpha, _) = alpha_chordal(g, &peo)?;
    let base = i.len();
    let mut values = vec![alpha; base + 1];
    if is_dominating(g, i) {
        values[base] = base;
    }
    Ok(RisTable::new(base, values))
}
