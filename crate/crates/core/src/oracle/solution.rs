use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Reconfiguration rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// Token addition/removal: sets of size at least `k`, one token added or removed per step.
    Tar,
    /// Token jumping: sets of size exactly `k`, one token moved per step.
    Tj,
}

/// Largest vertex count a bitmask solution graph can represent.
pub const MASK_LIMIT: usize = 63;

const DENSE_LIMIT: usize = 20;

pub(crate) fn to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

pub(crate) fn from_mask(m: u64) -> VertexSet {
    (0..64).filter(|&v| m >> v & 1 == 1).collect()
}

enum Index {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

/// Explicit solution graph: every qualifying independent set as a node,
/// edges given by single reconfiguration steps (computed on demand).
pub struct SolutionGraph {
    n: usize,
    k: usize,
    model: Model,
    sets: Vec<u64>,
    index: Index,
}

impl SolutionGraph {
    pub fn new(g: &Graph, k: usize, model: Model) -> Result<SolutionGraph> {
        let n = g.vertex_count();
        if n > MASK_LIMIT {
            return Err(Error::Capacity { n, cap: MASK_LIMIT });
        }
        let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0, |m, w| m | 1 << w)).collect();
        let (min, max) = match model {
            Model::Tar => (k, n),
            Model::Tj => (k, k),
        };
        let mut sets = Vec::new();
        enumerate(&adj, 0, 0, 0, (1u64 << n) - 1, min, max, &mut sets);
        let index = if n <= DENSE_LIMIT {
            let mut dense = vec![u32::MAX; 1 << n];
            for (i, &m) in sets.iter().enumerate() {
                dense[m as usize] = i as u32;
            }
            Index::Dense(dense)
        } else {
            Index::Sparse(sets.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect())
        };
        Ok(SolutionGraph { n, k, model, sets, index })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn masks(&self) -> &[u64] {
        &self.sets
    }

    pub fn set(&self, id: usize) -> VertexSet {
        from_mask(self.sets[id])
    }

    pub fn id_of_mask(&self, m: u64) -> Option<usize> {
        let id = match &self.index {
            Index::Dense(d) => *d.get(usize::try_from(m).ok()?)?,
            Index::Sparse(h) => *h.get(&m)?,
        };
        (id != u32::MAX).then_some(id as usize)
    }

    pub fn id_of(&self, s: &VertexSet) -> Option<usize> {
        if s.iter().any(|v| v >= self.n) {
            return None;
        }
        self.id_of_mask(to_mask(s))
    }

    pub fn for_each_neighbor<F: FnMut(usize)>(&self, id: usize, mut f: F) {
        let s = self.sets[id];
        let full = (1u64 << self.n) - 1;
        match self.model {
            Model::Tar => {
                for v in 0..self.n {
                    if let Some(j) = self.id_of_mask(s ^ 1 << v) {
                        f(j);
                    }
                }
            }
            Model::Tj => {
                let mut out = s;
                while out != 0 {
                    let u = out.trailing_zeros();
                    out &= out - 1;
                    let mut free = full & !s;
                    while free != 0 {
                        let v = free.trailing_zeros();
                        free &= free - 1;
                        if let Some(j) = self.id_of_mask(s ^ 1 << u ^ 1 << v) {
                            f(j);
                        }
                    }
                }
            }
        }
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_neighbor(id, |j| out.push(j));
        out
    }

    /// BFS distances from `id`; `None` for nodes in other components.
    pub fn distances_from(&self, id: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[id] = Some(0);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].expect("queued nodes have a distance") + 1;
            self.for_each_neighbor(x, |y| {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    queue.push_back(y);
                }
            });
        }
        dist
    }

    /// Ids of the component containing `id`.
    pub fn component(&self, id: usize) -> Vec<usize> {
        self.distances_from(id)
            .iter()
            .enumerate()
            .filter_map(|(j, d)| d.map(|_| j))
            .collect()
    }

    /// Component label per node, labels numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.len()];
        let mut next = 0;
        for start in 0..self.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                self.for_each_neighbor(x, |y| {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                });
            }
            next += 1;
        }
        label
    }

    /// Largest finite distance between two nodes of one component.
    pub fn diameter(&self) -> usize {
        (0..self.len())
            .map(|s| self.distances_from(s).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }
}

/// Independent sets with size in `min..=max`, extending `set` by vertices
/// `>= start` that lie in `allowed`.
#[allow(clippy::too_many_arguments)]
fn enumerate(
    adj: &[u64],
    start: usize,
    set: u64,
    size: usize,
    allowed: u64,
    min: usize,
    max: usize,
    out: &mut Vec<u64>,
) {
    if size >= min {
        out.push(set);
    }
    if size == max {
        return;
    }
    let mut rest = allowed & !((1u64 << start) - 1);
    if size + (rest.count_ones() as usize) < min {
        return;
    }
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        enumerate(adj, v + 1, set | 1 << v, size + 1, allowed & !adj[v] & !(1 << v), min, max, out);
    }
}
