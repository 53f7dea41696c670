//! Brute-force ground truth over explicit solution graphs, and seeded
//! random instance generators. Exponential; meant for small graphs.

mod generate;
mod solution;

pub use generate::{gen_chordal, gen_composed, gen_cograph, random_independent_set, random_walk};
pub use solution::{Model, SolutionGraph, MASK_LIMIT};

use crate::cotree::Cotree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use solution::to_mask;

pub const DEFAULT_CAP: usize = 20;

/// Environment variable overriding the vertex cap.
pub const CAP_VAR: &str = "RECON_ORACLE_CAP";

/// Answer to a brute-force reachability query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reach {
    pub reachable: bool,
    pub distance: Option<usize>,
}

/// Brute-force queries, refusing graphs with more than `cap` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Oracle {
        Oracle { cap: cap.min(MASK_LIMIT) }
    }

    /// Cap from `RECON_ORACLE_CAP` when set to a number, else the default.
    pub fn from_env() -> Oracle {
        std::env::var(CAP_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map_or_else(Oracle::default, Oracle::new)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn solution_graph(&self, g: &Graph, k: usize, model: Model) -> Result<SolutionGraph> {
        if g.vertex_count() > self.cap {
            return Err(Error::Capacity { n: g.vertex_count(), cap: self.cap });
        }
        SolutionGraph::new(g, k, model)
    }

    fn locate(&self, sg: &SolutionGraph, g: &Graph, s: &VertexSet) -> Result<usize> {
        g.require_independent(s)?;
        sg.id_of(s).ok_or_else(|| {
            Error::Precondition(format!(
                "{s} is not a configuration at k = {} under {:?}",
                sg.k(),
                sg.model()
            ))
        })
    }

    /// Reachability and shortest length from `a` to `b`.
    pub fn reach(&self, g: &Graph, a: &VertexSet, b: &VertexSet, k: usize, model: Model) -> Result<Reach> {
        let sg = self.solution_graph(g, k, model)?;
        let (ia, ib) = (self.locate(&sg, g, a)?, self.locate(&sg, g, b)?);
        let distance = sg.distances_from(ia)[ib];
        Ok(Reach { reachable: distance.is_some(), distance })
    }

    /// Every set reachable from `a` by add/remove steps at threshold `k`, as bitmasks.
    pub fn reachable_masks(&self, g: &Graph, a: &VertexSet, k: usize) -> Result<Vec<u64>> {
        let sg = self.solution_graph(g, k, Model::Tar)?;
        let ia = self.locate(&sg, g, a)?;
        Ok(sg.component(ia).into_iter().map(|j| sg.masks()[j]).collect())
    }

    /// Minimum of `|J ∩ module|` over sets `J` reachable from `a`.
    pub fn freedom(&self, g: &Graph, a: &VertexSet, k: usize, module: &[usize]) -> Result<usize> {
        let family = self.reachable_masks(g, a, k)?;
        let m = to_mask(&VertexSet::from(module));
        Ok(family.iter().map(|j| (j & m).count_ones() as usize).min().expect("a reaches itself"))
    }

    /// Minimum occupancy of every node of `t`, from one scan of the family.
    pub fn freedoms(&self, g: &Graph, t: &Cotree, a: &VertexSet, k: usize) -> Result<Vec<usize>> {
        let family = self.reachable_masks(g, a, k)?;
        Ok((0..t.len())
            .map(|u| {
                let m = to_mask(&VertexSet::from(t.vertex_set(u)));
                family.iter().map(|j| (j & m).count_ones() as usize).min().expect("nonempty")
            })
            .collect())
    }

    /// Largest set reachable from `i` at threshold `ell`.
    pub fn ris(&self, g: &Graph, i: &VertexSet, ell: usize) -> Result<usize> {
        let family = self.reachable_masks(g, i, ell)?;
        Ok(family.iter().map(|j| j.count_ones() as usize).max().expect("nonempty"))
    }

    /// Vertices lying in some set reachable from `a`.
    pub fn accessible(&self, g: &Graph, a: &VertexSet, k: usize) -> Result<VertexSet> {
        let family = self.reachable_masks(g, a, k)?;
        Ok(solution::from_mask(family.iter().fold(0, |acc, j| acc | j)))
    }

    /// Largest distance within any component of the solution graph.
    pub fn diameter(&self, g: &Graph, k: usize, model: Model) -> Result<usize> {
        Ok(self.solution_graph(g, k, model)?.diameter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::build_maximal_cotree;

    fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn reach_examples() {
        let o = Oracle::default();
        let c4 = Graph::cycle(4);
        let (a, b) = (VertexSet::from([0, 2]), VertexSet::from([1, 3]));
        assert_eq!(o.reach(&c4, &a, &b, 1, Model::Tar).unwrap(), Reach { reachable: false, distance: None });
        assert_eq!(o.reach(&c4, &a, &b, 0, Model::Tar).unwrap().distance, Some(4));
        assert_eq!(o.reach(&c4, &a, &a, 2, Model::Tj).unwrap().distance, Some(0));
        assert!(matches!(o.reach(&c4, &a, &[1].into(), 2, Model::Tar), Err(Error::Precondition(_))));
    }

    #[test]
    fn occupancy_examples() {
        let o = Oracle::default();
        let g = two_k2();
        let t = build_maximal_cotree(&g);
        let left_join = t.children(t.root()).unwrap().0;
        assert_eq!(o.freedom(&g, &[0, 2].into(), 2, t.vertex_set(left_join)).unwrap(), 1);
        assert_eq!(o.ris(&Graph::empty(1), &[0].into(), 1).unwrap(), 1);
        assert_eq!(o.accessible(&Graph::cycle(4), &[0, 2].into(), 1).unwrap(), VertexSet::from([0, 2]));
        // {0,2} cannot move at k = 2
        assert_eq!(o.accessible(&g, &[0, 2].into(), 2).unwrap(), VertexSet::from([0, 2]));
    }

    #[test]
    fn diameter_examples() {
        let o = Oracle::default();
        assert_eq!(o.diameter(&Graph::empty(1), 1, Model::Tar).unwrap(), 0);
        assert_eq!(o.diameter(&Graph::cycle(4), 1, Model::Tar).unwrap(), 2);
        assert_eq!(o.diameter(&Graph::empty(2), 0, Model::Tar).unwrap(), 2);
    }

    #[test]
    fn capacity_is_enforced() {
        let o = Oracle::new(3);
        assert_eq!(
            o.diameter(&Graph::empty(4), 0, Model::Tar),
            Err(Error::Capacity { n: 4, cap: 3 })
        );
    }
}
