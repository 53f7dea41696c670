use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One token move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Add(usize),
    Remove(usize),
}

impl Step {
    pub fn vertex(self) -> usize {
        match self {
            Step::Add(v) | Step::Remove(v) => v,
        }
    }

    pub fn inverse(self) -> Step {
        match self {
            Step::Add(v) => Step::Remove(v),
            Step::Remove(v) => Step::Add(v),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Add(v) => write!(f, "+{v}"),
            Step::Remove(v) => write!(f, "-{v}"),
        }
    }
}

/// A token addition/removal sequence: a start set and the moves applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TarSequence {
    k: usize,
    start: VertexSet,
    steps: Vec<Step>,
}

impl TarSequence {
    pub fn new(start: VertexSet, k: usize) -> TarSequence {
        TarSequence { k, start, steps: Vec::new() }
    }

    pub fn from_steps(start: VertexSet, k: usize, steps: Vec<Step>) -> TarSequence {
        TarSequence { k, start, steps }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn start(&self) -> &VertexSet {
        &self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of moves.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    /// Final set, assuming every step is applicable.
    pub fn end(&self) -> VertexSet {
        let mut s = self.start.clone();
        for &step in &self.steps {
            match step {
                Step::Add(v) => s.insert(v),
                Step::Remove(v) => s.remove(v),
            };
        }
        s
    }

    /// All intermediate sets, start and end included.
    pub fn sets(&self) -> Vec<VertexSet> {
        let mut s = self.start.clone();
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(s.clone());
        for &step in &self.steps {
            match step {
                Step::Add(v) => s.insert(v),
                Step::Remove(v) => s.remove(v),
            };
            out.push(s.clone());
        }
        out
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, other: TarSequence) {
        debug_assert_eq!(self.end(), other.start);
        self.steps.extend(other.steps);
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> TarSequence {
        TarSequence {
            k: self.k,
            start: self.end(),
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// Renames vertex `v` to `map[v]`.
    pub fn map_ids(&self, map: &[usize]) -> TarSequence {
        let step = |s: &Step| match *s {
            Step::Add(v) => Step::Add(map[v]),
            Step::Remove(v) => Step::Remove(map[v]),
        };
        TarSequence {
            k: self.k,
            start: self.start.map_ids(map),
            steps: self.steps.iter().map(step).collect(),
        }
    }

    /// Checks that every set is an independent set of `g` with at least `k`
    /// vertices and every step really adds an absent or removes a present vertex.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let fail = |i: usize, msg: String| Err(Error::Internal(format!("sequence step {i}: {msg}")));
        g.require_independent(&self.start)?;
        if self.start.len() < self.k {
            return fail(0, format!("start has {} < k = {} tokens", self.start.len(), self.k));
        }
        let n = g.vertex_count();
        let mut mask = self.start.mask(n);
        let mut size = self.start.len();
        for (i, &step) in self.steps.iter().enumerate() {
            let v = step.vertex();
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            match step {
                Step::Add(v) => {
                    if mask[v] {
                        return fail(i + 1, format!("{v} already holds a token"));
                    }
                    if let Some(w) = g.neighbors(v).find(|&w| mask[w]) {
                        return fail(i + 1, format!("adding {v} next to token on {w}"));
                    }
                    mask[v] = true;
                    size += 1;
                }
                Step::Remove(v) => {
                    if !mask[v] {
                        return fail(i + 1, format!("{v} holds no token"));
                    }
                    if size == self.k {
                        return fail(i + 1, format!("removing {v} drops below k = {}", self.k));
                    }
                    mask[v] = false;
                    size -= 1;
                }
            }
        }
        Ok(())
    }

    /// [`check`](Self::check) plus the declared endpoints.
    pub fn check_endpoints(&self, g: &Graph, from: &VertexSet, to: &VertexSet) -> Result<()> {
        self.check(g)?;
        if &self.start != from {
            return Err(Error::Internal(format!("sequence starts at {} instead of {from}", self.start)));
        }
        let end = self.end();
        if &end != to {
            return Err(Error::Internal(format!("sequence ends at {end} instead of {to}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_catches_each_violation() {
        let p3 = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let ok = TarSequence::from_steps([0].into(), 1, vec![Step::Add(1), Step::Remove(0)]);
        assert!(ok.check_endpoints(&p3, &[0].into(), &[1].into()).is_ok());
        assert_eq!(ok.sets(), vec![VertexSet::from([0]), VertexSet::from([0, 1]), VertexSet::from([1])]);

        let below_k = TarSequence::from_steps([0].into(), 1, vec![Step::Remove(0)]);
        assert!(below_k.check(&p3).is_err());
        let dependent = TarSequence::from_steps([0].into(), 1, vec![Step::Add(2)]);
        assert!(dependent.check(&p3).is_err());
        let phantom = TarSequence::from_steps([0].into(), 0, vec![Step::Remove(1)]);
        assert!(phantom.check(&p3).is_err());
        assert!(ok.check_endpoints(&p3, &[0].into(), &[0].into()).is_err());
    }

    #[test]
    fn reverse_and_rename() {
        let s = TarSequence::from_steps([0].into(), 1, vec![Step::Add(1), Step::Remove(0)]);
        let r = s.reversed();
        assert_eq!(r.start(), &VertexSet::from([1]));
        assert_eq!(r.end(), VertexSet::from([0]));
        let m = s.map_ids(&[5, 7]);
        assert_eq!(m.steps(), &[Step::Add(7), Step::Remove(5)]);
        assert_eq!(Step::Add(3).to_string(), "+3");
    }
}
