use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{build_witness, Step, TarSequence};

/// Move of one token from `from` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Jump {
    pub from: usize,
    pub to: usize,
}

impl fmt::Display for Jump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.from, self.to)
    }
}

/// Token jumping sequence between independent sets of one fixed size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpSequence {
    start: VertexSet,
    jumps: Vec<Jump>,
}

impl JumpSequence {
    pub fn start(&self) -> &VertexSet {
        &self.start
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    pub fn sets(&self) -> Vec<VertexSet> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for j in &self.jumps {
            cur.remove(j.from);
            cur.insert(j.to);
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self) -> VertexSet {
        self.sets().pop().unwrap_or_default()
    }

    /// Every intermediate set is independent, every jump moves a token
    /// onto a free vertex, and the walk runs from `from` to `to`.
    pub fn check_endpoints(&self, g: &Graph, from: &VertexSet, to: &VertexSet) -> Result<()> {
        if &self.start != from {
            return Err(Error::Internal(format!("jump sequence starts at {}, expected {from}", self.start)));
        }
        let mut cur = self.start.clone();
        g.require_independent(&cur).map_err(|e| Error::Internal(e.to_string()))?;
        for (p, j) in self.jumps.iter().enumerate() {
            if !cur.remove(j.from) || !cur.insert(j.to) {
                return Err(Error::Internal(format!("jump {p} ({j}) does not move a token to a free vertex")));
            }
            if let Some((x, y)) = g.independence_conflict(&cur) {
                return Err(Error::Internal(format!("jump {p} ({j}) puts tokens on adjacent {x} and {y}")));
            }
        }
        if &cur != to {
            return Err(Error::Internal(format!("jump sequence ends at {cur}, expected {to}")));
        }
        Ok(())
    }
}

/// Turn an addition/removal walk that never drops below `|start| - 1`
/// tokens into jumps. The jump configuration stays inside the current set
/// whenever that set holds at least `|start|` tokens, so a removal either
/// hits a spare token, jumps onto another spare one, or is paired with the
/// addition that must follow it.
pub fn jumps_from_tar(seq: &TarSequence) -> Result<JumpSequence> {
    let size = seq.start().len();
    let mut tar = seq.start().clone();
    let mut cur = seq.start().clone();
    let mut jumps = Vec::new();
    let mut pending: Option<usize> = None;
    for &step in seq.steps() {
        match step {
            Step::Add(v) => {
                tar.insert(v);
                if let Some(from) = pending.take() {
                    if !cur.contains(v) {
                        cur.remove(from);
                        cur.insert(v);
                        jumps.push(Jump { from, to: v });
                    }
                }
            }
            Step::Remove(v) => {
                if pending.is_some() || tar.len() < size {
                    return Err(Error::Precondition(format!("walk drops below {} tokens", size.saturating_sub(1))));
                }
                tar.remove(v);
                if !cur.contains(v) {
                    continue;
                }
                if tar.len() < size {
                    pending = Some(v);
                } else {
                    let to = tar.iter().find(|&w| !cur.contains(w)).expect("a spare token exists");
                    cur.remove(v);
                    cur.insert(to);
                    jumps.push(Jump { from: v, to });
                }
            }
        }
    }
    if pending.is_some() || cur != tar {
        return Err(Error::Precondition(format!("walk ends at {tar}, not a set of size {size}")));
    }
    Ok(JumpSequence { start: seq.start().clone(), jumps })
}

/// Explicit token jumping sequence from `a` to `b` on a cograph, of length
/// at most `2n - |a|`: each jump spends one removal of a walk of length at
/// most `4n - 2|a|` that has as many additions as removals.
pub fn build_jump_witness(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<JumpSequence> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { a: a.len(), b: b.len() });
    }
    if a.is_empty() {
        return Ok(JumpSequence { start: a.clone(), jumps: Vec::new() });
    }
    let walk = build_witness(g, a, b, a.len() - 1)?;
    let seq = jumps_from_tar(&walk)?;
    seq.check_endpoints(g, a, b)?;
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn converts_walks() {
        let c4 = Graph::cycle(4);
        let walk = TarSequence::from_steps(
            [0].into(),
            0,
            vec![Step::Add(2), Step::Remove(0), Step::Remove(2), Step::Add(1)],
        );
        let j = jumps_from_tar(&walk).unwrap();
        assert_eq!(j.jumps(), &[Jump { from: 0, to: 2 }, Jump { from: 2, to: 1 }]);
        j.check_endpoints(&c4, &[0].into(), &[1].into()).unwrap();

        let too_low = TarSequence::from_steps([0, 2].into(), 0, vec![Step::Remove(0), Step::Remove(2)]);
        assert!(matches!(jumps_from_tar(&too_low), Err(Error::Precondition(_))));
    }

    #[test]
    fn jump_witness_examples() {
        let c4 = Graph::cycle(4);
        let w = build_jump_witness(&c4, &[0].into(), &[1].into()).unwrap();
        assert!(w.len() <= 7);
        w.check_endpoints(&c4, &[0].into(), &[1].into()).unwrap();
        assert!(matches!(build_jump_witness(&c4, &[0, 2].into(), &[1, 3].into()), Err(Error::Precondition(_))));
        assert!(matches!(build_jump_witness(&c4, &[0].into(), &[1, 3].into()), Err(Error::SizeMismatch { .. })));
        assert!(build_jump_witness(&c4, &VertexSet::new(), &VertexSet::new()).unwrap().is_empty());
    }
}
