//! Random engine-versus-brute-force comparison with counterexample shrinking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recon_core::oracle::{gen_cograph, gen_composed, random_independent_set, random_walk, Model, Oracle};
use recon_core::witness::build_jump_witness;
use recon_core::{build_witness, decide, is_cograph, tj_decide, Graph, VertexSet};

use crate::input::format_graph;
use crate::CliError;

#[derive(Clone, Debug)]
pub struct Case {
    pub g: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub k: usize,
}

impl Case {
    /// The same query with vertex `v` deleted and ids above it shifted down.
    fn without(&self, v: usize) -> Case {
        let keep: VertexSet = (0..self.g.vertex_count()).filter(|&x| x != v).collect();
        let shift = |s: &VertexSet| -> VertexSet { s.iter().filter(|&x| x != v).map(|x| x - usize::from(x > v)).collect() };
        let (a, b) = (shift(&self.a), shift(&self.b));
        let k = self.k.min(a.len()).min(b.len());
        Case { g: self.g.induced_subgraph(&keep).expect("ids in range"), a, b, k }
    }
}

/// Why the engine disagrees with brute force on `c`, if it does.
pub fn check(c: &Case, o: &Oracle) -> Option<String> {
    let run = || -> Result<Option<String>, recon_core::Error> {
        let engine = decide(&c.g, &c.a, &c.b, c.k)?.reachable;
        let truth = c.a.len() >= c.k && c.b.len() >= c.k && o.reach(&c.g, &c.a, &c.b, c.k, Model::Tar)?.reachable;
        if engine != truth {
            return Ok(Some(format!("decide says {engine}, brute force says {truth}")));
        }
        let cograph = is_cograph(&c.g);
        if truth && cograph {
            let w = build_witness(&c.g, &c.a, &c.b, c.k)?;
            w.check_endpoints(&c.g, &c.a, &c.b)?;
            let bound = 4 * c.g.vertex_count() - c.a.len() - c.b.len();
            if w.len() > bound {
                return Ok(Some(format!("witness has {} moves, above {bound}", w.len())));
            }
        }
        if c.a.len() == c.b.len() {
            let engine = tj_decide(&c.g, &c.a, &c.b)?;
            let truth = o.reach(&c.g, &c.a, &c.b, c.a.len(), Model::Tj)?.reachable;
            if engine != truth {
                return Ok(Some(format!("tj_decide says {engine}, brute force says {truth}")));
            }
            if truth && cograph {
                build_jump_witness(&c.g, &c.a, &c.b)?.check_endpoints(&c.g, &c.a, &c.b)?;
            }
        }
        Ok(None)
    };
    run().unwrap_or_else(|e| Some(format!("error: {e}")))
}

/// Greedily delete vertices and lower `k` while `fails` still holds.
pub fn shrink(mut c: Case, fails: impl Fn(&Case) -> bool) -> Case {
    loop {
        let smaller = (0..c.g.vertex_count())
            .map(|v| c.without(v))
            .chain((c.k > 0).then(|| Case { k: c.k - 1, ..c.clone() }))
            .find(|d| d.g.vertex_count() > 0 && fails(d));
        match smaller {
            Some(d) => c = d,
            None => return c,
        }
    }
}

fn sample(rng: &mut ChaCha8Rng, index: usize, size: usize, o: &Oracle) -> Result<Case, CliError> {
    let n = rng.random_range(1..=size);
    let seed = rng.random();
    let g = if index.is_multiple_of(2) { gen_cograph(n, seed).0 } else { gen_composed(n, 6, seed) };
    let a = random_independent_set(&g, rng.random_range(1..=n), rng);
    let k = rng.random_range(0..=a.len());
    let b = if rng.random_bool(0.5) {
        let sg = o.solution_graph(&g, k, Model::Tar)?;
        random_walk(&sg, &a, rng.random_range(1..20), rng).expect("start is a configuration")
    } else {
        random_independent_set(&g, rng.random_range(1..=n), rng)
    };
    Ok(Case { g, a, b, k })
}

pub fn run(count: usize, size: usize, seed: u64) -> Result<u8, CliError> {
    let o = Oracle::from_env();
    if size == 0 || size > o.cap() {
        return Err(CliError::Input(format!("--size must be between 1 and the oracle cap {}", o.cap())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let case = sample(&mut rng, i, size, &o)?;
        if let Some(why) = check(&case, &o) {
            let small = shrink(case, |c| check(c, &o).is_some());
            let why_small = check(&small, &o).unwrap_or(why);
            println!("{i}/{count} OK");
            println!("counterexample ({why_small}):");
            print!("{}", format_graph(&small.g));
            println!("A = {}\nB = {}\nk = {}", small.a, small.b, small.k);
            return Err(CliError::Mismatch(format!("instance {i} disagrees with brute force")));
        }
    }
    println!("{count}/{count} OK");
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shrinks_to_a_small_failure() {
        // pretend every query with an edge and two tokens fails
        let g = Graph::cycle(6);
        let c = Case { g, a: [0, 2].into(), b: [1, 3].into(), k: 2 };
        let fails = |c: &Case| c.g.edge_count() > 0 && c.a.len() + c.b.len() >= 2;
        let small = shrink(c, fails);
        assert!(fails(&small));
        assert_eq!(small.g.vertex_count(), 2);
        assert_eq!(small.k, 0);
    }

    #[test]
    fn deleting_a_vertex_shifts_ids() {
        let c = Case { g: Graph::path(4), a: [0, 3].into(), b: [1, 3].into(), k: 2 };
        let d = c.without(1);
        assert_eq!(d.g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!((d.a, d.b, d.k), (VertexSet::from([0, 2]), VertexSet::from([2]), 1));
    }

    #[test]
    fn small_fuzz_run_agrees() {
        let o = Oracle::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in 0..40 {
            let c = sample(&mut rng, i, 8, &o).unwrap();
            assert_eq!(check(&c, &o), None, "{c:?}");
        }
    }
}
