//! Seeded random instances. The same arguments always give the same output.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::solution::SolutionGraph;
use crate::cotree::Cotree;
use crate::graph::{Graph, GraphBuilder, VertexSet};

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random cograph on `n >= 1` vertices together with the cotree it was
/// sampled from: subtree sizes split uniformly, node kinds are fair coin
/// flips, and vertex ids are shuffled.
pub fn gen_cograph(n: usize, seed: u64) -> (Graph, Cotree) {
    assert!(n >= 1, "a cograph needs at least one vertex");
    let mut rng = rng_for(seed);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);
    let t = random_cotree(&ids, &mut rng);
    let g = t.realize().expect("generated trees are well formed");
    (g, t)
}

fn random_cotree(ids: &[usize], rng: &mut ChaCha8Rng) -> Cotree {
    if ids.len() == 1 {
        return Cotree::vertex(ids[0]);
    }
    let split = rng.random_range(1..ids.len());
    let left = random_cotree(&ids[..split], rng);
    let right = random_cotree(&ids[split..], rng);
    if rng.random_bool(0.5) {
        Cotree::union(left, right)
    } else {
        Cotree::join(left, right)
    }
}

/// Random chordal graph on `n` vertices. Vertices arrive one at a time; with
/// probability `density` a newcomer attaches to a random clique of the graph
/// so far (grown from a random seed vertex, keeping each candidate with
/// probability `density`), which keeps it simplicial at arrival.
pub fn gen_chordal(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let density = density.clamp(0.0, 1.0);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);
    let mut b = GraphBuilder::new(n);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 1..n {
        if !rng.random_bool(density) {
            continue;
        }
        let y = rng.random_range(0..x);
        let mut clique = vec![y];
        let mut candidates = adj[y].clone();
        candidates.shuffle(&mut rng);
        for w in candidates {
            if rng.random_bool(density) && clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[x].push(c);
            adj[c].push(x);
            b.set_edge(ids[x], ids[c]);
        }
    }
    b.build()
}

/// Random union/join composition of chordal parts with at most `max_part`
/// vertices each, `n` vertices overall.
pub fn gen_composed(n: usize, max_part: usize, seed: u64) -> Graph {
    assert!(n >= 1 && max_part >= 1);
    let mut rng = rng_for(seed);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);
    let mut b = GraphBuilder::new(n);
    compose(&ids, max_part, &mut rng, &mut b);
    b.build()
}

fn compose(ids: &[usize], max_part: usize, rng: &mut ChaCha8Rng, b: &mut GraphBuilder) {
    if ids.len() <= max_part && (ids.len() == 1 || rng.random_bool(0.5)) {
        let density = rng.random_range(0.3..1.0);
        let part = gen_chordal(ids.len(), density, rng.random());
        for (u, v) in part.edges() {
            b.set_edge(ids[u], ids[v]);
        }
        return;
    }
    let split = rng.random_range(1..ids.len());
    let (left, right) = ids.split_at(split);
    compose(left, max_part, rng, b);
    compose(right, max_part, rng, b);
    if rng.random_bool(0.5) {
        for &x in left {
            for &y in right {
                b.set_edge(x, y);
            }
        }
    }
}

/// Random independent set of `g` with at most `target` vertices, picked greedily
/// in random order.
pub fn random_independent_set<R: Rng>(g: &Graph, target: usize, rng: &mut R) -> VertexSet {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::new();
    for v in order {
        if chosen.len() == target {
            break;
        }
        if chosen.iter().all(|&c| !g.has_edge(c, v)) {
            chosen.push(v);
        }
    }
    VertexSet::from_vec(chosen)
}

/// Endpoint of a random walk of `steps` moves from `start` in `sg`.
pub fn random_walk<R: Rng>(sg: &SolutionGraph, start: &VertexSet, steps: usize, rng: &mut R) -> Option<VertexSet> {
    let mut at = sg.id_of(start)?;
    for _ in 0..steps {
        let nb = sg.neighbors(at);
        match nb.choose(rng) {
            Some(&next) => at = next,
            None => break,
        }
    }
    Some(sg.set(at))
}
