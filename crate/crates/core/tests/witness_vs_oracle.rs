use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recon_core::engine::{compute_ris_tables, Analysis};
use recon_core::oracle::{gen_cograph, random_independent_set, random_walk, Model, Oracle};
use recon_core::witness::{accessible_subgraph, build_jump_witness, build_su_sequence, build_witness, verify_su_sequence};
use recon_core::{decide, Error, VertexSet};

#[test]
fn witnesses_are_valid_and_short() {
    let o = Oracle::default();
    let mut built = 0;
    for seed in 0..200 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=10);
        let (g, _) = gen_cograph(n, seed);
        for _ in 0..5 {
            let a = random_independent_set(&g, n, &mut rng);
            let k = rng.random_range(0..=a.len());
            let sg = o.solution_graph(&g, k, Model::Tar).unwrap();
            let b = random_walk(&sg, &a, rng.random_range(0..20), &mut rng).unwrap();
            let w = build_witness(&g, &a, &b, k).unwrap();
            w.check_endpoints(&g, &a, &b).unwrap();
            assert!(w.len() <= 4 * n - a.len() - b.len(), "{g:?} {a} {b} k={k}: {}", w.len());
            built += 1;
        }
    }
    assert_eq!(built, 1000);
}

#[test]
fn unreachable_targets_are_refused() {
    let o = Oracle::default();
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(500 + seed);
        let (g, _) = gen_cograph(8, seed);
        let a = random_independent_set(&g, 8, &mut rng);
        let b = random_independent_set(&g, 8, &mut rng);
        let k = rng.random_range(0..=a.len().min(b.len()));
        let truth = o.reach(&g, &a, &b, k, Model::Tar).unwrap().reachable;
        match build_witness(&g, &a, &b, k) {
            Ok(w) => {
                assert!(truth);
                w.check_endpoints(&g, &a, &b).unwrap();
            }
            Err(e) => {
                assert!(!truth);
                assert!(matches!(e, Error::Precondition(_)));
            }
        }
    }
}

#[test]
fn accessibility_matches_oracle_and_is_shared() {
    let o = Oracle::default();
    for seed in 0..200 {
        let mut rng = ChaCha8Rng::seed_from_u64(900 + seed);
        let n = rng.random_range(1..=10);
        let (g, t) = gen_cograph(n, seed);
        let a = random_independent_set(&g, n, &mut rng);
        let k = rng.random_range(0..=a.len());
        let acc = accessible_subgraph(&t, &Analysis::new(&t, &a, k).unwrap().values).unwrap();
        assert_eq!(acc, o.accessible(&g, &a, k).unwrap(), "{g:?} {a} k={k}");
        let sg = o.solution_graph(&g, k, Model::Tar).unwrap();
        let b = random_walk(&sg, &a, 15, &mut rng).unwrap();
        assert!(decide(&g, &a, &b, k).unwrap().reachable);
        let acc_b = accessible_subgraph(&t, &Analysis::new(&t, &b, k).unwrap().values).unwrap();
        assert_eq!(acc, acc_b);
    }
}

#[test]
fn su_sequences_hold_their_properties_at_every_node() {
    for seed in 0..200 {
        let mut rng = ChaCha8Rng::seed_from_u64(1300 + seed);
        let n = rng.random_range(1..=11);
        let (g, t) = gen_cograph(n, seed);
        let i: VertexSet = random_independent_set(&g, rng.random_range(0..=n), &mut rng);
        let ris = compute_ris_tables(&t, &i).unwrap();
        for u in 0..t.len() {
            let s = build_su_sequence(&t, u, &i, &ris).unwrap();
            verify_su_sequence(&t, &g, &i, &s, &ris[u]).unwrap();
        }
    }
}

#[test]
fn jump_witnesses_match_oracle() {
    let o = Oracle::default();
    let mut built = 0;
    for seed in 0..300 {
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + seed);
        let n = rng.random_range(1..=9);
        let (g, _) = gen_cograph(n, seed);
        let a = random_independent_set(&g, n, &mut rng);
        let sg = o.solution_graph(&g, a.len(), Model::Tj).unwrap();
        let b = if seed % 2 == 0 {
            random_walk(&sg, &a, rng.random_range(0..12), &mut rng).unwrap()
        } else {
            random_independent_set(&g, a.len(), &mut rng)
        };
        if b.len() != a.len() {
            continue;
        }
        let truth = o.reach(&g, &a, &b, a.len(), Model::Tj).unwrap();
        match build_jump_witness(&g, &a, &b) {
            Ok(w) => {
                assert!(truth.reachable);
                w.check_endpoints(&g, &a, &b).unwrap();
                assert!(w.len() >= truth.distance.unwrap());
                assert!(w.len() <= 2 * n - a.len());
                built += 1;
            }
            Err(e) => {
                assert!(!truth.reachable, "{g:?} {a} {b}: {e}");
                assert!(matches!(e, Error::Precondition(_)));
            }
        }
    }
    assert!(built > 150);
}
