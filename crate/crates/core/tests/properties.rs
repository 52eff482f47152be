use proptest::prelude::*;

use strikeback_core::enumerate::{connected_graphs, connected_graphs_up_to};
use strikeback_core::game::{cop_number, minimax_oracle, solve_k, Ruleset, SolveOptions, Variant};
use strikeback_core::generate::{generate, instance_seed, Family};
use strikeback_core::graph6::{parse_graph6, to_graph6};
use strikeback_core::harness::{check_cc1_and_cc2, check_sandwich, Instance, Profile, Verdict};
use strikeback_core::invariants::{
    domination_number, girth, has_universal_vertex, is_connected, is_dominating, is_k1m_free,
};
use strikeback_core::{Graph, Hypergraph};

fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    generate(&Family::Gnp { n, p }, seed).unwrap()
}

/// Edge adjacency built directly from the edge list.
fn classical_line_graph(g: &Graph) -> Vec<Vec<bool>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            adj[i][j] = i != j && (a == c || a == d || b == c || b == d);
        }
    }
    adj
}

#[test]
fn graph6_round_trip_on_random_graphs() {
    for i in 0..500u64 {
        let n = 1 + (i as usize % 40);
        let g = gnp(n, 0.3, instance_seed(11, i));
        let text = to_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
    }
}

#[test]
fn line_graphs_match_edge_adjacency_and_are_claw_free() {
    for i in 0..50u64 {
        let g = gnp(7, 0.5, instance_seed(5, i));
        let h = Hypergraph::from_graph(&g);
        assert_eq!(h.berge_girth(), girth(&g));
        if g.size() == 0 {
            continue;
        }
        let l = h.line_graph().unwrap();
        let want = classical_line_graph(&g);
        for (a, row) in want.iter().enumerate() {
            for (b, &adjacent) in row.iter().enumerate() {
                assert_eq!(l.has_edge(a, b), adjacent);
            }
        }
        assert!(is_k1m_free(&l, 3));
    }
}

#[test]
fn domination_witness_is_minimum() {
    for i in 0..40u64 {
        let n = 4 + (i as usize % 9);
        let g = gnp(n, 0.35, instance_seed(3, i));
        let (gamma, witness) = domination_number(&g).unwrap();
        assert_eq!(witness.len(), gamma);
        assert!(is_dominating(&g, &witness));
        // no smaller set dominates
        let smaller = (0u32..1 << n).filter(|s| (s.count_ones() as usize) < gamma);
        for s in smaller {
            let set: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
            assert!(!is_dominating(&g, &set));
        }
        assert_eq!(has_universal_vertex(&g), gamma == 1);
    }
}

#[test]
fn enumerated_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
}

#[test]
fn winning_is_monotone_in_cop_count() {
    for g in connected_graphs_up_to(5) {
        for variant in [Variant::Classic, Variant::Attacking] {
            let wins: Vec<bool> =
                (1..=3).map(|k| solve_k(&g, Ruleset::new(variant, k).unwrap()).unwrap().cops_win()).collect();
            assert!(wins.windows(2).all(|w| !w[0] || w[1]), "{wins:?} on {}", to_graph6(&g).unwrap());
        }
    }
}

#[test]
fn small_graphs_satisfy_sandwich_and_cc1() {
    for g in connected_graphs_up_to(6) {
        let p = Profile::new(&g, SolveOptions::default());
        assert_eq!(check_sandwich(&p, Instance::of(&g)).verdict, Verdict::Pass);
        assert_eq!(check_cc1_and_cc2(&p, Instance::of(&g)).verdict, Verdict::Pass);
        assert_eq!(p.cc().unwrap() == 1, has_universal_vertex(&g));
    }
}

#[test]
fn solver_agrees_with_oracle() {
    for g in connected_graphs_up_to(5) {
        for k in 1..=2 {
            for variant in [Variant::Classic, Variant::Attacking] {
                let rules = Ruleset::new(variant, k).unwrap();
                assert_eq!(
                    solve_k(&g, rules).unwrap().cops_win(),
                    minimax_oracle(&g, rules).unwrap(),
                    "{} k={k} on {}",
                    variant.name(),
                    to_graph6(&g).unwrap()
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_freeness_is_monotone(n in 2usize..12, p in 0.1f64..0.9, seed: u64) {
        let g = gnp(n, p, seed);
        for m in 2..n {
            if is_k1m_free(&g, m) {
                prop_assert!(is_k1m_free(&g, m + 1));
            }
        }
    }

    #[test]
    fn relabelling_preserves_invariants(n in 2usize..9, seed: u64, rot in 0usize..9) {
        let g = generate(&Family::ConnectedGnp { n, p: 0.5 }, seed).unwrap();
        let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).collect();
        let h = g.permuted(&perm);
        prop_assert!(is_connected(&h));
        prop_assert_eq!(girth(&g), girth(&h));
        prop_assert_eq!(domination_number(&g).unwrap().0, domination_number(&h).unwrap().0);
        let opts = SolveOptions::default();
        prop_assert_eq!(
            cop_number(&g, Variant::Attacking, &opts).unwrap().value,
            cop_number(&h, Variant::Attacking, &opts).unwrap().value
        );
    }

    #[test]
    fn cop_number_at_most_domination(n in 2usize..9, p in 0.2f64..0.8, seed: u64) {
        let g = generate(&Family::ConnectedGnp { n, p }, seed).unwrap();
        let gamma = domination_number(&g).unwrap().0;
        let opts = SolveOptions::default();
        let c = cop_number(&g, Variant::Classic, &opts).unwrap().value;
        let cc = cop_number(&g, Variant::Attacking, &opts).unwrap().value;
        prop_assert!(c <= cc && cc <= gamma.min(2 * c));
    }
}
