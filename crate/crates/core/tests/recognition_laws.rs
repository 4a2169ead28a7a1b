mod common;

use circle_core::graph::Graph;
use circle_core::recognition::{
    certify, local_equivalence_orbit, obstruction_free, recognize, verify_realization, DEFAULT_ORBIT_CAP,
};
use common::{names, random_graph, random_word, rng};
use proptest::prelude::*;
use rand::seq::SliceRandom;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn realizable_graphs_are_recognized(seed: u64, k in 1usize..12) {
        let w = random_word(&mut rng(seed), &names("q", k));
        let g = w.interlacement().unwrap();
        let found = recognize(&g).unwrap();
        prop_assert!(found.is_some());
        prop_assert!(verify_realization(&g, &found.unwrap()).unwrap());
    }

    #[test]
    fn verdict_is_closed_under_relabeling_and_lc(seed: u64, n in 1usize..10, v: usize) {
        let g = random_graph(&mut rng(seed), n, 0.5);
        let circle = recognize(&g).unwrap().is_some();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng(seed ^ 5));
        prop_assert_eq!(recognize(&g.permuted(&perm)).unwrap().is_some(), circle);
        prop_assert_eq!(recognize(&g.local_complement(v % n).unwrap()).unwrap().is_some(), circle);
        if circle {
            // induced subgraphs of circle graphs are circle graphs
            let h = g.delete_vertex(v % n).unwrap();
            prop_assert!(recognize(&h).unwrap().is_some());
        }
    }

    #[test]
    fn certificates_are_checkable(seed: u64, n in 6usize..9) {
        let g = random_graph(&mut rng(seed), n, 0.5);
        let cert = certify(&g, DEFAULT_ORBIT_CAP).unwrap();
        match (&cert.word, &cert.witness) {
            (Some(w), None) => prop_assert!(cert.verdict && verify_realization(&g, w).unwrap()),
            (None, Some(wit)) => {
                prop_assert!(!cert.verdict && wit.is_valid_embedding());
                let orbit = local_equivalence_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
                prop_assert!(orbit.contains(&wit.member.canonical_key().unwrap()));
            }
            _ => prop_assert!(false, "certificate must carry exactly one of word or witness"),
        }
    }
}

#[test]
fn orbit_is_the_same_from_every_member() {
    let seeds: [Graph; 2] = [
        random_graph(&mut rng(11), 7, 0.5),
        circle_core::graph::standard_graph(circle_core::StandardGraph::Wheel(5)).unwrap(),
    ];
    for g in seeds {
        let orbit = local_equivalence_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
        let mut keys: Vec<_> = orbit.keys().to_vec();
        keys.sort();
        for m in orbit.members() {
            let mut other: Vec<_> = local_equivalence_orbit(m, DEFAULT_ORBIT_CAP).unwrap().keys().to_vec();
            other.sort();
            assert_eq!(other, keys);
        }
        assert_eq!(obstruction_free(&g, DEFAULT_ORBIT_CAP).unwrap().verdict, recognize(&g).unwrap().is_some());
    }
}
