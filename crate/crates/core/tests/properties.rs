use proptest::prelude::*;
use regmatch::{
    canonical_form, construct, decompose, exists_good_maximum_matching, gen_gadget_regular,
    gen_random_regular, is_maximum, matching_number, maximum_matching, parse_graph6,
    parse_matching_pairs, parse_mel, shared_neighbour, write_graph6, write_matching, write_mel,
    Matching, Multigraph, DEFAULT_MAX_SUPPORT_EDGES,
};

/// `(n, k, simple, seed)` with `n * k` even and a realisable simple case.
fn regular_params() -> impl Strategy<Value = (usize, usize, bool, u64)> {
    (2usize..=14, 1usize..=6, any::<bool>(), any::<u64>()).prop_filter(
        "parity and simple-graph feasibility",
        |&(n, k, simple, _)| (n * k) % 2 == 0 && (!simple || k < n),
    )
}

fn random_graph() -> impl Strategy<Value = Multigraph> {
    regular_params().prop_filter_map("generator gave up", |(n, k, simple, seed)| {
        gen_random_regular(n, k, simple, seed).ok()
    })
}

fn gadget_graph() -> impl Strategy<Value = Multigraph> {
    (3usize..=5, any::<bool>(), 1usize..=3, any::<u64>())
        .prop_filter_map("no gadget library", |(k, simple, hubs, seed)| {
            gen_gadget_regular(k, simple, hubs, seed).ok()
        })
}

fn relabelled(g: &Multigraph, perm: &[usize]) -> Multigraph {
    Multigraph::new(
        g.vertex_count(),
        g.edges()
            .iter()
            .map(|e| (perm[e.u], perm[e.v], e.multiplicity)),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_graphs_are_regular((n, k, simple, seed) in regular_params()) {
        if let Ok(g) = gen_random_regular(n, k, simple, seed) {
            prop_assert_eq!(g.vertex_count(), n);
            prop_assert_eq!(g.degree_profile().regular, Some(k as u32));
            prop_assert!(!simple || g.is_simple());
            let again = gen_random_regular(n, k, simple, seed).unwrap();
            prop_assert_eq!(write_mel(&g), write_mel(&again));
        }
    }

    #[test]
    fn construction_has_the_property(g in prop_oneof![random_graph(), gadget_graph()]) {
        let report = construct(&g).unwrap();
        prop_assert!(report.property_holds);
        prop_assert_eq!(report.matching.len(), matching_number(&g));
        prop_assert!(is_maximum(&g, &report.matching).unwrap());
        prop_assert!(shared_neighbour(&g, &report.matching).is_none());
        prop_assert_eq!(report.unsaturated.len(), report.deficiency);
    }

    #[test]
    fn decomposition_invariants_hold(g in prop_oneof![random_graph(), gadget_graph()]) {
        let ge = decompose(&g).unwrap();
        ge.check_invariants(&g).unwrap();
        prop_assert_eq!(ge.nu, matching_number(&g));
        prop_assert_eq!(ge.d.len() + ge.a.len() + ge.c.len(), g.vertex_count());
    }

    #[test]
    fn engine_agrees_with_oracle(g in random_graph()) {
        prop_assume!(g.edges().len() <= DEFAULT_MAX_SUPPORT_EDGES);
        let verdict = exists_good_maximum_matching(&g).unwrap();
        prop_assert_eq!(verdict.nu, matching_number(&g));
        prop_assert!(verdict.good_exists);
    }

    #[test]
    fn mel_round_trip(g in prop_oneof![random_graph(), gadget_graph()]) {
        let text = write_mel(&g);
        let back = parse_mel(&text).unwrap();
        prop_assert_eq!(write_mel(&back), text);
    }

    #[test]
    fn graph6_round_trip(g in random_graph()) {
        prop_assume!(g.is_simple());
        let text = write_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(write_mel(&back), write_mel(&g));
    }

    #[test]
    fn matching_listing_round_trip(g in random_graph()) {
        let m = maximum_matching(&g);
        let pairs = parse_matching_pairs(&write_matching(&m)).unwrap();
        let back = Matching::from_pairs(&g, &pairs).unwrap();
        prop_assert_eq!(back.pairs(), m.pairs());
    }

    #[test]
    fn canonical_form_ignores_labels(g in random_graph(), shuffle in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle));
        prop_assert_eq!(canonical_form(&g).0, canonical_form(&relabelled(&g, &perm)).0);
    }
}
