use hclattice::factorization::{dependent_pairs, factorize_with_pair_choice, to_support_params};
use hclattice::oracle::{
    lattice_distribution, random_poset, random_supergraph, sweep, SweepConfig,
};
use hclattice::toric::facial_by_elimination;
use hclattice::*;
use proptest::prelude::*;

fn poset() -> impl Strategy<Value = Poset> {
    (1usize..=5, any::<u64>()).prop_map(|(m, seed)| random_poset(m, seed).unwrap())
}

fn graph(m: usize, bits: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .collect();
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| bits >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(m, &edges).unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=5, any::<u32>()).prop_map(|(m, bits)| graph(m, bits))
}

/// Poset, a supergraph of its Hasse diagram, and a seed.
fn lattice_instance() -> impl Strategy<Value = (Poset, Graph, u64)> {
    (1usize..=5, any::<u64>(), any::<u64>()).prop_map(|(m, ps, gs)| {
        let p = random_poset(m, ps).unwrap();
        let hasse = Graph::from_edges(m, p.covers()).unwrap();
        let g = random_supergraph(&hasse, m, gs).unwrap();
        (p, g, gs)
    })
}

fn brute_ideals(p: &Poset) -> Vec<SubsetMask> {
    SubsetMask::all_subsets(p.m())
        .into_iter()
        .filter(|&s| {
            s.elements()
                .all(|i| (1..=p.m()).all(|j| !p.leq(j, i) || s.contains(j)))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn birkhoff_round_trip(p in poset()) {
        let l = order_ideals(&p);
        prop_assert!(l.is_natural());
        prop_assert_eq!(l.elements().to_vec(), brute_ideals(&p));
        prop_assert_eq!(l.underlying_poset().unwrap(), p.clone());
        prop_assert_eq!(l.join_irreducibles().len(), p.m());
        for s in SubsetMask::all_subsets(p.m()) {
            prop_assert!(p.ideal_closure(s).is_subset(SubsetMask::full(p.m())));
        }
    }

    #[test]
    fn ideal_closure_laws(p in poset(), a in any::<u32>(), b in any::<u32>()) {
        let full = SubsetMask::full(p.m()).bits();
        let (s, t) = (SubsetMask::from_bits(a & full), SubsetMask::from_bits(b & full));
        let cs = p.ideal_closure(s);
        prop_assert!(s.is_subset(cs));
        prop_assert_eq!(p.ideal_closure(cs), cs);
        prop_assert!(p.is_order_ideal(cs));
        if s.is_subset(t) {
            prop_assert!(cs.is_subset(p.ideal_closure(t)));
        }
    }

    #[test]
    fn lattice_close_is_closed(m in 1usize..=4, fam in prop::collection::vec(any::<u32>(), 1..5)) {
        let full = SubsetMask::full(m).bits();
        let gens: Vec<_> = fam.iter().map(|&b| SubsetMask::from_bits(b & full)).collect();
        let l = lattice_close(m, gens.clone()).unwrap();
        for &g in &gens {
            prop_assert!(l.contains(g));
        }
        for &x in l.elements() {
            for &y in l.elements() {
                prop_assert!(l.contains(x.union(y)) && l.contains(x.intersection(y)));
            }
        }
    }

    #[test]
    fn cliques_are_downward_closed(g in small_graph()) {
        let c = g.cliques();
        for &s in &c.all {
            prop_assert!(g.is_clique(s));
            for t in s.subsets() {
                prop_assert!(c.all.contains(&t));
            }
        }
        let brute = SubsetMask::all_subsets(g.m()).into_iter().filter(|&s| g.is_clique(s)).count();
        prop_assert_eq!(c.all.len(), brute);
        for &s in &c.maximal {
            prop_assert!((1..=g.m()).all(|i| s.contains(i) || !g.is_clique(s.with(i))));
        }
    }

    #[test]
    fn separation_is_monotone_in_the_separator(g in small_graph(), bits in any::<u32>()) {
        let m = g.m();
        prop_assume!(m >= 3);
        let c = SubsetMask::from_bits(bits & SubsetMask::full(m).bits() & !0b11);
        let (a, b) = (SubsetMask::singleton(1), SubsetMask::singleton(2));
        if g.separates(a, b, c).unwrap() {
            for i in 3..=m {
                prop_assert!(g.separates(a, b, c.with(i)).unwrap());
            }
        }
    }

    #[test]
    fn clique_closure_count_law((p, g, _) in lattice_instance()) {
        let l = order_ideals(&p);
        let (closures, dependent) = dimension_counts(&l, &g).unwrap();
        prop_assert_eq!(closures + dependent, l.len());
        let cc = clique_closures(&l, &g).unwrap();
        prop_assert_eq!(closures, cc.closures.len());
        for &s in l.elements() {
            let free = dependent_pairs(&p, &g, s).is_empty();
            prop_assert_eq!(free, cc.closures.contains(&s));
        }
        prop_assert!(dependent <= l.len());
    }

    #[test]
    fn pairwise_binomials_follow_from_global(g in small_graph()) {
        let global = global_binomials(&g);
        for b in pairwise_binomials(&g) {
            prop_assert!(global.iter().any(|x| x.same_up_to_sign(&b)));
        }
    }

    #[test]
    fn model_points_satisfy_global_ci((p, g, seed) in lattice_instance()) {
        let q = lattice_distribution(&order_ideals(&p), &g, seed).unwrap();
        prop_assert!(satisfies_all(&global_binomials(&g), &q).is_empty());
        let cert = factorize(&q, &g).unwrap();
        prop_assert!(verify_certificate(&cert, &q, &g));
        let exact = apply_param(&matrix_ag(&g), &to_support_params(&cert, &g).unwrap()).unwrap();
        prop_assert_eq!(exact, q);
    }

    #[test]
    fn pair_choice_is_irrelevant((p, g, seed) in lattice_instance()) {
        let q = lattice_distribution(&order_ideals(&p), &g, seed).unwrap();
        let first = factorize(&q, &g).unwrap();
        let last = factorize_with_pair_choice(&q, &g, |_, pairs| *pairs.last().unwrap()).unwrap();
        prop_assert_eq!(first.clique_params, last.clique_params);
    }

    #[test]
    fn hibi_rank_and_equality((p, g, _) in lattice_instance()) {
        let l = order_ideals(&p);
        let h = hibi_matrix(&l).unwrap();
        prop_assert_eq!(h.rank(), p.m() + 1);
        for b in hibi_generators(&l) {
            prop_assert_eq!(in_toric_kernel(&h, &b), Ok(true));
        }
        let within = g.is_subgraph_of(&comparability_graph(&p));
        prop_assert_eq!(hibi::substitution_witness(&l, &g).is_ok(), within);
        if within {
            prop_assert_eq!(check_hibi_equality(&l, &g), Ok(true));
        }
    }

    #[test]
    fn adding_edges_never_lowers_rank(g in small_graph(), k in any::<usize>()) {
        let non = g.non_edges();
        prop_assume!(!non.is_empty());
        let (i, j) = non[k % non.len()];
        let bigger = g.with_edge(i, j).unwrap();
        prop_assert!(matrix_bg(&bigger).rank() > matrix_bg(&g).rank());
        prop_assert!(matrix_ag(&bigger).rank() >= matrix_ag(&g).rank());
    }

    #[test]
    fn feasibility_characterizations_agree(m in 1usize..=4, gbits in any::<u32>(), sbits in any::<u64>()) {
        let g = graph(m, gbits);
        let cols = SubsetMask::all_subsets(m);
        let s: Vec<_> = cols.iter().enumerate().filter(|(k, _)| sbits >> k & 1 == 1).map(|(_, &c)| c).collect();
        prop_assume!(!s.is_empty());
        for a in [matrix_ag(&g), matrix_bg(&g)] {
            let direct = is_feasible(&a, &s).unwrap().is_feasible();
            prop_assert_eq!(direct, hclattice::toric::is_feasible_by_rows(&a, &s).unwrap());
            if direct {
                let p = realize_support(&a, &s, sbits).unwrap();
                prop_assert_eq!(p.support(), s.clone());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn faciality_routes_agree(m in 1usize..=3, gbits in any::<u32>(), sbits in any::<u8>()) {
        let g = graph(m, gbits);
        let cols = SubsetMask::all_subsets(m);
        let s: Vec<_> = cols.iter().enumerate().filter(|(k, _)| sbits >> k & 1 == 1).map(|(_, &c)| c).collect();
        prop_assume!(!s.is_empty());
        let a = matrix_ag(&g);
        let fast = is_facial(&a, &s).unwrap();
        let slow = facial_by_elimination(&a, &s).unwrap();
        prop_assert_eq!(
            matches!(fast, Faciality::Facial(_)),
            matches!(slow, Faciality::Facial(_))
        );
        match slow {
            Faciality::Facial(c) => hclattice::toric::check_facial_certificate(&a, &s, &c).unwrap(),
            Faciality::NotFacial { multipliers } => {
                prop_assert!(hclattice::toric::check_nonfacial_certificate(&a, &s, &multipliers).unwrap())
            }
        }
    }

    #[test]
    fn sweep_is_deterministic(seed in any::<u64>()) {
        let config = SweepConfig { trials: 6, seed, max_m: 4, ..SweepConfig::default() };
        let a = sweep(&config);
        prop_assert_eq!(a.to_text(), sweep(&config).to_text());
        prop_assert_eq!(a.failures(), 0);
    }
}
