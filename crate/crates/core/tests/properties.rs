use indr_core::betti::binomial;
use indr_core::collapse::{
    c4_free_collapse_sequence, chordal_collapse_sequence, search_d_collapse, verify_collapse, DEFAULT_BUDGET,
};
use indr_core::complex::sr_generators;
use indr_core::homology::{hochster_betti, leray_number};
use indr_core::ideal::{cochordal_split_tree, cochordal_split_tree_with, verify_split_node};
use indr_core::*;
use proptest::prelude::*;

fn any_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Grows a chordal graph by adding vertices whose neighborhood is a clique,
/// permutes the labels and returns the complement.
fn build_cochordal(seeds: &[u64], perm: &[usize]) -> Graph {
    let n = perm.len();
    let mut adj: Vec<VertexSet> = vec![VertexSet::EMPTY; n + 1];
    for k in 2..=n {
        let seed = seeds[k - 1];
        let u = 1 + (seed % (k as u64 - 1)) as usize;
        let mut clique = VertexSet::singleton(u);
        for w in adj[u] {
            if adj[w].intersection(clique) == clique {
                clique = clique.with(w);
            }
        }
        let chosen: VertexSet = clique.iter().enumerate().filter(|(i, _)| seed >> (16 + i) & 1 == 1).map(|(_, v)| v).collect();
        for v in chosen {
            adj[v] = adj[v].with(k);
            adj[k] = adj[k].with(v);
        }
    }
    let edges = (1..=n).flat_map(|v| adj[v].iter().filter(move |&w| w > v).map(move |w| (perm[v - 1], perm[w - 1])));
    Graph::new(n, edges.collect::<Vec<_>>()).unwrap().complement()
}

fn cochordal(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (proptest::collection::vec(any::<u64>(), n), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(seeds, perm)| build_cochordal(&seeds, &perm))
    })
}

fn cochordal_with_r(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    cochordal(min_n, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 1..=n.max(1))
    })
}

fn has_long_induced_cycle(g: &Graph) -> bool {
    g.vertices().subsets().filter(|s| s.len() >= 4).any(|s| {
        s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2) && g.is_connected_subset(s).unwrap()
    })
}

fn mapped_generators(sub: &InducedSubgraph, r: usize) -> Vec<VertexSet> {
    let mut gens: Vec<VertexSet> =
        SquareFreeIdeal::of_graph(&sub.graph, r).unwrap().generators().iter().map(|&m| sub.original_set(m)).collect();
    gens.sort();
    gens
}

fn sorted(v: &[VertexSet]) -> Vec<VertexSet> {
    let mut v = v.to_vec();
    v.sort();
    v
}

#[test]
fn chordality_matches_induced_cycle_search_exhaustively() {
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            let peo = g.is_chordal();
            assert_eq!(peo.is_some(), !has_long_induced_cycle(&g), "{g:?}");
            if let Some(p) = peo {
                assert!(p.is_valid_for(&g));
            }
        }
    }
}

#[test]
fn gap_free_claw_free_with_leaf_is_cochordal_both_ways() {
    let mut seen = 0;
    for n in 2..=6usize {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            let p = g.structure_predicates();
            if !(p.gap_free && p.claw_free && !p.leaves.is_empty()) {
                continue;
            }
            seen += 1;
            assert!(g.is_cochordal() && g.complement().is_cochordal(), "{g:?}");
            assert!(g.leaf_partition().is_some());
            for r in 1..=n {
                assert!(cochordal_split_tree(&g, r).is_ok());
                assert!(cochordal_split_tree(&g.complement(), r).is_ok());
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn closed_forms_match_split_recursion() {
    for family in [Family::Complete, Family::Star, Family::KnX, Family::PathComplement] {
        let min = if family == Family::PathComplement { 2 } else { 1 };
        for n in min..=9 {
            let g = family.generate(n).unwrap();
            for r in 1..=g.n() {
                let split = BettiTable::from_split_tree(&cochordal_split_tree(&g, r).unwrap()).unwrap();
                let closed = BettiTable::closed_form(ClosedForm::for_family(family, n, r).unwrap()).unwrap();
                assert_eq!(split, closed, "{family} n={n} r={r}");
            }
        }
    }
}

#[test]
fn path_complement_complete_and_star_tables_coincide() {
    for n in 3..=10 {
        for r in 3..=n {
            let pc = BettiTable::closed_form(ClosedForm::PathComplement { n, r }).unwrap();
            let k = BettiTable::closed_form(ClosedForm::Complete { n, r }).unwrap();
            let star = BettiTable::closed_form(ClosedForm::Star { n, r: r + 1 }).unwrap();
            for i in 1..=n {
                assert_eq!(pc.get(i, i + r), k.get(i, i + r), "n={n} r={r} i={i}");
                assert_eq!(k.get(i, i + r), star.get(i, i + r + 1), "n={n} r={r} i={i}");
            }
        }
    }
}

#[test]
fn block_deletion_on_k5() {
    let k5 = Family::Complete.generate(5).unwrap();
    let minus_e = Graph::new(5, k5.edges().into_iter().filter(|&e| e != (1, 2))).unwrap();
    for r in 2..=5 {
        assert_eq!(SimplicialComplex::ind_r(&k5, r).unwrap(), SimplicialComplex::ind_r(&minus_e, r).unwrap());
    }
    assert_ne!(SimplicialComplex::ind_r(&k5, 1).unwrap(), SimplicialComplex::ind_r(&minus_e, 1).unwrap());
}

#[test]
fn cycle_complements_have_linear_resolution_only_for_r_at_least_two() {
    for n in 5..=7 {
        let g = Family::CycleComplement.generate(n).unwrap();
        let reg = |r| {
            let d = SimplicialComplex::ind_r(&g, r).unwrap();
            hochster_betti(&d, FieldSpec::GF2).unwrap().regularity(true).unwrap()
        };
        assert!(reg(1) > 2);
        for r in 2..=n - 2 {
            assert_eq!(reg(r), r + 1, "n={n} r={r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in any_graph(0, 8)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn chordality_on_seven_vertices(g in any_graph(7, 7)) {
        prop_assert_eq!(g.is_chordal().is_some(), !has_long_induced_cycle(&g));
    }

    #[test]
    fn generated_graphs_are_cochordal(g in cochordal(1, 9)) {
        prop_assert!(g.complement().is_chordal().is_some());
    }

    #[test]
    fn clique_plus_independent_set_is_split(n in 1usize..=8, mask in any::<u8>(), cross in any::<u64>()) {
        let y = VertexSet::from_bits(mask as u64).intersection(VertexSet::full(n));
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 1..=n {
            for v in u + 1..=n {
                bit += 1;
                if (y.contains(u) && y.contains(v)) || (y.contains(u) != y.contains(v) && cross >> (bit % 64) & 1 == 1) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        prop_assert!(g.is_chordal().is_some());
        prop_assert!(g.complement().is_chordal().is_some());
    }

    #[test]
    fn tilde_graph_properties(g in cochordal(2, 8)) {
        for x in g.complement().simplicial_vertices() {
            let t = g.tilde_graph(x).unwrap();
            prop_assert!(t.graph.is_cochordal());
            let local = |s: VertexSet| -> VertexSet {
                s.iter().map(|v| t.labels.iter().position(|&l| l == v).unwrap() + 1).collect()
            };
            let w = local(g.neighbors(x));
            let y = local(g.complement().neighbors(x));
            prop_assert!(t.graph.is_clique(w));
            prop_assert!(t.graph.complement().is_clique(y));
        }
    }

    #[test]
    fn split_tree_nodes_verify((g, r) in cochordal_with_r(1, 7)) {
        let tree = cochordal_split_tree(&g, r).unwrap();
        prop_assert_eq!(&tree.ideal, &SquareFreeIdeal::of_graph(&g, r).unwrap());
        prop_assert!(tree.verify());
        let mut ok = true;
        tree.for_each(&mut |t| {
            if let SplitNode::Split { pivot, left, right } = &t.node {
                ok &= verify_split_node(&t.ideal, *pivot, &left.ideal, &right.ideal);
            }
        });
        prop_assert!(ok);
        if let SplitNode::Split { pivot, left, right } = &tree.node {
            let rest = g.induced_subgraph(g.vertices().without(*pivot));
            prop_assert_eq!(sorted(right.ideal.generators()), mapped_generators(&rest, r));
            prop_assert!(right.ideal.is_subideal_of(&left.ideal));
            if r >= 2 {
                let t = g.tilde_graph(*pivot).unwrap();
                prop_assert_eq!(sorted(left.ideal.generators()), mapped_generators(&t, r - 1));
            }
        }
    }

    #[test]
    fn split_tables_have_linear_resolution((g, r) in cochordal_with_r(1, 8)) {
        let table = BettiTable::from_split_tree(&cochordal_split_tree(&g, r).unwrap()).unwrap();
        if !SquareFreeIdeal::of_graph(&g, r).unwrap().is_zero() {
            prop_assert!(table.has_linear_resolution(r + 1));
            prop_assert_eq!(table.regularity(true).unwrap(), r + 1);
        }
    }

    #[test]
    fn pivot_choice_does_not_change_betti((g, r) in cochordal_with_r(1, 7), seed in any::<u64>()) {
        let canonical = BettiTable::from_split_tree(&cochordal_split_tree(&g, r).unwrap()).unwrap();
        let mut state = seed;
        let mut pick = |s: &[usize]| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % s.len()
        };
        let random = BettiTable::from_split_tree(&cochordal_split_tree_with(&g, r, &mut pick).unwrap()).unwrap();
        prop_assert_eq!(canonical, random);
    }

    #[test]
    fn oracle_agrees_with_split((g, r) in cochordal_with_r(1, 7)) {
        let split = BettiTable::from_split_tree(&cochordal_split_tree(&g, r).unwrap()).unwrap();
        let d = SimplicialComplex::ind_r(&g, r).unwrap();
        for p in [2, 32003, 0] {
            prop_assert_eq!(&hochster_betti(&d, FieldSpec::new(p).unwrap()).unwrap(), &split, "p={}", p);
        }
    }

    #[test]
    fn regularity_is_leray_plus_one(g in any_graph(1, 7), r in 1usize..=3) {
        let d = SimplicialComplex::ind_r(&g, r).unwrap();
        let table = hochster_betti(&d, FieldSpec::GF2).unwrap();
        if let Ok(reg) = table.regularity(true) {
            prop_assert_eq!(reg, leray_number(&d, FieldSpec::GF2) + 1);
        }
    }

    #[test]
    fn chordal_collapse_verifies((g, r) in cochordal_with_r(1, 7)) {
        let seq = chordal_collapse_sequence(&g, r).unwrap();
        let d = SimplicialComplex::ind_r(&g, r).unwrap();
        prop_assert_eq!(verify_collapse(&d, &seq, r), Ok(()));
        prop_assert!(leray_number(&d, FieldSpec::GF2) <= r);
        for larger in r..=r + 2 {
            prop_assert_eq!(verify_collapse(&d, &seq, larger), Ok(()));
        }
        if r > 1 && seq.steps.iter().any(|p| p.sigma.len() == r) {
            prop_assert!(verify_collapse(&d, &seq, r - 1).is_err());
        }
    }

    #[test]
    fn search_results_verify_and_bound_leray(g in any_graph(1, 6), r in 1usize..=3, d in 1usize..=3) {
        let c = SimplicialComplex::ind_r(&g, r).unwrap();
        match search_d_collapse(&c, d, DEFAULT_BUDGET) {
            SearchOutcome::Found(seq) => {
                prop_assert_eq!(verify_collapse(&c, &seq, d), Ok(()));
                prop_assert!(leray_number(&c, FieldSpec::GF2) <= d);
            }
            SearchOutcome::NotCollapsible => {
                for smaller in 1..d {
                    let found = matches!(search_d_collapse(&c, smaller, DEFAULT_BUDGET), SearchOutcome::Found(_));
                    prop_assert!(!found);
                }
            }
            SearchOutcome::BudgetExhausted => {}
        }
    }

    #[test]
    fn c4_free_pipeline_on_small_graphs(g in any_graph(1, 7), r in 1usize..=7) {
        if let Ok(seq) = c4_free_collapse_sequence(&g, r) {
            let d = SimplicialComplex::ind_r(&g, r).unwrap();
            prop_assert_eq!(verify_collapse(&d, &seq, r), Ok(()));
        }
    }

    #[test]
    fn faces_and_non_faces(g in any_graph(1, 7), r in 1usize..=4) {
        let d = SimplicialComplex::ind_r(&g, r).unwrap();
        let gens = sr_generators(&g, r).unwrap();
        for s in g.vertices().subsets() {
            let by_definition = s.is_empty() || g.max_component_size(s) <= r;
            prop_assert_eq!(d.contains_face(s), by_definition);
            prop_assert_eq!(gens.iter().any(|m| m.is_subset(s)), !by_definition);
        }
        let ind1 = SimplicialComplex::ind_r(&g, 1).unwrap();
        prop_assert!(ind1.facets().iter().all(|&f| d.contains_face(f)));
    }

    #[test]
    fn induced_subcomplex_is_ind_r_of_induced_subgraph(g in any_graph(1, 7), r in 1usize..=4, mask in any::<u64>()) {
        let w = VertexSet::from_bits(mask).intersection(g.vertices());
        let lhs = SimplicialComplex::ind_r(&g, r).unwrap().induced(w);
        let sub = g.induced_subgraph(w);
        let rhs: Vec<VertexSet> =
            SimplicialComplex::ind_r(&sub.graph, r).unwrap().facets().iter().map(|&f| sub.original_set(f)).collect();
        prop_assert_eq!(sorted(lhs.facets()), sorted(&rhs));
    }

    #[test]
    fn block_deletion_preserves_ind_r(n in 1usize..=7, blocks in proptest::collection::vec(0usize..4, 7), keep in any::<u32>()) {
        let block = |v: usize| blocks[v - 1];
        let s = (0..4).map(|b| (1..=n).filter(|&v| block(v) == b).count()).max().unwrap();
        let k = Family::Complete.generate(n).unwrap();
        let h = Graph::new(
            n,
            k.edges().into_iter().enumerate().filter(|&(i, (u, v))| block(u) != block(v) || keep >> (i % 32) & 1 == 1).map(|(_, e)| e),
        )
        .unwrap();
        for r in s.max(1)..=n {
            prop_assert_eq!(SimplicialComplex::ind_r(&k, r).unwrap(), SimplicialComplex::ind_r(&h, r).unwrap());
        }
    }

    #[test]
    fn binomial_pascal(n in 1i64..40, k in 0i64..40) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}
