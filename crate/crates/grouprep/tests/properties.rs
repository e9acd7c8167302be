//! Cross-cutting invariants: exhaustive checks over the small corpora plus a
//! few property tests over random inputs.

use num_bigint::BigUint;
use proptest::prelude::*;

use grouprep::corpus::{connected_graphs_up_to_iso, standard_group_corpus, trees_up_to_iso};
use grouprep::decide::{decide_perm_rep, decide_solvable_rep, decide_tree_rep, GroupInput};
use grouprep::graph::{
    are_isomorphic, aut_order, aut_order_by_components, enumerate_automorphisms, Graph,
};
use grouprep::io;
use grouprep::perm::{commutator_gens, exhaustive_elements, schreier_sims, GenSet, Permutation};
use grouprep::table::TableGroup;
use grouprep::tree::{
    aut_orbits, canonical_free_code, orbit_subtree, root_tree, tree_aut_generators,
};

/// A nontrivial homomorphism into S_n exists exactly when a proper subgroup
/// of index at most n exists; checked for every corpus group of order <= 24
/// and every degree up to 6.
#[test]
fn perm_rep_matches_subgroup_index_characterization() {
    for (name, table) in standard_group_corpus(24) {
        let order = table.order();
        let min_index = table
            .all_subgroups()
            .iter()
            .filter(|h| h.len() < order)
            .map(|h| order / h.len())
            .min()
            .expect("nontrivial groups have proper subgroups");
        let g = GroupInput::Table(table);
        for n in 1..=6usize {
            let decided = decide_perm_rep(&g, n).expect("within caps").representable;
            let by_index = min_index <= n;
            assert_eq!(decided, by_index, "{name} at n={n} (min index {min_index})");
        }
    }
}

/// Table and generator presentations of the same group get identical
/// verdicts from every decision procedure.
#[test]
fn presentations_agree_across_decisions() {
    let pairs: Vec<(&str, TableGroup, GenSet)> = vec![
        (
            "Z6",
            TableGroup::cyclic(6).unwrap(),
            GenSet::new(
                6,
                vec![Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()],
            )
            .unwrap(),
        ),
        (
            "S4",
            TableGroup::symmetric(4).unwrap(),
            GenSet::new(
                4,
                vec![
                    Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
                    Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "D4",
            TableGroup::dihedral(4).unwrap(),
            GenSet::new(
                4,
                vec![
                    Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
                    Permutation::from_images(vec![3, 2, 1, 0]).unwrap(),
                ],
            )
            .unwrap(),
        ),
    ];
    let graphs = connected_graphs_up_to_iso(5).unwrap();
    let trees: Vec<Graph> = (1..=6).flat_map(|n| trees_up_to_iso(n).unwrap()).collect();
    for (name, table, gens) in pairs {
        let by_table = GroupInput::Table(table);
        let by_gens = GroupInput::Perm(gens);
        for x in &graphs {
            let a = decide_solvable_rep(&by_table, x).unwrap().representable;
            let b = decide_solvable_rep(&by_gens, x).unwrap().representable;
            assert_eq!(a, b, "{name} solvable-rep on {x:?}");
        }
        for t in &trees {
            let a = decide_tree_rep(&by_table, t).unwrap().verdict.representable;
            let b = decide_tree_rep(&by_gens, t).unwrap().verdict.representable;
            assert_eq!(a, b, "{name} tree-rep on {t:?}");
        }
        for n in 1..=5usize {
            let a = decide_perm_rep(&by_table, n).unwrap().representable;
            let b = decide_perm_rep(&by_gens, n).unwrap().representable;
            assert_eq!(a, b, "{name} perm-rep at {n}");
        }
    }
}

/// Canonical free-tree codes agree with the exact isomorphism test across
/// the corpus of all trees on up to 7 vertices.
#[test]
fn canonical_codes_agree_with_isomorphism() {
    let trees: Vec<Graph> = (1..=7)
        .flat_map(|n| trees_up_to_iso(n).expect("within cap"))
        .collect();
    for (i, a) in trees.iter().enumerate() {
        for b in trees.iter().skip(i) {
            let same_code = canonical_free_code(a).unwrap() == canonical_free_code(b).unwrap();
            let iso = are_isomorphic(a, b).unwrap().is_some();
            assert_eq!(same_code, iso, "{a:?} vs {b:?}");
        }
    }
}

/// Orbit subtree structure across all trees on up to 8 vertices: the leaves
/// of the subtree spanned by an orbit are exactly the orbit, nested orbits
/// span nested subtrees, and every tree has a singleton orbit or an adjacent
/// 2-element orbit (so rooting never fails).
#[test]
fn orbit_subtree_structure_holds_on_corpus() {
    for n in 1..=8usize {
        for t in trees_up_to_iso(n).expect("within cap") {
            let partition = aut_orbits(&t).expect("valid tree");
            let mut has_anchor = false;
            for delta in partition.orbits() {
                let sub = orbit_subtree(&t, delta).expect("orbit of this tree");
                assert_eq!(&sub.leaves(), delta, "leaves != orbit on {t:?}");
                for &v in &sub.vertices {
                    let sigma = partition.orbit_of(v).expect("vertex has an orbit");
                    let inner = orbit_subtree(&t, sigma).expect("orbit of this tree");
                    assert!(
                        inner.vertices.iter().all(|x| sub.vertices.contains(x)),
                        "nested orbit escapes on {t:?}"
                    );
                    assert!(
                        inner.edges.iter().all(|e| sub.edges.contains(e)),
                        "nested orbit edge escapes on {t:?}"
                    );
                }
                if delta.len() == 1 || (delta.len() == 2 && t.has_edge(delta[0], delta[1])) {
                    has_anchor = true;
                }
            }
            assert!(has_anchor, "no fixed vertex or fixed edge orbit in {t:?}");
            root_tree(&t).expect("rooting succeeds on the whole corpus");
        }
    }
}

/// The generator search agrees with full enumeration on every connected
/// graph with up to 6 vertices and on every complement of one, and the
/// component-product shortcut matches the direct search.
#[test]
fn automorphism_search_matches_enumeration_on_corpus() {
    for n in 1..=6usize {
        for g in connected_graphs_up_to_iso(n).expect("within cap") {
            for candidate in [g.clone(), g.complement()] {
                let enumerated = enumerate_automorphisms(&candidate)
                    .expect("within caps")
                    .len();
                let searched = aut_order(&candidate).expect("within cap");
                assert_eq!(searched, BigUint::from(enumerated), "on {candidate:?}");
                let by_components = aut_order_by_components(&candidate).expect("within cap");
                assert_eq!(by_components, searched, "components on {candidate:?}");
            }
        }
    }
}

/// Isomorphism testing is reflexive with the identity witness, and the
/// witness of a relabeled pair inverts to a witness in the other direction.
#[test]
fn isomorphism_is_reflexive_and_symmetric_on_corpus() {
    for n in 1..=5usize {
        for g in connected_graphs_up_to_iso(n).expect("within cap") {
            let self_witness = are_isomorphic(&g, &g)
                .expect("within cap")
                .expect("reflexive");
            assert!(self_witness.iter().enumerate().all(|(i, &v)| i == v));
            // Relabel by reversing vertex indices.
            let reversed: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (n - 1 - u, n - 1 - v))
                .collect();
            let h = Graph::new(n, &reversed).expect("relabeling is simple");
            let forward = are_isomorphic(&g, &h)
                .expect("within cap")
                .expect("relabeled");
            let backward = are_isomorphic(&h, &g)
                .expect("within cap")
                .expect("relabeled");
            // The inverse of the forward witness maps h back onto g.
            let inv = Permutation::from_images(forward)
                .expect("bijection")
                .inverse();
            for &(u, v) in h.edges() {
                assert!(g.has_edge(inv.apply(u), inv.apply(v)));
            }
            let _ = backward;
        }
    }
}

/// The tree-specific generator construction and the generic graph search
/// produce the same automorphism group on every tree with up to 10 vertices.
#[test]
fn tree_generators_match_graph_search() {
    for n in 1..=10usize {
        for t in trees_up_to_iso(n).expect("within cap") {
            let tree_order = schreier_sims(&tree_aut_generators(&t).unwrap()).order();
            let graph_order = aut_order(&t).unwrap();
            assert_eq!(tree_order, graph_order, "on {t:?}");
        }
    }
}

/// Commutator generators land in the commutator subgroup and the quotient
/// order divides the group order, for the permutation presentations of the
/// corpus groups realized on small degrees.
#[test]
fn commutator_quotient_consistency() {
    let cases: Vec<(&str, GenSet)> = vec![
        (
            "S3",
            GenSet::new(
                3,
                vec![
                    Permutation::from_images(vec![1, 2, 0]).unwrap(),
                    Permutation::from_images(vec![1, 0, 2]).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "S4",
            GenSet::new(
                4,
                vec![
                    Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
                    Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                ],
            )
            .unwrap(),
        ),
        (
            "D4",
            GenSet::new(
                4,
                vec![
                    Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
                    Permutation::from_images(vec![3, 2, 1, 0]).unwrap(),
                ],
            )
            .unwrap(),
        ),
    ];
    for (name, gs) in cases {
        let whole = schreier_sims(&gs);
        let derived_gens = commutator_gens(&gs);
        let derived = schreier_sims(&derived_gens);
        for k in derived_gens.gens() {
            assert!(
                whole.contains(k).unwrap(),
                "{name}: derived generator outside group"
            );
        }
        let (w, d) = (whole.order(), derived.order());
        assert_eq!(
            &w % &d,
            BigUint::from(0u32),
            "{name}: quotient not integral"
        );
        // Cross-check against the table realization.
        let group = GroupInput::Perm(gs.clone());
        let table = group.to_table().unwrap();
        assert_eq!(
            BigUint::from(table.abelianization_order()),
            &w / &d,
            "{name}: abelianization mismatch"
        );
    }
}

fn arb_permutation(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(|n| {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap())
    })
}

fn arb_genset(degree: usize, max_gens: usize) -> impl Strategy<Value = GenSet> {
    prop::collection::vec(
        Just((0..degree).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap()),
        0..=max_gens,
    )
    .prop_map(move |gens| GenSet::new(degree, gens).unwrap())
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn composition_is_associative(
        (p, q, r) in (1..=8usize).prop_flat_map(|n| {
            let one = move || {
                Just((0..n).collect::<Vec<usize>>())
                    .prop_shuffle()
                    .prop_map(|images| Permutation::from_images(images).unwrap())
            };
            (one(), one(), one())
        }),
    ) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in arb_permutation(10)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn chain_order_equals_closure_size(gs in (1..=6usize).prop_flat_map(|d| arb_genset(d, 3))) {
        let closure = exhaustive_elements(&gs).unwrap();
        let sgs = schreier_sims(&gs);
        prop_assert_eq!(sgs.order(), BigUint::from(closure.len()));
        for g in gs.gens() {
            prop_assert!(sgs.contains(g).unwrap());
        }
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph_serialization_round_trips(g in arb_graph(9)) {
        let text = io::write_graph(&g);
        let io::ParsedInput::Graph(back) = io::parse_str(&text).unwrap() else {
            return Err(TestCaseError::fail("parsed to wrong kind"));
        };
        prop_assert_eq!(back, g);
    }

    #[test]
    fn perm_serialization_round_trips(gs in (1..=7usize).prop_flat_map(|d| arb_genset(d, 3))) {
        let text = io::write_perm(&gs);
        let io::ParsedInput::Perm(back) = io::parse_str(&text).unwrap() else {
            return Err(TestCaseError::fail("parsed to wrong kind"));
        };
        prop_assert_eq!(back, gs);
    }

    #[test]
    fn table_groups_round_trip(n in 1..=12usize) {
        let table = TableGroup::cyclic(n).unwrap();
        let text = io::write_table(&table);
        let io::ParsedInput::Table(back) = io::parse_str(&text).unwrap() else {
            return Err(TestCaseError::fail("parsed to wrong kind"));
        };
        prop_assert_eq!(back, table);
    }
}
