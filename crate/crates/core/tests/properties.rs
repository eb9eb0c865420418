use proptest::prelude::*;

use permspectra::characters::{irreducible_character, GroupFunction, Projector};
use permspectra::families::{contained_in_t_coset, double_translate, is_t_intersecting, t_coset, CosetSpec};
use permspectra::partitions::{dimension, factorial, kostka, partitions_of};
use permspectra::permcore::derangement_counts;
use permspectra::rational::{q, zero};
use permspectra::search::{max_t_intersecting, naive_max_clique, AgreementGraph, SearchOptions, SearchStatus};
use permspectra::spectral::cayley_spectrum;
use permspectra::{Family, GroupMode, Guardrail, Partition, Permutation, WeightedCayleySpec, Q};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    (0..factorial(n) as usize).prop_map(move |r| Permutation::unrank(n, r))
}

fn degree_and_two(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm(n), perm(n)))
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn sparse_function(n: usize) -> impl Strategy<Value = GroupFunction> {
    let order = factorial(n) as usize;
    prop::collection::vec((0..order, -5i64..=5, 1i64..=3), 1..8).prop_map(move |entries| {
        GroupFunction::from_sparse(
            n,
            entries.into_iter().map(|(r, a, b)| (Permutation::unrank(n, r), q(a, b))),
        )
        .expect("members of S_n")
    })
}

fn random_weights(n: usize) -> impl Strategy<Value = WeightedCayleySpec> {
    let classes: Vec<Partition> = partitions_of(n).into_iter().filter(|p| p.ones() == 0).collect();
    prop::collection::vec((0i64..=4, 1i64..=4), classes.len()).prop_map(move |ws| {
        let weights = classes.iter().cloned().zip(ws.into_iter().map(|(a, b)| q(a, b))).collect();
        WeightedCayleySpec::new(n, 1, weights).expect("derangement classes")
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sign_is_multiplicative((a, b) in degree_and_two(7)) {
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
    }

    #[test]
    fn i_fix_adds_a_fixed_point(p in (2usize..=7).prop_flat_map(|n| (perm(n), 1..=n))) {
        let (sigma, i) = p;
        let fixed = sigma.i_fix(i).unwrap();
        prop_assert_eq!(fixed.apply(i), i);
        let moved = sigma.apply(i) != i;
        let two_cycle = moved && sigma.apply(sigma.apply(i)) == i;
        let expected = sigma.fixed_points() + usize::from(moved) + usize::from(two_cycle);
        prop_assert_eq!(fixed.fixed_points(), expected);
        for j in 1..=sigma.degree() {
            if sigma.apply(j) == j {
                prop_assert_eq!(fixed.apply(j), j);
            }
        }
    }

    #[test]
    fn inverse_composes_to_identity((a, _) in degree_and_two(7)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn conjugation_is_an_involution(alpha in partition(10)) {
        prop_assert_eq!(alpha.conjugate().conjugate(), alpha.clone());
        prop_assert_eq!(dimension(&alpha.conjugate()), dimension(&alpha));
    }

    #[test]
    fn kostka_is_unitriangular(pair in (1usize..=7).prop_flat_map(|n| {
        let all = partitions_of(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })) {
        let (alpha, beta) = pair;
        let k = kostka(&alpha, &beta).unwrap();
        if alpha == beta {
            prop_assert_eq!(k, 1);
        } else if !alpha.dominates(&beta) {
            prop_assert_eq!(k, 0);
        }
    }

    #[test]
    fn character_at_identity_is_dimension(alpha in partition(9)) {
        let chi = irreducible_character(&alpha);
        let identity = Partition::column(alpha.size());
        prop_assert_eq!(chi.value(&identity).clone(), Q::from_integer(dimension(&alpha).into()));
    }

    #[test]
    fn spectrum_is_traceless(spec in (2usize..=8).prop_flat_map(random_weights)) {
        let table = cayley_spectrum(&spec);
        prop_assert_eq!(table.trace(), zero());
        prop_assert_eq!(table.total_multiplicity(), factorial(spec.n));
        prop_assert_eq!(table.lambda_1(), &spec.row_sum());
    }

    #[test]
    fn translates_preserve_structure(input in (2usize..=6).prop_flat_map(|n| {
        (prop::collection::btree_set(0..factorial(n) as usize, 1..12), perm(n), perm(n), 1..=2usize)
            .prop_map(move |(ranks, a, b, t)| (n, ranks, a, b, t))
    })) {
        let (n, ranks, pi, rho, t) = input;
        let f = Family::new(n, ranks.into_iter().map(|r| Permutation::unrank(n, r))).unwrap();
        let g = double_translate(&f, &pi, &rho).unwrap();
        prop_assert_eq!(g.len(), f.len());
        prop_assert_eq!(is_t_intersecting(&g, t), is_t_intersecting(&f, t));
        prop_assert_eq!(contained_in_t_coset(&g, t).is_some(), contained_in_t_coset(&f, t).is_some());
    }

    #[test]
    fn coset_has_expected_size(input in (1usize..=6).prop_flat_map(|n| (Just(n), 0..=n, perm(n), perm(n)))) {
        let (n, t, a, b) = input;
        let pairs = (1..=t).map(|i| (a.apply(i), b.apply(i))).collect();
        let coset = t_coset(n, &CosetSpec::new(n, pairs).unwrap()).unwrap();
        prop_assert_eq!(coset.len() as u128, factorial(n - t));
        prop_assert!(is_t_intersecting(&coset, t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn projections_are_orthogonal_idempotents(input in (2usize..=5).prop_flat_map(|n| (Just(n), sparse_function(n)))) {
        let (n, u) = input;
        let projector = Projector::new(n, &Guardrail::default()).unwrap();
        let mut total = GroupFunction::zero(n);
        let mut norms = zero();
        let parts = partitions_of(n);
        for alpha in &parts {
            let p = projector.isotypic_projection(&u, alpha).unwrap();
            prop_assert_eq!(projector.isotypic_projection(&p, alpha).unwrap(), p.clone());
            for beta in parts.iter().filter(|b| *b != alpha) {
                prop_assert!(projector.isotypic_projection(&p, beta).unwrap().is_zero());
            }
            norms += p.norm_sq();
            total = total.add(&p);
        }
        prop_assert_eq!(total, u.clone());
        prop_assert_eq!(norms, u.norm_sq());
    }
}

#[test]
fn derangement_recurrence() {
    for n in 2..=12 {
        let (a, b, c) = (derangement_counts(n - 2), derangement_counts(n - 1), derangement_counts(n));
        assert_eq!(c.d, (n as u128 - 1) * (a.d + b.d), "n = {n}");
        assert_eq!(c.e as i128 - c.o as i128, if n % 2 == 0 { 1 - n as i128 } else { n as i128 - 1 }, "n = {n}");
    }
}

#[test]
fn search_agrees_with_naive_clique() {
    let guard = Guardrail::default();
    for n in 2..=4 {
        for t in 1..=n {
            for group in [GroupMode::Sym, GroupMode::Alt] {
                let result = max_t_intersecting(n, t, group, &guard, SearchOptions::default()).unwrap();
                let graph = AgreementGraph::new(n, t, group, &guard).unwrap();
                assert_eq!(result.status, SearchStatus::ProvedOptimal);
                assert_eq!(result.optimum, naive_max_clique(&graph.adjacency), "n={n} t={t} {group:?}");
                let witness = &result.witness;
                assert_eq!(witness.len(), result.optimum);
                assert!(is_t_intersecting(witness, t));
            }
        }
    }
}
