use permspectra::characters::{irreducible_character, Projector};
use permspectra::families::{build_d, t_coset, CosetSpec};
use permspectra::oracle::{
    charpoly_multiplicities, coset_span_projection, dense_spectrum_check, tabloid_character,
};
use permspectra::partitions::{dimension, factorial, fat_partitions, partitions_of};
use permspectra::rational::{q, qi};
use permspectra::search::{max_t_intersecting, verify_hoffman_tightness, SearchOptions};
use permspectra::spectral::{an_restriction, cayley_spectrum, solve_weights, WeightSolution};
use permspectra::{Composition, GroupFunction, GroupMode, Guardrail, Permutation, WeightedCayleySpec, Q};

#[test]
fn permutation_characters_match_tabloid_counts() {
    for n in 1..=6 {
        for beta in partitions_of(n) {
            for lambda in partitions_of(n) {
                let dp = permspectra::characters::permutation_character(&beta, &lambda).unwrap();
                assert_eq!(dp, tabloid_character(&beta, &lambda), "beta={beta} lambda={lambda}");
                let comp = Composition::new(beta.parts().iter().rev().map(|&x| x as i64).collect());
                assert_eq!(permspectra::characters::composition_character(&comp, &lambda), dp);
            }
        }
    }
}

#[test]
fn v_t_projection_matches_coset_span() {
    let guard = Guardrail::default();
    for (n, t) in [(3, 1), (4, 1), (4, 2), (5, 1)] {
        let projector = Projector::new(n, &guard).unwrap();
        let d = build_d(n, t).unwrap().indicator().unwrap();
        let odd = GroupFunction::from_sparse(
            n,
            [
                (Permutation::unrank(n, 1), q(3, 2)),
                (Permutation::unrank(n, factorial(n) as usize - 1), q(-2, 1)),
            ],
        )
        .unwrap();
        for u in [d, odd] {
            assert_eq!(
                projector.project_v_t(&u, t).unwrap(),
                coset_span_projection(&u, t, &guard).unwrap(),
                "n={n} t={t}"
            );
        }
    }
}

#[test]
fn characteristic_polynomial_at_n4() {
    let guard = Guardrail::default();
    let spec = WeightedCayleySpec::uniform_derangement(4).unwrap();
    let table = cayley_spectrum(&spec);
    let mut expected: Vec<(Q, usize)> = Vec::new();
    for e in &table.entries {
        match expected.iter_mut().find(|(v, _)| *v == e.eigenvalue) {
            Some(slot) => slot.1 += e.multiplicity as usize,
            None => expected.push((e.eigenvalue.clone(), e.multiplicity as usize)),
        }
    }
    let candidates: Vec<Q> = expected.iter().map(|(v, _)| v.clone()).collect();
    let mut found = charpoly_multiplicities(&spec, GroupMode::Sym, &candidates, &guard).unwrap();
    found.sort();
    expected.sort();
    assert_eq!(found, expected);
}

#[test]
fn alternating_spectra_match_dense_matrices() {
    let guard = Guardrail::default();
    for n in 3..=6 {
        let spec = WeightedCayleySpec::uniform_even_derangement(n).unwrap();
        let table = an_restriction(&spec).unwrap();
        let check = dense_spectrum_check(&spec, GroupMode::Alt, &table, &guard).unwrap();
        assert!(check.passed(), "n={n}: {check:?}");
    }
}

#[test]
fn identity_indicator_on_fat_components() {
    let guard = Guardrail::default();
    for (n, t) in [(4, 1), (4, 2), (5, 1), (5, 2)] {
        let projector = Projector::new(n, &guard).unwrap();
        let delta = GroupFunction::indicator(n, [&Permutation::identity(n)]).unwrap();
        let projected = projector.project_v_t(&delta, t).unwrap();
        let fat = fat_partitions(n, t);
        let mass: u128 = fat.iter().map(|a| dimension(a) * dimension(a)).sum();
        let nf = factorial(n);
        assert_eq!(projected.get(&Permutation::identity(n)), &q(mass as i64, nf as i64));
        let at_sigma = |sigma: &Permutation| -> Q {
            fat.iter()
                .map(|a| qi(dimension(a)) * irreducible_character(a).value(&sigma.cycle_type()).clone())
                .sum::<Q>()
                / qi(nf)
        };
        let sigma = Permutation::unrank(n, 7);
        assert_eq!(projected.get(&sigma), &at_sigma(&sigma));
    }
}

#[test]
fn hoffman_tightness_on_searched_optima() {
    let guard = Guardrail::default();
    for (n, t) in [(4, 1), (5, 1), (4, 2)] {
        let spec = match solve_weights(n, t).unwrap() {
            WeightSolution::Feasible { spec, .. } => spec,
            WeightSolution::Infeasible { .. } => panic!("no weighting at n={n} t={t}"),
        };
        let projector = Projector::new(n, &guard).unwrap();
        let result = max_t_intersecting(n, t, GroupMode::Sym, &guard, SearchOptions::default()).unwrap();
        let report = verify_hoffman_tightness(&result.witness, t, &spec, &projector).unwrap();
        assert!(report.tight, "n={n} t={t}: {report:?}");

        let d = build_d(n, t).unwrap();
        let off = verify_hoffman_tightness(&d, t, &spec, &projector).unwrap();
        assert!(!off.meets_bound && !off.tight);
    }
    let coset = t_coset(5, &CosetSpec::new(5, vec![(1, 3), (4, 2)]).unwrap()).unwrap();
    let spec = match solve_weights(5, 2).unwrap() {
        WeightSolution::Feasible { spec, .. } => spec,
        WeightSolution::Infeasible { .. } => unreachable!(),
    };
    let report = verify_hoffman_tightness(&coset, 2, &spec, &Projector::new(5, &guard).unwrap()).unwrap();
    assert!(report.tight);
}
