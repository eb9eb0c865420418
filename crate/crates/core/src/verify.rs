//! The acceptance suite: ten exact checks, each a deterministic function of
//! a seed, reported as one machine-readable record per criterion.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::{irreducible_character, permutation_character, young_rule, CharacterTable, Projector};
use crate::error::{Error, Result};
use crate::families::{
    build_b_alternating, build_b_size, build_cross_pair_min, build_cross_pair_prod, build_cross_prod_sizes,
    build_d, build_d_size, contained_in_t_coset, default_cross_tau, is_cross_t_intersecting,
    is_t_intersecting, stability_report, t_coset, verify_w1_counterexample, Family,
};
use crate::guard::Guardrail;
use crate::oracle;
use crate::partitions::{dimension, factorial, hook_lengths, partitions_of, Partition};
use crate::permcore::{derangement_counts, group_elements, GroupMode, Permutation};
use crate::rational::{qi, Q};
use crate::search::{
    all_maximum_through_identity, max_t_intersecting, maurey_check, AgreementGraph, SearchOptions,
    SearchStatus,
};
use crate::spectral::{
    an_restriction, cayley_spectrum, hoffman_bound, omega, phi_isomorphism_check, solve_weights,
    WeightSolution, WeightedCayleySpec,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Identifiers and short names of the criteria, in order.
pub const CRITERIA: [(u8, &str); 10] = [
    (1, "hook-dimension"),
    (2, "characters"),
    (3, "spectrum"),
    (4, "hoffman"),
    (5, "extremal-search"),
    (6, "family-sizes"),
    (7, "cross-intersecting"),
    (8, "projection-stability"),
    (9, "alternating"),
    (10, "maurey"),
];

/// Failure messages kept per criterion; the count is always exact.
const MAX_REPORTED_FAILURES: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub only: Option<u8>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            only: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub facts: BTreeMap<String, String>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} {:<22} checks={} failed={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks,
            self.failed
        )
    }
}

struct Checker {
    checks: usize,
    failed: usize,
    failures: Vec<String>,
    facts: BTreeMap<String, String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checks: 0,
            failed: 0,
            failures: Vec::new(),
            facts: BTreeMap::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(msg());
            }
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, want {want:?}", what()));
    }

    /// Records an error from a step that should have succeeded.
    fn ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.insert(key.into(), value.to_string());
    }

    fn finish(self, id: u8) -> CriterionReport {
        let name = CRITERIA[id as usize - 1].1;
        CriterionReport {
            id,
            name,
            passed: self.failed == 0 && self.checks > 0,
            checks: self.checks,
            failed: self.failed,
            failures: self.failures,
            facts: self.facts,
        }
    }
}

fn rng_for(seed: u64, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (u64::from(id) << 56))
}

fn guard(max: usize) -> Guardrail {
    Guardrail::new(max)
}

pub fn run_criterion(id: u8, config: &VerifyConfig) -> Result<CriterionReport> {
    let mut c = Checker::new();
    let mut rng = rng_for(config.seed, id);
    match id {
        1 => hook_dimension(&mut c),
        2 => characters(&mut c),
        3 => spectrum(&mut c, &mut rng),
        4 => hoffman(&mut c),
        5 => extremal_search(&mut c),
        6 => family_sizes(&mut c),
        7 => cross_intersecting(&mut c),
        8 => projection_stability(&mut c, &mut rng),
        9 => alternating(&mut c),
        10 => maurey(&mut c, &mut rng),
        _ => return Err(Error::Parse(format!("no criterion {id}; expected 1..=10"))),
    }
    Ok(c.finish(id))
}

/// Every criterion selected by `config`, in order.
pub fn verify_all(config: &VerifyConfig) -> Result<Vec<CriterionReport>> {
    CRITERIA
        .iter()
        .map(|&(id, _)| id)
        .filter(|&id| config.only.is_none_or(|o| o == id))
        .map(|id| run_criterion(id, config))
        .collect()
}

fn hook_dimension(c: &mut Checker) {
    for n in 1..=8 {
        let mut sum_sq = 0u128;
        for alpha in partitions_of(n) {
            let f = dimension(&alpha);
            let brute = oracle::standard_tableaux(&alpha).len() as u128;
            c.check_eq(f, brute, || format!("dimension{alpha}"));
            sum_sq += f * f;
        }
        c.check_eq(sum_sq, factorial(n), || format!("Σ f² at n={n}"));
    }
    let alpha = Partition::new(vec![3, 2, 2]).expect("valid partition");
    c.check_eq(
        hook_lengths(&alpha).rows,
        vec![vec![5, 4, 1], vec![3, 2], vec![2, 1]],
        || "hook grid of [3,2,2]".into(),
    );
    c.check_eq(dimension(&alpha), 21, || "dimension[3,2,2]".into());
    c.fact("f[3,2,2]", dimension(&alpha));
}

fn characters(c: &mut Checker) {
    for n in 1..=7 {
        let table = CharacterTable::new(n);
        let nfact = factorial(n) as i128;
        let k = table.irreps.len();
        for a in 0..k {
            for b in a..k {
                let want = if a == b { nfact } else { 0 };
                c.check_eq(table.orthogonality_sum(a, b), want, || {
                    format!("orthogonality {} {} at n={n}", table.irreps[a], table.irreps[b])
                });
            }
        }
        if n >= 2 {
            let standard = Partition::hook(n, 1);
            let chi = irreducible_character(&standard);
            for lambda in partitions_of(n) {
                let xi = permutation_character(&standard, &lambda).map(qi);
                if let Some(xi) = c.ok(xi, || format!("ξ{standard}({lambda})")) {
                    c.check_eq(chi.value(&lambda).clone(), xi - qi(1), || format!("χ{standard}({lambda})"));
                }
            }
        }
        for beta in partitions_of(n) {
            let Some(expansion) = c.ok(young_rule(&beta), || format!("young_rule{beta}")) else {
                continue;
            };
            for (ci, lambda) in table.classes.iter().enumerate() {
                let rhs: i128 = expansion
                    .iter()
                    .map(|(alpha, k)| *k as i128 * table.value(table.index_of(alpha), ci))
                    .sum();
                let lhs = permutation_character(&beta, lambda).map(|v| v as i128);
                if let Some(lhs) = c.ok(lhs, || format!("ξ{beta}({lambda})")) {
                    c.check_eq(lhs, rhs, || format!("Young's rule ξ{beta}({lambda})"));
                }
            }
        }
    }
}

fn random_spec(n: usize, rng: &mut ChaCha8Rng) -> WeightedCayleySpec {
    loop {
        let t = rng.gen_range(1..=n);
        let mut weights = BTreeMap::new();
        for lambda in partitions_of(n) {
            if lambda.ones() < t && lambda.ones() < n {
                let num: i64 = rng.gen_range(-6..=6);
                let den: i64 = rng.gen_range(1..=4);
                weights.insert(lambda, Q::new(num.into(), den.into()));
            }
        }
        if let Ok(spec) = WeightedCayleySpec::new(n, t, weights) {
            if !spec.weights.is_empty() {
                return spec;
            }
        }
    }
}

fn spectrum(c: &mut Checker, rng: &mut ChaCha8Rng) {
    for n in 4..=7 {
        let Some(spec) = c.ok(WeightedCayleySpec::uniform_derangement(n), || format!("uniform spec n={n}")) else {
            continue;
        };
        let table = cayley_spectrum(&spec);
        c.check_eq(table.lambda_max().clone(), qi(1), || format!("λ_max at n={n}"));
        if let Some(w) = c.ok(omega(n, 1), || format!("ω({n},1)")) {
            c.check_eq(table.lambda_min().clone(), w, || format!("λ_min at n={n}"));
        }
    }
    let g = guard(5);
    let mut compared = 0;
    for n in 2..=5 {
        for i in 0..20 {
            let spec = random_spec(n, rng);
            let table = cayley_spectrum(&spec);
            let check = oracle::dense_spectrum_check(&spec, GroupMode::Sym, &table, &g);
            if let Some(check) = c.ok(check, || format!("dense check n={n} #{i}")) {
                c.check(check.passed(), || format!("dense spectrum mismatch n={n} #{i}: {check:?}"));
                compared += 1;
            }
        }
    }
    c.fact("random specs compared", compared);
}

fn check_hoffman(c: &mut Checker, spec: &WeightedCayleySpec, group: GroupMode, want: u128, label: &str) {
    let table = match group {
        GroupMode::Sym => cayley_spectrum(spec),
        GroupMode::Alt => match c.ok(an_restriction(spec), || format!("{label}: restriction")) {
            Some(t) => t,
            None => return,
        },
    };
    if let Some(report) = c.ok(hoffman_bound(&table), || format!("{label}: Hoffman bound")) {
        c.check_eq(report.bound.clone(), qi(want), || format!("{label}: bound"));
        c.fact(label, crate::rational::to_string(&report.bound));
    }
}

fn hoffman(c: &mut Checker) {
    for n in 2..=7 {
        let Some(spec) = c.ok(WeightedCayleySpec::uniform_derangement(n), || format!("uniform spec n={n}")) else {
            continue;
        };
        if let Some(w) = c.ok(omega(n, 1), || format!("ω({n},1)")) {
            c.check_eq(cayley_spectrum(&spec).lambda_min().clone(), w, || format!("λ_min n={n} t=1"));
        }
        check_hoffman(c, &spec, GroupMode::Sym, factorial(n - 1), &format!("S_{n} t=1"));
    }
    match c.ok(solve_weights(5, 2), || "solve_weights(5,2)".into()) {
        Some(WeightSolution::Feasible { spec, .. }) => {
            if let Some(w) = c.ok(omega(5, 2), || "ω(5,2)".into()) {
                c.check_eq(cayley_spectrum(&spec).lambda_min().clone(), w, || "λ_min n=5 t=2".into());
            }
            check_hoffman(c, &spec, GroupMode::Sym, 6, "S_5 t=2");
        }
        Some(other) => c.check(false, || format!("solve_weights(5,2) infeasible: {other:?}")),
        None => {}
    }
    for n in [5, 6] {
        if let Some(spec) = c.ok(WeightedCayleySpec::uniform_even_derangement(n), || format!("even spec n={n}")) {
            check_hoffman(c, &spec, GroupMode::Alt, factorial(n - 1) / 2, &format!("A_{n} t=1"));
        }
    }
}

/// A spec whose Hoffman bound is valid for `(n, t, group)`, if one is known.
fn valid_spec(n: usize, t: usize, group: GroupMode) -> Option<WeightedCayleySpec> {
    match group {
        GroupMode::Sym => match solve_weights(n, t) {
            Ok(WeightSolution::Feasible { spec, .. }) => Some(spec),
            _ => None,
        },
        GroupMode::Alt if t == 1 => WeightedCayleySpec::uniform_even_derangement(n).ok(),
        GroupMode::Alt => None,
    }
}

fn extremal_search(c: &mut Checker) {
    let g = guard(5);
    for n in 3..=5 {
        let r = max_t_intersecting(n, 1, GroupMode::Sym, &g, SearchOptions::default());
        let Some(r) = c.ok(r, || format!("search n={n}")) else { continue };
        c.check_eq(r.status, SearchStatus::ProvedOptimal, || format!("status n={n}"));
        c.check_eq(r.optimum as u128, factorial(n - 1), || format!("optimum n={n}"));
        c.check(is_t_intersecting(&r.witness, 1), || format!("witness n={n} not intersecting"));
        c.fact(format!("S_{n} t=1 optimum"), r.optimum);
        let Some(graph) = c.ok(AgreementGraph::new(n, 1, GroupMode::Sym, &g), || format!("graph n={n}")) else {
            continue;
        };
        let all = all_maximum_through_identity(&graph, r.optimum);
        c.fact(format!("S_{n} optimal families through id"), all.len());
        for f in &all {
            c.check(contained_in_t_coset(f, 1).is_some(), || format!("optimal family at n={n} is not a 1-coset: {f:?}"));
        }
    }
    for (n, t, group) in [
        (3, 1, GroupMode::Sym),
        (4, 1, GroupMode::Sym),
        (4, 2, GroupMode::Sym),
        (5, 1, GroupMode::Sym),
        (5, 2, GroupMode::Sym),
        (5, 3, GroupMode::Sym),
        (4, 1, GroupMode::Alt),
        (5, 1, GroupMode::Alt),
    ] {
        let Some(spec) = valid_spec(n, t, group) else { continue };
        let table = match group {
            GroupMode::Sym => cayley_spectrum(&spec),
            GroupMode::Alt => match an_restriction(&spec) {
                Ok(t) => t,
                Err(_) => continue,
            },
        };
        let Ok(report) = hoffman_bound(&table) else { continue };
        let label = format!("{group:?} n={n} t={t}");
        if let Some(r) = c.ok(max_t_intersecting(n, t, group, &g, SearchOptions::default()), || label.clone()) {
            c.check(qi(r.optimum) <= report.bound, || {
                format!("{label}: optimum {} exceeds Hoffman bound {}", r.optimum, report.bound)
            });
            c.fact(format!("{label} optimum/bound"), format!("{}/{}", r.optimum, report.bound));
        }
    }
}

fn family_sizes(c: &mut Checker) {
    for t in 1..=2 {
        for n in t + 2..=9 {
            if let Some(d) = c.ok(build_d(n, t), || format!("build_d({n},{t})")) {
                c.check_eq(d.len() as i128, build_d_size(n, t), || format!("|build_d({n},{t})|"));
            }
        }
    }
    for n in 5..=8 {
        if let Some(b) = c.ok(build_b_alternating(n, 1), || format!("build_b_alternating({n},1)")) {
            c.check_eq(b.len() as i128, build_b_size(n, 1), || format!("|build_b_alternating({n},1)|"));
            c.check(b.all_even(), || format!("build_b_alternating({n},1) has an odd member"));
        }
    }
    let g = guard(9);
    for n in 1..=9usize {
        let Some(brute) = c.ok(oracle::derangement_counts_brute(n, &g), || format!("derangements n={n}")) else {
            continue;
        };
        c.check_eq(brute, derangement_counts(n), || format!("derangement counts n={n}"));
        let sign = if n % 2 == 1 { 1 } else { -1 };
        c.check_eq(
            brute.e as i128 - brute.o as i128,
            sign * (n as i128 - 1),
            || format!("e_{n} - o_{n}"),
        );
    }
}

fn cross_intersecting(c: &mut Checker) {
    for n in 3..=6 {
        let t = 1;
        let bound = factorial(n - t) * factorial(n - t);
        let pair = default_cross_tau(n, t).and_then(|tau| build_cross_pair_min(n, t, &tau));
        if let Some((f, g)) = c.ok(pair, || format!("min pair n={n}")) {
            c.check(is_cross_t_intersecting(&f, &g, t).unwrap_or(false), || format!("min pair n={n} not cross-intersecting"));
            c.check_eq(f.len().min(g.len()) as i128, build_d_size(n, t), || format!("min pair size n={n}"));
            c.check((f.len() * g.len()) as u128 <= bound, || format!("min pair product n={n}"));
        }
        if let Some((a, b)) = c.ok(build_cross_pair_prod(n, t), || format!("product pair n={n}")) {
            c.check(is_cross_t_intersecting(&a, &b, t).unwrap_or(false), || format!("product pair n={n} not cross-intersecting"));
            let (sa, sb) = build_cross_prod_sizes(n, t);
            c.check_eq((a.len() as i128, b.len() as i128), (sa, sb), || format!("product pair sizes n={n}"));
            c.check((a.len() * b.len()) as u128 <= bound, || format!("product pair product n={n}"));
        }
    }
}

/// A random maximal `t`-intersecting family, or a random non-empty part
/// of one.
fn random_intersecting(elements: &[Permutation], t: usize, rng: &mut ChaCha8Rng) -> Family {
    let n = elements[0].degree();
    let mut order: Vec<&Permutation> = elements.iter().collect();
    order.shuffle(rng);
    let mut chosen: Vec<Permutation> = Vec::new();
    for p in order {
        if chosen.iter().all(|q| p.agreements(q).unwrap_or(0) >= t) {
            chosen.push(p.clone());
        }
    }
    if rng.gen_bool(0.5) {
        let keep: Vec<Permutation> = chosen.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if !keep.is_empty() {
            chosen = keep;
        }
    }
    Family::new(n, chosen).expect("members of one group")
}

fn projection_stability(c: &mut Checker, rng: &mut ChaCha8Rng) {
    let g = guard(6);
    let mut projectors = BTreeMap::new();
    for n in 2..=6 {
        if let Some(p) = c.ok(Projector::new(n, &g), || format!("projector n={n}")) {
            projectors.insert(n, p);
        }
    }
    let mut cosets = 0;
    for (&n, proj) in &projectors {
        for t in 1..=2.min(n) {
            let Some(specs) = c.ok(oracle::all_coset_specs(n, t), || format!("coset specs n={n} t={t}")) else {
                continue;
            };
            for spec in specs {
                let Some(f) = c.ok(t_coset(n, &spec), || format!("coset {spec:?}")) else { continue };
                let Some(u) = c.ok(f.indicator(), || "indicator".into()) else { continue };
                if let Some(p) = c.ok(proj.project_v_t(&u, t), || format!("projection {spec:?}")) {
                    c.check(p == u, || format!("projection moves the coset {spec:?} (n={n}, t={t})"));
                    cosets += 1;
                }
            }
        }
    }
    c.fact("cosets projected", cosets);

    for n in [4, 5] {
        let Some(r) = c.ok(max_t_intersecting(n, 1, GroupMode::Sym, &g, SearchOptions::default()), || {
            format!("search n={n}")
        }) else {
            continue;
        };
        let Some(graph) = c.ok(AgreementGraph::new(n, 1, GroupMode::Sym, &g), || format!("graph n={n}")) else {
            continue;
        };
        let mut maxima = BTreeSet::new();
        for f in all_maximum_through_identity(&graph, r.optimum) {
            for pi in &graph.vertices {
                let moved = Family::new(n, f.iter().map(|s| pi.compose(s).expect("equal degrees")));
                maxima.insert(moved.expect("members of S_n"));
            }
        }
        c.fact(format!("maximum families n={n}"), maxima.len());
        let proj = &projectors[&n];
        for f in &maxima {
            let residual = f.indicator().and_then(|u| proj.residual_norm_sq(&u, 1));
            if let Some(res) = c.ok(residual, || format!("residual n={n}")) {
                c.check(res.is_zero(), || format!("maximum family at n={n} has residual {res}"));
            }
        }
    }

    let mut samples = 0;
    for n in [4, 5] {
        let Some(elements) = c.ok(group_elements(n, GroupMode::Sym, &g), || format!("S_{n}")) else { continue };
        let Some(spec) = c.ok(WeightedCayleySpec::uniform_derangement(n), || format!("spec n={n}")) else {
            continue;
        };
        let proj = &projectors[&n];
        for i in 0..100 {
            let f = random_intersecting(&elements, 1, rng);
            if let Some(rep) = c.ok(stability_report(&f, 1, &spec, proj), || format!("stability n={n} #{i}")) {
                c.check(rep.holds == Some(true), || format!("stability bound fails n={n} #{i}: {rep:?}"));
                samples += 1;
            }
        }
    }
    c.fact("random families", samples);
    let d = build_d(5, 1);
    let spec = WeightedCayleySpec::uniform_derangement(5);
    if let (Some(d), Some(spec)) = (c.ok(d, || "build_d(5,1)".into()), c.ok(spec, || "spec n=5".into())) {
        if let Some(rep) = c.ok(stability_report(&d, 1, &spec, &projectors[&5]), || "stability build_d(5,1)".into()) {
            c.check(rep.holds == Some(true), || format!("stability bound fails for build_d(5,1): {rep:?}"));
            c.check(rep.residual.is_positive(), || "build_d(5,1) residual is not positive".into());
            c.fact("build_d(5,1) residual", crate::rational::to_string(&rep.residual));
            if let Some(b) = &rep.bound {
                c.fact("build_d(5,1) bound", crate::rational::to_string(b));
            }
        }
    }
}

fn alternating(c: &mut Checker) {
    let g = guard(6);
    for n in [4, 5] {
        let even: Vec<Partition> = partitions_of(n)
            .into_iter()
            .filter(|l| l.sign() == 1 && l.ones() < n)
            .collect();
        for mask in 1u32..(1 << even.len()) {
            let weights: BTreeMap<Partition, Q> = even
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(i, l)| (l.clone(), qi(i as i64 + 1)))
                .collect();
            let label = format!("n={n} support {:?}", weights.keys().collect::<Vec<_>>());
            let check = WeightedCayleySpec::new(n, n, weights).and_then(|s| phi_isomorphism_check(&s, &g));
            if let Some(check) = c.ok(check, || label.clone()) {
                c.check(check.passed(), || format!("φ check fails for {label}: {check:?}"));
            }
        }
    }
    for n in 4..=6 {
        if let Some(r) = c.ok(verify_w1_counterexample(n, &g), || format!("W_1 n={n}")) {
            c.check(r.nonnegative_on_an, || format!("W_1 matrix negative on A_{n}: {r:?}"));
            c.check_eq(r.value_at_transposition.clone(), qi(-1), || format!("f((1 2)) at n={n}"));
            c.fact(format!("W_1 min on A_{n}"), crate::rational::to_string(&r.min_on_an));
        }
    }
}

fn maurey(c: &mut Checker, rng: &mut ChaCha8Rng) {
    let g = guard(5);
    for n in 2..=5 {
        let Some(elements) = c.ok(group_elements(n, GroupMode::Sym, &g), || format!("S_{n}")) else { continue };
        let mut sets = vec![Family::new(n, [Permutation::identity(n)]).expect("identity")];
        for _ in 0..100 {
            let k = rng.gen_range(1..=elements.len());
            let x: Vec<Permutation> = elements.choose_multiple(rng, k).cloned().collect();
            sets.push(Family::new(n, x).expect("members of S_n"));
        }
        let mut rows = 0;
        for (i, x) in sets.iter().enumerate() {
            if let Some(r) = c.ok(maurey_check(x), || format!("Maurey n={n} #{i}")) {
                rows += r.rows.len();
                c.check(r.holds(), || format!("Maurey bound exceeds |N_h| at n={n} #{i}: {r:?}"));
            }
        }
        c.fact(format!("n={n} (set, h) pairs"), rows);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_criterion() {
        assert!(run_criterion(11, &VerifyConfig::default()).is_err());
    }

    #[test]
    fn quick_criteria_pass() {
        for id in [1, 6, 9] {
            let r = run_criterion(id, &VerifyConfig::default()).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn report_is_deterministic() {
        let cfg = VerifyConfig { seed: 7, only: Some(10) };
        assert_eq!(verify_all(&cfg).unwrap(), verify_all(&cfg).unwrap());
    }
}
