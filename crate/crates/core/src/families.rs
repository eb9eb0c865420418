//! Families of permutations: intersection predicates, `t`-cosets, the
//! extremal constructions, double translates and stability reports.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::{GroupFunction, Projector};
use crate::error::{Error, Result};
use crate::guard::Guardrail;
use crate::partitions::{factorial, Partition};
use crate::permcore::{enumerate_group, group_elements, GroupMode, Permutation};
use crate::rational::{self, q, qi, Q};
use crate::spectral::{cayley_spectrum, stability_distance_bound, WeightedCayleySpec};

/// Largest degree accepted by [`pair_isomorphic`].
pub const ISOMORPHISM_MAX_DEGREE: usize = 6;

/// A finite set of permutations of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    n: usize,
    members: BTreeSet<Permutation>,
}

impl Family {
    pub fn new(n: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let members: BTreeSet<Permutation> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|p| p.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: n,
                right: bad.degree(),
            });
        }
        Ok(Family { n, members })
    }

    pub fn empty(n: usize) -> Self {
        Family {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.contains(p)
    }

    /// Members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Permutation> {
        &self.members
    }

    pub fn insert(&mut self, p: Permutation) -> Result<bool> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: p.degree(),
            });
        }
        Ok(self.members.insert(p))
    }

    pub fn all_even(&self) -> bool {
        self.members.iter().all(|p| p.is_even())
    }

    pub fn indicator(&self) -> Result<GroupFunction> {
        GroupFunction::indicator(self.n, &self.members)
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.members.iter())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<Permutation>::deserialize(d)?;
        let n = members.first().map_or(0, |p| p.degree());
        Family::new(n, members).map_err(serde::de::Error::custom)
    }
}

/// Every pair of members agrees on at least `t` points.
pub fn is_t_intersecting(f: &Family, t: usize) -> bool {
    let members: Vec<&Permutation> = f.members.iter().collect();
    (0..members.len()).into_par_iter().all(|i| {
        members[i + 1..]
            .iter()
            .all(|p| members[i].agreements_unchecked(p) >= t)
    })
}

/// Every `(σ, π) ∈ F × G` agrees on at least `t` points.
pub fn is_cross_t_intersecting(f: &Family, g: &Family, t: usize) -> Result<bool> {
    if f.n != g.n {
        return Err(Error::DegreeMismatch {
            left: f.n,
            right: g.n,
        });
    }
    let gs: Vec<&Permutation> = g.members.iter().collect();
    Ok(f
        .members
        .par_iter()
        .all(|s| gs.iter().all(|p| s.agreements_unchecked(p) >= t)))
}

/// The constraints `i_k ↦ j_k` of a coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CosetSpec {
    pairs: Vec<(usize, usize)>,
}

impl CosetSpec {
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        for &(i, j) in &pairs {
            if i == 0 || i > n || j == 0 || j > n {
                return Err(Error::InvalidCosetSpec(format!("pair ({i},{j}) outside [1,{n}]")));
            }
        }
        pairs.sort_unstable();
        let is: BTreeSet<usize> = pairs.iter().map(|p| p.0).collect();
        let js: BTreeSet<usize> = pairs.iter().map(|p| p.1).collect();
        if is.len() != pairs.len() || js.len() != pairs.len() {
            return Err(Error::InvalidCosetSpec(format!(
                "points and images must be distinct: {pairs:?}"
            )));
        }
        Ok(CosetSpec { pairs })
    }

    /// The pointwise stabilizer of `1..=t`.
    pub fn fixing(n: usize, t: usize) -> Result<Self> {
        Self::new(n, (1..=t).map(|i| (i, i)).collect())
    }

    /// Pairs sorted by source point.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    pub fn admits(&self, p: &Permutation) -> bool {
        self.pairs.iter().all(|&(i, j)| p.apply(i) == j)
    }
}

/// All permutations of degree `n` satisfying the spec, in lexicographic
/// order.
fn coset_members(n: usize, spec: &CosetSpec) -> Vec<Permutation> {
    let mut images = vec![u8::MAX; n];
    for &(i, j) in spec.pairs() {
        images[i - 1] = (j - 1) as u8;
    }
    let used: BTreeSet<u8> = images.iter().copied().filter(|&v| v != u8::MAX).collect();
    let free_points: Vec<usize> = (0..n).filter(|&i| images[i] == u8::MAX).collect();
    let mut free_values: Vec<u8> = (0..n as u8).filter(|v| !used.contains(v)).collect();
    let mut out = Vec::with_capacity(factorial(free_values.len()) as usize);
    loop {
        for (&pt, &v) in free_points.iter().zip(&free_values) {
            images[pt] = v;
        }
        out.push(Permutation::from_zero_based(images.clone()));
        if !next_permutation(&mut free_values) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn t_coset(n: usize, spec: &CosetSpec) -> Result<Family> {
    if let Some(&(i, j)) = spec.pairs().iter().find(|&&(i, j)| i > n || j > n) {
        return Err(Error::InvalidCosetSpec(format!("pair ({i},{j}) outside [1,{n}]")));
    }
    Family::new(n, coset_members(n, spec))
}

/// A spec of `t` agreement pairs shared by every member, smallest points
/// first; `None` if the common agreement set has fewer than `t` pairs or
/// `F` is empty.
pub fn contained_in_t_coset(f: &Family, t: usize) -> Option<CosetSpec> {
    let mut it = f.members.iter();
    let first = it.next()?;
    let mut common: Vec<usize> = (1..=f.n).collect();
    for p in it {
        common.retain(|&i| p.apply(i) == first.apply(i));
        if common.len() < t {
            return None;
        }
    }
    if common.len() < t {
        return None;
    }
    let pairs = common[..t].iter().map(|&i| (i, first.apply(i))).collect();
    Some(CosetSpec::new(f.n, pairs).expect("pairs of a permutation are valid"))
}

/// `{(i t+1) : i ∈ [t]}`, each composed with `extra` on the left.
fn transpositions_to(n: usize, t: usize, extra: &Permutation) -> Result<Vec<Permutation>> {
    (1..=t)
        .map(|i| Ok(extra.mul(&Permutation::transposition(n, i, t + 1)?)))
        .collect()
}

/// `{σ : σ fixes [t], σ(j) = τ(j) for some j > t+1}`.
fn fixing_and_meeting(n: usize, t: usize, tau: &Permutation) -> Result<Vec<Permutation>> {
    Ok(coset_members(n, &CosetSpec::fixing(n, t)?)
        .into_iter()
        .filter(|s| (t + 2..=n).any(|j| s.apply(j) == tau.apply(j)))
        .collect())
}

/// `{σ : σ(i)=i ∀i≤t, σ(j)=j for some j>t+1} ∪ {(i t+1) : i ∈ [t]}`.
pub fn build_d(n: usize, t: usize) -> Result<Family> {
    if n < t + 2 {
        return Err(Error::DegreeTooSmall { n, min: t + 2 });
    }
    let id = Permutation::identity(n);
    let mut members = fixing_and_meeting(n, t, &id)?;
    members.extend(transpositions_to(n, t, &id)?);
    Family::new(n, members)
}

/// Closed form `(n-t)! - d_{n-t} - d_{n-t-1} + t` for `|build_d(n, t)|`.
pub fn build_d_size(n: usize, t: usize) -> i128 {
    use crate::permcore::derangement_counts;
    factorial(n - t) as i128 - derangement_counts(n - t).d as i128
        - derangement_counts(n - t - 1).d as i128
        + t as i128
}

/// `{σ ∈ A_n : σ fixes [t], σ(j) = (n-1 n)(j) for some j > t+1}`
/// `∪ {(i t+1)(n-1 n) : i ∈ [t]}`.
pub fn build_b_alternating(n: usize, t: usize) -> Result<Family> {
    if n < t + 4 {
        return Err(Error::DegreeTooSmall { n, min: t + 4 });
    }
    let swap = Permutation::transposition(n, n - 1, n)?;
    let mut members: Vec<Permutation> = fixing_and_meeting(n, t, &swap)?
        .into_iter()
        .filter(|p| p.is_even())
        .collect();
    members.extend(transpositions_to(n, t, &swap)?);
    Family::new(n, members)
}

/// Closed form `(n-t)!/2 - o_{n-t} - o_{n-t-1} + t`.
pub fn build_b_size(n: usize, t: usize) -> i128 {
    use crate::permcore::derangement_counts;
    factorial(n - t) as i128 / 2
        - derangement_counts(n - t).o as i128
        - derangement_counts(n - t - 1).o as i128
        + t as i128
}

/// Checks the side conditions on `τ` for [`build_cross_pair_min`].
pub fn check_cross_tau(n: usize, t: usize, tau: &Permutation) -> Result<()> {
    if tau.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: tau.degree(),
        });
    }
    if tau.apply(1) == 1 {
        return Err(Error::TauConditions("τ must move 1".into()));
    }
    if t == 1 {
        let swap = Permutation::transposition(n, 1, 2)?;
        if tau.agreements_unchecked(&swap) == 0 {
            return Err(Error::TauConditions("τ must agree with (1 2) somewhere".into()));
        }
    } else {
        if let Some(i) = (2..=t).find(|&i| tau.apply(i) != i) {
            return Err(Error::TauConditions(format!("τ must fix {i}")));
        }
        let high = (t + 2..=n).filter(|&j| tau.apply(j) == j).count();
        if high < 2 {
            return Err(Error::TauConditions(format!(
                "τ must fix at least two points above {}",
                t + 1
            )));
        }
    }
    Ok(())
}

/// The pair `({σ fixes [t], meets τ above t+1} ∪ {(i t+1)},`
/// `{σ fixes [t], fixes a point above t+1} ∪ {(1 i)τ(1 i)})`.
pub fn build_cross_pair_min(n: usize, t: usize, tau: &Permutation) -> Result<(Family, Family)> {
    if n < t + 2 {
        return Err(Error::DegreeTooSmall { n, min: t + 2 });
    }
    check_cross_tau(n, t, tau)?;
    let id = Permutation::identity(n);
    let mut first = fixing_and_meeting(n, t, tau)?;
    first.extend(transpositions_to(n, t, &id)?);
    let mut second = fixing_and_meeting(n, t, &id)?;
    for i in 1..=t {
        let c = if i == 1 { id.clone() } else { Permutation::transposition(n, 1, i)? };
        second.push(c.mul(tau).mul(&c));
    }
    Ok((Family::new(n, first)?, Family::new(n, second)?))
}

/// `(1 t+1)`, which satisfies the side conditions whenever `n ≥ t+3`
/// (and `n ≥ 3` for `t = 1`); with it the first family equals
/// [`build_d`].
pub fn default_cross_tau(n: usize, t: usize) -> Result<Permutation> {
    let tau = Permutation::transposition(n, 1, t + 1)?;
    check_cross_tau(n, t, &tau)?;
    Ok(tau)
}

/// The pair `({σ fixes [t], fixes a point above t+1},`
/// `{σ fixes [t]} ∪ {(i t+1)})`.
pub fn build_cross_pair_prod(n: usize, t: usize) -> Result<(Family, Family)> {
    if n < t + 2 {
        return Err(Error::DegreeTooSmall { n, min: t + 2 });
    }
    let id = Permutation::identity(n);
    let first = fixing_and_meeting(n, t, &id)?;
    let mut second = coset_members(n, &CosetSpec::fixing(n, t)?);
    second.extend(transpositions_to(n, t, &id)?);
    Ok((Family::new(n, first)?, Family::new(n, second)?))
}

/// Closed forms `((n-t)! - d_{n-t} - d_{n-t-1}, (n-t)! + t)` for the
/// sizes of [`build_cross_pair_prod`].
pub fn build_cross_prod_sizes(n: usize, t: usize) -> (i128, i128) {
    let m = factorial(n - t) as i128;
    (build_d_size(n, t) - t as i128, m + t as i128)
}

/// `π F τ`.
pub fn double_translate(f: &Family, pi: &Permutation, tau: &Permutation) -> Result<Family> {
    for p in [pi, tau] {
        if p.degree() != f.n {
            return Err(Error::DegreeMismatch {
                left: f.n,
                right: p.degree(),
            });
        }
    }
    Family::new(f.n, f.members.iter().map(|s| pi.mul(s).mul(tau)))
}

/// A witness `(π, ρ)` with `A = π C ρ` and `B = π D ρ`, where
/// `p1 = (A, B)` and `p2 = (C, D)`.
pub fn pair_isomorphic(
    p1: (&Family, &Family),
    p2: (&Family, &Family),
) -> Result<Option<(Permutation, Permutation)>> {
    let (a, b) = p1;
    let (c, d) = p2;
    let n = a.n;
    if [b.n, c.n, d.n].iter().any(|&m| m != n) {
        return Err(Error::DegreeMismatch {
            left: n,
            right: [b.n, c.n, d.n].into_iter().find(|&m| m != n).unwrap(),
        });
    }
    if n > ISOMORPHISM_MAX_DEGREE {
        return Err(Error::GuardrailExceeded {
            n,
            max: ISOMORPHISM_MAX_DEGREE,
        });
    }
    if a.len() != c.len() || b.len() != d.len() {
        return Ok(None);
    }
    // anchor on the smaller side: π c0 ρ must land in its image family
    let (src, dst, other_src, other_dst) = if c.len() <= d.len() { (c, a, d, b) } else { (d, b, c, a) };
    let Some(anchor) = src.members.iter().next() else {
        // both anchors empty: any translate works if the other side matches
        let id = Permutation::identity(n);
        return Ok((other_src == other_dst).then(|| (id.clone(), id)));
    };
    let anchor_inv = anchor.inverse();
    let guard = Guardrail::new(ISOMORPHISM_MAX_DEGREE);
    for pi in enumerate_group(n, false, &guard)? {
        let pi_inv = pi.inverse();
        for target in dst.members.iter() {
            let rho = anchor_inv.mul(&pi_inv).mul(target);
            let maps = |from: &Family, to: &Family| from.members.iter().all(|s| to.contains(&pi.mul(s).mul(&rho)));
            if maps(src, dst) && maps(other_src, other_dst) {
                return Ok(Some((pi, rho)));
            }
        }
    }
    Ok(None)
}

/// A function `f(σ) = Σ_i b_{i,σ(i)}` given by an `n × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFunction {
    pub n: usize,
    #[serde(with = "matrix_serde")]
    pub entries: Vec<Vec<Q>>,
}

mod matrix_serde {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(rational::to_string).collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        rows.iter()
            .map(|r| r.iter().map(|v| rational::parse(v).map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

impl MatrixFunction {
    pub fn new(entries: Vec<Vec<Q>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSpec("matrix function must be square".into()));
        }
        Ok(MatrixFunction { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        MatrixFunction {
            n,
            entries: vec![vec![Q::zero(); n]; n],
        }
    }

    /// `b11 = b22 = 1`, `b12 = b21 = -1/2`, `b_ii = 0` for `i ≥ 3`, and 1
    /// everywhere else.
    pub fn w1_counterexample(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::DegreeTooSmall { n, min: 4 });
        }
        let mut entries = vec![vec![qi(1); n]; n];
        entries[0][1] = q(-1, 2);
        entries[1][0] = q(-1, 2);
        for (i, row) in entries.iter_mut().enumerate().skip(2) {
            row[i] = Q::zero();
        }
        Ok(MatrixFunction { n, entries })
    }

    pub fn eval(&self, sigma: &Permutation) -> Result<Q> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: sigma.degree(),
            });
        }
        Ok((1..=self.n)
            .map(|i| &self.entries[i - 1][sigma.apply(i) - 1])
            .sum())
    }
}

pub fn matrix_function_eval(m: &MatrixFunction, sigma: &Permutation) -> Result<Q> {
    m.eval(sigma)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct W1Report {
    pub n: usize,
    #[serde(with = "rational")]
    pub min_on_an: Q,
    pub argmin: Permutation,
    #[serde(with = "rational")]
    pub value_at_transposition: Q,
    pub nonnegative_on_an: bool,
}

impl W1Report {
    pub fn confirmed(&self) -> bool {
        self.nonnegative_on_an && self.value_at_transposition == qi(-1)
    }
}

/// Minimum of the counterexample matrix function over `A_n` and its value
/// at `(1 2)`.
pub fn verify_w1_counterexample(n: usize, guard: &Guardrail) -> Result<W1Report> {
    let m = MatrixFunction::w1_counterexample(n)?;
    let evens = group_elements(n, GroupMode::Alt, guard)?;
    let mut best: Option<(Q, Permutation)> = None;
    for s in evens {
        let v = m.eval(&s)?;
        if best.as_ref().is_none_or(|(b, _)| &v < b) {
            best = Some((v, s));
        }
    }
    let (min_on_an, argmin) = best.expect("A_n is non-empty");
    let value_at_transposition = m.eval(&Permutation::transposition(n, 1, 2)?)?;
    Ok(W1Report {
        n,
        nonnegative_on_an: !min_on_an.is_negative(),
        min_on_an,
        argmin,
        value_at_transposition,
    })
}

/// Exact comparison of a family's distance from the extremal eigenspaces
/// against the stability form of the Hoffman bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub n: usize,
    pub t: usize,
    pub size: usize,
    #[serde(with = "rational")]
    pub alpha: Q,
    /// Isotypic components of `U`: constants and the `λ_min`-eigenspace.
    pub u_components: Vec<Partition>,
    /// `||P_{U^⊥}(v_F)||²`.
    #[serde(with = "rational")]
    pub residual: Q,
    /// `||P_{V_t^⊥}(v_F)||²`; equals `residual` unless `U ⊋ V_t`.
    #[serde(with = "rational")]
    pub residual_v_t: Q,
    #[serde(with = "rational::opt")]
    pub bound: Option<Q>,
    pub t_intersecting: bool,
    pub holds: Option<bool>,
    pub note: Option<String>,
}

pub fn stability_report(
    f: &Family,
    t: usize,
    spec: &WeightedCayleySpec,
    projector: &Projector,
) -> Result<StabilityReport> {
    if spec.n != f.n || projector.n != f.n {
        return Err(Error::DegreeMismatch {
            left: f.n,
            right: spec.n,
        });
    }
    let spectrum = cayley_spectrum(spec);
    let n = f.n;
    let alpha = Q::new(f.len().into(), factorial(n).into());
    let mut u_components = vec![Partition::row(n)];
    u_components.extend(spectrum.min_partitions().into_iter().filter(|p| p.first() != n));
    let v = f.indicator()?;
    let residual = projector.residual_outside(&v, &u_components)?;
    let residual_v_t = projector.residual_norm_sq(&v, t)?;
    let t_intersecting = is_t_intersecting(f, t);
    let (bound, note) = match stability_distance_bound(&spectrum, &alpha) {
        Ok(b) => (Some(b), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let holds = match (&bound, t_intersecting) {
        (Some(b), true) => Some(&residual <= b),
        _ => None,
    };
    let note = note.or_else(|| (!t_intersecting).then(|| format!("family is not {t}-intersecting")));
    Ok(StabilityReport {
        n,
        t,
        size: f.len(),
        alpha,
        u_components,
        residual,
        residual_v_t,
        bound,
        t_intersecting,
        holds,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn intersection_predicates() {
        let f = Family::new(5, [perm(5, "()"), perm(5, "(1 2)")]).unwrap();
        assert!(is_t_intersecting(&f, 3));
        assert!(!is_t_intersecting(&f, 4));
        let g = Family::new(5, [perm(5, "()"), perm(5, "(1 2 3 4 5)")]).unwrap();
        assert!(!is_t_intersecting(&g, 1));
        let id = Family::new(4, [perm(4, "()")]).unwrap();
        let der = Family::new(4, [perm(4, "(1 2)(3 4)")]).unwrap();
        assert!(!is_cross_t_intersecting(&id, &der, 1).unwrap());
    }

    #[test]
    fn cosets() {
        let c = t_coset(5, &CosetSpec::new(5, vec![(1, 1)]).unwrap()).unwrap();
        assert_eq!(c.len(), 24);
        let c2 = t_coset(5, &CosetSpec::new(5, vec![(1, 2), (2, 1)]).unwrap()).unwrap();
        assert_eq!(c2.len(), 6);
        assert!(is_t_intersecting(&c2, 2));
        assert_eq!(
            contained_in_t_coset(&c2, 2).unwrap().pairs(),
            &[(1, 2), (2, 1)]
        );
        let single = t_coset(3, &CosetSpec::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap()).unwrap();
        assert_eq!(single.len(), 1);
        assert!(CosetSpec::new(4, vec![(1, 2), (3, 2)]).is_err());
        assert!(CosetSpec::new(4, vec![(1, 5)]).is_err());
    }

    #[test]
    fn family_d() {
        let d = build_d(5, 1).unwrap();
        assert_eq!(d.len(), 14);
        assert_eq!(build_d_size(5, 1), 14);
        assert_eq!(build_d_size(4, 1), 4);
        assert!(is_t_intersecting(&d, 1));
        assert!(contained_in_t_coset(&d, 1).is_none());
        assert!(build_d(3, 2).is_err());
    }

    #[test]
    fn family_b() {
        let b = build_b_alternating(7, 1).unwrap();
        assert_eq!(b.len(), 206);
        assert_eq!(build_b_size(7, 1), 206);
        assert!(b.all_even());
        assert!(build_b_alternating(4, 1).is_err());
    }

    #[test]
    fn cross_pairs() {
        let tau = perm(5, "(1 2)");
        let (f, g) = build_cross_pair_min(5, 1, &tau).unwrap();
        assert!(is_cross_t_intersecting(&f, &g, 1).unwrap());
        assert_eq!(f.len().min(g.len()) as i128, build_d_size(5, 1));
        let (d1, _) = build_cross_pair_min(5, 1, &perm(5, "(1 2)")).unwrap();
        assert_eq!(d1, build_d(5, 1).unwrap());
        assert!(build_cross_pair_min(5, 1, &perm(5, "(2 3)")).is_err());
        let (a, b) = build_cross_pair_prod(5, 1).unwrap();
        assert!(is_cross_t_intersecting(&a, &b, 1).unwrap());
        assert_eq!(a.len(), 24 - 9 - 2);
        assert_eq!(b.len(), 24 + 1);
    }

    #[test]
    fn translates_and_isomorphism() {
        let d = build_d(4, 1).unwrap();
        let swap = perm(4, "(1 2)");
        let id = Permutation::identity(4);
        assert_eq!(double_translate(&d, &id, &id).unwrap(), d);
        let moved = double_translate(&d, &swap, &id).unwrap();
        assert_eq!(moved.len(), d.len());
        let (pi, rho) = pair_isomorphic((&moved, &moved), (&d, &d)).unwrap().unwrap();
        assert_eq!(double_translate(&d, &pi, &rho).unwrap(), moved);
        let small = Family::new(4, [id.clone()]).unwrap();
        assert!(pair_isomorphic((&small, &d), (&d, &d)).unwrap().is_none());
    }

    #[test]
    fn w1_matrix() {
        let m = MatrixFunction::w1_counterexample(4).unwrap();
        assert_eq!(m.eval(&perm(4, "(1 2)")).unwrap(), qi(-1));
        assert_eq!(m.eval(&Permutation::identity(4)).unwrap(), qi(2));
        assert_eq!(MatrixFunction::zero(4).eval(&perm(4, "(1 3)")).unwrap(), qi(0));
        let g = Guardrail::default();
        for n in 4..=6 {
            assert!(verify_w1_counterexample(n, &g).unwrap().confirmed());
        }
        assert!(verify_w1_counterexample(3, &g).is_err());
    }

    #[test]
    fn stability_of_d5() {
        let g = Guardrail::default();
        let proj = Projector::new(5, &g).unwrap();
        let spec = WeightedCayleySpec::uniform_derangement(5).unwrap();
        let r = stability_report(&build_d(5, 1).unwrap(), 1, &spec, &proj).unwrap();
        assert!(r.residual.is_positive());
        assert_eq!(r.holds, Some(true));
        let coset = t_coset(5, &CosetSpec::fixing(5, 1).unwrap()).unwrap();
        let r = stability_report(&coset, 1, &spec, &proj).unwrap();
        assert!(r.residual.is_zero());
        assert_eq!(r.holds, Some(true));
    }

    #[test]
    fn family_json() {
        let f = Family::new(3, [perm(3, "(1 2)"), perm(3, "()")]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "[[1,2,3],[2,1,3]]");
        let back: Family = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
