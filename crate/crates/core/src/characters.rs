//! Characters of `S_n` and character-based isotypic projections.
//!
//! Permutation characters `ξ_β` count fixed β-tabloids, evaluated by
//! assigning whole cycles to rows. Irreducible characters come from the
//! determinantal formula `χ_α = Σ_π ε(π) ξ_{α - id + π}`. Projections onto
//! the isotypic subspaces `V_α` of `Q[S_n]` use
//! `P_α(u)_σ = (f^α / n!) Σ_π u(π) χ_α(π σ^{-1})`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::guard::Guardrail;
use crate::partitions::{
    dimension, factorial, fat_partitions, kostka, normalize_composition, partitions_of,
    Composition, Partition,
};
use crate::permcore::{enumerate_group, Permutation};
use crate::rational::{self, qi, Q};

/// Number of β-tabloids fixed by a permutation of cycle type `lambda`.
///
/// A tabloid is fixed exactly when every cycle lies inside one row, so this
/// counts the maps from cycles to rows that fill row `i` with `β_i` points.
pub fn permutation_character(beta: &Partition, lambda: &Partition) -> Result<u128> {
    if beta.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: beta.clone(),
            left_size: beta.size(),
            right: lambda.clone(),
            right_size: lambda.size(),
        });
    }
    Ok(xi(beta, lambda))
}

fn xi(beta: &Partition, lambda: &Partition) -> u128 {
    let mut memo = HashMap::new();
    let mut caps = beta.parts().to_vec();
    assign_cycles(lambda.parts(), 0, &mut caps, &mut memo)
}

fn assign_cycles(
    cycles: &[usize],
    idx: usize,
    caps: &mut Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), u128>,
) -> u128 {
    if idx == cycles.len() {
        return u128::from(caps.iter().all(|&c| c == 0));
    }
    let key = (idx, caps.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = cycles[idx];
    let mut total = 0;
    for r in 0..caps.len() {
        if caps[r] >= len {
            caps[r] -= len;
            total += assign_cycles(cycles, idx + 1, caps, memo);
            caps[r] += len;
        }
    }
    memo.insert(key, total);
    total
}

/// `ξ_λ` for a composition: zero if any term is negative, otherwise the
/// permutation character of the sorted terms.
pub fn composition_character(lambda: &Composition, cycle_type: &Partition) -> u128 {
    match normalize_composition(lambda) {
        Some(beta) => xi(&beta, cycle_type),
        None => 0,
    }
}

/// The signed terms `(β, Σ ε(π))` of the determinantal formula, summing
/// over permutations `π` of `{1..m}` (fixing everything above `m`).
///
/// `m` must be at least the number of parts of `α` for the expansion to be
/// the full formula; terms with a negative entry are dropped.
pub fn determinantal_expansion(alpha: &Partition, m: usize) -> Vec<(Partition, i64)> {
    let n = alpha.size();
    let m = m.min(n.max(alpha.len()));
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut used = vec![false; m + 1];
    let mut terms = vec![0i64; m];
    expand_rec(alpha, m, 1, 0, &mut used, &mut terms, &mut acc);
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn expand_rec(
    alpha: &Partition,
    m: usize,
    i: usize,
    inversions: usize,
    used: &mut Vec<bool>,
    terms: &mut Vec<i64>,
    acc: &mut BTreeMap<Partition, i64>,
) {
    if i > m {
        let mut all = terms.clone();
        // positions above m keep α_i - i + i = α_i
        all.extend((m + 1..=alpha.len().max(m)).map(|j| alpha.part(j) as i64));
        let beta = normalize_composition(&Composition::new(all)).expect("pruned negatives");
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        *acc.entry(beta).or_insert(0) += sign;
        return;
    }
    let a_i = alpha.part(i) as i64;
    for v in 1..=m {
        if used[v] {
            continue;
        }
        let term = a_i - i as i64 + v as i64;
        if term < 0 {
            continue;
        }
        let inv = (v + 1..=m).filter(|&w| used[w]).count();
        used[v] = true;
        terms[i - 1] = term;
        expand_rec(alpha, m, i + 1, inversions + inv, used, terms, acc);
        used[v] = false;
    }
}

/// A rational value on each conjugacy class of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Q) -> Self {
        let values = partitions_of(n).into_iter().map(|l| {
            let v = f(&l);
            (l, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn value(&self, cycle_type: &Partition) -> &Q {
        &self.values[cycle_type]
    }

    /// `⟨f, g⟩ = (1/n!) Σ_λ |C_λ| f(λ) g(λ)`.
    pub fn inner(&self, other: &ClassFunction) -> Q {
        let total: Q = self
            .values
            .iter()
            .map(|(l, v)| {
                let size = factorial(self.n) / l.centralizer_order();
                qi(size) * v * &other.values[l]
            })
            .sum();
        total / qi(factorial(self.n))
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (k, v) in &self.values {
            map.serialize_entry(&k.to_string(), &rational::to_string(v))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            let part: Partition = k.parse().map_err(serde::de::Error::custom)?;
            let val = rational::parse(&v).map_err(serde::de::Error::custom)?;
            values.insert(part, val);
        }
        let n = values.keys().next().map(|p| p.size()).unwrap_or(0);
        if values.keys().any(|p| p.size() != n) {
            return Err(serde::de::Error::custom("mixed degrees in class function"));
        }
        Ok(ClassFunction { n, values })
    }
}

/// `χ_α` via the determinantal formula.
pub fn irreducible_character(alpha: &Partition) -> ClassFunction {
    let n = alpha.size();
    let expansion = determinantal_expansion(alpha, alpha.len());
    ClassFunction::from_fn(n, |lambda| {
        let v: i128 = expansion
            .iter()
            .map(|(beta, c)| *c as i128 * xi(beta, lambda) as i128)
            .sum();
        qi(v)
    })
}

/// Young's rule: the constituents `(α, K_{α,β})` of `M^β`, checked
/// pointwise against `ξ_β = Σ K_{α,β} χ_α` before returning.
pub fn young_rule(beta: &Partition) -> Result<Vec<(Partition, u128)>> {
    let n = beta.size();
    let table = CharacterTable::new(n);
    let mut out = Vec::new();
    for alpha in partitions_of(n) {
        let k = kostka(&alpha, beta)?;
        if k > 0 {
            out.push((alpha, k));
        }
    }
    for (li, lambda) in table.classes.iter().enumerate() {
        let lhs = xi(beta, lambda) as i128;
        let rhs: i128 = out
            .iter()
            .map(|(alpha, k)| *k as i128 * table.value(table.index_of(alpha), li))
            .sum();
        if lhs != rhs {
            return Err(Error::Internal(format!(
                "Young's rule fails for beta = {beta} on class {lambda}: {lhs} != {rhs}"
            )));
        }
    }
    Ok(out)
}

/// The full integer character table of `S_n`, rows and columns in
/// reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub irreps: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<u128>,
    values: Vec<Vec<i128>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let parts = partitions_of(n);
        let xi_table: HashMap<(Partition, Partition), u128> = parts
            .par_iter()
            .flat_map_iter(|b| {
                parts
                    .iter()
                    .map(move |l| ((b.clone(), l.clone()), xi(b, l)))
            })
            .collect();
        let values: Vec<Vec<i128>> = parts
            .par_iter()
            .map(|alpha| {
                let expansion = determinantal_expansion(alpha, alpha.len());
                parts
                    .iter()
                    .map(|lambda| {
                        expansion
                            .iter()
                            .map(|(beta, c)| {
                                *c as i128 * xi_table[&(beta.clone(), lambda.clone())] as i128
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let class_sizes = parts
            .iter()
            .map(|l| factorial(n) / l.centralizer_order())
            .collect();
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable {
            n,
            irreps: parts.clone(),
            classes: parts,
            class_sizes,
            values,
            index,
        }
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// `χ_{irreps[a]}(classes[c])`.
    pub fn value(&self, a: usize, c: usize) -> i128 {
        self.values[a][c]
    }

    pub fn row(&self, a: usize) -> &[i128] {
        &self.values[a]
    }

    pub fn character(&self, alpha: &Partition) -> ClassFunction {
        let a = self.index_of(alpha);
        ClassFunction {
            n: self.n,
            values: self
                .classes
                .iter()
                .enumerate()
                .map(|(c, l)| (l.clone(), qi(self.values[a][c])))
                .collect(),
        }
    }

    /// `Σ_λ |C_λ| χ_a(λ) χ_b(λ)`; equals `n! δ_ab`.
    pub fn orthogonality_sum(&self, a: usize, b: usize) -> i128 {
        self.class_sizes
            .iter()
            .zip(self.values[a].iter().zip(self.values[b].iter()))
            .map(|(&s, (&x, &y))| s as i128 * x * y)
            .sum()
    }
}

/// A rational function on `S_n`, dense over lexicographic ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFunction {
    pub n: usize,
    #[serde(with = "rational::vec")]
    pub values: Vec<Q>,
}

impl GroupFunction {
    pub fn zero(n: usize) -> Self {
        GroupFunction {
            n,
            values: vec![Q::zero(); factorial(n) as usize],
        }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        GroupFunction {
            n,
            values: vec![c; factorial(n) as usize],
        }
    }

    /// Characteristic vector of a set of permutations of degree `n`.
    pub fn indicator<'a>(n: usize, members: impl IntoIterator<Item = &'a Permutation>) -> Result<Self> {
        let mut f = Self::zero(n);
        for p in members {
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: p.degree(),
                });
            }
            f.values[p.rank()] = Q::from_integer(1.into());
        }
        Ok(f)
    }

    /// Sparse constructor: unspecified permutations take the value zero.
    pub fn from_sparse(n: usize, entries: impl IntoIterator<Item = (Permutation, Q)>) -> Result<Self> {
        let mut f = Self::zero(n);
        for (p, v) in entries {
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: p.degree(),
                });
            }
            f.values[p.rank()] = v;
        }
        Ok(f)
    }

    pub fn get(&self, p: &Permutation) -> &Q {
        &self.values[p.rank()]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sub(&self, other: &GroupFunction) -> GroupFunction {
        GroupFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &GroupFunction) -> GroupFunction {
        GroupFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `⟨x, y⟩ = (1/N) Σ x_i y_i`.
    pub fn inner(&self, other: &GroupFunction) -> Q {
        let s: Q = self
            .values
            .iter()
            .zip(&other.values)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum();
        s / qi(self.values.len())
    }

    pub fn norm_sq(&self) -> Q {
        self.inner(self)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// Precomputed data for projecting functions on `S_n` onto sums of
/// isotypic components.
pub struct Projector {
    pub n: usize,
    pub table: CharacterTable,
    elements: Vec<Permutation>,
    class_of: Vec<usize>,
}

impl Projector {
    pub fn new(n: usize, guard: &Guardrail) -> Result<Self> {
        let elements: Vec<Permutation> = enumerate_group(n, false, guard)?.collect();
        let table = CharacterTable::new(n);
        let class_of = elements
            .par_iter()
            .map(|p| table.index_of(&p.cycle_type()))
            .collect();
        Ok(Projector {
            n,
            table,
            elements,
            class_of,
        })
    }

    fn check(&self, u: &GroupFunction) -> Result<()> {
        if u.n != self.n || u.values.len() != self.elements.len() {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: u.n,
            });
        }
        Ok(())
    }

    /// Projection of `u` onto `⊕_{α ∈ components} V_α`.
    pub fn project(&self, u: &GroupFunction, components: &[Partition]) -> Result<GroupFunction> {
        self.check(u)?;
        let nfact = qi(factorial(self.n));
        // kernel(λ) = Σ_α f^α χ_α(λ) / n!
        let mut kernel = vec![Q::zero(); self.table.classes.len()];
        for alpha in components {
            if alpha.size() != self.n {
                return Err(Error::SizeMismatch {
                    left: alpha.clone(),
                    left_size: alpha.size(),
                    right: Partition::row(self.n),
                    right_size: self.n,
                });
            }
            let a = self.table.index_of(alpha);
            let f = qi(dimension(alpha));
            for (c, k) in kernel.iter_mut().enumerate() {
                *k += &f * qi(self.table.value(a, c));
            }
        }
        for k in kernel.iter_mut() {
            *k /= &nfact;
        }
        let support: Vec<(&Permutation, &Q)> = self
            .elements
            .iter()
            .zip(&u.values)
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let values = self
            .elements
            .par_iter()
            .map(|sigma| {
                let sigma_inv = sigma.inverse();
                let mut class_sums = vec![Q::zero(); kernel.len()];
                for (pi, val) in &support {
                    let rho = pi.mul(&sigma_inv);
                    class_sums[self.class_of[rho.rank()]] += *val;
                }
                class_sums
                    .iter()
                    .zip(&kernel)
                    .filter(|(s, _)| !s.is_zero())
                    .map(|(s, k)| s * k)
                    .sum()
            })
            .collect();
        Ok(GroupFunction { n: self.n, values })
    }

    pub fn isotypic_projection(&self, u: &GroupFunction, alpha: &Partition) -> Result<GroupFunction> {
        self.project(u, std::slice::from_ref(alpha))
    }

    pub fn project_v_t(&self, u: &GroupFunction, t: usize) -> Result<GroupFunction> {
        self.project(u, &fat_partitions(self.n, t))
    }

    /// `||u - P(u)||²` for the projection onto the given components.
    pub fn residual_outside(&self, u: &GroupFunction, components: &[Partition]) -> Result<Q> {
        let p = self.project(u, components)?;
        Ok(u.sub(&p).norm_sq())
    }

    pub fn residual_norm_sq(&self, u: &GroupFunction, t: usize) -> Result<Q> {
        self.residual_outside(u, &fat_partitions(self.n, t))
    }
}

pub fn isotypic_projection(u: &GroupFunction, alpha: &Partition, guard: &Guardrail) -> Result<GroupFunction> {
    Projector::new(u.n, guard)?.isotypic_projection(u, alpha)
}

pub fn project_v_t(u: &GroupFunction, t: usize, guard: &Guardrail) -> Result<GroupFunction> {
    Projector::new(u.n, guard)?.project_v_t(u, t)
}

pub fn residual_norm_sq(u: &GroupFunction, t: usize, guard: &Guardrail) -> Result<Q> {
    Projector::new(u.n, guard)?.residual_norm_sq(u, t)
}

/// Largest absolute character value; handy for sanity reports.
pub fn max_abs(f: &ClassFunction) -> Q {
    f.values
        .values()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn xi_examples() {
        assert_eq!(permutation_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        for lambda in partitions_of(6) {
            assert_eq!(permutation_character(&Partition::row(6), &lambda).unwrap(), 1);
            assert_eq!(
                permutation_character(&p(&[5, 1]), &lambda).unwrap(),
                lambda.ones() as u128
            );
        }
        assert!(permutation_character(&p(&[2, 1]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn chi_22_on_s4() {
        let chi = irreducible_character(&p(&[2, 2]));
        let got: Vec<Q> = [&[1, 1, 1, 1][..], &[2, 1, 1], &[2, 2], &[3, 1], &[4]]
            .iter()
            .map(|l| chi.value(&p(l)).clone())
            .collect();
        assert_eq!(got, vec![qi(2), qi(0), qi(2), qi(-1), qi(0)]);
    }

    #[test]
    fn standard_character_is_xi_minus_one() {
        for n in 2..=7 {
            let chi = irreducible_character(&Partition::hook(n, 1));
            for (lambda, v) in &chi.values {
                assert_eq!(*v, qi(lambda.ones() as i64 - 1));
            }
        }
    }

    #[test]
    fn young_rule_examples() {
        assert_eq!(
            young_rule(&p(&[4, 1])).unwrap(),
            vec![(p(&[5]), 1), (p(&[4, 1]), 1)]
        );
        assert_eq!(young_rule(&p(&[4])).unwrap(), vec![(p(&[4]), 1)]);
        assert_eq!(
            young_rule(&p(&[2, 2])).unwrap(),
            vec![(p(&[4]), 1), (p(&[3, 1]), 1), (p(&[2, 2]), 1)]
        );
    }

    #[test]
    fn fat_expansion_lives_in_small_symmetric_group() {
        // for fat α the full sum collapses onto S_{t+1}
        let alpha = p(&[6, 2, 1]);
        assert_eq!(
            determinantal_expansion(&alpha, 9),
            determinantal_expansion(&alpha, 3)
        );
    }

    #[test]
    fn projection_of_constant() {
        let g = Guardrail::default();
        let proj = Projector::new(4, &g).unwrap();
        let u = GroupFunction::constant(4, qi(3));
        assert_eq!(proj.isotypic_projection(&u, &Partition::row(4)).unwrap(), u);
        assert!(proj.isotypic_projection(&u, &p(&[3, 1])).unwrap().is_zero());
        assert_eq!(proj.project_v_t(&u, 1).unwrap(), u);
    }

    #[test]
    fn projection_of_identity_indicator() {
        let g = Guardrail::default();
        let proj = Projector::new(4, &g).unwrap();
        let id = Permutation::identity(4);
        let u = GroupFunction::indicator(4, [&id]).unwrap();
        let pu = proj.project_v_t(&u, 1).unwrap();
        // Σ_{fat α} (f^α)² / n! = (1 + 9) / 24
        assert_eq!(*pu.get(&id), Q::new(10.into(), 24.into()));
        let residual = proj.residual_norm_sq(&u, 1).unwrap();
        assert_eq!(u.norm_sq(), Q::new(1.into(), 24.into()));
        assert_eq!(residual + pu.norm_sq(), u.norm_sq());
    }

    #[test]
    fn class_function_json() {
        let chi = irreducible_character(&p(&[2, 1]));
        let json = serde_json::to_string(&chi).unwrap();
        assert_eq!(json, r#"{"[3]":"-1","[2,1]":"0","[1,1,1]":"2"}"#);
        let back: ClassFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, chi);
    }
}
