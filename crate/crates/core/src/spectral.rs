//! Spectra of weighted conjugacy-class Cayley graphs on `S_n` and `A_n`.
//!
//! A weight `w_C` on each conjugacy class `C` defines the matrix
//! `A_{σ,π} = w_{class(σ^{-1}π)}`. The class sums are central, so `A` acts
//! on each isotypic component `V_α` as the scalar
//! `λ_α = (1/f^α) Σ_C w_C |C| χ_α(C)` with multiplicity `(f^α)²`.
//!
//! All weights are per-permutation, not per-class totals.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::partitions::{dimension, factorial, falling_factorial, fat_partitions, partitions_of, Partition};
use crate::permcore::{derangement_counts, group_elements, GroupMode, Permutation};
use crate::guard::Guardrail;
use crate::rational::{self, qi, Q};

/// Cap on simplex pivots in [`solve_weights`].
pub const PIVOT_LIMIT: usize = 100_000;

/// `ω_{n,t} = -1 / (n(n-1)...(n-t+1) - 1)`.
pub fn omega(n: usize, t: usize) -> Result<Q> {
    if t < 1 || t >= n {
        return Err(Error::TOutOfRange { n, t });
    }
    Ok(-Q::new(1.into(), (falling_factorial(n, t) as i128 - 1).into()))
}

/// A validated class weighting: every weighted class has fewer than `t`
/// fixed points (so the identity is never weighted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCayleySpec {
    pub n: usize,
    pub t: usize,
    pub weights: BTreeMap<Partition, Q>,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    n: usize,
    t: usize,
    weights: BTreeMap<String, String>,
}

impl Serialize for WeightedCayleySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpecRepr {
            n: self.n,
            t: self.t,
            weights: self
                .weights
                .iter()
                .map(|(p, w)| (p.to_string(), rational::to_string(w)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedCayleySpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SpecRepr::deserialize(d)?;
        let mut weights = BTreeMap::new();
        for (k, v) in repr.weights {
            let p: Partition = k.parse().map_err(serde::de::Error::custom)?;
            let w = rational::parse(&v).map_err(serde::de::Error::custom)?;
            weights.insert(p, w);
        }
        WeightedCayleySpec::new(repr.n, repr.t, weights).map_err(serde::de::Error::custom)
    }
}

impl WeightedCayleySpec {
    pub fn new(n: usize, t: usize, weights: BTreeMap<Partition, Q>) -> Result<Self> {
        if t < 1 || t > n {
            return Err(Error::TOutOfRange { n, t });
        }
        for (class, w) in &weights {
            if class.size() != n {
                return Err(Error::InvalidSpec(format!(
                    "class {class} is not a cycle type of degree {n}"
                )));
            }
            if w.is_zero() {
                continue;
            }
            if class.ones() == n {
                return Err(Error::InvalidSpec("the identity class cannot carry weight".into()));
            }
            if class.ones() >= t {
                return Err(Error::InvalidSpec(format!(
                    "class {class} has {} fixed points, need fewer than t = {t}",
                    class.ones()
                )));
            }
        }
        let weights = weights.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        Ok(WeightedCayleySpec { n, t, weights })
    }

    /// Weight `1/d_n` on every derangement.
    pub fn uniform_derangement(n: usize) -> Result<Self> {
        let d = derangement_counts(n).d;
        if n < 2 {
            return Err(Error::DegreeTooSmall { n, min: 2 });
        }
        let w = Q::new(1.into(), d.into());
        let weights = partitions_of(n)
            .into_iter()
            .filter(|p| p.ones() == 0)
            .map(|p| (p, w.clone()))
            .collect();
        Self::new(n, 1, weights)
    }

    /// Weight `1/e_n` on every even derangement.
    pub fn uniform_even_derangement(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegreeTooSmall { n, min: 3 });
        }
        let e = derangement_counts(n).e;
        let w = Q::new(1.into(), e.into());
        let weights = partitions_of(n)
            .into_iter()
            .filter(|p| p.ones() == 0 && p.sign() == 1)
            .map(|p| (p, w.clone()))
            .collect();
        Self::new(n, 1, weights)
    }

    pub fn weight(&self, class: &Partition) -> Q {
        self.weights.get(class).cloned().unwrap_or_else(Q::zero)
    }

    /// Weight of the edge `(σ, π)`.
    pub fn edge_weight(&self, sigma: &Permutation, pi: &Permutation) -> Q {
        self.weight(&sigma.inverse().mul(pi).cycle_type())
    }

    pub fn is_even(&self) -> bool {
        self.weights.keys().all(|p| p.sign() == 1)
    }

    /// `Σ_C w_C |C|`, the common row sum.
    pub fn row_sum(&self) -> Q {
        self.weights
            .iter()
            .map(|(p, w)| w * qi(factorial(self.n) / p.centralizer_order()))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(with = "crate::partitions::as_string")]
    pub partition: Partition,
    #[serde(with = "rational")]
    pub eigenvalue: Q,
    pub multiplicity: u128,
}

/// Eigenvalues indexed by partition, in canonical order. In `A_n` mode each
/// conjugate pair `{α, α'}` appears once, under the earlier partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub n: usize,
    pub group: GroupMode,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    /// Number of vertices `N`.
    pub fn order(&self) -> u128 {
        self.group.order(self.n)
    }

    pub fn eigenvalue(&self, p: &Partition) -> Option<&Q> {
        self.entries.iter().find(|e| &e.partition == p).map(|e| &e.eigenvalue)
    }

    pub fn total_multiplicity(&self) -> u128 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// `λ_1`, the eigenvalue on constants (the row sum).
    pub fn lambda_1(&self) -> &Q {
        &self.entries[0].eigenvalue
    }

    pub fn lambda_max(&self) -> &Q {
        self.entries.iter().map(|e| &e.eigenvalue).max().expect("non-empty table")
    }

    pub fn lambda_min(&self) -> &Q {
        self.entries.iter().map(|e| &e.eigenvalue).min().expect("non-empty table")
    }

    /// Largest eigenvalue off the constants; `None` for `n ≤ 1`.
    pub fn lambda_2(&self) -> Option<&Q> {
        self.entries[1..].iter().map(|e| &e.eigenvalue).max()
    }

    /// Most negative eigenvalue different from `λ_min`, or zero if none.
    pub fn lambda_m(&self) -> Q {
        let min = self.lambda_min();
        self.entries
            .iter()
            .map(|e| &e.eigenvalue)
            .filter(|v| *v != min && v.is_negative())
            .min()
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// Partitions whose eigenvalue is `λ_min`, in canonical order.
    pub fn min_partitions(&self) -> Vec<Partition> {
        let min = self.lambda_min();
        self.entries
            .iter()
            .filter(|e| &e.eigenvalue == min)
            .map(|e| e.partition.clone())
            .collect()
    }

    /// `Σ mult · λ`, the trace of the weight matrix.
    pub fn trace(&self) -> Q {
        self.entries
            .iter()
            .map(|e| qi(e.multiplicity) * &e.eigenvalue)
            .sum()
    }
}

/// Spectrum of an arbitrary (unvalidated) class weighting of `S_n`.
pub fn class_spectrum(n: usize, weights: &BTreeMap<Partition, Q>) -> SpectrumTable {
    let table = CharacterTable::new(n);
    class_spectrum_with(&table, weights)
}

fn class_spectrum_with(table: &CharacterTable, weights: &BTreeMap<Partition, Q>) -> SpectrumTable {
    let n = table.n;
    let entries = table
        .irreps
        .par_iter()
        .enumerate()
        .map(|(a, alpha)| {
            let f = dimension(alpha);
            let sum: Q = weights
                .iter()
                .map(|(class, w)| {
                    let c = table.index_of(class);
                    w * qi(table.class_sizes[c] as i128 * table.value(a, c))
                })
                .sum();
            SpectrumEntry {
                partition: alpha.clone(),
                eigenvalue: sum / qi(f),
                multiplicity: f * f,
            }
        })
        .collect();
    SpectrumTable {
        n,
        group: GroupMode::Sym,
        entries,
    }
}

pub fn cayley_spectrum(spec: &WeightedCayleySpec) -> SpectrumTable {
    class_spectrum(spec.n, &spec.weights)
}

/// Spectrum of the subgraph induced on `A_n` by an even-class weighting.
///
/// `S^α` and `S^{α'}` restrict to the same `A_n`-module, so the pair shares
/// one entry with multiplicity `(f^α)²`; a self-conjugate `α` splits into
/// two halves with the same eigenvalue and total multiplicity `(f^α)²/2`.
pub fn an_restriction(spec: &WeightedCayleySpec) -> Result<SpectrumTable> {
    if let Some(odd) = spec.weights.keys().find(|p| p.sign() != 1) {
        return Err(Error::OddClassInSupport(odd.clone()));
    }
    let full = cayley_spectrum(spec);
    let entries = full
        .entries
        .into_iter()
        .filter(|e| e.partition <= e.partition.conjugate())
        .map(|e| {
            let self_conj = e.partition == e.partition.conjugate();
            SpectrumEntry {
                multiplicity: if self_conj { e.multiplicity / 2 } else { e.multiplicity },
                ..e
            }
        })
        .collect();
    Ok(SpectrumTable {
        n: spec.n,
        group: GroupMode::Alt,
        entries,
    })
}

/// Spectrum for either group mode.
pub fn spectrum_for(spec: &WeightedCayleySpec, group: GroupMode) -> Result<SpectrumTable> {
    match group {
        GroupMode::Sym => Ok(cayley_spectrum(spec)),
        GroupMode::Alt => an_restriction(spec),
    }
}

/// Result of checking that `φ(σ) = (1 2)σ` carries the `A_n` subgraph onto
/// the subgraph on the odd coset with identical edge weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiCheck {
    pub n: usize,
    pub pairs_checked: u128,
    pub bijective: bool,
    pub weights_preserved: bool,
}

impl PhiCheck {
    pub fn passed(&self) -> bool {
        self.bijective && self.weights_preserved
    }
}

pub fn phi_isomorphism_check(spec: &WeightedCayleySpec, guard: &Guardrail) -> Result<PhiCheck> {
    if let Some(odd) = spec.weights.keys().find(|p| p.sign() != 1) {
        return Err(Error::OddClassInSupport(odd.clone()));
    }
    let n = spec.n;
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let evens = group_elements(n, GroupMode::Alt, guard)?;
    let swap = Permutation::transposition(n, 1, 2)?;
    let images: Vec<Permutation> = evens.iter().map(|s| swap.mul(s)).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = sorted.len() == evens.len() && images.iter().all(|p| !p.is_even());
    let weights_preserved = (0..evens.len()).into_par_iter().all(|i| {
        (0..evens.len()).all(|j| {
            spec.edge_weight(&evens[i], &evens[j]) == spec.edge_weight(&images[i], &images[j])
        })
    });
    Ok(PhiCheck {
        n,
        pairs_checked: (evens.len() * evens.len()) as u128,
        bijective,
        weights_preserved,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoffmanReport {
    pub n: usize,
    pub group: GroupMode,
    pub order: u128,
    #[serde(with = "rational")]
    pub bound: Q,
    #[serde(with = "rational")]
    pub lambda_max: Q,
    #[serde(with = "rational")]
    pub lambda_min: Q,
    #[serde(rename = "lambda_M", with = "rational")]
    pub lambda_m: Q,
    #[serde(with = "rational")]
    pub nu: Q,
    pub achieving_partitions: Vec<Partition>,
}

fn check_hoffman_hypotheses(spectrum: &SpectrumTable) -> Result<()> {
    if !spectrum.lambda_1().is_positive() {
        return Err(Error::VacuousBound(format!(
            "row-sum eigenvalue {} is not positive",
            rational::to_string(spectrum.lambda_1())
        )));
    }
    if !spectrum.lambda_min().is_negative() {
        return Err(Error::VacuousBound(format!(
            "minimum eigenvalue {} is not negative",
            rational::to_string(spectrum.lambda_min())
        )));
    }
    Ok(())
}

/// `|X| ≤ |λ_min| N / (λ_1 + |λ_min|)`, with `λ_1` the row-sum eigenvalue
/// reported as `lambda_max`.
pub fn hoffman_bound(spectrum: &SpectrumTable) -> Result<HoffmanReport> {
    check_hoffman_hypotheses(spectrum)?;
    let l1 = spectrum.lambda_1().clone();
    let lmin = spectrum.lambda_min().abs();
    let order = spectrum.order();
    let bound = &lmin * qi(order) / (&l1 + &lmin);
    let nu = cross_nu(spectrum);
    Ok(HoffmanReport {
        n: spectrum.n,
        group: spectrum.group,
        order,
        bound,
        lambda_max: l1,
        lambda_min: spectrum.lambda_min().clone(),
        lambda_m: spectrum.lambda_m(),
        nu,
        achieving_partitions: spectrum.min_partitions(),
    })
}

fn cross_nu(spectrum: &SpectrumTable) -> Q {
    let l2 = spectrum.lambda_2().map(|v| v.abs()).unwrap_or_else(Q::zero);
    l2.max(spectrum.lambda_min().abs())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossBound {
    #[serde(with = "rational")]
    pub bound: Q,
    #[serde(with = "rational")]
    pub nu: Q,
    /// `ν = λ_1`: the bound collapses to `(N/2)²`.
    pub degenerate: bool,
}

/// `|X||Y| ≤ (ν N / (λ_1 + ν))²` with `ν = max(|λ_2|, |λ_N|)`.
pub fn cross_bound(spectrum: &SpectrumTable) -> Result<CrossBound> {
    check_hoffman_hypotheses(spectrum)?;
    let nu = cross_nu(spectrum);
    let l1 = spectrum.lambda_1();
    let root = &nu * qi(spectrum.order()) / (l1 + &nu);
    Ok(CrossBound {
        degenerate: &nu == l1,
        bound: &root * &root,
        nu,
    })
}

/// Upper bound on `D²`, the squared distance from `v_X` to constants plus
/// the `λ_min`-eigenspace, for an independent set of density `alpha`.
pub fn stability_distance_bound(spectrum: &SpectrumTable, alpha: &Q) -> Result<Q> {
    if alpha.is_negative() || alpha > &Q::one() {
        return Err(Error::InvalidSpec(format!(
            "density {} outside [0, 1]",
            rational::to_string(alpha)
        )));
    }
    let ln = spectrum.lambda_min().abs();
    let lm = spectrum.lambda_m().abs();
    if ln == lm {
        return Err(Error::DegenerateDenominator);
    }
    let l1 = spectrum.lambda_1();
    let numerator = (Q::one() - alpha) * &ln - l1 * alpha;
    Ok(numerator / (ln - lm) * alpha)
}

/// Outcome of [`solve_weights`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSolution {
    /// `strict` is false when some non-fat eigenvalue touches `ω_{n,t}` or
    /// 1; the Hoffman bound is unaffected.
    Feasible { spec: WeightedCayleySpec, strict: bool },
    /// No admissible weighting found; `partition` is the first eigenvalue
    /// that fails at the best candidate and `exhaustive` is false when the
    /// simplex hit [`PIVOT_LIMIT`].
    Infeasible {
        partition: Partition,
        eigenvalue: Q,
        exhaustive: bool,
    },
}

/// Finds class weights with `λ_(n) = 1`, `λ_α = ω_{n,t}` on every other fat
/// `α`, and every non-fat eigenvalue inside `[ω_{n,t}, 1]`, strictly inside
/// whenever the solution space allows it.
///
/// Tries the minimum-norm solution of the linear system first, then the
/// vertices of the polytope that maximizes the smallest interior slack.
pub fn solve_weights(n: usize, t: usize) -> Result<WeightSolution> {
    let w = omega(n, t)?;
    let table = CharacterTable::new(n);
    let classes: Vec<Partition> = partitions_of(n).into_iter().filter(|p| p.ones() < t).collect();
    let fat = fat_partitions(n, t);
    let nonfat: Vec<Partition> = partitions_of(n).into_iter().filter(|p| !p.is_fat(t)).collect();

    // λ_α as a linear form in the class weights
    let form = |alpha: &Partition| -> Vec<Q> {
        let a = table.index_of(alpha);
        let f = qi(dimension(alpha));
        classes
            .iter()
            .map(|c| {
                let ci = table.index_of(c);
                qi(table.class_sizes[ci] as i128 * table.value(a, ci)) / &f
            })
            .collect()
    };
    let target = |alpha: &Partition| if alpha.first() == n { Q::one() } else { w.clone() };

    let a: Matrix = fat.iter().map(form).collect();
    let b: Vec<Q> = fat.iter().map(target).collect();
    let Some(sol) = linalg::solve_affine(&a, &b) else {
        return Ok(inconsistent_row(&fat, &a, &b));
    };
    let x0 = sol.min_norm();
    let rows: Matrix = nonfat.iter().map(form).collect();
    let eig = |x: &[Q]| -> Vec<Q> { rows.iter().map(|r| linalg::dot(r, x)).collect() };

    let strict = |vals: &[Q]| vals.iter().all(|v| v > &w && v < &Q::one());
    let weak = |vals: &[Q]| vals.iter().all(|v| v >= &w && v <= &Q::one());
    let vals0 = eig(&x0);
    if strict(&vals0) {
        return feasible(n, t, &classes, &x0, true);
    }
    let k = sol.kernel.len();
    let (best, exhaustive) = if k == 0 {
        (None, true)
    } else {
        slack_vertex_search(&rows, &sol.kernel, &vals0, &w)
    };
    if let Some((s, z)) = &best {
        if s.is_positive() {
            return feasible(n, t, &classes, &sol.point(&x0, z), true);
        }
    }
    if weak(&vals0) {
        return feasible(n, t, &classes, &x0, false);
    }
    match best {
        Some((s, z)) if !s.is_negative() => feasible(n, t, &classes, &sol.point(&x0, &z), false),
        Some((_, z)) => Ok(first_violation(&nonfat, &eig(&sol.point(&x0, &z)), &w, exhaustive)),
        None => Ok(first_violation(&nonfat, &vals0, &w, exhaustive)),
    }
}

/// Maximizes `s` subject to `ω + s ≤ λ_α(x0 + N z) ≤ 1 - s` over non-fat
/// `α` by an exact simplex walk over the vertices of the constraint
/// polytope. Returns the optimal `(s, z)` and whether the walk finished
/// within [`PIVOT_LIMIT`] pivots.
fn slack_vertex_search(rows: &Matrix, kernel: &[Vec<Q>], vals0: &[Q], w: &Q) -> (Option<(Q, Vec<Q>)>, bool) {
    let k = kernel.len();
    // constraints  g·z + s ≤ h  with z, s free
    let mut g: Vec<Vec<Q>> = Vec::with_capacity(2 * rows.len());
    let mut h: Vec<Q> = Vec::with_capacity(2 * rows.len());
    for (r, v0) in rows.iter().zip(vals0) {
        let slope: Vec<Q> = kernel.iter().map(|kv| linalg::dot(r, kv)).collect();
        g.push(slope.iter().map(|v| -v.clone()).collect());
        h.push(v0 - w);
        g.push(slope);
        h.push(Q::one() - v0);
    }
    if g.is_empty() {
        return (None, true);
    }
    // shift s = s0 + s' so the all-slack basis is feasible
    let s0 = h.iter().min().cloned().unwrap();
    let b: Vec<Q> = h.iter().map(|v| v - &s0).collect();
    // columns: z+ (k), z- (k), s'+, s'-, slacks (m)
    let m = g.len();
    let nv = 2 * k + 2;
    let mut tab: Matrix = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(nv + m + 1);
            row.extend(g[i].iter().cloned());
            row.extend(g[i].iter().map(|v| -v.clone()));
            row.push(Q::one());
            row.push(-Q::one());
            row.extend((0..m).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut obj = vec![Q::zero(); nv + m + 1];
    obj[2 * k] = -Q::one();
    obj[2 * k + 1] = Q::one();
    let mut basis: Vec<usize> = (nv..nv + m).collect();
    let rhs = nv + m;

    let mut finished = false;
    for _ in 0..PIVOT_LIMIT {
        // Bland: lowest-index improving column, lowest-index leaving variable
        let Some(col) = (0..rhs).find(|&j| obj[j].is_negative()) else {
            finished = true;
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if tab[i][col].is_positive() {
                let ratio = &tab[i][rhs] / &tab[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            // unbounded cannot happen: s ≤ (1 - ω)/2
            return (None, false);
        };
        let piv = tab[row][col].clone();
        for v in tab[row].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = tab[row].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        if !obj[col].is_zero() {
            let f = obj[col].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basis[row] = col;
    }
    let mut x = vec![Q::zero(); nv];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nv {
            x[bv] = tab[i][rhs].clone();
        }
    }
    let z: Vec<Q> = (0..k).map(|j| &x[j] - &x[k + j]).collect();
    let s = s0 + &x[2 * k] - &x[2 * k + 1];
    (Some((s, z)), finished)
}

fn feasible(n: usize, t: usize, classes: &[Partition], x: &[Q], strict: bool) -> Result<WeightSolution> {
    Ok(WeightSolution::Feasible {
        spec: to_spec(n, t, classes, x)?,
        strict,
    })
}

fn to_spec(n: usize, t: usize, classes: &[Partition], x: &[Q]) -> Result<WeightedCayleySpec> {
    WeightedCayleySpec::new(n, t, classes.iter().cloned().zip(x.iter().cloned()).collect())
}

fn first_violation(nonfat: &[Partition], vals: &[Q], w: &Q, exhaustive: bool) -> WeightSolution {
    let i = vals
        .iter()
        .position(|v| v <= w || v >= &Q::one())
        .unwrap_or(0);
    WeightSolution::Infeasible {
        partition: nonfat[i].clone(),
        eigenvalue: vals[i].clone(),
        exhaustive,
    }
}

fn inconsistent_row(fat: &[Partition], a: &Matrix, b: &[Q]) -> WeightSolution {
    for k in 1..=fat.len() {
        if linalg::solve_affine(&a[..k].to_vec(), &b[..k]).is_none() {
            let forced = linalg::solve_affine(&a[..k - 1].to_vec(), &b[..k - 1])
                .map(|s| linalg::dot(&a[k - 1], &s.min_norm()))
                .unwrap_or_else(Q::zero);
            return WeightSolution::Infeasible {
                partition: fat[k - 1].clone(),
                eigenvalue: forced,
                exhaustive: true,
            };
        }
    }
    unreachable!("full system was inconsistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(5, 2).unwrap(), q(-1, 19));
        assert_eq!(omega(4, 1).unwrap(), q(-1, 3));
        assert_eq!(omega(9, 1).unwrap(), q(-1, 8));
        assert!(omega(4, 4).is_err());
        assert!(omega(4, 0).is_err());
    }

    #[test]
    fn derangement_spectrum_n4() {
        let spec = WeightedCayleySpec::uniform_derangement(4).unwrap();
        let s = cayley_spectrum(&spec);
        assert_eq!(s.eigenvalue(&p(&[4])).unwrap(), &qi(1));
        assert_eq!(s.eigenvalue(&p(&[3, 1])).unwrap(), &q(-1, 3));
        assert_eq!(s.eigenvalue(&p(&[2, 2])).unwrap(), &q(1, 3));
        assert_eq!(s.eigenvalue(&p(&[2, 1, 1])).unwrap(), &q(1, 9));
        assert_eq!(s.eigenvalue(&p(&[1, 1, 1, 1])).unwrap(), &q(-1, 3));
        assert_eq!(s.trace(), qi(0));
        assert_eq!(s.total_multiplicity(), 24);
        let h = hoffman_bound(&s).unwrap();
        assert_eq!(h.bound, qi(6));
        assert_eq!(h.achieving_partitions, vec![p(&[3, 1]), p(&[1, 1, 1, 1])]);
        let c = cross_bound(&s).unwrap();
        assert_eq!(c.bound, qi(36));
        assert!(!c.degenerate);
    }

    #[test]
    fn identity_weighting_is_flat() {
        let mut w = BTreeMap::new();
        w.insert(p(&[1, 1, 1, 1]), qi(1));
        let s = class_spectrum(4, &w);
        assert!(s.entries.iter().all(|e| e.eigenvalue == qi(1)));
        assert!(WeightedCayleySpec::new(4, 1, w).is_err());
    }

    #[test]
    fn fixed_point_rule() {
        let mut w = BTreeMap::new();
        w.insert(p(&[2, 1, 1]), qi(1));
        assert!(WeightedCayleySpec::new(4, 2, w.clone()).is_err());
        assert!(WeightedCayleySpec::new(4, 3, w).is_ok());
    }

    #[test]
    fn hoffman_arithmetic() {
        let table = |min: Q| SpectrumTable {
            n: 5,
            group: GroupMode::Sym,
            entries: vec![
                SpectrumEntry { partition: p(&[5]), eigenvalue: qi(1), multiplicity: 1 },
                SpectrumEntry { partition: p(&[4, 1]), eigenvalue: min, multiplicity: 119 },
            ],
        };
        assert_eq!(hoffman_bound(&table(q(-1, 19))).unwrap().bound, qi(6));
        assert_eq!(hoffman_bound(&table(qi(-1))).unwrap().bound, qi(60));
        assert!(hoffman_bound(&table(qi(0))).is_err());
        let c = cross_bound(&table(qi(-1))).unwrap();
        assert!(c.degenerate);
        assert_eq!(c.bound, qi(3600));
    }

    #[test]
    fn stability_bound_edges() {
        let s = cayley_spectrum(&WeightedCayleySpec::uniform_derangement(5).unwrap());
        assert_eq!(stability_distance_bound(&s, &qi(0)).unwrap(), qi(0));
        let ln = s.lambda_min().abs();
        let ratio = &ln / (s.lambda_1() + &ln);
        assert_eq!(stability_distance_bound(&s, &ratio).unwrap(), qi(0));
    }

    #[test]
    fn solve_weights_small_cases() {
        match solve_weights(5, 2).unwrap() {
            WeightSolution::Feasible { spec, strict } => {
                assert!(!strict, "λ_(2,1,1,1) sits exactly at ω");
                let s = cayley_spectrum(&spec);
                for alpha in [p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1])] {
                    assert_eq!(s.eigenvalue(&alpha).unwrap(), &q(-1, 19));
                }
                assert_eq!(hoffman_bound(&s).unwrap().bound, qi(6));
            }
            other => panic!("expected a solution, got {other:?}"),
        }
        // the sign character of S_3 is forced to eigenvalue 1
        assert!(matches!(
            solve_weights(3, 1).unwrap(),
            WeightSolution::Feasible { strict: false, .. }
        ));
        assert!(matches!(solve_weights(4, 3).unwrap(), WeightSolution::Feasible { .. }));
        match solve_weights(4, 1).unwrap() {
            WeightSolution::Feasible { spec, strict } => {
                assert!(strict);
                let s = cayley_spectrum(&spec);
                assert_eq!(s.lambda_min(), &q(-1, 3));
                assert_eq!(s.min_partitions(), vec![p(&[3, 1])]);
            }
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn alternating_restriction() {
        let mut w = BTreeMap::new();
        w.insert(p(&[2, 2]), qi(1));
        let spec = WeightedCayleySpec::new(4, 1, w).unwrap();
        let s = an_restriction(&spec).unwrap();
        assert_eq!(s.total_multiplicity(), 12);
        assert_eq!(s.lambda_1(), &qi(3));
        assert_eq!(s.lambda_max(), &qi(3));
        let phi = phi_isomorphism_check(&spec, &Guardrail::default()).unwrap();
        assert!(phi.passed());
        let odd = WeightedCayleySpec::uniform_derangement(4).unwrap();
        assert!(an_restriction(&odd).is_err());
    }
}
