//! Brute-force reference computations. None of these share code with the
//! fast paths they check: tableaux and tabloids are enumerated explicitly,
//! spectra are read off dense weight matrices, and `V_t` is spanned by
//! explicit coset indicators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{ClassFunction, GroupFunction};
use crate::error::{Error, Result};
use crate::families::{t_coset, CosetSpec};
use crate::guard::Guardrail;
use crate::linalg::{self, Matrix};
use crate::partitions::{factorial, partitions_of, Partition};
use crate::permcore::{enumerate_group, group_elements, DerangementCounts, GroupMode, Permutation};
use crate::rational::{qi, Q};
use crate::spectral::{SpectrumTable, WeightedCayleySpec};

/// Every standard Young tableau of shape `alpha`, as rows of entries,
/// built by placing `1, 2, …, n` into addable cells.
pub fn standard_tableaux(alpha: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if rows.iter().zip(shape).all(|(r, &len)| r.len() == len) {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            let above_ok = i == 0 || rows[i - 1].len() > len;
            if len < shape[i] && above_ok {
                rows[i].push(next);
                rec(shape, rows, next + 1, out);
                rows[i].pop();
            }
        }
    }
    let shape = alpha.parts();
    let mut out = Vec::new();
    rec(shape, &mut vec![Vec::new(); shape.len()], 1, &mut out);
    out
}

/// A permutation of cycle type `lambda` whose cycles are consecutive runs.
pub fn class_representative(lambda: &Partition) -> Permutation {
    let n = lambda.size();
    let mut start = 1;
    let cycles: Vec<Vec<usize>> = lambda
        .parts()
        .iter()
        .map(|&len| {
            let c = (start..start + len).collect();
            start += len;
            c
        })
        .collect();
    Permutation::from_cycles(n, &cycles).expect("disjoint runs form a permutation")
}

/// Number of `beta`-tabloids fixed by a permutation of cycle type
/// `lambda`, by enumerating all row assignments.
pub fn tabloid_character(beta: &Partition, lambda: &Partition) -> u128 {
    fn rec(point: usize, rows: &mut [usize], room: &mut [usize], sigma: &Permutation) -> u128 {
        let n = rows.len();
        if point == n {
            let fixed = (0..n).all(|i| rows[sigma.apply(i + 1) - 1] == rows[i]);
            return fixed as u128;
        }
        let mut count = 0;
        for r in 0..room.len() {
            if room[r] > 0 {
                room[r] -= 1;
                rows[point] = r;
                count += rec(point + 1, rows, room, sigma);
                room[r] += 1;
            }
        }
        count
    }
    let sigma = class_representative(lambda);
    let mut rows = vec![0; beta.size()];
    let mut room = beta.parts().to_vec();
    rec(0, &mut rows, &mut room, &sigma)
}

/// Conjugacy class sizes by counting cycle types over the whole group.
pub fn class_sizes_brute(n: usize, guard: &Guardrail) -> Result<BTreeMap<Partition, u128>> {
    let mut sizes = BTreeMap::new();
    for p in enumerate_group(n, false, guard)? {
        *sizes.entry(p.cycle_type()).or_insert(0) += 1;
    }
    Ok(sizes)
}

/// Irreducible characters of `S_n` extracted from tabloid characters by
/// orthogonality: partitions are taken in reverse-lexicographic order and
/// `χ_β = ξ_β − Σ ⟨ξ_β, χ_α⟩ χ_α` over the earlier `α`.
pub fn characters_by_orthogonality(n: usize, guard: &Guardrail) -> Result<BTreeMap<Partition, ClassFunction>> {
    let sizes = class_sizes_brute(n, guard)?;
    let order = qi(factorial(n));
    let inner = |f: &ClassFunction, g: &ClassFunction| -> Q {
        sizes
            .iter()
            .map(|(l, &s)| qi(s) * f.value(l) * g.value(l))
            .sum::<Q>()
            / &order
    };
    let mut found: Vec<(Partition, ClassFunction)> = Vec::new();
    for beta in partitions_of(n) {
        let xi = ClassFunction::from_fn(n, |l| qi(tabloid_character(&beta, l)));
        let mut chi = xi.clone();
        for (_, prev) in &found {
            let c = inner(&xi, prev);
            if !c.is_zero() {
                for (l, v) in chi.values.iter_mut() {
                    *v -= &c * prev.value(l);
                }
            }
        }
        found.push((beta, chi));
    }
    Ok(found.into_iter().collect())
}

/// Derangement counts by enumerating `S_n`.
pub fn derangement_counts_brute(n: usize, guard: &Guardrail) -> Result<DerangementCounts> {
    let (mut e, mut o) = (0u128, 0u128);
    for p in enumerate_group(n, false, guard)? {
        if p.fixed_points() == 0 {
            if p.is_even() {
                e += 1;
            } else {
                o += 1;
            }
        }
    }
    Ok(DerangementCounts { n, d: e + o, e, o })
}

/// `D · A` for the weight matrix `A` of `spec` on the group, with `D` the
/// least common denominator of the weights.
pub fn scaled_weight_matrix(
    spec: &WeightedCayleySpec,
    group: GroupMode,
    guard: &Guardrail,
) -> Result<(Vec<Vec<i128>>, BigInt)> {
    let scale = spec
        .weights
        .values()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let to_int = |q: &Q| -> Result<i128> {
        (q * Q::from_integer(scale.clone()))
            .to_integer()
            .to_i128()
            .ok_or_else(|| Error::Overflow("scaled weight".into()))
    };
    let scaled: BTreeMap<Partition, i128> = spec
        .weights
        .iter()
        .map(|(k, w)| Ok((k.clone(), to_int(w)?)))
        .collect::<Result<_>>()?;
    let elements = group_elements(spec.n, group, guard)?;
    let inverses: Vec<Permutation> = elements.iter().map(Permutation::inverse).collect();
    let matrix = elements
        .iter()
        .enumerate()
        .map(|(i, _)| {
            elements
                .iter()
                .map(|pi| {
                    let diff = inverses[i].compose(pi).expect("equal degrees");
                    scaled.get(&diff.cycle_type()).copied().unwrap_or(0)
                })
                .collect()
        })
        .collect();
    Ok((matrix, scale))
}

fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Option<Vec<Vec<i128>>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].checked_add(x.checked_mul(b[k][j])?)?;
            }
        }
    }
    Some(out)
}

/// Outcome of comparing a claimed spectrum with the dense weight matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseSpectrumCheck {
    pub dimension: usize,
    pub distinct: usize,
    /// `Π (A − μ I) = 0` over the claimed distinct eigenvalues `μ`.
    pub annihilated: bool,
    /// `tr(A^k) = Σ mult · μ^k` for `k < distinct`.
    pub traces_match: bool,
}

impl DenseSpectrumCheck {
    pub fn passed(&self) -> bool {
        self.annihilated && self.traces_match
    }
}

/// Checks `claimed` against the dense matrix of `spec`. The matrix is
/// symmetric, so vanishing of `Π (A − μ I)` confines its eigenvalues to
/// the claimed set, and the power traces for `k < distinct` then fix the
/// multiplicities.
pub fn dense_spectrum_check(
    spec: &WeightedCayleySpec,
    group: GroupMode,
    claimed: &SpectrumTable,
    guard: &Guardrail,
) -> Result<DenseSpectrumCheck> {
    let (m, scale) = scaled_weight_matrix(spec, group, guard)?;
    let dim = m.len();
    let overflow = || Error::Overflow("dense spectrum check".into());
    let mut distinct: BTreeMap<i128, u128> = BTreeMap::new();
    for e in &claimed.entries {
        let scaled = &e.eigenvalue * Q::from_integer(scale.clone());
        if !scaled.is_integer() {
            // eigenvalues of an integer matrix that are rational are integers
            return Ok(DenseSpectrumCheck {
                dimension: dim,
                distinct: 0,
                annihilated: false,
                traces_match: false,
            });
        }
        let v = scaled.to_integer().to_i128().ok_or_else(overflow)?;
        *distinct.entry(v).or_insert(0) += e.multiplicity;
    }
    let mut product: Option<Vec<Vec<i128>>> = None;
    for &mu in distinct.keys() {
        let mut shifted = m.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] -= mu;
        }
        product = Some(match product {
            None => shifted,
            Some(p) => mat_mul(&p, &shifted).ok_or_else(overflow)?,
        });
    }
    let annihilated = product.is_some_and(|p| p.iter().all(|r| r.iter().all(|&x| x == 0)));

    let mut traces_match = distinct.values().sum::<u128>() == dim as u128;
    let mut power = m.clone();
    for k in 1..distinct.len() {
        if k > 1 {
            power = mat_mul(&power, &m).ok_or_else(overflow)?;
        }
        let trace: i128 = (0..dim).map(|i| power[i][i]).sum();
        let mut expected = 0i128;
        for (&mu, &mult) in &distinct {
            let term = mu.checked_pow(k as u32).and_then(|p| p.checked_mul(mult as i128));
            expected = expected.checked_add(term.ok_or_else(overflow)?).ok_or_else(overflow)?;
        }
        traces_match &= trace == expected;
    }
    Ok(DenseSpectrumCheck {
        dimension: dim,
        distinct: distinct.len(),
        annihilated,
        traces_match,
    })
}

/// Eigenvalues with multiplicities from the exact characteristic
/// polynomial of the dense weight matrix, restricted to the candidate
/// values; feasible for groups of order up to a few dozen.
pub fn charpoly_multiplicities(
    spec: &WeightedCayleySpec,
    group: GroupMode,
    candidates: &[Q],
    guard: &Guardrail,
) -> Result<Vec<(Q, usize)>> {
    let (m, scale) = scaled_weight_matrix(spec, group, guard)?;
    let scale = Q::from_integer(scale);
    let a: Matrix = m
        .iter()
        .map(|row| row.iter().map(|&x| qi(x) / &scale).collect())
        .collect();
    let poly = linalg::charpoly(&a);
    let mut seen: Vec<Q> = candidates.to_vec();
    seen.sort();
    seen.dedup();
    Ok(seen
        .into_iter()
        .map(|c| {
            let k = linalg::root_multiplicity(&poly, &c);
            (c, k)
        })
        .collect())
}

/// Orthogonal projection onto the span of all `t`-coset indicators, by
/// Gram–Schmidt over the cosets.
pub fn coset_span_projection(u: &GroupFunction, t: usize, guard: &Guardrail) -> Result<GroupFunction> {
    let n = u.n;
    guard.check(n)?;
    let mut basis: Vec<(Vec<Q>, Q)> = Vec::new();
    for spec in all_coset_specs(n, t)? {
        let coset = t_coset(n, &spec)?;
        let mut v = vec![Q::zero(); u.len()];
        for p in coset.iter() {
            v[p.rank()] = Q::one();
        }
        for (b, norm) in &basis {
            let c = linalg::dot(&v, b) / norm;
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        let norm = linalg::dot(&v, &v);
        if !norm.is_zero() {
            basis.push((v, norm));
        }
    }
    let mut out = vec![Q::zero(); u.len()];
    for (b, norm) in &basis {
        let c = linalg::dot(&u.values, b) / norm;
        if !c.is_zero() {
            for (x, y) in out.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
    }
    Ok(GroupFunction { n, values: out })
}

/// Every spec `{(i_k, j_k)}` with distinct `i`'s and distinct `j`'s.
pub fn all_coset_specs(n: usize, t: usize) -> Result<Vec<CosetSpec>> {
    fn rec(n: usize, t: usize, from: usize, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if pairs.len() == t {
            out.push(pairs.clone());
            return;
        }
        for i in from..=n {
            for j in 1..=n {
                if pairs.iter().all(|&(_, b)| b != j) {
                    pairs.push((i, j));
                    rec(n, t, i + 1, pairs, out);
                    pairs.pop();
                }
            }
        }
    }
    let mut raw = Vec::new();
    rec(n, t, 1, &mut Vec::new(), &mut raw);
    raw.into_iter().map(|p| CosetSpec::new(n, p)).collect()
}

/// `max |x|` over a slice, for reporting.
pub fn max_abs(values: &[Q]) -> Q {
    values.iter().map(|v| v.abs()).max().unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::CharacterTable;
    use crate::partitions::dimension;
    use crate::rational::q;
    use crate::spectral::cayley_spectrum;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tableaux_of_small_shapes() {
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[3, 2, 2])).len(), 21);
        assert_eq!(standard_tableaux(&p(&[2, 2])), vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]]);
    }

    #[test]
    fn tabloid_counts() {
        // (n-1,1)-tabloids are fixed exactly by the fixed points
        assert_eq!(tabloid_character(&p(&[3, 1]), &p(&[2, 1, 1])), 2);
        assert_eq!(tabloid_character(&p(&[2, 2]), &p(&[1, 1, 1, 1])), 6);
        assert_eq!(tabloid_character(&p(&[2, 2]), &p(&[2, 2])), 2);
    }

    #[test]
    fn orthogonality_extraction_matches_table() {
        let g = Guardrail::default();
        for n in 1..=5 {
            let table = CharacterTable::new(n);
            for (alpha, chi) in characters_by_orthogonality(n, &g).unwrap() {
                assert_eq!(chi, table.character(&alpha), "{alpha}");
                assert_eq!(chi.value(&Partition::column(n)), &qi(dimension(&alpha)));
            }
        }
    }

    #[test]
    fn brute_derangements() {
        let g = Guardrail::default();
        let d = derangement_counts_brute(4, &g).unwrap();
        assert_eq!((d.d, d.e, d.o), (9, 3, 6));
    }

    #[test]
    fn dense_check_on_derangement_graph() {
        let g = Guardrail::default();
        let spec = WeightedCayleySpec::uniform_derangement(4).unwrap();
        let table = cayley_spectrum(&spec);
        assert!(dense_spectrum_check(&spec, GroupMode::Sym, &table, &g).unwrap().passed());
        let mut wrong = table.clone();
        wrong.entries[2].eigenvalue = q(2, 9);
        assert!(!dense_spectrum_check(&spec, GroupMode::Sym, &wrong, &g).unwrap().passed());
    }

    #[test]
    fn charpoly_on_s4() {
        let g = Guardrail::default();
        let spec = WeightedCayleySpec::uniform_derangement(4).unwrap();
        let mults = charpoly_multiplicities(&spec, GroupMode::Sym, &[qi(1), q(-1, 3), q(1, 3), q(1, 9)], &g).unwrap();
        assert_eq!(mults, vec![(q(-1, 3), 10), (q(1, 9), 9), (q(1, 3), 4), (qi(1), 1)]);
    }

    #[test]
    fn coset_count() {
        assert_eq!(all_coset_specs(4, 1).unwrap().len(), 16);
        assert_eq!(all_coset_specs(4, 2).unwrap().len(), 72);
    }
}
