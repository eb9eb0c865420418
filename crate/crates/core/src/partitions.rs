//! Integer partitions, compositions, hook lengths, Kostka numbers and fat
//! partitions.
//!
//! Lists of partitions are always produced in reverse-lexicographic order,
//! `(n), (n-1,1), (n-2,2), (n-2,1,1), ...`, which is also the [`Ord`] order
//! of [`Partition`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n - t, 1^t)`.
    pub fn hook(n: usize, t: usize) -> Self {
        assert!(t <= n);
        let mut parts = vec![n - t];
        parts.extend(std::iter::repeat_n(1, t));
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `α_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Number of parts equal to 1; as a cycle type, the fixed points.
    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// First row of length at least `n - t`.
    pub fn is_fat(&self, t: usize) -> bool {
        self.first() + t >= self.size()
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i8 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Order of the centralizer of a permutation with this cycle type,
    /// `∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut z = 1u128;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.multiplicity(p);
            z *= (p as u128).pow(m as u32) * factorial(m);
            i += m;
        }
        z
    }
}

impl Ord for Partition {
    /// Reverse-lexicographic: `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,2,2]`, `(3,2,2)`, `3,2,2` or `3 2 2`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a partition as its display string `"[3,1]"`.
pub mod as_string {
    use super::Partition;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n (n-1) ... (n-t+1)`.
pub fn falling_factorial(n: usize, t: usize) -> u128 {
    (0..t).map(|k| (n - k) as u128).product()
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p(n)`, by the standard partition-count recurrence over the largest part.
pub fn partition_count(n: usize) -> u128 {
    // ways[k] counts partitions of k using parts processed so far
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            ways[k] += ways[k - part];
        }
    }
    ways[n]
}

/// A sequence of integers (negatives allowed) with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    terms: Vec<i64>,
}

impl Composition {
    pub fn new(terms: Vec<i64>) -> Self {
        Composition { terms }
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn sum(&self) -> i64 {
        self.terms.iter().sum()
    }
}

/// Sorts the terms into a partition; `None` when any term is negative,
/// which is how `ξ_λ = 0` is encoded.
pub fn normalize_composition(lambda: &Composition) -> Option<Partition> {
    if lambda.terms.iter().any(|&x| x < 0) {
        return None;
    }
    Some(Partition::from_unsorted(
        lambda.terms.iter().map(|&x| x as usize).collect(),
    ))
}

/// Hook lengths laid out on the Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookGrid {
    pub rows: Vec<Vec<usize>>,
}

impl HookGrid {
    pub fn product(&self) -> u128 {
        self.rows.iter().flatten().map(|&h| h as u128).product()
    }
}

pub fn hook_lengths(alpha: &Partition) -> HookGrid {
    let conj = alpha.conjugate();
    let rows = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| (len - j - 1) + (conj.parts()[j] - i - 1) + 1)
                .collect()
        })
        .collect();
    HookGrid { rows }
}

/// `f^α = n! / ∏ hooks`, the dimension of the Specht module.
pub fn dimension(alpha: &Partition) -> u128 {
    factorial(alpha.size()) / hook_lengths(alpha).product()
}

/// Kostka number `K_{α,β}`: semistandard α-tableaux of content β.
///
/// Fillings are built value by value: the cells holding value `k` form a
/// horizontal strip of `β_k` cells added to the shape of the smaller values.
pub fn kostka(alpha: &Partition, beta: &Partition) -> Result<u128> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            left: alpha.clone(),
            left_size: alpha.size(),
            right: beta.clone(),
            right_size: beta.size(),
        });
    }
    let shape = vec![0usize; alpha.len()];
    Ok(kostka_rec(alpha.parts(), beta.parts(), 0, &shape))
}

fn kostka_rec(target: &[usize], content: &[usize], k: usize, shape: &[usize]) -> u128 {
    if k == content.len() {
        return u128::from(shape == target);
    }
    let mut grown = shape.to_vec();
    let mut count = 0;
    strip_rec(target, content, k, shape, &mut grown, 0, content[k], &mut count);
    count
}

/// Distributes `left` cells of value `k+1` over rows `row..` of `grown`.
/// Row `i` may reach the old length of row `i-1` (horizontal strip) and
/// never exceeds the target shape.
#[allow(clippy::too_many_arguments)]
fn strip_rec(
    target: &[usize],
    content: &[usize],
    k: usize,
    old: &[usize],
    grown: &mut Vec<usize>,
    row: usize,
    left: usize,
    count: &mut u128,
) {
    if left == 0 {
        *count += kostka_rec(target, content, k + 1, grown);
        return;
    }
    if row == old.len() {
        return;
    }
    let cap = if row == 0 {
        target[0]
    } else {
        target[row].min(old[row - 1])
    };
    let room = cap.saturating_sub(old[row]).min(left);
    for add in (0..=room).rev() {
        grown[row] = old[row] + add;
        strip_rec(target, content, k, old, grown, row + 1, left - add, count);
    }
    grown[row] = old[row];
}

/// Partitions of `n` whose first row has length at least `n - t`.
pub fn fat_partitions(n: usize, t: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|a| a.is_fat(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reverse_lex_order() {
        let ps = partitions_of(4);
        let expected: Vec<Partition> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
            .iter()
            .map(|x| p(x))
            .collect();
        assert_eq!(ps, expected);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("[3,2,2]".parse::<Partition>().unwrap(), p(&[3, 2, 2]));
        assert_eq!(p(&[3, 2, 2]).to_string(), "[3,2,2]");
    }

    #[test]
    fn hooks_of_322() {
        let grid = hook_lengths(&p(&[3, 2, 2]));
        assert_eq!(grid.rows, vec![vec![5, 4, 1], vec![3, 2], vec![2, 1]]);
        assert_eq!(dimension(&p(&[3, 2, 2])), 21);
        assert_eq!(hook_lengths(&p(&[1, 1, 1])).rows, vec![vec![3], vec![2], vec![1]]);
        assert_eq!(hook_lengths(&Partition::row(5)).rows, vec![vec![5, 4, 3, 2, 1]]);
    }

    #[test]
    fn kostka_small_cases() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[3, 2])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])).unwrap(), 0);
        assert!(kostka(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn normalize() {
        let c = Composition::new(vec![3, 0, 1, 0]);
        assert_eq!(normalize_composition(&c), Some(p(&[3, 1])));
        assert_eq!(normalize_composition(&Composition::new(vec![5, -1, 0])), None);
    }

    #[test]
    fn fat_for_n10_t2() {
        let fat = fat_partitions(10, 2);
        assert_eq!(fat, vec![p(&[10]), p(&[9, 1]), p(&[8, 2]), p(&[8, 1, 1])]);
        assert!(fat.iter().all(|a| dimension(a) <= 90));
        assert_eq!(fat_partitions(6, 0), vec![Partition::row(6)]);
    }

    #[test]
    fn centralizers() {
        // (2,1,1) in S_4: 4!/|z| = 6 transpositions
        assert_eq!(factorial(4) / p(&[2, 1, 1]).centralizer_order(), 6);
        assert_eq!(factorial(4) / p(&[2, 2]).centralizer_order(), 3);
        assert_eq!(factorial(4) / p(&[4]).centralizer_order(), 6);
    }
}
