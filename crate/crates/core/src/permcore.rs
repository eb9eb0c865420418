//! Permutations of `[n]` in one-line form, cycle structure, sign,
//! agreements, the i-fix operation, conjugacy classes and derangement
//! counts.
//!
//! Composition follows `(σπ)(x) = σ(π(x))`. Points are 1-indexed at the
//! public surface.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::guard::Guardrail;
use crate::partitions::{factorial, partitions_of, Partition};

/// Selects `S_n` or the alternating group `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum GroupMode {
    #[default]
    Sym,
    Alt,
}

impl GroupMode {
    pub fn order(self, n: usize) -> u128 {
        match self {
            GroupMode::Sym => factorial(n),
            GroupMode::Alt if n < 2 => 1,
            GroupMode::Alt => factorial(n) / 2,
        }
    }
}

impl std::str::FromStr for GroupMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" | "S" => Ok(GroupMode::Sym),
            "alt" | "A" => Ok(GroupMode::Alt),
            _ => Err(Error::Parse(format!("group must be sym or alt, got {s:?}"))),
        }
    }
}

/// A bijection of `{1..n}`; stored 0-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "degree {n} too large");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-indexed one-line form.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| x as usize == i)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    pub fn zero_based(&self) -> &[u8] {
        &self.images
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(n, &[vec![a, b]])
    }

    /// From disjoint or overlapping cycles, multiplied left to right as
    /// functions (`(1 2)(2 3)` applies `(2 3)` first).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut result = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u8> = (0..n as u8).collect();
            let mut seen = vec![false; n];
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(Error::PointOutOfRange { point: x, n });
                }
                if seen[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} repeated in cycle {cycle:?}"
                    )));
                }
                seen[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                images[x - 1] = (y - 1) as u8;
            }
            let c = Permutation::from_zero_based(images);
            result = c.mul(&result);
        }
        Ok(result)
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`; `"()"` or `"id"` is the
    /// identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "id" || s == "()" {
            return Ok(Permutation::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("stray text in {s:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &rest[open + 1..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {tok:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    /// Parses either cycle notation or a one-line list like `[2,1,3]`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let images: Vec<usize> =
                serde_json::from_str(t).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
            let p = Self::from_one_line(&images)?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: p.degree(),
                });
            }
            Ok(p)
        } else {
            Self::parse_cycles(n, t)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-indexed `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation::from_zero_based(inv)
    }

    /// `x ↦ self(other(x))`, without a degree check.
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self, other)?;
        Ok(self.mul(other))
    }

    /// Cycles of length at least two, each starting at its least point, in
    /// increasing order of that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    pub fn sign(&self) -> i8 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| x as usize == i)
            .count()
    }

    pub(crate) fn agreements_unchecked(&self, other: &Permutation) -> usize {
        self.images
            .iter()
            .zip(other.images.iter())
            .filter(|(a, b)| a == b)
            .count()
    }

    /// Number of points `i` with `σ(i) = π(i)`.
    pub fn agreements(&self, other: &Permutation) -> Result<usize> {
        check_degree(self, other)?;
        Ok(self.agreements_unchecked(other))
    }

    /// The i-fix `ρ_i`: fixes `i`, sends `ρ^{-1}(i)` to `ρ(i)`, and agrees
    /// with `ρ` elsewhere.
    pub fn i_fix(&self, i: usize) -> Result<Permutation> {
        let n = self.degree();
        if i == 0 || i > n {
            return Err(Error::PointOutOfRange { point: i, n });
        }
        let i0 = i - 1;
        let pre = self
            .images
            .iter()
            .position(|&x| x as usize == i0)
            .expect("bijection");
        let mut images = self.images.to_vec();
        images[pre] = self.images[i0];
        images[i0] = i0 as u8;
        Ok(Permutation::from_zero_based(images))
    }

    /// `ρ_{i_1,...,i_l} = (ρ_{i_1,...,i_{l-1}})_{i_l}`.
    pub fn i_fix_iter(&self, points: &[usize]) -> Result<Permutation> {
        points.iter().try_fold(self.clone(), |rho, &i| rho.i_fix(i))
    }

    /// Lexicographic rank of the one-line form among all of `S_n`.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let images = digits.iter().map(|&d| pool.remove(d)).collect();
        Permutation::from_zero_based(images)
    }
}

fn check_degree(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&images).map_err(serde::de::Error::custom)
    }
}

/// A conjugacy class of `S_n`, named by its cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: u128,
}

impl ConjugacyClass {
    pub fn of(cycle_type: Partition) -> Self {
        let size = factorial(cycle_type.size()) / cycle_type.centralizer_order();
        ConjugacyClass { cycle_type, size }
    }
}

/// One class per partition of `n`, in reverse-lexicographic order.
pub fn conjugacy_classes(n: usize) -> Vec<ConjugacyClass> {
    partitions_of(n).into_iter().map(ConjugacyClass::of).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerangementCounts {
    pub n: usize,
    /// all derangements
    pub d: u128,
    /// even derangements
    pub e: u128,
    /// odd derangements
    pub o: u128,
}

/// Derangement counts from the fixed-point-free conjugacy classes and their
/// signs. `n = 0` gives `d = e = 1`, `o = 0`.
pub fn derangement_counts(n: usize) -> DerangementCounts {
    let (mut e, mut o) = (0u128, 0u128);
    for lambda in partitions_of(n) {
        if lambda.ones() > 0 {
            continue;
        }
        let size = factorial(n) / lambda.centralizer_order();
        if lambda.sign() == 1 {
            e += size;
        } else {
            o += size;
        }
    }
    DerangementCounts { n, d: e + o, e, o }
}

/// Lexicographic walk over `S_n` (or `A_n`).
pub struct GroupIter {
    current: Option<Vec<u8>>,
    even_only: bool,
}

impl Iterator for GroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            let cur = self.current.as_mut()?;
            let out = Permutation::from_zero_based(cur.clone());
            if !next_permutation(cur) {
                self.current = None;
            }
            if !self.even_only || out.is_even() {
                return Some(out);
            }
        }
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every element of `S_n` (or `A_n` when `even_only`) exactly once, in
/// lexicographic one-line order.
pub fn enumerate_group(n: usize, even_only: bool, guard: &Guardrail) -> Result<GroupIter> {
    guard.check(n)?;
    Ok(GroupIter {
        current: Some((0..n as u8).collect()),
        even_only,
    })
}

pub fn group_elements(n: usize, mode: GroupMode, guard: &Guardrail) -> Result<Vec<Permutation>> {
    Ok(enumerate_group(n, mode == GroupMode::Alt, guard)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        let s = cyc(3, "(1 2 3)");
        assert_eq!(id.compose(&s).unwrap(), s);
        let t = cyc(3, "(1 2)");
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(s.compose(&cyc(3, "(1 3)")).unwrap(), cyc(3, "(2 3)"));
        assert!(s.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_types_and_signs() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(cyc(4, "(1 2)(3 4)").cycle_type().parts(), &[2, 2]);
        assert_eq!(cyc(5, "(1 2 3)").cycle_type().parts(), &[3, 1, 1]);
        assert_eq!(Permutation::identity(5).sign(), 1);
        assert_eq!(cyc(5, "(2 4)").sign(), -1);
        assert_eq!(cyc(4, "(1 2 3 4)").sign(), -1);
    }

    #[test]
    fn agreement_examples() {
        let id = Permutation::identity(5);
        assert_eq!(id.agreements(&id).unwrap(), 5);
        assert_eq!(id.agreements(&cyc(5, "(1 2)")).unwrap(), 3);
        assert_eq!(cyc(3, "(1 2 3)").agreements(&cyc(3, "(1 3 2)")).unwrap(), 0);
    }

    #[test]
    fn i_fix_examples() {
        assert!(Permutation::identity(4).i_fix(1).unwrap().is_identity());
        assert_eq!(cyc(3, "(1 2 3)").i_fix(1).unwrap(), cyc(3, "(2 3)"));
        assert!(cyc(3, "(1 2 3)").i_fix(4).is_err());
        let rho = cyc(6, "(1 4 2)(3 5 6)");
        assert_eq!(
            rho.i_fix_iter(&[2, 5]).unwrap(),
            rho.i_fix(2).unwrap().i_fix(5).unwrap()
        );
    }

    #[test]
    fn cycle_parsing_and_display() {
        let p = cyc(5, "(1 2)(3 4 5)");
        assert_eq!(p.one_line(), vec![2, 1, 4, 5, 3]);
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 1)").is_err());
        assert_eq!(Permutation::parse(3, "[2,1,3]").unwrap(), cyc(3, "(1 2)"));
    }

    #[test]
    fn rank_round_trip() {
        for (r, p) in enumerate_group(5, false, &Guardrail::default())
            .unwrap()
            .enumerate()
        {
            assert_eq!(p.rank(), r);
            assert_eq!(Permutation::unrank(5, r), p);
        }
    }

    #[test]
    fn derangements() {
        let d0 = derangement_counts(0);
        assert_eq!((d0.d, d0.e, d0.o), (1, 1, 0));
        let d4 = derangement_counts(4);
        assert_eq!((d4.d, d4.e, d4.o), (9, 3, 6));
        let d6 = derangement_counts(6);
        assert_eq!((d6.d, d6.e, d6.o), (265, 130, 135));
    }

    #[test]
    fn classes_of_s4() {
        let classes = conjugacy_classes(4);
        let size = |parts: &[usize]| {
            classes
                .iter()
                .find(|c| c.cycle_type.parts() == parts)
                .unwrap()
                .size
        };
        assert_eq!(size(&[2, 1, 1]), 6);
        assert_eq!(size(&[1, 1, 1, 1]), 1);
        assert_eq!(size(&[2, 2]) + size(&[4]), 9);
        assert_eq!(classes.iter().map(|c| c.size).sum::<u128>(), 24);
    }

    #[test]
    fn enumeration_counts() {
        let g = Guardrail::default();
        assert_eq!(enumerate_group(3, false, &g).unwrap().count(), 6);
        assert_eq!(enumerate_group(3, true, &g).unwrap().count(), 3);
        let a4: Vec<_> = enumerate_group(4, true, &g).unwrap().collect();
        assert_eq!(a4.len(), 12);
        assert!(a4.iter().all(|p| p.sign() == 1));
        assert!(enumerate_group(9, false, &g).is_err());
    }
}
