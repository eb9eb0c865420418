//! Neighborhoods in the transposition graph and the Maurey isoperimetric
//! lower bound `|N_h(X)| ≥ (1 - e^{-2(h-h0)²/(n-1)}) n!`,
//! `h0 = √((n-1)/2 · ln(1/γ))`, `γ = |X|/n!`.

use std::collections::VecDeque;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::interval;
use crate::partitions::factorial;
use crate::permcore::Permutation;
use crate::rational::{self, qi, Q};

/// Largest degree for neighborhood exploration.
pub const MAUREY_MAX_DEGREE: usize = 6;

/// `|N_h(X)|` for every `h` from 0 to `n-1`, by multi-source breadth-first
/// search over right multiplication by transpositions.
pub fn neighborhood_profile(x: &Family) -> Result<Vec<u128>> {
    let n = x.degree();
    if n > MAUREY_MAX_DEGREE {
        return Err(Error::GuardrailExceeded {
            n,
            max: MAUREY_MAX_DEGREE,
        });
    }
    let total = factorial(n) as usize;
    let mut dist = vec![u8::MAX; total];
    let mut queue = VecDeque::new();
    for p in x.iter() {
        let r = p.rank();
        if dist[r] == u8::MAX {
            dist[r] = 0;
            queue.push_back(p.clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        let d = dist[p.rank()];
        let images = p.zero_based();
        for a in 0..n {
            for b in a + 1..n {
                let mut next = images.to_vec();
                next.swap(a, b);
                let q = Permutation::from_zero_based(next);
                let r = q.rank();
                if dist[r] == u8::MAX {
                    dist[r] = d + 1;
                    queue.push_back(q);
                }
            }
        }
    }
    let mut counts = vec![0u128; n.max(1)];
    for d in dist.into_iter().filter(|&d| d != u8::MAX) {
        counts[d as usize] += 1;
    }
    let mut acc = 0;
    for c in counts.iter_mut() {
        acc += *c;
        *c = acc;
    }
    Ok(counts)
}

/// `|N_h(X)|`; every permutation is within `n-1` transpositions of any
/// other, so large `h` give `n!` for non-empty `X`.
pub fn transposition_neighborhood(x: &Family, h: usize) -> Result<u128> {
    let profile = neighborhood_profile(x)?;
    Ok(profile[h.min(profile.len() - 1)])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaureyRow {
    pub h: usize,
    pub exact: u128,
    /// Rigorous upper bound on the Maurey lower bound at this `h`.
    #[serde(with = "rational")]
    pub bound_upper: Q,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaureyReport {
    pub n: usize,
    pub size: usize,
    #[serde(with = "rational")]
    pub gamma: Q,
    #[serde(with = "rational")]
    pub h0_lower: Q,
    pub rows: Vec<MaureyRow>,
}

impl MaureyReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Compares exact neighborhood sizes with the Maurey bound for every
/// integer `h` in `[⌈h0⌉, n-1]`; for `h ≥ n-1` the neighborhood is all of
/// `S_n` and the bound is below `n!`.
///
/// `h0` is replaced by a lower bound, which only enlarges the bound being
/// beaten, so `holds` is a rigorous statement.
pub fn maurey_check(x: &Family) -> Result<MaureyReport> {
    let n = x.degree();
    if x.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let profile = neighborhood_profile(x)?;
    let total = factorial(n);
    let gamma = Q::new(x.len().into(), total.into());
    let log_lo = interval::ln_lower(&gamma.recip());
    let h0_sq_lo = log_lo * Q::new((n - 1).into(), 2.into());
    let h0_lower = interval::sqrt_lower(&h0_sq_lo);
    let start = h0_lower.ceil().to_integer();
    let start: usize = start.try_into().unwrap_or(usize::MAX);
    let mut rows = Vec::new();
    for (h, &exact) in profile.iter().enumerate().take(n).skip(start) {
        let gap = qi(h) - &h0_lower;
        let x_hi = qi(2) * &gap * &gap / qi(n - 1);
        let e_lo = if x_hi.is_zero() { Q::one() } else { interval::exp_neg_lower(&x_hi) };
        let bound_upper = (Q::one() - e_lo) * qi(total);
        rows.push(MaureyRow {
            h,
            exact,
            holds: qi(exact) >= bound_upper,
            bound_upper,
        });
    }
    Ok(MaureyReport {
        n,
        size: x.len(),
        gamma,
        h0_lower,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_neighborhoods() {
        let x = Family::new(4, [Permutation::identity(4)]).unwrap();
        assert_eq!(transposition_neighborhood(&x, 0).unwrap(), 1);
        assert_eq!(transposition_neighborhood(&x, 1).unwrap(), 7);
        assert_eq!(transposition_neighborhood(&x, 3).unwrap(), 24);
        // Stirling numbers of the first kind: 1, 6, 11, 6
        assert_eq!(neighborhood_profile(&x).unwrap(), vec![1, 7, 18, 24]);
    }

    #[test]
    fn bound_holds_for_identity() {
        for n in 2..=5 {
            let x = Family::new(n, [Permutation::identity(n)]).unwrap();
            let report = maurey_check(&x).unwrap();
            assert!(report.holds(), "{report:?}");
        }
    }
}
