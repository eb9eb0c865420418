//! Rigorous rational enclosures of `ln`, `exp` and `sqrt`.
//!
//! Every function returns a rational on the stated side of the true value;
//! intermediate results are rounded outward to dyadic rationals so that
//! numerators stay small.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{qi, Q};

/// Binary digits kept after outward rounding.
pub const PRECISION_BITS: u32 = 96;
const SERIES_TERMS: usize = 24;

fn scale() -> BigInt {
    BigInt::one() << PRECISION_BITS
}

/// Largest dyadic `k / 2^bits` not above `x`.
pub fn round_down(x: &Q) -> Q {
    let s = scale();
    let scaled = x * Q::from_integer(s.clone());
    Q::new(scaled.floor().to_integer(), s)
}

/// Smallest dyadic `k / 2^bits` not below `x`.
pub fn round_up(x: &Q) -> Q {
    let s = scale();
    let scaled = x * Q::from_integer(s.clone());
    Q::new(scaled.ceil().to_integer(), s)
}

/// `2 Σ_{k odd ≤ 2m+1} z^k / k` with `z = (y-1)/(y+1)`: every dropped term
/// is positive, so this is a lower bound on `ln y` for `y ≥ 1`.
fn artanh_lower(y: &Q) -> Q {
    let z = (y - Q::one()) / (y + Q::one());
    let z2 = &z * &z;
    let mut power = z;
    let mut sum = Q::zero();
    for k in 0..SERIES_TERMS * 2 {
        sum += &power / qi(2 * k as i64 + 1);
        power = round_down(&(&power * &z2));
    }
    round_down(&(sum * qi(2)))
}

/// Upper bound on `ln y` for `y ≥ 1` via the artanh series with a geometric
/// tail bound `z^{2m+1} / ((2m+1)(1 - z²))`.
fn artanh_upper(y: &Q) -> Q {
    let z = (y - Q::one()) / (y + Q::one());
    let z2 = &z * &z;
    let mut power = z.clone();
    let mut sum = Q::zero();
    let terms = SERIES_TERMS * 2;
    for k in 0..terms {
        sum += &power / qi(2 * k as i64 + 1);
        power = round_up(&(&power * &z2));
    }
    let tail = &power / (qi(2 * terms as i64 + 1) * (Q::one() - &z2));
    round_up(&((sum + tail) * qi(2)))
}

pub fn ln2_lower() -> Q {
    artanh_lower(&qi(2))
}

pub fn ln2_upper() -> Q {
    artanh_upper(&qi(2))
}

/// Splits `y ≥ 1` as `2^m · r` with `1 ≤ r < 2`.
fn reduce_pow2(y: &Q) -> (i64, Q) {
    let mut m = 0i64;
    let mut r = y.clone();
    while r >= qi(2) {
        r /= qi(2);
        m += 1;
    }
    (m, r)
}

/// A lower bound on `ln y`, `y ≥ 1`.
pub fn ln_lower(y: &Q) -> Q {
    assert!(y >= &Q::one(), "ln_lower needs y ≥ 1");
    let (m, r) = reduce_pow2(y);
    round_down(&(qi(m) * ln2_lower() + artanh_lower(&r)))
}

/// An upper bound on `ln y`, `y ≥ 1`.
pub fn ln_upper(y: &Q) -> Q {
    assert!(y >= &Q::one(), "ln_upper needs y ≥ 1");
    let (m, r) = reduce_pow2(y);
    round_up(&(qi(m) * ln2_upper() + artanh_upper(&r)))
}

/// An upper bound on `e^x` for `x ≥ 0`: Taylor series on `x / 2^k ≤ 1/2`
/// with remainder `2 z^{K+1} / (K+1)!`, then `k` outward-rounded squarings.
pub fn exp_upper(x: &Q) -> Q {
    assert!(!x.is_negative(), "exp_upper needs x ≥ 0");
    let half = Q::new(1.into(), 2.into());
    let mut k = 0u32;
    let mut z = x.clone();
    while z > half {
        z /= qi(2);
        k += 1;
    }
    let mut term = Q::one();
    let mut sum = Q::one();
    for j in 1..=SERIES_TERMS {
        term = round_up(&(&term * &z / qi(j as i64)));
        sum += &term;
    }
    let remainder = round_up(&(&term * &z / qi(SERIES_TERMS as i64 + 1) * qi(2)));
    let mut value = round_up(&(sum + remainder));
    for _ in 0..k {
        value = round_up(&(&value * &value));
    }
    value
}

/// A lower bound on `e^x` for `x ≥ 0`: truncated Taylor series (all terms
/// positive) and `k` inward-rounded squarings.
pub fn exp_lower(x: &Q) -> Q {
    assert!(!x.is_negative(), "exp_lower needs x ≥ 0");
    let half = Q::new(1.into(), 2.into());
    let mut k = 0u32;
    let mut z = x.clone();
    while z > half {
        z /= qi(2);
        k += 1;
    }
    let mut term = Q::one();
    let mut sum = Q::one();
    for j in 1..=SERIES_TERMS {
        term = round_down(&(&term * &z / qi(j as i64)));
        sum += &term;
    }
    let mut value = round_down(&sum);
    for _ in 0..k {
        value = round_down(&(&value * &value));
    }
    value
}

/// A lower bound on `e^{-x}` for `x ≥ 0`.
pub fn exp_neg_lower(x: &Q) -> Q {
    round_down(&exp_upper(x).recip())
}

/// An upper bound on `e^{-x}` for `x ≥ 0`.
pub fn exp_neg_upper(x: &Q) -> Q {
    round_up(&exp_lower(x).recip())
}

/// `⌊√(v · 4^b)⌋ / 2^b ≤ √v` for `v ≥ 0`.
pub fn sqrt_lower(v: &Q) -> Q {
    assert!(!v.is_negative(), "sqrt of a negative rational");
    let s = scale();
    let scaled = (v * Q::from_integer(&s * &s)).floor().to_integer();
    Q::new(scaled.sqrt(), s)
}

pub fn sqrt_upper(v: &Q) -> Q {
    let lo = sqrt_lower(v);
    let step = Q::new(1.into(), scale());
    let hi = &lo + &step;
    debug_assert!(&hi * &hi >= *v);
    hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn f(x: &Q) -> f64 {
        x.to_f64().unwrap()
    }

    #[test]
    fn ln_brackets() {
        for y in [1i64, 2, 3, 10, 120, 5040] {
            let lo = ln_lower(&qi(y));
            let hi = ln_upper(&qi(y));
            assert!(lo <= hi);
            let truth = (y as f64).ln();
            assert!(f(&lo) <= truth + 1e-12 && f(&hi) >= truth - 1e-12);
            assert!(f(&hi) - f(&lo) < 1e-15 + 1e-12 * truth);
        }
    }

    #[test]
    fn exp_brackets() {
        for x in [0.0f64, 0.25, 1.0, 3.5, 10.0] {
            let xq = Q::from_float(x).unwrap();
            let lo = exp_lower(&xq);
            let hi = exp_upper(&xq);
            assert!(lo <= hi);
            assert!((f(&lo) - x.exp()).abs() < 1e-9 * x.exp());
            assert!(exp_neg_lower(&xq) <= exp_neg_upper(&xq));
        }
        assert_eq!(exp_upper(&qi(0)), qi(1));
    }

    #[test]
    fn sqrt_brackets() {
        let two = qi(2);
        let lo = sqrt_lower(&two);
        assert!(&lo * &lo <= two);
        let hi = sqrt_upper(&two);
        assert!(&hi * &hi >= two);
        assert_eq!(sqrt_lower(&qi(9)), qi(3));
    }
}
