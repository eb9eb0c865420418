//! Exact rationals and their `"p/q"` string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi<T: Into<BigInt>>(v: T) -> Q {
    Q::from_integer(v.into())
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// Renders `x` as `"p/q"`, or `"p"` when the denominator is one.
pub fn to_string(x: &Q) -> String {
    x.to_string()
}

pub fn parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(p, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_string(x))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).map_err(serde::de::Error::custom)
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_some(&to_string(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Q>, D::Error> {
        let s: Option<String> = Option::deserialize(d)?;
        s.map(|s| parse(&s).map_err(serde::de::Error::custom)).transpose()
    }
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&to_string(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod opt_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &Option<Vec<Q>>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match xs {
            Some(xs) => s.serialize_some(&xs.iter().map(to_string).collect::<Vec<_>>()),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse("-1/3").unwrap(), q(-1, 3));
        assert_eq!(parse("4/2").unwrap(), qi(2));
        assert_eq!(to_string(&q(-2, 6)), "-1/3");
        assert_eq!(to_string(&qi(6)), "6");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
