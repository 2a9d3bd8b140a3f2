//! Exact rationals and their string form on the wire.

use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational number used throughout the crate.
pub type Q = Ratio<i128>;

/// Error raised by [`parse_fraction`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FractionError {
    #[error("{0:?} is a decimal; write it as an exact fraction p/q")]
    Decimal(String),
    #[error("{0:?} is not a fraction p/q")]
    Malformed(String),
    #[error("{0:?} has a zero denominator")]
    ZeroDenominator(String),
}

/// Parses `p/q` or `p`. Decimals are rejected outright.
pub fn parse_fraction(s: &str) -> Result<Q, FractionError> {
    let t = s.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(FractionError::Decimal(t.to_string()));
    }
    if let Some((_, den)) = t.split_once('/') {
        if den.trim().parse::<i128>().ok() == Some(0) {
            return Err(FractionError::ZeroDenominator(t.to_string()));
        }
    }
    Q::from_str(t).map_err(|_| FractionError::Malformed(t.to_string()))
}

/// Parses a comma-separated list of fractions.
pub fn parse_fraction_list(s: &str) -> Result<Vec<Q>, FractionError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_fraction).collect()
}

/// Always `p/q`, with `q = 1` for integers, so the wire form is uniform.
pub fn format_fraction(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n as i128)
}

pub fn is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

/// Greatest integer `<= q`.
pub fn floor(q: &Q) -> i64 {
    q.floor().to_integer() as i64
}

pub fn lcm_of_denominators<'a>(qs: impl IntoIterator<Item = &'a Q>) -> i128 {
    qs.into_iter().fold(1i128, |acc, q| acc.lcm(q.denom()))
}

pub fn dot(theta: &[Q], coords: &[i64]) -> Q {
    theta.iter().zip(coords).fold(Q::zero(), |acc, (t, &c)| {
        acc + t * Q::from_integer(c as i128)
    })
}

/// Serde adapter for `Vec<Q>` as a list of `"p/q"` strings.
pub mod serde_fractions {
    use super::*;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_fraction))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_fraction(s).map_err(D::Error::custom))
            .collect()
    }
}
