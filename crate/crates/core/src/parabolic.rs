//! Parabolic degrees of line bundles with rational weights.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicLine {
    pub degree: i64,
    #[serde(with = "rational::serde_fractions")]
    pub weights: Vec<Q>,
}

impl ParabolicLine {
    /// Weights must lie in the closed interval `[0, 1]`.
    pub fn new(degree: i64, weights: Vec<Q>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| **w < Q::zero() || **w > Q::one()) {
            return Err(Error::WeightOutOfRange(w.to_string()));
        }
        Ok(Self { degree, weights })
    }

    /// `deg + Σ α_i`
    pub fn pardeg(&self) -> Q {
        rational::int(self.degree) + self.weights.iter().sum::<Q>()
    }
}

/// Weights `a_i / n_i` after lifting each `a_i` into `[0, n_i)`.
pub fn invariant_weights(exponents: &[(i64, i64)]) -> Result<Vec<Q>> {
    exponents
        .iter()
        .map(|&(a, n)| {
            if n < 1 || a.abs() >= n {
                return Err(Error::InvalidExponent { a, n });
            }
            Ok(Q::new(a.rem_euclid(n) as i128, n as i128))
        })
        .collect()
}

/// Parabolic degree of the invariant direct image: `deg + Σ a_i / n_i`.
pub fn pardeg_from_cover(degree: i64, exponents: &[(i64, i64)]) -> Result<Q> {
    Ok(ParabolicLine::new(degree, invariant_weights(exponents)?)?.pardeg())
}
