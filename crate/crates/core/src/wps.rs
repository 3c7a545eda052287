//! Complete intersections in weighted projective spaces.
//!
//! For a smooth complete intersection `X` of hypersurfaces of degrees
//! `d_1, …, d_c` in a well-formed `P(a_0, …, a_n)`, the Chern character is
//! determined by the power sums of the weights and degrees: the coefficient
//! of `H^k` is `(Σ a_i^k − Σ d_i^k)/k!`. In particular `X` is Fano iff
//! `Σ d_i < Σ a_i` and 2-Fano iff additionally `Σ d_i² < Σ a_i²`.
//!
//! Smoothness (and quasi-smoothness) is assumed, never checked: the
//! predicates answer for the smooth members of the family. Power sums are
//! taken in arbitrary precision, so large weights and high `k` are exact.

use std::fmt;

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::Rational;

/// A weighted projective space `P(a_0, …, a_n)`, `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightedProjectiveSpace {
    weights: Vec<u64>,
}

impl WeightedProjectiveSpace {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::domain(
                "a weighted projective space needs at least two weights",
            ));
        }
        if weights.contains(&0) {
            return Err(Error::domain("weights must be positive"));
        }
        Ok(WeightedProjectiveSpace { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `n` in `P(a_0, …, a_n)`.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Well-formedness: every leave-one-out gcd of the weights equals 1.
    pub fn is_well_formed(&self) -> bool {
        (0..self.weights.len()).all(|i| {
            self.weights
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0u64, |g, (_, &a)| num::integer::gcd(g, a))
                == 1
        })
    }
}

/// A complete intersection of `c` hypersurfaces in a weighted projective
/// space, with `c < n` so the intersection has positive dimension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompleteIntersection {
    ambient: WeightedProjectiveSpace,
    degrees: Vec<u64>,
}

impl CompleteIntersection {
    pub fn new(ambient: WeightedProjectiveSpace, degrees: Vec<u64>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::domain("degrees must be positive"));
        }
        if degrees.len() >= ambient.dim() {
            return Err(Error::domain(format!(
                "need c < n for positive dimension, got c = {} in P^{}-weighted ambient",
                degrees.len(),
                ambient.dim()
            )));
        }
        Ok(CompleteIntersection { ambient, degrees })
    }

    pub fn ambient(&self) -> &WeightedProjectiveSpace {
        &self.ambient
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim() - self.degrees.len()
    }

    fn power_sum_difference(&self, k: u32) -> BigInt {
        let sum = |vals: &[u64]| -> BigInt { vals.iter().map(|&v| BigInt::from(v).pow(k)).sum() };
        sum(self.ambient.weights()) - sum(&self.degrees)
    }

    /// Coefficient of `H^k` in `ch(X)`: `(Σ a_i^k − Σ d_i^k)/k!`, `1 ≤ k ≤ n`.
    pub fn ch_coefficient(&self, k: usize) -> Result<Rational> {
        let n = self.ambient.dim();
        if !(1..=n).contains(&k) {
            return Err(Error::domain(format!(
                "ch coefficient index {k} out of range 1..={n}"
            )));
        }
        let factorial: BigInt = (1..=k as u64)
            .map(BigInt::from)
            .fold(BigInt::one(), |a, b| a * b);
        Ok(Rational::new(
            self.power_sum_difference(k as u32),
            factorial,
        ))
    }

    fn require_well_formed(&self) -> Result<()> {
        if self.ambient.is_well_formed() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "ambient {} is not well-formed",
                self.ambient
            )))
        }
    }

    /// `Σ d_i < Σ a_i`, i.e. `ch_1 > 0`. Assumes `X` smooth.
    pub fn is_fano(&self) -> Result<bool> {
        self.require_well_formed()?;
        Ok(self.power_sum_difference(1) > BigInt::ZERO)
    }

    /// Fano and `Σ d_i² < Σ a_i²`, i.e. `ch_1 > 0` and `ch_2 > 0`.
    pub fn is_two_fano(&self) -> Result<bool> {
        Ok(self.is_fano()? && self.power_sum_difference(2) > BigInt::ZERO)
    }

    /// Cited stability annotation: the tangent bundle of a smooth complete
    /// intersection in a weighted projective space is stable once
    /// `dim X ≥ 3`.
    pub fn tangent_stable_annotation(&self) -> Option<bool> {
        (self.dim() >= 3).then_some(true)
    }

    /// Parse `WCI(a0,...,an; d1,...,dc)` (degrees optional, whitespace
    /// inside parentheses ignored).
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        let body = s
            .strip_prefix("WCI(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("expected `WCI(...)`, got `{input}`")))?;
        let (weights_part, degrees_part) = match body.split_once(';') {
            Some((w, d)) => (w, Some(d)),
            None => (body, None),
        };
        let parse_list = |part: &str, what: &str| -> Result<Vec<u64>> {
            let trimmed = part.trim();
            if trimmed.is_empty() {
                return Ok(Vec::new());
            }
            trimmed
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u64>().map_err(|_| {
                        Error::parse(format!("expected a positive integer {what}, got `{tok}`"))
                    })
                })
                .collect()
        };
        let weights = parse_list(weights_part, "weight")?;
        let degrees = match degrees_part {
            Some(d) => parse_list(d, "degree")?,
            None => Vec::new(),
        };
        CompleteIntersection::new(WeightedProjectiveSpace::new(weights)?, degrees)
    }
}

impl fmt::Display for WeightedProjectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(")?;
        for (i, a) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WCI(")?;
        for (i, a) in self.ambient.weights().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        if !self.degrees.is_empty() {
            write!(f, "; ")?;
            for (i, d) in self.degrees.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
            }
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for CompleteIntersection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CompleteIntersection::parse(s)
    }
}
