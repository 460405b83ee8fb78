use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use matroid_core::SubsetMask;

use crate::{PolytopeError, Result};

/// A point of `Q^E` with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint { coords }
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_fractions(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs
            .iter()
            .enumerate()
            .map(|(i, &(p, q))| {
                if q == 0 {
                    Err(PolytopeError::ZeroDenominator(i))
                } else {
                    Ok(BigRational::new(p.into(), q.into()))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(RationalPoint::new)
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RationalPoint::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    /// The indicator vector `e_S` of `s` in `Q^n`.
    pub fn indicator(n: usize, s: SubsetMask) -> Self {
        RationalPoint::new(
            (0..n)
                .map(|i| if s.contains(i) { BigRational::one() } else { BigRational::zero() })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.coords[i]
    }

    pub fn sum(&self) -> BigRational {
        self.coords.iter().fold(BigRational::zero(), |a, c| a + c)
    }

    pub fn sum_over(&self, s: SubsetMask) -> BigRational {
        s.iter().fold(BigRational::zero(), |a, i| a + &self.coords[i])
    }

    pub fn neg(&self) -> Self {
        RationalPoint::new(self.coords.iter().map(|c| -c).collect())
    }

    /// Whether `0 <= z_i <= 1` for every coordinate.
    pub fn in_unit_box(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative() && *c <= BigRational::one())
    }

    /// Least common multiple of the denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    /// Coordinates scaled by [`Self::common_denominator`].
    pub fn scaled(&self) -> (BigInt, Vec<BigInt>) {
        let d = self.common_denominator();
        let ints = self.coords.iter().map(|c| (c * &d).to_integer()).collect();
        (d, ints)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(PolytopeError::LengthMismatch { expected: n, got: self.len() })
        }
    }

    /// `(numerator, denominator)` pairs in lowest terms.
    pub fn to_fractions(&self) -> Result<Vec<(i64, i64)>> {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| match (c.numer().to_i64(), c.denom().to_i64()) {
                (Some(p), Some(q)) => Ok((p, q)),
                _ => Err(PolytopeError::TooLarge(i)),
            })
            .collect()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parse a batch of points written as lists of `[numerator, denominator]`.
pub fn points_from_json(text: &str) -> Result<Vec<RationalPoint>> {
    let raw: Vec<Vec<(i64, i64)>> =
        serde_json::from_str(text).map_err(|e| PolytopeError::Json(e.to_string()))?;
    raw.iter().map(|p| RationalPoint::from_fractions(p)).collect()
}

pub fn points_to_json(points: &[RationalPoint]) -> Result<String> {
    let raw = points.iter().map(|p| p.to_fractions()).collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_string(&raw).expect("integer pairs always serialize"))
}
