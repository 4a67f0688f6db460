//! Minimal algebraic traits shared by every exact type in the crate.
//!
//! The methods take references and return owned values so that big-number
//! backed types never need to be cloned just to be combined.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with identity whose elements are immutable values.
///
/// `zero()` and `one()` are context free; types that carry extra structure
/// (a cyclotomic order, an exponent scale) promote on mixed operations.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_int(value: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if value < 0 { Self::one().neg_ref() } else { Self::one() };
        for _ in 0..value.unsigned_abs() {
            acc = acc.add_ref(&unit);
        }
        acc
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Rings in which an exact quotient can be computed whenever it exists.
pub trait ExactDiv: Ring {
    /// Returns `self / divisor` or an error if the quotient leaves the ring.
    fn div_exact(&self, divisor: &Self) -> Result<Self>;
}

/// Fields: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self>;
    fn from_rational(value: &BigRational) -> Self;
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        if Zero::is_zero(self) {
            return other.clone();
        }
        if Zero::is_zero(other) {
            return self.clone();
        }
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        if Zero::is_zero(other) {
            return self.clone();
        }
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if Zero::is_zero(self) || Zero::is_zero(other) {
            return Zero::zero();
        }
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / divisor)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(value: &BigRational) -> Self {
        value.clone()
    }
}

/// Shorthand for building a rational `num / den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Least common multiple of the denominators in `values` (1 for an empty list).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Parses `p`, `-p` or `p/q` into a rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    };
    let value = match text.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{text:?}: zero denominator")));
            }
            BigRational::new(parse_int(p)?, q)
        }
        None => BigRational::from_integer(parse_int(text)?),
    };
    Ok(value)
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else if value.is_negative() {
        format!("-{}/{}", value.numer().abs(), value.denom())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "7", "-3", "3/4", "-5/6"] {
            assert_eq!(format_rational(&parse_rational(text).unwrap()), text);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(2, 3).pow(5), rat(32, 243));
        assert_eq!(rat(-1, 1).pow(0), rat(1, 1));
        assert_eq!(<BigRational as Ring>::from_int(-4), rat(-4, 1));
    }

    #[test]
    fn lcm_of_denominators() {
        let vals = [rat(1, 2), rat(2, 3), rat(5, 1)];
        assert_eq!(common_denominator(&vals), BigInt::from(6));
    }
}
