//! Quotients of Laurent polynomials.
//!
//! No gcd is taken. Equality is decided by cross-multiplication, and sums
//! over a shared denominator keep that denominator, which is all the state
//! sums in this crate need (every denominator is a power of one bracket).

use std::fmt;

use super::laurent::LaurentPoly;
use super::ring::{ExactDiv, Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RatFunc<C> {
    num: LaurentPoly<C>,
    den: LaurentPoly<C>,
}

impl<C: Field> RatFunc<C> {
    pub fn new(num: LaurentPoly<C>, den: LaurentPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den }.normalized())
    }

    pub fn from_poly(num: LaurentPoly<C>) -> Self {
        RatFunc { num, den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly<C> {
        &self.den
    }

    /// Folds a monomial denominator into the numerator.
    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
        } else if let Some(inv) = self.den.inv_monomial() {
            self.num = self.num.mul_ref(&inv);
            self.den = LaurentPoly::one();
        }
        self
    }

    /// The value as a Laurent polynomial, if the denominator divides out.
    pub fn to_laurent(&self) -> Result<LaurentPoly<C>> {
        self.num.divide_exact(&self.den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc { num: self.den.clone(), den: self.num.clone() }.normalized())
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> RatFunc<D> {
        RatFunc { num: self.num.map_coeffs(&f), den: self.den.map_coeffs(&f) }
    }
}

impl<C: Field> PartialEq for RatFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul_ref(&other.den) == other.num.mul_ref(&self.den)
    }
}

impl<C: Field> Ring for RatFunc<C> {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return RatFunc { num: self.num.add_ref(&other.num), den: self.den.clone() }.normalized();
        }
        RatFunc {
            num: self.num.mul_ref(&other.den).add_ref(&other.num.mul_ref(&self.den)),
            den: self.den.mul_ref(&other.den),
        }
        .normalized()
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.mul_ref(&other.num), den: self.den.mul_ref(&other.den) }.normalized()
    }
    fn neg_ref(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn from_int(value: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(value))
    }
}

impl<C: Field> ExactDiv for RatFunc<C> {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.div(divisor)
    }
}

impl<C: Field> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
