//! Dense univariate polynomials over a field and reduced fractions of them.
//!
//! Used as a fast path for determinants of univariate rational-function
//! matrices: elimination over a gcd-reduced fraction field keeps entries
//! small where fraction-free elimination over Laurent polynomials would let
//! degrees grow with the matrix size.

use std::fmt;

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::ring::{ExactDiv, Field, Ring};
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `z^k`; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Field> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                UPoly { coeffs: self.coeffs.iter().map(|c| c.mul_ref(&inv)).collect() }
            }
        }
    }

    pub fn shifted(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let db = divisor.degree().expect("division by the zero polynomial");
        let Some(da) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if da < db {
            return (Self::zero(), self.clone());
        }
        let inv = divisor.coeffs[db].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = rem[k + db].mul_ref(&inv);
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_ref(&c.mul_ref(d));
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Splits a univariate Laurent polynomial whose exponents are multiples
    /// of `unit` grid units into `z^shift · P(z)` with `z` one unit.
    pub fn from_laurent(p: &LaurentPoly<C>, unit: i64) -> Result<(i64, Self)> {
        if p.nvars() != 1 {
            return Err(Error::Precondition("univariate polynomial expected".into()));
        }
        let Some(lo) = p.min_exponent(0) else {
            return Ok((0, Self::zero()));
        };
        if p.terms().keys().any(|e| e[0] % unit != 0) {
            return Err(Error::Precondition(format!("exponents are not multiples of {unit}")));
        }
        let shift = lo / unit;
        let hi = p.max_exponent(0).unwrap_or(lo) / unit;
        let mut coeffs = vec![C::zero(); (hi - shift + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e[0] / unit - shift) as usize] = c.clone();
        }
        Ok((shift, Self::new(coeffs)))
    }

    pub fn to_laurent(&self, shift: i64, unit: i64, scale: u32) -> LaurentPoly<C> {
        LaurentPoly::from_terms(
            1,
            scale,
            self.coeffs.iter().enumerate().map(|(k, c)| ([(k as i64 + shift) * unit, 0], c.clone())),
        )
    }
}

impl<C: Field> Ring for UPoly<C> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = C::zero();
        Self::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z).add_ref(other.coeffs.get(k).unwrap_or(&z)))
                .collect(),
        )
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }
    fn neg_ref(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(Ring::neg_ref).collect() }
    }
}

impl<C: Field> ExactDiv for UPoly<C> {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(divisor);
        if !r.is_zero() {
            return Err(Error::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() });
        }
        Ok(q)
    }
}

impl<C: Field> fmt::Display for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent(0, 2, 1))
    }
}

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct UFrac<C> {
    num: UPoly<C>,
    den: UPoly<C>,
}

impl<C: Field> UFrac<C> {
    pub fn new(num: UPoly<C>, den: UPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lead_inv = den.lead().and_then(Field::inv).expect("nonzero denominator");
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        Ok(UFrac { num, den })
    }

    pub fn numerator(&self) -> &UPoly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly<C> {
        &self.den
    }

    /// Converts a univariate rational function with exponents in multiples
    /// of `unit` grid units.
    pub fn from_ratfunc(r: &RatFunc<C>, unit: i64) -> Result<Self> {
        let (sn, n) = UPoly::from_laurent(r.numerator(), unit)?;
        let (sd, d) = UPoly::from_laurent(r.denominator(), unit)?;
        let diff = sn - sd;
        if diff >= 0 {
            Self::new(n.shifted(diff as usize), d)
        } else {
            Self::new(n, d.shifted((-diff) as usize))
        }
    }

    pub fn to_ratfunc(&self, unit: i64, scale: u32) -> RatFunc<C> {
        RatFunc::new(self.num.to_laurent(0, unit, scale), self.den.to_laurent(0, unit, scale))
            .expect("reduced fractions have nonzero denominators")
    }
}

impl<C: Field> Ring for UFrac<C> {
    fn zero() -> Self {
        UFrac { num: UPoly::zero(), den: UPoly::one() }
    }
    fn one() -> Self {
        UFrac { num: UPoly::one(), den: UPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add_ref(&other.num), self.den.clone()).expect("nonzero");
        }
        let g = self.den.gcd(&other.den);
        let (a, _) = self.den.div_rem(&g);
        let (b, _) = other.den.div_rem(&g);
        let num = self.num.mul_ref(&b).add_ref(&other.num.mul_ref(&a));
        Self::new(num, a.mul_ref(&other.den)).expect("nonzero")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Cross-cancel before multiplying.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = other.den.div_rem(&g1).0;
        let n2 = other.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        let den = d1.mul_ref(&d2);
        let lead_inv = den.lead().and_then(Field::inv).expect("nonzero denominator");
        UFrac { num: n1.mul_ref(&n2).scale(&lead_inv), den: den.scale(&lead_inv) }
    }
    fn neg_ref(&self) -> Self {
        UFrac { num: self.num.neg_ref(), den: self.den.clone() }
    }
}

impl<C: Field> ExactDiv for UFrac<C> {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let inv = divisor.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }
}

impl<C: Field> Field for UFrac<C> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lead_inv = self.num.lead().and_then(Field::inv)?;
        Some(UFrac { num: self.den.scale(&lead_inv), den: self.num.scale(&lead_inv) })
    }
    fn from_rational(value: &num_rational::BigRational) -> Self {
        UFrac { num: UPoly::constant(C::from_rational(value)), den: UPoly::one() }
    }
}

impl<C: Field> fmt::Display for UFrac<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
