//! Dense univariate polynomials in `x` with big-integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{ExactDiv, Ring};
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `x^k`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPolynomial {
    coeffs: Vec<BigInt>,
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::from_integer(BigInt::zero()), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Exact quotient `a / b` over the integers.
pub fn poly_divide_x(a: &XPolynomial, b: &XPolynomial) -> Result<XPolynomial> {
    let Some(db) = b.degree() else {
        return Err(Error::DivisionByZero);
    };
    let not_divisible = || Error::NotDivisible { dividend: a.to_string(), divisor: b.to_string() };
    let Some(da) = a.degree() else {
        return Ok(XPolynomial::default());
    };
    if da < db {
        return Err(not_divisible());
    }
    let lead = &b.coeffs[db];
    let mut rem = a.coeffs.clone();
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let (q, r) = rem[k + db].div_rem(lead);
        if !r.is_zero() {
            return Err(not_divisible());
        }
        if q.is_zero() {
            continue;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(not_divisible());
    }
    Ok(XPolynomial::new(quot))
}

impl Ring for XPolynomial {
    fn zero() -> Self {
        XPolynomial::default()
    }
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
    fn neg_ref(&self) -> Self {
        XPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_int(value: i64) -> Self {
        Self::constant(BigInt::from(value))
    }
}

impl ExactDiv for XPolynomial {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        poly_divide_x(self, divisor)
    }
}

/// Descending form, e.g. `x^3 + 12x^2 + 70x + 60`.
impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_examples() {
        let a = XPolynomial::from_i64(&[12, 8, 1]);
        let b = XPolynomial::from_i64(&[6, 1]);
        assert_eq!(poly_divide_x(&a, &b).unwrap(), XPolynomial::from_i64(&[2, 1]));
        assert_eq!(poly_divide_x(&a, &XPolynomial::one()).unwrap(), a);
        let err = poly_divide_x(&XPolynomial::from_i64(&[1, 1]), &XPolynomial::from_i64(&[2, 1]));
        assert!(matches!(err, Err(Error::NotDivisible { .. })));
        assert!(matches!(poly_divide_x(&a, &XPolynomial::zero()), Err(Error::DivisionByZero)));
        // integral leading coefficient that does not divide
        assert!(poly_divide_x(&XPolynomial::from_i64(&[1, 1]), &XPolynomial::from_i64(&[0, 2])).is_err());
    }

    #[test]
    fn display_descending() {
        assert_eq!(XPolynomial::from_i64(&[60, 70, 12, 1]).to_string(), "x^3 + 12x^2 + 70x + 60");
        assert_eq!(XPolynomial::from_i64(&[6, 1]).to_string(), "x + 6");
        assert_eq!(XPolynomial::from_i64(&[-3, 0, -2]).to_string(), "-2x^2 - 3");
        assert_eq!(XPolynomial::from_i64(&[1]).to_string(), "1");
        assert_eq!(XPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_and_trim() {
        let p = XPolynomial::from_i64(&[24, 16, 2, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(64));
        assert_eq!(p.eval_rational(&BigRational::new(1.into(), 2.into())), BigRational::from_integer(65.into()) / BigRational::from_integer(2.into()));
    }
}
