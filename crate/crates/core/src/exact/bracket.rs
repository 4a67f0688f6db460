//! Quantum brackets `[a] = (t^{a/2} − t^{−a/2}) / (t^{1/2} − t^{−1/2})` and
//! structured products of them.
//!
//! `[a]` is a Laurent polynomial only for integral `a`; for other grid
//! values it is a genuine rational function, available through
//! [`bracket_ratio`]. The numerator `⟨a⟩ = t^{a/2} − t^{−a/2}` is always a
//! Laurent polynomial and is what state sums are built from.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::cyclotomic::Cyclotomic;
use super::laurent::{grid_units, LaurentPoly};
use super::ratfunc::RatFunc;
use super::ring::{format_rational, Field, Ring};
use crate::error::{Error, Result};

/// `⟨a⟩ = v^{a/2} − v^{−a/2}` in variable `var`.
pub fn bracket_numerator<C: Ring>(a: &BigRational, var: usize, nvars: u8, scale: u32) -> Result<LaurentPoly<C>> {
    let half = a / BigRational::from_integer(BigInt::from(2));
    let units = grid_units(&half, scale)?;
    let mut e_pos = [0, 0];
    let mut e_neg = [0, 0];
    e_pos[var] = units;
    e_neg[var] = -units;
    Ok(LaurentPoly::from_terms(nvars, scale, [(e_pos, C::one()), (e_neg, C::one().neg_ref())]))
}

/// `δ = ⟨1⟩ = v^{1/2} − v^{−1/2}`, the common normalization of all brackets.
pub fn bracket_delta<C: Ring>(var: usize, nvars: u8, scale: u32) -> LaurentPoly<C> {
    bracket_numerator(&BigRational::one(), var, nvars, scale).expect("1/2 lies on every grid")
}

/// `[a]` as a Laurent polynomial in the single variable `t`.
///
/// Fails with a grid violation when `a/2` is off the grid of `scale`, and
/// with a divisibility error when `a` is on the grid but not an integer.
pub fn bracket<C: Ring>(a: &BigRational, scale: u32) -> Result<LaurentPoly<C>> {
    bracket_in(a, 0, 1, scale)
}

/// `[a]` as a Laurent polynomial in variable `var`.
pub fn bracket_in<C: Ring>(a: &BigRational, var: usize, nvars: u8, scale: u32) -> Result<LaurentPoly<C>> {
    // Validates the grid before the integrality test.
    grid_units(&(a / BigRational::from_integer(BigInt::from(2))), scale)?;
    if !a.is_integer() {
        return Err(Error::NotDivisible {
            dividend: format!("<{}>", format_rational(a)),
            divisor: "<1>".into(),
        });
    }
    let k = a.to_integer().to_i64().ok_or_else(|| Error::Precondition("bracket argument too large".into()))?;
    let sign = if k < 0 { C::one().neg_ref() } else { C::one() };
    let m = k.abs();
    // [m] = Σ_{r=0}^{m-1} v^{(m-1-2r)/2}; one grid unit at scale D is v^{1/(2D)}.
    let unit = scale as i64;
    let terms = (0..m).map(|r| {
        let mut e = [0, 0];
        e[var] = (m - 1 - 2 * r) * unit;
        (e, sign.clone())
    });
    Ok(LaurentPoly::from_terms(nvars, scale, terms))
}

/// `[a]` as a quotient `⟨a⟩/δ`, defined for every grid value `a`.
pub fn bracket_ratio<C: Field>(a: &BigRational, var: usize, nvars: u8, scale: u32) -> Result<RatFunc<C>> {
    RatFunc::new(bracket_numerator(a, var, nvars, scale)?, bracket_delta(var, nvars, scale))
}

/// Which formal variable a bracket factor lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BracketVar {
    S,
    T,
}

impl fmt::Display for BracketVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BracketVar::S => "s",
            BracketVar::T => "t",
        })
    }
}

/// One factor `[arg]_var^exp` of a [`BracketProduct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketFactor {
    pub arg: BigRational,
    pub exp: i64,
    pub var: BracketVar,
}

/// `prefactor · s^{monomial} · Π [a]_v^e`, kept unexpanded so that the
/// limit `s, t → 1` can be read off factor by factor.
///
/// Invariants: factors are sorted by `(var, arg)`, arguments are positive,
/// exponents nonzero. A zero bracket raised to a positive power sets the
/// `zero` flag and clears the factors.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketProduct {
    prefactor: Cyclotomic,
    monomial: BigRational,
    factors: Vec<BracketFactor>,
    zero: bool,
    /// Zero brackets with negative exponent; the product is then undefined.
    poles: i64,
}

impl BracketProduct {
    pub fn new(prefactor: Cyclotomic) -> Self {
        let zero = prefactor.is_zero();
        BracketProduct { prefactor, monomial: BigRational::zero(), factors: Vec::new(), zero, poles: 0 }
    }

    pub fn one() -> Self {
        Self::new(Cyclotomic::one())
    }

    pub fn prefactor(&self) -> &Cyclotomic {
        &self.prefactor
    }

    /// Exponent of the bare `s` monomial.
    pub fn monomial(&self) -> &BigRational {
        &self.monomial
    }

    pub fn factors(&self) -> &[BracketFactor] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn times_prefactor(mut self, c: &Cyclotomic) -> Self {
        self.prefactor = self.prefactor.mul_ref(c);
        if self.prefactor.is_zero() {
            self.zero = true;
            self.factors.clear();
        }
        self
    }

    pub fn times_monomial(mut self, exp: &BigRational) -> Self {
        self.monomial += exp;
        self
    }

    /// Multiplies by `[arg]_var^exp`, using `[−a] = −[a]`.
    pub fn times_bracket(mut self, arg: &BigRational, exp: i64, var: BracketVar) -> Self {
        if exp == 0 {
            return self;
        }
        if arg.is_zero() {
            if exp > 0 {
                self.zero = true;
                self.factors.clear();
            } else {
                self.poles += 1;
            }
            return self;
        }
        if self.zero {
            return self;
        }
        let mut arg = arg.clone();
        if arg.is_negative() {
            arg = -arg;
            if exp % 2 != 0 {
                self.prefactor = self.prefactor.neg_ref();
            }
        }
        match self.factors.binary_search_by(|f| (f.var, &f.arg).cmp(&(var, &arg))) {
            Ok(i) => {
                self.factors[i].exp += exp;
                if self.factors[i].exp == 0 {
                    self.factors.remove(i);
                }
            }
            Err(i) => self.factors.insert(i, BracketFactor { arg, exp, var }),
        }
        self
    }

    pub fn times(mut self, other: &BracketProduct) -> Self {
        self.poles += other.poles;
        self = self.times_prefactor(&other.prefactor).times_monomial(&other.monomial);
        if other.zero {
            self.zero = true;
            self.factors.clear();
        }
        for f in &other.factors {
            self = self.times_bracket(&f.arg, f.exp, f.var);
        }
        self
    }

    /// Expands to a rational function in `s` (variable 0) and `t`
    /// (variable 1, present only if some factor uses it) at the given scale.
    pub fn expand(&self, scale: u32) -> Result<RatFunc<Cyclotomic>> {
        if self.poles > 0 {
            return Err(Error::Precondition("product contains [0] in a denominator".into()));
        }
        if self.zero {
            return Ok(RatFunc::zero());
        }
        let nvars = if self.factors.iter().any(|f| f.var == BracketVar::T) { 2 } else { 1 };
        let mut num = LaurentPoly::var_power(0, &self.monomial, nvars, scale)?.scale_coeffs(&self.prefactor);
        let mut den = LaurentPoly::constant(Cyclotomic::one()).with_nvars(nvars);
        for f in &self.factors {
            let v = match f.var {
                BracketVar::S => 0,
                BracketVar::T => 1,
            };
            let top: LaurentPoly<Cyclotomic> = bracket_numerator(&f.arg, v, nvars, scale)?;
            let bottom: LaurentPoly<Cyclotomic> = bracket_delta(v, nvars, scale);
            let (up, down) = if f.exp > 0 { (top, bottom) } else { (bottom, top) };
            for _ in 0..f.exp.unsigned_abs() {
                num = num.mul_ref(&up);
                den = den.mul_ref(&down);
            }
        }
        RatFunc::new(num, den)
    }
}

/// The value of `B` at `s = t = 1`: every `[a]` becomes `a` and the
/// monomial becomes 1.
pub fn bracket_limit_at_one(b: &BracketProduct) -> Result<Cyclotomic> {
    if b.poles > 0 {
        return Err(Error::Precondition("limit of a product with [0] in a denominator".into()));
    }
    if b.zero {
        return Ok(Cyclotomic::zero());
    }
    let mut value = BigRational::one();
    for f in &b.factors {
        let base = if f.exp > 0 { f.arg.clone() } else { f.arg.recip() };
        value *= num_traits::pow(base, f.exp.unsigned_abs() as usize);
    }
    Ok(b.prefactor.mul_ref(&Cyclotomic::from_rational(value)))
}

impl fmt::Display for BracketProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return f.write_str("0");
        }
        write!(f, "({})", self.prefactor)?;
        if !self.monomial.is_zero() {
            write!(f, "·s^({})", format_rational(&self.monomial))?;
        }
        for fac in &self.factors {
            write!(f, "·[{}]_{}", format_rational(&fac.arg), fac.var)?;
            if fac.exp != 1 {
                write!(f, "^{}", fac.exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    type P = LaurentPoly<BigRational>;

    fn t(e: BigRational) -> P {
        P::var_power(0, &e, 1, 1).unwrap()
    }

    #[test]
    fn small_brackets() {
        assert!(bracket::<BigRational>(&rat(0, 1), 1).unwrap().is_zero());
        assert_eq!(bracket::<BigRational>(&rat(1, 1), 1).unwrap(), P::one());
        assert_eq!(bracket::<BigRational>(&rat(2, 1), 1).unwrap(), t(rat(1, 2)) + t(rat(-1, 2)));
        assert_eq!(
            bracket::<BigRational>(&rat(-3, 1), 1).unwrap(),
            bracket::<BigRational>(&rat(3, 1), 1).unwrap().neg_ref()
        );
    }

    #[test]
    fn bracket_matches_quotient() {
        for a in -5..=5 {
            let a = rat(a, 1);
            let direct: P = bracket(&a, 2).unwrap();
            let quotient = bracket_numerator::<BigRational>(&a, 0, 1, 2)
                .unwrap()
                .divide_exact(&bracket_delta(0, 1, 2))
                .unwrap();
            assert_eq!(direct, quotient);
        }
    }

    #[test]
    fn grid_and_integrality_errors() {
        assert!(matches!(bracket::<BigRational>(&rat(1, 3), 1), Err(Error::GridViolation { .. })));
        assert!(matches!(bracket::<BigRational>(&rat(1, 2), 2), Err(Error::NotDivisible { .. })));
        let half = bracket_ratio::<BigRational>(&rat(1, 2), 0, 1, 2).unwrap();
        // [1/2] = 1/(t^{1/4} + t^{-1/4}) at scale 2
        let expect = RatFunc::new(P::one(), P::var_power(0, &rat(1, 4), 1, 2).unwrap() + P::var_power(0, &rat(-1, 4), 1, 2).unwrap()).unwrap();
        assert_eq!(half, expect);
    }

    #[test]
    fn limits() {
        assert_eq!(bracket_limit_at_one(&BracketProduct::one()).unwrap(), Cyclotomic::one());
        let b = BracketProduct::one().times_bracket(&rat(3, 1), 1, BracketVar::S).times_bracket(&rat(1, 1), -1, BracketVar::S);
        assert_eq!(bracket_limit_at_one(&b).unwrap(), Cyclotomic::from_int(3));
        let b = BracketProduct::one().times_monomial(&rat(-9, 2)).times_bracket(&rat(2, 1), 2, BracketVar::S);
        assert_eq!(bracket_limit_at_one(&b).unwrap(), Cyclotomic::from_int(4));
        let z = BracketProduct::one().times_bracket(&rat(0, 1), 2, BracketVar::S);
        assert!(bracket_limit_at_one(&z).unwrap().is_zero());
        let p = BracketProduct::one().times_bracket(&rat(0, 1), -1, BracketVar::S);
        assert!(bracket_limit_at_one(&p).is_err());
    }

    #[test]
    fn negative_arguments_and_cancellation() {
        let b = BracketProduct::one()
            .times_bracket(&rat(-2, 1), 1, BracketVar::S)
            .times_bracket(&rat(2, 1), -1, BracketVar::S);
        assert!(b.factors().is_empty());
        assert_eq!(b.prefactor(), &Cyclotomic::from_int(-1));
    }

    #[test]
    fn expansion_matches_limit() {
        let b = BracketProduct::new(Cyclotomic::zeta(3))
            .times_monomial(&rat(-1, 2))
            .times_bracket(&rat(4, 1), 1, BracketVar::S)
            .times_bracket(&rat(2, 1), -1, BracketVar::S);
        let r = b.expand(1).unwrap();
        let poly = r.to_laurent().unwrap();
        assert_eq!(poly.evaluate_at_one(), bracket_limit_at_one(&b).unwrap());
    }
}
