//! Sparse Laurent polynomials in one or two variables with fractional
//! exponents on a common grid.
//!
//! An exponent is stored as an integer counting units of `1/(2·scale)`, so a
//! polynomial at scale 1 has half-integral exponents and a polynomial at
//! scale `D` can hold `q^{a/2}` for any `a` with denominator dividing `D`.
//! Operands of different scale (or variable count) are promoted to the lcm
//! scale before combining.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::ring::{format_rational, ExactDiv, Field, Ring};
use crate::error::{Error, Result};

/// Exponent vector in grid units; unused coordinates are zero.
pub type Exponent = [i64; 2];

#[derive(Clone, Debug)]
pub struct LaurentPoly<C> {
    nvars: u8,
    scale: u32,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn zero_with(nvars: u8, scale: u32) -> Self {
        assert!((1..=2).contains(&nvars), "1 or 2 variables supported");
        assert!(scale > 0, "scale must be positive");
        LaurentPoly { nvars, scale, terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, [0, 0], 1, 1)
    }

    /// `c · x^{e0} · y^{e1}` with exponents in grid units.
    pub fn monomial(c: C, exps: Exponent, nvars: u8, scale: u32) -> Self {
        let mut p = Self::zero_with(nvars, scale);
        if nvars == 1 {
            assert_eq!(exps[1], 0, "second exponent on a univariate polynomial");
        }
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `var^{exponent}` where `exponent` is a rational number of units of
    /// the variable itself (e.g. 1/2 for a square root).
    pub fn var_power(var: usize, exponent: &BigRational, nvars: u8, scale: u32) -> Result<Self> {
        let units = grid_units(exponent, scale)?;
        let mut exps = [0, 0];
        exps[var] = units;
        Ok(Self::monomial(C::one(), exps, nvars, scale))
    }

    pub fn from_terms(nvars: u8, scale: u32, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero_with(nvars, scale);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: Exponent) -> C {
        self.terms.get(&exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest term in lexicographic exponent order.
    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    pub fn min_exponent(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).min()
    }

    pub fn max_exponent(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Exponents of `var` that occur, as rationals in units of the variable.
    pub fn exponents_of(&self, var: usize) -> Vec<BigRational> {
        let mut out: Vec<i64> = self.terms.keys().map(|e| e[var]).collect();
        out.sort_unstable();
        out.dedup();
        out.into_iter()
            .map(|u| BigRational::new(BigInt::from(u), BigInt::from(2 * self.scale as i64)))
            .collect()
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Re-expresses the polynomial on a finer grid; `scale` must divide `new_scale`.
    pub fn rescaled(&self, new_scale: u32) -> Self {
        if new_scale == self.scale {
            return self.clone();
        }
        assert!(new_scale % self.scale == 0, "cannot coarsen the exponent grid");
        let k = (new_scale / self.scale) as i64;
        LaurentPoly {
            nvars: self.nvars,
            scale: new_scale,
            terms: self.terms.iter().map(|(e, c)| ([e[0] * k, e[1] * k], c.clone())).collect(),
        }
    }

    /// Changes the variable count; dropping the second variable requires it
    /// to be absent.
    pub fn with_nvars(&self, nvars: u8) -> Self {
        assert!((1..=2).contains(&nvars));
        assert!(nvars >= self.nvars || self.terms.keys().all(|e| e[1] == 0), "second variable still present");
        LaurentPoly { nvars, scale: self.scale, terms: self.terms.clone() }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let scale = self.scale.lcm(&other.scale);
        let nvars = self.nvars.max(other.nvars);
        (self.rescaled(scale).with_nvars(nvars), other.rescaled(scale).with_nvars(nvars))
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.scale == other.scale && self.nvars == other.nvars
    }

    /// Multiplies by `c · x^e`.
    pub fn mul_term(&self, e: Exponent, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero_with(self.nvars, self.scale);
        }
        LaurentPoly {
            nvars: self.nvars,
            scale: self.scale,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| ([k[0] + e[0], k[1] + e[1]], v.mul_ref(c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn scale_coeffs(&self, c: &C) -> Self {
        self.mul_term([0, 0], c)
    }

    /// Value at every variable equal to 1, i.e. the sum of the coefficients.
    pub fn evaluate_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc.add_ref(c))
    }

    /// Substitutes `var = value` when every exponent of `var` is an integer
    /// power of the variable (rational specialization of a formal variable).
    pub fn specialize_integral(&self, var: usize, value: &C) -> Result<Self>
    where
        C: Field,
    {
        let unit = 2 * self.scale as i64;
        let mut out = Self::zero_with(self.nvars, self.scale);
        for (e, c) in &self.terms {
            if e[var] % unit != 0 {
                return Err(Error::Precondition(format!(
                    "exponent {} of variable {var} is not integral",
                    e[var]
                )));
            }
            let k = e[var] / unit;
            let base = if k < 0 { value.inv().ok_or(Error::DivisionByZero)? } else { value.clone() };
            let factor = base.pow(k.unsigned_abs() as u32);
            let mut ne = *e;
            ne[var] = 0;
            out.add_term(ne, c.mul_ref(&factor));
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly {
            nvars: self.nvars,
            scale: self.scale,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// True if every exponent is half-integral and all exponents of each
    /// variable differ pairwise by integers.
    pub fn is_half_integral(&self) -> bool {
        let d = self.scale as i64;
        (0..self.nvars as usize).all(|v| {
            let mut exps = self.terms.keys().map(|e| e[v]);
            match exps.next() {
                None => true,
                Some(first) => {
                    first % d == 0 && exps.all(|e| e % d == 0 && (e - first) % (2 * d) == 0)
                }
            }
        })
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: [&str; 2]) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let unit = 2 * self.scale as i64;
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for v in 0..self.nvars as usize {
                if e[v] == 0 {
                    continue;
                }
                let r = BigRational::new(BigInt::from(e[v]), BigInt::from(unit));
                if !mono.is_empty() {
                    mono.push('*');
                }
                if r == BigRational::from_integer(1.into()) {
                    mono.push_str(names[v]);
                } else {
                    mono.push_str(&format!("{}^{{{}}}", names[v], format_rational(&r)));
                }
            }
            let cs = c.to_string();
            let compound = cs.contains(' ');
            let body = if mono.is_empty() {
                if compound { format!("({cs})") } else { cs }
            } else if c.is_one() {
                mono
            } else if c.neg_ref().is_one() {
                format!("-{mono}")
            } else if compound {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }

    /// Displays the polynomial with the given variable names.
    pub fn display_with<'a>(&'a self, names: [&'a str; 2]) -> impl fmt::Display + 'a {
        struct Named<'a, C>(&'a LaurentPoly<C>, [&'a str; 2]);
        impl<C: Ring> fmt::Display for Named<'_, C> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        Named(self, names)
    }
}

impl<C: Field> LaurentPoly<C> {
    /// Inverse of a monomial; `None` for anything else.
    pub fn inv_monomial(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.inv()?, [-e[0], -e[1]], self.nvars, self.scale))
    }

    /// Exact quotient `self / divisor` when it is again a Laurent polynomial.
    ///
    /// Runs lexicographic long division. Any candidate quotient term outside
    /// the box allowed by the exponent ranges of dividend and divisor proves
    /// non-divisibility, which also guarantees termination.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.same_shape(divisor) {
            let (a, b) = self.aligned(divisor);
            return a.divide_exact(&b);
        }
        if let Some(inv) = divisor.inv_monomial() {
            return Ok(self.mul_ref(&inv));
        }
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let nv = self.nvars as usize;
        let mut lo = [0i64; 2];
        let mut hi = [0i64; 2];
        for v in 0..nv {
            let (Some(pmin), Some(pmax)) = (self.min_exponent(v), self.max_exponent(v)) else {
                return Ok(Self::zero_with(self.nvars, self.scale));
            };
            lo[v] = pmin - divisor.min_exponent(v).unwrap_or(0);
            hi[v] = pmax - divisor.max_exponent(v).unwrap_or(0);
            if lo[v] > hi[v] {
                return Err(not_divisible());
            }
        }
        let (lead_e, lead_c) = divisor.leading_term().map(|(e, c)| (*e, c.clone())).unwrap();
        let lead_inv = lead_c.inv().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero_with(self.nvars, self.scale);
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (*e, c.clone())) {
            let qe = [re[0] - lead_e[0], re[1] - lead_e[1]];
            if (0..nv).any(|v| qe[v] < lo[v] || qe[v] > hi[v]) {
                return Err(not_divisible());
            }
            let qc = rc.mul_ref(&lead_inv);
            for (de, dc) in &divisor.terms {
                rem.add_term([de[0] + qe[0], de[1] + qe[1]], dc.mul_ref(&qc).neg_ref());
            }
            // The leading term cancels exactly; guard against inexact fields.
            rem.terms.remove(&re);
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Multiplicity of `factor` in `self` (how many times it divides exactly).
    pub fn multiplicity_of(&self, factor: &Self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut count = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.divide_exact(factor) {
            count += 1;
            cur = q;
            if factor.is_monomial() {
                return usize::MAX;
            }
        }
        count
    }
}

/// Converts an exponent (in units of the variable) to grid units at `scale`.
pub fn grid_units(exponent: &BigRational, scale: u32) -> Result<i64> {
    let scaled = exponent * BigRational::from_integer(BigInt::from(2 * scale as i64));
    if !scaled.is_integer() {
        return Err(Error::GridViolation { value: format_rational(exponent), scale });
    }
    scaled
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::GridViolation { value: format_rational(exponent), scale })
}

impl<C: Ring> PartialEq for LaurentPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.same_shape(other) {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        Self::zero_with(1, 1)
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if !self.same_shape(other) {
            let (a, b) = self.aligned(other);
            return a.add_ref(&b);
        }
        let (mut big, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(*e, c.clone());
        }
        big
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if !self.same_shape(other) {
            let (a, b) = self.aligned(other);
            return a.mul_ref(&b);
        }
        if self.is_monomial() {
            let (e, c) = self.terms.iter().next().unwrap();
            return other.mul_term(*e, c);
        }
        if other.is_monomial() {
            let (e, c) = other.terms.iter().next().unwrap();
            return self.mul_term(*e, c);
        }
        let mut out = Self::zero_with(self.nvars, self.scale);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1]], c1.mul_ref(c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            scale: self.scale,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect(),
        }
    }
    fn from_int(value: i64) -> Self {
        Self::constant(C::from_int(value))
    }
}

impl<C: Field> ExactDiv for LaurentPoly<C> {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.divide_exact(divisor)
    }
}

impl<C: Ring> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, ["t", "u"])
    }
}

impl<C: Ring> std::ops::Add for LaurentPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<C: Ring> std::ops::Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<C: Ring> std::ops::Mul for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<C: Ring> std::ops::Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    type P = LaurentPoly<BigRational>;

    fn t(e: (i64, i64)) -> P {
        P::var_power(0, &rat(e.0, e.1), 1, 1).unwrap()
    }

    fn c(v: i64) -> P {
        P::from_int(v)
    }

    #[test]
    fn divide_examples() {
        // 1 / t = t^{-1}
        assert_eq!(c(1).divide_exact(&t((1, 1))).unwrap(), t((-1, 1)));
        // (t - t^{-1}) / (t^{1/2} - t^{-1/2}) = t^{1/2} + t^{-1/2}
        let num = t((1, 1)) - t((-1, 1));
        let den = t((1, 2)) - t((-1, 2));
        assert_eq!(num.divide_exact(&den).unwrap(), t((1, 2)) + t((-1, 2)));
        // (t + 1) / (t - 1) fails
        let err = (t((1, 1)) + c(1)).divide_exact(&(t((1, 1)) - c(1)));
        assert!(matches!(err, Err(Error::NotDivisible { .. })));
        assert!(matches!(c(1).divide_exact(&c(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn grid_violation() {
        assert!(matches!(
            P::var_power(0, &rat(1, 3), 1, 1),
            Err(Error::GridViolation { .. })
        ));
        assert!(P::var_power(0, &rat(1, 3), 1, 3).is_ok());
    }

    #[test]
    fn mixed_scales_promote() {
        let a = P::var_power(0, &rat(1, 2), 1, 1).unwrap();
        let b = P::var_power(0, &rat(1, 6), 1, 3).unwrap();
        let prod = a.mul_ref(&b);
        assert_eq!(prod.scale(), 3);
        assert_eq!(prod, P::var_power(0, &rat(2, 3), 1, 3).unwrap());
        assert_eq!(a, a.rescaled(5));
    }

    #[test]
    fn bivariate_division() {
        let s = P::var_power(0, &rat(1, 1), 2, 1).unwrap();
        let u = P::var_power(1, &rat(1, 1), 2, 1).unwrap();
        let a = s.add_ref(&u.mul_ref(&c(2))).add_ref(&c(-1));
        let b = s.mul_ref(&u).sub_ref(&u.pow(3)).add_ref(&c(5));
        let prod = a.mul_ref(&b);
        assert_eq!(prod.divide_exact(&a).unwrap(), b);
        assert_eq!(prod.divide_exact(&b).unwrap(), a);
        assert!(prod.add_ref(&c(1)).divide_exact(&a).is_err());
    }

    #[test]
    fn display_and_evaluation() {
        let p = t((1, 2)) + t((-1, 2));
        assert_eq!(p.to_string(), "t^{1/2} + t^{-1/2}");
        assert_eq!(p.evaluate_at_one(), rat(2, 1));
        assert!(p.is_half_integral());
        assert!(!(t((1, 2)) + c(1)).is_half_integral());
        assert_eq!((t((1, 1)) * c(-3) + c(2)).to_string(), "-3*t + 2");
    }

    #[test]
    fn specialize_and_multiplicity() {
        let p = (t((1, 1)) - c(2)).pow(3).mul_ref(&(t((1, 1)) + c(1)));
        assert_eq!(p.multiplicity_of(&(t((1, 1)) - c(2))), 3);
        let v = p.specialize_integral(0, &rat(2, 1)).unwrap();
        assert!(v.is_zero());
        assert!(t((1, 2)).specialize_integral(0, &rat(2, 1)).is_err());
    }
}
