//! Exact arithmetic in cyclotomic fields Q(ζ_m).
//!
//! An element of Q(ζ_m) is stored in the power basis 1, ζ, …, ζ^{φ(m)-1}
//! reduced modulo the m-th cyclotomic polynomial Φ_m, which makes equality
//! of two elements of the same order plain coefficient equality. Elements of
//! different orders are compared and combined inside Q(ζ_lcm).
//!
//! Rationals live in order 1, and results whose non-constant coordinates
//! vanish are demoted back to order 1. Most of the values flowing through
//! the determinant code are rational, so this keeps them cheap.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;


use super::ring::{format_rational, ExactDiv, Field, Ring};
use crate::error::{Error, Result};

/// Coefficients of Φ_m, ascending, monic.
fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("cyclotomic cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    // x^m - 1 = prod_{d | m} Φ_d, so divide out every proper divisor.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let poly = Arc::new(num);
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(m, Arc::clone(&poly));
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient, the degree of Φ_m.
pub fn totient(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Reduces a dense polynomial in ζ_m (ascending, any length) modulo Φ_m.
fn reduce(mut coeffs: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    for k in (deg..coeffs.len()).rev() {
        let c = std::mem::replace(&mut coeffs[k], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (i, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                coeffs[k - deg + i] -= &c * BigInt::from(p);
            }
        }
    }
    coeffs.resize(deg, BigRational::zero());
    coeffs
}

/// ζ_k^e as a root-of-unity descriptor; `cyclotomic_embed` places it in a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    pub order: u32,
    pub power: i64,
}

impl RootOfUnity {
    pub fn new(order: u32, power: i64) -> Self {
        RootOfUnity { order, power }
    }
}

/// An element of Q(ζ_order).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn from_rational(value: BigRational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![value] }
    }

    /// Builds Σ coeffs[i] ζ_m^i, reducing modulo Φ_m.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        Cyclotomic { order, coeffs: reduce(coeffs, order) }.demoted()
    }

    /// The primitive root ζ_m = exp(2πi/m).
    pub fn zeta(order: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); 2];
        coeffs[1] = BigRational::one();
        Cyclotomic::from_coeffs(order, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coordinates in the power basis of Q(ζ_order).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The element viewed inside Q(ζ_target); `order` must divide `target`.
    pub fn promote(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(target % self.order == 0, "Q(ζ_{}) ⊄ Q(ζ_{target})", self.order);
        let stride = (target / self.order) as usize;
        let mut dense = vec![BigRational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * stride] = c.clone();
        }
        Cyclotomic { order: target, coeffs: reduce(dense, target) }
    }

    fn demoted(mut self) -> Self {
        if self.order > 1 && self.coeffs[1..].iter().all(Ring::is_zero) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    /// Returns the value as a rational if it lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Ring::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn as_scalar(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    fn scale(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(by)).collect(),
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let target = self.order.lcm(&other.order);
        (self.promote(target), other.promote(target))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        if self.order == other.order {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
            return Cyclotomic { order: self.order, coeffs }.demoted();
        }
        let (a, b) = self.aligned(other);
        a.zip_with(&b, f)
    }

    /// Integer power, negative exponents through the field inverse.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.inv().ok_or(Error::DivisionByZero)?
        } else {
            self.clone()
        };
        Ok(base.pow(exp.unsigned_abs() as u32))
    }

    /// Complex approximation, for sanity checks and display only.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let (mut re, mut im) = (0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / self.order as f64;
            let v = c.to_f64().unwrap_or(f64::NAN);
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }
}

/// ζ_k^e as an element of Q(ζ_m); fails when k does not divide m.
pub fn cyclotomic_embed(root: RootOfUnity, field_order: u32) -> Result<Cyclotomic> {
    if root.order == 0 || field_order % root.order != 0 {
        return Err(Error::NotInField { root: root.order, field: field_order });
    }
    let e = root.power.rem_euclid(root.order as i64) as usize * (field_order / root.order) as usize;
    let mut dense = vec![BigRational::zero(); e + 1];
    dense[e] = BigRational::one();
    Ok(Cyclotomic { order: field_order, coeffs: reduce(dense, field_order) }.demoted())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(BigRational::zero())
    }
    fn one() -> Self {
        Cyclotomic::from_rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn add_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        self.zip_with(other, |a, b| a.add_ref(b))
    }
    fn sub_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.zip_with(other, |a, b| a.sub_ref(b))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if let Some(s) = self.as_scalar() {
            return other.scale(s).demoted();
        }
        if let Some(s) = other.as_scalar() {
            return self.scale(s).demoted();
        }
        if self.order != other.order {
            let (a, b) = self.aligned(other);
            return a.mul_ref(&b);
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic { order: self.order, coeffs: reduce(prod, self.order) }.demoted()
    }
    fn neg_ref(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_int(value: i64) -> Self {
        Cyclotomic::from_rational(BigRational::from_integer(BigInt::from(value)))
    }
}

impl ExactDiv for Cyclotomic {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let inv = divisor.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(s) = self.as_scalar() {
            return Some(Cyclotomic::from_rational(s.recip()));
        }
        // Extended Euclid in Q[x]: a·u + Φ·v = 1.
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let u = qpoly::inverse_mod(&self.coeffs, &phi)?;
        Some(Cyclotomic::from_coeffs(self.order, u))
    }
    fn from_rational(value: &BigRational) -> Self {
        Cyclotomic::from_rational(value.clone())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let z = match i {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{}", self.order, i),
            };
            let term = match (i, c) {
                (0, c) => format_rational(c),
                (_, c) if c.is_one() => z,
                (_, c) if (-c).is_one() => format!("-{z}"),
                (_, c) => format!("{}*{z}", format_rational(c)),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {t}")),
            }
        }
        write!(f, "{out}")
    }
}

/// Dense univariate polynomials over Q, just enough for field inversion.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<BigRational>) {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn is_zero(p: &[BigRational]) -> bool {
        p.iter().all(Zero::is_zero)
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if rem.len() <= db {
            return (vec![BigRational::zero()], rem);
        }
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] / &lead;
            if !c.is_zero() {
                for (i, bc) in b.iter().enumerate() {
                    rem[k + i] -= &c * bc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(db.max(1));
        trim(&mut rem);
        (quot, rem)
    }

    fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len().max(q.len() + b.len() - 1)];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, qc) in q.iter().enumerate() {
            for (j, bc) in b.iter().enumerate() {
                out[i + j] -= qc * bc;
            }
        }
        trim(&mut out);
        out
    }

    /// u with a·u ≡ 1 (mod modulus), when gcd(a, modulus) = 1.
    pub fn inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
        let (mut r0, mut r1) = (modulus.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::from_integer(1.into())]);
        while !is_zero(&r1) {
            let (q, r) = divrem(&r0, &r1);
            let s = sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        trim(&mut r0);
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        Some(s0.into_iter().map(|x| x / &c).collect())
    }
}
