//! Product formulas for `A(n;1)`, `A(n;2)`, `A(n;3)` and the factorization
//! `A(n;x) = c_n B(n;x) B(n+1;x)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::xpoly::{poly_divide_x, XPolynomial};
use crate::six_vertex::{transfer_count_with_bound, DEFAULT_TRANSFER_BOUND};

/// `prefactor · Π num_args! / Π den_args!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialRatio {
    pub num_args: Vec<u64>,
    pub den_args: Vec<u64>,
    pub prefactor: BigRational,
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

impl FactorialRatio {
    pub fn new(num_args: Vec<u64>, den_args: Vec<u64>) -> Self {
        FactorialRatio { num_args, den_args, prefactor: BigRational::one() }
    }

    pub fn with_prefactor(mut self, prefactor: BigRational) -> Self {
        self.prefactor = prefactor;
        self
    }

    pub fn evaluate(&self) -> BigRational {
        let prod = |args: &[u64]| BigInt::from(args.iter().fold(BigUint::one(), |acc, &k| acc * factorial(k)));
        &self.prefactor * BigRational::new(prod(&self.num_args), prod(&self.den_args))
    }

    pub fn to_integer(&self) -> Result<BigInt> {
        let v = self.evaluate();
        if !v.is_integer() {
            return Err(Error::NotRational(format!("{v} is not an integer")));
        }
        Ok(v.to_integer())
    }
}

fn positive(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok(n as u64)
}

/// `1! 4! ⋯ (3n−2)! / (n! (n+1)! ⋯ (2n−1)!)`.
pub fn a_formula_ratio(n: usize) -> Result<FactorialRatio> {
    let n = positive(n)?;
    Ok(FactorialRatio::new((0..n).map(|i| 3 * i + 1).collect(), (0..n).map(|i| n + i).collect()))
}

pub fn a_formula(n: usize) -> Result<BigInt> {
    a_formula_ratio(n)?.to_integer()
}

/// `2^{n(n−1)/2}`.
pub fn a2_formula(n: usize) -> Result<BigInt> {
    let n = positive(n)?;
    Ok(BigInt::one() << (n * (n - 1) / 2))
}

/// `A(2k+1;3) = (3^{k(k+1)/2} · 2! 5! ⋯ (3k−1)! / ((k+1)! ⋯ (2k)!))²`.
fn a3_odd(k: u64) -> Result<BigInt> {
    let three = BigRational::from_integer(BigInt::from(3u32).pow((k * (k + 1) / 2) as u32));
    let root = FactorialRatio::new((1..=k).map(|i| 3 * i - 1).collect(), (k + 1..=2 * k).collect())
        .with_prefactor(three)
        .to_integer()?;
    Ok(&root * &root)
}

/// Odd sizes by the closed form; `A(2k;3) = 3^{k−1} (3k−1)! (k−1)! /
/// (2k−1)!² · A(2k−1;3)`.
pub fn a3_formula(n: usize) -> Result<BigInt> {
    let n = positive(n)?;
    if n % 2 == 1 {
        return a3_odd(n / 2);
    }
    let k = n / 2;
    let three = BigRational::from_integer(BigInt::from(3u32).pow((k - 1) as u32));
    let prev = BigRational::from_integer(a3_odd(k - 1)?);
    FactorialRatio::new(vec![3 * k - 1, k - 1], vec![2 * k - 1, 2 * k - 1]).with_prefactor(three * prev).to_integer()
}

/// `B(1..=max_n; x)`, stored from index 1.
#[derive(Clone, Debug, PartialEq)]
pub struct BChain {
    max_n: usize,
    polys: Vec<XPolynomial>,
}

/// `1` for odd `n`, `2` for even `n`.
pub fn chain_constant(n: usize) -> i64 {
    if n % 2 == 0 {
        2
    } else {
        1
    }
}

impl BChain {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `B(n;x)` for `1 ≤ n ≤ max_n`.
    pub fn get(&self, n: usize) -> Option<&XPolynomial> {
        n.checked_sub(1).and_then(|i| self.polys.get(i))
    }

    pub fn polys(&self) -> &[XPolynomial] {
        &self.polys
    }

    /// Whether `A(n) = c_n B(n) B(n+1)` for every `n < max_n` covered by `a`
    /// (`a[k]` is `A(k+1;x)`).
    pub fn factorization_holds(&self, a: &[XPolynomial]) -> bool {
        use crate::exact::ring::Ring;
        (1..self.max_n).filter(|&n| n <= a.len()).all(|n| {
            let rhs = self.polys[n - 1].mul_ref(&self.polys[n]).mul_ref(&XPolynomial::from_int(chain_constant(n)));
            rhs == a[n - 1]
        })
    }

    /// Observed, not assumed: every coefficient is a nonnegative integer.
    pub fn all_nonnegative(&self) -> bool {
        self.polys.iter().all(XPolynomial::has_nonnegative_coeffs)
    }
}

/// Builds the chain from given `A(n;x)` for `n = 1..max_n−1`
/// (`a[k]` is `A(k+1;x)`), failing on any inexact division.
pub fn b_chain_from(a: &[XPolynomial], max_n: usize) -> Result<BChain> {
    if max_n == 0 {
        return Err(Error::Precondition("max_n must be at least 1".into()));
    }
    if a.len() + 1 < max_n {
        return Err(Error::Precondition(format!("need A(n;x) up to n = {}", max_n - 1)));
    }
    let mut polys: Vec<XPolynomial> = vec![XPolynomial::from_i64(&[1]); max_n.min(3)];
    for n in 3..max_n {
        let divisor = XPolynomial::new(polys[n - 1].coeffs().iter().map(|c| c * chain_constant(n)).collect());
        polys.push(poly_divide_x(&a[n - 1], &divisor)?);
    }
    Ok(BChain { max_n, polys })
}

/// The chain with `A(n;x)` from the transfer-matrix count.
pub fn b_chain(max_n: usize) -> Result<BChain> {
    b_chain_with_bound(max_n, DEFAULT_TRANSFER_BOUND)
}

pub fn b_chain_with_bound(max_n: usize, bound: usize) -> Result<BChain> {
    if max_n > bound + 1 {
        return Err(Error::BoundExceeded { what: "b_chain", n: max_n, bound: bound + 1 });
    }
    let a = (1..max_n).map(|n| transfer_count_with_bound(n, bound)).collect::<Result<Vec<_>>>()?;
    b_chain_from(&a, max_n)
}

/// The product formula for `A(n;x)` at `x ∈ {1, 2, 3}`.
pub fn formula_at(n: usize, x: u8) -> Result<BigInt> {
    match x {
        1 => a_formula(n),
        2 => a2_formula(n),
        3 => a3_formula(n),
        _ => Err(Error::Precondition(format!("no product formula for x = {x}"))),
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn refined_counts() {
        let a: Vec<_> = (1..=8).map(|n| a_formula(n).unwrap()).collect();
        assert_eq!(a, big(&[1, 2, 7, 42, 429, 7436, 218348, 10850216]));
        let a3: Vec<_> = (1..=6).map(|n| a3_formula(n).unwrap()).collect();
        assert_eq!(a3, big(&[1, 2, 9, 90, 2025, 102060]));
        assert_eq!(a2_formula(6).unwrap(), BigInt::from(32768));
        assert!(a_formula(0).is_err());
    }

    #[test]
    fn formulas_match_transfer_counts() {
        for n in 1..=9 {
            let p = transfer_count_with_bound(n, 9).unwrap();
            for x in 1..=3u8 {
                assert_eq!(p.eval(&BigInt::from(x)), formula_at(n, x).unwrap(), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn chain_values() {
        let c = b_chain(6).unwrap();
        assert_eq!(c.get(1), Some(&XPolynomial::from_i64(&[1])));
        assert_eq!(c.get(3), Some(&XPolynomial::from_i64(&[1])));
        assert_eq!(c.get(4), Some(&XPolynomial::from_i64(&[6, 1])));
        assert_eq!(c.get(5), Some(&XPolynomial::from_i64(&[2, 1])));
        let b6 = c.get(6).unwrap();
        assert_eq!(b6.to_string(), "x^3 + 12x^2 + 70x + 60");
        assert_eq!(b6.eval(&BigInt::from(1)), BigInt::from(143));
        assert_eq!(b_chain(3).unwrap().polys().len(), 3);
        assert_eq!(b_chain(1).unwrap().polys().len(), 1);
    }

    #[test]
    fn chain_factorizes_and_rejects_bad_input() {
        let a: Vec<_> = (1..=8).map(|n| transfer_count_with_bound(n, 8).unwrap()).collect();
        let c = b_chain_from(&a, 9).unwrap();
        assert!(c.factorization_holds(&a));
        assert!(c.all_nonnegative());
        let mut bad = a.clone();
        bad[3] = XPolynomial::from_i64(&[25, 16, 2]);
        assert!(b_chain_from(&bad, 6).is_err());
        assert!(matches!(b_chain_with_bound(20, 14), Err(Error::BoundExceeded { .. })));
    }
}
