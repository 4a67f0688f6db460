//! `A(n;x)` by a transfer-matrix sweep over the vertical edges.
//!
//! The key between rows is the bit vector of vertical edge orientations
//! (bit `j` set when the edge in column `j` points down, i.e. the column
//! partial sum is 1). Each row is swept left to right carrying the
//! orientation of the current horizontal edge; it enters pointing right
//! and must leave pointing left. A state-2 vertex contributes a factor `x`.
//! Coefficients are accumulated in `u128` and the sweep is redone with big
//! integers if any addition overflows.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::xpoly::XPolynomial;

pub const DEFAULT_TRANSFER_BOUND: usize = 14;

trait Count: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    /// `self += other`, or `false` on overflow.
    fn add_into(&mut self, other: &Self) -> bool;
    fn into_big(self) -> BigUint;
}

impl Count for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add_into(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Count for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigUint::from(1u8)
    }
    fn add_into(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn into_big(self) -> BigUint {
        self
    }
}

type Table<T> = HashMap<(u32, bool), Vec<T>>;

fn accumulate<T: Count>(table: &mut Table<T>, key: (u32, bool), poly: &[T], shift: usize) -> bool {
    let slot = table.entry(key).or_default();
    if slot.len() < poly.len() + shift {
        slot.resize(poly.len() + shift, T::zero());
    }
    poly.iter().enumerate().all(|(k, c)| slot[k + shift].add_into(c))
}

fn sweep<T: Count>(n: usize) -> Option<Vec<T>> {
    let mut table: Table<T> = HashMap::new();
    table.insert((0, false), vec![T::one()]);
    for _row in 0..n {
        for col in 0..n {
            let bit = 1u32 << col;
            let last = col + 1 == n;
            let mut next: Table<T> = HashMap::with_capacity(table.len() * 2);
            for (&(cols, open), poly) in &table {
                let down = cols & bit != 0;
                // (new column bits, new horizontal state, power of x)
                let mut moves: [Option<(u32, bool, usize)>; 2] = [None, None];
                moves[0] = Some((cols, open, 0));
                if open && down {
                    moves[1] = Some((cols & !bit, false, 1));
                } else if !open && !down {
                    moves[1] = Some((cols | bit, true, 0));
                }
                for (c, o, shift) in moves.into_iter().flatten() {
                    if last {
                        if o && !accumulate(&mut next, (c, false), poly, shift) {
                            return None;
                        }
                    } else if !accumulate(&mut next, (c, o), poly, shift) {
                        return None;
                    }
                }
            }
            table = next;
        }
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Some(table.remove(&(full, false)).unwrap_or_default())
}

pub fn transfer_count(n: usize) -> Result<XPolynomial> {
    transfer_count_with_bound(n, DEFAULT_TRANSFER_BOUND)
}

pub fn transfer_count_with_bound(n: usize, bound: usize) -> Result<XPolynomial> {
    if n == 0 || n > bound || n > 31 {
        return Err(Error::BoundExceeded { what: "transfer-matrix count", n, bound });
    }
    let coeffs: Vec<BigUint> = match sweep::<u128>(n) {
        Some(v) => v.into_iter().map(Count::into_big).collect(),
        None => sweep::<BigUint>(n).expect("big integers do not overflow"),
    };
    Ok(XPolynomial::new(coeffs.into_iter().map(Into::into).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_polynomials() {
        assert_eq!(transfer_count(1).unwrap(), XPolynomial::from_i64(&[1]));
        assert_eq!(transfer_count(2).unwrap(), XPolynomial::from_i64(&[2]));
        assert_eq!(transfer_count(3).unwrap(), XPolynomial::from_i64(&[6, 1]));
        assert_eq!(transfer_count(4).unwrap(), XPolynomial::from_i64(&[24, 16, 2]));
    }

    #[test]
    fn counts() {
        let got: Vec<BigInt> = (1..=6).map(|n| transfer_count(n).unwrap().eval(&BigInt::from(1))).collect();
        let want: Vec<BigInt> = [1, 2, 7, 42, 429, 7436].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want);
        assert_eq!(transfer_count(10).unwrap().eval(&BigInt::from(2)), BigInt::from(1u64 << 45));
    }

    #[test]
    fn degree_bound() {
        for n in 1..=9 {
            assert_eq!(transfer_count(n).unwrap().degree(), Some((n - 1) * (n - 1) / 4));
        }
    }

    #[test]
    fn overflow_path_agrees() {
        let small: Vec<BigUint> = sweep::<u128>(7).unwrap().into_iter().map(Count::into_big).collect();
        assert_eq!(small, sweep::<BigUint>(7).unwrap());
        assert!(transfer_count(15).is_err());
        assert_eq!(transfer_count_with_bound(15, 15).unwrap().degree(), Some(49));
    }
}
