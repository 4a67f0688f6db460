//! Depth-first enumeration of ASMs, row by row.
//!
//! The search state between rows is the vector of column partial sums, each
//! 0 or 1, held as a bit mask. Within a row the entries are tried in the
//! order −1, 0, 1, so the output is lexicographic in the row choices.

use num_bigint::BigInt;

use super::Asm;
use crate::error::{Error, Result};
use crate::exact::xpoly::XPolynomial;

pub const DEFAULT_BRUTE_BOUND: usize = 6;

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 || n > bound || n > 31 {
        return Err(Error::BoundExceeded { what: "brute-force enumeration", n, bound });
    }
    Ok(())
}

/// Calls `visit` on every `n×n` ASM in deterministic order.
pub fn for_each_asm(n: usize, bound: usize, mut visit: impl FnMut(&Asm)) -> Result<()> {
    check_bound(n, bound)?;
    let mut entries = vec![0i8; n * n];
    rows(n, 0, 0, &mut entries, &mut visit);
    Ok(())
}

fn rows(n: usize, row: usize, cols: u32, entries: &mut Vec<i8>, visit: &mut impl FnMut(&Asm)) {
    if row == n {
        visit(&Asm::from_trusted(n, entries.clone()));
        return;
    }
    cells(n, row, 0, false, cols, entries, visit);
}

fn cells(
    n: usize,
    row: usize,
    col: usize,
    open: bool,
    cols: u32,
    entries: &mut Vec<i8>,
    visit: &mut impl FnMut(&Asm),
) {
    if col == n {
        if open {
            rows(n, row + 1, cols, entries, visit);
        }
        return;
    }
    let bit = 1u32 << col;
    let idx = row * n + col;
    if open && cols & bit != 0 {
        entries[idx] = -1;
        cells(n, row, col + 1, false, cols & !bit, entries, visit);
    }
    entries[idx] = 0;
    cells(n, row, col + 1, open, cols, entries, visit);
    if !open && cols & bit == 0 {
        entries[idx] = 1;
        cells(n, row, col + 1, true, cols | bit, entries, visit);
    }
    entries[idx] = 0;
}

pub fn enumerate(n: usize) -> Result<Vec<Asm>> {
    enumerate_with_bound(n, DEFAULT_BRUTE_BOUND)
}

pub fn enumerate_with_bound(n: usize, bound: usize) -> Result<Vec<Asm>> {
    let mut out = Vec::new();
    for_each_asm(n, bound, |a| out.push(a.clone()))?;
    Ok(out)
}

/// `A(n;x)` by direct enumeration.
pub fn x_enumerate_brute(n: usize) -> Result<XPolynomial> {
    x_enumerate_brute_with_bound(n, DEFAULT_BRUTE_BOUND)
}

pub fn x_enumerate_brute_with_bound(n: usize, bound: usize) -> Result<XPolynomial> {
    let mut counts: Vec<u64> = Vec::new();
    for_each_asm(n, bound, |a| {
        let k = a.negative_count();
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    })?;
    Ok(XPolynomial::new(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let one = enumerate(1).unwrap();
        assert_eq!(one, vec![Asm::identity(1)]);
        let counts: Vec<usize> = (1..=5).map(|n| enumerate(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
    }

    #[test]
    fn every_output_is_valid_and_distinct() {
        let all = enumerate(4).unwrap();
        for a in &all {
            assert_eq!(Asm::validate(&a.rows()).as_ref(), Ok(a));
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn order_is_lexicographic_in_row_choices() {
        let all = enumerate(3).unwrap();
        let keys: Vec<Vec<i64>> = all.iter().map(|a| a.rows().concat()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn x_enumeration_examples() {
        assert_eq!(x_enumerate_brute(1).unwrap(), XPolynomial::from_i64(&[1]));
        assert_eq!(x_enumerate_brute(2).unwrap(), XPolynomial::from_i64(&[2]));
        assert_eq!(x_enumerate_brute(3).unwrap(), XPolynomial::from_i64(&[6, 1]));
        assert_eq!(x_enumerate_brute(4).unwrap(), XPolynomial::from_i64(&[24, 16, 2]));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate(7), Err(Error::BoundExceeded { n: 7, bound: 6, .. })));
        assert!(enumerate(0).is_err());
        assert_eq!(enumerate_with_bound(7, 7).unwrap().len(), 218_348);
    }
}
