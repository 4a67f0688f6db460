//! Alternating sign matrices.
//!
//! An `n×n` matrix over `{−1, 0, 1}` is an ASM iff every row and column
//! prefix sum lies in `{0, 1}` and every full row and column sums to 1.

mod enumerate;
mod ice;
mod text;

use std::fmt;

pub use enumerate::{
    enumerate, enumerate_with_bound, for_each_asm, x_enumerate_brute, x_enumerate_brute_with_bound,
    DEFAULT_BRUTE_BOUND,
};
pub use ice::{from_ice, to_ice};
pub use text::{parse_asms, write_asms};

/// First violated constraint found by [`Asm::validate`], scanning cells in
/// row-major order and checking the row prefix before the column prefix.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AsmError {
    #[error("matrix is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is not in {{-1, 0, 1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },
    #[error("row {row} prefix sum through column {col} is {sum}")]
    RowPrefix { row: usize, col: usize, sum: i64 },
    #[error("column {col} prefix sum through row {row} is {sum}")]
    ColumnPrefix { row: usize, col: usize, sum: i64 },
    #[error("row {row} sums to {sum}")]
    RowSum { row: usize, sum: i64 },
    #[error("column {col} sums to {sum}")]
    ColumnSum { col: usize, sum: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Checks the alternating-sign structure of a square integer matrix.
    pub fn validate(rows: &[Vec<i64>]) -> Result<Asm, AsmError> {
        let n = rows.len();
        if n == 0 {
            return Err(AsmError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(AsmError::NotSquare { row, len: r.len(), n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, v)| !(-1..=1).contains(*v)) {
                return Err(AsmError::EntryOutOfRange { row, col, value });
            }
        }
        let mut col_sums = vec![0i64; n];
        for (row, r) in rows.iter().enumerate() {
            let mut row_sum = 0i64;
            for (col, &v) in r.iter().enumerate() {
                row_sum += v;
                col_sums[col] += v;
                if !(0..=1).contains(&row_sum) {
                    return Err(AsmError::RowPrefix { row, col, sum: row_sum });
                }
                if !(0..=1).contains(&col_sums[col]) {
                    return Err(AsmError::ColumnPrefix { row, col, sum: col_sums[col] });
                }
            }
            if row_sum != 1 {
                return Err(AsmError::RowSum { row, sum: row_sum });
            }
        }
        if let Some((col, &sum)) = col_sums.iter().enumerate().find(|(_, s)| **s != 1) {
            return Err(AsmError::ColumnSum { col, sum });
        }
        Ok(Asm { n, entries: rows.iter().flatten().map(|&v| v as i8).collect() })
    }

    /// Builds an ASM from entries already known to be valid.
    pub(crate) fn from_trusted(n: usize, entries: Vec<i8>) -> Asm {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }

    pub fn identity(n: usize) -> Asm {
        Self::from_permutation(&(0..n).collect::<Vec<_>>())
    }

    /// The permutation matrix with a 1 at `(i, perm[i])`.
    pub fn from_permutation(perm: &[usize]) -> Asm {
        let n = perm.len();
        let mut entries = vec![0; n * n];
        for (i, &p) in perm.iter().enumerate() {
            entries[i * n + p] = 1;
        }
        Asm { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.iter().map(|&v| v as i64).collect()).collect()
    }

    /// Number of `−1` entries, the exponent of `x` in the x-enumeration.
    pub fn negative_count(&self) -> usize {
        self.entries.iter().filter(|&&v| v == -1).count()
    }

    pub fn transpose(&self) -> Asm {
        let n = self.n;
        Asm { n, entries: (0..n * n).map(|k| self.get(k % n, k / n)).collect() }
    }

    /// Column of the 1 in the first row.
    pub fn first_row_one(&self) -> usize {
        (0..self.n).find(|&j| self.get(0, j) == 1).expect("the first row of an ASM holds a single 1")
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_displayed_example() {
        assert!(Asm::validate(&Asm::identity(3).rows()).is_ok());
        let m = vec![vec![0, 1, 0, 0], vec![1, -1, 1, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0]];
        let a = Asm::validate(&m).unwrap();
        assert_eq!(a.negative_count(), 1);
        assert_eq!(a.rows(), m);
    }

    #[test]
    fn violations() {
        assert!(matches!(
            Asm::validate(&[vec![1, -1], vec![-1, 1]]),
            Err(AsmError::ColumnPrefix { row: 0, col: 1, sum: -1 })
        ));
        assert_eq!(Asm::validate(&[]), Err(AsmError::Empty));
        assert!(matches!(Asm::validate(&[vec![1, 0]]), Err(AsmError::NotSquare { .. })));
        assert!(matches!(Asm::validate(&[vec![2]]), Err(AsmError::EntryOutOfRange { value: 2, .. })));
        assert!(matches!(Asm::validate(&[vec![0]]), Err(AsmError::RowSum { row: 0, sum: 0 })));
        assert!(matches!(
            Asm::validate(&[vec![1, 0], vec![1, 0]]),
            Err(AsmError::ColumnPrefix { row: 1, col: 0, sum: 2 })
        ));
        assert!(matches!(
            Asm::validate(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 1, 0]]),
            Err(AsmError::ColumnPrefix { row: 2, col: 1, sum: 2 })
        ));
    }

    #[test]
    fn transpose_is_an_asm() {
        let m = vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]];
        let a = Asm::validate(&m).unwrap();
        assert_eq!(Asm::validate(&a.transpose().rows()).unwrap(), a.transpose());
        assert_eq!(a.first_row_one(), 1);
    }
}
