//! Dense matrices over the exact rings, and determinants.
//!
//! Three determinant algorithms are provided:
//!
//! * [`RingMatrix::det_cofactor`]: textbook Laplace expansion along the first
//!   row, exponential, kept as an independent oracle for small sizes.
//! * [`RingMatrix::det_minors`]: division-free expansion memoized over
//!   column subsets, `O(n·2^n)` ring multiplications. Works over any ring.
//! * [`RingMatrix::det_bareiss`]: fraction-free elimination for rings with
//!   exact division; every intermediate value is a minor of the input.
//!
//! [`RingMatrix::det_exact`] picks the right one for each entry type; for
//! rational functions it clears row denominators first so that elimination
//! runs over polynomials.

use std::fmt;

use num_rational::BigRational;

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::ring::{ExactDiv, Field, Ring};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> RingMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    /// Fallible variant of [`RingMatrix::from_fn`].
    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<T>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(RingMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RingMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> RingMatrix<U> {
        RingMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc.add_ref(&self.get(i, k).mul_ref(other.get(k, j))))
        }))
    }

    pub fn scaled(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    /// The square submatrix on the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<T> {
        let n = self.require_square()?;
        fn rec<T: Ring>(m: &RingMatrix<T>, rows: &[usize], cols: &mut Vec<usize>) -> T {
            if rows.is_empty() {
                return T::one();
            }
            let mut acc = T::zero();
            for k in 0..cols.len() {
                let entry = m.get(rows[0], cols[k]);
                if entry.is_zero() {
                    continue;
                }
                let c = cols.remove(k);
                let minor = rec(m, &rows[1..], cols);
                cols.insert(k, c);
                let term = entry.mul_ref(&minor);
                acc = if k % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            acc
        }
        let rows: Vec<usize> = (0..n).collect();
        Ok(rec(self, &rows, &mut (0..n).collect()))
    }

    /// Division-free determinant: sums over partial permutations, memoized on
    /// the set of columns used by the first rows.
    pub fn det_minors(&self) -> Result<T> {
        let n = self.require_square()?;
        if n > 24 {
            return Err(Error::Precondition(format!("minor expansion limited to n <= 24, got {n}")));
        }
        let mut dp: Vec<Option<T>> = vec![None; 1 << n];
        dp[0] = Some(T::one());
        for mask in 0usize..(1 << n) {
            let Some(val) = dp[mask].take() else { continue };
            let row = mask.count_ones() as usize;
            if row == n {
                return Ok(val);
            }
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let entry = self.get(row, c);
                if entry.is_zero() {
                    continue;
                }
                // Inversions: earlier rows sitting in larger columns.
                let inversions = (mask >> (c + 1)).count_ones();
                let mut term = val.mul_ref(entry);
                if inversions % 2 == 1 {
                    term = term.neg_ref();
                }
                let next = mask | (1 << c);
                dp[next] = Some(match dp[next].take() {
                    Some(acc) => acc.add_ref(&term),
                    None => term,
                });
            }
        }
        Ok(dp[(1 << n) - 1].take().unwrap_or_else(T::zero))
    }
}

impl<T: Field> RingMatrix<T> {
    /// Gaussian elimination over a field; the determinant is the signed
    /// product of the pivots.
    pub fn det_gauss(&self) -> Result<T> {
        let n = self.require_square()?;
        let mut a: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut det = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap(k, p);
                det = det.neg_ref();
            }
            det = det.mul_ref(&a[k][k]);
            let inv = a[k][k].inv().ok_or(Error::DivisionByZero)?;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].mul_ref(&inv);
                for j in k + 1..n {
                    let t = factor.mul_ref(&a[k][j]);
                    a[i][j] = a[i][j].sub_ref(&t);
                }
            }
        }
        Ok(det)
    }
}

impl<T: ExactDiv> RingMatrix<T> {
    /// Fraction-free (Bareiss) elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<T> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = a[i][j].mul_ref(&a[k][k]);
                    let rhs = a[i][k].mul_ref(&a[k][j]);
                    a[i][j] = lhs.sub_ref(&rhs).div_exact(&prev)?;
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { det.neg_ref() } else { det })
    }
}

/// Entry types with a preferred exact determinant algorithm.
pub trait DetExact: Ring {
    fn det_of(m: &RingMatrix<Self>) -> Result<Self>;
}

impl DetExact for BigRational {
    fn det_of(m: &RingMatrix<Self>) -> Result<Self> {
        m.det_bareiss()
    }
}

impl DetExact for Cyclotomic {
    fn det_of(m: &RingMatrix<Self>) -> Result<Self> {
        m.det_bareiss()
    }
}

impl<C: Field> DetExact for LaurentPoly<C> {
    fn det_of(m: &RingMatrix<Self>) -> Result<Self> {
        m.det_bareiss()
    }
}

impl<C: Field> DetExact for RatFunc<C> {
    /// Univariate entries are cleared to dense polynomials first. Otherwise
    /// each row is scaled by the product of its distinct
    /// denominators, Bareiss runs over Laurent polynomials and the scaling is
    /// divided back out.
    fn det_of(m: &RingMatrix<Self>) -> Result<Self> {
        if let Some(det) = det_univariate(m)? {
            return Ok(det);
        }
        det_cleared(m)
    }
}

/// Common scale and exponent step of a univariate matrix, or `None` when
/// some entry has two variables.
fn univariate_grid<C: Field>(m: &RingMatrix<RatFunc<C>>) -> Option<(u32, i64)> {
    let polys = m.data.iter().flat_map(|e| [e.numerator(), e.denominator()]);
    let mut scale = 1u32;
    for p in polys.clone() {
        if p.nvars() != 1 && p.terms().keys().any(|e| e[1] != 0) {
            return None;
        }
        scale = num_integer::lcm(scale, p.scale());
    }
    let mut unit = 0i64;
    for p in polys {
        let factor = (scale / p.scale()) as i64;
        for e in p.terms().keys() {
            unit = num_integer::gcd(unit, e[0] * factor);
        }
    }
    Some((scale, unit.max(1)))
}

/// Row clearing and Bareiss over dense polynomials in one grid unit.
///
/// Entry `(i, j)` is `z^{e_ij} N_ij / D_ij`. Row `i` is multiplied by
/// `L_i z^{−m_i}`, with `L_i` the product of the row's distinct
/// denominators and `m_i` the least shift, which leaves polynomial entries.
fn det_univariate<C: Field>(m: &RingMatrix<RatFunc<C>>) -> Result<Option<RatFunc<C>>> {
    let Some((scale, unit)) = univariate_grid(m) else {
        return Ok(None);
    };
    let n = m.require_square()?;
    let align = |p: &LaurentPoly<C>| UPoly::from_laurent(&p.rescaled(scale).with_nvars(1), unit);
    let mut total_shift = 0i64;
    let mut den = UPoly::one();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let e = m.get(i, j);
            let (sn, num) = align(e.numerator())?;
            let (sd, d) = align(e.denominator())?;
            row.push((sn - sd, num, d));
        }
        let Some(min_shift) = row.iter().filter(|(_, p, _)| !p.is_zero()).map(|(s, _, _)| *s).min() else {
            return Ok(Some(RatFunc::zero()));
        };
        let mut dens: Vec<&UPoly<C>> = Vec::new();
        for (_, _, d) in &row {
            if d.degree() != Some(0) && !dens.contains(&d) {
                dens.push(d);
            }
        }
        let l = dens.iter().fold(UPoly::one(), |acc, d| acc.mul_ref(d));
        for (s, p, d) in &row {
            if p.is_zero() {
                data.push(UPoly::zero());
            } else {
                data.push(p.mul_ref(&l.div_exact(d)?).shifted((s - min_shift) as usize));
            }
        }
        total_shift += min_shift;
        den = den.mul_ref(&l);
    }
    let det = RingMatrix { rows: n, cols: n, data }.det_bareiss()?;
    let num = det.to_laurent(total_shift, unit, scale);
    Ok(Some(RatFunc::new(num, den.to_laurent(0, unit, scale))?))
}

fn det_cleared<C: Field>(m: &RingMatrix<RatFunc<C>>) -> Result<RatFunc<C>> {
    {
        let n = m.require_square()?;
        let mut row_scales = Vec::with_capacity(n);
        let mut cleared = Vec::with_capacity(n * n);
        for i in 0..n {
            let mut dens: Vec<&LaurentPoly<C>> = Vec::new();
            for j in 0..n {
                let d = m.get(i, j).denominator();
                if !d.is_one() && !dens.contains(&d) {
                    dens.push(d);
                }
            }
            let scale = dens.iter().fold(LaurentPoly::one(), |acc, d| acc.mul_ref(d));
            for j in 0..n {
                let e = m.get(i, j);
                cleared.push(e.numerator().mul_ref(&scale.divide_exact(e.denominator())?));
            }
            row_scales.push(scale);
        }
        let poly = RingMatrix { rows: n, cols: n, data: cleared };
        let det = poly.det_bareiss()?;
        let den = row_scales.iter().fold(LaurentPoly::one(), |acc, d| acc.mul_ref(d));
        RatFunc::new(det, den)
    }
}

impl<T: DetExact> RingMatrix<T> {
    /// Alias kept for symmetry with the other algorithms.
    pub fn det(&self) -> Result<T> {
        self.det_exact()
    }
}

impl<C: Field> RingMatrix<RatFunc<C>> {
    /// Determinant by row clearing and Bareiss, skipping the univariate path.
    pub fn det_cleared(&self) -> Result<RatFunc<C>> {
        det_cleared(self)
    }
}

impl<T: DetExact> RingMatrix<T> {
    /// Exact determinant with the entry type's preferred algorithm.
    pub fn det_exact(&self) -> Result<T> {
        self.require_square()?;
        T::det_of(self)
    }
}

impl<T: Ring> fmt::Display for RingMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    fn qm(rows: &[&[i64]]) -> RingMatrix<BigRational> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        let one = RingMatrix::from_rows(vec![vec![rat(7, 3)]]).unwrap();
        assert_eq!(one.det_exact().unwrap(), rat(7, 3));
        for n in 0..6 {
            assert_eq!(RingMatrix::<BigRational>::identity(n).det_exact().unwrap(), rat(1, 1));
        }
        let m = qm(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det_exact().unwrap(), rat(-2, 1));
        assert_eq!(m.det_cofactor().unwrap(), rat(-2, 1));
        assert_eq!(m.det_minors().unwrap(), rat(-2, 1));
    }

    #[test]
    fn pivoting_and_singular() {
        let m = qm(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        assert_eq!(m.det_bareiss().unwrap(), rat(-2, 1));
        let s = qm(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(s.det_bareiss().unwrap(), rat(0, 1));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = RingMatrix::from_fn(2, 3, |i, j| rat((i + j) as i64, 1));
        assert!(matches!(m.det_exact(), Err(Error::NonSquare { rows: 2, cols: 3 })));
        assert!(m.det_minors().is_err());
    }

    #[test]
    fn ratfunc_determinant_clears_denominators() {
        type P = LaurentPoly<BigRational>;
        let t = P::var_power(0, &rat(1, 1), 1, 1).unwrap();
        let one = P::one();
        // [[1/(t-1), 1], [1, 1/(t+1)]] has det 1/(t^2-1) - 1
        let e = |n: P, d: P| RatFunc::new(n, d).unwrap();
        let m = RingMatrix::from_rows(vec![
            vec![e(one.clone(), t.sub_ref(&one)), RatFunc::one()],
            vec![RatFunc::one(), e(one.clone(), t.add_ref(&one))],
        ])
        .unwrap();
        let expected = e(one.clone(), t.mul_ref(&t).sub_ref(&one)).sub_ref(&RatFunc::one());
        assert_eq!(m.det_exact().unwrap(), expected);
        assert_eq!(m.det_minors().unwrap(), expected);
    }
}
