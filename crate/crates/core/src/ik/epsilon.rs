//! The state sum on a line of spectral parameters `x_i = 1/2 + r_i ε`,
//! `y_j = c_j ε`, with `q^{1/2}` a root of unity and `s = q^ε` formal.
//!
//! Write `ρ = q^{1/4}` and `w = s^{1/2}`. Then
//! `⟨1/2 + gε⟩ = ρ w^g − ρ^{−1} w^{−g}` and `δ_q = ρ² − ρ^{−2}`, while
//! `x = 2 + ρ² + ρ^{−2}` is the weight of a `−1`. Every polynomial here is in
//! the single variable `s`, with `w^g` stored as `s^{g/2}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::bracket::{bracket_limit_at_one, BracketProduct, BracketVar};
use crate::exact::cyclotomic::{cyclotomic_embed, Cyclotomic, RootOfUnity};
use crate::exact::laurent::LaurentPoly;
use crate::exact::matrix::{DetExact, RingMatrix};
use crate::exact::ratfunc::RatFunc;
use crate::exact::ring::{common_denominator, rat, Field, Ring};
use crate::six_vertex::{Poly, Q};

type CPoly = LaurentPoly<Cyclotomic>;

/// Offsets `r_i` (rows) and `c_j` (columns); rows pairwise distinct,
/// columns pairwise distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonGrid {
    rows: Vec<Q>,
    cols: Vec<Q>,
}

impl EpsilonGrid {
    pub fn new(rows: Vec<Q>, cols: Vec<Q>) -> Result<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::DimensionMismatch(format!("{} row offsets, {} column offsets", rows.len(), cols.len())));
        }
        for v in [&rows, &cols] {
            for i in 0..v.len() {
                if v[..i].contains(&v[i]) {
                    return Err(Error::Singular(format!("repeated offset {}", v[i])));
                }
            }
        }
        Ok(EpsilonGrid { rows, cols })
    }

    /// `r_i = i + 1`, `c_j = −j`, so that `r_i − c_j = i + j + 1`.
    pub fn standard(n: usize) -> Self {
        let rows = (0..n as i64).map(|i| rat(i + 1, 1)).collect();
        let cols = (0..n as i64).map(|j| rat(-j, 1)).collect();
        EpsilonGrid { rows, cols }
    }

    /// `r_i = c_i = f_i` with `f_i = i − (n−1)/2`, which satisfies
    /// `f_{n−1−i} = −f_i`.
    pub fn symmetric(n: usize) -> Self {
        let f: Vec<Q> = (0..n as i64).map(|i| rat(2 * i - (n as i64 - 1), 2)).collect();
        EpsilonGrid { rows: f.clone(), cols: f }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Q] {
        &self.rows
    }

    pub fn cols(&self) -> &[Q] {
        &self.cols
    }

    pub fn gap(&self, i: usize, j: usize) -> Q {
        &self.rows[i] - &self.cols[j]
    }

    /// Grid scale on which every `w^{g}` with `g` a difference of offsets
    /// is representable in `s`.
    pub fn scale(&self) -> u32 {
        let d = common_denominator(self.rows.iter().chain(&self.cols));
        u32::try_from(d).expect("offset denominators fit in u32")
    }

    /// Whether reversing the index order negates both offset lists.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| self.rows[n - 1 - i] == -&self.rows[i] && self.cols[n - 1 - i] == -&self.cols[i])
    }

    fn w_power<C: Ring>(&self, g: &Q) -> LaurentPoly<C> {
        LaurentPoly::var_power(0, &(g / rat(2, 1)), 1, self.scale()).expect("offsets lie on the grid")
    }
}

/// How the weight `x` enters [`general_x_matrix`].
#[derive(Clone, Debug, PartialEq)]
pub enum XSpec {
    /// `x` fixed, `s` formal.
    Value(Q),
    /// `x` formal (variable 0, integral powers), `s` fixed to a rational.
    Formal { s: Q },
}

/// `M_{ij} = (x² − 4x) / (s^{g} + 2 − x + s^{−g})` with `g = r_i − c_j`.
pub fn general_x_matrix(grid: &EpsilonGrid, x: &XSpec) -> Result<RingMatrix<RatFunc<Q>>> {
    let n = grid.n();
    match x {
        XSpec::Value(x) => {
            let num = Poly::constant(x * x - rat(4, 1) * x);
            let mid = Poly::constant(rat(2, 1) - x);
            RingMatrix::try_from_fn(n, n, |i, j| {
                let g = grid.gap(i, j);
                let s = |e: &Q| Poly::var_power(0, e, 1, grid.scale()).expect("offsets lie on the grid");
                let den = s(&g) + mid.clone() + s(&-g);
                if den.is_zero() {
                    return Err(Error::Singular(format!("denominator of M_{i}{j} vanishes")));
                }
                RatFunc::new(num.clone(), den)
            })
        }
        XSpec::Formal { s } => {
            if s.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let xv = Poly::var_power(0, &rat(1, 1), 1, 1)?;
            let num = xv.mul_ref(&xv) - xv.scale_coeffs(&rat(4, 1));
            RingMatrix::try_from_fn(n, n, |i, j| {
                let g = grid.gap(i, j);
                if !g.is_integer() {
                    return Err(Error::NotRational(format!("s^({g}) at s = {s}")));
                }
                let k = i32::try_from(g.to_integer()).map_err(|_| Error::Precondition("offset too large".into()))?;
                let c = s.pow(k) + s.pow(-k) + rat(2, 1);
                let den = Poly::constant(c) - xv.clone();
                RatFunc::new(num.clone(), den)
            })
        }
    }
}

/// Determinants of the blocks of `M` on the `±1` eigenspaces of the
/// antidiagonal permutation `P`. Requires `P M P = M`; then
/// `det M = even · odd`.
pub fn antidiagonal_block_det<T: DetExact>(m: &RingMatrix<T>) -> Result<(T, T)> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::NonSquare { rows: n, cols: m.cols() });
    }
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) != m.get(n - 1 - i, n - 1 - j) {
                return Err(Error::Precondition(format!("P M P != M at ({i}, {j})")));
            }
        }
    }
    let h = n / 2;
    let mid = (n % 2 == 1).then_some(h);
    let ne = h + usize::from(mid.is_some());
    // Coordinates in the basis e_i ± e_{n−1−i} (i < h), plus e_mid.
    let even = RingMatrix::from_fn(ne, ne, |i, j| {
        if j == h {
            m.get(i, h).clone()
        } else {
            m.get(i, j).add_ref(m.get(i, n - 1 - j))
        }
    });
    let odd = RingMatrix::from_fn(h, h, |i, j| m.get(i, j).sub_ref(m.get(i, n - 1 - j)));
    Ok((even.det_exact()?, odd.det_exact()?))
}

/// `ρ = q^{1/4}` for the supported weights: `ζ_6`, `ζ_8`, `ζ_12` give
/// `x = 1, 2, 3`.
pub fn chain_rho(x: u8) -> Result<Cyclotomic> {
    let order = match x {
        1 => 6,
        2 => 8,
        3 => 12,
        _ => return Err(Error::Precondition(format!("no root of unity configured for x = {x}"))),
    };
    cyclotomic_embed(RootOfUnity::new(order, 1), 24)
}

/// `2 + ρ² + ρ^{−2}`.
pub fn weight_of_rho(rho: &Cyclotomic) -> Result<Cyclotomic> {
    let r2 = rho.powi(2)?;
    Ok(Cyclotomic::from_int(2).add_ref(&r2).add_ref(&r2.inv().ok_or(Error::DivisionByZero)?))
}

fn cmono(grid: &EpsilonGrid, c: &Cyclotomic, g: &Q) -> CPoly {
    grid.w_power::<Cyclotomic>(g).scale_coeffs(c)
}

/// The determinant formula evaluated on the grid: a Laurent polynomial in
/// `s` over `Q(ζ_24)`.
pub fn z_eps_determinant(grid: &EpsilonGrid, rho: &Cyclotomic) -> Result<CPoly> {
    let n = grid.n();
    let rho_inv = rho.inv().ok_or(Error::DivisionByZero)?;
    let delta = rho.powi(2)?.sub_ref(&rho.powi(-2)?);
    if delta.is_zero() {
        return Err(Error::Singular("q = 1".into()));
    }
    let d2 = CPoly::constant(delta.mul_ref(&delta));
    let zero = rat(0, 1);
    let pair = |i: usize, j: usize| {
        let g = grid.gap(i, j);
        let up = cmono(grid, rho, &g) - cmono(grid, &rho_inv, &-&g);
        let down = cmono(grid, &rho_inv, &g) - cmono(grid, rho, &-&g);
        up.mul_ref(&down)
    };
    let m = RingMatrix::try_from_fn(n, n, |i, j| RatFunc::new(d2.clone(), pair(i, j)))?;
    let det = m.det_exact()?;

    let sign = if n % 2 == 0 { Cyclotomic::one() } else { Cyclotomic::one().neg_ref() };
    let mut num = cmono(grid, &sign.mul_ref(&rho_inv.pow(n as u32)), &zero);
    for i in 0..n {
        num = num.mul_ref(&grid.w_power(&(&grid.cols[i] - &grid.rows[i])));
        for j in 0..n {
            num = num.mul_ref(&pair(i, j));
        }
    }
    let mut den = CPoly::constant(delta.pow((n * n + n) as u32));
    for i in 0..n {
        for j in 0..i {
            let gx = &grid.rows[i] - &grid.rows[j];
            den = den.mul_ref(&(grid.w_power(&gx) - grid.w_power(&-gx)));
            let gy = &grid.cols[j] - &grid.cols[i];
            den = den.mul_ref(&(grid.w_power(&gy) - grid.w_power(&-gy)));
        }
    }
    RatFunc::new(num.mul_ref(det.numerator()), den.mul_ref(det.denominator()))?.to_laurent()
}

/// The product form of the state sum at `x = 1` on the standard grid,
/// with `q^{1/4} = ζ_6`:
/// `(−1)^n q^{−n/4} s^{−n²/2} Π_{j<i} [3(i−j)]/(3[i−j]) ·
///  Π_i Π_{k=1}^{3i+1}[k] / Π_{k=1}^{n+i}[k]`, brackets in `s`.
pub fn z_half_eps_product(n: usize) -> Result<BracketProduct> {
    let rho = chain_rho(1)?;
    let sign = if n % 2 == 0 { Cyclotomic::one() } else { Cyclotomic::one().neg_ref() };
    let thirds = Cyclotomic::from_rational(rat(1, 3)).pow((n * n.saturating_sub(1) / 2) as u32);
    let mut b = BracketProduct::new(sign.mul_ref(&rho.powi(-(n as i64))?).mul_ref(&thirds))
        .times_monomial(&rat(-((n * n) as i64), 2));
    let n = n as i64;
    for i in 0..n {
        for j in 0..i {
            b = b.times_bracket(&rat(3 * (i - j), 1), 1, BracketVar::S).times_bracket(&rat(i - j, 1), -1, BracketVar::S);
        }
        for k in 1..=3 * i + 1 {
            b = b.times_bracket(&rat(k, 1), 1, BracketVar::S);
        }
        for k in 1..=n + i {
            b = b.times_bracket(&rat(k, 1), -1, BracketVar::S);
        }
    }
    Ok(b)
}

/// `A(n;x) = [1/2]^{n−n²} (−1)^n q^{n/4} Z` with `[1/2] = 1/(ρ + ρ^{−1})`.
pub fn ean_normalize(n: usize, z: &Cyclotomic, x: u8) -> Result<BigInt> {
    let rho = chain_rho(x)?;
    let half_inv = rho.add_ref(&rho.inv().ok_or(Error::DivisionByZero)?);
    let sign = if n % 2 == 0 { Cyclotomic::one() } else { Cyclotomic::one().neg_ref() };
    let value = half_inv.pow((n * n - n) as u32).mul_ref(&sign).mul_ref(&rho.pow(n as u32)).mul_ref(z);
    let r = value.to_rational().ok_or_else(|| Error::NotRational(value.to_string()))?;
    if !r.is_integer() {
        return Err(Error::NotRational(format!("{r} is not an integer")));
    }
    Ok(r.to_integer())
}

/// One evaluation of the chain `Z_ε → Z_{1/2} → A(n;x)`.
#[derive(Clone, Debug)]
pub struct ChainResult {
    pub n: usize,
    pub x: u8,
    /// The state sum on the standard grid.
    pub z_eps: CPoly,
    /// Its value at `s = 1`.
    pub z_at_one: Cyclotomic,
    /// At `x = 1`: whether `z_eps` equals the product form exactly and the
    /// bracket limit agrees with `z_at_one`.
    pub product_identity: Option<bool>,
    pub a_value: BigInt,
}

pub fn epsilon_chain(n: usize, x: u8) -> Result<ChainResult> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let grid = EpsilonGrid::standard(n);
    let rho = chain_rho(x)?;
    let z_eps = z_eps_determinant(&grid, &rho)?;
    let z_at_one = z_eps.evaluate_at_one();
    let product_identity = if x == 1 {
        let b = z_half_eps_product(n)?;
        let expanded = b.expand(grid.scale())?;
        let limit = bracket_limit_at_one(&b)?;
        Some(RatFunc::from_poly(z_eps.clone()) == expanded && limit == z_at_one)
    } else {
        None
    };
    let a_value = ean_normalize(n, &z_at_one, x)?;
    Ok(ChainResult { n, x, z_eps, z_at_one, product_identity, a_value })
}
