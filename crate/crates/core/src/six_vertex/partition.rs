//! Brute-force state sums over all DWBC configurations, and the lemma
//! checks built on them.
//!
//! With `δ = q^{1/2} − q^{−1/2}`, a state with `k` vertices in state 2 has
//! `n² − n − 2k` vertices in states 3–6, so
//! `Z = δ^{−(n²−n)} · Σ_states δ^{2k} · Π numerators`, and the sum on the
//! right is a Laurent polynomial even when the labels are not integers.

use num_rational::BigRational;

use super::state::{IceState, VertexState};
use super::weights::{delta, weight_numerators, Poly, SpectralParams, Q};
use crate::asm::{enumerate_with_bound, to_ice, Asm, DEFAULT_BRUTE_BOUND};
use crate::error::{Error, Result};
use crate::exact::bracket::bracket_ratio;
use crate::exact::ratfunc::RatFunc;
use crate::exact::ring::{rat, Ring};

/// All DWBC states, in ASM enumeration order.
pub fn dwbc_states(n: usize) -> Result<Vec<IceState>> {
    dwbc_states_with_bound(n, DEFAULT_BRUTE_BOUND)
}

pub fn dwbc_states_with_bound(n: usize, bound: usize) -> Result<Vec<IceState>> {
    Ok(enumerate_with_bound(n, bound)?.iter().map(to_ice).collect())
}

/// `Σ_states δ^{2·#2} Π_v numerator(v)` for label monomials `h[i·n + j]`.
///
/// Walks the states cell by cell, sharing prefix products and pruning
/// branches whose partial product vanishes.
pub fn state_sum_numerator(n: usize, h: &[Poly], bound: usize) -> Result<Poly> {
    if n == 0 {
        return Ok(Poly::one());
    }
    if n > bound || n > 31 {
        return Err(Error::BoundExceeded { what: "brute-force state sum", n, bound });
    }
    if h.len() != n * n {
        return Err(Error::DimensionMismatch(format!("{} label monomials for n = {n}", h.len())));
    }
    let d2 = delta().pow(2);
    let tables: Vec<[Poly; 6]> = h
        .iter()
        .map(|m| {
            let mut w = weight_numerators(m);
            w[1] = w[1].mul_ref(&d2);
            w
        })
        .collect();
    let mut total = Poly::zero();
    walk(n, 0, false, 0, &Poly::one(), &tables, &mut total);
    Ok(total)
}

fn walk(n: usize, cell: usize, open: bool, cols: u32, acc: &Poly, tables: &[[Poly; 6]], total: &mut Poly) {
    if cell == n * n {
        *total = total.add_ref(acc);
        return;
    }
    let j = cell % n;
    let bit = 1u32 << j;
    let down = cols & bit != 0;
    let last = j + 1 == n;
    let mut step = |state: VertexState, open_next: bool, cols_next: u32| {
        if last && !open_next {
            return;
        }
        let w = &tables[cell][state as usize];
        if w.is_zero() {
            return;
        }
        let next = acc.mul_ref(w);
        let open_next = open_next && !last;
        walk(n, cell + 1, open_next, cols_next, &next, tables, total);
    };
    if open && down {
        step(VertexState::S2, false, cols & !bit);
    }
    let zero_state = match (open, down) {
        (false, false) => VertexState::S3,
        (true, true) => VertexState::S4,
        (true, false) => VertexState::S5,
        (false, true) => VertexState::S6,
    };
    step(zero_state, open, cols);
    if !open && !down {
        step(VertexState::S1, true, cols | bit);
    }
}

/// `Z(n; X, Y)` given the label monomial `h_{ij} = q^{(x_i − y_j)/2}` of every
/// vertex (which may also carry a second formal variable).
pub fn z_from_line_monomials(n: usize, h: &[Poly], bound: usize) -> Result<RatFunc<Q>> {
    let num = state_sum_numerator(n, h, bound)?;
    let exp = (n * n - n) as u32;
    RatFunc::new(num, delta().pow(exp))
}

fn line_monomials(p: &SpectralParams) -> Vec<Poly> {
    let n = p.n();
    (0..n * n).map(|k| p.line_monomial(k / n, k % n)).collect()
}

/// The state sum `Z(n; X, Y)` by summing over every DWBC state.
pub fn z_brute(p: &SpectralParams) -> Result<RatFunc<Q>> {
    z_brute_with_bound(p, DEFAULT_BRUTE_BOUND)
}

pub fn z_brute_with_bound(p: &SpectralParams, bound: usize) -> Result<RatFunc<Q>> {
    z_from_line_monomials(p.n(), &line_monomials(p), bound)
}

/// The same sum, one explicit state at a time (reference for the walk).
pub fn z_by_states(p: &SpectralParams) -> Result<RatFunc<Q>> {
    let n = p.n();
    let h = line_monomials(p);
    let d2 = delta().pow(2);
    let mut total = Poly::zero();
    for s in dwbc_states(n)? {
        let mut prod = Poly::one();
        for (k, v) in s.states().iter().enumerate() {
            let mut w = weight_numerators(&h[k])[*v as usize].clone();
            if *v == VertexState::S2 {
                w = w.mul_ref(&d2);
            }
            prod = prod.mul_ref(&w);
        }
        total = total.add_ref(&prod);
    }
    RatFunc::new(total, delta().pow((n * n - n) as u32))
}

/// ASMs whose ice state has nonzero weight under `p`.
pub fn contributing_states(p: &SpectralParams) -> Result<Vec<Asm>> {
    let n = p.n();
    let h = line_monomials(p);
    let mut out = Vec::new();
    for a in enumerate_with_bound(n, DEFAULT_BRUTE_BOUND)? {
        let ice = to_ice(&a);
        let vanishes = ice
            .states()
            .iter()
            .enumerate()
            .any(|(k, v)| weight_numerators(&h[k])[*v as usize].is_zero());
        if !vanishes {
            out.push(a);
        }
    }
    Ok(out)
}

fn bracket_q(a: &BigRational, scale: u32) -> Result<RatFunc<Q>> {
    bracket_ratio(a, 0, 1, scale)
}

/// Checks the factorization of `Z` when `x_i = y_j + 1`: the vertex `(i, j)`
/// is forced into state 1, its row into state 5 and its column into state 6,
/// so `Z(n) = −q^{−1/2} Π_{k≠j}[x_i − y_k] Π_{k≠i}[x_k − y_j] Z(n−1)` with
/// row `i` and column `j` removed.
pub fn lemma_recursion_check(p: &SpectralParams, i: usize, j: usize) -> Result<bool> {
    let n = p.n();
    if i >= n || j >= n {
        return Err(Error::Precondition(format!("index ({i}, {j}) outside n = {n}")));
    }
    if p.xs[i] != &p.ys[j] + rat(1, 1) {
        return Err(Error::Precondition(format!("x_{i} != y_{j} + 1")));
    }
    let lhs = z_brute(p)?;
    let mut rhs = RatFunc::from_poly(Poly::var_power(0, &rat(-1, 2), 1, 1)?.neg_ref());
    for k in (0..n).filter(|&k| k != j) {
        rhs = rhs.mul_ref(&bracket_q(&(&p.xs[i] - &p.ys[k]), p.scale)?);
    }
    for k in (0..n).filter(|&k| k != i) {
        rhs = rhs.mul_ref(&bracket_q(&(&p.xs[k] - &p.ys[j]), p.scale)?);
    }
    rhs = rhs.mul_ref(&z_brute(&p.minor(i, j))?);
    Ok(lhs == rhs)
}

/// Result of the degree check in `u = q^{x_0/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    /// Exponents of `u` in `u^n Z`, in whole powers of `u`.
    pub u_exponents: Vec<i64>,
    pub holds: bool,
}

/// Replaces `q^{x_0/2}` by a formal `u` and checks that `u^n Z` involves
/// only `u^0, u^2, …, u^{2(n−1)}`; `ys` and the remaining `xs[1..]` stay
/// rational (`xs[0]` is ignored).
pub fn lemma_degree_check(p: &SpectralParams) -> Result<DegreeReport> {
    let n = p.n();
    let scale = p.scale;
    let mut h = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let m = if i == 0 {
                let u = Poly::var_power(1, &rat(1, 1), 2, scale)?;
                u.mul_ref(&Poly::var_power(0, &(-&p.ys[j] / rat(2, 1)), 2, scale)?)
            } else {
                p.line_monomial(i, j).with_nvars(2)
            };
            h.push(m);
        }
    }
    // δ does not involve u, so the u-exponents of Z are those of the numerator.
    let num = state_sum_numerator(n, &h, DEFAULT_BRUTE_BOUND)?;
    let unit = 2 * num.scale() as i64;
    let mut exps: Vec<i64> = num.terms().keys().map(|e| e[1]).collect();
    exps.sort_unstable();
    exps.dedup();
    let shifted: Vec<i64> = exps
        .iter()
        .map(|e| {
            debug_assert_eq!(e % unit, 0);
            e / unit + n as i64
        })
        .collect();
    let holds = exps.iter().all(|e| e % unit == 0)
        && shifted.iter().all(|e| *e >= 0 && *e <= 2 * (n as i64 - 1) && e % 2 == 0);
    Ok(DegreeReport { u_exponents: shifted, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    fn params(xs: &[(i64, i64)], ys: &[(i64, i64)]) -> SpectralParams {
        SpectralParams::from_i64(xs, ys).unwrap()
    }

    #[test]
    fn single_vertex() {
        let p = params(&[(3, 2)], &[(1, 3)]);
        let z = z_brute(&p).unwrap();
        let expect = Poly::var_power(0, &rat(-7, 12), 1, 6).unwrap().neg_ref();
        assert_eq!(z, RatFunc::from_poly(expect));
    }

    #[test]
    fn walk_matches_state_list() {
        for (xs, ys) in [
            (vec![(3, 1), (4, 1)], vec![(0, 1), (1, 1)]),
            (vec![(1, 2), (5, 3), (-2, 1)], vec![(0, 1), (7, 2), (1, 3)]),
        ] {
            let p = params(&xs, &ys);
            assert_eq!(z_brute(&p).unwrap(), z_by_states(&p).unwrap());
        }
    }

    #[test]
    fn state_counts() {
        assert_eq!(dwbc_states(1).unwrap().len(), 1);
        assert_eq!(dwbc_states(3).unwrap().len(), 7);
        assert_eq!(dwbc_states(4).unwrap().len(), 42);
    }

    #[test]
    fn symmetry_small() {
        let p = params(&[(5, 2), (-1, 3)], &[(0, 1), (2, 1)]);
        let z = z_brute(&p).unwrap();
        assert_eq!(z, z_brute(&p.swap_x(0, 1)).unwrap());
        assert_eq!(z, z_brute(&p.swap_y(0, 1)).unwrap());
    }

    #[test]
    fn recursion_examples() {
        let p = params(&[(4, 3)], &[(1, 3)]);
        assert!(lemma_recursion_check(&p, 0, 0).unwrap());
        let p = params(&[(5, 2), (7, 3)], &[(3, 2), (-1, 1)]);
        assert!(lemma_recursion_check(&p, 0, 0).unwrap());
        let p = params(&[(1, 2), (3, 1), (2, 3)], &[(5, 1), (-2, 3), (2, 1)]);
        assert!(lemma_recursion_check(&p, 1, 2).unwrap());
        assert!(lemma_recursion_check(&p, 0, 0).is_err());
    }

    #[test]
    fn corner_specialization_keeps_corner_states() {
        let p = params(&[(4, 1), (1, 2), (5, 3)], &[(3, 1), (-1, 1), (1, 3)]);
        let got = contributing_states(&p).unwrap();
        let expect: Vec<Asm> = enumerate_with_bound(3, 6).unwrap().into_iter().filter(|a| a.get(0, 0) == 1).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn degree_bound() {
        let r = lemma_degree_check(&params(&[(0, 1)], &[(1, 2)])).unwrap();
        assert_eq!(r.u_exponents, vec![0]);
        assert!(r.holds);
        let r = lemma_degree_check(&params(&[(0, 1), (5, 2), (1, 3)], &[(1, 2), (-4, 1), (2, 1)])).unwrap();
        assert!(r.holds, "{:?}", r.u_exponents);
    }

    #[test]
    fn top_row_has_one_state_one() {
        for s in dwbc_states(4).unwrap() {
            let ones = (0..4).filter(|&j| s.get(0, j) == VertexState::S1).count();
            assert_eq!(ones, 1);
        }
    }
}
