//! Cauchy determinant in quantum brackets.

use crate::error::{Error, Result};
use crate::exact::bracket::{bracket_delta, bracket_numerator};
use crate::exact::matrix::RingMatrix;
use crate::exact::ratfunc::RatFunc;
use crate::exact::ring::Ring;
use crate::six_vertex::{Poly, SpectralParams, Q};

fn angle(p: &SpectralParams, a: &Q) -> Poly {
    bracket_numerator(a, 0, 1, p.scale).expect("differences of parameters lie on the grid")
}

/// `T_{ij} = 1/[x_i − y_j]`.
pub fn cauchy_matrix(p: &SpectralParams) -> Result<RingMatrix<RatFunc<Q>>> {
    let delta = bracket_delta::<Q>(0, 1, 1);
    let n = p.n();
    RingMatrix::try_from_fn(n, n, |i, j| {
        let a = &p.xs[i] - &p.ys[j];
        let den = angle(p, &a);
        if den.is_zero() {
            return Err(Error::Singular(format!("x_{i} = y_{j}")));
        }
        RatFunc::new(delta.clone(), den)
    })
}

/// `Π_{j<i}[x_i−x_j] Π_{i<j}[y_i−y_j] / Π_{i,j}[x_i−y_j]`.
pub fn cauchy_det_closed(p: &SpectralParams) -> Result<RatFunc<Q>> {
    let n = p.n();
    let mut num = bracket_delta::<Q>(0, 1, 1).pow(n as u32);
    let mut den = Poly::one();
    for i in 0..n {
        for j in 0..i {
            num = num.mul_ref(&angle(p, &(&p.xs[i] - &p.xs[j])));
            num = num.mul_ref(&angle(p, &(&p.ys[j] - &p.ys[i])));
        }
        for j in 0..n {
            den = den.mul_ref(&angle(p, &(&p.xs[i] - &p.ys[j])));
        }
    }
    if den.is_zero() {
        return Err(Error::Singular("some x_i equals some y_j".into()));
    }
    RatFunc::new(num, den)
}
