//! Vertex weights `(−q^{−v/2}, −q^{v/2}, [v−1], [v−1], [v], [v])` and
//! rational spectral parameters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::state::VertexState;
use crate::error::{Error, Result};
use crate::exact::bracket::{bracket_delta, bracket_ratio};
use crate::exact::laurent::LaurentPoly;
use crate::exact::ratfunc::RatFunc;
use crate::exact::ring::{rat, Ring};

pub type Q = BigRational;
pub type Poly = LaurentPoly<Q>;

/// Weights of the six states at one label value, as functions of `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightScheme {
    pub v: BigRational,
    pub scale: u32,
    weights: [RatFunc<Q>; 6],
}

impl WeightScheme {
    pub fn weight(&self, s: VertexState) -> &RatFunc<Q> {
        &self.weights[s as usize]
    }
}

/// The six weights at label `v` on the grid of `scale`.
pub fn vertex_weights(v: &BigRational, scale: u32) -> Result<WeightScheme> {
    let half = v / rat(2, 1);
    let plus = Poly::var_power(0, &half, 1, scale)?;
    let minus = Poly::var_power(0, &-half, 1, scale)?;
    let shifted = bracket_ratio(&(v - rat(1, 1)), 0, 1, scale)?;
    let plain = bracket_ratio(v, 0, 1, scale)?;
    Ok(WeightScheme {
        v: v.clone(),
        scale,
        weights: [
            RatFunc::from_poly(minus.neg_ref()),
            RatFunc::from_poly(plus.neg_ref()),
            shifted.clone(),
            shifted,
            plain.clone(),
            plain,
        ],
    })
}

/// Row parameters `x_i` and column parameters `y_j`, with a common exponent
/// scale on which every `q^{(x_i − y_j)/2}` is representable.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralParams {
    pub xs: Vec<BigRational>,
    pub ys: Vec<BigRational>,
    pub scale: u32,
}

impl SpectralParams {
    pub fn new(xs: Vec<BigRational>, ys: Vec<BigRational>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::DimensionMismatch(format!("{} row and {} column parameters", xs.len(), ys.len())));
        }
        let lcm = xs.iter().chain(&ys).fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
        let scale = lcm
            .to_u32()
            .ok_or_else(|| Error::Precondition("parameter denominators too large".into()))?;
        Ok(SpectralParams { xs, ys, scale })
    }

    pub fn from_i64(xs: &[(i64, i64)], ys: &[(i64, i64)]) -> Result<Self> {
        Self::new(xs.iter().map(|&(p, q)| rat(p, q)).collect(), ys.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn label(&self, i: usize, j: usize) -> BigRational {
        &self.xs[i] - &self.ys[j]
    }

    /// `q^{(x_i − y_j)/2}`.
    pub fn line_monomial(&self, i: usize, j: usize) -> Poly {
        Poly::var_power(0, &(self.label(i, j) / rat(2, 1)), 1, self.scale).expect("scale covers every label")
    }

    /// Drops row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> SpectralParams {
        let mut xs = self.xs.clone();
        let mut ys = self.ys.clone();
        xs.remove(i);
        ys.remove(j);
        SpectralParams { xs, ys, scale: self.scale }
    }

    pub fn swap_x(&self, a: usize, b: usize) -> SpectralParams {
        let mut p = self.clone();
        p.xs.swap(a, b);
        p
    }

    pub fn swap_y(&self, a: usize, b: usize) -> SpectralParams {
        let mut p = self.clone();
        p.ys.swap(a, b);
        p
    }
}

/// Numerators of the weights at a vertex whose label monomial is `h = q^{v/2}`
/// (any shape: `h` may also involve the second variable). The weights are
/// these divided by `δ` for states 3–6 and by 1 for states 1 and 2.
pub fn weight_numerators(h: &Poly) -> [Poly; 6] {
    let hinv = h.inv_monomial().expect("label monomial");
    let root = Poly::var_power(0, &rat(1, 2), 1, 1).expect("q^{1/2}");
    let rinv = root.inv_monomial().expect("monomial");
    let shifted = h.mul_ref(&rinv).sub_ref(&hinv.mul_ref(&root));
    let plain = h.sub_ref(&hinv);
    [hinv.neg_ref(), h.neg_ref(), shifted.clone(), shifted, plain.clone(), plain]
}

/// `δ = q^{1/2} − q^{−1/2}`.
pub fn delta() -> Poly {
    bracket_delta(0, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bracket::bracket;

    #[test]
    fn weight_examples() {
        let w = vertex_weights(&rat(1, 1), 1).unwrap();
        assert_eq!(w.weight(VertexState::S1), &RatFunc::from_poly(Poly::var_power(0, &rat(-1, 2), 1, 1).unwrap().neg_ref()));
        assert!(w.weight(VertexState::S3).is_zero());
        let w = vertex_weights(&rat(5, 1), 1).unwrap();
        assert_eq!(w.weight(VertexState::S5).to_laurent().unwrap(), bracket::<Q>(&rat(5, 1), 1).unwrap());
        assert_eq!(w.weight(VertexState::S4).to_laurent().unwrap(), bracket::<Q>(&rat(4, 1), 1).unwrap());
    }

    #[test]
    fn numerators_match_weights() {
        for v in [rat(3, 2), rat(-2, 3), rat(4, 1)] {
            let scale = v.denom().to_u32().unwrap();
            let w = vertex_weights(&v, scale).unwrap();
            let h = Poly::var_power(0, &(&v / rat(2, 1)), 1, scale).unwrap();
            let d = delta();
            let nums = weight_numerators(&h);
            for s in VertexState::ALL {
                let den = if (s as usize) < 2 { Poly::one() } else { d.clone() };
                assert_eq!(&RatFunc::new(nums[s as usize].clone(), den).unwrap(), w.weight(s));
            }
        }
    }

    #[test]
    fn params_scale() {
        let p = SpectralParams::from_i64(&[(1, 2), (2, 3)], &[(0, 1), (5, 1)]).unwrap();
        assert_eq!(p.scale, 6);
        assert!(SpectralParams::from_i64(&[(1, 1)], &[]).is_err());
    }
}
