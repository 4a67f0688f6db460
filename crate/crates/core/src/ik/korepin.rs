//! The determinant formula for the DWBC state sum with formal `q`.
//!
//! `Z = (−1)^n Π_i q^{(y_i−x_i)/2} · Π_{i,j}[x_i−y_j][x_i−y_j−1]
//!      / (Π_{j<i}[x_i−x_j] Π_{i<j}[y_i−y_j]) · det M`,
//! `M_{ij} = 1/([x_i−y_j][x_i−y_j−1])`.

use crate::error::{Error, Result};
use crate::exact::bracket::{bracket_delta, bracket_numerator};
use crate::exact::matrix::RingMatrix;
use crate::exact::ratfunc::RatFunc;
use crate::exact::ring::{rat, Ring};
use crate::six_vertex::{Poly, SpectralParams, Q};

/// Parameters for which every bracket in the formula is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct IkInstance {
    params: SpectralParams,
}

impl IkInstance {
    pub fn new(params: SpectralParams) -> Result<Self> {
        let n = params.n();
        for i in 0..n {
            for j in 0..n {
                let a = params.label(i, j);
                if a == rat(0, 1) || a == rat(1, 1) {
                    return Err(Error::Singular(format!("x_{i} - y_{j} = {a}")));
                }
            }
            for j in 0..i {
                if params.xs[i] == params.xs[j] || params.ys[i] == params.ys[j] {
                    return Err(Error::Singular(format!("repeated parameter at indices {j}, {i}")));
                }
            }
        }
        Ok(IkInstance { params })
    }

    pub fn params(&self) -> &SpectralParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    fn angle(&self, a: &Q) -> Poly {
        bracket_numerator(a, 0, 1, self.params.scale).expect("parameters lie on the grid")
    }

    /// `⟨a⟩⟨a − 1⟩` for the label `a` of vertex `(i, j)`; equals
    /// `δ² [a][a − 1]`.
    fn pair(&self, i: usize, j: usize) -> Poly {
        let a = self.params.label(i, j);
        self.angle(&a).mul_ref(&self.angle(&(a - rat(1, 1))))
    }
}

/// `M_{ij} = δ² / (⟨a⟩⟨a−1⟩)`.
pub fn ik_matrix(inst: &IkInstance) -> Result<RingMatrix<RatFunc<Q>>> {
    let d2 = bracket_delta::<Q>(0, 1, 1).pow(2);
    let n = inst.n();
    RingMatrix::try_from_fn(n, n, |i, j| RatFunc::new(d2.clone(), inst.pair(i, j)))
}

pub fn ik_z(inst: &IkInstance) -> Result<RatFunc<Q>> {
    let p = inst.params();
    let n = inst.n();
    let delta = bracket_delta::<Q>(0, 1, 1);
    let mut num = if n % 2 == 0 { Poly::one() } else { Poly::one().neg_ref() };
    for i in 0..n {
        num = num.mul_ref(&Poly::var_power(0, &((&p.ys[i] - &p.xs[i]) / rat(2, 1)), 1, p.scale)?);
    }
    for i in 0..n {
        for j in 0..n {
            num = num.mul_ref(&inst.pair(i, j));
        }
    }
    let mut den = delta.pow((2 * n * n - n * (n - 1)) as u32);
    for i in 0..n {
        for j in 0..i {
            den = den.mul_ref(&inst.angle(&(&p.xs[i] - &p.xs[j])));
            den = den.mul_ref(&inst.angle(&(&p.ys[j] - &p.ys[i])));
        }
    }
    let det = ik_matrix(inst)?.det_exact()?;
    RatFunc::new(num, den).map(|pre| pre.mul_ref(&det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::six_vertex::z_brute;

    fn inst(xs: &[(i64, i64)], ys: &[(i64, i64)]) -> IkInstance {
        IkInstance::new(SpectralParams::from_i64(xs, ys).unwrap()).unwrap()
    }

    #[test]
    fn one_by_one() {
        let i = inst(&[(2, 1)], &[(0, 1)]);
        let m = ik_matrix(&i).unwrap();
        // 1/([2][1]) = 1/(q^{1/2} + q^{-1/2})
        let two = Poly::var_power(0, &rat(1, 2), 1, 1).unwrap() + Poly::var_power(0, &rat(-1, 2), 1, 1).unwrap();
        assert_eq!(m.get(0, 0), &RatFunc::new(Poly::one(), two).unwrap());
        let z = ik_z(&inst(&[(5, 3)], &[(1, 2)])).unwrap();
        assert_eq!(z, RatFunc::from_poly(Poly::var_power(0, &rat(-7, 12), 1, 6).unwrap().neg_ref()));
    }

    #[test]
    fn matches_brute_force() {
        for (xs, ys) in [
            (vec![(3, 1), (4, 1)], vec![(0, 1), (1, 1)]),
            (vec![(1, 2), (7, 3), (-2, 1)], vec![(3, 1), (1, 3), (-5, 2)]),
        ] {
            let i = inst(&xs, &ys);
            assert_eq!(ik_z(&i).unwrap(), z_brute(i.params()).unwrap());
        }
    }

    #[test]
    fn singular_instances_are_rejected() {
        let p = SpectralParams::from_i64(&[(1, 1)], &[(0, 1)]).unwrap();
        assert!(matches!(IkInstance::new(p), Err(Error::Singular(_))));
        let p = SpectralParams::from_i64(&[(5, 1), (5, 1)], &[(0, 1), (1, 2)]).unwrap();
        assert!(IkInstance::new(p).is_err());
    }
}
