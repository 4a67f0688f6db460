use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use squareice::asm::{from_ice, parse_asms, to_ice, write_asms, Asm};
use squareice::exact::bracket::bracket_ratio;
use squareice::exact::{
    bracket, poly_divide_x, rat, Cyclotomic, Field, LaurentPoly, RatFunc, Ring, RingMatrix, UFrac, UPoly, XPolynomial,
};
use squareice::six_vertex::{z_brute, SpectralParams};

type P = LaurentPoly<BigRational>;

fn laurent() -> impl Strategy<Value = P> {
    prop::collection::vec((-6i64..=6, -3i64..=3), 0..5)
        .prop_map(|terms| P::from_terms(1, 1, terms.into_iter().map(|(e, c)| ([e, 0], rat(c, 1)))))
}

fn q_matrix(n: usize) -> impl Strategy<Value = RingMatrix<BigRational>> {
    prop::collection::vec((-5i64..=5, 1i64..=3), n * n).prop_map(move |v| {
        RingMatrix::from_fn(n, n, |i, j| {
            let (p, q) = v[i * n + j];
            rat(p, q)
        })
    })
}

fn xpoly() -> impl Strategy<Value = XPolynomial> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| XPolynomial::from_i64(&c))
}

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-3i64..=3, 1..6)
        .prop_map(move |c| Cyclotomic::from_coeffs(order, c.into_iter().map(|k| rat(k, 1)).collect()))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_odd(a in -8i64..=8) {
        let pos: P = bracket(&rat(a, 1), 1).unwrap();
        let neg: P = bracket(&rat(-a, 1), 1).unwrap();
        prop_assert_eq!(neg, pos.neg_ref());
    }

    #[test]
    fn bracket_addition(a in -6i64..=6, b in -6i64..=6, d in 1i64..=3) {
        // [a+b] = q^{b/2}[a] + q^{−a/2}[b]
        let (a, b) = (rat(a, d), rat(b, d));
        let scale = d as u32;
        let br = |v: &BigRational| bracket_ratio::<BigRational>(v, 0, 1, scale).unwrap();
        let mono = |v: BigRational| RatFunc::from_poly(P::var_power(0, &(v / rat(2, 1)), 1, scale).unwrap());
        let lhs = br(&(&a + &b));
        let rhs = mono(b.clone()).mul_ref(&br(&a)).add_ref(&mono(-a.clone()).mul_ref(&br(&b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&b).sub_ref(&b), a.clone());
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul_ref(&b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn xpoly_division(a in xpoly(), b in xpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(poly_divide_x(&a.mul_ref(&b), &b).unwrap(), a);
    }

    #[test]
    fn cyclotomic_field(a in cyclotomic(12), b in cyclotomic(8)) {
        if let Some(inv) = a.inv() {
            prop_assert!(a.mul_ref(&inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).sub_ref(&a), b);
    }

    #[test]
    fn determinant_algorithms_agree(m in q_matrix(4)) {
        let d = m.det_cofactor().unwrap();
        prop_assert_eq!(m.det_minors().unwrap(), d.clone());
        prop_assert_eq!(m.det_bareiss().unwrap(), d.clone());
        prop_assert_eq!(m.det_gauss().unwrap(), d.clone());
        prop_assert_eq!(m.transpose().det_exact().unwrap(), d);
    }

    #[test]
    fn determinant_is_multiplicative(a in q_matrix(3), b in q_matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det_exact().unwrap(), a.det_exact().unwrap().mul_ref(&b.det_exact().unwrap()));
    }

    #[test]
    fn polynomial_matrices(entries in prop::collection::vec(laurent(), 9)) {
        let m = RingMatrix::from_fn(3, 3, |i, j| entries[i * 3 + j].clone());
        prop_assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn ufrac_field(a in prop::collection::vec(-3i64..=3, 1..4), b in prop::collection::vec(-3i64..=3, 1..4)) {
        let up = |v: &[i64]| UPoly::new(v.iter().map(|&k| rat(k, 1)).collect());
        prop_assume!(!up(&b).is_zero());
        let f = UFrac::new(up(&a), up(&b)).unwrap();
        let g = UFrac::new(up(&b), up(&a).add_ref(&UPoly::one())).unwrap_or_else(|_| UFrac::one());
        prop_assert_eq!(f.add_ref(&g).sub_ref(&g), f.clone());
        if let Some(inv) = f.inv() {
            prop_assert!(f.mul_ref(&inv).is_one());
        }
    }

    #[test]
    fn permutations_are_asms(perm in permutation(5)) {
        let a = Asm::from_permutation(&perm);
        prop_assert_eq!(a.negative_count(), 0);
        prop_assert!(Asm::validate(&a.rows()).is_ok());
        prop_assert_eq!(from_ice(&to_ice(&a)), a.clone());
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn state_sum_is_symmetric(xs in prop::collection::vec((-6i64..=6, 1i64..=2), 2), ys in prop::collection::vec((-6i64..=6, 1i64..=2), 2)) {
        let p = SpectralParams::from_i64(&xs, &ys).unwrap();
        let z = z_brute(&p).unwrap();
        prop_assert_eq!(z_brute(&p.swap_x(0, 1)).unwrap(), z.clone());
        prop_assert_eq!(z_brute(&p.swap_y(0, 1)).unwrap(), z);
    }
}

#[test]
fn asm_text_round_trip_over_all_of_size_four() {
    let all = squareice::asm::enumerate(4).unwrap();
    let text = write_asms(&all);
    assert_eq!(parse_asms(&text).unwrap(), all);
    for a in &all {
        assert_eq!(from_ice(&to_ice(a)), *a);
        assert!(Asm::validate(&a.transpose().rows()).is_ok());
    }
}

#[test]
fn x_enumeration_counts_negative_entries() {
    let p = squareice::asm::x_enumerate_brute(5).unwrap();
    let by_hand = squareice::asm::enumerate(5).unwrap().iter().fold(vec![0i64; 7], |mut acc, a| {
        acc[a.negative_count()] += 1;
        acc
    });
    assert_eq!(p, XPolynomial::new(by_hand.into_iter().map(BigInt::from).collect()));
}
