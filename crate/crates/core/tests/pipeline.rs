use num_bigint::BigInt;

use squareice::asm::{enumerate, from_ice, to_ice};
use squareice::formulas::{b_chain, formula_at};
use squareice::ik::{epsilon_chain, ik_z, IkInstance};
use squareice::six_vertex::{parse_ice, transfer_count, write_ice, z_brute, SpectralParams};

#[test]
fn ice_files_round_trip_to_asms() {
    let asms = enumerate(3).unwrap();
    let ice: Vec<_> = asms.iter().map(to_ice).collect();
    let parsed = parse_ice(&write_ice(&ice)).unwrap();
    assert_eq!(parsed, ice);
    let back: Vec<_> = parsed.iter().map(from_ice).collect();
    assert_eq!(back, asms);
}

#[test]
fn three_routes_to_the_same_numbers() {
    for n in 1..=5 {
        let poly = transfer_count(n).unwrap();
        for x in 1..=3u8 {
            let chain = epsilon_chain(n, x).unwrap().a_value;
            assert_eq!(chain, poly.eval(&BigInt::from(x)), "n={n} x={x}");
            assert_eq!(chain, formula_at(n, x).unwrap());
        }
    }
}

#[test]
fn determinant_and_state_sum_agree_on_fixed_parameters() {
    let p = SpectralParams::from_i64(&[(5, 2), (-1, 3), (4, 1)], &[(1, 6), (-2, 1), (7, 3)]).unwrap();
    assert_eq!(ik_z(&IkInstance::new(p.clone()).unwrap()).unwrap(), z_brute(&p).unwrap());
}

#[test]
fn b_chain_values_at_one() {
    let c = b_chain(8).unwrap();
    let at_one: Vec<BigInt> = c.polys().iter().map(|b| b.eval(&BigInt::from(1))).collect();
    let want: Vec<BigInt> = [1, 1, 1, 7, 3, 143, 26, 8398].into_iter().map(BigInt::from).collect();
    assert_eq!(at_one, want);
}
