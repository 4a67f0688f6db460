//! The bijection between ASMs and DWBC square-ice states.

use super::Asm;
use crate::six_vertex::{IceState, VertexState};

/// Edge bits are row and column partial sums of the matrix.
pub fn to_ice(a: &Asm) -> IceState {
    let n = a.n();
    let mut col = vec![0u8; n];
    let mut states = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut row = 0u8;
        for (j, c) in col.iter_mut().enumerate() {
            let v = a.get(i, j);
            let right = (row as i8 + v) as u8;
            let bottom = (*c as i8 + v) as u8;
            states.push(VertexState::from_edges([row, right, *c, bottom]).expect("ASM partial sums are 0 or 1"));
            row = right;
            *c = bottom;
        }
    }
    IceState::from_trusted(n, states)
}

pub fn from_ice(s: &IceState) -> Asm {
    let n = s.n();
    Asm::from_trusted(n, s.states().iter().map(|v| v.asm_entry()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::enumerate;

    #[test]
    fn round_trip_and_boundary() {
        for n in 1..=4 {
            for a in enumerate(n).unwrap() {
                let ice = to_ice(&a);
                assert_eq!(IceState::new(n, ice.states().to_vec()).as_ref(), Ok(&ice));
                assert_eq!(from_ice(&ice), a);
            }
        }
    }

    #[test]
    fn single_vertex() {
        assert_eq!(to_ice(&Asm::identity(1)).states(), &[VertexState::S1]);
    }

    #[test]
    fn state_balance() {
        for a in enumerate(5).unwrap() {
            let c = to_ice(&a).state_counts();
            assert_eq!(c[0] - c[1], 5);
            assert_eq!(c[2], c[3]);
            assert_eq!(c[4], c[5]);
        }
    }
}
