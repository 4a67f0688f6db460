//! Vertex states and square-ice configurations with domain-wall boundary.
//!
//! Edge orientations are recorded as partial sums of the matching ASM. A
//! horizontal edge carries `0` when it points right and `1` when it points
//! left; a vertical edge carries `0` when it points up and `1` when it
//! points down. Domain-wall boundary: left edges `0`, right edges `1`, top
//! edges `0`, bottom edges `1`, i.e. inward on the sides and outward on top
//! and bottom.
//!
//! | state | left | right | top | bottom | ASM entry |
//! |-------|------|-------|-----|--------|-----------|
//! | 1     | →    | ←     | ↑   | ↓      | +1        |
//! | 2     | ←    | →     | ↓   | ↑      | −1        |
//! | 3     | →    | →     | ↑   | ↑      | 0         |
//! | 4     | ←    | ←     | ↓   | ↓      | 0         |
//! | 5     | ←    | ←     | ↑   | ↑      | 0         |
//! | 6     | →    | →     | ↓   | ↓      | 0         |

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexState {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
}

impl VertexState {
    pub const ALL: [VertexState; 6] =
        [VertexState::S1, VertexState::S2, VertexState::S3, VertexState::S4, VertexState::S5, VertexState::S6];

    pub fn label(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_label(label: u8) -> Option<Self> {
        Self::ALL.get(label.checked_sub(1)? as usize).copied()
    }

    /// `(left, right, top, bottom)` edge bits.
    pub fn edges(self) -> [u8; 4] {
        match self {
            VertexState::S1 => [0, 1, 0, 1],
            VertexState::S2 => [1, 0, 1, 0],
            VertexState::S3 => [0, 0, 0, 0],
            VertexState::S4 => [1, 1, 1, 1],
            VertexState::S5 => [1, 1, 0, 0],
            VertexState::S6 => [0, 0, 1, 1],
        }
    }

    /// The state with the given `(left, right, top, bottom)` bits, if the
    /// vertex is two-in two-out.
    pub fn from_edges(edges: [u8; 4]) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.edges() == edges)
    }

    pub fn asm_entry(self) -> i8 {
        let [l, r, _, _] = self.edges();
        r as i8 - l as i8
    }
}

impl fmt::Display for VertexState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A DWBC configuration of the `n×n` grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IceState {
    n: usize,
    states: Vec<VertexState>,
}

impl IceState {
    /// Checks edge agreement between neighbours and the boundary condition.
    pub fn new(n: usize, states: Vec<VertexState>) -> Result<Self> {
        if n == 0 || states.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} vertex states for n = {n}", states.len())));
        }
        let at = |i: usize, j: usize| states[i * n + j].edges();
        for i in 0..n {
            for j in 0..n {
                let [l, r, t, b] = at(i, j);
                let left_ok = if j == 0 { l == 0 } else { at(i, j - 1)[1] == l };
                let top_ok = if i == 0 { t == 0 } else { at(i - 1, j)[3] == t };
                let right_ok = j + 1 < n || r == 1;
                let bottom_ok = i + 1 < n || b == 1;
                if !(left_ok && top_ok && right_ok && bottom_ok) {
                    return Err(Error::Precondition(format!("ice rule or boundary broken at vertex ({i}, {j})")));
                }
            }
        }
        Ok(IceState { n, states })
    }

    pub(crate) fn from_trusted(n: usize, states: Vec<VertexState>) -> Self {
        IceState { n, states }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> VertexState {
        self.states[i * self.n + j]
    }

    pub fn states(&self) -> &[VertexState] {
        &self.states
    }

    /// Occurrences of each state, indexed by `label − 1`.
    pub fn state_counts(&self) -> [usize; 6] {
        let mut c = [0; 6];
        for s in &self.states {
            c[*s as usize] += 1;
        }
        c
    }
}

impl fmt::Display for IceState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.states.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Grids of labels 1..6, blocks separated by blank lines.
pub fn write_ice<'a>(states: impl IntoIterator<Item = &'a IceState>) -> String {
    let blocks: Vec<String> = states.into_iter().map(|s| s.to_string()).collect();
    let mut out = blocks.join("\n\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}

pub fn parse_ice(text: &str) -> Result<Vec<IceState>> {
    let mut out = Vec::new();
    let mut block: Vec<Vec<VertexState>> = Vec::new();
    let flush = |block: &mut Vec<Vec<VertexState>>, out: &mut Vec<IceState>| -> Result<()> {
        if block.is_empty() {
            return Ok(());
        }
        let n = block.len();
        if block.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("ice grid is not square".into()));
        }
        out.push(IceState::new(n, block.drain(..).flatten().collect())?);
        Ok(())
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            flush(&mut block, &mut out)?;
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u8>()
                    .ok()
                    .and_then(VertexState::from_label)
                    .ok_or_else(|| Error::Parse(format!("{tok:?} is not a vertex label 1..6")))
            })
            .collect::<Result<Vec<_>>>()?;
        block.push(row);
    }
    flush(&mut block, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for s in VertexState::ALL {
            assert_eq!(VertexState::from_label(s.label()), Some(s));
            assert_eq!(VertexState::from_edges(s.edges()), Some(s));
            let [l, r, t, b] = s.edges();
            // two in, two out: in-edges are left →, right ←, top ↓, bottom ↑
            let ins = (l == 0) as u8 + (r == 1) as u8 + (t == 1) as u8 + (b == 0) as u8;
            assert_eq!(ins, 2, "state {s}");
        }
        assert_eq!(VertexState::from_label(0), None);
        assert_eq!(VertexState::from_label(7), None);
        assert_eq!(VertexState::from_edges([0, 1, 1, 0]), None);
    }

    #[test]
    fn entries() {
        let e: Vec<i8> = VertexState::ALL.iter().map(|s| s.asm_entry()).collect();
        assert_eq!(e, vec![1, -1, 0, 0, 0, 0]);
    }

    #[test]
    fn single_vertex() {
        assert!(IceState::new(1, vec![VertexState::S1]).is_ok());
        for s in &VertexState::ALL[1..] {
            assert!(IceState::new(1, vec![*s]).is_err());
        }
    }

    #[test]
    fn text_round_trip() {
        let s = IceState::new(2, vec![VertexState::S1, VertexState::S5, VertexState::S6, VertexState::S1]).unwrap();
        let text = write_ice([&s]);
        assert_eq!(text, "1 5\n6 1\n");
        assert_eq!(parse_ice(&text).unwrap(), vec![s]);
        assert!(parse_ice("1 2\n3").is_err());
        assert!(parse_ice("9").is_err());
        assert!(parse_ice("2").is_err());
    }
}
