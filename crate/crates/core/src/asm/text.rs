//! Plain-text ASM format: one matrix per block, rows of space-separated
//! entries, blocks separated by blank lines.

use super::Asm;
use crate::error::{Error, Result};

pub fn write_asms<'a>(asms: impl IntoIterator<Item = &'a Asm>) -> String {
    let blocks: Vec<String> = asms.into_iter().map(|a| a.to_string()).collect();
    let mut out = blocks.join("\n\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}

/// Parses and validates every block.
pub fn parse_asms(text: &str) -> Result<Vec<Asm>> {
    let mut out = Vec::new();
    let mut block: Vec<Vec<i64>> = Vec::new();
    let mut flush = |block: &mut Vec<Vec<i64>>| -> Result<()> {
        if !block.is_empty() {
            out.push(Asm::validate(block)?);
            block.clear();
        }
        Ok(())
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            flush(&mut block)?;
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|e| Error::Parse(format!("line {}: {tok:?}: {e}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        block.push(row);
    }
    flush(&mut block)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::{enumerate, AsmError};

    #[test]
    fn round_trip() {
        let all = enumerate(4).unwrap();
        let text = write_asms(&all);
        assert_eq!(parse_asms(&text).unwrap(), all);
    }

    #[test]
    fn format_shape() {
        let text = write_asms(&enumerate(2).unwrap());
        assert_eq!(text, "0 1\n1 0\n\n1 0\n0 1\n");
        assert_eq!(write_asms(&[]), "");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_asms("1 x"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_asms("1 -1\n-1 1\n"),
            Err(Error::InvalidAsm(AsmError::ColumnPrefix { .. }))
        ));
        assert_eq!(parse_asms("\n\n").unwrap(), vec![]);
    }
}
