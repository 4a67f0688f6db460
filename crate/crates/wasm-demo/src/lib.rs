//! Thin wasm-bindgen layer over `squareice` for `www/index.html`.
//!
//! Every export returns plain text so the page needs no glue beyond the
//! generated bindings. Errors come back as their display string.

use std::str::FromStr;

use num_rational::BigRational;
use wasm_bindgen::prelude::*;

use squareice::asm::{enumerate, to_ice};
use squareice::formulas::b_chain;
use squareice::six_vertex::transfer_count;

/// Largest `n` offered for the ASM browser; 7436 matrices at 6.
pub const MAX_GRID_N: usize = 6;
/// Largest `n` offered for the x-enumeration explorer.
pub const MAX_XENUM_N: usize = 12;

fn nth_asm(n: usize, index: usize) -> Result<squareice::asm::Asm, String> {
    if n > MAX_GRID_N {
        return Err(format!("n = {n} is above the demo bound {MAX_GRID_N}"));
    }
    let mut all = enumerate(n).map_err(|e| e.to_string())?;
    let len = all.len();
    if index >= len {
        return Err(format!("index {index} out of range: there are {len} ASMs of size {n}"));
    }
    Ok(all.swap_remove(index))
}

/// Number of `n×n` ASMs.
#[wasm_bindgen]
pub fn asm_count(n: usize) -> Result<usize, String> {
    if n > MAX_GRID_N {
        return Err(format!("n = {n} is above the demo bound {MAX_GRID_N}"));
    }
    enumerate(n).map(|v| v.len()).map_err(|e| e.to_string())
}

/// The `index`-th ASM in enumeration order: rows separated by newlines.
#[wasm_bindgen]
pub fn asm_grid(n: usize, index: usize) -> Result<String, String> {
    nth_asm(n, index).map(|a| a.to_string())
}

/// Vertex labels `1..=6` of the matching square-ice state, same layout.
#[wasm_bindgen]
pub fn ice_grid(n: usize, index: usize) -> Result<String, String> {
    let state = to_ice(&nth_asm(n, index)?);
    let rows: Vec<String> = (0..n)
        .map(|i| (0..n).map(|j| state.get(i, j).to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    Ok(rows.join("\n"))
}

/// `A(n;x)` in descending form, or its exact value when `at` is a
/// rational `p/q` (empty means the polynomial).
#[wasm_bindgen]
pub fn xenum(n: usize, at: &str) -> Result<String, String> {
    if n > MAX_XENUM_N {
        return Err(format!("n = {n} is above the demo bound {MAX_XENUM_N}"));
    }
    let poly = transfer_count(n).map_err(|e| e.to_string())?;
    let at = at.trim();
    if at.is_empty() {
        return Ok(poly.to_string());
    }
    let x = BigRational::from_str(at).map_err(|e| format!("'{at}' is not a rational p/q: {e}"))?;
    Ok(poly.eval_rational(&x).to_string())
}

/// `B(1..=max_n;x)`, one `n: polynomial` line each.
#[wasm_bindgen]
pub fn b_sequence(max_n: usize) -> Result<String, String> {
    if max_n > MAX_XENUM_N + 1 {
        return Err(format!("max n = {max_n} is above the demo bound {}", MAX_XENUM_N + 1));
    }
    let chain = b_chain(max_n).map_err(|e| e.to_string())?;
    let lines: Vec<String> = chain.polys().iter().enumerate().map(|(k, b)| format!("{}: {b}", k + 1)).collect();
    Ok(lines.join("\n"))
}
