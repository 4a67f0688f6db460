pub mod asm;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod ik;
pub mod six_vertex;
pub mod verify;

pub use error::{Error, Result};
