//! Exact span dimensions of symmetric and exterior power characters of the
//! generalised symmetric groups C_k ≀ S_n, with certified bound checks.

pub mod algebra;
pub mod arith;
pub mod character;
pub mod combinatorics;
pub mod error;
pub mod span;
pub mod verify;

pub use error::{Error, Result};
