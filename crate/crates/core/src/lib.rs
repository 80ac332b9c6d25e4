//! Feasibility of Schubert problems on cominuscule flag varieties.

// Root-system and poset code indexes several parallel tables by the same
// subscript; iterator rewrites of those loops read worse.
#![allow(clippy::needless_range_loop)]

pub mod bits;
pub mod coset;
pub mod error;
pub mod feasibility;
pub mod horn;
pub mod notation;
pub mod oracles;
pub mod orbit;
pub mod rootsys;
pub mod space;

pub use bits::Bits;
pub use error::{Error, Result};
