//! Exact invariants of transverse braid closures and their contact cyclic
//! branched covers.

pub mod algebra;
pub mod braid;
pub mod cli;
pub mod cover;
pub mod error;
pub mod invariants;
pub mod link;
pub mod murasugi;
pub mod seifert;

pub use error::{Error, Result};
