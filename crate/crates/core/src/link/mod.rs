//! Oriented link diagrams: PD codes, Wirtinger presentations and Fox
//! calculus.

pub mod multivar;
pub mod pd;
pub mod wirtinger;

pub use multivar::{multivar_alexander, LinkPolynomial};
pub use pd::{braid_to_pd, parse_pd, PdCode};
pub use wirtinger::{fox_derivative, wirtinger, Letter, WirtingerData, Word};
