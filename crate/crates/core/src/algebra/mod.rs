//! Exact arithmetic: Laurent polynomials, integer matrices, Smith normal
//! form, resultants and cyclotomic fields.

pub mod cyclotomic;
pub mod interval;
pub mod laurent;
pub mod matrix;
pub mod parse;
pub mod resultant;
pub mod snf;

pub use cyclotomic::{cyclotomic_polynomial, CycloElem, CyclotomicField, RootOfUnity};
pub use laurent::{Exponent, Laurent, LaurentPoly1, LaurentPoly2};
pub use matrix::{determinant, Domain, IntMatrix};
pub use parse::{parse_poly1, parse_poly1_in, parse_poly2};
pub use resultant::{cyclic_quotient, resultant, resultant_y};
pub use snf::{smith_normal_form, AbelianGroup};
