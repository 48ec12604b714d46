//! Multivariate polynomials over cyclotomic fields with graded monomial
//! orders, and Hilbert-series profiles of leading-term ideals.

mod hilbert;
mod monomial;
mod parse;
mod poly;

pub use hilbert::{hilbert_profile, HilbertSeries, VarietyProfile};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{default_var_names, matrix_var_names, reduce, reduce_fraction_free, Poly};
