//! Exact arithmetic: arbitrary-precision rationals and cyclotomic fields.

mod cyclotomic;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycNum};
pub use rational::{format_rational, parse_rational, Rational};
