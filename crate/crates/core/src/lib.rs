//! Exact computer algebra for degree bounds of toric envelopes of linear
//! algebraic groups: cyclotomic arithmetic, finite matrix groups, Gröbner
//! bases, vanishing ideals of scalar cones, and closed-form bound tables.

pub mod bounds;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod exactnum;
pub mod groebner;
pub mod matgroup;
pub mod multipoly;
pub mod verify;

pub use error::{Error, Result};
