//! Exact matrices over cyclotomic fields, finite group enumeration, and a
//! catalog of finite subgroups of SL₂ plus a few auxiliary example groups.

mod group;
mod matrix;

pub use group::{
    closure, is_unipotent, named_group, named_group_generators, scalar_cone_points,
    FiniteMatGroup, GroupFile, GroupName, DEFAULT_CLOSURE_CAP,
};
pub use matrix::CycMatrix;
