//! Small instances of the standard example families: each builds the group
//! variety and an envelope explicitly and reports their profiles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{check_envelope_membership, vanishing_ideal_of_points};
use crate::error::{Error, Result};
use crate::exactnum::CycNum;
use crate::groebner::{eliminate, ideal_intersect, ideal_member, Ideal};
use crate::matgroup::{named_group, named_group_generators, GroupName};
use crate::multipoly::{MonomialOrder, Poly, VarietyProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleName {
    /// The `m`-th roots of unity in GL₁; envelope GL₁.
    RootsOfUnity,
    /// `{[[a, b], [0, a^k]]}`; envelope the upper triangular matrices.
    Torus,
    /// The `4m` matrices `diag(ε^j, ε^-j)`, `antidiag(ε^j, ε^-j)` with `ε` of
    /// order `2m`; envelope the diagonal and antidiagonal planes.
    Dihedral,
    /// Permutation matrices times diagonal matrices in GL_n.
    PermutationDiag,
}

impl ExampleName {
    pub const ALL: [ExampleName; 4] = [
        ExampleName::RootsOfUnity,
        ExampleName::Torus,
        ExampleName::Dihedral,
        ExampleName::PermutationDiag,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            ExampleName::RootsOfUnity => "roots-of-unity",
            ExampleName::Torus => "torus",
            ExampleName::Dihedral => "dihedral",
            ExampleName::PermutationDiag => "permutation-diag",
        }
    }

    /// Largest accepted parameter.
    pub fn cap(&self) -> u32 {
        match self {
            ExampleName::RootsOfUnity => 12,
            ExampleName::Torus => 6,
            ExampleName::Dihedral => 6,
            ExampleName::PermutationDiag => 4,
        }
    }

    pub fn default_param(&self) -> u32 {
        match self {
            ExampleName::RootsOfUnity => 5,
            _ => 3,
        }
    }

    pub fn run(&self, param: u32) -> Result<ExampleReport> {
        match self {
            ExampleName::RootsOfUnity => roots_of_unity_example(param),
            ExampleName::Torus => torus_example(param),
            ExampleName::Dihedral => dihedral_example(param),
            ExampleName::PermutationDiag => permutation_example(param),
        }
    }
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ExampleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        ExampleName::ALL
            .into_iter()
            .find(|e| e.tag() == t || t.strip_suffix("-example") == Some(e.tag()))
            .ok_or_else(|| Error::Parse(format!("unknown example {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub example: String,
    pub param: u32,
    pub group: VarietyProfile,
    pub envelope: VarietyProfile,
    pub envelope_contains_group: bool,
}

fn check_param(name: ExampleName, p: u32) -> Result<()> {
    if p == 0 || p > name.cap() {
        return Err(Error::Invalid(format!(
            "{name} parameter {p} is outside 1..={}",
            name.cap()
        )));
    }
    Ok(())
}

fn report(
    name: ExampleName,
    param: u32,
    group: &Ideal,
    envelope: &Ideal,
    contains: bool,
) -> Result<ExampleReport> {
    Ok(ExampleReport {
        example: name.tag().into(),
        param,
        group: group.profile()?,
        envelope: envelope.profile()?,
        envelope_contains_group: contains,
    })
}

fn var(i: usize, n: usize, order: MonomialOrder) -> Poly {
    Poly::var(i, n, order)
}

/// `⟨x^m - 1⟩` in one variable; the envelope is the whole line.
pub fn roots_of_unity_example(m: u32) -> Result<ExampleReport> {
    let name = ExampleName::RootsOfUnity;
    check_param(name, m)?;
    let order = MonomialOrder::GrevLex;
    let x = var(0, 1, order);
    let group = Ideal::new(vec![x.pow(m).sub(&Poly::one(1, order))], 1, order);
    let envelope = Ideal::zero(1, order);
    report(name, m, &group, &envelope, true)
}

/// Closure of the image of a polynomial map, by eliminating the `k`
/// parameters that come first in `ring`.
fn image_closure(map: Vec<Poly>, k: usize) -> Result<Ideal> {
    let nvars = map[0].nvars();
    eliminate(&Ideal::new(map, nvars, MonomialOrder::Elimination(k)), k)
}

/// `{[[a, b], [0, a^k]]}` and its product with the diagonal torus, both as
/// closures of parametrized images.
pub fn torus_example(k: u32) -> Result<ExampleReport> {
    let name = ExampleName::Torus;
    check_param(name, k)?;
    let order = MonomialOrder::Elimination(2);
    // Ring a, b, x11, x12, x21, x22.
    let v = |i| var(i, 6, order);
    let (a, b) = (v(0), v(1));
    let group = image_closure(
        vec![v(2).sub(&a), v(3).sub(&b), v(4), v(5).sub(&a.pow(k))],
        2,
    )?;
    let order = MonomialOrder::Elimination(4);
    // Ring s, u, a, b, x11, x12, x21, x22: diag(s, u) · [[a, b], [0, a^k]].
    let w = |i| var(i, 8, order);
    let (s, u, a, b) = (w(0), w(1), w(2), w(3));
    let envelope = image_closure(
        vec![
            w(4).sub(&s.mul(&a)),
            w(5).sub(&s.mul(&b)),
            w(6),
            w(7).sub(&u.mul(&a.pow(k))),
        ],
        4,
    )?;
    let contains = envelope.generators().iter().all(|f| ideal_member(f, &group));
    report(name, k, &group, &envelope, contains)
}

fn coordinate_plane(zero_coords: impl IntoIterator<Item = usize>, n: usize) -> Ideal {
    let order = MonomialOrder::GrevLex;
    let gens = zero_coords.into_iter().map(|i| var(i, n, order)).collect();
    Ideal::new(gens, n, order)
}

/// The `4m` points of the dihedral example group, and the union of the
/// diagonal and antidiagonal planes.
pub fn dihedral_example(m: u32) -> Result<ExampleReport> {
    let name = ExampleName::Dihedral;
    check_param(name, m)?;
    let g = named_group(GroupName::DihedralConeExample(m));
    let points: Vec<Vec<CycNum>> = g.elements().iter().map(|e| e.entries().to_vec()).collect();
    let group = vanishing_ideal_of_points(&points, 4, MonomialOrder::GrevLex)?;
    let envelope = ideal_intersect(&coordinate_plane([1, 2], 4), &coordinate_plane([0, 3], 4))?;
    let contains = check_envelope_membership(
        &named_group_generators(GroupName::DihedralConeExample(m)),
        &envelope,
    )?;
    report(name, m, &group, &envelope, contains)
}

/// Permutation matrices times diagonal matrices: the union of the `n!`
/// coordinate `n`-planes given by the permutation patterns. The group is its
/// own only envelope.
pub fn permutation_example(n: u32) -> Result<ExampleReport> {
    let name = ExampleName::PermutationDiag;
    check_param(name, n)?;
    let perms = named_group(GroupName::PermutationDiagExample(n));
    let nv = (n * n) as usize;
    let mut acc: Option<Ideal> = None;
    for p in perms.elements() {
        let plane = coordinate_plane((0..nv).filter(|&i| p.entries()[i].is_zero()), nv);
        acc = Some(match acc {
            None => plane,
            Some(a) => ideal_intersect(&a, &plane)?,
        });
    }
    let group = acc.expect("a group has at least one element");
    let contains = check_envelope_membership(perms.generators(), &group)?;
    report(name, n, &group, &group, contains)
}

/// One report per example family at its default parameter.
pub fn example_degrees() -> Result<Vec<ExampleReport>> {
    ExampleName::ALL
        .iter()
        .map(|e| e.run(e.default_param()))
        .collect()
}
