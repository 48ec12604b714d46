//! The catalog self-check run by `toricenv verify`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::{
    a_bound, gl2_block_case_bound, headline_bound, product_bound, schur_j, tight_bound,
    unipotent_bound,
};
use crate::envelope::{
    algorithm1, cone_ideal, gl2_classification_row, ConeStrategy, ExampleName,
};
use crate::error::Result;
use crate::groebner::ideal_equal;
use crate::matgroup::{named_group, scalar_cone_points, GroupName};
use crate::multipoly::{MonomialOrder, VarietyProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, outcome: Result<(bool, String)>) -> Check {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    Check { name: name.to_string(), passed, detail }
}

const POLYHEDRAL: [(GroupName, usize, u32); 3] = [
    (GroupName::BinaryTetrahedral, 24, 3),
    (GroupName::BinaryOctahedral, 48, 4),
    (GroupName::BinaryIcosahedral, 120, 6),
];

fn catalog_orders() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, order, _) in POLYHEDRAL {
        let g = named_group(name);
        let good = g.order() == order && g.all_determinants_one() && g.contains_minus_identity();
        ok &= good;
        parts.push(format!("{name}: order {}", g.order()));
    }
    Ok((ok, parts.join(", ")))
}

fn line_counts() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, _, _) in POLYHEDRAL {
        let g = named_group(name);
        let reps = scalar_cone_points(&g).len();
        ok &= reps * g.scalar_subgroup().len() == g.order();
        parts.push(format!("{name}: {reps} lines"));
    }
    Ok((ok, parts.join(", ")))
}

fn algorithm1_values(order: MonomialOrder) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, _, expected) in POLYHEDRAL {
        let r = algorithm1(&named_group(name), order, ConeStrategy::Interpolation)?;
        ok &= r.d == expected;
        parts.push(format!("{name}: d = {}", r.d));
    }
    Ok((ok, parts.join(", ")))
}

fn cone_profiles() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, order, _) in POLYHEDRAL {
        let cone = cone_ideal(&named_group(name), ConeStrategy::Interpolation, MonomialOrder::GrLex)?;
        let p = cone.profile()?;
        let expected = VarietyProfile { dimension: 1, degree: (order / 2) as u64 };
        ok &= p == expected && gl2_classification_row(p) == Some(5);
        parts.push(format!("{name}: dimension {}, degree {}", p.dimension, p.degree));
    }
    Ok((ok, parts.join(", ")))
}

fn strategy_agreement() -> Result<(bool, String)> {
    let mut names: Vec<GroupName> = (2..=6).map(GroupName::Cyclic).collect();
    names.extend([GroupName::BinaryDihedral(2), GroupName::BinaryDihedral(3)]);
    names.push(GroupName::BinaryTetrahedral);
    let mut ok = true;
    for &name in &names {
        let g = named_group(name);
        let a = cone_ideal(&g, ConeStrategy::Interpolation, MonomialOrder::GrLex)?;
        let b = cone_ideal(&g, ConeStrategy::Intersection, MonomialOrder::GrLex)?;
        ok &= ideal_equal(a.ideal(), b.ideal())?;
    }
    Ok((ok, format!("{} groups compared", names.len())))
}

fn examples() -> Result<(bool, String)> {
    let mut ok = true;
    let mut count = 0;
    for m in 2..=12u32 {
        let r = ExampleName::RootsOfUnity.run(m)?;
        ok &= r.group.degree == m as u64;
        count += 1;
    }
    for k in 1..=6u32 {
        let r = ExampleName::Torus.run(k)?;
        ok &= r.group.degree == k as u64 && r.envelope.degree == 1 && r.envelope_contains_group;
        count += 1;
    }
    for m in 2..=6u32 {
        let r = ExampleName::Dihedral.run(m)?;
        ok &= r.group == VarietyProfile { dimension: 0, degree: 4 * m as u64 }
            && r.envelope == VarietyProfile { dimension: 2, degree: 2 }
            && r.envelope_contains_group;
        count += 1;
    }
    for (n, fact) in [(2u32, 2u64), (3, 6), (4, 24)] {
        let r = ExampleName::PermutationDiag.run(n)?;
        ok &= r.group.degree == fact;
        count += 1;
    }
    Ok((ok, format!("{count} instances")))
}

fn bound_values() -> Result<(bool, String)> {
    let b = |v: u64| BigInt::from(v);
    let heads: Vec<BigInt> = (1..=3).map(headline_bound).collect::<Result<_>>()?;
    let a: Vec<Option<BigInt>> = (1..=3).map(|n| a_bound(n).map(|x| x.exact)).collect::<Result<_>>()?;
    let u: Vec<BigInt> = (2..=4).map(unipotent_bound).collect::<Result<_>>()?;
    let ok = heads == [b(1), b(6), b(360)]
        && a == [Some(b(2)), Some(b(6)), Some(b(12))]
        && schur_j(2)?.value == b(384064)
        && product_bound(9, 2, 3)? == b(144)
        && gl2_block_case_bound().bound == b(240)
        && u == [b(1), b(2), b(12)]
        && tight_bound(2)? == b(3072512);
    Ok((ok, "headline, A, J(2), product, block-case, unipotent, tight(2)".into()))
}

/// Runs every check; `passed` is their conjunction.
pub fn run_verification() -> VerifyReport {
    let checks = vec![
        check("catalog group orders, determinants and -I", catalog_orders()),
        check("line representatives times scalars equal group order", line_counts()),
        check("algorithm 1 under grlex gives 3, 4, 6", algorithm1_values(MonomialOrder::GrLex)),
        check("algorithm 1 under grevlex gives 3, 4, 6", algorithm1_values(MonomialOrder::GrevLex)),
        check("cone profiles are unions of |G|/2 lines", cone_profiles()),
        check("intersection and interpolation strategies agree", strategy_agreement()),
        check("example family degrees", examples()),
        check("closed-form bound values", bound_values()),
    ];
    VerifyReport {
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
