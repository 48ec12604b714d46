//! Vanishing ideals of scalar cones over finite matrix groups, the minimal
//! truncation degree of their Gröbner bases, worked example varieties, and
//! envelope membership checks.

mod examples;
mod interpolation;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use examples::{
    dihedral_example, example_degrees, permutation_example, roots_of_unity_example,
    torus_example, ExampleName, ExampleReport,
};
pub use interpolation::{vanishing_ideal_of_lines, vanishing_ideal_of_points};

use crate::error::{Error, Result};
use crate::exactnum::CycNum;
use crate::groebner::{ideal_intersect, Ideal};
use crate::matgroup::{closure, scalar_cone_points, CycMatrix, FiniteMatGroup, DEFAULT_CLOSURE_CAP};
use crate::multipoly::{MonomialOrder, Poly, VarietyProfile};

/// How a cone ideal is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ConeStrategy {
    /// Intersect the linear ideals of the individual lines.
    Intersection,
    /// Read the reduced basis off kernels of evaluation matrices.
    #[default]
    Interpolation,
}

impl ConeStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            ConeStrategy::Intersection => "intersection",
            ConeStrategy::Interpolation => "interpolation",
        }
    }
}

impl fmt::Display for ConeStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConeStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "intersection" => Ok(ConeStrategy::Intersection),
            "interpolation" => Ok(ConeStrategy::Interpolation),
            other => Err(Error::Parse(format!("unknown strategy {other:?}"))),
        }
    }
}

/// The vanishing ideal of `{c·g : c ∈ C, g ∈ G}` in the `n²` matrix-entry
/// variables `x11, x12, …` (row-major).
#[derive(Clone, Debug)]
pub struct ConeIdeal {
    group: FiniteMatGroup,
    line_reps: Vec<CycMatrix>,
    ideal: Ideal,
    strategy: ConeStrategy,
}

impl ConeIdeal {
    pub fn group(&self) -> &FiniteMatGroup {
        &self.group
    }

    pub fn line_reps(&self) -> &[CycMatrix] {
        &self.line_reps
    }

    pub fn num_lines(&self) -> usize {
        self.line_reps.len()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn strategy(&self) -> ConeStrategy {
        self.strategy
    }

    pub fn profile(&self) -> Result<VarietyProfile> {
        self.ideal.profile()
    }
}

/// Linear ideal of the line through `v`: `x_i - (v_i / v_p)·x_p` for the first
/// nonzero coordinate `p`. These span the same ideal as the 2×2 minors of
/// the matrix with rows `x` and `v`.
pub fn line_ideal(v: &[CycNum], order: MonomialOrder) -> Result<Ideal> {
    let n = v.len();
    let p = v
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Invalid("the origin spans no line".into()))?;
    let inv = v[p].inv()?;
    let xp = Poly::var(p, n, order);
    let gens = (0..n)
        .filter(|&i| i != p)
        .map(|i| Poly::var(i, n, order).sub(&xp.scale(&(&v[i] * &inv))))
        .collect();
    Ok(Ideal::new(gens, n, order))
}

fn point_of(m: &CycMatrix) -> Vec<CycNum> {
    m.entries().to_vec()
}

/// Cone ideal of `group` under `order`, by the chosen strategy.
///
/// The result is checked before it is returned: every basis element is
/// homogeneous and vanishes at every line representative, and the Hilbert
/// profile is a union of as many lines as there are representatives.
pub fn cone_ideal(
    group: &FiniteMatGroup,
    strategy: ConeStrategy,
    order: MonomialOrder,
) -> Result<ConeIdeal> {
    let line_reps = scalar_cone_points(group);
    if line_reps.is_empty() {
        return Err(Error::Invalid("empty group".into()));
    }
    let nvars = group.dim() * group.dim();
    let points: Vec<Vec<CycNum>> = line_reps.iter().map(point_of).collect();
    let ideal = match strategy {
        ConeStrategy::Interpolation => vanishing_ideal_of_lines(&points, nvars, order)?,
        ConeStrategy::Intersection => {
            let mut acc = line_ideal(&points[0], MonomialOrder::GrevLex)?;
            for p in &points[1..] {
                acc = ideal_intersect(&acc, &line_ideal(p, MonomialOrder::GrevLex)?)?;
            }
            if order == MonomialOrder::GrevLex {
                acc
            } else {
                // Carry the reduced generators over; the new basis is
                // computed on demand.
                let gens = acc.groebner_basis().to_vec();
                Ideal::new(gens, nvars, order)
            }
        }
    };
    let cone = ConeIdeal {
        group: group.clone(),
        line_reps,
        ideal,
        strategy,
    };
    verify_cone(&cone)?;
    Ok(cone)
}

fn verify_cone(cone: &ConeIdeal) -> Result<()> {
    let basis = cone.ideal.groebner_basis();
    if basis.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Inconsistent("cone ideal has an inhomogeneous basis element".into()));
    }
    for (k, m) in cone.line_reps.iter().enumerate() {
        let p = point_of(m);
        for g in basis {
            if !g.evaluate(&p)?.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "cone ideal does not vanish on line representative {k}"
                )));
            }
        }
    }
    let profile = cone.ideal.profile()?;
    let expected = VarietyProfile {
        dimension: 1,
        degree: cone.line_reps.len() as u64,
    };
    if profile != expected {
        return Err(Error::Inconsistent(format!(
            "cone profile {profile:?} differs from {expected:?}"
        )));
    }
    Ok(())
}

/// How one truncation degree was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TruncationCheck {
    /// The truncation is the whole basis.
    WholeBasis,
    /// The truncation cuts out a variety of larger dimension.
    LargerDimension,
    /// Same dimension and degree as the cone, and for a one-dimensional cone
    /// that forces equal zero sets.
    EqualProfile,
    /// Radical membership of every omitted basis element.
    Radical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationStep {
    pub degree: u32,
    pub holds: bool,
    pub check: TruncationCheck,
}

/// The minimal degree `d` such that the basis elements of degree at most `d`
/// have the same radical as the whole ideal, with the per-degree trace.
#[derive(Clone, Debug)]
pub struct EnvelopeBoundResult {
    pub d: u32,
    pub max_gb_degree: u32,
    pub gb_size: usize,
    pub profile: VarietyProfile,
    pub num_lines: usize,
    pub order: MonomialOrder,
    pub steps: Vec<TruncationStep>,
}

/// Scan `d = 1..=max_deg(B)` for the reduced basis `B` of the radical ideal
/// `ideal`, testing `√⟨p ∈ B : deg p ≤ d⟩ = ideal`.
///
/// Since the truncation lies inside the radical ideal, equality holds iff
/// every omitted basis element lies in the radical of the truncation.
/// Once true at some `d` the test must stay true; a violation is an error.
pub fn minimal_truncation_degree(ideal: &Ideal) -> Result<(u32, Vec<TruncationStep>)> {
    truncation_scan(ideal, true)
}

/// As [`minimal_truncation_degree`], deciding every degree by radical
/// membership alone (no profile shortcuts). Slower; used as a cross-check.
pub fn minimal_truncation_degree_by_radical(
    ideal: &Ideal,
) -> Result<(u32, Vec<TruncationStep>)> {
    truncation_scan(ideal, false)
}

fn truncation_scan(ideal: &Ideal, shortcuts: bool) -> Result<(u32, Vec<TruncationStep>)> {
    let basis = ideal.groebner_basis();
    if basis.is_empty() || ideal.is_unit() {
        return Err(Error::Invalid("truncation degree of the zero or unit ideal".into()));
    }
    let nvars = ideal.nvars();
    let max_deg = ideal.max_basis_degree();
    let full = ideal.profile()?;
    let curve_cone = full.dimension == 1 && basis.iter().all(Poly::is_homogeneous);
    let mut steps = Vec::new();
    for d in 1..=max_deg {
        let (kept, omitted): (Vec<&Poly>, Vec<&Poly>) =
            basis.iter().partition(|g| g.degree().unwrap() <= d);
        let step = if omitted.is_empty() {
            TruncationStep { degree: d, holds: true, check: TruncationCheck::WholeBasis }
        } else {
            let trunc = Ideal::new(
                kept.into_iter().cloned().collect(),
                nvars,
                MonomialOrder::GrevLex,
            );
            let profile = if shortcuts { Some(trunc.profile()?) } else { None };
            if profile.is_some_and(|p| p.dimension > full.dimension) {
                TruncationStep { degree: d, holds: false, check: TruncationCheck::LargerDimension }
            } else if curve_cone && profile == Some(full) {
                TruncationStep { degree: d, holds: true, check: TruncationCheck::EqualProfile }
            } else {
                let holds = omitted.iter().all(|g| trunc.radical_contains(g));
                TruncationStep { degree: d, holds, check: TruncationCheck::Radical }
            }
        };
        steps.push(step);
    }
    let d = steps
        .iter()
        .find(|s| s.holds)
        .map(|s| s.degree)
        .ok_or_else(|| Error::Inconsistent("the whole basis failed its own test".into()))?;
    if steps.iter().any(|s| s.degree > d && !s.holds) {
        return Err(Error::Inconsistent(format!(
            "truncation test is not monotone after degree {d}"
        )));
    }
    debug_assert!(d <= max_deg);
    Ok((d, steps))
}

/// Degree bound for the scalar cone of a finite subgroup of SL₂.
pub fn algorithm1(
    group: &FiniteMatGroup,
    order: MonomialOrder,
    strategy: ConeStrategy,
) -> Result<EnvelopeBoundResult> {
    if group.dim() != 2 {
        return Err(Error::Dimension(format!(
            "expected 2x2 matrices, got {0}x{0}",
            group.dim()
        )));
    }
    if !group.all_determinants_one() {
        return Err(Error::Invalid("group is not contained in SL2".into()));
    }
    let cone = cone_ideal(group, strategy, order)?;
    bound_for_cone(&cone)
}

/// The truncation scan for an already computed cone ideal.
pub fn bound_for_cone(cone: &ConeIdeal) -> Result<EnvelopeBoundResult> {
    let ideal = cone.ideal();
    let (d, steps) = minimal_truncation_degree(ideal)?;
    Ok(EnvelopeBoundResult {
        d,
        max_gb_degree: ideal.max_basis_degree(),
        gb_size: ideal.groebner_basis().len(),
        profile: cone.profile()?,
        num_lines: cone.num_lines(),
        order: ideal.order(),
        steps,
    })
}

/// Machine-readable summary of one Algorithm-1 run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgorithmReport {
    pub group: String,
    pub order_of_group: usize,
    pub num_lines: usize,
    pub gb_max_degree: u32,
    pub d: u32,
    pub degree: u64,
    pub order: String,
}

impl AlgorithmReport {
    pub fn new(group: &str, order_of_group: usize, r: &EnvelopeBoundResult) -> Self {
        AlgorithmReport {
            group: group.to_string(),
            order_of_group,
            num_lines: r.num_lines,
            gb_max_degree: r.max_gb_degree,
            d: r.d,
            degree: r.profile.degree,
            order: r.order.name(),
        }
    }
}

/// True iff every element of the group generated by `generators` is a zero
/// of every generator of `envelope` (an ideal in the matrix entries).
pub fn check_envelope_membership(generators: &[CycMatrix], envelope: &Ideal) -> Result<bool> {
    let group = closure(generators, DEFAULT_CLOSURE_CAP)?;
    let n = group.dim();
    if envelope.nvars() != n * n {
        return Err(Error::Dimension(format!(
            "ideal in {} variables cannot hold {n}x{n} matrices",
            envelope.nvars()
        )));
    }
    for g in group.elements() {
        if !envelope.vanishes_at(&point_of(g))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The row (1–5) of the GL₂ classification that a (dimension, degree)
/// profile falls into: (4, 1), (3, 1), (2, 2), (2, 1), (1, ≤ 60).
pub fn gl2_classification_row(p: VarietyProfile) -> Option<u8> {
    match (p.dimension, p.degree) {
        (4, 1) => Some(1),
        (3, 1) => Some(2),
        (2, 2) => Some(3),
        (2, 1) => Some(4),
        (1, deg) if (1..=60).contains(&deg) => Some(5),
        _ => None,
    }
}
