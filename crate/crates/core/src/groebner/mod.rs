//! Ideals over Q(ζ_N)[x_1..x_n]: reduced Gröbner bases, membership, radical
//! membership, intersection, elimination and equality.

mod buchberger;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use buchberger::{groebner_basis, is_groebner_basis, is_reduced};

use crate::error::{Error, Result};
use crate::multipoly::{
    hilbert_profile, parse_poly, reduce, Monomial, MonomialOrder, Poly, VarietyProfile,
};

/// A finitely generated ideal with a write-once cache of its reduced
/// Gröbner basis under `order`.
#[derive(Debug)]
pub struct Ideal {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Poly>,
    cached_gb: OnceLock<Vec<Poly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cached_gb = OnceLock::new();
        if let Some(gb) = self.cached_gb.get() {
            let _ = cached_gb.set(gb.clone());
        }
        Ideal {
            nvars: self.nvars,
            order: self.order,
            generators: self.generators.clone(),
            cached_gb,
        }
    }
}

impl Ideal {
    pub fn new(generators: Vec<Poly>, nvars: usize, order: MonomialOrder) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.nvars(), nvars, "generator from a different ring");
                if g.order() == order {
                    g
                } else {
                    g.with_order(order)
                }
            })
            .collect();
        Ideal {
            nvars,
            order,
            generators,
            cached_gb: OnceLock::new(),
        }
    }

    /// An ideal whose reduced Gröbner basis is already known. The basis is
    /// checked to be reduced and closed under S-pairs.
    pub fn from_reduced_basis(basis: Vec<Poly>, nvars: usize, order: MonomialOrder) -> Result<Self> {
        let ideal = Ideal::new(basis, nvars, order);
        let mut gb = ideal.generators.clone();
        gb.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        if !is_reduced(&gb) || !is_groebner_basis(&gb) {
            return Err(Error::Inconsistent("basis is not a reduced Gröbner basis".into()));
        }
        let _ = ideal.cached_gb.set(gb);
        Ok(ideal)
    }

    /// Like [`Ideal::from_reduced_basis`] for callers that hold an
    /// independent certificate; skips the S-pair check.
    pub(crate) fn from_reduced_basis_trusted(
        basis: Vec<Poly>,
        nvars: usize,
        order: MonomialOrder,
    ) -> Self {
        let ideal = Ideal::new(basis, nvars, order);
        let mut gb = ideal.generators.clone();
        gb.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        debug_assert!(is_reduced(&gb));
        let _ = ideal.cached_gb.set(gb);
        ideal
    }

    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Ideal::new(Vec::new(), nvars, order)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// The reduced Gröbner basis, computed once.
    pub fn groebner_basis(&self) -> &[Poly] {
        self.cached_gb.get_or_init(|| groebner_basis(&self.generators))
    }

    pub fn has_cached_basis(&self) -> bool {
        self.cached_gb.get().is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Poly::is_constant)
    }

    pub fn is_monomial_ideal(&self) -> bool {
        self.generators.iter().all(Poly::is_monomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    /// Maximum total degree over the reduced Gröbner basis.
    pub fn max_basis_degree(&self) -> u32 {
        self.groebner_basis()
            .iter()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0)
    }

    /// The same ideal under another order (fresh cache).
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        if order == self.order {
            return self.clone();
        }
        Ideal::new(self.generators.clone(), self.nvars, order)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        ideal_member(f, self)
    }

    pub fn radical_contains(&self, f: &Poly) -> bool {
        radical_member(f, self)
    }

    /// Affine dimension and degree of V(I), via a graded-order basis.
    pub fn profile(&self) -> Result<VarietyProfile> {
        let graded;
        let ideal = if self.order.is_graded() {
            self
        } else {
            graded = self.with_order(MonomialOrder::GrevLex);
            &graded
        };
        let lts: Vec<Monomial> = ideal
            .groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        hilbert_profile(&lts, self.nvars)
    }

    /// Common zero test on one point.
    pub fn vanishes_at(&self, point: &[crate::exactnum::CycNum]) -> Result<bool> {
        for g in &self.generators {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "ideals live in rings with {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }
}

/// `f ∈ I`, by reduction against the reduced Gröbner basis.
pub fn ideal_member(f: &Poly, ideal: &Ideal) -> bool {
    let f = if f.order() == ideal.order {
        f.clone()
    } else {
        f.with_order(ideal.order)
    };
    reduce(&f, ideal.groebner_basis()).is_zero()
}

/// `f ∈ √I`, by the Rabinowitsch trick: `1 ∈ I + ⟨1 - t·f⟩` with a fresh
/// variable `t` appended to the ring.
pub fn radical_member(f: &Poly, ideal: &Ideal) -> bool {
    if f.is_zero() {
        return true;
    }
    let n = ideal.nvars;
    let order = MonomialOrder::GrevLex;
    let positions: Vec<usize> = (0..n).collect();
    let source: &[Poly] = match ideal.cached_gb.get() {
        Some(gb) => gb,
        None => &ideal.generators,
    };
    let mut gens: Vec<Poly> = source
        .iter()
        .map(|g| g.remap(n + 1, &positions, order))
        .collect();
    let t = Poly::var(n, n + 1, order);
    let tf = t.mul(&f.remap(n + 1, &positions, order));
    gens.push(Poly::one(n + 1, order).sub(&tf));
    groebner_basis(&gens).iter().any(Poly::is_constant)
}

fn monomial_intersection(a: &Ideal, b: &Ideal) -> Ideal {
    let mut gens: Vec<Monomial> = Vec::new();
    for f in &a.generators {
        for g in &b.generators {
            gens.push(f.leading_monomial().unwrap().lcm(g.leading_monomial().unwrap()));
        }
    }
    gens.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.exps().cmp(y.exps())));
    gens.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    let one = crate::exactnum::CycNum::one(1);
    let polys = minimal
        .into_iter()
        .map(|m| Poly::monomial(m, one.clone(), a.order))
        .collect();
    Ideal::new(polys, a.nvars, a.order)
}

/// `I ∩ J`, eliminating `t` from `t·I + (1 - t)·J`. Monomial ideals take the
/// lcm shortcut.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_same_ring(b)?;
    if a.generators.is_empty() || b.generators.is_empty() {
        return Ok(Ideal::zero(a.nvars, a.order));
    }
    if a.is_monomial_ideal() && b.is_monomial_ideal() {
        return Ok(monomial_intersection(a, b));
    }
    let n = a.nvars;
    let order = MonomialOrder::Elimination(1);
    let positions: Vec<usize> = (1..=n).collect();
    let t = Poly::var(0, n + 1, order);
    let one_minus_t = Poly::one(n + 1, order).sub(&t);
    let mut gens = Vec::new();
    for f in &a.generators {
        gens.push(t.mul(&f.remap(n + 1, &positions, order)));
    }
    for g in b.generators.iter().map(|g| g.with_order(a.order)) {
        gens.push(one_minus_t.mul(&g.remap(n + 1, &positions, order)));
    }
    let gb = groebner_basis(&gens);
    let kept: Vec<Poly> = gb
        .iter()
        .filter(|p| p.free_of_leading_vars(1))
        .map(|p| p.drop_leading_vars(1, a.order))
        .collect();
    if a.order == MonomialOrder::GrevLex {
        // The block order restricts to graded reverse lex on the remaining
        // variables, so the kept elements are already the reduced basis.
        return Ok(Ideal::from_reduced_basis_trusted(kept, n, a.order));
    }
    Ok(Ideal::new(kept, n, a.order))
}

/// `I ∩ k[x_{k+1}..x_n]`, as an ideal in the remaining variables under
/// graded reverse lex (whose reduced basis is cached).
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal> {
    if k > ideal.nvars {
        return Err(Error::Dimension(format!(
            "cannot eliminate {k} of {} variables",
            ideal.nvars
        )));
    }
    let order = MonomialOrder::Elimination(k);
    let gb = if ideal.order == order {
        ideal.groebner_basis().to_vec()
    } else {
        let gens: Vec<Poly> = ideal.generators.iter().map(|g| g.with_order(order)).collect();
        groebner_basis(&gens)
    };
    let rest = MonomialOrder::GrevLex;
    let kept: Vec<Poly> = gb
        .iter()
        .filter(|p| p.free_of_leading_vars(k))
        .map(|p| p.drop_leading_vars(k, rest))
        .collect();
    let out = Ideal::new(kept, ideal.nvars - k, rest);
    // These elements are the reduced basis for the block order restricted to
    // the remaining variables, which is graded reverse lex.
    let mut sorted = out.generators.clone();
    sorted.sort_by(|a, b| rest.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let _ = out.cached_gb.set(sorted);
    Ok(out)
}

/// Equality of ideals by comparing reduced Gröbner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.check_same_ring(b)?;
    if a.order == b.order {
        return Ok(a.groebner_basis() == b.groebner_basis());
    }
    let b2 = b.with_order(a.order);
    Ok(a.groebner_basis() == b2.groebner_basis())
}

/// Ideal file: `{"vars": [...], "conductor": N, "order": "grlex", "generators": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub conductor: u32,
    #[serde(default = "default_order_name")]
    pub order: String,
    pub generators: Vec<String>,
}

fn default_order_name() -> String {
    "grlex".into()
}

impl IdealFile {
    pub fn to_ideal(&self) -> Result<Ideal> {
        if self.conductor == 0 {
            return Err(Error::Parse("field `conductor` must be positive".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &self.vars {
            if !seen.insert(v) {
                return Err(Error::Parse(format!("field `vars`: duplicate variable {v:?}")));
            }
        }
        let order: MonomialOrder = self
            .order
            .parse()
            .map_err(|e| Error::Parse(format!("field `order`: {e}")))?;
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, s)| {
                parse_poly(s, &self.vars, self.conductor, order)
                    .map_err(|e| Error::Parse(format!("field `generators[{i}]`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(gens, self.vars.len(), order))
    }

    pub fn from_ideal(ideal: &Ideal, vars: &[String], conductor: u32) -> Self {
        IdealFile {
            vars: vars.to_vec(),
            conductor,
            order: ideal.order.name(),
            generators: ideal.generators.iter().map(|g| g.format_with(vars)).collect(),
        }
    }
}

#[cfg(test)]
mod tests;
