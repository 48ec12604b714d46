//! Buchberger's algorithm with the Gebauer–Möller pair update.

use crate::multipoly::{reduce, reduce_fraction_free, Monomial, MonomialOrder, Poly};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn lm(p: &Poly) -> &Monomial {
    p.leading_monomial().expect("nonzero polynomial")
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let l = lm(f).lcm(lm(g));
    let sf = lm(f).quotient_of(&l).unwrap();
    let sg = lm(g).quotient_of(&l).unwrap();
    let lf = f.leading_coeff().unwrap();
    let lg = g.leading_coeff().unwrap();
    // lg * sf * f - lf * sg * g
    f.mul_monomial(&sf)
        .scale(lg)
        .add_scaled(&-lf, &sg, g)
}

/// Normal strategy: the pair whose lcm is smallest in the monomial order
/// itself (not by degree first, which behaves badly for elimination
/// orders); ties go to the earlier pair.
fn select(pairs: &mut Vec<Pair>, order: MonomialOrder) -> Option<Pair> {
    let best = pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm))?
        .0;
    Some(pairs.remove(best))
}

struct State {
    polys: Vec<Poly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn basis(&self) -> Vec<&Poly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer–Möller update for a new reduced (primitive) element `h`.
    fn update(&mut self, h: Poly) {
        let hi = self.polys.len();
        let lh = lm(&h).clone();
        let candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| Pair {
                i: g,
                j: hi,
                lcm: lm(&self.polys[g]).lcm(&lh),
            })
            .collect();

        // Chain criterion among the new pairs.
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = lm(&self.polys[p.i]).is_coprime(&lh);
            let dominated = candidates[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        // Product criterion.
        kept.retain(|p| !lm(&self.polys[p.i]).is_coprime(&lh));

        // Chain criterion on the old pairs.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = lm(&polys[p.i]).lcm(&lh);
            let lj = lm(&polys[p.j]).lcm(&lh);
            !(lh.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        self.pairs.extend(kept);

        for g in 0..hi {
            if self.active[g] && lh.divides(lm(&self.polys[g])) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

}

fn unit_basis(template: &Poly) -> Vec<Poly> {
    vec![Poly::one(template.nvars(), template.order())]
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial. Deterministic in the input order.
///
/// All inputs must share one ring and monomial order. The zero ideal gives
/// an empty basis; an ideal containing a nonzero constant gives `[1]`.
pub fn groebner_basis(gens: &[Poly]) -> Vec<Poly> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let template = first.clone();
    let order = template.order();
    let mut st = State {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in gens {
        let h = reduce_fraction_free(f, &st.basis());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(&template);
        }
        st.update(h);
    }
    while let Some(pair) = select(&mut st.pairs, order) {
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        let h = reduce_fraction_free(&s, &st.basis());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(&template);
        }
        st.update(h);
    }
    interreduce(st.basis().into_iter().cloned().collect())
}

/// Turns a Gröbner basis with pairwise non-dividing leading monomials into
/// the reduced one.
fn interreduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    let order = match basis.first() {
        Some(p) => p.order(),
        None => return basis,
    };
    basis.sort_by(|a, b| order.cmp(lm(a), lm(b)));
    for i in 0..basis.len() {
        let (before, rest) = basis.split_at(i);
        let (cur, after) = rest.split_first().unwrap();
        let others: Vec<&Poly> = before.iter().chain(after.iter()).collect();
        // The leading monomial is irreducible by the others, so only the
        // tail changes.
        basis[i] = reduce_fraction_free(cur, &others)
            .monic()
            .expect("nonzero leading coefficient");
    }
    basis
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Poly]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !reduce(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True when `basis` is monic, inter-reduced, and has distinct leading terms.
pub fn is_reduced(basis: &[Poly]) -> bool {
    for (i, g) in basis.iter().enumerate() {
        if g.leading_coeff().is_none_or(|c| !c.is_one()) {
            return false;
        }
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            if g.terms().iter().any(|(m, _)| lm(h).divides(m)) {
                return false;
            }
        }
    }
    true
}
