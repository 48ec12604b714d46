use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, CycNum, Rational};

/// Multivariate polynomial over a cyclotomic field. Terms are kept strictly
/// decreasing under `order` with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, CycNum)>,
}

impl Poly {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Poly {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: CycNum, nvars: usize, order: MonomialOrder) -> Self {
        Self::monomial(Monomial::one(nvars), c, order)
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(CycNum::one(1), nvars, order)
    }

    pub fn monomial(m: Monomial, c: CycNum, order: MonomialOrder) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            nvars,
            order,
            terms,
        }
    }

    pub fn var(i: usize, nvars: usize, order: MonomialOrder) -> Self {
        Self::monomial(Monomial::var(nvars, i), CycNum::one(1), order)
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(
        nvars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, CycNum)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, CycNum> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(prev) => *prev = &*prev + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly {
            nvars,
            order,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, CycNum)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&CycNum> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|t| t.0.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Largest conductor among the coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.1.conductor())
            .fold(1, num_integer::lcm)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Poly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    fn check_ring(&self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "polynomials from different rings");
        assert_eq!(self.order, other.order, "polynomials under different orders");
    }

    /// `self + coef * shift * g` by merging sorted term lists.
    pub fn add_scaled(&self, coef: &CycNum, shift: &Monomial, g: &Poly) -> Poly {
        self.check_ring(g);
        if coef.is_zero() {
            return self.clone();
        }
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(m, c)| (shift.mul(m), coef * c))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, c) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    let s = c + &d;
                    if !s.is_zero() {
                        out.push((m.clone(), s));
                    }
                }
            }
        }
        Poly {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.add_scaled(&CycNum::one(1), &Monomial::one(self.nvars), other)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add_scaled(&CycNum::from_int(-1, 1), &Monomial::one(self.nvars), other)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&CycNum::from_int(-1, 1))
    }

    /// `self` times the nonzero rational making its coordinates coprime
    /// integers with the leading coefficient's first coordinate positive.
    pub fn primitive(&self) -> Poly {
        match primitive_factor(&self.terms) {
            Some(f) => self.scale(&CycNum::from_rational(&f, self.conductor())),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.order);
        }
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), c * d)).collect(),
        }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_ring(other);
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                prod.push((m.mul(n), c * d));
            }
        }
        Poly::from_terms(self.nvars, self.order, prod)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Result<Poly> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(c) if c.is_one() => Ok(self.clone()),
            Some(c) => Ok(self.scale(&c.inv()?)),
        }
    }

    pub fn evaluate(&self, point: &[CycNum]) -> Result<CycNum> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = CycNum::zero(1);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &x.pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Moves variable `i` to `positions[i]` in a ring with `nvars` variables.
    pub fn remap(&self, nvars: usize, positions: &[usize], order: MonomialOrder) -> Poly {
        Poly::from_terms(
            nvars,
            order,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(nvars, positions), c.clone())),
        )
    }

    /// True when none of the first `k` variables occurs.
    pub fn free_of_leading_vars(&self, k: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0))
    }

    /// Drops the first `k` variables, which must not occur.
    pub fn drop_leading_vars(&self, k: usize, order: MonomialOrder) -> Poly {
        debug_assert!(self.free_of_leading_vars(k));
        Poly::from_terms(
            self.nvars - k,
            order,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.exps()[k..].to_vec()), c.clone())),
        )
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, coef) = match c.to_rational() {
                Some(q) => {
                    let abs = q.abs();
                    let txt = if abs.is_one() && !m.is_one() {
                        String::new()
                    } else {
                        format_rational(&abs)
                    };
                    (q.is_negative(), txt)
                }
                None => (false, format!("({c})")),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&coef);
            if !m.is_one() {
                if !coef.is_empty() {
                    s.push('*');
                }
                s.push_str(&m.format_with(names));
            }
        }
        s
    }
}

/// Default variable names `x1, x2, …`.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

/// Matrix-entry variable names `x11, x12, …, xnn` in row-major order.
pub fn matrix_var_names(n: usize) -> Vec<String> {
    let mut v = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            v.push(format!("x{i}{j}"));
        }
    }
    v
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_var_names(self.nvars)))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.order, self)
    }
}

/// The rational `λ` with `λ·(terms)` having coprime integer coordinates and
/// a leading coefficient whose first nonzero coordinate is positive.
fn primitive_factor(terms: &[(Monomial, CycNum)]) -> Option<Rational> {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for (_, c) in terms {
        let (cg, cd) = c.content_parts();
        g = g.gcd(&cg);
        l = l.lcm(cd);
    }
    if g.is_zero() {
        return None;
    }
    let mut factor = Rational::new(l, g);
    if terms[0].1.first_coordinate_negative() {
        factor = -factor;
    }
    (!factor.is_one()).then_some(factor)
}

fn scale_terms(terms: &mut [(Monomial, CycNum)], factor: &CycNum) {
    for (_, c) in terms.iter_mut() {
        *c = &*c * factor;
    }
}

/// Division without coefficient inversion: returns `r` with no term
/// divisible by a leading monomial of `basis` and `λ·p − r` in the ideal of
/// `basis` for some nonzero rational `λ` (so `r` is zero iff the ordinary
/// remainder is). Each step cross-multiplies by leading coefficients and the
/// rational content is divided out as it goes, which keeps coefficients far
/// smaller than monic division over Q when the basis is not yet reduced.
pub fn reduce_fraction_free<P: Borrow<Poly>>(p: &Poly, basis: &[P]) -> Poly {
    let lts: Vec<(&Monomial, &Poly)> = basis
        .iter()
        .map(|g| g.borrow())
        .filter_map(|g| g.leading_monomial().map(|m| (m, g)))
        .collect();
    let conductor = p.conductor();
    let mut work = p.primitive();
    let mut rem: Vec<(Monomial, CycNum)> = Vec::new();
    let mut steps = 0usize;
    while let Some((m, c)) = work.terms.first().cloned() {
        let divisor = lts.iter().find_map(|(lm, g)| lm.quotient_of(&m).map(|q| (q, *g)));
        let Some((q, g)) = divisor else {
            rem.push(work.terms.remove(0));
            continue;
        };
        let a = g.leading_coeff().unwrap();
        // Multipliers with a2·c = c2·a, cancelling common rational factors.
        let (a2, c2) = match (a.to_rational(), c.to_rational()) {
            (Some(x), Some(y)) => {
                let r = y / x;
                let k = g.conductor().max(conductor);
                (
                    CycNum::from_rational(&Rational::from_integer(r.denom().clone()), k),
                    CycNum::from_rational(&Rational::from_integer(r.numer().clone()), k),
                )
            }
            _ => (a.clone(), c.clone()),
        };
        if !a2.is_one() {
            work = work.scale(&a2);
            scale_terms(&mut rem, &a2);
        }
        work = work.add_scaled(&-&c2, &q, g);
        steps += 1;
        if steps % 8 == 0 {
            let mut all: Vec<(Monomial, CycNum)> = rem.iter().cloned().chain(work.terms.iter().cloned()).collect();
            if let Some(f) = primitive_factor(&all) {
                let f = CycNum::from_rational(&f, conductor.max(work.conductor()));
                scale_terms(&mut all, &f);
                work.terms = all.split_off(rem.len());
                rem = all;
            }
        }
    }
    Poly {
        nvars: p.nvars,
        order: p.order,
        terms: rem,
    }
    .primitive()
}

/// Multivariate division: the remainder of `p` modulo `basis`.
///
/// No term of the result is divisible by a leading monomial of `basis`, and
/// `p - result` lies in the ideal generated by `basis`.
pub fn reduce<P: Borrow<Poly>>(p: &Poly, basis: &[P]) -> Poly {
    let lts: Vec<(&Monomial, &Poly)> = basis
        .iter()
        .map(|g| g.borrow())
        .filter_map(|g| g.leading_monomial().map(|m| (m, g)))
        .collect();
    let mut work = p.clone();
    let mut rem: Vec<(Monomial, CycNum)> = Vec::new();
    while let Some((m, c)) = work.terms.first().cloned() {
        let divisor = lts.iter().find_map(|(lm, g)| lm.quotient_of(&m).map(|q| (q, *g)));
        match divisor {
            Some((q, g)) => {
                let lc = g.leading_coeff().unwrap();
                let coef = if lc.is_one() {
                    -&c
                } else {
                    -&c.checked_div(lc).expect("nonzero leading coefficient")
                };
                work = work.add_scaled(&coef, &q, g);
            }
            None => {
                rem.push(work.terms.remove(0));
            }
        }
    }
    Poly {
        nvars: p.nvars,
        order: p.order,
        terms: rem,
    }
}
