//! Hilbert series of monomial ideals, and the (dimension, degree) profile of
//! a variety read off its leading-term ideal.
//!
//! Convention: the profile is affine. For an ideal `I` and a graded order,
//! the number of standard monomials of degree at most `s` is eventually a
//! polynomial in `s`; its degree is the dimension of V(I) and its leading
//! coefficient times dimension! is the degree. For homogeneous ideals this is
//! the affine cone, so a union of `k` lines through the origin has profile
//! (1, k).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarietyProfile {
    pub dimension: usize,
    pub degree: u64,
}

/// Hilbert series of `k[x_1..x_n] / I` for a monomial ideal `I`, stored as the
/// numerator `N(t)` of `N(t) / (1 - t)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<BigInt>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn upoly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn upoly_mul_one_minus_tpow(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = a.to_vec();
    out.resize(a.len() + d, BigInt::zero());
    for (i, c) in a.iter().enumerate() {
        out[i + d] -= c;
    }
    out
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.pure_power_var().is_none()).collect();
    if mixed.is_empty() {
        // Pure powers of distinct variables form a regular sequence.
        return gens.iter().fold(vec![BigInt::one()], |acc, g| {
            upoly_mul_one_minus_tpow(&acc, g.degree() as usize)
        });
    }
    if gens.len() == 1 {
        return upoly_mul_one_minus_tpow(&[BigInt::one()], gens[0].degree() as usize);
    }
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in &mixed {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let var = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    // x^e is not in I: a pure power of x in a minimal generating set must
    // have exponent above that of x in any mixed generator.
    let e = mixed
        .iter()
        .map(|g| g.exps()[var])
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let mut pivot = vec![0; n];
    pivot[var] = e;
    let pivot = Monomial::new(pivot);

    let mut sum_gens = gens.clone();
    sum_gens.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exps().to_vec();
            exps[var] = exps[var].saturating_sub(e);
            Monomial::new(exps)
        })
        .collect();

    let mut out = numerator(sum_gens);
    upoly_add(&mut out, &numerator(colon), e as usize);
    trim(out)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl HilbertSeries {
    pub fn of_monomial_ideal(gens: &[Monomial], nvars: usize) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        HilbertSeries {
            nvars,
            numerator: trim(numerator(gens.to_vec())),
        }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of standard monomials of degree exactly `d`.
    pub fn value(&self, d: u32) -> BigInt {
        let n = self.nvars as i64;
        let d = d as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if n == 0 {
                    if d == k as i64 {
                        c.clone()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    c * binomial(d - k as i64 + n - 1, n - 1)
                }
            })
            .sum()
    }

    /// Number of standard monomials of degree at most `d`.
    pub fn affine_value(&self, d: u32) -> BigInt {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, c)| c * binomial(d as i64 - k as i64 + n, n))
            .sum()
    }

    /// Degree beyond which `value` agrees with the Hilbert polynomial.
    pub fn regularity_index(&self) -> u32 {
        (self.numerator.len() as u32).saturating_sub(self.nvars as u32)
    }

    /// Affine dimension and degree.
    pub fn profile(&self) -> Result<VarietyProfile> {
        if self.numerator.is_empty() {
            return Err(Error::Invalid("the unit ideal has an empty variety".into()));
        }
        let mut q = self.numerator.clone();
        let mut k = 0usize;
        while q.iter().sum::<BigInt>().is_zero() {
            // q(t) = (1 - t) * r(t) with r_i = sum_{j <= i} q_j
            let mut acc = BigInt::zero();
            let r: Vec<BigInt> = q[..q.len() - 1]
                .iter()
                .map(|c| {
                    acc += c;
                    acc.clone()
                })
                .collect();
            q = trim(r);
            k += 1;
        }
        let pole = self.nvars + 1 - k;
        let degree: BigInt = q.iter().sum();
        if !degree.is_positive() {
            return Err(Error::Inconsistent(format!(
                "non-positive degree {degree} from Hilbert numerator"
            )));
        }
        Ok(VarietyProfile {
            dimension: pole - 1,
            degree: degree
                .to_u64()
                .ok_or_else(|| Error::Unsupported("degree exceeds 64 bits".into()))?,
        })
    }
}

/// Dimension and degree of V(I) from the leading monomials of a Gröbner basis
/// of `I` under a graded order.
pub fn hilbert_profile(leading_terms: &[Monomial], nvars: usize) -> Result<VarietyProfile> {
    if nvars == 0 {
        return Err(Error::Invalid("ring with no variables".into()));
    }
    HilbertSeries::of_monomial_ideal(leading_terms, nvars).profile()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn brute_count(gens: &[Monomial], n: usize, d: u32) -> usize {
        Monomial::all_of_degree(n, d)
            .into_iter()
            .filter(|x| !gens.iter().any(|g| g.divides(x)))
            .count()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            hilbert_profile(&[m(&[1, 0])], 2).unwrap(),
            VarietyProfile { dimension: 1, degree: 1 }
        );
        assert_eq!(
            hilbert_profile(&[m(&[2, 0])], 2).unwrap(),
            VarietyProfile { dimension: 1, degree: 2 }
        );
        // x12, x21, x11^3 in (x11, x12, x21, x22): three lines through 0.
        assert_eq!(
            hilbert_profile(&[m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[3, 0, 0, 0])], 4).unwrap(),
            VarietyProfile { dimension: 1, degree: 3 }
        );
        assert_eq!(
            hilbert_profile(&[], 4).unwrap(),
            VarietyProfile { dimension: 4, degree: 1 }
        );
        assert!(hilbert_profile(&[], 0).is_err());
        assert!(hilbert_profile(&[m(&[0, 0])], 2).is_err());
    }

    #[test]
    fn hilbert_function_of_three_lines() {
        // Values h(0..6) by enumeration: 1, 2, 3, 3, 3, ...
        let gens = [m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[3, 0, 0, 0])];
        let hs = HilbertSeries::of_monomial_ideal(&gens, 4);
        let expected = [1, 2, 3, 3, 3, 3, 3];
        for (d, &e) in expected.iter().enumerate() {
            assert_eq!(brute_count(&gens, 4, d as u32), e);
            assert_eq!(hs.value(d as u32), BigInt::from(e));
        }
    }

    #[test]
    fn zero_dimensional_degree_counts_standard_monomials() {
        let gens = [m(&[3, 0]), m(&[1, 2]), m(&[0, 4])];
        let total: usize = (0..10).map(|d| brute_count(&gens, 2, d)).sum();
        assert_eq!(
            hilbert_profile(&gens, 2).unwrap(),
            VarietyProfile { dimension: 0, degree: total as u64 }
        );
    }

    fn arb_gens(n: usize) -> impl Strategy<Value = Vec<Monomial>> {
        proptest::collection::vec(proptest::collection::vec(0u32..4, n), 1..6)
            .prop_map(|v| v.into_iter().map(Monomial::new).filter(|x| !x.is_one()).collect())
    }

    proptest! {
        #[test]
        fn series_matches_enumeration(gens in arb_gens(3)) {
            let hs = HilbertSeries::of_monomial_ideal(&gens, 3);
            for d in 0..9 {
                prop_assert_eq!(hs.value(d), BigInt::from(brute_count(&gens, 3, d)));
            }
        }

        #[test]
        fn zero_dim_degree_is_standard_monomial_count(a in 1u32..6, b in 1u32..6, c in 1u32..6, extra in arb_gens(3)) {
            let mut gens = vec![m(&[a, 0, 0]), m(&[0, b, 0]), m(&[0, 0, c])];
            gens.extend(extra);
            let count: usize = (0..=(a + b + c)).map(|d| brute_count(&gens, 3, d)).sum();
            prop_assume!(count <= 50);
            let p = hilbert_profile(&gens, 3).unwrap();
            prop_assert_eq!(p, VarietyProfile { dimension: 0, degree: count as u64 });
        }

        #[test]
        fn invariant_under_variable_permutation(gens in arb_gens(4), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
            prop_assume!(!gens.is_empty());
            let permuted: Vec<Monomial> = gens.iter().map(|g| g.remap(4, &perm)).collect();
            prop_assert_eq!(hilbert_profile(&gens, 4).ok(), hilbert_profile(&permuted, 4).ok());
        }
    }
}
