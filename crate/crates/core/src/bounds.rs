//! Closed-form degree bounds, evaluated exactly with big integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::envelope::gl2_classification_row;
use crate::error::{Error, Result};
use crate::multipoly::VarietyProfile;

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big(n - i) / big(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * big(k))
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Value of `(√(8n) + 1)^{2n²} − (√(8n) − 1)^{2n²}`.
///
/// Expanding binomially, only odd powers of `s = √(8n)` survive, so the
/// value is `s·K` with `K = 2·Σ_j C(2n², 2j+1)·(8n)^j`. It is an integer
/// exactly when `8n` is a square; otherwise `value` is its ceiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurValue {
    pub value: BigInt,
    pub is_integer: bool,
}

pub fn schur_j(n: u64) -> Result<SchurValue> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let big_n = 2 * n * n;
    let eight_n = big(8 * n);
    let mut k = BigInt::zero();
    let mut power = BigInt::one();
    let mut j = 0;
    while 2 * j + 1 <= big_n {
        k += binomial(big_n, 2 * j + 1) * &power;
        power *= &eight_n;
        j += 1;
    }
    k *= 2;
    let root = (8 * n).sqrt();
    if root * root == 8 * n {
        return Ok(SchurValue { value: big(root) * k, is_integer: true });
    }
    // ceil(√(8n)·K) = isqrt(8n·K²) + 1 since 8n·K² is not a square.
    let radicand: BigUint = (&eight_n * &k * &k).to_biguint().expect("positive");
    Ok(SchurValue {
        value: BigInt::from(radicand.sqrt()) + 1,
        is_integer: false,
    })
}

/// Known values and the general upper bound `2·3^{⌊n²/4⌋}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABound {
    pub exact: Option<BigInt>,
    pub upper: BigInt,
}

impl ABound {
    /// The exact value where known, else the upper bound.
    pub fn best(&self) -> &BigInt {
        self.exact.as_ref().unwrap_or(&self.upper)
    }
}

pub fn a_bound(n: u64) -> Result<ABound> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let exact = match n {
        1 => Some(big(2)),
        2 => Some(big(6)),
        3 => Some(big(12)),
        _ => None,
    };
    Ok(ABound {
        exact,
        upper: big(2) * Pow::pow(big(3), n * n / 4),
    })
}

/// `∏_{k=1}^{n−1} k!`.
pub fn unipotent_bound(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    Ok((1..n).map(factorial).product())
}

/// `J(n)·A(n−1)·n^{n²+n−5}`, with exact `A` where known.
pub fn reductive_bound(n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Invalid(format!(
            "reductive bound needs n >= 2 (exponent n^2+n-5 is negative for n = {n})"
        )));
    }
    let j = schur_j(n)?.value;
    let a = a_bound(n - 1)?;
    Ok(j * a.best() * Pow::pow(big(n), n * n + n - 5))
}

/// `2^{n(n−1)/2}`.
pub fn product_factor(n: u64) -> BigInt {
    pow2(n * n.saturating_sub(1) / 2)
}

/// `D1·D2·2^{n(n−1)/2}`.
pub fn product_bound(d1: u64, d2: u64, n: u64) -> Result<BigInt> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::Invalid("degrees must be positive".into()));
    }
    Ok(big(d1) * big(d2) * product_factor(n))
}

/// `reductive(n)·2^{n(n−1)/2}·∏_{k<n} k!`.
pub fn tight_bound(n: u64) -> Result<BigInt> {
    Ok(reductive_bound(n)? * product_factor(n) * unipotent_bound(n)?)
}

/// 1, 6, 360 for n = 1, 2, 3 and `(4n)^{3n²}` beyond.
pub fn headline_bound(n: u64) -> Result<BigInt> {
    match n {
        0 => Err(Error::Invalid("n must be positive".into())),
        1 => Ok(big(1)),
        2 => Ok(big(6)),
        3 => Ok(big(360)),
        _ => Ok(Pow::pow(big(4 * n), 3 * n * n)),
    }
}

/// `n!`, the degree of permutation-times-diagonal groups.
pub fn factorial_lower_bound(n: u64) -> BigInt {
    factorial(n)
}

/// The GL₃ case with a 2-dimensional block and a unipotent radical of
/// degree 1: `4·max_rows(3^{dim−1}·deg)·1`, the maximum taken over the
/// extreme profiles of the GL₂ classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCaseBound {
    pub normalizer_term: BigInt,
    pub bound: BigInt,
}

pub fn gl2_block_case_bound() -> BlockCaseBound {
    let rows = [(4usize, 1u64), (3, 1), (2, 2), (2, 1), (1, 60)];
    let normalizer_term = rows
        .iter()
        .map(|&(dimension, degree)| {
            debug_assert!(gl2_classification_row(VarietyProfile { dimension, degree }).is_some());
            Pow::pow(big(3), dimension as u64 - 1) * big(degree)
        })
        .max()
        .expect("nonempty");
    let unipotent_degree = BigInt::one();
    BlockCaseBound {
        bound: big(4) * &normalizer_term * unipotent_degree,
        normalizer_term,
    }
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

fn ser_opt_big<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_big(v, s),
        None => s.serialize_none(),
    }
}

/// Every bound at one `n`. Composite bounds that need `n ≥ 2` are absent
/// for `n = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    #[serde(serialize_with = "ser_big")]
    pub schur_j: BigInt,
    pub schur_j_is_integer: bool,
    #[serde(serialize_with = "ser_opt_big")]
    pub a_exact: Option<BigInt>,
    #[serde(serialize_with = "ser_big")]
    pub a_upper: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub unipotent: BigInt,
    #[serde(serialize_with = "ser_opt_big")]
    pub reductive: Option<BigInt>,
    #[serde(serialize_with = "ser_big")]
    pub product_factor: BigInt,
    #[serde(serialize_with = "ser_opt_big")]
    pub tight: Option<BigInt>,
    #[serde(serialize_with = "ser_big")]
    pub headline: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub factorial_lower: BigInt,
}

impl BoundReport {
    pub fn new(n: u64) -> Result<Self> {
        let j = schur_j(n)?;
        let a = a_bound(n)?;
        Ok(BoundReport {
            n,
            schur_j: j.value,
            schur_j_is_integer: j.is_integer,
            a_exact: a.exact,
            a_upper: a.upper,
            unipotent: unipotent_bound(n)?,
            reductive: (n >= 2).then(|| reductive_bound(n)).transpose()?,
            product_factor: product_factor(n),
            tight: (n >= 2).then(|| tight_bound(n)).transpose()?,
            headline: headline_bound(n)?,
            factorial_lower: factorial_lower_bound(n),
        })
    }

    /// `tight ≤ headline`, where both are defined.
    pub fn tight_within_headline(&self) -> Option<bool> {
        self.tight.as_ref().map(|t| t <= &self.headline)
    }
}

/// Reports for `from..=to`.
pub fn bound_table(from: u64, to: u64) -> Result<Vec<BoundReport>> {
    if from == 0 || to < from {
        return Err(Error::Invalid(format!("bad range {from}..={to}")));
    }
    (from..=to).map(BoundReport::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    /// Independent oracle: expand `(r + 1)^N − (r − 1)^N` for integer `r`.
    fn direct_difference(r: u64, n_exp: u32) -> BigInt {
        Pow::pow(big(r + 1), n_exp) - Pow::pow(big(r - 1), n_exp)
    }

    #[test]
    fn schur_values() {
        let two = schur_j(2).unwrap();
        assert_eq!(two, SchurValue { value: big(384064), is_integer: true });
        assert_eq!(two.value, direct_difference(4, 8));
        let eight = schur_j(8).unwrap();
        assert!(eight.is_integer);
        assert_eq!(eight.value, direct_difference(8, 128));
        // 4·√8 = 11.31…
        assert_eq!(schur_j(1).unwrap(), SchurValue { value: big(12), is_integer: false });
        // (√24 + 1)^18 − (√24 − 1)^18 by floating point, for magnitude only.
        let s = 24f64.sqrt();
        let approx = (s + 1.0).powi(18) - (s - 1.0).powi(18);
        let exact: f64 = schur_j(3).unwrap().value.to_string().parse().unwrap();
        assert!((exact - approx).abs() / approx < 1e-9);
        assert!(schur_j(0).is_err());
    }

    #[test]
    fn small_values() {
        assert_eq!(a_bound(1).unwrap(), ABound { exact: Some(big(2)), upper: big(2) });
        assert_eq!(a_bound(2).unwrap(), ABound { exact: Some(big(6)), upper: big(6) });
        assert_eq!(a_bound(3).unwrap(), ABound { exact: Some(big(12)), upper: big(18) });
        assert_eq!(a_bound(4).unwrap().exact, None);
        assert_eq!(a_bound(4).unwrap().upper, big(162));
        let u: Vec<BigInt> = (1..=4).map(|n| unipotent_bound(n).unwrap()).collect();
        assert_eq!(u, [big(1), big(1), big(2), big(12)]);
        assert_eq!(reductive_bound(2).unwrap(), big(1536256));
        assert_eq!(
            reductive_bound(3).unwrap(),
            schur_j(3).unwrap().value * big(6) * big(2187)
        );
        assert!(reductive_bound(1).is_err());
        assert_eq!(product_bound(1, 1, 2).unwrap(), big(2));
        assert_eq!(product_bound(9, 2, 3).unwrap(), big(144));
        assert_eq!(tight_bound(2).unwrap(), big(3072512));
        let h: Vec<BigInt> = (1..=3).map(|n| headline_bound(n).unwrap()).collect();
        assert_eq!(h, [big(1), big(6), big(360)]);
        assert_eq!(headline_bound(4).unwrap(), pow2(192));
        assert_eq!(
            gl2_block_case_bound(),
            BlockCaseBound { normalizer_term: big(60), bound: big(240) }
        );
        assert_eq!(b("240"), big(4) * big(60) * big(1));
    }

    #[test]
    fn table_relations() {
        for r in bound_table(1, 16).unwrap() {
            assert!(r.factorial_lower <= r.headline, "n = {}", r.n);
            if let Some(a) = &r.a_exact {
                assert!(a <= &r.a_upper);
            }
            if r.n >= 4 {
                assert_eq!(r.tight_within_headline(), Some(true), "n = {}", r.n);
            }
            if r.n >= 2 {
                assert_eq!(
                    r.tight.clone().unwrap(),
                    r.reductive.clone().unwrap() * &r.product_factor * &r.unipotent
                );
            }
        }
        assert!(bound_table(0, 3).is_err());
        assert!(bound_table(3, 2).is_err());
    }

    #[test]
    fn json_uses_plain_numbers() {
        let json = serde_json::to_string(&BoundReport::new(3).unwrap()).unwrap();
        assert!(json.contains(r#""headline":360"#), "{json}");
        assert!(json.contains(r#""a_exact":12"#), "{json}");
        let one = serde_json::to_string(&BoundReport::new(1).unwrap()).unwrap();
        assert!(one.contains(r#""reductive":null"#), "{one}");
    }
}
