use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Euler's totient, the degree of the `n`-th cyclotomic polynomial.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

type PhiCache = RwLock<HashMap<u32, Arc<Vec<i64>>>>;

fn phi_cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of Φ_n, lowest degree first. Memoized; `n` must be positive.
fn phi_coeffs(n: u32) -> Arc<Vec<i64>> {
    debug_assert!(n > 0);
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // z^n - 1 = prod_{d | n} Φ_d; divide out the proper divisors.
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let div = phi_coeffs(d);
        num = exact_monic_division(&num, &div);
    }
    let coeffs: Vec<i64> = num
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    let coeffs = Arc::new(coeffs);
    phi_cache().write().unwrap().insert(n, coeffs.clone());
    coeffs
}

fn exact_monic_division(num: &[i128], div: &[i64]) -> Vec<i128> {
    let dn = div.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in div.iter().enumerate() {
                rem[i + j] -= c * d as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// The `n`-th cyclotomic polynomial Φ_n as integer coefficients, lowest degree
/// first. Monic of degree φ(n).
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    Ok(phi_coeffs(n).iter().map(|&c| BigInt::from(c)).collect())
}

/// An element of Q(ζ_N), stored in the power basis 1, ζ, …, ζ^{φ(N)-1} as
/// integer numerators over one common positive denominator.
#[derive(Clone)]
pub struct CycNum {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn raw(conductor: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut c = CycNum { conductor, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero(conductor: u32) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        CycNum {
            conductor,
            num: vec![BigInt::zero(); euler_phi(conductor)],
            den: BigInt::one(),
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(&Rational::one(), conductor)
    }

    pub fn from_int(v: i64, conductor: u32) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()), conductor)
    }

    pub fn from_rational(q: &Rational, conductor: u32) -> Self {
        let mut c = Self::zero(conductor);
        c.num[0] = q.numer().clone();
        c.den = q.denom().clone();
        c
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self::from_unreduced(conductor, v, BigInt::one())
    }

    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    /// Builds an element from power-basis coefficients; the length must be φ(N).
    pub fn from_coeffs(conductor: u32, coeffs: &[Rational]) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::ZeroConductor);
        }
        let expected = euler_phi(conductor);
        if coeffs.len() != expected {
            return Err(Error::CoefficientCount {
                conductor,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self::from_rational_poly(conductor, coeffs))
    }

    /// Reduces an arbitrary polynomial in ζ_N (rational coefficients) mod Φ_N.
    pub fn from_rational_poly(conductor: u32, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coeffs
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        Self::from_unreduced(conductor, num, den)
    }

    fn from_unreduced(conductor: u32, mut num: Vec<BigInt>, den: BigInt) -> Self {
        let phi = phi_coeffs(conductor);
        reduce_mod_phi(&mut num, &phi);
        num.resize(phi.len() - 1, BigInt::zero());
        Self::raw(conductor, num, den)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The gcd of the integer numerators (zero for zero) and the common
    /// denominator; dividing by `gcd/den` leaves coprime integer coordinates.
    pub(crate) fn content_parts(&self) -> (BigInt, &BigInt) {
        let g = self.num.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        (g, &self.den)
    }

    /// True when the first nonzero power-basis coordinate is negative.
    pub(crate) fn first_coordinate_negative(&self) -> bool {
        self.num.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative())
    }

    /// Power-basis coefficients as rationals (length φ(N)).
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.num[0] == self.den
    }

    /// True when the element lies in Q (only the constant coordinate is nonzero).
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Same field element with conductor `m`, via ζ_N ↦ ζ_m^{m/N}.
    pub fn embed_into(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroConductor);
        }
        if m % self.conductor != 0 {
            return Err(Error::ConductorMismatch {
                from: self.conductor,
                to: m,
            });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Ok(Self::from_unreduced(m, v, self.den.clone()))
    }

    fn promote(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self) {
        let m = self.conductor.lcm(&other.conductor);
        let a = if m == self.conductor {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed_into(m).unwrap())
        };
        let b = other.embed_into(m).unwrap();
        (a, b)
    }

    fn add_same(&self, other: &Self, negate: bool) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &other.den, b * &self.den);
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Self::raw(self.conductor, num, den)
    }

    fn mul_same(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.conductor);
        }
        if self.is_rational() {
            return other.scale(&self.num[0], &self.den);
        }
        if other.is_rational() {
            return self.scale(&other.num[0], &other.den);
        }
        let n = self.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let phi = phi_coeffs(self.conductor);
        reduce_mod_phi(&mut prod, &phi);
        prod.truncate(n);
        Self::raw(self.conductor, prod, &self.den * &other.den)
    }

    fn scale(&self, p: &BigInt, q: &BigInt) -> Self {
        Self::raw(
            self.conductor,
            self.num.iter().map(|c| c * p).collect(),
            &self.den * q,
        )
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(&q.recip(), self.conductor));
        }
        let phi: Vec<Rational> = phi_coeffs(self.conductor)
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        let a = rpoly_trim(self.coeffs());
        // Invariant: s_i * a ≡ r_i (mod Φ).
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = rpoly_divrem(&r0, &r1);
            let s2 = rpoly_sub(&s0, &rpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            debug_assert!(!r1.is_empty(), "Φ_N is irreducible, so gcd is a unit");
        }
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Self::from_rational_poly(self.conductor, &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The multiplicative order if this is a root of unity.
    ///
    /// Roots of unity in Q(ζ_N) are ±ζ_N^k, so every order divides lcm(2, N).
    pub fn is_root_of_unity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = (self.conductor as u64).lcm(&2);
        if !self.pow(bound).is_one() {
            return None;
        }
        (1..=bound)
            .filter(|k| bound % k == 0)
            .find(|&k| self.pow(k).is_one())
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (gcd(k, N) = 1).
    pub fn galois_conjugate(&self, k: u32) -> Self {
        let n = self.conductor as usize;
        let mut v = vec![BigInt::zero(); n.max(1)];
        for (i, c) in self.num.iter().enumerate() {
            v[(i * k as usize) % n] += c;
        }
        Self::from_unreduced(self.conductor, v, self.den.clone())
    }

    /// Complex approximation, for diagnostics only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.num.iter().enumerate() {
            let a = 2.0 * std::f64::consts::PI * i as f64 / self.conductor as f64;
            let c = c.to_f64().unwrap_or(f64::NAN) / d;
            re += c * a.cos();
            im += c * a.sin();
        }
        (re, im)
    }

    /// Text that identifies the value at this conductor; equal values with
    /// equal conductors give equal keys.
    pub fn repr_key(&self) -> String {
        let mut s = format!("{}|{}", self.conductor, self.den);
        for c in &self.num {
            s.push(',');
            s.push_str(&c.to_string());
        }
        s
    }
}

fn reduce_mod_phi(v: &mut Vec<BigInt>, phi: &[i64]) {
    let deg = phi.len() - 1;
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[i]);
        for (j, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                v[i - deg + j] -= &c * p;
            }
        }
    }
}

fn rpoly_trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    rpoly_trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn rpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rpoly_trim(out)
}

fn rpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] -= &c * y;
            }
        }
        q[i] = c;
    }
    (rpoly_trim(q), rpoly_trim(r))
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.promote(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            self.add_same(rhs, false)
        } else {
            let (a, b) = self.promote(rhs);
            a.add_same(&b, false)
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            self.add_same(rhs, true)
        } else {
            let (a, b) = self.promote(rhs);
            a.add_same(&b, true)
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            self.mul_same(rhs)
        } else {
            let (a, b) = self.promote(rhs);
            a.mul_same(&b)
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    /// Polynomial in `z` (standing for ζ_N), highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, q) in self.coeffs().into_iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let abs = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", format_rational(&abs))?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.conductor, self)
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumJson {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumJson {
            conductor: self.conductor,
            coeffs: self.coeffs().iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CycNumJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        CycNum::from_coeffs(raw.conductor, &coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Φ_n computed independently: roots of z^n - 1 of exact order n, multiplied
    /// out numerically and rounded.
    fn phi_by_roots(n: u32) -> Vec<i64> {
        let mut re = vec![1.0f64];
        let mut im = vec![0.0f64];
        for k in 1..=n {
            if (k as u64).gcd(&(n as u64)) != 1 {
                continue;
            }
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let (wr, wi) = (a.cos(), a.sin());
            let mut nr = vec![0.0; re.len() + 1];
            let mut ni = vec![0.0; re.len() + 1];
            for i in 0..re.len() {
                nr[i + 1] += re[i];
                ni[i + 1] += im[i];
                nr[i] -= re[i] * wr - im[i] * wi;
                ni[i] -= re[i] * wi + im[i] * wr;
            }
            re = nr;
            im = ni;
        }
        re.iter().map(|c| c.round() as i64).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(0), Err(Error::ZeroConductor));
        for n in 1..=40 {
            assert_eq!(
                cyclotomic_polynomial(n).unwrap(),
                ints(&phi_by_roots(n)),
                "n = {n}"
            );
            assert_eq!(cyclotomic_polynomial(n).unwrap().len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn basic_products() {
        let i = CycNum::zeta(4);
        assert_eq!(&i * &i, CycNum::from_int(-1, 4));
        assert_eq!(CycNum::zeta(5).inv().unwrap(), CycNum::zeta_pow(5, 4));
        let z6 = CycNum::zeta(6);
        assert_eq!(&z6 * &z6, &z6 - &CycNum::one(6));
        assert_eq!(CycNum::zero(7).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn embedding() {
        let minus_one = CycNum::from_int(-1, 2);
        assert_eq!(minus_one.embed_into(4).unwrap(), CycNum::zeta_pow(4, 2));
        assert_eq!(
            CycNum::zeta(3).embed_into(6).unwrap(),
            CycNum::zeta_pow(6, 2)
        );
        assert_eq!(
            CycNum::zeta(4).embed_into(6),
            Err(Error::ConductorMismatch { from: 4, to: 6 })
        );
        let a = CycNum::zeta(3);
        assert_eq!(a.embed_into(3).unwrap(), a);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CycNum::one(1).is_root_of_unity(), Some(1));
        assert_eq!(CycNum::zeta(6).is_root_of_unity(), Some(6));
        assert_eq!(CycNum::from_int(2, 1).is_root_of_unity(), None);
        assert_eq!(CycNum::from_int(-1, 1).is_root_of_unity(), Some(2));
        // -ζ_5 has order 10 inside Q(ζ_5).
        assert_eq!((-CycNum::zeta(5)).is_root_of_unity(), Some(10));
        assert_eq!(CycNum::zero(3).is_root_of_unity(), None);
    }

    #[test]
    fn zeta_orders_exhaustive() {
        for n in 1..=24u32 {
            let z = CycNum::zeta(n);
            assert!(z.pow(n as u64).is_one(), "ζ_{n}^{n} != 1");
            for k in 1..n {
                assert!(!z.pow(k as u64).is_one(), "ζ_{n}^{k} == 1");
            }
        }
    }

    #[test]
    fn mixed_conductor_promotes_to_lcm() {
        let s = &CycNum::zeta(4) + &CycNum::zeta(3);
        assert_eq!(s.conductor(), 12);
        assert_eq!(&s - &CycNum::zeta(3), CycNum::zeta(4));
        // Same value at different conductors compares equal.
        assert_eq!(CycNum::from_int(5, 1), CycNum::from_int(5, 8));
    }

    #[test]
    fn sqrt5_in_q_zeta5() {
        let z = CycNum::zeta(5);
        let s = &(&(&z - &z.pow(2)) - &z.pow(3)) + &z.pow(4);
        assert_eq!(&s * &s, CycNum::from_int(5, 5));
    }

    #[test]
    fn display_and_json() {
        let c = CycNum::from_coeffs(
            5,
            &[
                parse_rational("1/2").unwrap(),
                parse_rational("-1").unwrap(),
                Rational::zero(),
                parse_rational("3").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(c.to_string(), "3*z^3 - z + 1/2");
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"conductor":5,"coeffs":["1/2","-1","0","3"]}"#);
        let back: CycNum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<CycNum>(r#"{"conductor":5,"coeffs":["1"]}"#).is_err());
    }

    fn arb_cyc(conductor: u32) -> impl Strategy<Value = CycNum> {
        let n = euler_phi(conductor);
        proptest::collection::vec((-20i64..20, 1i64..6), n).prop_map(move |v| {
            let qs: Vec<Rational> = v
                .into_iter()
                .map(|(p, q)| Rational::new(p.into(), q.into()))
                .collect();
            CycNum::from_coeffs(conductor, &qs).unwrap()
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
        prop_oneof![Just(3u32), Just(5), Just(8), Just(12), Just(7)]
            .prop_flat_map(|n| (arb_cyc(n), arb_cyc(n), arb_cyc(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn embedding_is_a_homomorphism((a, b, _c) in arb_triple(), k in 1u32..4) {
            let m = a.conductor() * k;
            let ea = a.embed_into(m).unwrap();
            let eb = b.embed_into(m).unwrap();
            prop_assert_eq!((&a * &b).embed_into(m).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).embed_into(m).unwrap(), &ea + &eb);
        }

        #[test]
        fn representation_is_canonical((a, b, _c) in arb_triple()) {
            let same_value = a == b;
            let same_key = a.repr_key() == b.repr_key();
            prop_assert_eq!(same_value, same_key);
            let twice = &(&a + &b) - &b;
            prop_assert_eq!(twice.repr_key(), a.repr_key());
        }
    }
}
