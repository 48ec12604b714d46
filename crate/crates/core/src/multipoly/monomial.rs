use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A power product over a fixed number of variables, dense exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable index if this is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// The same monomial with variables moved: variable `i` goes to `positions[i]`.
    pub fn remap(&self, nvars: usize, positions: &[usize]) -> Monomial {
        let mut exps = vec![0; nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[positions[i]] += e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All monomials of exactly total degree `d` in `nvars` variables.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::new(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut vec![0; nvars], &mut out);
        out
    }
}

/// Admissible monomial orders. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrLex,
    GrevLex,
    Lex,
    /// Block order: the first `k` variables are compared first (by degree,
    /// then reverse lexicographically), then the rest the same way.
    Elimination(usize),
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrLex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::GrevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex_tail(&a.exps, &b.exps)),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.exps.len());
                grevlex(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrLex | MonomialOrder::GrevLex)
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GrLex => "grlex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elim{k}"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grlex" | "graded_lex" | "graded-lex" | "deglex" => Ok(MonomialOrder::GrLex),
            "grevlex" | "graded_reverse_lex" | "graded-reverse-lex" | "tdeg" | "degrevlex" => {
                Ok(MonomialOrder::GrevLex)
            }
            "lex" | "plex" => Ok(MonomialOrder::Lex),
            other => other
                .strip_prefix("elim")
                .and_then(|k| k.trim_start_matches(['_', '-']).parse().ok())
                .map(MonomialOrder::Elimination)
                .ok_or_else(|| Error::Parse(format!("unknown monomial order {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn orders_on_three_variables() {
        // x^2 z vs x y^2: same degree; lex x^2 z wins; grevlex compares z last.
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 2, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        // degree dominates in graded orders only
        let c = m(&[0, 0, 4]);
        assert_eq!(MonomialOrder::GrLex.cmp(&c, &a), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&c, &a), Ordering::Less);
    }

    #[test]
    fn elimination_order_puts_block_first() {
        let o = MonomialOrder::Elimination(1);
        // t beats any power of the remaining variables
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(3, 0), vec![m(&[0, 0, 0])]);
        assert!(Monomial::all_of_degree(2, 2).iter().all(|x| x.degree() == 2));
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[1, 0]).quotient_of(&m(&[2, 1])), Some(m(&[1, 1])));
        assert_eq!(m(&[2, 0, 1]).lcm(&m(&[1, 3, 0])), m(&[2, 3, 1]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 5])));
        assert_eq!(m(&[0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 3, 0]).pure_power_var(), None);
    }

    #[test]
    fn parse_order_names() {
        assert_eq!("grlex".parse::<MonomialOrder>().unwrap(), MonomialOrder::GrLex);
        assert_eq!("tdeg".parse::<MonomialOrder>().unwrap(), MonomialOrder::GrevLex);
        assert_eq!(
            "elim2".parse::<MonomialOrder>().unwrap(),
            MonomialOrder::Elimination(2)
        );
        assert!("bogus".parse::<MonomialOrder>().is_err());
    }
}
