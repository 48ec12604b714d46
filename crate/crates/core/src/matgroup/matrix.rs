use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::CycNum;

/// Square matrix over a cyclotomic field, row-major, one common conductor.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    n: usize,
    entries: Vec<CycNum>,
}

impl CycMatrix {
    pub fn new(n: usize, entries: Vec<CycNum>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "{} entries do not form a nonempty {n}x{n} matrix",
                entries.len()
            )));
        }
        let conductor = entries.iter().map(CycNum::conductor).fold(1, |a, b| a.lcm(&b));
        let entries = entries
            .into_iter()
            .map(|e| e.embed_into(conductor))
            .collect::<Result<_>>()?;
        Ok(CycMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix rows must have equal length n".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        Self::scalar(n, &CycNum::one(conductor))
    }

    pub fn scalar(n: usize, c: &CycNum) -> Self {
        let zero = CycNum::zero(c.conductor());
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { c.clone() } else { zero.clone() })
            .collect();
        CycMatrix { n, entries }
    }

    pub fn diag(d: &[CycNum]) -> Result<Self> {
        let n = d.len();
        let mut e = vec![CycNum::zero(1); n * n];
        for (i, x) in d.iter().enumerate() {
            e[i * n + i] = x.clone();
        }
        Self::new(n, e)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.entries[0].conductor()
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.n + j]
    }

    pub fn embed_into(&self, conductor: u32) -> Result<Self> {
        Ok(CycMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|e| e.embed_into(conductor))
                .collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycNum::zero(self.conductor());
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.push(acc);
            }
        }
        CycMatrix { n, entries: out }
    }

    pub fn sub(&self, other: &CycMatrix) -> CycMatrix {
        CycMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> CycMatrix {
        CycMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> CycNum {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = CycNum::one(self.conductor());
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return CycNum::zero(self.conductor());
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = &det * &p;
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = &a[r * n + col] * &pinv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &a[r * n + j] - &(&f * &a[col * n + j]);
                    a[r * n + j] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<CycMatrix> {
        let n = self.n;
        let w = 2 * n;
        let c = self.conductor();
        let mut a: Vec<CycNum> = Vec::with_capacity(n * w);
        for i in 0..n {
            for j in 0..n {
                a.push(self.get(i, j).clone());
            }
            for j in 0..n {
                a.push(if i == j { CycNum::one(c) } else { CycNum::zero(c) });
            }
        }
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r * w + col].is_zero())
                .ok_or(Error::Singular)?;
            if piv != col {
                for j in 0..w {
                    a.swap(piv * w + j, col * w + j);
                }
            }
            let pinv = a[col * w + col].inv()?;
            for j in 0..w {
                a[col * w + j] = &a[col * w + j] * &pinv;
            }
            for r in 0..n {
                if r == col || a[r * w + col].is_zero() {
                    continue;
                }
                let f = a[r * w + col].clone();
                for j in 0..w {
                    let v = &a[r * w + j] - &(&f * &a[col * w + j]);
                    a[r * w + j] = v;
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| a[i * w + n..(i + 1) * w].to_vec())
            .collect();
        Ok(CycMatrix { n, entries })
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.entries[0].is_one()
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.n;
        (0..n * n).all(|k| {
            let (i, j) = (k / n, k % n);
            if i == j {
                self.entries[k] == self.entries[0]
            } else {
                self.entries[k].is_zero()
            }
        })
    }

    /// `(M - I)^n = 0`.
    pub fn is_unipotent(&self) -> bool {
        let shifted = self.sub(&CycMatrix::identity(self.n, self.conductor()));
        let mut acc = shifted.clone();
        for _ in 1..self.n {
            acc = acc.mul(&shifted);
        }
        acc.entries.iter().all(CycNum::is_zero)
    }

    /// Dedup key; equal matrices at equal conductors give equal keys.
    pub fn key(&self) -> String {
        self.entries
            .iter()
            .map(CycNum::repr_key)
            .collect::<Vec<_>>()
            .join(";")
    }

    /// The matrix rescaled so its first nonzero entry (row-major) is one.
    /// Two matrices span the same line iff these agree.
    pub fn line_normal_form(&self) -> CycMatrix {
        match self.entries.iter().find(|e| !e.is_zero()) {
            None => self.clone(),
            Some(first) => self.scale(&first.inv().expect("nonzero")),
        }
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycMatrix[{}]{}", self.conductor(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> CycNum {
        CycNum::from_int(v, 1)
    }

    #[test]
    fn determinant_and_inverse() {
        let m = CycMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(7), q(4)]]).unwrap();
        assert_eq!(m.det(), q(1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = CycMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(sing.det().is_zero());
        assert_eq!(sing.inverse(), Err(Error::Singular));
        let swap = CycMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(swap.det(), q(-1));
    }

    #[test]
    fn unipotent() {
        assert!(CycMatrix::identity(2, 1).is_unipotent());
        let j = CycMatrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(1)]]).unwrap();
        assert!(j.is_unipotent());
        let half = CycNum::from_rational(&crate::exactnum::parse_rational("1/2").unwrap(), 1);
        let d = CycMatrix::diag(&[q(2), half]).unwrap();
        assert!(!d.is_unipotent());
        let j3 = CycMatrix::from_rows(vec![
            vec![q(1), q(5), q(-2)],
            vec![q(0), q(1), q(3)],
            vec![q(0), q(0), q(1)],
        ])
        .unwrap();
        assert!(j3.is_unipotent());
    }

    #[test]
    fn mixed_conductors_promote() {
        let m = CycMatrix::diag(&[CycNum::zeta(3), CycNum::zeta(4)]).unwrap();
        assert_eq!(m.conductor(), 12);
        assert_eq!(m.det(), CycNum::zeta_pow(12, 7));
    }

    #[test]
    fn line_normal_form_identifies_scalar_multiples() {
        let m = CycMatrix::from_rows(vec![vec![q(0), q(2)], vec![q(3), q(5)]]).unwrap();
        let s = m.scale(&CycNum::zeta(5));
        assert_eq!(m.line_normal_form().embed_into(5).unwrap(), s.line_normal_form());
        assert_eq!(m.line_normal_form().get(0, 1), &q(1));
    }
}
