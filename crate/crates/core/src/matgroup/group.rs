use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::matrix::CycMatrix;
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, CycNum, Rational};

/// Default bound on the number of elements enumerated by [`closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A finite matrix group, listed element by element.
#[derive(Clone, Debug)]
pub struct FiniteMatGroup {
    n: usize,
    conductor: u32,
    elements: Vec<CycMatrix>,
    generators: Vec<CycMatrix>,
    index: HashMap<String, usize>,
}

impl FiniteMatGroup {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first discovery order; the identity comes first.
    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[CycMatrix] {
        &self.generators
    }

    pub fn contains(&self, m: &CycMatrix) -> bool {
        if m.dim() != self.n {
            return false;
        }
        let l = self.conductor.lcm(&m.conductor());
        if l != self.conductor {
            // Entries outside Q(ζ_N) can only match if they reduce into it.
            return self.elements.iter().any(|e| e.embed_into(l).ok().as_ref() == Some(m));
        }
        match m.embed_into(self.conductor) {
            Ok(m) => self.index.contains_key(&m.key()),
            Err(_) => false,
        }
    }

    /// Exhaustive check that the element list is closed under products and
    /// inverses and contains the identity.
    pub fn is_closed(&self) -> bool {
        if !self.contains(&CycMatrix::identity(self.n, self.conductor)) {
            return false;
        }
        for a in &self.elements {
            match a.inverse() {
                Ok(inv) if self.contains(&inv) => {}
                _ => return false,
            }
            for b in &self.elements {
                if !self.index.contains_key(&a.mul(b).key()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn all_determinants_one(&self) -> bool {
        self.elements.iter().all(|e| e.det().is_one())
    }

    /// Scalar matrices in the group.
    pub fn scalar_subgroup(&self) -> Vec<&CycMatrix> {
        self.elements.iter().filter(|e| e.is_scalar()).collect()
    }

    pub fn contains_minus_identity(&self) -> bool {
        let minus = CycMatrix::scalar(self.n, &CycNum::from_int(-1, self.conductor));
        self.contains(&minus)
    }
}

/// Breadth-first closure of `generators` under multiplication.
///
/// Every finite group is generated as a monoid by any generating set, so
/// right-multiplying by generators reaches every element; enumeration stops
/// with an error once `cap` elements are exceeded.
pub fn closure(generators: &[CycMatrix], cap: usize) -> Result<FiniteMatGroup> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Invalid("closure needs at least one generator".into()))?;
    let n = first.dim();
    if let Some(g) = generators.iter().find(|g| g.dim() != n) {
        return Err(Error::Dimension(format!(
            "generators of size {n} and {} mixed",
            g.dim()
        )));
    }
    if generators.iter().any(|g| g.det().is_zero()) {
        return Err(Error::Singular);
    }
    let conductor = generators.iter().map(CycMatrix::conductor).fold(1, |a, b| a.lcm(&b));
    let gens: Vec<CycMatrix> = generators
        .iter()
        .map(|g| g.embed_into(conductor))
        .collect::<Result<_>>()?;

    let identity = CycMatrix::identity(n, conductor);
    let mut index = HashMap::new();
    index.insert(identity.key(), 0);
    let mut elements = vec![identity];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let p = elements[i].mul(g);
            let key = p.key();
            if index.contains_key(&key) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            index.insert(key, elements.len());
            queue.push_back(elements.len());
            elements.push(p);
        }
    }
    Ok(FiniteMatGroup {
        n,
        conductor,
        elements,
        generators: gens,
        index,
    })
}

/// One representative per line `{c·M : c ≠ 0}` through the group elements,
/// in order of first appearance.
pub fn scalar_cone_points(group: &FiniteMatGroup) -> Vec<CycMatrix> {
    let mut seen = std::collections::HashSet::new();
    group
        .elements
        .iter()
        .filter(|e| seen.insert(e.line_normal_form().key()))
        .cloned()
        .collect()
}

pub fn is_unipotent(m: &CycMatrix) -> bool {
    m.is_unipotent()
}

/// The named groups of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    /// `diag(ζ_m, ζ_m⁻¹)`, order `m`.
    Cyclic(u32),
    /// Binary dihedral group of order `4m`.
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    /// `diag(ε, ε⁻¹)` and the coordinate swap, `ε` of order `2m`: `4m`
    /// elements, half diagonal and half antidiagonal.
    DihedralConeExample(u32),
    /// All `n × n` permutation matrices.
    PermutationDiagExample(u32),
}

impl GroupName {
    pub fn tag(&self) -> String {
        match self {
            GroupName::Cyclic(m) => format!("cyclic-{m}"),
            GroupName::BinaryDihedral(m) => format!("binary-dihedral-{m}"),
            GroupName::BinaryTetrahedral => "binary-tetrahedral".into(),
            GroupName::BinaryOctahedral => "binary-octahedral".into(),
            GroupName::BinaryIcosahedral => "binary-icosahedral".into(),
            GroupName::DihedralConeExample(m) => format!("dihedral-cone-example-{m}"),
            GroupName::PermutationDiagExample(n) => format!("permutation-diag-example-{n}"),
        }
    }

    /// Whether the group is by construction a subgroup of SL₂.
    pub fn is_sl2(&self) -> bool {
        !matches!(
            self,
            GroupName::DihedralConeExample(_) | GroupName::PermutationDiagExample(_)
        )
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        let fixed = match t.as_str() {
            "binary-tetrahedral" => Some(GroupName::BinaryTetrahedral),
            "binary-octahedral" => Some(GroupName::BinaryOctahedral),
            "binary-icosahedral" => Some(GroupName::BinaryIcosahedral),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let families: [(&str, fn(u32) -> GroupName); 4] = [
            ("cyclic-", GroupName::Cyclic),
            ("binary-dihedral-", GroupName::BinaryDihedral),
            ("dihedral-cone-example-", GroupName::DihedralConeExample),
            ("permutation-diag-example-", GroupName::PermutationDiagExample),
        ];
        for (prefix, make) in families {
            if let Some(rest) = t.strip_prefix(prefix) {
                let m: u32 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad parameter in group tag {s:?}")))?;
                if m == 0 {
                    return Err(Error::Parse(format!("group tag {s:?} needs a positive parameter")));
                }
                return Ok(make(m));
            }
        }
        Err(Error::Parse(format!("unknown group tag {s:?}")))
    }
}

fn q(v: i64) -> CycNum {
    CycNum::from_int(v, 1)
}

fn z(n: u32, k: u32) -> CycNum {
    CycNum::zeta_pow(n, k as i64)
}

fn rows(r: Vec<Vec<CycNum>>) -> CycMatrix {
    CycMatrix::from_rows(r).expect("catalog matrix is square")
}

fn permutation_matrix(perm: &[usize]) -> CycMatrix {
    let n = perm.len();
    let mut e = vec![q(0); n * n];
    for (i, &j) in perm.iter().enumerate() {
        e[i * n + j] = q(1);
    }
    CycMatrix::new(n, e).expect("square")
}

/// Generators of the binary tetrahedral group over Q(i):
/// `diag(i, -i)`, `[[0, 1], [-1, 0]]` and `½[[1+i, 1+i], [-1+i, 1-i]]`.
fn tetrahedral_generators() -> Vec<CycMatrix> {
    let i = z(4, 1);
    let one = CycNum::one(4);
    let half = CycNum::from_rational(&Rational::new(1.into(), 2.into()), 4);
    let a = CycMatrix::diag(&[i.clone(), -&i]).unwrap();
    let b = rows(vec![vec![q(0), q(1)], vec![q(-1), q(0)]]);
    let c = rows(vec![
        vec![&half * &(&one + &i), &half * &(&one + &i)],
        vec![&half * &(&i - &one), &half * &(&one - &i)],
    ]);
    vec![a, b, c]
}

/// Generators of the binary icosahedral group over Q(ζ₅), with `ε = ζ₅`:
/// `S = diag(ε³, ε²)` and
/// `T = (1/√5)·[[-(ε - ε⁴), ε² - ε³], [ε² - ε³, ε - ε⁴]]`,
/// where `√5 = ε - ε² - ε³ + ε⁴`.
fn icosahedral_generators() -> Vec<CycMatrix> {
    let e = |k| z(5, k);
    let s = CycMatrix::diag(&[e(3), e(2)]).unwrap();
    let sqrt5 = &(&(&e(1) - &e(2)) - &e(3)) + &e(4);
    let inv = sqrt5.inv().expect("nonzero");
    let a = &e(1) - &e(4);
    let b = &e(2) - &e(3);
    let t = rows(vec![vec![-&a, b.clone()], vec![b, a]]).scale(&inv);
    vec![s, t]
}

pub fn named_group_generators(name: GroupName) -> Vec<CycMatrix> {
    match name {
        GroupName::Cyclic(m) => vec![CycMatrix::diag(&[z(m, 1), z(m, m - 1)]).unwrap()],
        GroupName::BinaryDihedral(m) => vec![
            CycMatrix::diag(&[z(2 * m, 1), z(2 * m, 2 * m - 1)]).unwrap(),
            rows(vec![vec![q(0), q(1)], vec![q(-1), q(0)]]),
        ],
        GroupName::BinaryTetrahedral => tetrahedral_generators(),
        GroupName::BinaryOctahedral => {
            let mut g = tetrahedral_generators();
            g.push(CycMatrix::diag(&[z(8, 1), z(8, 7)]).unwrap());
            g
        }
        GroupName::BinaryIcosahedral => icosahedral_generators(),
        GroupName::DihedralConeExample(m) => vec![
            CycMatrix::diag(&[z(2 * m, 1), z(2 * m, 2 * m - 1)]).unwrap(),
            rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]),
        ],
        GroupName::PermutationDiagExample(n) => {
            let n = n as usize;
            let mut swap: Vec<usize> = (0..n).collect();
            if n > 1 {
                swap.swap(0, 1);
            }
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            vec![permutation_matrix(&swap), permutation_matrix(&cycle)]
        }
    }
}

/// The catalog group for `name`, enumerated by closure.
pub fn named_group(name: GroupName) -> FiniteMatGroup {
    closure(&named_group_generators(name), DEFAULT_CLOSURE_CAP)
        .expect("catalog generators generate a finite group within the default cap")
}

/// Group file: `{"n": 2, "conductor": N, "generators": [[[coeffs..]..]..]}`,
/// each entry a coefficient array in the power basis of Q(ζ_N).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupFile {
    pub n: usize,
    pub conductor: u32,
    pub generators: Vec<Vec<Vec<Vec<String>>>>,
}

impl GroupFile {
    pub fn generator_matrices(&self) -> Result<Vec<CycMatrix>> {
        if self.conductor == 0 {
            return Err(Error::Parse("field `conductor` must be positive".into()));
        }
        if self.n == 0 {
            return Err(Error::Parse("field `n` must be positive".into()));
        }
        self.generators
            .iter()
            .enumerate()
            .map(|(g, m)| {
                if m.len() != self.n || m.iter().any(|r| r.len() != self.n) {
                    return Err(Error::Parse(format!(
                        "field `generators[{g}]` is not {0}x{0}",
                        self.n
                    )));
                }
                let mut entries = Vec::with_capacity(self.n * self.n);
                for (i, row) in m.iter().enumerate() {
                    for (j, coeffs) in row.iter().enumerate() {
                        let qs = coeffs
                            .iter()
                            .map(|c| parse_rational(c))
                            .collect::<Result<Vec<_>>>()
                            .and_then(|qs| CycNum::from_coeffs(self.conductor, &qs))
                            .map_err(|e| {
                                Error::Parse(format!("field `generators[{g}][{i}][{j}]`: {e}"))
                            })?;
                        entries.push(qs);
                    }
                }
                CycMatrix::new(self.n, entries)
            })
            .collect()
    }

    pub fn to_group(&self, cap: usize) -> Result<FiniteMatGroup> {
        closure(&self.generator_matrices()?, cap)
    }

    pub fn from_generators(gens: &[CycMatrix]) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::Invalid("no generators".into()))?;
        let n = first.dim();
        let conductor = gens.iter().map(CycMatrix::conductor).fold(1, |a, b| a.lcm(&b));
        let generators = gens
            .iter()
            .map(|g| {
                let g = g.embed_into(conductor)?;
                Ok((0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                g.get(i, j)
                                    .coeffs()
                                    .iter()
                                    .map(crate::exactnum::format_rational)
                                    .collect()
                            })
                            .collect()
                    })
                    .collect())
            })
            .collect::<Result<_>>()?;
        Ok(GroupFile {
            n,
            conductor,
            generators,
        })
    }
}
