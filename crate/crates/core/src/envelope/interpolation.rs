//! Vanishing ideals of finite point sets by linear algebra.
//!
//! For monomials sorted increasingly, a column of the evaluation matrix is a
//! combination of earlier columns exactly when its monomial is a leading
//! monomial of the vanishing ideal. Reduced row echelon form therefore splits
//! the monomials into standard ones (pivots) and leading ones (free columns),
//! and each free column yields the reduced Gröbner basis element with that
//! leading monomial.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::CycNum;
use crate::groebner::Ideal;
use crate::multipoly::{HilbertSeries, Monomial, MonomialOrder, Poly, VarietyProfile};

/// Reduced row echelon form in place; returns the pivot column of each row.
fn rref(rows: &mut [Vec<CycNum>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let rank = pivots.len();
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for x in rows[rank][col..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let (before, rest) = rows.split_at_mut(rank);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
    }
    pivots
}

struct Evaluator<'a> {
    powers: Vec<Vec<Vec<CycNum>>>,
    points: &'a [Vec<CycNum>],
}

impl<'a> Evaluator<'a> {
    fn new(points: &'a [Vec<CycNum>]) -> Self {
        Evaluator {
            powers: points.iter().map(|p| p.iter().map(|c| vec![c.clone()]).collect()).collect(),
            points,
        }
    }

    fn power(&mut self, point: usize, var: usize, e: u32) -> CycNum {
        let row = &mut self.powers[point][var];
        if e == 0 {
            return CycNum::one(1);
        }
        while row.len() < e as usize {
            let next = row.last().unwrap() * &self.points[point][var];
            row.push(next);
        }
        row[e as usize - 1].clone()
    }

    fn value(&mut self, point: usize, m: &Monomial) -> CycNum {
        let mut acc = CycNum::one(1);
        for (v, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                acc = &acc * &self.power(point, v, e);
                if acc.is_zero() {
                    break;
                }
            }
        }
        acc
    }
}

/// New reduced basis elements whose leading monomials lie among `columns`
/// (sorted increasingly) and are not multiples of `known`.
fn kernel_elements(
    eval: &mut Evaluator,
    columns: &[Monomial],
    known: &[Monomial],
    nvars: usize,
    order: MonomialOrder,
) -> (usize, Vec<Poly>) {
    let npoints = eval.points.len();
    let mut rows: Vec<Vec<CycNum>> = (0..npoints)
        .map(|p| columns.iter().map(|m| eval.value(p, m)).collect())
        .collect();
    let pivots = rref(&mut rows);
    let mut is_pivot = vec![false; columns.len()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut fresh: Vec<Poly> = Vec::new();
    for (f, m) in columns.iter().enumerate() {
        if is_pivot[f] || known.iter().any(|k| k.divides(m)) {
            continue;
        }
        if fresh.iter().any(|g| g.leading_monomial().unwrap().divides(m)) {
            continue;
        }
        let mut terms = vec![(m.clone(), CycNum::one(1))];
        for (r, &p) in pivots.iter().enumerate() {
            if p < f && !rows[r][f].is_zero() {
                terms.push((columns[p].clone(), -&rows[r][f]));
            }
        }
        fresh.push(Poly::from_terms(nvars, order, terms));
    }
    (pivots.len(), fresh)
}

fn sorted_ascending(mut ms: Vec<Monomial>, order: MonomialOrder) -> Vec<Monomial> {
    ms.sort_by(|a, b| order.cmp(a, b));
    ms
}

fn validate_points(points: &[Vec<CycNum>], nvars: usize) -> Result<()> {
    if points.is_empty() {
        return Err(Error::Invalid("no points to interpolate".into()));
    }
    if nvars == 0 {
        return Err(Error::Invalid("ring with no variables".into()));
    }
    if let Some(p) = points.iter().find(|p| p.len() != nvars) {
        return Err(Error::Dimension(format!(
            "point with {} coordinates in a ring with {nvars} variables",
            p.len()
        )));
    }
    Ok(())
}

/// Largest degree searched before giving up; the certificate normally
/// closes at or below the number of points.
fn degree_cap(npoints: usize) -> u32 {
    2 * npoints as u32 + 2
}

/// Vanishing ideal of the union of the lines through the origin spanned by
/// `points` (nonzero, pairwise non-proportional), as a reduced Gröbner basis.
///
/// Generators are collected degree by degree until the Hilbert function of
/// the collected leading monomials is provably that of the lines: at some
/// degree `D` the evaluation matrix has full rank and the leading-monomial
/// ideal has constant Hilbert function equal to the number of lines from
/// `D` onwards.
pub fn vanishing_ideal_of_lines(
    points: &[Vec<CycNum>],
    nvars: usize,
    order: MonomialOrder,
) -> Result<Ideal> {
    validate_points(points, nvars)?;
    if points.iter().any(|p| p.iter().all(CycNum::is_zero)) {
        return Err(Error::Invalid("the origin spans no line".into()));
    }
    let target = BigInt::from(points.len());
    let mut eval = Evaluator::new(points);
    let mut basis: Vec<Poly> = Vec::new();
    let mut lts: Vec<Monomial> = Vec::new();
    for d in 1..=degree_cap(points.len()) {
        let columns = sorted_ascending(Monomial::all_of_degree(nvars, d), order);
        let (rank, fresh) = kernel_elements(&mut eval, &columns, &lts, nvars, order);
        for g in fresh {
            lts.push(g.leading_monomial().unwrap().clone());
            basis.push(g);
        }
        if rank < points.len() {
            continue;
        }
        let hs = HilbertSeries::of_monomial_ideal(&lts, nvars);
        let settled = hs.profile().ok()
            == Some(VarietyProfile {
                dimension: 1,
                degree: points.len() as u64,
            })
            && (d..=d.max(hs.regularity_index())).all(|e| hs.value(e) == target);
        if settled {
            return finish(basis, nvars, order);
        }
    }
    Err(Error::Inconsistent(
        "interpolation did not settle within the degree cap (are the points distinct lines?)".into(),
    ))
}

/// Vanishing ideal of a finite set of distinct affine points, as a reduced
/// Gröbner basis under a graded order.
pub fn vanishing_ideal_of_points(
    points: &[Vec<CycNum>],
    nvars: usize,
    order: MonomialOrder,
) -> Result<Ideal> {
    validate_points(points, nvars)?;
    if !order.is_graded() {
        return Err(Error::Unsupported(format!(
            "affine interpolation needs a graded order, got {order}"
        )));
    }
    let mut eval = Evaluator::new(points);
    let mut basis: Vec<Poly> = Vec::new();
    let mut lts: Vec<Monomial> = Vec::new();
    let mut all: Vec<Monomial> = vec![Monomial::one(nvars)];
    for d in 1..=degree_cap(points.len()) {
        all.extend(Monomial::all_of_degree(nvars, d));
        let columns = sorted_ascending(all.clone(), order);
        let (_, fresh) = kernel_elements(&mut eval, &columns, &lts, nvars, order);
        for g in fresh {
            lts.push(g.leading_monomial().unwrap().clone());
            basis.push(g);
        }
        let settled = HilbertSeries::of_monomial_ideal(&lts, nvars).profile().ok()
            == Some(VarietyProfile {
                dimension: 0,
                degree: points.len() as u64,
            });
        if settled {
            return finish(basis, nvars, order);
        }
    }
    Err(Error::Inconsistent(
        "interpolation did not settle within the degree cap (are the points distinct?)".into(),
    ))
}

fn finish(mut basis: Vec<Poly>, nvars: usize, order: MonomialOrder) -> Result<Ideal> {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(Ideal::from_reduced_basis_trusted(basis, nvars, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner_basis, is_groebner_basis, is_reduced};
    use crate::multipoly::parse_poly;

    fn q(v: i64) -> CycNum {
        CycNum::from_int(v, 1)
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn three_lines_in_the_plane() {
        let pts = vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]];
        let ideal = vanishing_ideal_of_lines(&pts, 2, MonomialOrder::GrLex).unwrap();
        let expected =
            parse_poly("x^2*y - x*y^2", &names(&["x", "y"]), 1, MonomialOrder::GrLex).unwrap();
        assert_eq!(ideal.groebner_basis(), &[expected]);
    }

    #[test]
    fn affine_points_match_buchberger() {
        let pts = vec![
            vec![q(0), q(0)],
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(2), q(3)],
        ];
        let ideal = vanishing_ideal_of_points(&pts, 2, MonomialOrder::GrevLex).unwrap();
        let gb = ideal.groebner_basis().to_vec();
        assert!(is_reduced(&gb) && is_groebner_basis(&gb));
        assert_eq!(groebner_basis(&gb), gb);
        for p in &pts {
            assert!(ideal.vanishes_at(p).unwrap());
        }
        assert_eq!(ideal.profile().unwrap(), VarietyProfile { dimension: 0, degree: 4 });
    }

    #[test]
    fn rejects_bad_input() {
        assert!(vanishing_ideal_of_lines(&[], 2, MonomialOrder::GrLex).is_err());
        assert!(vanishing_ideal_of_lines(&[vec![q(0), q(0)]], 2, MonomialOrder::GrLex).is_err());
        assert!(vanishing_ideal_of_points(&[vec![q(1)]], 2, MonomialOrder::GrLex).is_err());
        assert!(vanishing_ideal_of_points(&[vec![q(1)]], 1, MonomialOrder::Lex).is_err());
    }

    #[test]
    fn cyclotomic_lines_are_reduced_bases() {
        let z = CycNum::zeta(3);
        let pts: Vec<Vec<CycNum>> =
            (0..3).map(|k| vec![z.pow(k), q(0), q(0), q(1)]).collect();
        let ideal = vanishing_ideal_of_lines(&pts, 4, MonomialOrder::GrLex).unwrap();
        let gb = ideal.groebner_basis().to_vec();
        assert!(is_reduced(&gb) && is_groebner_basis(&gb));
        assert_eq!(ideal.profile().unwrap(), VarietyProfile { dimension: 1, degree: 3 });
    }
}
