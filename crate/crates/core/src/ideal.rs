use std::collections::HashMap;

use num_bigint::BigInt;

use crate::matrix::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::{Error, Rat, Result};

/// Number of degree-`m` monomials in `n_vars` variables.
pub fn dim_forms(n_vars: usize, m: u32) -> usize {
    let big = num_integer::binomial(
        BigInt::from(m as usize + n_vars - 1),
        BigInt::from(n_vars - 1),
    );
    usize::try_from(&big).expect("monomial count fits in usize")
}

/// A homogeneous ideal given by generators. Generators may have different
/// degrees; each must be nonzero and homogeneous.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    n_vars: usize,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(n_vars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::InvalidInput("need at least one variable".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.n_vars() != n_vars {
                return Err(Error::AmbientMismatch {
                    expected: n_vars,
                    got: g.n_vars(),
                });
            }
            match g.homogeneous_degree()? {
                Some(_) => {}
                None => {
                    return Err(Error::InvalidInput(format!("generator {} is zero", i + 1)));
                }
            }
        }
        Ok(IdealPresentation { n_vars, generators })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The degree-`m` piece spanned by all monomial shifts of the generators.
    /// No saturation happens here; callers wanting the degree-`m` piece of a
    /// subscheme's ideal must pass a presentation that already agrees with it
    /// in degree `m`.
    pub fn graded_piece(&self, m: u32) -> Result<GradedPiece> {
        let mut spanning = Vec::new();
        for g in &self.generators {
            let d = g.homogeneous_degree()?.expect("validated nonzero");
            if d > m {
                continue;
            }
            for shift in monomials_of_degree(self.n_vars, m - d) {
                spanning.push(g.shift(&shift)?);
            }
        }
        GradedPiece::from_polynomials(self.n_vars, m, &spanning)
    }
}

/// A linear subspace of the degree-`m` forms, stored as the reduced row
/// echelon form of a spanning set over the canonical column order
/// (monomials of degree `m`, largest first in lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPiece {
    n_vars: usize,
    degree: u32,
    cols: Vec<Monomial>,
    mat: Matrix<Rat>,
    pivots: Vec<usize>,
}

impl GradedPiece {
    pub fn zero(n_vars: usize, degree: u32) -> Self {
        let cols = monomials_of_degree(n_vars, degree);
        let mat = Matrix::empty(cols.len());
        GradedPiece {
            n_vars,
            degree,
            cols,
            mat,
            pivots: Vec::new(),
        }
    }

    pub fn from_polynomials(n_vars: usize, degree: u32, polys: &[Polynomial]) -> Result<Self> {
        let cols = monomials_of_degree(n_vars, degree);
        let index: HashMap<&Monomial, usize> =
            cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for p in polys {
            if p.n_vars() != n_vars {
                return Err(Error::AmbientMismatch {
                    expected: n_vars,
                    got: p.n_vars(),
                });
            }
            match p.homogeneous_degree()? {
                None => continue,
                Some(d) if d == degree => {}
                Some(d) => {
                    return Err(Error::DegreeMismatch {
                        expected: degree,
                        got: d,
                    })
                }
            }
            let mut row = vec![Rat::from_integer(0.into()); cols.len()];
            for (mono, coeff) in p.terms() {
                let &i = index.get(mono).expect("degree checked");
                row[i] = coeff.clone();
            }
            rows.push(row);
        }
        let mut mat = Matrix::new(cols.len(), rows)?;
        let pivots = mat.rref();
        Ok(GradedPiece {
            n_vars,
            degree,
            cols,
            mat,
            pivots,
        })
    }

    pub fn from_monomials(n_vars: usize, degree: u32, monomials: &[Monomial]) -> Result<Self> {
        let polys: Vec<Polynomial> = monomials
            .iter()
            .map(|m| Polynomial::monomial(m.clone()))
            .collect();
        Self::from_polynomials(n_vars, degree, &polys)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Dimension of the subspace.
    pub fn q(&self) -> usize {
        self.mat.n_rows()
    }

    /// Codimension, the dimension of the quotient.
    pub fn p(&self) -> usize {
        self.cols.len() - self.q()
    }

    pub fn dim_ambient(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.q() == 0
    }

    pub fn is_full(&self) -> bool {
        self.q() == self.cols.len()
    }

    /// Canonical column monomials, largest first in lexicographic order.
    pub fn cols(&self) -> &[Monomial] {
        &self.cols
    }

    pub fn mat(&self) -> &Matrix<Rat> {
        &self.mat
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.n_vars() != self.n_vars {
            return Err(Error::AmbientMismatch {
                expected: self.n_vars,
                got: p.n_vars(),
            });
        }
        match p.homogeneous_degree()? {
            None => return Ok(true),
            Some(d) if d == self.degree => {}
            Some(d) => {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                    got: d,
                })
            }
        }
        let index: HashMap<&Monomial, usize> =
            self.cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut row = vec![Rat::from_integer(0.into()); self.cols.len()];
        for (mono, coeff) in p.terms() {
            row[index[mono]] = coeff.clone();
        }
        let rem = self.mat.reduce_against(&self.pivots, &row)?;
        Ok(rem.iter().all(num_traits::Zero::is_zero))
    }

    /// Whether every basis row is a single monomial.
    pub fn is_monomial_piece(&self) -> bool {
        self.mat
            .rows()
            .iter()
            .all(|r| r.iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() == 1)
    }

    /// The spanning monomials of a monomial piece, largest first.
    pub fn monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial_piece() {
            return Err(Error::NonMonomialPiece(format!(
                "piece of degree {} has a basis row with several terms",
                self.degree
            )));
        }
        Ok(self.pivots.iter().map(|&c| self.cols[c].clone()).collect())
    }

    /// Componentwise sum of the exponent vectors of a monomial piece's basis.
    /// The zero piece sums to the origin.
    pub fn exponent_sum(&self) -> Result<Vec<i64>> {
        let mut total = vec![0i64; self.n_vars];
        for m in self.monomials()? {
            for (t, &e) in total.iter_mut().zip(m.exps()) {
                *t += e as i64;
            }
        }
        Ok(total)
    }

    pub fn row_polynomial(&self, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(self.n_vars);
        for (mono, coeff) in self.cols.iter().zip(self.mat.row(i)) {
            if !num_traits::Zero::is_zero(coeff) {
                p.add_term(mono.clone(), coeff.clone())
                    .expect("ambient matches");
            }
        }
        p
    }

    pub fn row_polynomials(&self) -> Vec<Polynomial> {
        (0..self.mat.n_rows())
            .map(|i| self.row_polynomial(i))
            .collect()
    }

    pub fn intersect(&self, other: &GradedPiece) -> Result<GradedPiece> {
        if other.n_vars != self.n_vars {
            return Err(Error::AmbientMismatch {
                expected: self.n_vars,
                got: other.n_vars,
            });
        }
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let mut mat = self.mat.intersect_rows(&other.mat)?;
        let pivots = mat.rref();
        Ok(GradedPiece {
            n_vars: self.n_vars,
            degree: self.degree,
            cols: self.cols.clone(),
            mat,
            pivots,
        })
    }

    /// Re-expresses the piece in a larger ambient ring, sending variable `i`
    /// to variable `offset + i`.
    pub fn embed(&self, offset: usize, n_vars_to: usize) -> Result<GradedPiece> {
        let polys: Vec<Polynomial> = self
            .row_polynomials()
            .iter()
            .map(|p| p.embed(offset, n_vars_to))
            .collect::<Result<_>>()?;
        GradedPiece::from_polynomials(n_vars_to, self.degree, &polys)
    }

    /// Intersection with the subring on variables `lo..=hi`, re-expressed in
    /// that subring's own ambient.
    pub fn restrict_to_range(&self, lo: usize, hi: usize) -> Result<GradedPiece> {
        if lo > hi || hi >= self.n_vars {
            return Err(Error::InvalidInput(format!(
                "variable range {lo}..={hi} out of bounds for {} variables",
                self.n_vars
            )));
        }
        let supported: Vec<Monomial> = monomials_of_degree(self.n_vars, self.degree)
            .into_iter()
            .filter(|m| m.supported_in(lo, hi))
            .collect();
        let subring = GradedPiece::from_monomials(self.n_vars, self.degree, &supported)?;
        let meet = self.intersect(&subring)?;
        let restricted: Vec<Polynomial> = meet
            .row_polynomials()
            .iter()
            .map(|p| {
                let mut out = Polynomial::zero(hi - lo + 1);
                for (mono, coeff) in p.terms() {
                    out.add_term(mono.restrict(lo, hi)?, coeff.clone())?;
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        GradedPiece::from_polynomials(hi - lo + 1, self.degree, &restricted)
    }
}

/// Degree-`m` piece of the ideal generated by all products `x_u * x_v` with
/// `u` in `us` and `v` in `vs`: the span of every degree-`m` monomial
/// divisible by at least one such product. Degrees below 2 give the zero
/// piece since no product of two variables divides them.
pub fn product_monomial_ideal_piece(
    n_vars: usize,
    m: u32,
    us: &[usize],
    vs: &[usize],
) -> Result<GradedPiece> {
    for &i in us.iter().chain(vs) {
        if i >= n_vars {
            return Err(Error::InvalidInput(format!(
                "variable x{i} out of range (ambient has {n_vars} variables)"
            )));
        }
    }
    if m < 2 || us.is_empty() || vs.is_empty() {
        return Ok(GradedPiece::zero(n_vars, m));
    }
    let divisible = |mono: &Monomial| {
        us.iter().any(|&u| {
            vs.iter().any(|&v| {
                if u == v {
                    mono.exp(u) >= 2
                } else {
                    mono.exp(u) >= 1 && mono.exp(v) >= 1
                }
            })
        })
    };
    let hits: Vec<Monomial> = monomials_of_degree(n_vars, m)
        .into_iter()
        .filter(divisible)
        .collect();
    GradedPiece::from_monomials(n_vars, m, &hits)
}

/// Outcome of checking that a piece is the internal direct sum of the given
/// parts: every part lies inside the whole, the parts are independent, and
/// together they span.
#[derive(Debug, Clone)]
pub struct DirectSumReport {
    pub whole_dim: usize,
    pub part_dims: Vec<usize>,
    pub stacked_rank: usize,
    pub parts_contained: bool,
}

impl DirectSumReport {
    pub fn sum_of_parts(&self) -> usize {
        self.part_dims.iter().sum()
    }

    pub fn pass(&self) -> bool {
        self.parts_contained
            && self.stacked_rank == self.sum_of_parts()
            && self.stacked_rank == self.whole_dim
    }
}

pub fn direct_sum_check(whole: &GradedPiece, parts: &[&GradedPiece]) -> Result<DirectSumReport> {
    let mut stacked = Matrix::empty(whole.dim_ambient());
    let mut part_dims = Vec::with_capacity(parts.len());
    let mut parts_contained = true;
    for part in parts {
        if part.n_vars() != whole.n_vars() {
            return Err(Error::AmbientMismatch {
                expected: whole.n_vars(),
                got: part.n_vars(),
            });
        }
        if part.degree() != whole.degree() {
            return Err(Error::DegreeMismatch {
                expected: whole.degree(),
                got: part.degree(),
            });
        }
        part_dims.push(part.q());
        for p in part.row_polynomials() {
            if !whole.contains(&p)? {
                parts_contained = false;
            }
        }
        stacked = stacked.stacked(part.mat())?;
    }
    Ok(DirectSumReport {
        whole_dim: whole.q(),
        part_dims,
        stacked_rank: stacked.rank(),
        parts_contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn conic() -> IdealPresentation {
        let g = parse_polynomial("x0*x2 - x1^2", 3).unwrap();
        IdealPresentation::new(3, vec![g]).unwrap()
    }

    #[test]
    fn dims_of_form_spaces() {
        assert_eq!(dim_forms(3, 2), 6);
        assert_eq!(dim_forms(3, 3), 10);
        assert_eq!(dim_forms(5, 3), 35);
        assert_eq!(dim_forms(2, 7), 8);
        assert_eq!(dim_forms(4, 0), 1);
    }

    #[test]
    fn conic_piece_dimensions() {
        // one quadric: 1 in degree 2, then 3 shifts in degree 3
        let piece2 = conic().graded_piece(2).unwrap();
        assert_eq!(piece2.q(), 1);
        assert_eq!(piece2.p(), 5);
        let piece3 = conic().graded_piece(3).unwrap();
        assert_eq!(piece3.q(), 3);
        assert_eq!(piece3.p(), 7);
    }

    #[test]
    fn membership_in_a_graded_piece() {
        let piece = conic().graded_piece(3).unwrap();
        let inside = parse_polynomial("x0^2*x2 - x0*x1^2", 3).unwrap();
        assert!(piece.contains(&inside).unwrap());
        let outside = parse_polynomial("x0^3", 3).unwrap();
        assert!(!piece.contains(&outside).unwrap());
        assert!(piece.contains(&Polynomial::zero(3)).unwrap());
    }

    #[test]
    fn generators_below_degree_are_skipped_and_zero_ideal_works() {
        let ideal = IdealPresentation::new(2, vec![]).unwrap();
        let piece = ideal.graded_piece(4).unwrap();
        assert!(piece.is_zero());
        assert_eq!(piece.p(), 5);
    }

    #[test]
    fn rejects_inhomogeneous_or_zero_generators() {
        let bad = parse_polynomial("x0 + x1^2", 2).unwrap();
        assert!(IdealPresentation::new(2, vec![bad]).is_err());
        let zero = parse_polynomial("x0 - x0", 2).unwrap();
        assert!(IdealPresentation::new(2, vec![zero]).is_err());
    }

    #[test]
    fn monomial_piece_detection() {
        let piece = conic().graded_piece(2).unwrap();
        assert!(!piece.is_monomial_piece());
        assert!(piece.monomials().is_err());

        let m = GradedPiece::from_monomials(
            3,
            2,
            &[Monomial::new(vec![1, 0, 1]), Monomial::new(vec![0, 2, 0])],
        )
        .unwrap();
        assert!(m.is_monomial_piece());
        assert_eq!(m.q(), 2);
        assert_eq!(m.exponent_sum().unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn exponent_sums_of_product_pieces() {
        // products of {x0} and {x2} inside 3 variables
        let t2 = product_monomial_ideal_piece(3, 2, &[0], &[2]).unwrap();
        assert_eq!(t2.exponent_sum().unwrap(), vec![1, 0, 1]);
        let t3 = product_monomial_ideal_piece(3, 3, &[0], &[2]).unwrap();
        assert_eq!(t3.q(), 3);
        assert_eq!(t3.exponent_sum().unwrap(), vec![4, 1, 4]);
        // degree too small for any product
        let t1 = product_monomial_ideal_piece(3, 1, &[0], &[2]).unwrap();
        assert!(t1.is_zero());
    }

    #[test]
    fn principal_variable_piece_sum() {
        // multiples of x2 in degree 2, 4 variables: x2*(x0..x3)
        let gens = vec![parse_polynomial("x2", 4).unwrap()];
        let ideal = IdealPresentation::new(4, gens).unwrap();
        let piece = ideal.graded_piece(2).unwrap();
        assert_eq!(piece.q(), 4);
        assert_eq!(piece.exponent_sum().unwrap(), vec![1, 1, 5, 1]);
    }

    #[test]
    fn embedding_into_a_larger_ring() {
        let piece = conic().graded_piece(2).unwrap();
        let emb = piece.embed(1, 5).unwrap();
        assert_eq!(emb.n_vars(), 5);
        assert_eq!(emb.q(), 1);
        let moved = parse_polynomial("x1*x3 - x2^2", 5).unwrap();
        assert!(emb.contains(&moved).unwrap());
    }

    #[test]
    fn restriction_picks_out_the_subring_part() {
        // span{x0*x1, x1*x2} meets k[x0,x1] in span{x0*x1}
        let piece = GradedPiece::from_monomials(
            3,
            2,
            &[Monomial::new(vec![1, 1, 0]), Monomial::new(vec![0, 1, 1])],
        )
        .unwrap();
        let res = piece.restrict_to_range(0, 1).unwrap();
        assert_eq!(res.n_vars(), 2);
        assert_eq!(res.q(), 1);
        let kept = parse_polynomial("x0*x1", 2).unwrap();
        assert!(res.contains(&kept).unwrap());
    }

    #[test]
    fn restriction_respects_linear_combinations() {
        // x0*x2 - x1^2 restricted to the last two variables: nothing survives,
        // but adding x1^2 itself makes the restriction one dimensional.
        let conic3 = conic().graded_piece(2).unwrap();
        assert!(conic3.restrict_to_range(1, 2).unwrap().is_zero());
        let bigger = GradedPiece::from_polynomials(
            3,
            2,
            &[
                parse_polynomial("x0*x2 - x1^2", 3).unwrap(),
                parse_polynomial("x1^2", 3).unwrap(),
            ],
        )
        .unwrap();
        let res = bigger.restrict_to_range(1, 2).unwrap();
        assert_eq!(res.q(), 1);
        assert!(res.contains(&parse_polynomial("x0^2", 2).unwrap()).unwrap());
    }

    #[test]
    fn direct_sum_verdicts() {
        let whole = GradedPiece::from_monomials(
            3,
            2,
            &[Monomial::new(vec![2, 0, 0]), Monomial::new(vec![0, 2, 0])],
        )
        .unwrap();
        let a = GradedPiece::from_monomials(3, 2, &[Monomial::new(vec![2, 0, 0])]).unwrap();
        let b = GradedPiece::from_monomials(3, 2, &[Monomial::new(vec![0, 2, 0])]).unwrap();
        let ok = direct_sum_check(&whole, &[&a, &b]).unwrap();
        assert!(ok.pass());

        // overlapping parts fail independence
        let bad = direct_sum_check(&whole, &[&a, &a]).unwrap();
        assert!(!bad.pass());
        assert_eq!(bad.stacked_rank, 1);

        // a part outside the whole fails containment
        let c = GradedPiece::from_monomials(3, 2, &[Monomial::new(vec![0, 0, 2])]).unwrap();
        let outside = direct_sum_check(&whole, &[&a, &c]).unwrap();
        assert!(!outside.pass());
        assert!(!outside.parts_contained);
    }

    #[test]
    fn intersection_of_graded_pieces() {
        let a = GradedPiece::from_monomials(
            3,
            2,
            &[Monomial::new(vec![2, 0, 0]), Monomial::new(vec![1, 1, 0])],
        )
        .unwrap();
        let b = GradedPiece::from_monomials(
            3,
            2,
            &[Monomial::new(vec![1, 1, 0]), Monomial::new(vec![0, 0, 2])],
        )
        .unwrap();
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet.q(), 1);
        assert!(meet
            .contains(&parse_polynomial("x0*x1", 3).unwrap())
            .unwrap());
    }
}
