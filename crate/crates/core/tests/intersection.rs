//! The graded-piece intersection is computed by a stacked-elimination
//! method. This cross-checks it with a dual route: a vector lies in a row
//! space exactly when it pairs to zero with the nullspace, so the
//! intersection of two row spaces is the nullspace of the stacked
//! nullspaces.

use statepoly::ideal::GradedPiece;
use statepoly::matrix::Matrix;
use statepoly::parse::parse_polynomial;
use statepoly::{IdealPresentation, Polynomial, Rat};

/// Row-space intersection through orthogonal complements.
fn intersect_by_pairing(a: &Matrix<Rat>, b: &Matrix<Rat>) -> Matrix<Rat> {
    let na = a.nullspace();
    let nb = b.nullspace();
    let mut stacked = na;
    for row in nb.rows() {
        stacked.push_row(row.clone()).unwrap();
    }
    let mut result = stacked.nullspace();
    result.rref();
    result
}

fn ideal(n_vars: usize, gens: &[&str]) -> IdealPresentation {
    let polys: Vec<Polynomial> = gens
        .iter()
        .map(|src| parse_polynomial(src, n_vars).unwrap())
        .collect();
    IdealPresentation::new(n_vars, polys).unwrap()
}

fn check(a: &GradedPiece, b: &GradedPiece) {
    let direct = a.intersect(b).unwrap();
    let oracle = intersect_by_pairing(a.mat(), b.mat());
    assert_eq!(direct.q(), oracle.n_rows(), "ranks disagree");
    for (row, expected) in direct.mat().rows().iter().zip(oracle.rows()) {
        assert_eq!(row, expected, "canonical bases disagree");
    }
}

#[test]
fn conic_meets_a_monomial_ideal() {
    let conic = ideal(3, &["x0*x2 - x1^2"]);
    let mono = ideal(3, &["x0*x1", "x1*x2"]);
    for m in 2..=4 {
        check(
            &conic.graded_piece(m).unwrap(),
            &mono.graded_piece(m).unwrap(),
        );
    }
}

#[test]
fn chain_style_saturated_ideals_intersect_consistently() {
    let left = ideal(5, &["x0*x2 - x1^2", "x3", "x4"]);
    let right = ideal(5, &["x2*x4 - x3^2", "x0", "x1"]);
    for m in 2..=3 {
        check(
            &left.graded_piece(m).unwrap(),
            &right.graded_piece(m).unwrap(),
        );
    }
}

#[test]
fn intersection_with_the_full_space_is_identity() {
    let conic = ideal(3, &["x0*x2 - x1^2"]);
    let piece = conic.graded_piece(2).unwrap();
    let all = statepoly::monomial::monomials_of_degree(3, 2);
    let full = GradedPiece::from_monomials(3, 2, &all).unwrap();
    check(&piece, &full);
    let both = piece.intersect(&full).unwrap();
    assert_eq!(both.q(), piece.q());
}

#[test]
fn disjoint_row_spaces_intersect_to_zero() {
    let a = ideal(3, &["x0^2"]);
    let b = ideal(3, &["x1^2"]);
    let meet = a
        .graded_piece(2)
        .unwrap()
        .intersect(&b.graded_piece(2).unwrap())
        .unwrap();
    assert!(meet.is_zero());
    check(&a.graded_piece(2).unwrap(), &b.graded_piece(2).unwrap());
}
