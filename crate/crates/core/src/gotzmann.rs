use num_traits::{One, Signed, Zero};

use crate::{Error, Rat, Result};

/// Bound on the number of binomial terms the greedy expansion will emit
/// before giving up. Constant polynomials need as many terms as their value,
/// so huge constants are rejected rather than looped over forever.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Coefficients of `C(t + shift, a)` as a polynomial in `t`, constant term
/// first. `a = 0` gives the constant 1.
pub fn binomial_coeffs(a: usize, shift: i64) -> Vec<Rat> {
    let mut coeffs = vec![Rat::one()];
    for j in 0..a {
        // multiply by (t + shift - j)
        let c = Rat::from_integer((shift - j as i64).into());
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (k, x) in coeffs.iter().enumerate() {
            next[k] += x.clone() * c.clone();
            next[k + 1] += x.clone();
        }
        coeffs = next;
    }
    let mut factorial = Rat::one();
    for j in 1..=a {
        factorial *= Rat::from_integer((j as i64).into());
    }
    for x in &mut coeffs {
        *x /= factorial.clone();
    }
    coeffs
}

fn trim(coeffs: &mut Vec<Rat>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

fn sub_in_place(lhs: &mut Vec<Rat>, rhs: &[Rat]) {
    if lhs.len() < rhs.len() {
        lhs.resize(rhs.len(), Rat::zero());
    }
    for (x, y) in lhs.iter_mut().zip(rhs) {
        *x -= y.clone();
    }
    trim(lhs);
}

/// Evaluates a coefficient vector (constant term first) at `t`.
pub fn evaluate(coeffs: &[Rat], t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t.clone() + c.clone();
    }
    acc
}

/// Expands a polynomial (coefficients constant term first) into the unique
/// sum `sum_{i=1..s} C(t + a_i - (i - 1), a_i)` with non-increasing
/// non-negative `a_i`, and returns the `a_i`. The zero polynomial yields the
/// empty expansion. Polynomials admitting no such expansion within `cap`
/// terms are rejected.
pub fn gotzmann_representation(coeffs: &[Rat], cap: usize) -> Result<Vec<u32>> {
    let mut rem = coeffs.to_vec();
    trim(&mut rem);
    let mut exponents: Vec<u32> = Vec::new();
    while !rem.is_empty() {
        if exponents.len() >= cap {
            return Err(Error::NotHilbertPolynomial(format!(
                "expansion did not terminate within {cap} terms"
            )));
        }
        let a = rem.len() - 1;
        let leading = rem.last().expect("trimmed");
        if !leading.is_positive() {
            return Err(Error::NotHilbertPolynomial(format!(
                "remainder of degree {a} has non-positive leading coefficient {leading}"
            )));
        }
        let i = exponents.len() as i64; // zero-based index of the new term
        sub_in_place(&mut rem, &binomial_coeffs(a, a as i64 - i));
        if rem.len() > a + 1 {
            return Err(Error::Internal("degree grew during expansion".into()));
        }
        exponents.push(a as u32);
    }
    Ok(exponents)
}

/// Number of terms in the expansion of [`gotzmann_representation`]; the
/// degree from which the polynomial's ideals are generated by their span.
pub fn gotzmann_number(coeffs: &[Rat], cap: usize) -> Result<u64> {
    Ok(gotzmann_representation(coeffs, cap)?.len() as u64)
}

/// Rebuilds the coefficient vector from exponents, for checking expansions.
pub fn expansion_sum(exponents: &[u32]) -> Vec<Rat> {
    let mut total = Vec::new();
    for (i, &a) in exponents.iter().enumerate() {
        let term = binomial_coeffs(a as usize, a as i64 - i as i64);
        let mut acc = total;
        if acc.len() < term.len() {
            acc.resize(term.len(), Rat::zero());
        }
        for (x, y) in acc.iter_mut().zip(&term) {
            *x += y.clone();
        }
        total = acc;
    }
    trim(&mut total);
    total
}
