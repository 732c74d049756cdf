use std::fmt;

use crate::{Error, Result};

/// A monomial in `x0..x_{n}` stored as its exponent vector.
///
/// The derived `Ord` (lexicographic on the exponent vector) is only a storage
/// order for maps and sets; term comparisons go through [`crate::order::TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in an ambient of `n_vars` variables.
    pub fn one(n_vars: usize) -> Self {
        Monomial {
            exps: vec![0; n_vars],
        }
    }

    /// `x_i` in an ambient of `n_vars` variables.
    pub fn var(i: usize, n_vars: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.n_vars() != other.n_vars() {
            return Err(Error::AmbientMismatch {
                expected: self.n_vars(),
                got: other.n_vars(),
            });
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n_vars() == other.n_vars() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// True when every variable with a positive exponent lies in `lo..=hi`.
    pub fn supported_in(&self, lo: usize, hi: usize) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || (lo <= i && i <= hi))
    }

    /// Pads the exponent vector into a larger ambient, placing variable 0 at
    /// `offset`.
    pub fn embed(&self, offset: usize, n_vars_to: usize) -> Result<Monomial> {
        if offset + self.n_vars() > n_vars_to {
            return Err(Error::InvalidInput(format!(
                "embedding of {} variables at offset {offset} does not fit in {n_vars_to}",
                self.n_vars()
            )));
        }
        let mut exps = vec![0; n_vars_to];
        exps[offset..offset + self.n_vars()].copy_from_slice(&self.exps);
        Ok(Monomial { exps })
    }

    /// Inverse of [`Monomial::embed`]: keeps variables `lo..=hi` of a monomial
    /// supported there.
    pub fn restrict(&self, lo: usize, hi: usize) -> Result<Monomial> {
        if !self.supported_in(lo, hi) {
            return Err(Error::InvalidInput(format!(
                "{self} is not supported in x{lo}..x{hi}"
            )));
        }
        Ok(Monomial {
            exps: self.exps[lo..=hi].to_vec(),
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All degree-`m` monomials in `n_vars` variables, in descending lexicographic
/// order. This is the canonical column order of every graded piece.
pub fn monomials_of_degree(n_vars: usize, m: u32) -> Vec<Monomial> {
    assert!(n_vars > 0, "ambient must have at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u32; n_vars];
    fill(&mut out, &mut current, 0, m);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// `<exponents, weights>` as an integer.
pub fn weight_of(monomial: &Monomial, weights: &[i64]) -> Result<i64> {
    if weights.len() != monomial.n_vars() {
        return Err(Error::AmbientMismatch {
            expected: monomial.n_vars(),
            got: weights.len(),
        });
    }
    Ok(monomial
        .exps
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as i64 * w)
        .sum())
}
