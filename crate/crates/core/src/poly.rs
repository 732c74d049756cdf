use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::{Error, Rat, Result};

/// A polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored; the zero polynomial has an empty term
/// map. Homogeneity is a property checked by callers that need it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(n_vars: usize, terms: Vec<(Monomial, Rat)>) -> Result<Self> {
        let mut p = Polynomial::zero(n_vars);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn monomial(m: Monomial) -> Self {
        let n_vars = m.n_vars();
        let mut terms = BTreeMap::new();
        terms.insert(m, Rat::one());
        Polynomial { n_vars, terms }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) -> Result<()> {
        if m.n_vars() != self.n_vars {
            return Err(Error::AmbientMismatch {
                expected: self.n_vars,
                got: m.n_vars(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of a homogeneous polynomial; `None` when zero, error when
    /// the terms have mixed degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut deg = None;
        for m in self.terms.keys() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::InvalidInput(format!(
                        "inhomogeneous polynomial: degrees {d} and {} in {self}",
                        m.degree()
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a single monomial (graded shift).
    pub fn shift(&self, m: &Monomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n_vars);
        for (t, c) in &self.terms {
            out.add_term(t.mul(m)?, c.clone())?;
        }
        Ok(out)
    }

    /// Re-reads the polynomial inside a larger ambient, placing variable 0 at
    /// `offset`.
    pub fn embed(&self, offset: usize, n_vars_to: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(n_vars_to);
        for (t, c) in &self.terms {
            out.add_term(t.embed(offset, n_vars_to)?, c.clone())?;
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending lex over exponent vectors, matching the canonical column order
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
