use std::cmp::Ordering;
use std::fmt;

use crate::monomial::{weight_of, Monomial};
use crate::{Error, Result};

/// A term order on monomials of a fixed ambient.
///
/// All three kinds restrict to total orders on the monomials of each fixed
/// degree. Weighted orders compare by weight first (larger weight is greater)
/// and break ties with graded reverse lex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    GrevLex,
    Weighted(Vec<i64>),
}

impl TermOrder {
    pub fn weighted(weights: Vec<i64>) -> Self {
        TermOrder::Weighted(weights)
    }

    /// Compares `a` and `b`; `Greater` means `a` is the larger term.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.n_vars() != b.n_vars() {
            return Err(Error::AmbientMismatch {
                expected: a.n_vars(),
                got: b.n_vars(),
            });
        }
        match self {
            TermOrder::Lex => Ok(a.exps().cmp(b.exps())),
            TermOrder::GrevLex => Ok(grevlex(a, b)),
            TermOrder::Weighted(w) => {
                if w.len() != a.n_vars() {
                    return Err(Error::AmbientMismatch {
                        expected: a.n_vars(),
                        got: w.len(),
                    });
                }
                let wa = weight_of(a, w)?;
                let wb = weight_of(b, w)?;
                Ok(wa.cmp(&wb).then_with(|| grevlex(a, b)))
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::GrevLex => write!(f, "grevlex"),
            TermOrder::Weighted(w) => {
                write!(f, "weighted(")?;
                for (i, r) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Graded reverse lex: higher total degree wins; on equal degrees the
/// monomial whose trailing exponent difference is negative wins.
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.n_vars()).rev() {
        let d = a.exp(i) as i64 - b.exp(i) as i64;
        if d != 0 {
            return if d < 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}
