use num_bigint::BigInt;
use num_traits::One;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::{Error, Rat, Result};

/// Parses polynomial text like `3/2*x0^2*x1 - x2^3`.
///
/// Sums and differences of terms; a term is a `*`-separated product of
/// rational coefficients (`3`, `3/2`) and powers `xi` or `xi^e`. Whitespace is
/// insignificant.
pub fn parse_polynomial(input: &str, n_vars: usize) -> Result<Polynomial> {
    Parser::new(input, n_vars)?.parse()
}

/// Parses an ideal file: a `vars: <count>` header followed by one generator
/// per line. `#` starts a comment; blank lines are skipped.
pub fn parse_ideal_file(text: &str) -> Result<(usize, Vec<Polynomial>)> {
    let mut n_vars: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match n_vars {
            None => {
                let rest = line.strip_prefix("vars:").ok_or_else(|| {
                    Error::Parse(format!(
                        "line {}: expected `vars: <count>` header",
                        lineno + 1
                    ))
                })?;
                let count: usize = rest.trim().parse().map_err(|_| {
                    Error::Parse(format!(
                        "line {}: bad variable count `{}`",
                        lineno + 1,
                        rest.trim()
                    ))
                })?;
                if count == 0 {
                    return Err(Error::Parse(format!(
                        "line {}: need at least one variable",
                        lineno + 1
                    )));
                }
                n_vars = Some(count);
            }
            Some(nv) => {
                let p = parse_polynomial(line, nv)
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                gens.push(p);
            }
        }
    }
    let n_vars = n_vars.ok_or_else(|| Error::Parse("missing `vars:` header".into()))?;
    Ok((n_vars, gens))
}

/// Parses a comma-separated integer vector such as `1,0,-1`.
pub fn parse_weight_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer weight `{}`", t.trim())))
        })
        .collect()
}

/// Parses comma-separated rational coefficients, constant term first.
pub fn parse_rational_vector(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(|t| crate::scalar::parse_rat(t)).collect()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    n_vars: usize,
}

impl Parser {
    fn new(input: &str, n_vars: usize) -> Result<Self> {
        let mut tokens = Vec::new();
        let bytes = input.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' => i += 1,
                '^' => {
                    tokens.push(Token::Caret);
                    i += 1;
                }
                '*' => {
                    tokens.push(Token::Star);
                    i += 1;
                }
                '/' => {
                    tokens.push(Token::Slash);
                    i += 1;
                }
                '+' => {
                    tokens.push(Token::Plus);
                    i += 1;
                }
                '-' => {
                    tokens.push(Token::Minus);
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: BigInt = input[start..i].parse().expect("digits parse");
                    tokens.push(Token::Int(n));
                }
                'x' => {
                    i += 1;
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(Error::Parse(format!(
                            "variable index missing at byte {start}"
                        )));
                    }
                    let idx: usize = input[start..i].parse().map_err(|_| {
                        Error::Parse(format!("bad variable `x{}`", &input[start..i]))
                    })?;
                    tokens.push(Token::Var(idx));
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character `{other}` at byte {i}"
                    )));
                }
            }
        }
        Ok(Parser {
            tokens,
            pos: 0,
            n_vars,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse(&mut self) -> Result<Polynomial> {
        if self.tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = Polynomial::zero(self.n_vars);
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Token::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (m, c) = self.term()?;
            let signed = if sign < 0 { -c } else { c };
            poly.add_term(m, signed)?;
            match self.next() {
                None => break,
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                Some(t) => {
                    return Err(Error::Parse(format!(
                        "expected + or - between terms, got {t:?}"
                    )))
                }
            }
        }
        Ok(poly)
    }

    /// One product of coefficients and variable powers.
    fn term(&mut self) -> Result<(Monomial, Rat)> {
        let mut coeff = Rat::one();
        let mut exps = vec![0u32; self.n_vars];
        loop {
            match self.next() {
                Some(Token::Int(n)) => {
                    let mut value = Rat::from_integer(n);
                    if matches!(self.peek(), Some(Token::Slash)) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Int(d)) => {
                                if d == BigInt::from(0) {
                                    return Err(Error::Parse("zero denominator".into()));
                                }
                                value /= Rat::from_integer(d);
                            }
                            other => {
                                return Err(Error::Parse(format!(
                                    "expected denominator after `/`, got {other:?}"
                                )))
                            }
                        }
                    }
                    coeff *= value;
                }
                Some(Token::Var(idx)) => {
                    if idx >= self.n_vars {
                        return Err(Error::Parse(format!(
                            "variable x{idx} out of range (ambient has {} variables)",
                            self.n_vars
                        )));
                    }
                    let mut e = 1u32;
                    if matches!(self.peek(), Some(Token::Caret)) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Int(n)) => {
                                e = u32::try_from(&n).map_err(|_| {
                                    Error::Parse(format!("exponent {n} out of range"))
                                })?;
                            }
                            other => {
                                return Err(Error::Parse(format!(
                                    "expected exponent after `^`, got {other:?}"
                                )))
                            }
                        }
                    }
                    exps[idx] += e;
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected coefficient or variable, got {other:?}"
                    )))
                }
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.pos += 1;
                continue;
            }
            break;
        }
        Ok((Monomial::new(exps), coeff))
    }
}
