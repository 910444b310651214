//! Ring-sum expansions: sums mod `k` of products of variables, indicator
//! powers `x^a` and constants.
//!
//! ```text
//! expr   := term (('⊕' | '+') term)*
//! term   := factor+
//! factor := const | var | var '^' const | '(' expr ')'
//! var    := 'x' digits
//! ```
//!
//! Juxtaposition is multiplication and binds tighter than the sum. Whitespace
//! is ignored; `*` and `·` are accepted as explicit product signs and
//! `x_1` as a spelling of `x1`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::table::FunctionTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Const(u64),
    /// Zero-based variable index.
    Var(usize),
    /// `x_i^a`: 1 where `x_i = a`, else 0.
    Indicator(usize, u64),
    Group(RseExpr),
}

/// A parsed expression; a sum of products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RseExpr {
    pub terms: Vec<Vec<Factor>>,
}

impl RseExpr {
    pub fn parse(text: &str) -> Result<RseExpr> {
        let mut p = Parser { src: text, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(e)
    }

    /// Largest one-based variable number used, 0 if none.
    pub fn max_var(&self) -> usize {
        self.terms
            .iter()
            .flatten()
            .map(|f| match f {
                Factor::Const(_) => 0,
                Factor::Var(i) | Factor::Indicator(i, _) => i + 1,
                Factor::Group(e) => e.max_var(),
            })
            .max()
            .unwrap_or(0)
    }

    fn check_literals(&self, k: usize) -> Result<()> {
        for f in self.terms.iter().flatten() {
            match f {
                Factor::Const(c) | Factor::Indicator(_, c) if *c >= k as u64 => {
                    return Err(Error::ValueOutOfRange {
                        value: *c as usize,
                        k,
                    })
                }
                Factor::Group(e) => e.check_literals(k)?,
                _ => {}
            }
        }
        Ok(())
    }

    pub fn eval(&self, k: u64, point: &[u8]) -> u64 {
        self.terms
            .iter()
            .map(|term| {
                term.iter().fold(1u64, |acc, f| {
                    let v = match f {
                        Factor::Const(c) => *c,
                        Factor::Var(i) => point[*i] as u64,
                        Factor::Indicator(i, a) => (point[*i] as u64 == *a) as u64,
                        Factor::Group(e) => e.eval(k, point),
                    };
                    acc * v % k
                })
            })
            .fold(0, |acc, v| (acc + v) % k)
    }

    /// Tabulates the expression over `Z_k^n`.
    pub fn to_table(&self, k: usize, n: usize) -> Result<FunctionTable> {
        let top = self.max_var();
        if top > n {
            return Err(Error::VariableOutOfRange { index: top - 1, n });
        }
        self.check_literals(k)?;
        FunctionTable::from_fn(k, n, |p| self.eval(k as u64, p) as u8)
    }
}

/// Parses `text` and evaluates it on `Z_k^n`.
pub fn parse(text: &str, k: usize, n: usize) -> Result<FunctionTable> {
    RseExpr::parse(text)?.to_table(k, n)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.src[start..self.pos].parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "number too large".into(),
        })
    }

    fn expr(&mut self) -> Result<RseExpr> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') | Some('⊕') => {
                    self.bump();
                    terms.push(self.term()?);
                }
                _ => return Ok(RseExpr { terms }),
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Factor>> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') | Some('·') if !factors.is_empty() => {
                    self.bump();
                    self.skip_ws();
                    if !self.starts_factor() {
                        return Err(self.error("expected a factor after product sign"));
                    }
                }
                _ if self.starts_factor() => factors.push(self.factor()?),
                _ if factors.is_empty() => return Err(self.error("expected a term")),
                _ => return Ok(factors),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c == 'x' || c == '(' || c.is_ascii_digit())
    }

    fn factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(Factor::Group(e))
            }
            Some('x') => {
                let at = self.pos;
                self.bump();
                if self.peek() == Some('_') {
                    self.bump();
                }
                let idx = self.number()?;
                if idx == 0 {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "variables are numbered from x1".into(),
                    });
                }
                let var = (idx - 1) as usize;
                self.skip_ws();
                if self.peek() == Some('^') {
                    self.bump();
                    self.skip_ws();
                    Ok(Factor::Indicator(var, self.number()?))
                } else {
                    Ok(Factor::Var(var))
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Factor::Const(self.number()?)),
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// Writes `f` as a sum of miniterms `f(a) x1^a1 ... xn^an` over the rows
/// where `f(a) != 0`.
pub fn format_miniterms(f: &FunctionTable) -> String {
    let mut out = String::new();
    let mut point = vec![0u8; f.n()];
    for (idx, &v) in f.values().iter().enumerate() {
        if v == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" ⊕ ");
        }
        crate::table::point_of(f.k(), idx, &mut point);
        if v != 1 || f.n() == 0 {
            write!(out, "{v}").unwrap();
        }
        for (i, a) in point.iter().enumerate() {
            write!(out, "x{}^{}", i + 1, a).unwrap();
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
