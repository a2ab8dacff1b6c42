//! Tokenizer and recursive-descent parser for the textual scalar / polynomial
//! syntax: `+ - * / ^`, parentheses, integer literals, the reserved names `i`
//! and `t`, and free identifiers as variables.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational, ValuedScalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Imag,
    T,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Op(c) => write!(f, "{c}"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push(Tok::Int(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{src}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn is_op(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Op(d)) if *d == c)
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.is_op(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn error(&self, what: &str) -> Error {
        match self.peek() {
            Some(tok) => Error::Parse(format!("{what} at `{tok}` in `{}`", self.src)),
            None => Error::Parse(format!("{what} at end of `{}`", self.src)),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.is_op('+') {
                self.pos += 1;
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_op('-') {
                self.pos += 1;
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.is_op('*') {
                self.pos += 1;
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.is_op('/') {
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.is_op('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.is_op('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.is_op('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.is_op('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Rational::from_bigint(n)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect_op(')')?;
                inner.eval_rational()?
            }
            _ => return Err(self.error("expected exponent")),
        };
        Ok(Expr::Pow(Box::new(base), if negative { -e } else { e }))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_bigint(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(match name.as_str() {
                    "i" => Expr::Imag,
                    "t" => Expr::T,
                    _ => Expr::Var(name),
                })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_op(')')?;
                Ok(e)
            }
            _ => Err(self.error("expected a number, name or `(`")),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let toks = tokenize(src)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut p = Parser { toks, pos: 0, src };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    pub fn has_vars(&self) -> bool {
        match self {
            Expr::Var(_) => true,
            Expr::Num(_) | Expr::Imag | Expr::T => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.has_vars(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.has_vars() || b.has_vars(),
        }
    }

    /// Variable names in order of first appearance.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Num(_) | Expr::Imag | Expr::T => {}
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Evaluates a constant expression built from integers only.
    pub fn eval_rational(&self) -> Result<Rational> {
        Ok(match self {
            Expr::Num(r) => r.clone(),
            Expr::Neg(a) => -a.eval_rational()?,
            Expr::Add(a, b) => a.eval_rational()? + b.eval_rational()?,
            Expr::Sub(a, b) => a.eval_rational()? - b.eval_rational()?,
            Expr::Mul(a, b) => a.eval_rational()? * b.eval_rational()?,
            Expr::Div(a, b) => a.eval_rational()?.checked_div(&b.eval_rational()?)?,
            Expr::Pow(a, e) => {
                let k = e.to_i64().filter(|_| e.is_integer()).ok_or_else(|| Error::Parse(format!("non-integer exponent {e} in rational constant")))?;
                a.eval_rational()?.pow(k)?
            }
            _ => return Err(Error::Parse("expected a rational constant".into())),
        })
    }

    /// Evaluates a variable-free expression in the coefficient field.
    pub fn eval_scalar(&self) -> Result<ValuedScalar> {
        Ok(match self {
            Expr::Num(r) => ValuedScalar::from_rational(r.clone()),
            Expr::Imag => ValuedScalar::i(),
            Expr::T => ValuedScalar::t_pow(Rational::one()),
            Expr::Var(v) => return Err(Error::Parse(format!("unexpected variable `{v}` in scalar"))),
            Expr::Neg(a) => a.eval_scalar()?.neg(),
            Expr::Add(a, b) => a.eval_scalar()?.add(&b.eval_scalar()?),
            Expr::Sub(a, b) => a.eval_scalar()?.sub(&b.eval_scalar()?),
            Expr::Mul(a, b) => a.eval_scalar()?.mul(&b.eval_scalar()?),
            Expr::Div(a, b) => a.eval_scalar()?.checked_div(&b.eval_scalar()?)?,
            Expr::Pow(a, e) => {
                let base = a.eval_scalar()?;
                if let Some(k) = e.to_i64().filter(|_| e.is_integer()) {
                    base.pow(k)?
                } else {
                    // rational powers are only defined on t-monomials with coefficient 1
                    match base.leading_term() {
                        Ok((q, c)) if c.is_one() && base == ValuedScalar::t_pow(q.clone()) => ValuedScalar::t_pow(&q * e),
                        _ => return Err(Error::Parse(format!("rational power {e} of `{base}` is not in the coefficient field"))),
                    }
                }
            }
        })
    }
}

/// Parses a coefficient-field element such as `(2*t^(1/2) + i)/3`.
pub fn parse_scalar(src: &str) -> Result<ValuedScalar> {
    Expr::parse(src)?.eval_scalar()
}

/// Parses a Gaussian rational such as `1/2 - 3*i`.
pub fn parse_gaussian(src: &str) -> Result<GaussianRational> {
    parse_scalar(src)?.as_gaussian().ok_or_else(|| Error::Parse(format!("`{src}` is not a Gaussian rational")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn parses_scalars() {
        let a = parse_scalar("(2*t^(1/2) + i)/3").unwrap();
        assert_eq!(a.valuation().finite().unwrap(), &q(0, 1));
        assert_eq!(parse_scalar("t^(1/2)*t^(1/2)").unwrap(), parse_scalar("t").unwrap());
        assert_eq!(parse_scalar("i^2").unwrap(), ValuedScalar::from_integer(-1));
        assert_eq!(parse_scalar("t^-1 * t").unwrap(), ValuedScalar::one());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x + 1").is_err());
        assert!(parse_scalar("(1+t)^(1/2)").is_err());
        assert!(parse_scalar("1 +").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for s in ["0", "7", "-1/2", "i", "1/2 - i", "2/3*i", "(1 + i)*t^(1/2)", "-t^(-1) + 3*t^2", "(1)/(1 - t)", "(t)/(1 + i*t^(1/3))"] {
            let a = parse_scalar(s).unwrap();
            let b = parse_scalar(&a.to_string()).unwrap();
            assert_eq!(a, b, "{s}");
            assert_eq!(a.to_string(), b.to_string());
        }
    }

    #[test]
    fn collects_variables_in_order() {
        let e = Expr::parse("y*x + z^-1 - y").unwrap();
        let mut vars = Vec::new();
        e.collect_vars(&mut vars);
        assert_eq!(vars, vec!["y", "x", "z"]);
    }
}
