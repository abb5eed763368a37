//! The polynomial literal grammar.
//!
//! Integers, `p/q`, identifiers, `+ - * / ^` and parentheses. Juxtaposition
//! before an identifier or a parenthesis multiplies, so `2mn` reads as
//! `2*mn`. An identifier that is neither a variable nor a parameter but whose
//! letters are all parameters is their product (`mn` is `m*n`). Exponents are
//! integer expressions in the parameters and must be nonnegative.

use super::poly::Polynomial;
use super::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Parameter values available to templates.
pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

/// A syntax or evaluation error at a character offset of the parsed text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

impl ExprError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ExprError {
            offset,
            message: message.into(),
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.offset)
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Ident(text)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ExprError::new(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('('))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.atom()?;
            Ok(Expr::Pow(Box::new(base), Box::new(e)))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let off = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(ExprError::new(self.offset(), "expected ')'"));
                }
                Ok(e)
            }
            Some(Tok::Sym(c)) => Err(ExprError::new(off, format!("unexpected '{c}'"))),
            None => Err(ExprError::new(off, "unexpected end of expression")),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, ExprError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ExprError::new(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ExprError::new(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => PREC_ADD,
            Expr::Mul(..) | Expr::Div(..) => PREC_MUL,
            Expr::Neg(_) => PREC_NEG,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Ident(_) => PREC_ATOM,
        }
    }

    fn write(&self, out: &mut String, ctx: u8) {
        let wrap = self.prec() < ctx;
        if wrap {
            out.push('(');
        }
        match self {
            Expr::Num(n) => out.push_str(&n.to_string()),
            Expr::Ident(s) => out.push_str(s),
            Expr::Neg(a) => {
                out.push('-');
                a.write(out, PREC_NEG);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(out, PREC_ADD);
                out.push_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " });
                b.write(out, PREC_MUL);
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write(out, PREC_MUL);
                out.push(if matches!(self, Expr::Mul(..)) { '*' } else { '/' });
                b.write(out, PREC_NEG);
            }
            Expr::Pow(a, b) => {
                a.write(out, PREC_ATOM);
                out.push('^');
                b.write(out, PREC_ATOM);
            }
        }
        if wrap {
            out.push(')');
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, 0);
        f.write_str(&s)
    }
}

/// Evaluates to a polynomial over `vars`. Evaluation errors carry offset 0;
/// callers attach positions.
pub fn to_polynomial(e: &Expr, vars: &[String], params: &Params) -> Result<Polynomial, String> {
    let n = vars.len();
    Ok(match e {
        Expr::Num(k) => Polynomial::constant(n, Rational::from_integer(k.clone())),
        Expr::Ident(s) => {
            if let Some(i) = vars.iter().position(|v| v == s) {
                Polynomial::var(n, i)
            } else {
                Polynomial::constant(n, Rational::from_integer(param_value(s, params)?.into()))
            }
        }
        Expr::Neg(a) => -to_polynomial(a, vars, params)?,
        Expr::Add(a, b) => to_polynomial(a, vars, params)? + to_polynomial(b, vars, params)?,
        Expr::Sub(a, b) => to_polynomial(a, vars, params)? - to_polynomial(b, vars, params)?,
        Expr::Mul(a, b) => to_polynomial(a, vars, params)? * to_polynomial(b, vars, params)?,
        Expr::Div(a, b) => {
            let d = to_polynomial(b, vars, params)?
                .as_constant()
                .ok_or_else(|| "division by a non-constant".to_string())?;
            if d.is_zero() {
                return Err("division by zero".into());
            }
            to_polynomial(a, vars, params)?.scale(&(Rational::one() / d))
        }
        Expr::Pow(a, b) => {
            let k = eval_int(b, params)?;
            if k < 0 {
                return Err(format!("negative exponent {k} in {e}"));
            }
            let k = u32::try_from(k).map_err(|_| "exponent too large".to_string())?;
            to_polynomial(a, vars, params)?.pow(k)
        }
    })
}

/// Evaluates a constant expression in the parameters.
pub fn eval_rational(e: &Expr, params: &Params) -> Result<Rational, String> {
    let p = to_polynomial(e, &[], params)?;
    Ok(p.as_constant().expect("no variables"))
}

/// Evaluates an integer expression in the parameters.
pub fn eval_int(e: &Expr, params: &Params) -> Result<i64, String> {
    let q = eval_rational(e, params)?;
    if !q.is_integer() {
        return Err(format!("{e} is not an integer"));
    }
    let v = q.numer();
    if v.abs() > BigInt::from(i64::MAX) {
        return Err(format!("{e} is too large"));
    }
    Ok(v.to_i64().expect("range checked"))
}

fn param_value(s: &str, params: &Params) -> Result<i64, String> {
    if let Some(v) = params.get(s) {
        return Ok(*v);
    }
    let mut acc: i64 = 1;
    for c in s.chars() {
        match params.get(c.to_string().as_str()) {
            Some(v) => acc = acc.checked_mul(*v).ok_or("parameter overflow")?,
            None => return Err(format!("unknown identifier '{s}'")),
        }
    }
    Ok(acc)
}

/// Parses and evaluates, for tests and examples.
pub fn parse_polynomial(s: &str, vars: &[String], params: &Params) -> Result<Polynomial, String> {
    let e = parse_expr(s).map_err(|e| e.to_string())?;
    to_polynomial(&e, vars, params)
}
