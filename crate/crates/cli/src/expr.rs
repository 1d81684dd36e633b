//! Expression parsing for the command-line surface.
//!
//! Grammar (whitespace between tokens is ignored; there is no implicit
//! multiplication):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := rational | symbol | '(' expr ')'
//! ```
//!
//! `rational` is `p` or `p/q` in decimal digits; `symbol` is a letter
//! followed by letters, digits, or underscores. Multiplication is
//! noncommutative and left-associative; `^` binds tighter than unary
//! minus, which binds tighter than `*` (so `-i^2` is `-(i²)` and
//! `a * -b` negates only `b`).
//!
//! Symbols resolve in a fixed order: `x<d>` is a free variable, `y<i>_<j>`
//! a central variable (only in central expressions), then the ambient
//! algebra's basis labels, then the positional aliases `e1…em`. Offsets
//! in errors are byte offsets into the input text.

use num_traits::ToPrimitive;
use quapoly::rational::parse_rational;
use quapoly::{Algebra, AlgebraElement, CentralPoly, FreePoly, Point, Rational};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Rat(Rational),
    Sym(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Lexed {
    tok: Tok,
    off: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < b.len() {
        if b[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let off = i;
        let tok = match b[i] {
            b'+' => {
                i += 1;
                Tok::Plus
            }
            b'-' => {
                i += 1;
                Tok::Minus
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'^' => {
                i += 1;
                Tok::Caret
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut j = i + 1;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if j < b.len() && b[j] == b'/' {
                    let den = j + 1;
                    let mut k = den;
                    while k < b.len() && b[k].is_ascii_digit() {
                        k += 1;
                    }
                    if k == den {
                        return Err(CliError::SyntaxError {
                            offset: den,
                            expected: "digits after '/'".into(),
                        });
                    }
                    j = k;
                }
                let r = parse_rational(&text[i..j]).ok_or_else(|| CliError::SyntaxError {
                    offset: off,
                    expected: "a rational with a nonzero denominator".into(),
                })?;
                i = j;
                Tok::Rat(r)
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i + 1;
                while j < b.len() && (b[j].is_ascii_alphanumeric() || b[j] == b'_') {
                    j += 1;
                }
                let s = text[i..j].to_string();
                i = j;
                Tok::Sym(s)
            }
            _ => {
                return Err(CliError::SyntaxError {
                    offset: off,
                    expected: "a token ('+', '-', '*', '^', parentheses, a rational, or a symbol)"
                        .into(),
                })
            }
        };
        out.push(Lexed { tok, off });
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Rat(Rational),
    Sym { name: String, off: usize },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    /// Offset of the next token, or the text length at the end of input.
    fn off(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |l| l.off)
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Ast::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Ast::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = Ast::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let off = self.off();
            let bad = || CliError::SyntaxError {
                offset: off,
                expected: "a nonnegative integer exponent".into(),
            };
            let e = match self.peek() {
                Some(Tok::Rat(r)) if r.is_integer() => r.to_integer().to_u32().ok_or_else(bad)?,
                _ => return Err(bad()),
            };
            self.pos += 1;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        let off = self.off();
        let tok = self.peek();
        self.pos += 1;
        match tok {
            Some(Tok::Rat(r)) => Ok(Ast::Rat(r.clone())),
            Some(Tok::Sym(s)) => Ok(Ast::Sym { name: s.clone(), off }),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(CliError::SyntaxError { offset: self.off(), expected: "')'".into() }),
                }
            }
            _ => Err(CliError::SyntaxError {
                offset: off,
                expected: "an atom (a rational, a symbol, or '(')".into(),
            }),
        }
    }
}

fn parse_ast(text: &str) -> Result<Ast> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, pos: 0, end: text.len() };
    let ast = p.expr()?;
    if p.pos != toks.len() {
        return Err(CliError::SyntaxError {
            offset: p.off(),
            expected: "an operator ('+', '-', '*', or '^')".into(),
        });
    }
    Ok(ast)
}

fn digits_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `x12` → `Some(12)` (1-based index as written).
fn var_index(name: &str) -> Option<usize> {
    name.strip_prefix('x').and_then(digits_index)
}

/// `y3_2` → `Some((3, 2))` (1-based variable and coordinate).
fn central_index(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix('y')?;
    let (i, j) = rest.split_once('_')?;
    Some((digits_index(i)?, digits_index(j)?))
}

/// `e4` → `Some(4)` (1-based basis position).
fn basis_alias(name: &str) -> Option<usize> {
    name.strip_prefix('e').and_then(digits_index)
}

/// Resolves a symbol to a basis element: the algebra's own labels take
/// precedence over the positional aliases `e1…em`.
fn constant_symbol(name: &str, algebra: &Algebra) -> Option<AlgebraElement> {
    if let Some(s) = algebra.basis_index(name) {
        return Some(algebra.basis_element(s));
    }
    if let Some(d) = basis_alias(name) {
        if d >= 1 && d <= algebra.dim() {
            return Some(algebra.basis_element(d - 1));
        }
    }
    None
}

/// The variable count implied by the text: the largest `x<d>` or
/// `y<d>_<j>` index mentioned, 0 when no variable appears.
pub fn infer_nvars(text: &str) -> Result<usize> {
    let mut n = 0;
    for l in &lex(text)? {
        if let Tok::Sym(s) = &l.tok {
            if let Some(d) = var_index(s) {
                n = n.max(d);
            }
            if let Some((i, _)) = central_index(s) {
                n = n.max(i);
            }
        }
    }
    Ok(n)
}

/// Parses a free (noncommutative) polynomial in `x1…xn`.
pub fn parse_free(text: &str, algebra: &Algebra, nvars: usize) -> Result<FreePoly> {
    let ast = parse_ast(text)?;
    lower_free(&ast, algebra, nvars)
}

fn lower_free(ast: &Ast, algebra: &Algebra, n: usize) -> Result<FreePoly> {
    Ok(match ast {
        Ast::Rat(r) => FreePoly::scalar(algebra.clone(), n, r.clone()),
        Ast::Sym { name, off } => {
            if let Some(d) = var_index(name) {
                if d == 0 || d > n {
                    return Err(CliError::VariableOutOfRange { name: name.clone(), limit: n });
                }
                FreePoly::variable(algebra.clone(), n, d - 1).expect("index checked")
            } else if let Some(e) = constant_symbol(name, algebra) {
                FreePoly::constant(algebra.clone(), n, &e)
            } else {
                return Err(CliError::UnknownSymbol { offset: *off, name: name.clone() });
            }
        }
        Ast::Neg(a) => -&lower_free(a, algebra, n)?,
        Ast::Add(a, b) => &lower_free(a, algebra, n)? + &lower_free(b, algebra, n)?,
        Ast::Sub(a, b) => &lower_free(a, algebra, n)? - &lower_free(b, algebra, n)?,
        Ast::Mul(a, b) => &lower_free(a, algebra, n)? * &lower_free(b, algebra, n)?,
        Ast::Pow(a, e) => lower_free(a, algebra, n)?.pow(*e),
    })
}

/// Parses a central polynomial in `y1_1…yn_m`.
pub fn parse_central(text: &str, algebra: &Algebra, nvars: usize) -> Result<CentralPoly> {
    let ast = parse_ast(text)?;
    lower_central(&ast, algebra, nvars)
}

fn lower_central(ast: &Ast, algebra: &Algebra, n: usize) -> Result<CentralPoly> {
    Ok(match ast {
        Ast::Rat(r) => {
            CentralPoly::constant(algebra.clone(), n, &algebra.one().scale(r))
        }
        Ast::Sym { name, off } => {
            if let Some((i, j)) = central_index(name) {
                if i == 0 || i > n {
                    return Err(CliError::VariableOutOfRange { name: name.clone(), limit: n });
                }
                if j == 0 || j > algebra.dim() {
                    return Err(CliError::VariableOutOfRange {
                        name: name.clone(),
                        limit: algebra.dim(),
                    });
                }
                CentralPoly::variable(algebra.clone(), n, i - 1, j - 1).expect("indices checked")
            } else if let Some(e) = constant_symbol(name, algebra) {
                CentralPoly::constant(algebra.clone(), n, &e)
            } else {
                return Err(CliError::UnknownSymbol { offset: *off, name: name.clone() });
            }
        }
        Ast::Neg(a) => -&lower_central(a, algebra, n)?,
        Ast::Add(a, b) => &lower_central(a, algebra, n)? + &lower_central(b, algebra, n)?,
        Ast::Sub(a, b) => &lower_central(a, algebra, n)? - &lower_central(b, algebra, n)?,
        Ast::Mul(a, b) => &lower_central(a, algebra, n)? * &lower_central(b, algebra, n)?,
        Ast::Pow(a, e) => lower_central(a, algebra, n)?.pow(*e),
    })
}

/// Parses a variable-free expression to the algebra element it denotes.
pub fn parse_constant(text: &str, algebra: &Algebra) -> Result<AlgebraElement> {
    let p = parse_free(text, algebra, 0)?;
    let at = Point::new(algebra.clone(), vec![]).expect("zero-arity point");
    Ok(p.eval(&at).expect("constant evaluation cannot fail"))
}
