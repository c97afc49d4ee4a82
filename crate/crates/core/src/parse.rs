//! Text format for tropical polynomials.
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' sint)?
//! base   := number | '(' number '/' number ')' | '(' poly ')' | variable
//! number := sint | sint '.' digits
//! ```
//!
//! `+` is `⊕`, `*` (or juxtaposition) is `⊙`, and `^k` is the `k`-th tropical
//! power. Numbers carry their sign, so `(-2)x^2` and `x^-1` need no unary
//! minus. The whole input `-inf` is the polynomial `-inf`. A variable is one
//! ASCII letter optionally followed by digits, so `xy^2` reads as `x ⊙ y^2`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::tropical::{Exponent, Rational, TropPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Variable,
    Plus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    MinusInf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {offset}")]
    Lex { offset: usize, found: char },
    #[error("expected {expected} at byte {position}, found {found}")]
    Unexpected {
        position: usize,
        expected: &'static str,
        found: String,
    },
    #[error("undeclared variable {name:?} at byte {position}")]
    UndeclaredVariable { position: usize, name: String },
    #[error("invalid number {lexeme:?} at byte {position}")]
    InvalidNumber { position: usize, lexeme: String },
    #[error("negative power of a non-monomial at byte {position}")]
    NegativePower { position: usize },
    #[error("-inf is only allowed as the whole polynomial (byte {position})")]
    MisplacedNegInf { position: usize },
    #[error("invalid variable list: {reason}")]
    BadVariables { position: usize, reason: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Lex { offset, .. } => *offset,
            ParseError::Unexpected { position, .. }
            | ParseError::UndeclaredVariable { position, .. }
            | ParseError::InvalidNumber { position, .. }
            | ParseError::NegativePower { position }
            | ParseError::MisplacedNegInf { position }
            | ParseError::BadVariables { position, .. } => *position,
        }
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    let push = |tokens: &mut Vec<Token>, kind, start: usize, end: usize| {
        tokens.push(Token {
            kind,
            lexeme: src[start..end].to_string(),
            position: start,
        });
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                i += 1;
                push(&mut tokens, TokenKind::Plus, start, i);
            }
            b'*' => {
                i += 1;
                push(&mut tokens, TokenKind::Star, start, i);
            }
            b'^' => {
                i += 1;
                push(&mut tokens, TokenKind::Caret, start, i);
            }
            b'/' => {
                i += 1;
                push(&mut tokens, TokenKind::Slash, start, i);
            }
            b'(' => {
                i += 1;
                push(&mut tokens, TokenKind::LParen, start, i);
            }
            b')' => {
                i += 1;
                push(&mut tokens, TokenKind::RParen, start, i);
            }
            b'-' if src[i + 1..].starts_with("inf") => {
                i += 4;
                push(&mut tokens, TokenKind::MinusInf, start, i);
            }
            b'-' | b'0'..=b'9' => {
                if c == b'-' {
                    i += 1;
                    while bytes.get(i).is_some_and(|b| *b == b' ' || *b == b'\t') {
                        i += 1;
                    }
                    if !bytes.get(i).is_some_and(u8::is_ascii_digit) {
                        return Err(ParseError::Lex {
                            offset: start,
                            found: '-',
                        });
                    }
                }
                while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                }
                if bytes.get(i) == Some(&b'.') && bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                    while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                        i += 1;
                    }
                }
                push(&mut tokens, TokenKind::Number, start, i);
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                i += 1;
                while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                }
                push(&mut tokens, TokenKind::Variable, start, i);
            }
            _ => {
                let found = src[i..].chars().next().expect("in bounds");
                return Err(ParseError::Lex {
                    offset: start,
                    found,
                });
            }
        }
    }
    Ok(tokens)
}

/// `x`, `x,y`, `x,y,z`, then `x1..xn`.
pub fn default_vars(arity: usize) -> Vec<String> {
    match arity {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        n => (1..=n).map(|k| format!("x{k}")).collect(),
    }
}

/// Smallest default variable list covering every variable used in `sources`.
pub fn infer_vars<'a>(
    sources: impl IntoIterator<Item = &'a str>,
) -> Result<Vec<String>, ParseError> {
    let mut arity = 1;
    for src in sources {
        for t in tokenize(src)? {
            if t.kind == TokenKind::Variable {
                let needed = match t.lexeme.as_str() {
                    "x" => 1,
                    "y" => 2,
                    "z" => 3,
                    _ => {
                        return Err(ParseError::UndeclaredVariable {
                            position: t.position,
                            name: t.lexeme,
                        })
                    }
                };
                arity = arity.max(needed);
            }
        }
    }
    Ok(default_vars(arity))
}

fn parse_number(tok: &Token) -> Result<Rational, ParseError> {
    let bad = || ParseError::InvalidNumber {
        position: tok.position,
        lexeme: tok.lexeme.clone(),
    };
    let (int_part, frac) = match tok.lexeme.split_once('.') {
        Some((a, b)) => (a, b),
        None => (tok.lexeme.as_str(), ""),
    };
    let digits: String = format!("{int_part}{frac}")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let d = BigInt::from(10).pow(frac.len() as u32);
    Ok(Rational::new(n, d))
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.position)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), |t| format!("{:?}", t.lexeme));
        ParseError::Unexpected {
            position: self.here(),
            expected,
            found,
        }
    }

    fn eat(&mut self, kind: TokenKind) -> Option<Token> {
        if self.peek().is_some_and(|t| t.kind == kind) {
            self.pos += 1;
            Some(self.tokens[self.pos - 1].clone())
        } else {
            None
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &'static str) -> Result<Token, ParseError> {
        self.eat(kind).ok_or_else(|| self.unexpected(what))
    }

    fn poly(&mut self) -> Result<TropPoly, ParseError> {
        let mut acc = self.term()?;
        while self.eat(TokenKind::Plus).is_some() {
            let t = self.term()?;
            acc = acc.trop_add(&t).expect("same arity");
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        self.peek().is_some_and(|t| {
            matches!(
                t.kind,
                TokenKind::Number | TokenKind::Variable | TokenKind::LParen
            )
        })
    }

    fn term(&mut self) -> Result<TropPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(TokenKind::Star).is_some() || self.starts_factor() {
                let f = self.factor()?;
                acc = acc.trop_mul(&f).expect("same arity");
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<TropPoly, ParseError> {
        let base = self.base()?;
        if self.eat(TokenKind::Caret).is_none() {
            return Ok(base);
        }
        let tok = self.expect(TokenKind::Number, "an integer exponent")?;
        let k = parse_number(&tok)?;
        if !k.is_integer() {
            return Err(ParseError::InvalidNumber {
                position: tok.position,
                lexeme: tok.lexeme,
            });
        }
        let k: i64 = i64::try_from(k.to_integer()).map_err(|_| ParseError::InvalidNumber {
            position: tok.position,
            lexeme: tok.lexeme.clone(),
        })?;
        if k >= 0 {
            let k = u32::try_from(k).map_err(|_| ParseError::InvalidNumber {
                position: tok.position,
                lexeme: tok.lexeme,
            })?;
            Ok(base.trop_pow(k))
        } else {
            if !base.is_unit() {
                return Err(ParseError::NegativePower {
                    position: tok.position,
                });
            }
            let (e, c) = base.terms().next().expect("unit");
            Ok(TropPoly::monomial(
                c * Rational::from_integer(k.into()),
                e.scale(k),
            ))
        }
    }

    fn base(&mut self) -> Result<TropPoly, ParseError> {
        let arity = self.vars.len();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected("a coefficient, variable or '('"));
        };
        match tok.kind {
            TokenKind::Number => {
                self.pos += 1;
                Ok(TropPoly::constant(arity, parse_number(&tok)?))
            }
            TokenKind::Variable => {
                self.pos += 1;
                let idx = self.vars.iter().position(|v| *v == tok.lexeme).ok_or(
                    ParseError::UndeclaredVariable {
                        position: tok.position,
                        name: tok.lexeme.clone(),
                    },
                )?;
                let mut e = vec![0; arity];
                e[idx] = 1;
                Ok(TropPoly::monomial(Rational::zero(), Exponent(e)))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let is_fraction = self
                    .tokens
                    .get(self.pos)
                    .is_some_and(|t| t.kind == TokenKind::Number)
                    && self
                        .tokens
                        .get(self.pos + 1)
                        .is_some_and(|t| t.kind == TokenKind::Slash);
                let inner = if is_fraction {
                    let n = parse_number(&self.expect(TokenKind::Number, "a number")?)?;
                    self.expect(TokenKind::Slash, "'/'")?;
                    let dtok = self.expect(TokenKind::Number, "a denominator")?;
                    let d = parse_number(&dtok)?;
                    if d.is_zero() {
                        return Err(ParseError::InvalidNumber {
                            position: dtok.position,
                            lexeme: dtok.lexeme,
                        });
                    }
                    TropPoly::constant(arity, n / d)
                } else {
                    self.poly()?
                };
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            TokenKind::MinusInf => Err(ParseError::MisplacedNegInf {
                position: tok.position,
            }),
            _ => Err(self.unexpected("a coefficient, variable or '('")),
        }
    }
}

fn check_vars(vars: &[String]) -> Result<(), ParseError> {
    if vars.is_empty() {
        return Err(ParseError::BadVariables {
            position: 0,
            reason: "no variables declared".into(),
        });
    }
    for (i, v) in vars.iter().enumerate() {
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_digit());
        if !ok {
            return Err(ParseError::BadVariables {
                position: 0,
                reason: format!("{v:?} is not a variable name"),
            });
        }
        if vars[..i].contains(v) {
            return Err(ParseError::BadVariables {
                position: 0,
                reason: format!("{v:?} declared twice"),
            });
        }
    }
    Ok(())
}

/// Parses `src` as a polynomial in the ordered variables `vars`.
pub fn parse_poly<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<TropPoly, ParseError> {
    let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    check_vars(&vars)?;
    let tokens = tokenize(src)?;
    if tokens.len() == 1 && tokens[0].kind == TokenKind::MinusInf {
        return Ok(TropPoly::neg_inf(vars.len()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: src.len(),
        vars: &vars,
    };
    let poly = p.poly()?;
    if p.peek().is_some() {
        return Err(p.unexpected("'+' or end of input"));
    }
    Ok(poly)
}

fn format_coeff(c: &Rational) -> String {
    match (c.is_integer(), c.is_negative()) {
        (true, false) => c.to_string(),
        _ => format!("({c})"),
    }
}

/// Deterministic text form with default variable names.
pub fn format_poly(f: &TropPoly) -> String {
    format_poly_with(f, &default_vars(f.arity()))
}

/// Terms in descending lexicographic exponent order, joined by ` + `.
pub fn format_poly_with<S: AsRef<str>>(f: &TropPoly, vars: &[S]) -> String {
    if f.is_neg_inf() {
        return "-inf".to_string();
    }
    let terms: Vec<String> = f
        .terms()
        .rev()
        .map(|(e, c)| {
            let mut s = String::new();
            let has_vars = e.0.iter().any(|&k| k != 0);
            if !has_vars || !c.is_zero() {
                s.push_str(&format_coeff(c));
            }
            for (k, v) in e.0.iter().zip(vars) {
                match *k {
                    0 => {}
                    1 => s.push_str(v.as_ref()),
                    k => s.push_str(&format!("{}^{k}", v.as_ref())),
                }
            }
            s
        })
        .collect();
    terms.join(" + ")
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        v.to_string()
    }
}

/// Parses `p`, `-p`, `p/q` or a decimal as an exact rational.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let s = src.trim();
    let offset = src.len() - src.trim_start().len();
    let bad = || ParseError::InvalidNumber {
        position: offset,
        lexeme: s.to_string(),
    };
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let toks = tokenize(s).map_err(|_| bad())?;
    match toks.as_slice() {
        [t] if t.kind == TokenKind::Number => parse_number(t),
        _ => Err(bad()),
    }
}
