//! Curve equations of the form `y^2 = <polynomial in x>`.
//!
//! Coefficients may be integers or quotients of them, `*` may be omitted
//! between factors, and `^` takes a nonnegative integer exponent.

use ramloci::curves::HyperellipticModel;
use ramloci::numeric::{Rational, UniPoly};

use crate::error::CliError;

const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::X => "'x'".into(),
        Tok::Y => "'y'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Eq => "'='".into(),
        Tok::End => "end of input".into(),
    }
}

/// Tokens paired with their 1-based column.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        let tok = match c {
            ' ' | '\t' => {
                k += 1;
                continue;
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                let n: Rational = digits
                    .parse()
                    .map_err(|_| CliError::syntax(col, "malformed number"))?;
                out.push((Tok::Num(n), col));
                continue;
            }
            'x' | 'X' => Tok::X,
            'y' | 'Y' => Tok::Y,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Eq,
            other => {
                return Err(CliError::syntax(
                    col,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        out.push((tok, col));
        k += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), CliError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(CliError::syntax(
                self.col(),
                format!(
                    "expected {}, found {}",
                    describe(&want),
                    describe(self.peek())
                ),
            ))
        }
    }

    fn exponent(&mut self) -> Result<u32, CliError> {
        let col = self.col();
        match self.bump() {
            Tok::Num(n) if n.is_integer() => {
                let e = n.to_integer();
                u32::try_from(e)
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or_else(|| {
                        CliError::syntax(col, format!("exponent must be at most {MAX_EXPONENT}"))
                    })
            }
            t => Err(CliError::syntax(
                col,
                format!("expected an integer exponent, found {}", describe(&t)),
            )),
        }
    }

    fn expr(&mut self) -> Result<UniPoly, CliError> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                -self.term()?
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly, CliError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc * self.power()?;
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.col();
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(CliError::syntax(col, "divisor must be a nonzero constant"));
                    }
                    acc = acc.scale(&d.coeff(0).recip());
                }
                Tok::Num(_) | Tok::X | Tok::LParen => acc = acc * self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<UniPoly, CliError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<UniPoly, CliError> {
        let col = self.col();
        match self.bump() {
            Tok::Num(n) => Ok(UniPoly::constant(n)),
            Tok::X => Ok(UniPoly::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Y => Err(CliError::syntax(
                col,
                "y may only appear as y^2 on the left-hand side",
            )),
            t => Err(CliError::syntax(
                col,
                format!("expected a number, 'x' or '(', found {}", describe(&t)),
            )),
        }
    }
}

/// Parses a polynomial in `x` on its own.
pub fn parse_poly(text: &str) -> Result<UniPoly, CliError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let poly = p.expr()?;
    p.expect(Tok::End)?;
    Ok(poly)
}

/// Parses and validates `y^2 = f(x)`.
pub fn parse_curve(text: &str) -> Result<HyperellipticModel, CliError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    p.expect(Tok::Y)?;
    p.expect(Tok::Caret)?;
    let col = p.col();
    match p.bump() {
        Tok::Num(n) if n == Rational::from_integer(2.into()) => {}
        _ => return Err(CliError::syntax(col, "left-hand side must be y^2")),
    }
    p.expect(Tok::Eq)?;
    let f = p.expr()?;
    p.expect(Tok::End)?;
    Ok(HyperellipticModel::new(f)?)
}

/// Rejects models whose branch points are not all rational.
pub fn require_split(model: HyperellipticModel) -> Result<HyperellipticModel, CliError> {
    model.require_split()?;
    Ok(model)
}

/// A rational number such as `3`, `-2` or `1/2`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let p = parse_poly(text).ok()?;
    p.is_constant().then(|| p.coeff(0))
}
