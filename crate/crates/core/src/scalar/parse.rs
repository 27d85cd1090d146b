//! Scalar expression grammar used for parameter entry and serialization.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' signed-integer)?
//! atom   := integer | integer '/' integer | 'q' | 's' | 'i' | '(' expr ')'
//! ```
//!
//! `s` denotes q^(1/2). Whitespace is ignored; an optional leading sign is
//! accepted so that canonical renderings of negative elements round-trip.
//! Rendering writes the power-basis form with each basis power of zeta
//! expressed through q, s and i; parsing the result reproduces the element
//! exactly.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use super::{rational_is_negative, Cyclotomic, QContext, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    SymQ,
    SymS,
    SymI,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

fn tokenize(text: &str) -> Result<Lexer> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    digits.push(chars[i].1);
                    i += 1;
                }
                let value: BigInt = digits.parse().expect("digits form an integer");
                tokens.push((pos, Token::Int(value)));
            }
            'q' => {
                tokens.push((pos, Token::SymQ));
                i += 1;
            }
            's' => {
                tokens.push((pos, Token::SymS));
                i += 1;
            }
            'i' => {
                tokens.push((pos, Token::SymI));
                i += 1;
            }
            '+' => {
                tokens.push((pos, Token::Plus));
                i += 1;
            }
            '-' | '\u{2212}' => {
                tokens.push((pos, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((pos, Token::Star));
                i += 1;
            }
            '/' => {
                tokens.push((pos, Token::Slash));
                i += 1;
            }
            '^' => {
                tokens.push((pos, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                i += 1;
            }
            other => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(Lexer {
        tokens,
        cursor: 0,
        end: text.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn peek_second(&self) -> Option<&Token> {
        self.tokens.get(self.cursor + 1).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<()> {
        if self.peek() == Some(&token) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                position: self.position(),
                message: format!("expected {what}"),
            })
        }
    }
}

/// Evaluate an expression in the session field. Exact; errors carry the
/// byte position of the offending token.
pub fn parse_scalar(text: &str, ctx: &QContext) -> Result<Cyclotomic> {
    let mut lexer = tokenize(text)?;
    let value = parse_expr(&mut lexer, ctx)?;
    if lexer.peek().is_some() {
        return Err(Error::Parse {
            position: lexer.position(),
            message: "trailing input after expression".into(),
        });
    }
    Ok(value)
}

fn parse_expr(lx: &mut Lexer, ctx: &QContext) -> Result<Cyclotomic> {
    let negate_first = match lx.peek() {
        Some(Token::Plus) => {
            lx.next();
            false
        }
        Some(Token::Minus) => {
            lx.next();
            true
        }
        _ => false,
    };
    let mut acc = parse_term(lx, ctx)?;
    if negate_first {
        acc = -&acc;
    }
    loop {
        match lx.peek() {
            Some(Token::Plus) => {
                lx.next();
                let t = parse_term(lx, ctx)?;
                acc = &acc + &t;
            }
            Some(Token::Minus) => {
                lx.next();
                let t = parse_term(lx, ctx)?;
                acc = &acc - &t;
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_term(lx: &mut Lexer, ctx: &QContext) -> Result<Cyclotomic> {
    let mut acc = parse_factor(lx, ctx)?;
    loop {
        match lx.peek() {
            Some(Token::Star) => {
                lx.next();
                let f = parse_factor(lx, ctx)?;
                acc = &acc * &f;
            }
            Some(Token::Slash) => {
                let pos = lx.position();
                lx.next();
                let f = parse_factor(lx, ctx)?;
                acc = acc.div(&f).map_err(|e| at_position(e, pos))?;
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_factor(lx: &mut Lexer, ctx: &QContext) -> Result<Cyclotomic> {
    let base = parse_atom(lx, ctx)?;
    if lx.peek() == Some(&Token::Caret) {
        let pos = lx.position();
        lx.next();
        let exp = parse_signed_integer(lx)?;
        return base.pow(exp).map_err(|e| at_position(e, pos));
    }
    Ok(base)
}

fn parse_signed_integer(lx: &mut Lexer) -> Result<i64> {
    let negative = match lx.peek() {
        Some(Token::Minus) => {
            lx.next();
            true
        }
        Some(Token::Plus) => {
            lx.next();
            false
        }
        _ => false,
    };
    let pos = lx.position();
    match lx.next() {
        Some(Token::Int(n)) => {
            let mag: i64 = n.try_into().map_err(|_| Error::Parse {
                position: pos,
                message: "exponent out of range".into(),
            })?;
            Ok(if negative { -mag } else { mag })
        }
        _ => Err(Error::Parse {
            position: pos,
            message: "expected integer exponent".into(),
        }),
    }
}

fn parse_atom(lx: &mut Lexer, ctx: &QContext) -> Result<Cyclotomic> {
    let pos = lx.position();
    match lx.next() {
        Some(Token::Int(n)) => {
            // An integer immediately divided by an integer is a rational
            // literal; division by anything else is handled at term level.
            if lx.peek() == Some(&Token::Slash) {
                if let Some(Token::Int(_)) = lx.peek_second() {
                    let slash_pos = lx.position();
                    lx.next();
                    let den = match lx.next() {
                        Some(Token::Int(d)) => d,
                        _ => unreachable!("peeked integer"),
                    };
                    if den.is_zero() {
                        return Err(at_position(Error::DivisionByZero, slash_pos));
                    }
                    return Ok(Cyclotomic::from_rational(
                        ctx.conductor(),
                        Rational::new(n, den),
                    ));
                }
            }
            Ok(Cyclotomic::from_rational(
                ctx.conductor(),
                Rational::from_integer(n),
            ))
        }
        Some(Token::SymQ) => Ok(ctx.q().clone()),
        Some(Token::SymS) => Ok(ctx.q_half().clone()),
        Some(Token::SymI) => Ok(ctx.i_unit().clone()),
        Some(Token::LParen) => {
            let inner = parse_expr(lx, ctx)?;
            lx.expect(Token::RParen, "')'")?;
            Ok(inner)
        }
        _ => Err(Error::Parse {
            position: pos,
            message: "expected integer, 'q', 's', 'i' or '('".into(),
        }),
    }
}

fn at_position(err: Error, position: usize) -> Error {
    match err {
        Error::DivisionByZero => Error::Parse {
            position,
            message: "division by zero".into(),
        },
        other => other,
    }
}

/// Deterministic rendering of the power-basis form. Each basis power of
/// zeta_L is written as a monomial in s and i: for even m, zeta = s
/// outright; for odd m (L = 4m), even powers of zeta are powers of s and
/// odd powers carry one factor of i since zeta^j = s^((j-m)/2) i. Even
/// powers of s collapse to powers of q. The output parses back to an equal
/// element.
pub fn render_scalar(x: &Cyclotomic, ctx: &QContext) -> String {
    assert_eq!(x.conductor(), ctx.conductor());
    if x.is_zero() {
        return "0".to_string();
    }
    let l = ctx.conductor() as i64;
    let m = ctx.m() as i64;

    let mut out = String::new();
    let mut first = true;
    for (j, coeff) in x.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let j = j as i64;
        let (s_exp, i_exp) = if l == 2 * m {
            (j, 0)
        } else if j % 2 == 0 {
            (j / 2, 0)
        } else {
            ((j - m).rem_euclid(4 * m) / 2 % (2 * m), 1)
        };
        let c = coeff.clone();
        let negative = rational_is_negative(&c);
        let magnitude = c.abs();

        let mut parts: Vec<String> = Vec::new();
        if s_exp > 0 {
            if s_exp % 2 == 0 {
                let e = s_exp / 2;
                parts.push(if e == 1 { "q".into() } else { format!("q^{e}") });
            } else {
                parts.push(if s_exp == 1 {
                    "s".into()
                } else {
                    format!("s^{s_exp}")
                });
            }
        }
        if i_exp == 1 {
            parts.push("i".into());
        }
        if !magnitude.is_one() || parts.is_empty() {
            parts.insert(0, render_rational(&magnitude));
        }
        let term = parts.join("*");

        if first {
            if negative {
                out.push('-');
            }
            out.push_str(&term);
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    out
}

fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// "num/den" form used by the raw-coefficient serialization.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_string(text: &str) -> Result<Rational> {
    let err = |msg: &str| Error::Parse {
        position: 0,
        message: format!("{msg}: '{text}'"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}
