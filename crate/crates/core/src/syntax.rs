//! Recursive-descent parser for scalars and polynomials over `Q(ζ₁₂₀)`.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (('*' | '/' | <juxtaposition>) factor)*
//! factor  := primary ('^' nat)?
//! primary := nat | symbol | var | '(' expr ')'
//! symbol  := 'w' | 'i' | 'e5' | 's2' | 's3' | 's5' | 's15' | 'z120'
//! var     := 'x' | 'y' | 'z' | 't'
//! ```
//!
//! Division is only allowed by nonzero constants, which covers `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cyclofield::{consts, CycNum};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Field;

const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(&'static str),
    Var(usize),
    Op(char),
}

// longest names first so `z120` wins over `z` and `s15` over `s1`
const SYMBOLS: [&str; 8] = ["z120", "s15", "e5", "s2", "s3", "s5", "w", "i"];

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let n: BigInt = src[start..pos].parse().expect("digits");
            out.push((start, Tok::Num(n)));
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            pos += 1;
            continue;
        }
        if let Some(sym) = SYMBOLS.iter().find(|s| src[pos..].starts_with(**s)) {
            out.push((pos, Tok::Sym(sym)));
            pos += sym.len();
            continue;
        }
        if let Some(v) = ['x', 'y', 'z', 't'].iter().position(|&v| v == c) {
            out.push((pos, Tok::Var(v)));
            pos += 1;
            continue;
        }
        return Err(Error::Syntax {
            pos,
            msg: format!("unexpected character `{c}`"),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<CycNum>> {
        let mut negate = false;
        if self.eat_op('-') {
            negate = true;
        } else {
            self.eat_op('+');
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            if self.eat_op('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat_op('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Sym(_)) | Some(Tok::Var(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<Poly<CycNum>> {
        let mut acc = self.factor()?;
        loop {
            if self.eat_op('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat_op('/') {
                let at = self.pos();
                let d = self.factor()?;
                let c = match (d.homogeneous_degree(), d.leading()) {
                    (Some(0), Some((_, c))) => c.clone(),
                    (_, None) => {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "division by zero".into(),
                        })
                    }
                    _ => {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "division by a non-constant".into(),
                        })
                    }
                };
                acc = acc.scale(&c.inv().expect("nonzero"));
            } else if self.starts_factor() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<CycNum>> {
        let base = self.primary()?;
        if self.eat_op('^') {
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return self.err("expected a natural-number exponent"),
            };
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => return self.err(format!("exponent larger than {MAX_EXPONENT}")),
            };
            self.idx += 1;
            // powers of a single constant term stay cheap
            if let (Some(0), Some((_, c)), 1) = (base.homogeneous_degree(), base.leading(), base.len()) {
                return Ok(Poly::constant(c.pow(e as u64)));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly<CycNum>> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.idx += 1;
        match tok {
            Tok::Num(n) => Ok(Poly::constant(CycNum::from_rational(&BigRational::from_integer(n)))),
            Tok::Var(v) => Ok(Poly::var(v)),
            Tok::Sym(s) => Ok(Poly::constant(symbol_value(s))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Tok::Op(c) => {
                self.idx -= 1;
                self.err(format!("unexpected `{c}`"))
            }
        }
    }
}

fn symbol_value(s: &str) -> CycNum {
    match s {
        "w" => consts::omega(),
        "i" => consts::i(),
        "e5" => consts::eps(),
        "s2" => consts::sqrt2(),
        "s3" => consts::sqrt3(),
        "s5" => consts::sqrt5(),
        "s15" => consts::sqrt15(),
        "z120" => CycNum::zeta(1),
        _ => unreachable!("tokenizer only yields known symbols"),
    }
}

/// Parses an arbitrary (not necessarily homogeneous) polynomial.
pub fn parse_poly(src: &str) -> Result<Poly<CycNum>> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        idx: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.idx != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a constant expression such as `3/4*s15 - 2*z120^7`.
pub fn parse_scalar(src: &str) -> Result<CycNum> {
    let p = parse_poly(src)?;
    match p.homogeneous_degree() {
        Some(0) => Ok(p.leading().map(|(_, c)| c.clone()).unwrap_or_else(CycNum::zero)),
        _ => Err(Error::Syntax {
            pos: 0,
            msg: "expected a scalar, found variables".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::consts::*;
    use crate::poly::Monomial;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_scalar("-w^2 - w").unwrap(), int(1));
        assert_eq!(parse_scalar("s5*s5").unwrap(), int(5));
        assert_eq!(parse_scalar("z120^40").unwrap(), omega());
        assert_eq!(parse_scalar("2 s2").unwrap(), int(2) * sqrt2());
        assert_eq!(parse_scalar("(1 + i)/s2").unwrap(), zeta8());
    }

    #[test]
    fn polynomials_with_implicit_products() {
        let p = parse_poly("xy + 2x^2t").unwrap();
        assert_eq!(p.coeff(&Monomial::new(1, 1, 0, 0)), int(1));
        assert_eq!(p.coeff(&Monomial::new(2, 0, 0, 1)), int(2));
        let zed = parse_poly("z120 z").unwrap();
        assert_eq!(zed.coeff(&Monomial::var(2)), CycNum::zeta(1));
    }

    #[test]
    fn errors_report_position() {
        match parse_poly("x + q") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_poly("(x + y") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x/y").is_err());
        assert!(parse_poly("x/0").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn zero_result() {
        assert!(parse_poly("x^2*y - x^2*y").unwrap().is_zero());
        assert!(parse_scalar("0").unwrap().is_zero());
    }
}
