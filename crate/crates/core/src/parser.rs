//! Expression grammar for algebra elements and the canonical printer.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)*
//! atom   := integer ['/' integer] | 't' | generator | '(' expr ')'
//! ```
//!
//! Products are noncommutative and kept in written order; reordering happens
//! only in [`eval`], through the commutation rules. Whitespace is ignored.
//!
//! The printer emits terms in canonical monomial order, one term per
//! monomial, scalar first: `-1/3*t*y1^2*y3`. Coefficients with several
//! t-powers are parenthesised: `(1 - t)*y1`.

use num_bigint::BigInt;

use crate::element::{Element, Monomial};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::presentation::{Presentation, CENTRAL_VAR};
use crate::scalar::{BaseCoeff, BaseRingKind, Rational};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<(Sign, ExprAst)>),
    Product(Vec<ExprAst>),
    Power(Box<ExprAst>, u32),
    /// Generator by index in the target presentation.
    Generator(usize),
    ScalarLiteral(Rational),
    CentralVar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(src[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    p: &'a Presentation,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Tok::Minus => {
                self.bump();
                Sign::Minus
            }
            Tok::Plus => {
                self.bump();
                Sign::Plus
            }
            _ => Sign::Plus,
        };
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek() {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
        }
        if terms.len() == 1 && terms[0].0 == Sign::Plus {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(ExprAst::Sum(terms))
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => factors.push(self.factor()?),
                _ => break,
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(ExprAst::Product(factors))
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let at = self.offset();
            let exp = match self.bump().0 {
                Tok::Int(n) => n,
                _ => {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "expected a natural number exponent".into(),
                    })
                }
            };
            let exp: u32 = match u32::try_from(&exp) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: format!("exponent exceeds the maximum of {MAX_EXPONENT}"),
                    })
                }
            };
            base = ExprAst::Power(Box::new(base), exp);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(ExprAst::ScalarLiteral(Rational::from(n)));
                }
                self.bump();
                let den_at = self.offset();
                match self.bump().0 {
                    Tok::Int(d) if d != BigInt::from(0) => Ok(ExprAst::ScalarLiteral(
                        &Rational::from(n) * &Rational::from(d).recip().expect("nonzero"),
                    )),
                    Tok::Int(_) => Err(Error::Syntax {
                        pos: den_at,
                        msg: "zero denominator".into(),
                    }),
                    _ => Err(Error::Syntax {
                        pos: den_at,
                        msg: "expected an integer denominator".into(),
                    }),
                }
            }
            Tok::Ident(name) if name == CENTRAL_VAR => match self.p.base() {
                BaseRingKind::Field => Err(Error::Syntax {
                    pos: at,
                    msg: "the central variable t is not available over a field".into(),
                }),
                BaseRingKind::CentralSeries(_) => Ok(ExprAst::CentralVar),
            },
            Tok::Ident(name) => match self.p.index_of(&name) {
                Some(i) => Ok(ExprAst::Generator(i)),
                None => Err(Error::UnknownGenerator { name, pos: at }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
            other => Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected token {other:?}"),
            }),
        }
    }
}

/// Parse `src` against the generator names of `p`.
pub fn parse(src: &str, p: &Presentation) -> Result<ExprAst> {
    let mut parser = Parser {
        toks: lex(src)?,
        pos: 0,
        p,
    };
    let ast = parser.expr()?;
    if *parser.peek() != Tok::End {
        return parser.error("unexpected trailing input");
    }
    Ok(ast)
}

/// Evaluate to normal form by folding products through the commutation rules.
pub fn eval(ast: &ExprAst, p: &Presentation) -> Result<Element> {
    Ok(match ast {
        ExprAst::Sum(terms) => {
            let mut acc = p.zero();
            for (sign, t) in terms {
                let v = eval(t, p)?;
                acc = match sign {
                    Sign::Plus => acc.try_add(&v)?,
                    Sign::Minus => acc.try_sub(&v)?,
                };
            }
            acc
        }
        ExprAst::Product(factors) => {
            let mut acc = p.one();
            for f in factors {
                acc = p.mul_elements(&acc, &eval(f, p)?, Exec::Sequential, None);
            }
            acc
        }
        ExprAst::Power(base, exp) => {
            let b = eval(base, p)?;
            let mut acc = p.one();
            for _ in 0..*exp {
                acc = p.mul_elements(&acc, &b, Exec::Sequential, None);
            }
            acc
        }
        ExprAst::Generator(i) => p.generator(*i),
        ExprAst::ScalarLiteral(r) => p.scalar(r.clone()),
        ExprAst::CentralVar => p.constant(BaseCoeff::t(p.base())?),
    })
}

/// `eval(parse(src))`.
pub fn parse_element(src: &str, p: &Presentation) -> Result<Element> {
    eval(&parse(src, p)?, p)
}

/// Parse a base-ring coefficient such as `3/2` or `1 - t^2`.
pub fn parse_coeff(src: &str, p: &Presentation) -> Result<BaseCoeff> {
    let e = parse_element(src, p)?;
    match e.max_generator() {
        None => Ok(e.constant_term()),
        Some(g) => Err(Error::Syntax {
            pos: 0,
            msg: format!("expected a coefficient, found generator {}", p.name(g)),
        }),
    }
}

fn monomial_factors(m: &Monomial, p: &Presentation) -> Vec<String> {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| {
            if e == 1 {
                p.name(g).to_string()
            } else {
                format!("{}^{e}", p.name(g))
            }
        })
        .collect()
}

/// Print one term; returns (is_negative, magnitude text).
fn print_term(c: &BaseCoeff, m: &Monomial, p: &Presentation) -> (bool, String) {
    let mut factors = monomial_factors(m, p);
    let (neg, lead) = if c.term_count() == 1 {
        let (e, r) = c.terms().next().expect("one term");
        let mag = r.abs();
        let mut lead = Vec::new();
        if !mag.is_one() || (e == 0 && factors.is_empty()) {
            lead.push(mag.to_string());
        }
        match e {
            0 => {}
            1 => lead.push("t".into()),
            e => lead.push(format!("t^{e}")),
        }
        (r.is_negative(), lead)
    } else {
        (false, vec![format!("({})", c.to_expr())])
    };
    let mut all = lead;
    all.append(&mut factors);
    (neg, all.join("*"))
}

/// Canonical text of an element.
pub fn print(a: &Element, p: &Presentation) -> String {
    let mut terms: Vec<(u32, &Monomial, &BaseCoeff)> = a
        .terms()
        .map(|(m, c)| (c.val().finite().unwrap_or(0) + m.total_degree(), m, c))
        .collect();
    terms.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(y.1)));
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (_, m, c)) in terms.into_iter().enumerate() {
        let (neg, body) = print_term(c, m, p);
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quantum_plane() -> Presentation {
        Presentation::builder(BaseRingKind::Field, vec!["y11".into(), "y22".into()])
            .tau(1, 0, Rational::from(2))
            .build()
            .unwrap()
    }

    fn over_t() -> Presentation {
        Presentation::builder(BaseRingKind::CentralSeries(4), vec!["x".into(), "y".into()])
            .delta_expr(1, 0, "t*x^2")
            .build()
            .unwrap()
    }

    #[test]
    fn parses_written_order() {
        let p = quantum_plane();
        assert_eq!(
            parse("y22*y11", &p).unwrap(),
            ExprAst::Product(vec![ExprAst::Generator(1), ExprAst::Generator(0)])
        );
        assert_eq!(
            parse("(1 - y11)^3", &p).unwrap(),
            ExprAst::Power(
                Box::new(ExprAst::Sum(vec![
                    (Sign::Plus, ExprAst::ScalarLiteral(Rational::one())),
                    (Sign::Minus, ExprAst::Generator(0)),
                ])),
                3
            )
        );
        assert_eq!(parse("y22 y11", &p), parse("y22*y11", &p));
    }

    #[test]
    fn reports_errors_with_positions() {
        let p = quantum_plane();
        assert_eq!(
            parse("y11 + y99", &p),
            Err(Error::UnknownGenerator { name: "y99".into(), pos: 6 })
        );
        assert!(matches!(parse("y11 +", &p), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse("(y11", &p), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("y11 ? 2", &p), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("1/0", &p), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("y11^999", &p), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("t", &p), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("y11)", &p), Err(Error::Syntax { pos: 3, .. })));
    }

    #[test]
    fn evaluates_through_commutation() {
        let p = quantum_plane();
        assert_eq!(print(&parse_element("y22*y11", &p).unwrap(), &p), "2*y11*y22");
        assert_eq!(print(&parse_element("2*(1/2)", &p).unwrap(), &p), "1");
        assert_eq!(print(&parse_element("y11 - y11", &p).unwrap(), &p), "0");
        assert_eq!(print(&parse_element("y11 2", &p).unwrap(), &p), "2*y11");
        assert_eq!(
            print(&parse_element("-(1 - y11)^2", &p).unwrap(), &p),
            "-1 + 2*y11 - y11^2"
        );
    }

    #[test]
    fn prints_central_coefficients() {
        let p = over_t();
        let a = parse_element("(1 - t)*y + 3*t^2*x - t", &p).unwrap();
        let s = print(&a, &p);
        assert_eq!(s, "-t + (1 - t)*y + 3*t^2*x");
        assert_eq!(parse_element(&s, &p).unwrap(), a);
        assert_eq!(print(&parse_element("y x", &p).unwrap(), &p), "x*y + t*x^2");
        assert_eq!(parse_coeff("1 - t^2", &p).unwrap().to_expr(), "1 - t^2");
        assert!(parse_coeff("x", &p).is_err());
    }
}
