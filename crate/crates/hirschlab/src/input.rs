//! Parser for the text input format:
//!
//! ```text
//! ring QQ[x,y,z,t,w]          # or ring GF(7)[x1,x2,x3]
//! order lex                   # lex | deglex | degrevlex (default degrevlex)
//! gens:
//!   (x+w)*(x-w)+z^2;
//!   (x+t)*(y+2*t)+z*(x+y);
//!   z*t
//! primes:
//!   { z; x+w; x+t }
//!   { z; x-w; y+2*t }
//! weights: 1,1,1,1,4
//! reg: 3
//! hvec: 1,5,9,5,1
//! ```
//!
//! Polynomials are expressions over `+ - * ^` with integer or `a/b`
//! rational literals; multiplication is always explicit; `#` starts a
//! comment; `;` separates polynomials.

use std::sync::Arc;

use num::bigint::BigInt;

use crate::algebra::{CoefficientField, PolyRing, Polynomial, TermOrder};
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone)]
pub struct InputDocument {
    pub ring: Arc<PolyRing>,
    pub order: Option<TermOrder>,
    pub gens: Option<Vec<Polynomial>>,
    pub primes: Option<Vec<Vec<Polynomial>>>,
    pub weights: Option<Vec<u64>>,
    pub reg: Option<u64>,
    pub hvec: Option<Vec<u64>>,
}

impl InputDocument {
    /// The active term order: the document's, unless overridden.
    pub fn effective_order(&self, cli_override: Option<TermOrder>) -> TermOrder {
        cli_override.or(self.order).unwrap_or(TermOrder::DegRevLex)
    }
}

const KEYWORDS: [&str; 7] = ["ring", "order", "gens", "primes", "weights", "reg", "hvec"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let (start_line, start_col) = (line, col);
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Spanned { tok: Tok::Ident(ident), line: start_line, col: start_col });
            }
            c if c.is_ascii_digit() => {
                let (start_line, start_col) = (line, col);
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let n = digits.parse::<BigInt>().expect("digit run parses");
                out.push(Spanned { tok: Tok::Int(n), line: start_line, col: start_col });
            }
            '+' | '-' | '*' | '^' | '/' | '(' | ')' | '[' | ']' | '{' | '}' | ',' | ';' | ':' => {
                out.push(Spanned { tok: Tok::Punct(c), line, col });
                chars.next();
                col += 1;
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    message: format!("unexpected character `{other}`"),
                    expected: vec![],
                })
            }
        }
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn next(&mut self) -> Spanned {
        let t = self.peek().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        let at = self.peek();
        ParseError {
            line: at.line,
            col: at.col,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect_punct(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.peek().tok == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            Err(self.error(
                format!("found {}", self.peek().tok.describe()),
                &[&format!("`{c}`")],
            ))
        }
    }

    fn expect_ident(&mut self) -> std::result::Result<String, ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            other => Err(self.error(format!("found {}", other.describe()), &["identifier"])),
        }
    }

    fn expect_nat(&mut self) -> std::result::Result<u64, ParseError> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let v = u64::try_from(n)
                    .map_err(|_| self.error("integer out of range", &["small integer"]))?;
                self.next();
                Ok(v)
            }
            other => Err(self.error(format!("found {}", other.describe()), &["integer"])),
        }
    }

    fn at_keyword(&self) -> Option<&str> {
        if let Tok::Ident(s) = &self.peek().tok {
            if KEYWORDS.contains(&s.as_str()) {
                return Some(KEYWORDS.iter().find(|k| *k == s).copied().unwrap_or(""));
            }
        }
        None
    }
}

fn parse_ring(p: &mut Parser) -> std::result::Result<Arc<PolyRing>, ParseError> {
    let field_name = p.expect_ident()?;
    let field = match field_name.as_str() {
        "QQ" => CoefficientField::Rationals,
        "GF" => {
            p.expect_punct('(')?;
            let at = p.peek().clone();
            let q = p.expect_nat()?;
            p.expect_punct(')')?;
            CoefficientField::prime_field(q).map_err(|e| ParseError {
                line: at.line,
                col: at.col,
                message: e.to_string(),
                expected: vec![],
            })?
        }
        other => {
            return Err(p.error(format!("unknown field `{other}`"), &["QQ", "GF(p)"]));
        }
    };
    p.expect_punct('[')?;
    let mut names = Vec::new();
    loop {
        let at = p.peek().clone();
        let name = p.expect_ident()?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(ParseError {
                line: at.line,
                col: at.col,
                message: format!("`{name}` is a reserved word and cannot name a variable"),
                expected: vec![],
            });
        }
        names.push(name);
        match &p.peek().tok {
            Tok::Punct(',') => {
                p.next();
            }
            Tok::Punct(']') => {
                p.next();
                break;
            }
            other => {
                return Err(p.error(format!("found {}", other.describe()), &["`,`", "`]`"]));
            }
        }
    }
    PolyRing::new(names, field).map_err(|e| {
        let at = p.peek();
        ParseError { line: at.line, col: at.col, message: e.to_string(), expected: vec![] }
    })
}

/// expr := ["-"] term (("+"|"-") term)*
fn parse_expr(p: &mut Parser, ring: &Arc<PolyRing>) -> std::result::Result<Polynomial, ParseError> {
    let mut acc = if p.peek().tok == Tok::Punct('-') {
        p.next();
        parse_term(p, ring)?.neg()
    } else {
        parse_term(p, ring)?
    };
    loop {
        match &p.peek().tok {
            Tok::Punct('+') => {
                p.next();
                let t = parse_term(p, ring)?;
                acc = acc.add(&t).expect("same ring");
            }
            Tok::Punct('-') => {
                p.next();
                let t = parse_term(p, ring)?;
                acc = acc.sub(&t).expect("same ring");
            }
            _ => return Ok(acc),
        }
    }
}

/// term := factor ("*" factor)*
fn parse_term(p: &mut Parser, ring: &Arc<PolyRing>) -> std::result::Result<Polynomial, ParseError> {
    let mut acc = parse_factor(p, ring)?;
    while p.peek().tok == Tok::Punct('*') {
        p.next();
        let f = parse_factor(p, ring)?;
        acc = acc.mul(&f).expect("same ring");
    }
    Ok(acc)
}

/// factor := atom ["^" nat]
fn parse_factor(
    p: &mut Parser,
    ring: &Arc<PolyRing>,
) -> std::result::Result<Polynomial, ParseError> {
    let base = parse_atom(p, ring)?;
    if p.peek().tok == Tok::Punct('^') {
        p.next();
        let at = p.peek().clone();
        let e = p.expect_nat()?;
        let e = u32::try_from(e).map_err(|_| ParseError {
            line: at.line,
            col: at.col,
            message: "exponent out of range".to_string(),
            expected: vec![],
        })?;
        return Ok(base.pow(e).expect("same ring"));
    }
    Ok(base)
}

/// atom := int ["/" int] | var | "(" expr ")"
fn parse_atom(p: &mut Parser, ring: &Arc<PolyRing>) -> std::result::Result<Polynomial, ParseError> {
    let at = p.peek().clone();
    match &at.tok {
        Tok::Int(n) => {
            let numer = n.clone();
            p.next();
            if p.peek().tok == Tok::Punct('/') {
                p.next();
                let den_at = p.peek().clone();
                let denom = match &den_at.tok {
                    Tok::Int(d) => {
                        let d = d.clone();
                        p.next();
                        d
                    }
                    other => {
                        return Err(p.error(format!("found {}", other.describe()), &["integer"]))
                    }
                };
                let coeff = ring.field().from_ratio(&numer, &denom).map_err(|e| ParseError {
                    line: at.line,
                    col: at.col,
                    message: e.to_string(),
                    expected: vec![],
                })?;
                return Ok(Polynomial::constant(ring, coeff));
            }
            Ok(Polynomial::constant(ring, ring.field().from_bigint(&numer)))
        }
        Tok::Ident(name) => {
            let Some(index) = ring.var_index(name) else {
                return Err(ParseError {
                    line: at.line,
                    col: at.col,
                    message: format!("unknown variable `{name}`"),
                    expected: vec!["declared variable".to_string()],
                });
            };
            p.next();
            Ok(Polynomial::variable(ring, index))
        }
        Tok::Punct('(') => {
            p.next();
            let inner = parse_expr(p, ring)?;
            p.expect_punct(')')?;
            Ok(inner)
        }
        other => Err(p.error(
            format!("found {}", other.describe()),
            &["integer", "variable", "`(`"],
        )),
    }
}

/// Polynomials separated by `;` (trailing `;` allowed) up to the next
/// keyword, `}`, or end of input.
fn parse_poly_list(
    p: &mut Parser,
    ring: &Arc<PolyRing>,
    stop_at_brace: bool,
) -> std::result::Result<Vec<Polynomial>, ParseError> {
    let mut polys = Vec::new();
    loop {
        let done = match &p.peek().tok {
            Tok::Eof => true,
            Tok::Punct('}') if stop_at_brace => true,
            _ => !stop_at_brace && p.at_keyword().is_some() && !polys.is_empty(),
        };
        if done {
            break;
        }
        polys.push(parse_expr(p, ring)?);
        match &p.peek().tok {
            Tok::Punct(';') => {
                p.next();
            }
            Tok::Eof => break,
            Tok::Punct('}') if stop_at_brace => break,
            Tok::Ident(s) if !stop_at_brace && KEYWORDS.contains(&s.as_str()) => break,
            other => {
                return Err(p.error(format!("found {}", other.describe()), &["`;`"]));
            }
        }
    }
    Ok(polys)
}

fn parse_nat_list(p: &mut Parser) -> std::result::Result<Vec<u64>, ParseError> {
    let mut out = vec![p.expect_nat()?];
    while p.peek().tok == Tok::Punct(',') {
        p.next();
        out.push(p.expect_nat()?);
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<InputDocument> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };

    let mut ring: Option<Arc<PolyRing>> = None;
    let mut order: Option<TermOrder> = None;
    let mut gens: Option<Vec<Polynomial>> = None;
    let mut primes: Option<Vec<Vec<Polynomial>>> = None;
    let mut weights: Option<Vec<u64>> = None;
    let mut reg: Option<u64> = None;
    let mut hvec: Option<Vec<u64>> = None;

    while p.peek().tok != Tok::Eof {
        let at = p.peek().clone();
        let Some(keyword) = p.at_keyword().map(str::to_string) else {
            return Err(Error::Parse(p.error(
                format!("found {}", at.tok.describe()),
                &["ring", "order", "gens:", "primes:", "weights:", "reg:", "hvec:"],
            )));
        };
        p.next();
        let require_ring = |ring: &Option<Arc<PolyRing>>| -> std::result::Result<Arc<PolyRing>, ParseError> {
            ring.clone().ok_or(ParseError {
                line: at.line,
                col: at.col,
                message: format!("`{keyword}` before the ring declaration"),
                expected: vec!["ring".to_string()],
            })
        };
        match keyword.as_str() {
            "ring" => {
                if ring.is_some() {
                    return Err(Error::Parse(ParseError {
                        line: at.line,
                        col: at.col,
                        message: "second ring declaration".to_string(),
                        expected: vec![],
                    }));
                }
                ring = Some(parse_ring(&mut p)?);
            }
            "order" => {
                let name = p.expect_ident()?;
                match TermOrder::parse(&name) {
                    Ok(o) => order = Some(o),
                    Err(e) => {
                        return Err(Error::Parse(ParseError {
                            line: at.line,
                            col: at.col,
                            message: e.to_string(),
                            expected: vec!["lex".into(), "deglex".into(), "degrevlex".into()],
                        }));
                    }
                }
            }
            "gens" => {
                let r = require_ring(&ring)?;
                p.expect_punct(':')?;
                let list = parse_poly_list(&mut p, &r, false)?;
                if list.iter().any(Polynomial::is_zero) {
                    return Err(Error::ZeroGenerator);
                }
                if list.is_empty() {
                    return Err(Error::Parse(p.error("empty gens block", &["polynomial"])));
                }
                gens = Some(list);
            }
            "primes" => {
                let r = require_ring(&ring)?;
                p.expect_punct(':')?;
                let mut blocks = Vec::new();
                while p.peek().tok == Tok::Punct('{') {
                    p.next();
                    let list = parse_poly_list(&mut p, &r, true)?;
                    p.expect_punct('}')?;
                    if list.is_empty() || list.iter().any(Polynomial::is_zero) {
                        return Err(Error::Parse(
                            p.error("each prime needs nonzero generators", &["polynomial"]),
                        ));
                    }
                    blocks.push(list);
                }
                if blocks.is_empty() {
                    return Err(Error::Parse(p.error("empty primes block", &["`{`"])));
                }
                primes = Some(blocks);
            }
            "weights" => {
                p.expect_punct(':')?;
                weights = Some(parse_nat_list(&mut p)?);
            }
            "reg" => {
                p.expect_punct(':')?;
                reg = Some(p.expect_nat()?);
            }
            "hvec" => {
                p.expect_punct(':')?;
                hvec = Some(parse_nat_list(&mut p)?);
            }
            _ => unreachable!("keyword list is exhaustive"),
        }
    }

    let ring = ring.ok_or_else(|| {
        Error::Parse(ParseError {
            line: 1,
            col: 1,
            message: "missing ring declaration".to_string(),
            expected: vec!["ring".to_string()],
        })
    })?;
    if gens.is_none() && primes.is_none() {
        return Err(Error::invalid("input document needs a gens: or primes: block"));
    }
    Ok(InputDocument { ring, order, gens, primes, weights, reg, hvec })
}

/// Parses a bare ring declaration such as `QQ[x,y,z]` or `GF(7)[x1,x2]`.
pub fn parse_ring_declaration(text: &str) -> Result<Arc<PolyRing>> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let ring = parse_ring(&mut p)?;
    if p.peek().tok != Tok::Eof {
        return Err(Error::Parse(p.error(
            format!("found {}", p.peek().tok.describe()),
            &["end of input"],
        )));
    }
    Ok(ring)
}

/// Parses one polynomial in an existing ring (used by the bindings).
pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let poly = parse_expr(&mut p, ring)?;
    if p.peek().tok != Tok::Eof {
        return Err(Error::Parse(p.error(
            format!("found {}", p.peek().tok.describe()),
            &["end of input"],
        )));
    }
    Ok(poly)
}
