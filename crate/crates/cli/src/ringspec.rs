//! The ring-spec text format and the module-spec mini-language.
//!
//! Grammar (whitespace insignificant, identifiers `[a-zA-Z][a-zA-Z0-9_]*`):
//!
//! ```text
//! ring "{" "field:" ("Q" | "F" int) ";" "vars:" ident ("," ident)* ";"
//!      "ideal:" poly ("," poly)* "}"
//! poly   := term (("+"|"-") term)*
//! term   := [int "*"] factor ("*" factor)*
//! factor := ident ["^" int] | int
//! ```
//!
//! Module specs: `canonical | k | cyclic(p1,...,pn) | ideal(p1,...,pn) |
//! coker([[p,...],...])`.

use std::fmt;

use cangrow_core::poly::{Monomial, MonomialOrder, Polynomial, MAX_EXPONENT, MAX_VARS};
use cangrow_core::scalar::{Field, FieldSpec};

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Field-independent polynomial: integer coefficients on monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyAst {
    pub terms: Vec<(i64, Vec<u16>)>,
}

impl PolyAst {
    pub fn to_polynomial<K: Field>(&self, order: MonomialOrder) -> Polynomial<K> {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.clone()), K::from_int(*c)))
                .collect(),
            order,
        )
    }
}

/// Parsed ring file.
#[derive(Debug, Clone)]
pub struct RingAst {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub ideal: Vec<PolyAst>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Semi,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            toks.push((Tok::Ident(s), tl, tc));
            continue;
        }
        if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while let Some(&c) = chars.peek() {
                if let Some(d) = c.to_digit(10) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or(ParseError {
                            line: tl,
                            col: tc,
                            message: "integer literal too large".into(),
                        })?;
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            toks.push((Tok::Int(v), tl, tc));
            continue;
        }
        let t = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            other => {
                return Err(ParseError {
                    line: tl,
                    col: tc,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        bump(&mut chars);
        toks.push((t, tl, tc));
    }
    Ok(Lexer { toks, pos: 0, end: (line, col) })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|&(_, l, c)| (l, c)).unwrap_or(self.end)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError { line, col, message: message.into() }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected `{kw}`"))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }
}

pub fn parse_ring_text(text: &str) -> Result<RingAst, ParseError> {
    let mut lx = lex(text)?;
    lx.expect_keyword("ring")?;
    lx.expect(Tok::LBrace, "`{`")?;
    lx.expect_keyword("field")?;
    lx.expect(Tok::Colon, "`:`")?;
    let field = parse_field(&mut lx)?;
    lx.expect(Tok::Semi, "`;`")?;
    lx.expect_keyword("vars")?;
    lx.expect(Tok::Colon, "`:`")?;
    let mut vars = vec![lx.expect_ident("variable name")?];
    while lx.peek() == Some(&Tok::Comma) {
        lx.next();
        vars.push(lx.expect_ident("variable name")?);
    }
    if vars.len() > MAX_VARS {
        return Err(lx.err(format!("at most {MAX_VARS} variables supported")));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(lx.err(format!("duplicate variable `{v}`")));
        }
    }
    lx.expect(Tok::Semi, "`;`")?;
    lx.expect_keyword("ideal")?;
    lx.expect(Tok::Colon, "`:`")?;
    let mut ideal = vec![parse_poly(&mut lx, &vars)?];
    while lx.peek() == Some(&Tok::Comma) {
        lx.next();
        ideal.push(parse_poly(&mut lx, &vars)?);
    }
    lx.expect(Tok::RBrace, "`}`")?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after `}`"));
    }
    Ok(RingAst { field, vars, ideal })
}

fn parse_field(lx: &mut Lexer) -> Result<FieldSpec, ParseError> {
    let name = lx.expect_ident("field (`Q` or `F` followed by a prime)")?;
    if name == "Q" {
        return Ok(FieldSpec::Rational);
    }
    let text = if name == "F" {
        let p = lx.expect_int("prime after `F`")?;
        format!("F{p}")
    } else {
        name
    };
    FieldSpec::parse(&text).ok_or_else(|| lx.err(format!("`{text}` is not a valid field (expected Q or F<prime>)")))
}

fn parse_poly(lx: &mut Lexer, vars: &[String]) -> Result<PolyAst, ParseError> {
    let mut terms = vec![parse_term(lx, vars, 1)?];
    loop {
        let sign = match lx.peek() {
            Some(Tok::Plus) => 1,
            Some(Tok::Minus) => -1,
            _ => break,
        };
        lx.next();
        terms.push(parse_term(lx, vars, sign)?);
    }
    Ok(PolyAst { terms })
}

fn parse_term(lx: &mut Lexer, vars: &[String], sign: i64) -> Result<(i64, Vec<u16>), ParseError> {
    let mut coeff: i64 = sign;
    let mut exps = vec![0u16; vars.len()];
    let mut first = true;
    loop {
        match lx.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                lx.next();
                let v: i64 = v.try_into().map_err(|_| lx.err("coefficient too large"))?;
                coeff = coeff.checked_mul(v).ok_or_else(|| lx.err("coefficient overflow"))?;
            }
            Some(Tok::Ident(_)) => {
                let name = lx.expect_ident("variable")?;
                let Some(idx) = vars.iter().position(|v| *v == name) else {
                    return Err(lx.err(format!("unknown variable `{name}`")));
                };
                let exp: u16 = if lx.peek() == Some(&Tok::Caret) {
                    lx.next();
                    let e = lx.expect_int("exponent")?;
                    e.try_into().map_err(|_| lx.err("exponent too large"))?
                } else {
                    1
                };
                let total = exps[idx] as u32 + exp as u32;
                if total > MAX_EXPONENT as u32 {
                    return Err(lx.err(format!("exponent above the cap {MAX_EXPONENT}")));
                }
                exps[idx] = total as u16;
            }
            _ if first => return Err(lx.err("expected a term")),
            _ => unreachable!(),
        }
        first = false;
        if lx.peek() == Some(&Tok::Star) {
            lx.next();
            match lx.peek() {
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) => continue,
                _ => return Err(lx.err("expected a factor after `*`")),
            }
        }
        break;
    }
    Ok((coeff, exps))
}

/// Canonical text rendering; `parse(print(spec))` reproduces the algebra.
pub fn render_ring(field: &FieldSpec, vars: &[String], ideal: &[String]) -> String {
    format!("ring {{ field: {field}; vars: {}; ideal: {} }}", vars.join(","), ideal.join(", "))
}

/// Grammar-safe rendering of a polynomial with coefficients shown as
/// integers; a generator with a negative leading coefficient is negated
/// (same ideal).
pub fn render_poly_spec<K: Field>(p: &Polynomial<K>, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let texts: Vec<(bool, String)> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let cs = format!("{c}");
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let body = if m.is_one() {
                mag
            } else if mag == "1" {
                m.render(vars)
            } else {
                format!("{mag}*{}", m.render(vars))
            };
            (neg, body)
        })
        .collect();
    let flip = texts[0].0;
    let mut out = String::new();
    for (i, (neg, body)) in texts.iter().enumerate() {
        let neg = neg ^ flip;
        if i == 0 {
            out.push_str(body);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(body);
        }
    }
    out
}

/// Module-spec mini-language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    Canonical,
    ResidueField,
    Cyclic(Vec<PolyAst>),
    Ideal(Vec<PolyAst>),
    Coker(Vec<Vec<PolyAst>>),
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Canonical => write!(f, "canonical"),
            ModuleSpec::ResidueField => write!(f, "k"),
            ModuleSpec::Cyclic(_) => write!(f, "cyclic(...)"),
            ModuleSpec::Ideal(_) => write!(f, "ideal(...)"),
            ModuleSpec::Coker(_) => write!(f, "coker(...)"),
        }
    }
}

pub fn parse_module_spec(text: &str, vars: &[String]) -> Result<ModuleSpec, ParseError> {
    let mut lx = lex(text)?;
    let head = lx.expect_ident("module spec")?;
    let spec = match head.as_str() {
        "canonical" => ModuleSpec::Canonical,
        "k" => ModuleSpec::ResidueField,
        "cyclic" | "ideal" => {
            lx.expect(Tok::LParen, "`(`")?;
            let mut polys = vec![parse_poly(&mut lx, vars)?];
            while lx.peek() == Some(&Tok::Comma) {
                lx.next();
                polys.push(parse_poly(&mut lx, vars)?);
            }
            lx.expect(Tok::RParen, "`)`")?;
            if head == "cyclic" {
                ModuleSpec::Cyclic(polys)
            } else {
                ModuleSpec::Ideal(polys)
            }
        }
        "coker" => {
            lx.expect(Tok::LParen, "`(`")?;
            lx.expect(Tok::LBracket, "`[`")?;
            let mut rows = Vec::new();
            loop {
                lx.expect(Tok::LBracket, "`[`")?;
                let mut row = vec![parse_poly(&mut lx, vars)?];
                while lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                    row.push(parse_poly(&mut lx, vars)?);
                }
                lx.expect(Tok::RBracket, "`]`")?;
                rows.push(row);
                if lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                    continue;
                }
                break;
            }
            lx.expect(Tok::RBracket, "`]`")?;
            lx.expect(Tok::RParen, "`)`")?;
            let width = rows[0].len();
            if rows.iter().any(|r| r.len() != width) {
                return Err(lx.err("ragged coker matrix"));
            }
            ModuleSpec::Coker(rows)
        }
        other => {
            return Err(lx.err(format!(
                "unknown module spec `{other}` (expected canonical | k | cyclic | ideal | coker)"
            )))
        }
    };
    if lx.peek().is_some() {
        return Err(lx.err("trailing input in module spec"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_ring() {
        let r = parse_ring_text(
            "ring { field: F32003; vars: x,y,z; ideal: x^2, x*y, y^2, z^2 }",
        )
        .unwrap();
        assert_eq!(r.field, FieldSpec::Prime(32003));
        assert_eq!(r.vars, vec!["x", "y", "z"]);
        assert_eq!(r.ideal.len(), 4);
        assert_eq!(r.ideal[0].terms, vec![(1, vec![2, 0, 0])]);
    }

    #[test]
    fn parses_rational_and_spaced_field() {
        let r = parse_ring_text("ring { field: Q; vars: x; ideal: x^3 }").unwrap();
        assert_eq!(r.field, FieldSpec::Rational);
        let r = parse_ring_text("ring{field:F 7;vars:t;ideal:t^2}").unwrap();
        assert_eq!(r.field, FieldSpec::Prime(7));
    }

    #[test]
    fn parses_binomials_and_coefficients() {
        let r = parse_ring_text(
            "ring { field: F32003; vars: a,b,c; ideal: a*c - b^2, b*c - a^4, c^2 - a^3*b, 2*a*b }",
        )
        .unwrap();
        assert_eq!(r.ideal[0].terms, vec![(1, vec![1, 0, 1]), (-1, vec![0, 2, 0])]);
        assert_eq!(r.ideal[3].terms, vec![(2, vec![1, 1, 0])]);
    }

    #[test]
    fn rejects_bad_input_with_position() {
        let e = parse_ring_text("ring { field: F4; vars: x; ideal: x }").unwrap_err();
        assert!(e.message.contains("not a valid field"));
        let e = parse_ring_text("ring { field: Q; vars: x; ideal: y }").unwrap_err();
        assert!(e.message.contains("unknown variable"));
        assert_eq!(e.line, 1);
        let e = parse_ring_text("ring { field: Q; vars: x; ideal: }").unwrap_err();
        assert!(e.message.contains("expected a term"));
        assert!(parse_ring_text("ring { field: Q; vars: x,x; ideal: x }").is_err());
        assert!(parse_ring_text("ring { field: Q; vars: x; ideal: x } extra").is_err());
    }

    #[test]
    fn module_specs() {
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        assert_eq!(parse_module_spec("canonical", &vars).unwrap(), ModuleSpec::Canonical);
        assert_eq!(parse_module_spec("k", &vars).unwrap(), ModuleSpec::ResidueField);
        match parse_module_spec("ideal(x, x*y)", &vars).unwrap() {
            ModuleSpec::Ideal(p) => assert_eq!(p.len(), 2),
            other => panic!("{other:?}"),
        }
        match parse_module_spec("coker([[x, y],[y, x]])", &vars).unwrap() {
            ModuleSpec::Coker(rows) => {
                assert_eq!(rows.len(), 2);
                assert_eq!(rows[0].len(), 2);
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_module_spec("socle", &vars).is_err());
        assert!(parse_module_spec("coker([[x],[y, x]])", &vars).is_err());
    }

    #[test]
    fn render_round_trip_text() {
        let text = "ring { field: F32003; vars: x,y,z; ideal: x^2, x*y, y^2, z^2 }";
        let r = parse_ring_text(text).unwrap();
        let rendered = render_ring(
            &r.field,
            &r.vars,
            &["x^2".into(), "x*y".into(), "y^2".into(), "z^2".into()],
        );
        assert_eq!(rendered, text);
        let r2 = parse_ring_text(&rendered).unwrap();
        assert_eq!(r2.vars, r.vars);
    }
}
