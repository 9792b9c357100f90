//! Text grammars: rings, monomials, monomial ideals, polynomials, graphs.
//!
//! ```text
//! ring     := ["ring"] name ("," name)*
//! monomial := "1" | power ("*" power)*        power := name ["^" int]
//! ideal    := "0" | monomial ("," monomial)*
//! poly     := ["+"|"-"] term (("+"|"-") term)*
//! term     := factor ("*" factor)*            factor := int ["/" int] | power
//! graph    := "graph" n NEWLINE (u v NEWLINE)*   (1-indexed)
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use uniformity_core::groebner::{Field, PolyRingRef, Polynomial};
use uniformity_core::{Graph, Monomial, MonomialIdeal, Ring, RingRef};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line, _src: src }
    }

    fn error<T>(&self, message: impl Into<String>) -> ParseResult<T> {
        Err(ParseError { line: self.line, column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn ident(&mut self) -> ParseResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            let ok = if self.pos == start { c.is_ascii_alphabetic() || c == '_' } else { c.is_ascii_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a variable name");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> ParseResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> ParseResult<u32> {
        let at = self.pos;
        let value = self.integer().or_else(|_| self.error("malformed exponent: expected digits after '^'"))?;
        u32::try_from(value).or_else(|_| {
            self.pos = at;
            self.error("exponent too large")
        })
    }

    /// `name ["^" int]`, returning the variable index.
    fn power(&mut self, ring: &Ring) -> ParseResult<(usize, u32)> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident()?;
        let Some(idx) = ring.index_of(&name) else {
            self.pos = at;
            return self.error(format!("unknown variable '{name}'"));
        };
        let e = if self.eat('^') { self.exponent()? } else { 1 };
        Ok((idx, e))
    }

    fn expect_end(&mut self) -> ParseResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }
}

fn build_monomial(cur: &Cursor<'_>, exps: Vec<u32>) -> ParseResult<Monomial> {
    Monomial::new(exps).or_else(|e| cur.error(e.to_string()))
}

fn monomial_at(cur: &mut Cursor<'_>, ring: &Ring) -> ParseResult<Monomial> {
    let mut exps = vec![0u32; ring.n()];
    if cur.peek() == Some('1') {
        cur.pos += 1;
        return build_monomial(cur, exps);
    }
    loop {
        let (i, e) = cur.power(ring)?;
        exps[i] = exps[i].checked_add(e).ok_or_else(|| ParseError {
            line: cur.line,
            column: cur.pos + 1,
            message: "exponent too large".into(),
        })?;
        if !cur.eat('*') {
            break;
        }
    }
    build_monomial(cur, exps)
}

/// A comma- or whitespace-separated variable list, optionally prefixed by `ring`.
pub fn parse_ring(text: &str) -> ParseResult<RingRef> {
    let mut cur = Cursor::new(text, 1);
    if cur.at_end() {
        return cur.error("empty input");
    }
    let start = cur.pos;
    let keyword = cur.ident()?;
    let after_keyword = cur.chars.get(cur.pos).is_some_and(|c| c.is_whitespace());
    if keyword != "ring" || !after_keyword || cur.at_end() {
        cur.pos = start;
    }
    let mut names = Vec::new();
    loop {
        names.push(cur.ident()?);
        if cur.at_end() {
            break;
        }
        if !cur.eat(',') && !cur.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            return cur.error("expected ',' between variable names");
        }
    }
    Ring::new(names).or_else(|e| cur.error(e.to_string()))
}

pub fn parse_monomial(text: &str, ring: &RingRef) -> ParseResult<Monomial> {
    let mut cur = Cursor::new(text, 1);
    if cur.at_end() {
        return cur.error("empty input");
    }
    let m = monomial_at(&mut cur, ring)?;
    cur.expect_end()?;
    Ok(m)
}

pub fn parse_ideal(text: &str, ring: &RingRef) -> ParseResult<MonomialIdeal> {
    parse_ideal_at_line(text, ring, 1)
}

fn parse_ideal_at_line(text: &str, ring: &RingRef, line: usize) -> ParseResult<MonomialIdeal> {
    let mut cur = Cursor::new(text, line);
    if cur.at_end() {
        return cur.error("empty input");
    }
    if cur.peek() == Some('0') {
        cur.pos += 1;
        cur.expect_end()?;
        return Ok(MonomialIdeal::zero(ring.clone()));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(monomial_at(&mut cur, ring)?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect_end()?;
    MonomialIdeal::from_generators(ring.clone(), gens).or_else(|e| cur.error(e.to_string()))
}

/// Raw term list `(numerator, denominator, exponents)` before a field is chosen.
type RawPoly = Vec<(BigInt, BigInt, Vec<u32>)>;

fn term_at(cur: &mut Cursor<'_>, ring: &Ring) -> ParseResult<(BigInt, BigInt, Vec<u32>)> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut exps = vec![0u32; ring.n()];
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                num *= cur.integer()?;
                if cur.eat('/') {
                    let at = cur.pos;
                    let d = cur.integer()?;
                    if d.is_zero() {
                        cur.pos = at;
                        return cur.error("zero denominator");
                    }
                    den *= d;
                }
            }
            Some(_) => {
                let (i, e) = cur.power(ring)?;
                exps[i] = exps[i].checked_add(e).ok_or_else(|| ParseError {
                    line: cur.line,
                    column: cur.pos + 1,
                    message: "exponent too large".into(),
                })?;
            }
            None => return cur.error("expected a term"),
        }
        if !cur.eat('*') {
            break;
        }
    }
    Ok((num, den, exps))
}

fn raw_poly_at(cur: &mut Cursor<'_>, ring: &Ring) -> ParseResult<RawPoly> {
    let mut terms = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (num, den, exps) = term_at(cur, ring)?;
        terms.push((if negative { -num } else { num }, den, exps));
        negative = match cur.peek() {
            Some('+') => false,
            Some('-') => true,
            _ => break,
        };
        cur.pos += 1;
    }
    Ok(terms)
}

fn into_polynomial<F: Field>(cur: &Cursor<'_>, ring: &PolyRingRef<F>, raw: RawPoly) -> ParseResult<Polynomial<F>> {
    let field = ring.field();
    let mut terms = Vec::with_capacity(raw.len());
    for (num, den, exps) in raw {
        let c = field.from_ratio(&num, &den).or_else(|e| cur.error(e.to_string()))?;
        terms.push((build_monomial(cur, exps)?, c));
    }
    Polynomial::from_terms(ring, terms).or_else(|e| cur.error(e.to_string()))
}

pub fn parse_polynomial<F: Field>(text: &str, ring: &PolyRingRef<F>) -> ParseResult<Polynomial<F>> {
    let mut cur = Cursor::new(text, 1);
    if cur.at_end() {
        return cur.error("empty input");
    }
    let raw = raw_poly_at(&mut cur, ring.vars())?;
    cur.expect_end()?;
    into_polynomial(&cur, ring, raw)
}

/// Comma-separated polynomials.
pub fn parse_polynomials<F: Field>(text: &str, ring: &PolyRingRef<F>) -> ParseResult<Vec<Polynomial<F>>> {
    let mut cur = Cursor::new(text, 1);
    if cur.at_end() {
        return cur.error("empty input");
    }
    let mut out = Vec::new();
    loop {
        let raw = raw_poly_at(&mut cur, ring.vars())?;
        out.push(into_polynomial(&cur, ring, raw)?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect_end()?;
    Ok(out)
}

pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        "0".into()
    } else {
        ideal.ring().render_list(ideal.generators())
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or(""))).filter(|(_, l)| !l.trim().is_empty())
}

/// An ideal file: an optional `ring ...` line followed by generator lines,
/// which are joined with commas. `ring` overrides a missing header.
pub fn parse_ideal_file(text: &str, ring: Option<&RingRef>) -> ParseResult<MonomialIdeal> {
    let mut lines = significant_lines(text).peekable();
    let header = match lines.peek() {
        Some((_, l)) if l.trim_start().starts_with("ring ") => {
            let (no, l) = lines.next().expect("peeked");
            Some(parse_ring(l).map_err(|e| ParseError { line: no, ..e })?)
        }
        _ => None,
    };
    let ring = match (header, ring) {
        (Some(h), _) => h,
        (None, Some(r)) => r.clone(),
        (None, None) => return Err(ParseError { line: 1, column: 1, message: "missing ring declaration".into() }),
    };
    let mut gens = Vec::new();
    let mut first_line = 1;
    for (no, l) in lines {
        if gens.is_empty() {
            first_line = no;
        }
        let part = parse_ideal_at_line(l.trim().trim_end_matches(','), &ring, no)?;
        gens.extend(part.generators().iter().cloned());
    }
    if gens.is_empty() {
        return Err(ParseError { line: first_line, column: 1, message: "empty input".into() });
    }
    MonomialIdeal::from_generators(ring, gens)
        .map_err(|e| ParseError { line: first_line, column: 1, message: e.to_string() })
}

/// `graph <n>` then one 1-indexed `u v` pair per line; `#` starts a comment.
pub fn parse_graph(text: &str) -> ParseResult<Graph> {
    let mut lines = significant_lines(text);
    let Some((no, header)) = lines.next() else {
        return Err(ParseError { line: 1, column: 1, message: "empty input".into() });
    };
    let mut cur = Cursor::new(header, no);
    let kw = cur.ident()?;
    if kw != "graph" {
        cur.pos = 0;
        cur.skip_ws();
        return cur.error("expected 'graph <n>'");
    }
    let n = usize::try_from(cur.integer()?).or_else(|_| cur.error("vertex count too large"))?;
    cur.expect_end()?;
    let mut edges = Vec::new();
    for (no, l) in lines {
        let mut cur = Cursor::new(l, no);
        let vertex = |cur: &mut Cursor<'_>| -> ParseResult<usize> {
            cur.skip_ws();
            let at = cur.pos;
            let v = usize::try_from(cur.integer()?).unwrap_or(usize::MAX);
            if v == 0 || v > n {
                cur.pos = at;
                return cur.error(format!("vertex {v} outside 1..={n}"));
            }
            Ok(v - 1)
        };
        let u = vertex(&mut cur)?;
        let v = vertex(&mut cur)?;
        cur.expect_end()?;
        if u == v {
            return cur.error(format!("loop at vertex {}", u + 1));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| ParseError { line: no, column: 1, message: e.to_string() })
}

pub fn render_graph(graph: &Graph) -> String {
    let mut out = format!("graph {}\n", graph.vertex_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
