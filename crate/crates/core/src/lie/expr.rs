//! Polynomial expressions in single-character symbols with exact coefficients,
//! written in the compact juxtaposition style of structure tables:
//! `rtf+(1-t)g`, `2t^2a+(1/2-t^2)b`, `-it^2(a-b)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::TableError;
use crate::scalar::Scalar;

/// Exponents per symbol; zero exponents are not stored.
pub type SymMonomial = BTreeMap<char, u32>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<SymMonomial, Scalar>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(SymMonomial::new(), c);
        p
    }

    pub fn symbol(s: char) -> Self {
        let mut m = SymMonomial::new();
        m.insert(s, 1);
        let mut p = SymPoly::zero();
        p.add_term(m, Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: SymMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (s, e) in m2 {
                    *m.entry(*s).or_insert(0) += e;
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        let mut out = SymPoly::constant(Scalar::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The value if the polynomial has no symbols.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&SymMonomial::new()).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> BTreeSet<char> {
        self.terms.keys().flat_map(|m| m.keys().copied()).collect()
    }

    pub fn degree_in(&self, s: char) -> u32 {
        self.terms.keys().map(|m| m.get(&s).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// Partial derivative in `s`.
    pub fn derivative(&self, s: char) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            if let Some(&e) = m.get(&s) {
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(&s);
                } else {
                    m2.insert(s, e - 1);
                }
                out.add_term(m2, c * &Scalar::from_int(e as i64));
            }
        }
        out
    }

    /// Substitutes values for some symbols.
    pub fn substitute(&self, values: &BTreeMap<char, Scalar>) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = SymMonomial::new();
            for (s, e) in m {
                match values.get(s) {
                    Some(v) => coef = &coef * &v.pow(*e),
                    None => {
                        rest.insert(*s, *e);
                    }
                }
            }
            out.add_term(rest, coef);
        }
        out
    }

    /// Full evaluation; the first unassigned symbol is reported.
    pub fn eval(&self, values: &BTreeMap<char, Scalar>) -> Result<Scalar, char> {
        let rest = self.substitute(values);
        match rest.as_constant() {
            Some(c) => Ok(c),
            None => Err(*rest.symbols().iter().next().expect("non-constant has a symbol")),
        }
    }

    /// Splits off one symbol from a set: returns, for each `s ∈ set`, the
    /// coefficient of the linear monomial in `s`. Fails if some term has
    /// total degree ≠ 1 in the set.
    pub fn linear_coefficients(&self, set: &BTreeSet<char>) -> Option<BTreeMap<char, SymPoly>> {
        let mut out: BTreeMap<char, SymPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let hits: Vec<(char, u32)> = m.iter().filter(|(s, _)| set.contains(s)).map(|(s, e)| (*s, *e)).collect();
            match hits.as_slice() {
                [(s, 1)] => {
                    let mut rest = m.clone();
                    rest.remove(s);
                    out.entry(*s).or_default().add_term(rest, c.clone());
                }
                _ => return None,
            }
        }
        out.retain(|_, p| !p.is_zero());
        Some(out)
    }
}

impl std::fmt::Display for SymPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: String = m
                    .iter()
                    .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono,
                    (false, false) => format!("({c}){mono}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Recursive-descent parser over one expression. Stops (without consuming) at
/// `,`, `;`, `=`, `]`, `}` or a newline.
pub(crate) struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    line_start: usize,
    /// Symbols treated as plain variables even if they are `i`.
    plain: &'a BTreeSet<char>,
    sites: Vec<(char, (usize, usize))>,
}

pub(crate) fn is_stop(c: char) -> bool {
    matches!(c, ',' | ';' | '=' | ']' | '}' | '\n' | '#')
}

impl<'a> ExprParser<'a> {
    pub(crate) fn new(chars: Vec<char>, plain: &'a BTreeSet<char>) -> Self {
        ExprParser { chars, pos: 0, line: 1, line_start: 0, plain, sites: Vec::new() }
    }

    pub(crate) fn at(chars: Vec<char>, pos: usize, line: usize, line_start: usize, plain: &'a BTreeSet<char>) -> Self {
        ExprParser { chars, pos, line, line_start, plain, sites: Vec::new() }
    }

    /// Symbols seen so far with their (line, column).
    pub(crate) fn take_sites(&mut self) -> Vec<(char, (usize, usize))> {
        std::mem::take(&mut self.sites)
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn col(&self) -> usize {
        self.pos - self.line_start + 1
    }

    fn err(&self, msg: impl Into<String>) -> TableError {
        TableError::Syntax { line: self.line, col: self.col(), msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == ' ' || c == '\t' || c == '\r' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sign(c: char) -> Option<bool> {
        match c {
            '+' => Some(false),
            '-' | '−' => Some(true),
            _ => None,
        }
    }

    pub(crate) fn parse_expr(&mut self) -> Result<SymPoly, TableError> {
        let mut acc = SymPoly::zero();
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some(c) if Self::sign(c).is_some() => {
                    self.pos += 1;
                    Self::sign(c).expect("checked")
                }
                Some(c) if first && !is_stop(c) && c != ')' => false,
                _ if first => return Err(self.err("expected an expression")),
                _ => break,
            };
            first = false;
            let t = self.parse_term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(c) if Self::sign(c).is_some() => continue,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn starts_atom(c: char) -> bool {
        c.is_ascii_digit() || c.is_alphabetic() || c == '('
    }

    fn parse_term(&mut self) -> Result<SymPoly, TableError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some('*') | Some('·') => {
                    self.pos += 1;
                    acc = acc.mul(&self.parse_factor()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let col = self.col();
                    let d = self.parse_factor()?;
                    let c = d.as_constant().filter(|c| !c.is_zero()).ok_or(TableError::Syntax {
                        line: self.line,
                        col,
                        msg: "division only by nonzero constants".into(),
                    })?;
                    acc = acc.scale(&c.inv().expect("nonzero"));
                }
                Some(c) if Self::starts_atom(c) => acc = acc.mul(&self.parse_factor()?),
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<SymPoly, TableError> {
        let base = self.parse_atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected an exponent"));
            }
            let e: u32 = self.chars[start..self.pos].iter().collect::<String>().parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<SymPoly, TableError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: num_bigint::BigInt = digits.parse().map_err(|_| self.err("bad number"))?;
                Ok(SymPoly::constant(Scalar::from(n)))
            }
            Some(c) if c.is_alphabetic() => {
                self.sites.push((c, (self.line, self.col())));
                self.pos += 1;
                if c == 'i' && !self.plain.contains(&'i') {
                    Ok(SymPoly::constant(Scalar::i()))
                } else {
                    Ok(SymPoly::symbol(c))
                }
            }
            Some(c) => Err(self.err(format!("unexpected character {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a standalone expression such as `2t(tb-d)`.
pub fn parse_expr(src: &str, plain: &BTreeSet<char>) -> Result<SymPoly, TableError> {
    let mut p = ExprParser::new(src.chars().collect(), plain);
    let e = p.parse_expr()?;
    if let Some(c) = p.peek() {
        return Err(p.err(format!("trailing input {c:?}")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> SymPoly {
        parse_expr(s, &BTreeSet::new()).unwrap()
    }

    fn vals(pairs: &[(char, i64)]) -> BTreeMap<char, Scalar> {
        pairs.iter().map(|&(s, v)| (s, Scalar::from_int(v))).collect()
    }

    #[test]
    fn juxtaposition_and_powers() {
        let p = parse("rtf+(1-t)g");
        assert_eq!(p.eval(&vals(&[('r', 0), ('t', 2), ('f', 1), ('g', 0)])).unwrap(), Scalar::zero());
        assert_eq!(p.eval(&vals(&[('r', 0), ('t', 2), ('f', 0), ('g', 1)])).unwrap(), Scalar::from_int(-1));
        let q = parse("-8t^3g");
        assert_eq!(q.eval(&vals(&[('t', 2), ('g', 1)])).unwrap(), Scalar::from_int(-64));
    }

    #[test]
    fn fractions_divide_by_constants() {
        let p = parse("(1+t^3/2)f");
        assert_eq!(p.eval(&vals(&[('t', 2), ('f', 1)])).unwrap(), Scalar::from_int(5));
        assert!(parse_expr("1/t", &BTreeSet::new()).is_err());
        assert!(parse_expr("1/0", &BTreeSet::new()).is_err());
    }

    #[test]
    fn imaginary_unit() {
        let p = parse("-it^2(a-b)");
        let v = p.eval(&vals(&[('t', 1), ('a', 1), ('b', 0)])).unwrap();
        assert!(v.value_eq(&(-Scalar::i())));
        let plain: BTreeSet<char> = ['i'].into();
        assert_eq!(parse_expr("i", &plain).unwrap(), SymPoly::symbol('i'));
    }

    #[test]
    fn derivative_of_table_coefficient() {
        let p = parse("1+tr");
        assert_eq!(p.derivative('r'), SymPoly::symbol('t'));
        assert_eq!(parse("r^2").derivative('r'), parse("2r"));
    }

    #[test]
    fn linear_split() {
        let p = parse("2t(tb-d)");
        let set: BTreeSet<char> = ['b', 'd'].into();
        let coefs = p.linear_coefficients(&set).unwrap();
        assert_eq!(coefs[&'b'], parse("2t^2"));
        assert_eq!(coefs[&'d'], parse("-2t"));
        assert!(parse("bd").linear_coefficients(&set).is_none());
    }
}
