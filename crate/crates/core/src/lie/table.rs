//! The structure-table text format: `ab = c, ac = d, be = rtf+(1-t)g`.
//!
//! Basis letters are `a, b, c, …` (or a custom list); every other letter is a
//! parameter symbol, except `i`, which is the imaginary unit unless it is a
//! basis letter. Entries are separated by commas, semicolons or newlines, and
//! `#` starts a comment. `[a,b] = c` is accepted as well as `ab = c`.

use std::collections::{BTreeMap, BTreeSet};

use super::expr::{is_stop, ExprParser, SymPoly};
use super::StructureConstants;
use crate::error::TableError;
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

/// Source text plus an assignment for its parameter symbols.
#[derive(Clone, Debug, Default)]
pub struct TableText {
    pub text: String,
    pub params: BTreeMap<char, Scalar>,
}

impl TableText {
    pub fn new(text: impl Into<String>) -> Self {
        TableText { text: text.into(), params: BTreeMap::new() }
    }

    pub fn with_param(mut self, symbol: char, value: Scalar) -> Self {
        self.params.insert(symbol, value);
        self
    }
}

/// A structure table whose coefficients are polynomials in parameter symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricTable {
    dim: usize,
    letters: Vec<char>,
    /// `(i, j) → [(k, coefficient)]`, `i < j`, 0-based.
    entries: BTreeMap<(usize, usize), Vec<(usize, SymPoly)>>,
    /// First occurrence (line, column) of each parameter symbol.
    sites: BTreeMap<char, (usize, usize)>,
}

pub fn default_letters(n: usize) -> Vec<char> {
    (0..n).map(super::structure::letter).collect()
}

impl ParametricTable {
    pub fn parse(text: &str, dim: usize) -> Result<Self, TableError> {
        Self::parse_with_letters(text, &default_letters(dim))
    }

    pub fn parse_with_letters(text: &str, letters: &[char]) -> Result<Self, TableError> {
        let dim = letters.len();
        let basis: BTreeSet<char> = letters.iter().copied().collect();
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut line = 1;
        let mut line_start = 0;
        let mut entries: BTreeMap<(usize, usize), Vec<(usize, SymPoly)>> = BTreeMap::new();
        let mut sites = BTreeMap::new();

        let index_of = |c: char, line: usize, col: usize| -> Result<usize, TableError> {
            if let Some(i) = letters.iter().position(|&l| l == c) {
                return Ok(i);
            }
            if c.is_ascii_lowercase() && letters.first() == Some(&'a') {
                let index = (c as u8 - b'a') as usize + 1;
                return Err(TableError::LetterOutOfRange { line, col, letter: c, index, dim });
            }
            Err(TableError::UnknownLetter { line, col, letter: c })
        };

        loop {
            // separators, blank space, comments
            while let Some(&c) = chars.get(pos) {
                match c {
                    '\n' => {
                        pos += 1;
                        line += 1;
                        line_start = pos;
                    }
                    ' ' | '\t' | '\r' | ',' | ';' => pos += 1,
                    '#' => {
                        while chars.get(pos).is_some_and(|&c| c != '\n') {
                            pos += 1;
                        }
                    }
                    _ => break,
                }
            }
            if pos >= chars.len() {
                break;
            }
            let entry_line = line;
            let skip_ws = |pos: &mut usize| {
                while chars.get(*pos).is_some_and(|&c| c == ' ' || c == '\t') {
                    *pos += 1;
                }
            };
            let syntax = |pos: usize, msg: &str| TableError::Syntax { line, col: pos - line_start + 1, msg: msg.to_string() };

            // left-hand side
            let bracketed = chars[pos] == '[';
            if bracketed {
                pos += 1;
                skip_ws(&mut pos);
            }
            let mut lhs = Vec::with_capacity(2);
            for slot in 0..2 {
                skip_ws(&mut pos);
                let Some(&c) = chars.get(pos) else { return Err(syntax(pos, "unexpected end of input")) };
                if !c.is_alphabetic() {
                    return Err(syntax(pos, "expected a basis letter"));
                }
                lhs.push(index_of(c, line, pos - line_start + 1)?);
                pos += 1;
                if bracketed && slot == 0 {
                    skip_ws(&mut pos);
                    if chars.get(pos) != Some(&',') {
                        return Err(syntax(pos, "expected ','"));
                    }
                    pos += 1;
                }
            }
            if bracketed {
                skip_ws(&mut pos);
                if chars.get(pos) != Some(&']') {
                    return Err(syntax(pos, "expected ']'"));
                }
                pos += 1;
            }
            skip_ws(&mut pos);
            if chars.get(pos) != Some(&'=') {
                return Err(syntax(pos, "expected '='"));
            }
            pos += 1;

            // right-hand side
            let mut parser = ExprParser::at(chars.clone(), pos, line, line_start, &basis);
            let rhs = parser.parse_expr()?;
            let symbol_sites = parser.take_sites();
            pos = parser.pos();
            skip_ws(&mut pos);
            if let Some(&c) = chars.get(pos) {
                if !is_stop(c) || c == '=' || c == ']' || c == '}' {
                    return Err(syntax(pos, &format!("unexpected character {c:?}")));
                }
            }
            let (i, j) = (lhs[0], lhs[1]);
            if i == j {
                return Err(TableError::SelfBracket { line: entry_line });
            }
            if letters.first() == Some(&'a') {
                if let Some(&(s, (line, col))) =
                    symbol_sites.iter().find(|(s, _)| ('a'..='h').contains(s) && !basis.contains(s))
                {
                    let index = (s as u8 - b'a') as usize + 1;
                    return Err(TableError::LetterOutOfRange { line, col, letter: s, index, dim });
                }
            }
            let coefs = rhs.linear_coefficients(&basis).ok_or(TableError::NotLinear { line: entry_line })?;
            for (s, site) in symbol_sites {
                if !basis.contains(&s) {
                    sites.entry(s).or_insert(site);
                }
            }
            let (a, b, negate) = if i < j { (i, j, false) } else { (j, i, true) };
            if entries.contains_key(&(a, b)) {
                return Err(TableError::Syntax { line: entry_line, col: 1, msg: "duplicate bracket".into() });
            }
            let terms = coefs
                .into_iter()
                .map(|(l, p)| {
                    let k = letters.iter().position(|&x| x == l).expect("basis letter");
                    (k, if negate { p.neg() } else { p })
                })
                .collect();
            entries.insert((a, b), terms);
        }
        Ok(ParametricTable { dim, letters: letters.to_vec(), entries, sites })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Parameter symbols that occur in some coefficient.
    pub fn symbols(&self) -> BTreeSet<char> {
        self.entries.values().flatten().flat_map(|(_, p)| p.symbols()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &SymPoly)> {
        self.entries.iter().flat_map(|(&(i, j), ts)| ts.iter().map(move |(k, p)| (i, j, k.to_owned(), p)))
    }

    /// Largest degree of any coefficient in `s`.
    pub fn degree_in(&self, s: char) -> u32 {
        self.entries.values().flatten().map(|(_, p)| p.degree_in(s)).max().unwrap_or(0)
    }

    fn map_coefficients(&self, f: impl Fn(&SymPoly) -> SymPoly) -> ParametricTable {
        let entries = self
            .entries
            .iter()
            .map(|(&key, ts)| {
                let ts: Vec<_> = ts.iter().map(|(k, p)| (*k, f(p))).filter(|(_, p)| !p.is_zero()).collect();
                (key, ts)
            })
            .filter(|(_, ts)| !ts.is_empty())
            .collect();
        ParametricTable { dim: self.dim, letters: self.letters.clone(), entries, sites: self.sites.clone() }
    }

    /// Coefficient-wise partial derivative.
    pub fn derivative(&self, s: char) -> ParametricTable {
        self.map_coefficients(|p| p.derivative(s))
    }

    /// Fixes some parameters, leaving the others symbolic.
    pub fn substitute(&self, values: &BTreeMap<char, Scalar>) -> ParametricTable {
        self.map_coefficients(|p| p.substitute(values))
    }

    pub fn eval(&self, values: &BTreeMap<char, Scalar>) -> Result<StructureConstants, TableError> {
        let mut out = StructureConstants::zero(self.dim);
        for (&(i, j), terms) in &self.entries {
            let mut vals = Vec::with_capacity(terms.len());
            for (k, p) in terms {
                let c = p.eval(values).map_err(|s| self.unresolved(s))?;
                vals.push((*k, c));
            }
            let v = SparseVec::from_entries(self.dim, vals).expect("k < dim");
            if !v.is_zero() {
                out.set_bracket(i, j, v);
            }
        }
        Ok(out)
    }

    /// Unassigned `a`–`h` past the dimension are reported as out-of-range basis
    /// letters; anything else as an unresolved parameter.
    fn unresolved(&self, s: char) -> TableError {
        if self.letters.first() == Some(&'a') && ('a'..='h').contains(&s) {
            if let Some(&(line, col)) = self.sites.get(&s) {
                let index = (s as u8 - b'a') as usize + 1;
                return TableError::LetterOutOfRange { line, col, letter: s, index, dim: self.dim };
            }
        }
        TableError::UnresolvedParameter(s)
    }

    /// Evaluates at a parameter-free table; errors if symbols remain.
    pub fn to_constants(&self) -> Result<StructureConstants, TableError> {
        self.eval(&BTreeMap::new())
    }
}

/// Parses a table and evaluates it at the given parameter values.
pub fn parse_table(src: &TableText, n: usize) -> Result<StructureConstants, TableError> {
    ParametricTable::parse(&src.text, n)?.eval(&src.params)
}

/// Parses a parameter-free table.
pub fn parse_table_str(text: &str, n: usize) -> Result<StructureConstants, TableError> {
    parse_table(&TableText::new(text), n)
}
