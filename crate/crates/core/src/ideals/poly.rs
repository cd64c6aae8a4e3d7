//! Sparse polynomials over ℚ in the structure-constant variables `t_{i,j,k}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::IdealError;

/// `t_{i,j,k}`, the coefficient of `e_k` in `μ(e_i, e_j)`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl Var {
    pub fn new(i: u8, j: u8, k: u8) -> Self {
        Var { i, j, k }
    }

    /// All variables of the upper-triangular chart in dimension `n`, in order.
    pub fn chart(n: usize) -> Vec<Var> {
        let n = n as u8;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    out.push(Var::new(i, j, k));
                }
            }
        }
        out
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t_{{{},{},{}}}", self.i, self.j, self.k)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic, `t_{1,2,3} > t_{1,2,4} > …`.
    #[default]
    Grevlex,
    Lex,
}

/// A power product; exponents are positive and variables sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Var, u32)>) -> Self {
        powers.retain(|(_, e)| *e > 0);
        powers.sort();
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.binary_search_by_key(&v, |(w, _)| *w).map(|p| self.0[p].1).unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    out.push((x.0, x.1 + y.1));
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    out.push(*x);
                    i += 1;
                }
                (Some(x), None) => {
                    out.push(*x);
                    i += 1;
                }
                (_, Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_powers(other.0.iter().map(|&(v, e)| (v, e - self.exponent(v))).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<Var> = self.0.iter().chain(&other.0).map(|(v, _)| *v).collect();
        Monomial(vars.into_iter().map(|v| (v, self.exponent(v).max(other.exponent(v)))).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, _)| other.exponent(*v) == 0)
    }

    /// Multidegree `Σ e·(ε_i + ε_j − ε_k)`; every generator of `I_{n,k}` is homogeneous for it.
    pub fn weight(&self) -> BTreeMap<u8, i64> {
        let mut w = BTreeMap::new();
        for &(v, e) in &self.0 {
            for (idx, s) in [(v.i, 1), (v.j, 1), (v.k, -1)] {
                *w.entry(idx).or_insert(0) += s * e as i64;
            }
        }
        w.retain(|_, x| *x != 0);
        w
    }

    pub fn cmp_in(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Lex => {
                for (x, y) in self.0.iter().zip(&other.0) {
                    if x.0 != y.0 {
                        // the smaller variable is the larger one in the order
                        return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
                    }
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                }
                self.0.len().cmp(&other.0.len())
            }
            MonomialOrder::Grevlex => {
                let d = self.degree().cmp(&other.degree());
                if d != Ordering::Equal {
                    return d;
                }
                let (mut i, mut j) = (self.0.len(), other.0.len());
                while i > 0 && j > 0 {
                    let (x, y) = (self.0[i - 1], other.0[j - 1]);
                    if x.0 == y.0 {
                        if x.1 != y.1 {
                            return y.1.cmp(&x.1);
                        }
                        i -= 1;
                        j -= 1;
                    } else if x.0 > y.0 {
                        // self has the smallest variable with positive exponent
                        return Ordering::Less;
                    } else {
                        return Ordering::Greater;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// All monomials of exactly `degree` in `vars`.
    pub fn all_of_degree(vars: &[Var], degree: u32) -> Vec<Monomial> {
        fn rec(vars: &[Var], left: u32, acc: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(Monomial(acc.clone()));
                return;
            }
            let Some((&v, rest)) = vars.split_first() else { return };
            for e in (1..=left).rev() {
                acc.push((v, e));
                rec(rest, left - e, acc, out);
                acc.pop();
            }
            rec(rest, left, acc, out);
        }
        let mut sorted = vars.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut out = Vec::new();
        rec(&sorted, degree, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        MultiPoly::from_terms([(Monomial::one(), c)])
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::from_terms([(Monomial::var(v), BigRational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.powers().iter().map(|(v, _)| *v)).collect()
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_in(b.0, order))
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(n, x)| (n.mul(m), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    /// Leading coefficient 1 in the given order.
    pub fn monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => MultiPoly::zero(),
        }
    }

    /// Canonical representative of the line through `self`: primitive integer
    /// coefficients with positive grevlex-leading coefficient.
    pub fn up_to_scalar(&self) -> MultiPoly {
        let Some((_, lead)) = self.leading(MonomialOrder::Grevlex) else { return MultiPoly::zero() };
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut g = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
        if lead.is_negative() {
            g = -g;
        }
        self.scale(&BigRational::new(lcm, g))
    }

    /// Whether every term has the same degree and weight.
    pub fn is_homogeneous(&self) -> bool {
        let mut keys = self.terms.keys().map(|m| (m.degree(), m.weight()));
        match keys.next() {
            Some(first) => keys.all(|k| k == first),
            None => true,
        }
    }

    /// Splits into components of fixed degree and weight.
    pub fn homogeneous_parts(&self) -> BTreeMap<(u32, BTreeMap<u8, i64>), MultiPoly> {
        let mut out: BTreeMap<_, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.degree(), m.weight())).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// Image under the evaluation map on the assigned variables.
    pub fn substitute(&self, assignment: &BTreeMap<Var, BigRational>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.powers() {
                match assignment.get(&v) {
                    Some(x) => coef *= num_traits::pow(x.clone(), e as usize),
                    None => rest.push((v, e)),
                }
                if coef.is_zero() {
                    break;
                }
            }
            out.add_term(Monomial(rest), coef);
        }
        out
    }

    pub fn eval<F: Fn(Var) -> BigRational>(&self, value: F) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                t *= num_traits::pow(value(v), e as usize);
            }
            acc += t;
        }
        acc
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending grevlex order, e.g. `t_{1,2,3}*t_{3,4,5} - 2*t_{1,2,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp_in(a.0, MonomialOrder::Grevlex));
        for (n, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> IdealError {
        IdealError::Parse(format!("{} at offset {} in {:?}", what, self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
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

    fn uint(&mut self) -> Result<BigInt, IdealError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn expr(&mut self) -> Result<MultiPoly, IdealError> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, IdealError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || matches!(self.peek(), Some('t' | '(' | '0'..='9')) {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, IdealError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn index(&mut self) -> Result<u8, IdealError> {
        let v = self.uint()?;
        v.try_into().map_err(|_| self.err("index too large"))
    }

    fn atom(&mut self) -> Result<MultiPoly, IdealError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some('0'..='9') => {
                let n = self.uint()?;
                if self.eat('/') {
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(MultiPoly::constant(BigRational::new(n, d)));
                }
                Ok(MultiPoly::constant(BigRational::from_integer(n)))
            }
            Some('t') => {
                self.pos += 1;
                self.eat('_');
                let (i, j, k) = if self.eat('{') {
                    let i = self.index()?;
                    let _ = self.eat(',');
                    let j = self.index()?;
                    let _ = self.eat(',');
                    let k = self.index()?;
                    if !self.eat('}') {
                        return Err(self.err("expected '}'"));
                    }
                    (i, j, k)
                } else {
                    // t123 shorthand, single-digit indices
                    self.skip_ws();
                    let digits: Vec<u8> = self.chars[self.pos..]
                        .iter()
                        .take_while(|c| c.is_ascii_digit())
                        .map(|c| *c as u8 - b'0')
                        .collect();
                    if digits.len() != 3 {
                        return Err(self.err("expected t_{i,j,k}"));
                    }
                    self.pos += 3;
                    (digits[0], digits[1], digits[2])
                };
                if !(1 <= i && i < j && j < k) {
                    return Err(IdealError::UnknownVariable(format!("t_{{{i},{j},{k}}}")));
                }
                Ok(MultiPoly::var(Var::new(i, j, k)))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl FromStr for MultiPoly {
    type Err = IdealError;

    /// Accepts `t_{1,2,3}*t_{3,4,5} - 2 t_{1,2,4}^2 + 1/2`, parentheses and the `t123` shorthand.
    fn from_str(s: &str) -> Result<Self, IdealError> {
        let mut p = Parser { src: s, chars: s.chars().collect(), pos: 0 };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

/// Parses a polynomial, panicking on malformed built-in text.
pub(crate) fn poly(s: &str) -> MultiPoly {
    s.parse().unwrap_or_else(|e| panic!("built-in polynomial {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(i: u8, j: u8, k: u8) -> Monomial {
        Monomial::var(Var::new(i, j, k))
    }

    #[test]
    fn display_round_trip() {
        let p = poly("t_{1,2,4}t_{3,4,5} + t_{2,3,4}*t_{1,4,5} - t134 t245");
        assert_eq!(p.to_string(), "t_{1,4,5}*t_{2,3,4} - t_{1,3,4}*t_{2,4,5} + t_{1,2,4}*t_{3,4,5}");
        assert_eq!(poly(&p.to_string()), p);
        assert_eq!(poly("(t123 - 1/2)^2").to_string(), "t_{1,2,3}^2 - t_{1,2,3} + 1/4");
        assert!("t_{2,1,3}".parse::<MultiPoly>().is_err());
        assert!("t_{1,2".parse::<MultiPoly>().is_err());
        assert!("3/0".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn grevlex_basics() {
        let a = v(1, 2, 3);
        let b = v(1, 2, 4);
        let c = v(3, 4, 5);
        assert_eq!(a.cmp_in(&b, MonomialOrder::Grevlex), Ordering::Greater);
        // x y^2 vs x^2 z style: equal degree, compare smallest variable
        let m1 = a.mul(&b).mul(&b);
        let m2 = a.mul(&a).mul(&c);
        assert_eq!(m1.cmp_in(&m2, MonomialOrder::Grevlex), Ordering::Greater);
        assert_eq!(m1.cmp_in(&m2, MonomialOrder::Lex), Ordering::Less);
        assert_eq!(a.mul(&c).cmp_in(&b, MonomialOrder::Grevlex), Ordering::Greater);
    }

    #[test]
    fn substitution_and_weights() {
        let p = poly("t123 t345 + t124 t456");
        let zero: BTreeMap<Var, BigRational> = [(Var::new(1, 2, 4), BigRational::zero())].into();
        assert_eq!(p.substitute(&zero), poly("t123 t345"));
        assert_eq!(p.substitute(&BTreeMap::new()), p);
        assert!(poly("t_{1,2,4}t_{3,4,5} + t_{2,3,4}t_{1,4,5} - t_{1,3,4}t_{2,4,5}").is_homogeneous());
        assert!(!poly("t123 + t124").is_homogeneous());
        assert_eq!(Monomial::all_of_degree(&Var::chart(4), 2).len(), 10);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let vars = Var::chart(5);
        prop::collection::vec((prop::collection::vec(0..vars.len(), 0..3), -3i64..4), 0..5).prop_map(move |terms| {
            MultiPoly::from_terms(terms.into_iter().map(|(idx, c)| {
                (Monomial::from_powers(idx.into_iter().map(|i| (vars[i], 1)).collect()), BigRational::from_integer(c.into()))
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(poly(&a.to_string()), a);
        }

        #[test]
        fn orders_are_total_and_multiplicative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                for (m, _) in a.terms() {
                    for (n, _) in b.terms() {
                        let ab = m.cmp_in(n, order);
                        prop_assert_eq!(ab, n.cmp_in(m, order).reverse());
                        prop_assert_eq!(ab == Ordering::Equal, m == n);
                        for (w, _) in c.terms() {
                            prop_assert_eq!(m.mul(w).cmp_in(&n.mul(w), order), ab);
                        }
                    }
                }
            }
        }
    }
}
