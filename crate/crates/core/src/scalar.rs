//! Exact scalars: rationals and Gaussian rationals `a + b i`.
//!
//! Arithmetic between a rational and a Gaussian rational promotes to the
//! Gaussian variant. The reverse direction only happens through
//! [`Scalar::to_rational`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseScalarError;

/// Which field a scalar (or a whole matrix, or an algebra) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Qi")]
    Gaussian,
}

impl Field {
    pub fn join(self, other: Field) -> Field {
        if self == Field::Gaussian || other == Field::Gaussian {
            Field::Gaussian
        } else {
            Field::Rational
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Field::Rational => "Q",
            Field::Gaussian => "Qi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// `re + im * i`
    Gaussian(BigRational, BigRational),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn i() -> Self {
        Scalar::Gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar::Gaussian(re, im)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Gaussian(..) => Field::Gaussian,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(re, im) => re.is_zero() && im.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Gaussian(re, im) => re.is_one() && im.is_zero(),
        }
    }

    /// Promote to the given field (a no-op when already there).
    pub fn promote(self, field: Field) -> Self {
        match (self, field) {
            (Scalar::Rational(r), Field::Gaussian) => Scalar::Gaussian(r, BigRational::zero()),
            (s, _) => s,
        }
    }

    /// Explicit coercion back to a rational; `None` if the imaginary part is nonzero.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Gaussian(re, im) if im.is_zero() => Some(re.clone()),
            Scalar::Gaussian(..) => None,
        }
    }

    /// Value equality across fields: `Rational(1) == Gaussian(1, 0)`.
    pub fn value_eq(&self, other: &Scalar) -> bool {
        (self - other).is_zero()
    }

    fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Scalar::Rational(r) => (r.clone(), BigRational::zero()),
            Scalar::Gaussian(re, im) => (re.clone(), im.clone()),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.clone()),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(re.clone(), -im),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Gaussian(re, im) => {
                let norm = re * re + im * im;
                Scalar::Gaussian(re / &norm, -(im / &norm))
            }
        })
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one().promote(self.field());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Total number of bits in the numerators and denominators.
    pub fn bit_size(&self) -> u64 {
        fn bits(r: &BigRational) -> u64 {
            r.numer().bits() + r.denom().bits()
        }
        match self {
            Scalar::Rational(r) => bits(r),
            Scalar::Gaussian(re, im) => bits(re) + bits(im),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Scalar::Gaussian(a + c, b + d)
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Scalar::Gaussian(a - c, b - d)
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Scalar::Gaussian(&a * &c - &b * &d, a * d + b * c)
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the integer types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(-re, -im),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&fmt_rational(r)),
            Scalar::Gaussian(re, im) => {
                let sign = if im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{} i", fmt_rational(re), sign, fmt_rational(&im.abs()))
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let s = s.trim();
    let bad = || ParseScalarError(s.to_string());
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
    };
    Ok(r)
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p`, `p/q`, and `p/q+r/s i` / `p/q-r/s i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(body) = t.strip_suffix('i') {
            let body = body.trim_end();
            // split at the sign separating real and imaginary parts (skip a leading sign)
            let split = body
                .char_indices()
                .skip(1)
                .filter(|&(_, c)| c == '+' || c == '-')
                .last()
                .map(|(idx, _)| idx)
                .ok_or_else(|| ParseScalarError(s.to_string()))?;
            let re = parse_rational(&body[..split])?;
            let im_str = body[split..].replace(' ', "");
            let im_str = im_str.strip_prefix('+').unwrap_or(&im_str);
            let im = parse_rational(im_str)?;
            return Ok(Scalar::Gaussian(re, im));
        }
        parse_rational(t).map(Scalar::Rational)
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
