//! Published generator lists and restrictions, kept as text for comparison.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{poly, MultiPoly, Var};

/// `I_{5,4}`.
pub const P: [&str; 2] = ["t_{1,2,3}t_{3,4,5}", "t_{1,2,4}t_{3,4,5} + t_{2,3,4}t_{1,4,5} - t_{1,3,4}t_{2,4,5}"];

/// `SN_3` at `n = 5`.
pub const Q5: [&str; 2] = ["t_{1,2,3}t_{1,3,4}t_{3,4,5}", "t_{1,2,3}t_{2,3,4}t_{3,4,5}"];

/// Degree-2 generators of `I_{6,4}` as printed (nine entries).
pub const I64_DEGREE2: [&str; 9] = [
    "t_{1,2,3}t_{3,4,5}",
    "t_{1,3,4}t_{4,5,6}",
    "t_{2,3,4}t_{4,5,6}",
    "t_{1,2,3}t_{3,5,6}+t_{1,2,4}t_{4,5,6}",
    "t_{1,2,4}t_{3,4,5}+t_{2,3,4}t_{1,4,5}-t_{1,3,4}t_{2,4,5}",
    "t_{1,3,5}t_{4,5,6}+t_{3,4,5}t_{1,5,6}-t_{1,4,5}t_{3,5,6}",
    "t_{2,3,5}t_{4,5,6}+t_{3,4,5}t_{2,5,6}-t_{2,4,5}t_{3,5,6}",
    "t_{1,2,3}t_{3,4,6}-t_{1,2,5}t_{4,5,6}-t_{2,4,5}t_{1,5,6}+t_{1,4,5}t_{2,5,6}",
    "t_{1,2,4}t_{3,4,6}+t_{2,3,4}t_{1,4,6}-t_{1,3,4}t_{2,4,6}+t_{1,2,5}t_{3,5,6}+t_{2,3,5}t_{1,5,6}-t_{1,3,5}t_{2,5,6}",
];

/// Degree-4 generators of `I_{6,4}`: `t_{1,2,3} t_{a,3,4} t_{b,4,5} t_{c,5,6}` with
/// `a ∈ {1,2}`, `b ∈ {1,2,3}`, `c ∈ {1,2,3,4}`.
pub fn i64_degree4() -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for b in 1..=3 {
        for c in 1..=4 {
            for a in 1..=2 {
                out.push(poly(&format!("t_{{1,2,3}}t_{{{a},3,4}}t_{{{b},4,5}}t_{{{c},5,6}}")));
            }
        }
    }
    out
}

/// `SN_3` at `n = 6`, `Q_1 … Q_14`.
pub const Q6: [&str; 14] = [
    "t_{1,2,3}t_{1,3,4}t_{3,4,5}",
    "t_{1,2,3}t_{2,3,4}t_{3,4,5}",
    "t_{1,3,4}t_{1,4,5}t_{4,5,6}",
    "t_{1,3,4}t_{2,4,5}t_{4,5,6}",
    "t_{1,3,4}t_{3,4,5}t_{4,5,6}",
    "t_{1,4,5}t_{2,3,4}t_{4,5,6}",
    "t_{2,3,4}t_{2,4,5}t_{4,5,6}",
    "t_{2,3,4}t_{3,4,5}t_{4,5,6}",
    "(t_{1,3,4}t_{2,3,5} - t_{1,3,5}t_{2,3,4})t_{4,5,6}",
    "t_{1,2,3}t_{1,4,5}t_{3,5,6} + t_{1,2,4}t_{1,4,5}t_{4,5,6}",
    "t_{1,2,3}t_{2,4,5}t_{3,5,6} + t_{1,2,4}t_{2,4,5}t_{4,5,6}",
    "t_{1,2,3}t_{3,4,5}t_{3,5,6} + t_{1,2,4}t_{3,4,5}t_{4,5,6}",
    "t_{1,2,3}t_{1,3,4}t_{3,4,6} + t_{1,2,3}t_{1,3,5}t_{3,5,6} + t_{1,2,4}t_{1,3,5}t_{4,5,6} - t_{1,2,5}t_{1,3,4}t_{4,5,6}",
    "t_{1,2,3}t_{2,3,4}t_{3,4,6} + t_{1,2,3}t_{2,3,5}t_{3,5,6} + t_{1,2,4}t_{2,3,5}t_{4,5,6} - t_{1,2,5}t_{2,3,4}t_{4,5,6}",
];

/// Generators of `I_{6,4}` after the restriction used for `Q_14`.
pub const RESTRICTED: [&str; 2] = ["t_{1,2,3}t_{2,3,4}t_{2,4,5}t_{1,5,6}", "t_{1,2,3}t_{3,4,6}-t_{2,4,5}t_{1,5,6}"];

/// Image of `Q_14` under that restriction.
pub const Q14_RESTRICTED: &str = "t_{1,2,3}t_{2,3,4}t_{3,4,6}";

const ZEROS_Q14: [(u8, u8, u8); 9] =
    [(1, 2, 4), (1, 3, 4), (1, 4, 5), (1, 4, 6), (2, 3, 5), (2, 5, 6), (3, 4, 5), (3, 5, 6), (4, 5, 6)];

fn zeros(vars: impl IntoIterator<Item = (u8, u8, u8)>) -> BTreeMap<Var, BigRational> {
    vars.into_iter().map(|(i, j, k)| (Var::new(i, j, k), BigRational::zero())).collect()
}

/// The variables set to zero to exhibit `Q_14 ∉ I_{6,4}`.
pub fn assignment_q14() -> BTreeMap<Var, BigRational> {
    zeros(ZEROS_Q14)
}

/// The `Q_14` restriction with only `t_{1,3,4}` replaced by `t_{2,3,4}`.
///
/// Under it `Q_13` becomes `t_{1,2,3}t_{1,3,4}t_{3,4,6}`, which does lie in the
/// restricted ideal, so this variant certifies nothing.
pub fn assignment_q13_literal() -> BTreeMap<Var, BigRational> {
    zeros(ZEROS_Q14.into_iter().map(|v| if v == (1, 3, 4) { (2, 3, 4) } else { v }))
}

/// Image of the `Q_14` restriction under `e_1 ↔ e_2`, which exchanges `Q_13` and `Q_14`.
pub fn assignment_q13() -> BTreeMap<Var, BigRational> {
    let swap = |x: u8| match x {
        1 => 2,
        2 => 1,
        o => o,
    };
    zeros(ZEROS_Q14.into_iter().map(|(i, j, k)| {
        let (a, b) = (swap(i), swap(j));
        (a.min(b), a.max(b), k)
    }))
}

pub fn parse_all(list: &[&str]) -> Vec<MultiPoly> {
    list.iter().map(|s| poly(s)).collect()
}
