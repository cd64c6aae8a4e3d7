//! Coordinates of `J`, `N_k` and `SN_k` at the generic upper-triangular bracket
//! `μ(e_i, e_j) = Σ_{k>j} t_{i,j,k} e_k`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use super::poly::{MultiPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Kind {
    J,
    N,
    SN,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::J => "J",
            Kind::N => "N",
            Kind::SN => "SN",
        })
    }
}

/// One coordinate of an operator on a basis tuple (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub kind: Kind,
    pub args: Vec<usize>,
    pub coord: usize,
    pub poly: MultiPoly,
}

/// Generators of `I_{n,k}`: the `J` coordinates followed by the `N_k` ones.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    pub n: usize,
    pub k: usize,
    pub generators: Vec<Generator>,
}

impl IdealPresentation {
    pub fn polys(&self) -> Vec<MultiPoly> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }
}

type Vector = Vec<MultiPoly>;

fn is_zero(v: &Vector) -> bool {
    v.iter().all(MultiPoly::is_zero)
}

/// `μ(e_a, e_b)` for the generic bracket.
fn basis_bracket(n: usize, a: usize, b: usize) -> Vector {
    let mut out = vec![MultiPoly::zero(); n];
    if a == b {
        return out;
    }
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    for (k, slot) in out.iter_mut().enumerate().skip(hi + 1) {
        let t = MultiPoly::var(Var::new(lo as u8 + 1, hi as u8 + 1, k as u8 + 1));
        *slot = if sign > 0 { t } else { -&t };
    }
    out
}

struct Generic {
    n: usize,
    table: Vec<Vec<Vector>>,
}

impl Generic {
    fn new(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| basis_bracket(n, a, b)).collect()).collect();
        Generic { n, table }
    }

    fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = vec![MultiPoly::zero(); self.n];
        for (a, ua) in u.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let coef = ua * vb;
                for (slot, t) in out.iter_mut().zip(&self.table[a][b]) {
                    if !t.is_zero() {
                        *slot = &*slot + &(&coef * t);
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vector {
        let mut v = vec![MultiPoly::zero(); self.n];
        v[i] = MultiPoly::one();
        v
    }

    /// Nonzero `N_m(x₁,…,x_{m+1})` on basis tuples.
    fn nested(&self, m: usize) -> BTreeMap<Vec<usize>, Vector> {
        let mut layer: BTreeMap<Vec<usize>, Vector> = (0..self.n).map(|i| (vec![i], self.basis(i))).collect();
        for _ in 0..m {
            let mut next = BTreeMap::new();
            for (tuple, v) in &layer {
                for x in 0..self.n {
                    let w = self.bracket(v, &self.basis(x));
                    if !is_zero(&w) {
                        let mut t = tuple.clone();
                        t.push(x);
                        next.insert(t, w);
                    }
                }
            }
            layer = next;
        }
        layer
    }
}

/// Every nonzero coordinate of the operator, in (tuple, coordinate) order, without deduplication.
pub fn operator_polys(n: usize, k: usize, kind: Kind) -> Vec<Generator> {
    assert!(n >= 2, "n >= 2");
    let g = Generic::new(n);
    let mut values: Vec<(Vec<usize>, Vector)> = Vec::new();
    match kind {
        Kind::J => {
            for i in 0..n {
                for j in i + 1..n {
                    for l in j + 1..n {
                        let mut acc = vec![MultiPoly::zero(); n];
                        for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                            let w = g.bracket(&g.table[a][b], &g.basis(c));
                            for (s, t) in acc.iter_mut().zip(&w) {
                                *s = &*s + t;
                            }
                        }
                        values.push((vec![i, j, l], acc));
                    }
                }
            }
        }
        Kind::N => {
            assert!(k >= 1, "N_k needs k >= 1");
            values.extend(g.nested(k));
        }
        Kind::SN => {
            assert!(k >= 3, "SN_k needs k >= 3");
            let inner = g.nested(k - 2);
            for x1 in 0..n {
                for x2 in 0..n {
                    let a = &g.table[x1][x2];
                    if is_zero(a) {
                        continue;
                    }
                    for (tail, b) in &inner {
                        let mut t = vec![x1, x2];
                        t.extend_from_slice(tail);
                        values.push((t, g.bracket(a, b)));
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for (args, v) in values {
        for (coord, p) in v.into_iter().enumerate() {
            if !p.is_zero() {
                out.push(Generator { kind, args: args.clone(), coord, poly: p });
            }
        }
    }
    out
}

/// Operator coordinates with zero polynomials and scalar multiples of earlier ones removed.
pub fn generators(n: usize, k: usize, kind: Kind) -> Vec<Generator> {
    let mut seen = HashSet::new();
    operator_polys(n, k, kind).into_iter().filter(|g| seen.insert(g.poly.up_to_scalar())).collect()
}

/// `I_{n,k}`, generated by the coordinates of `J` and `N_k`.
pub fn ideal(n: usize, k: usize) -> IdealPresentation {
    let mut gens = generators(n, k, Kind::J);
    let mut seen: HashSet<MultiPoly> = gens.iter().map(|g| g.poly.up_to_scalar()).collect();
    gens.extend(generators(n, k, Kind::N).into_iter().filter(|g| seen.insert(g.poly.up_to_scalar())));
    IdealPresentation { n, k, generators: gens }
}

/// Whether two lists span the same set of lines.
pub fn same_up_to_scalar(a: &[MultiPoly], b: &[MultiPoly]) -> bool {
    let norm = |xs: &[MultiPoly]| xs.iter().map(MultiPoly::up_to_scalar).collect::<HashSet<_>>();
    norm(a) == norm(b)
}

/// Evaluates a polynomial at the structure constants of a concrete bracket.
pub fn eval_at(p: &MultiPoly, mu: &crate::lie::StructureConstants) -> BigRational {
    p.eval(|v| {
        mu.coeff(v.i as usize - 1, v.j as usize - 1, v.k as usize - 1)
            .to_rational()
            .expect("rational structure constants")
    })
}
