//! The polynomial operators on Λ²g*⊗g: Jacobi `J`, the left-nested words `N_k`,
//! and `SN_k(μ)(x₁,…,x_{k+1}) = μ(μ(x₁,x₂), N_{k−2}(μ)(x₃,…,x_{k+1}))`.

use std::collections::BTreeMap;

use super::StructureConstants;
use crate::scalar::Scalar;

/// A multilinear map `g^{⊗arity} → g` stored on basis tuples; absent tuples are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    arity: usize,
    values: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl Tensor {
    pub(crate) fn from_values(dim: usize, arity: usize, values: BTreeMap<Vec<usize>, Vec<Scalar>>) -> Self {
        Tensor { dim, arity, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on a basis tuple (0-based indices).
    pub fn get(&self, args: &[usize]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity);
        self.values.get(args).cloned().unwrap_or_else(|| vec![Scalar::zero(); self.dim])
    }

    /// Nonzero values in lexicographic tuple order.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &[Scalar])> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v.as_slice()))
    }

    pub fn nonzero_count(&self) -> usize {
        self.values.len()
    }
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub(crate) fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `μ(v, e_x)`.
pub(crate) fn bracket_right(mu: &StructureConstants, v: &[Scalar], x: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); mu.dim()];
    for (c, vc) in v.iter().enumerate() {
        if vc.is_zero() || c == x {
            continue;
        }
        let (sign, b) = if c < x { (false, mu.stored_bracket(c, x)) } else { (true, mu.stored_bracket(x, c)) };
        for (k, coef) in b.entries() {
            let term = vc * coef;
            out[*k] = if sign { &out[*k] - &term } else { &out[*k] + &term };
        }
    }
    out
}

/// `μ(u, v)` for two coordinate vectors.
pub(crate) fn bracket_vv(mu: &StructureConstants, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); mu.dim()];
    for (x, vx) in v.iter().enumerate() {
        if vx.is_zero() {
            continue;
        }
        let w = bracket_right(mu, u, x);
        for (o, wk) in out.iter_mut().zip(w) {
            if !wk.is_zero() {
                *o = &*o + &(&wk * vx);
            }
        }
    }
    out
}

pub fn jacobi(mu: &StructureConstants) -> Tensor {
    let n = mu.dim();
    let mut values = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut acc = vec![Scalar::zero(); n];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = mu.basis_bracket(a, b).to_dense_in(mu.field());
                    let outer = bracket_right(mu, &inner, c);
                    for (s, t) in acc.iter_mut().zip(outer) {
                        *s = &*s + &t;
                    }
                }
                if !is_zero_vec(&acc) {
                    values.insert(vec![i, j, k], acc);
                }
            }
        }
    }
    Tensor { dim: n, arity: 3, values }
}

pub fn is_lie(mu: &StructureConstants) -> bool {
    jacobi(mu).is_zero()
}

/// Nonzero values of `N_m(μ)` on all basis tuples of length `m + 1`; `N_0` is the identity.
pub(crate) fn nested_layer(mu: &StructureConstants, m: usize) -> BTreeMap<Vec<usize>, Vec<Scalar>> {
    let n = mu.dim();
    let mut layer: BTreeMap<Vec<usize>, Vec<Scalar>> = (0..n).map(|i| (vec![i], basis_vec(n, i))).collect();
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (tuple, v) in &layer {
            for x in 0..n {
                let w = bracket_right(mu, v, x);
                if !is_zero_vec(&w) {
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

/// `N_k(μ)(x₁,…,x_{k+1}) = μ(N_{k−1}(μ)(x₁,…,x_k), x_{k+1})`.
pub fn n_k(mu: &StructureConstants, k: usize) -> Tensor {
    assert!(k >= 1, "N_k needs k >= 1");
    Tensor { dim: mu.dim(), arity: k + 1, values: nested_layer(mu, k) }
}

/// `SN_k(μ)(x₁,…,x_{k+1}) = μ(μ(x₁,x₂), N_{k−2}(μ)(x₃,…,x_{k+1}))`.
///
/// Defined for `k ≥ 2`; `SN_2 = N_2` because `N_0` is the identity.
pub fn sn_k(mu: &StructureConstants, k: usize) -> Tensor {
    assert!(k >= 2, "SN_k needs k >= 2");
    let n = mu.dim();
    let inner = nested_layer(mu, k - 2);
    let mut values = BTreeMap::new();
    for x1 in 0..n {
        for x2 in 0..n {
            let a = mu.basis_bracket(x1, x2).to_dense_in(mu.field());
            if is_zero_vec(&a) {
                continue;
            }
            for (tail, b) in &inner {
                let w = bracket_vv(mu, &a, b);
                if !is_zero_vec(&w) {
                    let mut t = vec![x1, x2];
                    t.extend_from_slice(tail);
                    values.insert(t, w);
                }
            }
        }
    }
    Tensor { dim: n, arity: k + 1, values }
}

/// Smallest `k ≥ 1` with `N_k(μ) = 0`, searched up to `max_k`.
pub fn nilpotency_step(mu: &StructureConstants, max_k: usize) -> Option<usize> {
    if mu.is_abelian() {
        return Some(1);
    }
    let n = mu.dim();
    let mut layer = nested_layer(mu, 1);
    for k in 2..=max_k {
        let mut next = BTreeMap::new();
        for (tuple, v) in &layer {
            for x in 0..n {
                let w = bracket_right(mu, v, x);
                if !is_zero_vec(&w) {
                    let mut t = tuple.clone();
                    t.push(x);
                    next.insert(t, w);
                }
            }
        }
        if next.is_empty() {
            return Some(k);
        }
        layer = next;
    }
    None
}
