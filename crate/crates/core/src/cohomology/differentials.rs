//! Matrices of the differentials at `μ`.
//!
//! Maps out of Λ²g*⊗g use the cochain layout `pair_index(i, j) * n + k` for
//! columns. Maps with values in g have one row per basis tuple and output
//! coordinate: row `tuple_index * n + k`, tuples in lexicographic order.
//! Maps out of gl(g) use column `r * n + c` for `E_{rc}: e_c ↦ e_r`.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::lie::{basis_vec, bracket_right, is_zero_vec, pair_index, pairs, StructureConstants, Tensor};
use crate::linalg::{ExactMatrix, SparseVec};
use crate::scalar::Scalar;

/// `dim Λ²g*⊗g = C(n, 2) · n`.
pub fn cochain_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2 * n
}

/// Pending linear forms on the cochain space, one per output coordinate.
struct Acc {
    len: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc { len: cochain_dim(n), rows: vec![Vec::new(); n] }
    }

    fn n(&self) -> usize {
        self.rows.len()
    }

    /// `+= s · σ(u, v)` with `σ` the generic cochain.
    fn add_sigma(&mut self, u: &[Scalar], v: &[Scalar], s: &Scalar) {
        let n = self.n();
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if a == b {
                    continue;
                }
                let (p, coef) = if a < b { (pair_index(n, a, b), s * &(ua * vb)) } else { (pair_index(n, b, a), -(s * &(ua * vb))) };
                for (m, row) in self.rows.iter_mut().enumerate() {
                    row.push((p * n + m, coef.clone()));
                }
            }
        }
    }

    /// `+= s · σ(e_a, e_b)`.
    fn add_sigma_basis(&mut self, a: usize, b: usize, s: &Scalar) {
        if a == b {
            return;
        }
        let n = self.n();
        let (p, coef) = if a < b { (pair_index(n, a, b), s.clone()) } else { (pair_index(n, b, a), -s) };
        for (m, row) in self.rows.iter_mut().enumerate() {
            row.push((p * n + m, coef.clone()));
        }
    }

    /// `+= s · μ(F, v)` where `F` is a vector of forms.
    fn add_mu_right(&mut self, mu: &StructureConstants, f: &[SparseVec], v: &[Scalar], s: &Scalar) {
        for (m, fm) in f.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            // μ(e_m, v) = −μ(v, e_m)
            let w = bracket_right(mu, v, m);
            for (k, wk) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = -(s * wk);
                self.rows[k].extend(fm.entries().iter().map(|(col, x)| (*col, &c * x)));
            }
        }
    }

    /// `+= s · μ(u, F)`.
    fn add_mu_left(&mut self, mu: &StructureConstants, u: &[Scalar], f: &[SparseVec], s: &Scalar) {
        self.add_mu_right(mu, f, u, &-s);
    }

    /// `+= s · μ(F, e_x)`.
    fn add_mu_basis_right(&mut self, mu: &StructureConstants, f: &[SparseVec], x: usize, s: &Scalar) {
        for (m, fm) in f.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (k, c) in mu.basis_bracket(m, x).entries() {
                let c = s * c;
                self.rows[*k].extend(fm.entries().iter().map(|(col, v)| (*col, &c * v)));
            }
        }
    }

    fn finish(self) -> Vec<SparseVec> {
        let len = self.len;
        self.rows.into_iter().map(|r| SparseVec::from_entries(len, r).expect("cochain index")).collect()
    }
}

fn one() -> Scalar {
    Scalar::one()
}

fn minus_one() -> Scalar {
    Scalar::from_int(-1)
}

fn dense(mu: &StructureConstants, v: &SparseVec) -> Vec<Scalar> {
    v.to_dense_in(mu.field())
}

/// All tuples of `0..n` of the given length, lexicographic.
pub(crate) fn all_tuples(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(len as u32).expect("tuple count overflows");
    (0..total).map(move |mut idx| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        t
    })
}

/// `d¹α(x, y) = μ(x, αy) + μ(αx, y) − α μ(x, y)`: a `C(n,2)·n × n²` matrix.
pub fn d1_matrix(mu: &StructureConstants) -> ExactMatrix {
    let n = mu.dim();
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cochain_dim(n)];
    for (p, (x, y)) in pairs(n).enumerate() {
        for r in 0..n {
            for (k, v) in mu.basis_bracket(x, r).entries() {
                rows[p * n + k].push((r * n + y, v.clone()));
            }
            for (k, v) in mu.basis_bracket(r, y).entries() {
                rows[p * n + k].push((r * n + x, v.clone()));
            }
            for (c, v) in mu.stored_bracket(x, y).entries() {
                rows[p * n + r].push((r * n + c, -v));
            }
        }
    }
    let rows = rows.into_iter().map(|r| SparseVec::from_entries(n * n, r).expect("in range")).collect();
    ExactMatrix::from_rows(n * n, rows).expect("width n²")
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (x + 1..n).flat_map(move |y| (y + 1..n).map(move |z| (x, y, z))))
}

fn sigma_basis_forms(n: usize, a: usize, b: usize) -> Vec<SparseVec> {
    let mut acc = Acc::new(n);
    acc.add_sigma_basis(a, b, &one());
    acc.finish()
}

/// The six-term Chevalley–Eilenberg differential on 2-cochains, rows over triples `x < y < z`:
/// `[x,σ(y,z)] − [y,σ(x,z)] + [z,σ(x,y)] − σ([x,y],z) + σ([x,z],y) − σ([y,z],x)`.
pub fn d2_matrix(mu: &StructureConstants) -> ExactMatrix {
    let n = mu.dim();
    let mut rows = Vec::new();
    for (x, y, z) in triples(n) {
        let mut acc = Acc::new(n);
        acc.add_mu_left(mu, &basis_vec(n, x), &sigma_basis_forms(n, y, z), &one());
        acc.add_mu_left(mu, &basis_vec(n, y), &sigma_basis_forms(n, x, z), &minus_one());
        acc.add_mu_left(mu, &basis_vec(n, z), &sigma_basis_forms(n, x, y), &one());
        acc.add_sigma(&dense(mu, &mu.basis_bracket(x, y)), &basis_vec(n, z), &minus_one());
        acc.add_sigma(&dense(mu, &mu.basis_bracket(x, z)), &basis_vec(n, y), &one());
        acc.add_sigma(&dense(mu, &mu.basis_bracket(y, z)), &basis_vec(n, x), &minus_one());
        rows.extend(acc.finish());
    }
    ExactMatrix::from_rows(cochain_dim(n), rows).expect("cochain width")
}

/// Derivative of `J` at `μ`: `σ ↦ Σ_cyc σ(μ(x,y),z) + μ(σ(x,y),z)`, rows over `x < y < z`.
pub fn dj_matrix(mu: &StructureConstants) -> ExactMatrix {
    let n = mu.dim();
    let mut rows = Vec::new();
    for (x, y, z) in triples(n) {
        let mut acc = Acc::new(n);
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            acc.add_sigma(&dense(mu, &mu.basis_bracket(a, b)), &basis_vec(n, c), &one());
            acc.add_mu_basis_right(mu, &sigma_basis_forms(n, a, b), c, &one());
        }
        rows.extend(acc.finish());
    }
    ExactMatrix::from_rows(cochain_dim(n), rows).expect("cochain width")
}

/// Value and derivative of a left-nested word on one basis tuple.
#[derive(Clone, Debug)]
pub(crate) struct Word {
    pub value: Vec<Scalar>,
    pub deriv: Vec<SparseVec>,
}

impl Word {
    fn is_zero(&self) -> bool {
        is_zero_vec(&self.value) && self.deriv.iter().all(SparseVec::is_zero)
    }
}

/// `N_m(μ)` and `dN_m|_μ` on all tuples of length `m + 1`; tuples where both vanish are omitted.
///
/// Uses `dN_{m+1}(t, x) = μ(dN_m(t), x) + σ(N_m(t), x)`.
pub(crate) fn word_layer(mu: &StructureConstants, m: usize) -> BTreeMap<Vec<usize>, Word> {
    let n = mu.dim();
    let empty = vec![SparseVec::new(cochain_dim(n)); n];
    let mut layer: BTreeMap<Vec<usize>, Word> =
        (0..n).map(|i| (vec![i], Word { value: basis_vec(n, i), deriv: empty.clone() })).collect();
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (tuple, w) in &layer {
            for x in 0..n {
                let value = bracket_right(mu, &w.value, x);
                let mut acc = Acc::new(n);
                acc.add_mu_basis_right(mu, &w.deriv, x, &one());
                acc.add_sigma(&w.value, &basis_vec(n, x), &one());
                let word = Word { value, deriv: acc.finish() };
                if !word.is_zero() {
                    let mut t = tuple.clone();
                    t.push(x);
                    next.insert(t, word);
                }
            }
        }
        layer = next;
    }
    layer
}

fn tuple_rows(n: usize, len: usize, layer: &BTreeMap<Vec<usize>, Word>) -> Vec<SparseVec> {
    let empty = SparseVec::new(cochain_dim(n));
    let mut rows = Vec::new();
    for t in all_tuples(n, len) {
        match layer.get(&t) {
            Some(w) => rows.extend(w.deriv.iter().cloned()),
            None => rows.extend(std::iter::repeat_n(empty.clone(), n)),
        }
    }
    rows
}

/// `dN_k|_μ`, rows over all `n^{k+1}` tuples.
pub fn dnk_matrix(mu: &StructureConstants, k: usize) -> ExactMatrix {
    assert!(k >= 1, "N_k needs k >= 1");
    let n = mu.dim();
    let layer = word_layer(mu, k);
    ExactMatrix::from_rows(cochain_dim(n), tuple_rows(n, k + 1, &layer)).expect("cochain width")
}

/// The nonzero rows of `dN_k|_μ`, in matrix order.
pub fn dnk_rows(mu: &StructureConstants, k: usize) -> impl Iterator<Item = SparseVec> {
    assert!(k >= 1, "N_k needs k >= 1");
    word_layer(mu, k).into_values().flat_map(|w| w.deriv).filter(|r| !r.is_zero())
}

/// `dSN_k` on the tuple `(x₁, x₂, tail)` from the precomputed `N_{k−2}` word of `tail`:
/// `σ(A, B) + μ(σ(x₁,x₂), B) + μ(A, dB)` with `A = μ(x₁,x₂)`, `B = N_{k−2}(tail)`.
fn dsn_forms(mu: &StructureConstants, x1: usize, x2: usize, a: &[Scalar], tail: &Word) -> Vec<SparseVec> {
    let n = mu.dim();
    let mut acc = Acc::new(n);
    acc.add_sigma(a, &tail.value, &one());
    acc.add_mu_right(mu, &sigma_basis_forms(n, x1, x2), &tail.value, &one());
    acc.add_mu_left(mu, a, &tail.deriv, &one());
    acc.finish()
}

/// `dSN_k|_μ`, rows over all `n^{k+1}` tuples `(x₁, x₂, x₃, …)`.
pub fn dsnk_matrix(mu: &StructureConstants, k: usize) -> ExactMatrix {
    assert!(k >= 3, "SN_k needs k >= 3");
    let n = mu.dim();
    let tails = word_layer(mu, k - 2);
    let empty = SparseVec::new(cochain_dim(n));
    let mut rows = Vec::new();
    for x1 in 0..n {
        for x2 in 0..n {
            let a = dense(mu, &mu.basis_bracket(x1, x2));
            for t in all_tuples(n, k - 1) {
                match tails.get(&t) {
                    Some(w) if x1 != x2 => rows.extend(dsn_forms(mu, x1, x2, &a, w)),
                    _ => rows.extend(std::iter::repeat_n(empty.clone(), n)),
                }
            }
        }
    }
    ExactMatrix::from_rows(cochain_dim(n), rows).expect("cochain width")
}

/// Rows of `dSN_k|_μ` spanning its row space, produced lazily.
///
/// Only `x₁ < x₂` is visited (swapping negates a row, `x₁ = x₂` gives zero)
/// and tails where both `N_{k−2}` and its derivative vanish are skipped.
pub fn dsnk_rows(mu: &StructureConstants, k: usize) -> impl Iterator<Item = SparseVec> + '_ {
    assert!(k >= 3, "SN_k needs k >= 3");
    let n = mu.dim();
    let tails: Rc<Vec<Word>> = Rc::new(word_layer(mu, k - 2).into_values().collect());
    pairs(n).flat_map(move |(x1, x2)| {
        let a = dense(mu, &mu.basis_bracket(x1, x2));
        let tails = Rc::clone(&tails);
        (0..tails.len()).flat_map(move |i| dsn_forms(mu, x1, x2, &a, &tails[i])).filter(|r| !r.is_zero())
    })
}

fn add_scaled_vec(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = &*a + b;
        }
    }
}

/// `dN_k|_μ(σ)` on all basis tuples.
pub fn dnk_apply(mu: &StructureConstants, sigma: &StructureConstants, k: usize) -> Tensor {
    assert!(k >= 1, "N_k needs k >= 1");
    let values = apply_layer(mu, sigma, k)
        .into_iter()
        .filter(|(_, (_, d))| !is_zero_vec(d))
        .map(|(t, (_, d))| (t, d))
        .collect();
    Tensor::from_values(mu.dim(), k + 1, values)
}

/// `(N_m(μ), dN_m|_μ(σ))` on tuples of length `m + 1`, dropping tuples where both vanish.
fn apply_layer(mu: &StructureConstants, sigma: &StructureConstants, m: usize) -> BTreeMap<Vec<usize>, (Vec<Scalar>, Vec<Scalar>)> {
    let n = mu.dim();
    let mut layer: BTreeMap<Vec<usize>, (Vec<Scalar>, Vec<Scalar>)> =
        (0..n).map(|i| (vec![i], (basis_vec(n, i), vec![Scalar::zero(); n]))).collect();
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (tuple, (v, d)) in &layer {
            for x in 0..n {
                let value = bracket_right(mu, v, x);
                let mut deriv = bracket_right(mu, d, x);
                add_scaled_vec(&mut deriv, &bracket_right(sigma, v, x));
                if !is_zero_vec(&value) || !is_zero_vec(&deriv) {
                    let mut t = tuple.clone();
                    t.push(x);
                    next.insert(t, (value, deriv));
                }
            }
        }
        layer = next;
    }
    layer
}

/// `dSN_k|_μ(σ)` on all basis tuples.
pub fn dsnk_apply(mu: &StructureConstants, sigma: &StructureConstants, k: usize) -> Tensor {
    assert!(k >= 3, "SN_k needs k >= 3");
    let n = mu.dim();
    let tails = apply_layer(mu, sigma, k - 2);
    let mut values = BTreeMap::new();
    for x1 in 0..n {
        for x2 in 0..n {
            if x1 == x2 {
                continue;
            }
            let a = dense(mu, &mu.basis_bracket(x1, x2));
            let da = dense(sigma, &sigma.basis_bracket(x1, x2));
            for (tail, (b, db)) in &tails {
                let mut out = crate::lie::bracket_vv(sigma, &a, b);
                add_scaled_vec(&mut out, &crate::lie::bracket_vv(mu, &da, b));
                add_scaled_vec(&mut out, &crate::lie::bracket_vv(mu, &a, db));
                if !is_zero_vec(&out) {
                    let mut t = vec![x1, x2];
                    t.extend_from_slice(tail);
                    values.insert(t, out);
                }
            }
        }
    }
    Tensor::from_values(n, k + 1, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{jacobi, n_k, parse_table_str, sn_k};
    use crate::linalg::rank;

    fn f3() -> StructureConstants {
        parse_table_str("ab = c", 3).unwrap()
    }

    #[test]
    fn shapes() {
        let mu = parse_table_str("ab = d, ad = e, bc = e", 5).unwrap();
        assert_eq!((d1_matrix(&mu).nrows(), d1_matrix(&mu).ncols()), (50, 25));
        assert_eq!((d2_matrix(&mu).nrows(), d2_matrix(&mu).ncols()), (50, 50));
        assert_eq!(dnk_matrix(&mu, 2).nrows(), 125 * 5);
        assert_eq!(dsnk_matrix(&mu, 3).nrows(), 625 * 5);
    }

    #[test]
    fn f3_derivations() {
        assert_eq!(rank(&d1_matrix(&f3())).rank, 3);
    }

    #[test]
    fn dn1_is_identity_on_pairs() {
        let mu = f3();
        let m = dnk_matrix(&mu, 1);
        for (p, (i, j)) in pairs(3).enumerate() {
            for k in 0..3 {
                let row = &m.rows()[(i * 3 + j) * 3 + k];
                assert_eq!(row.entries(), &[(p * 3 + k, Scalar::one())]);
            }
        }
    }

    #[test]
    fn abelian_differentials_vanish() {
        let z = StructureConstants::zero(4);
        assert!(d1_matrix(&z).is_zero());
        assert!(d2_matrix(&z).is_zero());
        assert!(dj_matrix(&z).is_zero());
        assert!(dnk_matrix(&z, 2).is_zero());
        assert!(dsnk_matrix(&z, 3).is_zero());
    }

    #[test]
    fn lazy_rows_span_the_matrix() {
        let mu = parse_table_str("ab = c, ac = d, ad = e, bc = e", 5).unwrap();
        let full = rank(&dsnk_matrix(&mu, 3)).rank;
        let lazy = ExactMatrix::from_rows(cochain_dim(5), dsnk_rows(&mu, 3).collect()).unwrap();
        assert_eq!(rank(&lazy).rank, full);
        let full = rank(&dnk_matrix(&mu, 3)).rank;
        let lazy = ExactMatrix::from_rows(cochain_dim(5), dnk_rows(&mu, 3).collect()).unwrap();
        assert_eq!(rank(&lazy).rank, full);
    }

    fn flatten(t: &Tensor, n: usize) -> Vec<Scalar> {
        all_tuples(n, t.arity()).flat_map(|tuple| t.get(&tuple)).collect()
    }

    fn flatten_triples(t: &Tensor, n: usize) -> Vec<Scalar> {
        triples(n).flat_map(|(x, y, z)| t.get(&[x, y, z])).collect()
    }

    #[test]
    fn matrices_agree_with_direct_application() {
        let mu = parse_table_str("ab = c, ac = d, bc = 2d", 4).unwrap();
        let sigma = parse_table_str("ab = d - c, bd = a, cd = 3b", 4).unwrap();
        let v = sigma.to_cochain_vector();
        for k in 1..=3 {
            assert_eq!(dnk_matrix(&mu, k).mul_vec(&v).unwrap(), flatten(&dnk_apply(&mu, &sigma, k), 4));
        }
        for k in 3..=4 {
            assert_eq!(dsnk_matrix(&mu, k).mul_vec(&v).unwrap(), flatten(&dsnk_apply(&mu, &sigma, k), 4));
        }
    }

    #[test]
    fn dj_is_first_order_part_of_j() {
        // J(μ + hσ) = J(μ) + h dJ(σ) + h² J(σ)
        let mu = parse_table_str("ab = c, ac = d, bd = a", 4).unwrap();
        let sigma = parse_table_str("ab = d, cd = 2a - b, bc = c", 4).unwrap();
        let h = Scalar::from_int(3);
        let lhs = flatten_triples(&jacobi(&mu.add_scaled(&h, &sigma).unwrap()), 4);
        let dj = dj_matrix(&mu).mul_vec(&sigma.to_cochain_vector()).unwrap();
        let j0 = flatten_triples(&jacobi(&mu), 4);
        let js = flatten_triples(&jacobi(&sigma), 4);
        for (i, l) in lhs.iter().enumerate() {
            let rhs = &(&j0[i] + &(&h * &dj[i])) + &(&(&h * &h) * &js[i]);
            assert_eq!(*l, rhs);
        }
    }

    #[test]
    fn first_order_expansion_of_words() {
        // the h-linear coefficient of N_k(μ + hσ), recovered by exact interpolation
        let mu = parse_table_str("ab = c, ac = d, bc = e, ad = e", 5).unwrap();
        let sigma = parse_table_str("ab = e - d, ae = b, cd = a", 5).unwrap();
        for k in [2, 3] {
            let pts: Vec<Scalar> = (0..=k as i64).map(Scalar::from_int).collect();
            let evals: Vec<Vec<Scalar>> =
                pts.iter().map(|h| flatten(&n_k(&mu.add_scaled(h, &sigma).unwrap(), k), 5)).collect();
            let lin = linear_coefficient(&pts, &evals);
            assert_eq!(lin, flatten(&dnk_apply(&mu, &sigma, k), 5));
        }
        let k = 3;
        let pts: Vec<Scalar> = (0..=k as i64).map(Scalar::from_int).collect();
        let evals: Vec<Vec<Scalar>> =
            pts.iter().map(|h| flatten(&sn_k(&mu.add_scaled(h, &sigma).unwrap(), k), 5)).collect();
        assert_eq!(linear_coefficient(&pts, &evals), flatten(&dsnk_apply(&mu, &sigma, k), 5));
    }

    /// Coefficient of `h` in the polynomial through `(pts[i], evals[i])`, componentwise.
    fn linear_coefficient(pts: &[Scalar], evals: &[Vec<Scalar>]) -> Vec<Scalar> {
        let vander: Vec<Vec<Scalar>> = pts.iter().map(|h| (0..pts.len() as u32).map(|e| h.pow(e)).collect()).collect();
        let inv = ExactMatrix::from_dense(vander).unwrap().inverse().unwrap();
        (0..evals[0].len())
            .map(|c| {
                let col: Vec<Scalar> = evals.iter().map(|e| e[c].clone()).collect();
                inv.mul_vec(&col).unwrap()[1].clone()
            })
            .collect()
    }
}
