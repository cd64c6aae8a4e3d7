//! Buchberger's algorithm for small ideals, with hard caps.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::poly::{MonomialOrder, MultiPoly, Var};
use crate::error::IdealError;

#[derive(Clone, Copy, Debug)]
pub struct GroebnerCaps {
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_pairs: usize,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps { max_basis: 200, max_degree: 24, max_pairs: 20_000 }
    }
}

/// Fully reduced remainder of `f` on division by `basis`.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let leads: Vec<_> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.clone(), g)))
        .collect();
    let mut p = f.clone();
    let mut rem = MultiPoly::zero();
    while let Some((m, c)) = p.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().find_map(|(lm, lc, g)| lm.quotient_of(&m).map(|q| (q, lc, g))) {
            Some((q, lc, g)) => p = &p - &g.mul_term(&q, &(&c / lc)),
            None => {
                rem.add_term(m.clone(), c.clone());
                p.add_term(m, -c);
            }
        }
    }
    rem
}

fn s_poly(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (fm, fc) = f.leading(order).expect("nonzero");
    let (gm, gc) = g.leading(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = fm.quotient_of(&l).expect("divides lcm");
    let b = gm.quotient_of(&l).expect("divides lcm");
    &f.mul_term(&a, &fc.recip()) - &g.mul_term(&b, &gc.recip())
}

/// Reduced Gröbner basis; aborts with `ResourceCap` rather than running unbounded.
pub fn groebner_small(gens: &[MultiPoly], order: MonomialOrder, caps: GroebnerCaps) -> Result<Vec<MultiPoly>, IdealError> {
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > caps.max_pairs {
            return Err(IdealError::ResourceCap(format!("more than {} S-pairs", caps.max_pairs)));
        }
        let (mi, _) = basis[i].leading(order).expect("nonzero");
        let (mj, _) = basis[j].leading(order).expect("nonzero");
        if mi.is_coprime(mj) {
            continue;
        }
        let r = normal_form(&s_poly(&basis[i], &basis[j], order), &basis, order);
        if r.is_zero() {
            continue;
        }
        if r.degree().unwrap_or(0) > caps.max_degree {
            return Err(IdealError::ResourceCap(format!("basis element of degree > {}", caps.max_degree)));
        }
        if basis.len() >= caps.max_basis {
            return Err(IdealError::ResourceCap(format!("more than {} basis elements", caps.max_basis)));
        }
        let k = basis.len();
        basis.push(r.monic(order));
        pairs.extend((0..k).map(|i| (i, k)));
    }
    // minimal, then reduced
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let (m, _) = g.leading(order).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            let (hm, _) = h.leading(order).expect("nonzero");
            o != idx && hm.divides(m) && (hm != m || o < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<MultiPoly> =
            minimal.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, g)| g.clone()).collect();
        let (m, c) = minimal[idx].leading(order).map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let mut tail = minimal[idx].clone();
        tail.add_term(m.clone(), -c.clone());
        let mut g = normal_form(&tail, &others, order);
        g.add_term(m, c);
        reduced.push(g.monic(order));
    }
    reduced.sort_by(|a, b| {
        let (am, _) = a.leading(order).expect("nonzero");
        let (bm, _) = b.leading(order).expect("nonzero");
        am.cmp_in(bm, order)
    });
    Ok(reduced)
}

/// Evidence that `f ∉ (gens)`: after applying `assignment` to everything, `f` has a
/// nonzero normal form modulo a Gröbner basis of the restricted ideal.
#[derive(Clone, Debug)]
pub struct NonMembership {
    pub restricted_target: MultiPoly,
    pub restricted_basis: Vec<MultiPoly>,
    pub normal_form: MultiPoly,
}

impl NonMembership {
    pub fn holds(&self) -> bool {
        !self.normal_form.is_zero()
    }
}

/// Substitution is a ring map, so membership survives it; a nonzero normal form of
/// the image therefore proves non-membership. A zero normal form proves nothing.
pub fn non_membership(
    f: &MultiPoly,
    gens: &[MultiPoly],
    assignment: &BTreeMap<Var, BigRational>,
) -> Result<NonMembership, IdealError> {
    let order = MonomialOrder::Grevlex;
    let target = f.substitute(assignment);
    let restricted: Vec<MultiPoly> = gens.iter().map(|g| g.substitute(assignment)).filter(|g| !g.is_zero()).collect();
    let basis = groebner_small(&restricted, order, GroebnerCaps::default())?;
    let nf = normal_form(&target, &basis, order);
    Ok(NonMembership { restricted_target: target, restricted_basis: basis, normal_form: nf })
}
