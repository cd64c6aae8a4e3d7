//! Ideal membership by one exact linear system in the multiplier coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::poly::{Monomial, MultiPoly, Var};
use crate::error::IdealError;
use crate::linalg::{solve, ExactMatrix, SparseVec};
use crate::scalar::Scalar;

/// Unknown multiplier coefficients allowed in a single linear system.
pub const MAX_UNKNOWNS: usize = 400_000;

/// `Σ multipliers[j]·gens[j] = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub target: MultiPoly,
    pub multipliers: Vec<MultiPoly>,
    pub degree_bound: u32,
}

#[derive(Serialize)]
struct CertificateJson {
    target: String,
    degree_bound: u32,
    multipliers: Vec<(usize, String)>,
}

impl MembershipCertificate {
    /// Re-checks the identity by polynomial arithmetic.
    pub fn verify(&self, gens: &[MultiPoly]) -> bool {
        if self.multipliers.len() != gens.len() {
            return false;
        }
        let mut sum = MultiPoly::zero();
        for (m, g) in self.multipliers.iter().zip(gens) {
            if let (Some(dm), Some(dg)) = (m.degree(), g.degree()) {
                if dm + dg > self.degree_bound {
                    return false;
                }
            }
            sum = &sum + &(m * g);
        }
        sum == self.target
    }

    /// Nonzero multipliers as `(generator index, polynomial)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.multipliers.iter().enumerate().filter(|(_, m)| !m.is_zero())
    }

    pub fn to_json(&self) -> String {
        let j = CertificateJson {
            target: self.target.to_string(),
            degree_bound: self.degree_bound,
            multipliers: self.nonzero().map(|(i, m)| (i, m.to_string())).collect(),
        };
        serde_json::to_string(&j).expect("serializable")
    }
}

type Weight = BTreeMap<u8, i64>;

/// Monomials in `vars` grouped by (degree, weight), built on demand.
struct MonomialIndex {
    vars: Vec<Var>,
    by_degree: HashMap<u32, HashMap<Weight, Vec<Monomial>>>,
}

impl MonomialIndex {
    fn get(&mut self, degree: u32, weight: &Weight) -> &[Monomial] {
        let vars = &self.vars;
        let groups = self.by_degree.entry(degree).or_insert_with(|| {
            let mut g: HashMap<Weight, Vec<Monomial>> = HashMap::new();
            for m in Monomial::all_of_degree(vars, degree) {
                g.entry(m.weight()).or_default().push(m);
            }
            g
        });
        groups.get(weight).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn sub_weight(a: &Weight, b: &Weight) -> Weight {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(*k).or_insert(0) -= v;
    }
    out.retain(|_, x| *x != 0);
    out
}

/// Solves `Σ c_u · u = target` over the candidate products `u = m·g_j`.
fn solve_products(
    target: &MultiPoly,
    unknowns: &[(usize, Monomial)],
    gens: &[MultiPoly],
) -> Result<Option<Vec<MultiPoly>>, IdealError> {
    if unknowns.len() > MAX_UNKNOWNS {
        return Err(IdealError::ResourceCap(format!("{} multiplier coefficients", unknowns.len())));
    }
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (col, (j, m)) in unknowns.iter().enumerate() {
        for (gm, c) in gens[*j].terms() {
            let prod = m.mul(gm);
            let r = *row_of.entry(prod).or_insert_with(|| {
                rows.push(Vec::new());
                rows.len() - 1
            });
            rows[r].push((col, Scalar::from(c.clone())));
        }
    }
    let mut rhs = vec![Scalar::zero(); rows.len()];
    for (m, c) in target.terms() {
        match row_of.get(m) {
            Some(&r) => rhs[r] = Scalar::from(c.clone()),
            None => return Ok(None),
        }
    }
    let ncols = unknowns.len();
    let rows = rows
        .into_iter()
        .map(|r| SparseVec::from_entries(ncols, r).expect("column in range"))
        .collect();
    let a = ExactMatrix::from_rows(ncols, rows).expect("row width");
    let Some(x) = solve(&a, &rhs).expect("consistent shapes") else { return Ok(None) };
    let mut mult = vec![MultiPoly::zero(); gens.len()];
    for ((j, m), v) in unknowns.iter().zip(x) {
        if !v.is_zero() {
            let c = v.to_rational().expect("rational system");
            mult[*j].add_term(m.clone(), c);
        }
    }
    Ok(Some(mult))
}

/// Searches for multipliers with `deg(m_j·g_j) ≤ bound`.
///
/// For homogeneous generators (true of `J`, `N_k`, `SN_k` in the upper-triangular
/// chart) each homogeneous component of `f` is solved separately with multipliers
/// of the matching degree and weight; this loses nothing, since the components
/// of any certificate are again certificates. `None` means no certificate exists
/// within the bound, not that `f` is outside the ideal.
pub fn member_bounded(
    f: &MultiPoly,
    gens: &[MultiPoly],
    bound: u32,
) -> Result<Option<MembershipCertificate>, IdealError> {
    let zero = MembershipCertificate { target: f.clone(), multipliers: vec![MultiPoly::zero(); gens.len()], degree_bound: bound };
    if f.is_zero() {
        return Ok(Some(zero));
    }
    if f.degree().expect("nonzero") > bound {
        return Ok(None);
    }
    let vars: Vec<Var> = gens.iter().flat_map(MultiPoly::variables).chain(f.variables()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut index = MonomialIndex { vars, by_degree: HashMap::new() };
    let graded = gens.iter().all(MultiPoly::is_homogeneous);
    let mut total = vec![MultiPoly::zero(); gens.len()];

    let components: Vec<MultiPoly> =
        if graded { f.homogeneous_parts().into_values().collect() } else { vec![f.clone()] };
    for part in components {
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        if graded {
            let (m0, _) = part.terms().next().expect("nonzero component");
            let (d, w) = (m0.degree(), m0.weight());
            for (j, g) in gens.iter().enumerate() {
                let Some((gm, _)) = g.terms().next() else { continue };
                let dg = gm.degree();
                if dg > d {
                    continue;
                }
                let wm = sub_weight(&w, &gm.weight());
                unknowns.extend(index.get(d - dg, &wm).iter().map(|m| (j, m.clone())));
            }
        } else {
            for (j, g) in gens.iter().enumerate() {
                let Some(dg) = g.degree() else { continue };
                for dm in 0..=bound.saturating_sub(dg) {
                    if dg + dm > bound {
                        break;
                    }
                    let vars = index.vars.clone();
                    unknowns.extend(Monomial::all_of_degree(&vars, dm).into_iter().map(|m| (j, m)));
                    if unknowns.len() > MAX_UNKNOWNS {
                        return Err(IdealError::ResourceCap(format!("more than {MAX_UNKNOWNS} multiplier coefficients")));
                    }
                }
            }
        }
        match solve_products(&part, &unknowns, gens)? {
            Some(mult) => {
                for (t, m) in total.iter_mut().zip(mult) {
                    *t = &*t + &m;
                }
            }
            None => return Ok(None),
        }
    }
    let cert = MembershipCertificate { target: f.clone(), multipliers: total, degree_bound: bound };
    assert!(cert.verify(gens), "membership certificate failed to verify");
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::poly::poly;

    #[test]
    fn zero_and_trivial() {
        let gens = vec![poly("t123 t345")];
        let c = member_bounded(&MultiPoly::zero(), &gens, 2).unwrap().unwrap();
        assert!(c.multipliers.iter().all(MultiPoly::is_zero));
        let c = member_bounded(&poly("t123 t134 t345"), &gens, 3).unwrap().unwrap();
        assert_eq!(c.multipliers[0], poly("t134"));
        assert!(member_bounded(&poly("t123 t134 t345"), &gens, 2).unwrap().is_none());
        assert!(member_bounded(&poly("t123 t134"), &gens, 5).unwrap().is_none());
    }

    #[test]
    fn inhomogeneous_generators() {
        let gens = vec![poly("t123 - 1"), poly("t124")];
        let c = member_bounded(&poly("t123 t124 + t123 - 1"), &gens, 2).unwrap().unwrap();
        assert!(c.verify(&gens));
        assert!(member_bounded(&poly("1"), &[poly("t123")], 3).unwrap().is_none());
    }

    #[test]
    fn tampered_certificate_fails() {
        let gens = vec![poly("t123 t345")];
        let mut c = member_bounded(&poly("2 t123 t345"), &gens, 2).unwrap().unwrap();
        assert!(c.verify(&gens));
        c.multipliers[0] = poly("1");
        assert!(!c.verify(&gens));
        assert!(c.to_json().starts_with(r#"{"target":"2*t_{1,2,3}*t_{3,4,5}""#));
    }
}
