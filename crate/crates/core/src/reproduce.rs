//! Reproduction suites: each item pairs a published value with the computed one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::cohomology::{augmented_exactness, d1_matrix, d2_matrix, default_samples, dnk_apply, h2_dim, h2_knil, Constraint};
use crate::error::{CatalogError, Error, IdealError};
use crate::ideals::{self, reference, same_up_to_scalar, Kind};
use crate::lie::{
    heisenberg, heisenberg_shift_derivation, is_lie, n_k, nil_index, semidirect_by_derivation, sn_k, solvable_length,
    StructureConstants,
};
use crate::linalg::{rank, ExactMatrix, SparseVec};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dim5,
    Dim6,
    N73,
    Curves,
    Ideals,
    Counterexamples,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [Suite::Dim5, Suite::Dim6, Suite::N73, Suite::Curves, Suite::Ideals, Suite::Counterexamples];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Dim5 => "dim5",
            Suite::Dim6 => "dim6",
            Suite::N73 => "n73",
            Suite::Curves => "curves",
            Suite::Ideals => "ideals",
            Suite::Counterexamples => "counterexamples",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "dim5" => Suite::Dim5,
            "dim6" => Suite::Dim6,
            "n73" => Suite::N73,
            "curves" => Suite::Curves,
            "ideals" => Suite::Ideals,
            "counterexamples" => Suite::Counterexamples,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    ResourceCap,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproItem {
    pub id: String,
    pub expected: String,
    pub citation: String,
    pub computed: Option<String>,
    pub status: Status,
    /// Why the item was skipped or errored.
    pub note: Option<String>,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproductionReport {
    pub suite: String,
    pub pack_checksum: Option<String>,
    pub items: Vec<ReproItem>,
    pub pass: bool,
}

impl ReproductionReport {
    pub fn count(&self, s: Status) -> usize {
        self.items.iter().filter(|i| i.status == s).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for ReproductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for it in &self.items {
            let tag = match it.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
                Status::ResourceCap => "CAP ",
            };
            write!(f, "{tag} {:<34} expected {:<22}", it.id, it.expected)?;
            if let Some(c) = &it.computed {
                write!(f, " computed {c}")?;
            }
            if let Some(n) = &it.note {
                write!(f, " ({n})")?;
            }
            writeln!(f, " [{} ms]", it.wall_ms)?;
        }
        write!(
            f,
            "{}: {} pass, {} fail, {} skipped, {} capped",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.count(Status::ResourceCap)
        )
    }
}

struct Runner<'a> {
    cat: &'a Catalog,
    items: Vec<ReproItem>,
}

impl Runner<'_> {
    /// `compute` returns the rendered value; the item passes iff it equals `expected`.
    fn item<F>(&mut self, id: &str, expected: &str, citation: &str, compute: F)
    where
        F: FnOnce(&Catalog) -> Result<String, Error>,
    {
        let start = Instant::now();
        let result = compute(self.cat);
        let wall_ms = start.elapsed().as_millis() as u64;
        let (computed, status, note) = match result {
            Ok(v) => {
                let s = if v == expected { Status::Pass } else { Status::Fail };
                (Some(v), s, None)
            }
            Err(Error::Catalog(CatalogError::ExternalDataRequired(n))) => {
                (None, Status::Skipped, Some(format!("{n} needs the data pack")))
            }
            Err(Error::Ideal(IdealError::ResourceCap(m))) => (None, Status::ResourceCap, Some(m)),
            Err(e) => (None, Status::Fail, Some(e.to_string())),
        };
        self.items.push(ReproItem {
            id: id.into(),
            expected: expected.into(),
            citation: citation.into(),
            computed,
            status,
            note,
            wall_ms,
        });
    }
}

fn triple(mu: &StructureConstants, k: usize) -> Result<String, Error> {
    let r = h2_knil(mu, k)?;
    Ok(format!("({},{},{})", r.z, r.b, r.h))
}

fn at(pairs: &[(char, Scalar)]) -> BTreeMap<char, Scalar> {
    pairs.iter().cloned().collect()
}

fn flag(b: bool) -> String {
    b.to_string()
}

fn dim5(r: &mut Runner) {
    let cite = "5-dimensional list, k-step column";
    for (name, k, expect) in [
        ("f3+R2", 2, "(20,9,11)"),
        ("g_{5,1}", 2, "(10,10,0)"),
        ("g_{5,2}", 2, "(12,12,0)"),
        ("f4+R", 3, "(18,14,4)"),
        ("g_{5,3}", 3, "(17,15,2)"),
        ("g_{5,4}", 3, "(15,15,0)"),
        ("f5", 4, "(17,16,1)"),
        ("g_{5,6}", 4, "(17,17,0)"),
    ] {
        r.item(&format!("{name} in N_{{5,{k}}}"), expect, cite, |c| triple(&c.algebra(name)?, k));
    }
}

fn dim6(r: &mut Runner) {
    let cite = "rigid 6-dimensional algebras in N_{6,k}";
    for (name, k, expect) in [
        ("36", 2, "(18,18,0)"),
        ("13+13", 2, "(20,20,0)"),
        ("246_E", 3, "(26,24,2)"),
        ("136_A", 3, "(25,25,0)"),
        ("1246", 4, "(27,26,1)"),
        ("1346_C", 4, "(26,26,0)"),
        ("12346_E", 5, "(28,28,0)"),
    ] {
        r.item(&format!("{name} in N_{{6,{k}}}"), expect, cite, |c| triple(&c.algebra(name)?, k));
    }
}

fn h3_orbit(mu: &StructureConstants) -> Result<String, Error> {
    let r = h2_knil(mu, 3)?;
    Ok(format!("h={} orbit={}", r.h, r.orbit_dim))
}

/// `h_{3-nil}` of the curve at `t` and whether `∂_t μ` is independent of `Im d¹`.
fn curve_class(c: &Catalog, t: Scalar) -> Result<String, Error> {
    let name = "g_{147E_1}(t)";
    let p = at(&[('t', t)]);
    let mu = c.eval(name, &p)?;
    let h = h2_knil(&mu, 3)?.h;
    let ex = augmented_exactness(&c.family(name)?, &p, &['t'], Constraint::JN(3))?;
    Ok(format!("h={} tangent_new={}", h, ex.rank_df == ex.rank_d1 + 1))
}

fn n73(r: &mut Runner) {
    let rigid = "rigid in N_{7,3} with orbit dimensions 36, 36, 38, 38";
    for (name, orbit) in [("g_{137B}", 36), ("g_{137B_1}", 36), ("g_{247H}", 38), ("g_{247H_1}", 38)] {
        r.item(&format!("{name} h_3nil, orbit"), &format!("h=0 orbit={orbit}"), rigid, |c| h3_orbit(&c.algebra(name)?));
    }
    let one = "dim H^2_{3-nil} = 1";
    for name in ["g_{247K}", "g_{147D}", "g_{137A}", "g_{137A_1}", "g_{137D}"] {
        r.item(&format!("{name} h_3nil"), "1", one, |c| Ok(h2_knil(&c.algebra(name)?, 3)?.h.to_string()));
    }
    let wit = "isomorphism witnesses, items (1)-(4) and [GR]";
    for name in ["item1", "item2", "item3", "item4", "GR", "137B-rescale", "137B1-rescale"] {
        r.item(&format!("witness {name}"), "true", wit, |c| {
            let w = c.witness(name)?;
            let points: Vec<Option<&Scalar>> =
                if w.param.is_some() { w.samples.iter().map(Some).collect() } else { vec![None] };
            for p in points {
                if !c.verify_witness(w, p)?.ok {
                    return Ok(flag(false));
                }
            }
            Ok(flag(true))
        });
    }
    let deg = "degenerations g(0) of the curves";
    for (fam, s, v, target) in [
        ("g_{(1)}(t)", 't', 0, "g_{137D}"),
        ("g_{147E_1}(t)", 't', 1, "g_{147D}"),
        ("g_{(3)}(t)", 't', 0, "g_{247G}"),
        ("g_{(4)}(t)", 't', 0, "g_{247K}"),
        ("g_{137B}(s)", 's', 0, "g_{137A}"),
        ("g_{137B_1}(s)", 's', 0, "g_{137A_1}"),
    ] {
        r.item(&format!("{fam} at {s}={v} is {target}"), "true", deg, |c| {
            Ok(flag(c.verify_degeneration(fam, &at(&[(s, Scalar::from_int(v))]), target)?))
        });
    }
    let curve = "H^2_{3-nil}(g_{147E_1}(t)) = 1, spanned by the tangent";
    for (a, b) in [(3, 2), (2, 1), (5, 1)] {
        r.item(&format!("g_{{147E_1}}({a}/{b})"), "h=1 tangent_new=true", curve, |c| {
            curve_class(c, Scalar::from_frac(a, b))
        });
    }
    r.item("g_{147E}(2) h_3nil", "3", "dim H^2_{3-nil}(g_{147E}(2)) = 3", |c| {
        Ok(h2_knil(&c.algebra("g_{147E}(2)")?, 3)?.h.to_string())
    });
}

fn surface_samples(name: &str) -> Vec<(Scalar, Scalar)> {
    default_samples()
        .into_iter()
        .filter(|(r, t)| match name {
            "g_5(r,t)" => !(&Scalar::one() + &(r * t)).is_zero(),
            _ => !t.is_zero(),
        })
        .take(3)
        .collect()
}

fn curves(r: &mut Runner) {
    let cite = "exactness of the linearized complex with G = J + SN_5";
    for fam in ["g_5(r,t)", "g_6(r,t)"] {
        for (rv, tv) in surface_samples(fam) {
            for (label, free) in [("free r,t", &['r', 't'][..]), ("r frozen", &['t'][..])] {
                let (rv, tv) = (rv.clone(), tv.clone());
                r.item(&format!("{fam} at ({rv},{tv}) {label}"), "exact", cite, move |c| {
                    let rep = augmented_exactness(&c.family(fam)?, &at(&[('r', rv), ('t', tv)]), free, Constraint::JSN(5))?;
                    Ok(if rep.exact { "exact".into() } else { format!("rank dF {} vs ker dG {}", rep.rank_df, rep.dim_ker_dg) })
                });
            }
        }
        for t in [Scalar::one(), Scalar::from_int(2), Scalar::from_frac(-1, 3)] {
            let t2 = t.clone();
            r.item(&format!("{fam} H^2 at (0,{t})"), "9", "generic dim H^2 = 9", move |c| {
                Ok(h2_dim(&c.eval(fam, &at(&[('r', Scalar::zero()), ('t', t2)]))?)?.h.to_string())
            });
        }
        let step = if fam == "g_5(r,t)" { 5 } else { 6 };
        r.item(&format!("{fam} nilpotent iff r = 0"), &format!("step {step} at r=0, none at r=1"), "nilpotent iff r = 0", |c| {
            let s0 = nil_index(&c.eval(fam, &at(&[('r', Scalar::zero()), ('t', Scalar::from_int(2))]))?)?;
            let s1 = nil_index(&c.eval(fam, &at(&[('r', Scalar::one()), ('t', Scalar::from_int(2))]))?)?;
            Ok(format!(
                "step {} at r=0, {} at r=1",
                s0.map_or("none".into(), |s| s.to_string()),
                s1.map_or("none".into(), |s| format!("step {s}"))
            ))
        });
    }
}

fn ideals_suite(r: &mut Runner) {
    let cite = "generators of I_{n,k} and SN_k";
    let gens_of = |n, k, kind| ideals::generators(n, k, kind).into_iter().map(|g| g.poly).collect::<Vec<_>>();
    r.item("I_{5,4} = (P_1, P_2)", "true", cite, |_| {
        Ok(flag(same_up_to_scalar(&gens_of(5, 4, Kind::J), &reference::parse_all(&reference::P)) && gens_of(5, 4, Kind::N).is_empty()))
    });
    r.item("SN_3 at n=5 = (Q_1, Q_2)", "true", cite, |_| {
        Ok(flag(same_up_to_scalar(&gens_of(5, 3, Kind::SN), &reference::parse_all(&reference::Q5))))
    });
    r.item("I_{6,4} degree 2", "9 printed polynomials", cite, |_| {
        let ours = gens_of(6, 4, Kind::J);
        Ok(if same_up_to_scalar(&ours, &reference::parse_all(&reference::I64_DEGREE2)) {
            "9 printed polynomials".into()
        } else {
            format!("{} polynomials, differing", ours.len())
        })
    });
    r.item("I_{6,4} degree 4", "24 printed monomials", cite, |_| {
        let ours = gens_of(6, 4, Kind::N);
        Ok(if same_up_to_scalar(&ours, &reference::i64_degree4()) {
            "24 printed monomials".into()
        } else {
            format!("{} polynomials, differing", ours.len())
        })
    });
    let member = "Q_i in I_{6,4} for i = 1..12, Q_13^2, Q_14^2 in I_{6,4}";
    let q = reference::parse_all(&reference::Q6);
    let i64 = ideals::ideal(6, 4).polys();
    for (idx, qi) in q.iter().enumerate().take(12) {
        r.item(&format!("Q_{} in I_{{6,4}} (D=4)", idx + 1), "certified", member, |_| {
            Ok(match ideals::member_bounded(qi, &i64, 4)? {
                Some(c) if c.verify(&i64) => "certified".into(),
                _ => "no certificate".into(),
            })
        });
    }
    for idx in [12, 13] {
        let sq = q[idx].pow(2);
        r.item(&format!("Q_{}^2 in I_{{6,4}} (D=6)", idx + 1), "certified", member, |_| {
            Ok(match ideals::member_bounded(&sq, &i64, 6)? {
                Some(c) if c.verify(&i64) => "certified".into(),
                _ => "no certificate".into(),
            })
        });
    }
    let non = "Q_13, Q_14 not in I_{6,4}: I_{6,4} is not radical";
    for (idx, assignment) in [(13, reference::assignment_q14()), (12, reference::assignment_q13())] {
        let f = q[idx].clone();
        r.item(&format!("Q_{} not in I_{{6,4}}", idx + 1), "true", non, |_| {
            Ok(flag(ideals::non_membership(&f, &i64, &assignment)?.holds()))
        });
    }
}

fn heisenberg_ext(m: usize) -> StructureConstants {
    semidirect_by_derivation(&heisenberg(m), &heisenberg_shift_derivation(m)).expect("shift is a derivation")
}

fn counterexamples(r: &mut Runner) {
    let e = "12346_E lies in N_{6,5} but not in SN_{6,4}";
    r.item("12346_E step", "5", e, |c| Ok(nil_index(&c.algebra("12346_E")?)?.map_or("none".into(), |s| s.to_string())));
    r.item("12346_E SN_4(a,b,a,b,a)", "f", e, |c| {
        let mu = c.algebra("12346_E")?;
        let v = sn_k(&mu, 4).get(&[0, 1, 0, 1, 0]);
        let terms: Vec<(usize, Scalar)> = v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        Ok(crate::lie::render_vector(&terms))
    });
    r.item("12346_E N_6 = 0", "true", e, |c| Ok(flag(n_k(&c.algebra("12346_E")?, 6).is_zero())));
    let h = "RD x h_m is (m+1)-step of dimension 2m+2 with SN_m != 0";
    for m in [2usize, 3] {
        r.item(&format!("RD x h_{m}"), &format!("dim {} step {} SN_{m} nonzero", 2 * m + 2, m + 1), h, move |_| {
            let mu = heisenberg_ext(m);
            let step = nil_index(&mu)?.map_or("none".into(), |s| s.to_string());
            let sn = if sn_k(&mu, m).is_zero() { "zero" } else { "nonzero" };
            Ok(format!("dim {} step {step} SN_{m} {sn}", mu.dim()))
        });
    }
    let nu = "g_{5,3} is rigid in N_{5,3} with H^2_{3-nil} = span{nu_1, nu_2}";
    r.item("nu_i in Ker d2 and Ker dN_3", "true", nu, |c| {
        let mu = c.algebra("g_{5,3}")?;
        let d2 = d2_matrix(&mu);
        let mut ok = true;
        for v in [c.nu1(), c.nu2()] {
            ok &= d2.mul_vec(&v.to_cochain_vector())?.iter().all(Scalar::is_zero);
            ok &= dnk_apply(&mu, &v, 3).is_zero();
        }
        Ok(flag(ok))
    });
    r.item("nu_1, nu_2 independent mod Im d1", "rank +2", nu, |c| {
        let mu = c.algebra("g_{5,3}")?;
        let d1t = d1_matrix(&mu).transpose();
        let base = rank(&d1t).rank;
        let mut rows = d1t.rows().to_vec();
        for v in [c.nu1(), c.nu2()] {
            rows.push(SparseVec::from_dense(&v.to_cochain_vector()));
        }
        let all = rank(&ExactMatrix::from_rows(d1t.ncols(), rows)?).rank;
        Ok(format!("rank +{}", all - base))
    });
    r.item("mu + t nu_i Lie for all t", "true", nu, |c| {
        let mu = c.algebra("g_{5,3}")?;
        let mut ok = true;
        for v in [c.nu1(), c.nu2()] {
            for t in 1..=3 {
                ok &= is_lie(&mu.add_scaled(&Scalar::from_int(t), &v)?);
            }
        }
        Ok(flag(ok))
    });
    r.item("mu + nu_i solvable, not nilpotent", "true", nu, |c| {
        let mu = c.algebra("g_{5,3}")?;
        let mut ok = true;
        for v in [c.nu1(), c.nu2()] {
            let d = mu.add_scaled(&Scalar::one(), &v)?;
            ok &= solvable_length(&d)?.is_some() && nil_index(&d)?.is_none();
        }
        Ok(flag(ok))
    });
}

/// Runs a suite against the catalog; `all` is the concatenation of the others.
pub fn run(suite: Suite, cat: &Catalog) -> ReproductionReport {
    let mut r = Runner { cat, items: Vec::new() };
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    for p in parts {
        match p {
            Suite::Dim5 => dim5(&mut r),
            Suite::Dim6 => dim6(&mut r),
            Suite::N73 => n73(&mut r),
            Suite::Curves => curves(&mut r),
            Suite::Ideals => ideals_suite(&mut r),
            Suite::Counterexamples => counterexamples(&mut r),
            Suite::All => unreachable!(),
        }
    }
    let pass = r.items.iter().all(|i| matches!(i.status, Status::Pass | Status::Skipped));
    ReproductionReport {
        suite: suite.to_string(),
        pack_checksum: cat.pack_checksum().map(str::to_string),
        items: r.items,
        pass,
    }
}
