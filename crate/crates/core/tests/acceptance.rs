//! Acceptance criteria 1–11, one line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. Time limits
//! are pinned per criterion; exceeding one is a failure.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilrigid::catalog::Catalog;
use nilrigid::error::CatalogError;
use nilrigid::cohomology::{
    augmented_exactness, d1_matrix, d2_matrix, default_samples, dj_matrix, dnk_apply, dsnk_apply, h2_dim, h2_knil,
    Constraint,
};
use nilrigid::ideals::{self, generators, ideal, member_bounded, non_membership, reference, same_up_to_scalar, Kind};
use nilrigid::lie::{
    derived_series, heisenberg, heisenberg_shift_derivation, is_lie, lower_central_series, n_k, nil_index,
    semidirect_by_derivation, sn_k, solvable_length, Tensor,
};
use nilrigid::linalg::{rank, SparseVec};
use nilrigid::{ExactMatrix, Scalar, StructureConstants};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn pt(pairs: &[(char, Scalar)]) -> BTreeMap<char, Scalar> {
    pairs.iter().cloned().collect()
}

fn triple(mu: &StructureConstants, k: usize) -> Result<(usize, usize, usize), String> {
    let r = h2_knil(mu, k).map_err(e)?;
    Ok((r.z, r.b, r.h))
}

fn c1_dim5(cat: &Catalog) -> Outcome {
    let table = [
        ("f3+R2", 2, (20, 9, 11)),
        ("g_{5,1}", 2, (10, 10, 0)),
        ("g_{5,2}", 2, (12, 12, 0)),
        ("f4+R", 3, (18, 14, 4)),
        ("g_{5,3}", 3, (17, 15, 2)),
        ("g_{5,4}", 3, (15, 15, 0)),
        ("f5", 4, (17, 16, 1)),
        ("g_{5,6}", 4, (17, 17, 0)),
    ];
    for (name, k, want) in table {
        let mu = cat.algebra(name).map_err(e)?;
        ensure(nil_index(&mu).map_err(e)? == Some(k), format!("{name} is not {k}-step"))?;
        let got = triple(&mu, k)?;
        ensure(got == want, format!("{name}: {got:?} != {want:?}"))?;
    }
    Ok("8/8 triples match".into())
}

fn c2_nu(cat: &Catalog) -> Outcome {
    let mu = cat.algebra("g_{5,3}").map_err(e)?;
    let nus = [cat.nu1(), cat.nu2()];
    let d2 = d2_matrix(&mu);
    for v in &nus {
        ensure(d2.mul_vec(&v.to_cochain_vector()).map_err(e)?.iter().all(Scalar::is_zero), "nu not in Ker d2")?;
        ensure(dnk_apply(&mu, v, 3).is_zero(), "nu not in Ker dN_3")?;
    }
    let d1t = d1_matrix(&mu).transpose();
    let base = rank(&d1t).rank;
    let mut rows = d1t.rows().to_vec();
    rows.extend(nus.iter().map(|v| SparseVec::from_dense(&v.to_cochain_vector())));
    let all = rank(&ExactMatrix::from_rows(d1t.ncols(), rows).map_err(e)?).rank;
    ensure(all == base + 2, format!("rank grows by {} not 2", all - base))?;
    for v in &nus {
        // J(μ + tν) has degree 2 in t: three zeros make it vanish identically
        for t in 1..=3 {
            ensure(is_lie(&mu.add_scaled(&Scalar::from_int(t), v).map_err(e)?), format!("Jacobi fails at t={t}"))?;
        }
        let one = mu.add_scaled(&Scalar::one(), v).map_err(e)?;
        ensure(solvable_length(&one).map_err(e)?.is_some(), "mu + nu not solvable")?;
        ensure(nil_index(&one).map_err(e)?.is_none(), "mu + nu nilpotent")?;
    }
    Ok(format!("rank Im d1 {base} -> {all}; Jacobi at t=1,2,3; t=1 solvable, not nilpotent"))
}

fn c3_12346e(cat: &Catalog) -> Outcome {
    let mu = cat.algebra("12346_E").map_err(e)?;
    ensure(nil_index(&mu).map_err(e)? == Some(5), "not 5-step")?;
    let v = sn_k(&mu, 4).get(&[0, 1, 0, 1, 0]);
    let f: Vec<Scalar> = (0..6).map(|i| if i == 5 { Scalar::one() } else { Scalar::zero() }).collect();
    ensure(v.iter().zip(&f).all(|(a, b)| a.value_eq(b)), "SN_4(a,b,a,b,a) != f")?;
    ensure(n_k(&mu, 6).is_zero(), "N_6 != 0")?;
    let t = triple(&mu, 5)?;
    ensure(t == (28, 28, 0), format!("{t:?}"))?;
    Ok("5-step, SN_4(a,b,a,b,a) = f, N_6 = 0, (28,28,0)".into())
}

fn c4_heisenberg() -> Outcome {
    for m in [2usize, 3] {
        let mu = semidirect_by_derivation(&heisenberg(m), &heisenberg_shift_derivation(m)).map_err(e)?;
        ensure(mu.dim() == 2 * m + 2, format!("m={m}: dim {}", mu.dim()))?;
        ensure(nil_index(&mu).map_err(e)? == Some(m + 1), format!("m={m}: wrong step"))?;
        ensure(!sn_k(&mu, m).is_zero(), format!("m={m}: SN_m = 0"))?;
    }
    Ok("m=2: dim 6, 3-step; m=3: dim 8, 4-step; SN_m != 0".into())
}

fn polys(gs: &[ideals::Generator]) -> Vec<ideals::MultiPoly> {
    gs.iter().map(|g| g.poly.clone()).collect()
}

fn c5_generators() -> Outcome {
    ensure(same_up_to_scalar(&polys(&generators(5, 4, Kind::J)), &reference::parse_all(&reference::P)), "I_{5,4}")?;
    ensure(generators(5, 4, Kind::N).is_empty(), "N_4 at n=5 nonzero")?;
    ensure(same_up_to_scalar(&polys(&generators(5, 3, Kind::SN)), &reference::parse_all(&reference::Q5)), "SN_3")?;
    let deg2 = polys(&generators(6, 4, Kind::J));
    ensure(same_up_to_scalar(&deg2, &reference::parse_all(&reference::I64_DEGREE2)), "I_{6,4} degree 2")?;
    let deg4 = polys(&generators(6, 4, Kind::N));
    ensure(same_up_to_scalar(&deg4, &reference::i64_degree4()), "I_{6,4} degree 4")?;
    Ok(format!("{{P1,P2}}, {{Q1,Q2}}, I_{{6,4}}: {} quadrics (printed list has 9), {} quartics", deg2.len(), deg4.len()))
}

fn c6_membership() -> Outcome {
    let gens = ideal(6, 4).polys();
    let q = reference::parse_all(&reference::Q6);
    for (i, qi) in q.iter().enumerate().take(12) {
        let c = member_bounded(qi, &gens, 4).map_err(e)?.ok_or(format!("Q_{} not certified", i + 1))?;
        ensure(c.verify(&gens), format!("Q_{} certificate invalid", i + 1))?;
    }
    for i in [12, 13] {
        let c = member_bounded(&q[i].pow(2), &gens, 6).map_err(e)?.ok_or(format!("Q_{}^2 not certified", i + 1))?;
        ensure(c.verify(&gens), "square certificate invalid")?;
        ensure(member_bounded(&q[i], &gens, 4).map_err(e)?.is_none(), format!("Q_{} certified at D=4", i + 1))?;
    }
    let n14 = non_membership(&q[13], &gens, &reference::assignment_q14()).map_err(e)?;
    ensure(n14.holds(), "Q_14 restriction reduces to 0")?;
    let expected = ideals::groebner_small(
        &reference::parse_all(&reference::RESTRICTED),
        ideals::MonomialOrder::Grevlex,
        Default::default(),
    )
    .map_err(e)?;
    ensure(n14.restricted_basis == expected, "restricted ideal differs from the printed pair")?;
    let n13 = non_membership(&q[12], &gens, &reference::assignment_q13()).map_err(e)?;
    ensure(n13.holds(), "Q_13 restriction reduces to 0")?;
    Ok("Q1..Q12 at D=4, Q13^2, Q14^2 at D=6, Q13, Q14 not members: not radical".into())
}

fn c7_rigid(cat: &Catalog) -> Outcome {
    let mut done = Vec::new();
    for (name, orbit) in [("g_{137B}", 36), ("g_{137B_1}", 36), ("g_{247H}", 38), ("g_{247H_1}", 38)] {
        let mu = match cat.algebra(name) {
            Ok(mu) => mu,
            Err(CatalogError::ExternalDataRequired(_)) => continue,
            Err(err) => return Err(e(err)),
        };
        let r = h2_knil(&mu, 3).map_err(e)?;
        ensure(r.h == 0 && r.orbit_dim == orbit, format!("{name}: h={} orbit={}", r.h, r.orbit_dim))?;
        done.push(format!("{name} {orbit}"));
    }
    Ok(format!("h=0 with orbit dims: {}", done.join(", ")))
}

fn c8_nonrigid(cat: &Catalog) -> Outcome {
    for name in ["g_{247K}", "g_{147D}", "g_{137A}", "g_{137A_1}", "g_{137D}"] {
        let h = h2_knil(&cat.algebra(name).map_err(e)?, 3).map_err(e)?.h;
        ensure(h == 1, format!("{name}: h={h}"))?;
    }
    for name in ["item1", "item2", "item3", "item4"] {
        let w = cat.witness(name).map_err(e)?;
        let points: Vec<Option<&Scalar>> =
            if w.param.is_some() { w.samples.iter().map(Some).collect() } else { vec![None] };
        for p in points {
            let rep = cat.verify_witness(w, p).map_err(e)?;
            ensure(rep.ok, format!("{name} at {p:?}: {:?}", rep.mismatches))?;
        }
    }
    let item4 = cat.witness("item4").map_err(e)?;
    ensure(item4.field == nilrigid::Field::Gaussian, "item (4) witness is not over Q(i)")?;
    ensure(item4.target.contains("(4)"), "item (4) witness has the wrong target")?;
    Ok(format!("h=1 for 5 algebras; witnesses (1)-(4) verified, (4) over {}", item4.field.tag()))
}

fn surface_points(name: &str) -> Vec<(Scalar, Scalar)> {
    default_samples()
        .into_iter()
        .filter(|(r, t)| match name {
            "g_5(r,t)" => !(&Scalar::one() + &(r * t)).is_zero(),
            _ => !t.is_zero(),
        })
        .take(3)
        .collect()
}

fn c9_exactness(cat: &Catalog) -> Outcome {
    let per_point = Duration::from_secs(600);
    let mut slowest = Duration::ZERO;
    let mut runs = 0;
    for name in ["g_5(r,t)", "g_6(r,t)"] {
        let fam = cat.family(name).map_err(e)?;
        let samples = surface_points(name);
        ensure(samples.len() == 3, "fewer than 3 admissible samples")?;
        for (r, t) in samples {
            let p = pt(&[('r', r.clone()), ('t', t.clone())]);
            for free in [&['r', 't'][..], &['t'][..]] {
                let start = Instant::now();
                let rep = augmented_exactness(&fam, &p, free, Constraint::JSN(5)).map_err(e)?;
                let took = start.elapsed();
                slowest = slowest.max(took);
                ensure(took < per_point, format!("{name} at ({r},{t}) took {took:?}"))?;
                ensure(rep.exact, format!("{name} at ({r},{t}) free {free:?}: {} vs {}", rep.rank_df, rep.dim_ker_dg))?;
                ensure(rep.dims[2] == 823_788, format!("dG has {} rows", rep.dims[2]))?;
                runs += 1;
            }
        }
        for t0 in [Scalar::one(), Scalar::from_int(2), Scalar::from_frac(-1, 3)] {
            let mu = cat.eval(name, &pt(&[('r', Scalar::zero()), ('t', t0.clone())])).map_err(e)?;
            let h = h2_dim(&mu).map_err(e)?.h;
            ensure(h == 9, format!("{name} H^2 at (0,{t0}) = {h}"))?;
        }
    }
    Ok(format!("{runs} exact points, H^2 = 9 at 6 points, slowest point {} ms", slowest.as_millis()))
}

fn c10_curve(cat: &Catalog) -> Outcome {
    let name = "g_{147E_1}(t)";
    let fam = cat.family(name).map_err(e)?;
    for t in [Scalar::from_frac(3, 2), Scalar::from_int(2), Scalar::from_int(5)] {
        let p = pt(&[('t', t.clone())]);
        let mu = cat.eval(name, &p).map_err(e)?;
        let r = h2_knil(&mu, 3).map_err(e)?;
        ensure(r.h == 1, format!("t={t}: h={}", r.h))?;
        // ∂_t μ is a 3-nil cocycle outside Im d¹, so it spans the one-dimensional class
        let ex = augmented_exactness(&fam, &p, &['t'], Constraint::JN(3)).map_err(e)?;
        ensure(ex.containment && ex.rank_df == ex.rank_d1 + 1, format!("t={t}: tangent in Im d1"))?;
    }
    let pack = match cat.algebra("g_{147E}(2)") {
        Ok(mu) => {
            let h = h2_knil(&mu, 3).map_err(e)?.h;
            ensure(h == 3, format!("g_{{147E}}(2): h={h}"))?;
            "; g_{147E}(2) h=3"
        }
        Err(CatalogError::ExternalDataRequired(_)) => "; g_{147E}(2) skipped (no data pack)",
        Err(err) => return Err(e(err)),
    };
    Ok(format!("h=1 spanned by d/dt at t=3/2,2,5{pack}"))
}

/// Every catalog record, at the first admissible default sample for families.
fn catalog_members(cat: &Catalog) -> Result<Vec<StructureConstants>, String> {
    let mut out = Vec::new();
    for r in cat.records() {
        for (rv, tv) in default_samples() {
            let p: BTreeMap<char, Scalar> =
                r.params.iter().map(|&s| (s, if s == 'r' { rv.clone() } else { tv.clone() })).collect();
            match cat.eval(&r.name, &p) {
                Ok(mu) => {
                    out.push(mu);
                    break;
                }
                Err(CatalogError::OutsideValidity(_)) => continue,
                Err(err) => return Err(format!("{}: {err}", r.name)),
            }
        }
    }
    Ok(out)
}

/// `Σ_j c_j T_j` over the union of nonzero tuples.
fn combine(terms: &[(Scalar, Tensor)]) -> BTreeMap<Vec<usize>, Vec<Scalar>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Scalar>> = BTreeMap::new();
    for (c, t) in terms {
        for (args, v) in t.iter() {
            let slot = out.entry(args.to_vec()).or_insert_with(|| vec![Scalar::zero(); v.len()]);
            for (s, x) in slot.iter_mut().zip(v) {
                *s = &*s + &(c * x);
            }
        }
    }
    out.retain(|_, v| v.iter().any(|x| !x.is_zero()));
    out
}

/// `c_j = L_j'(0)` for the Lagrange basis on nodes `0..=d`.
fn derivative_weights(d: i64) -> Vec<Scalar> {
    (0..=d)
        .map(|j| {
            if j == 0 {
                (1..=d).fold(Scalar::zero(), |acc, m| &acc - &Scalar::from_frac(1, m))
            } else {
                let mut c = Scalar::from_frac(1, j);
                for m in (1..=d).filter(|&m| m != j) {
                    c = &c * &Scalar::from_frac(-m, j - m);
                }
                c
            }
        })
        .collect()
}

/// `d/dt|₀ op(μ + tσ)` by interpolation at `t = 0..=k`, against the linearization.
fn first_order_holds(mu: &StructureConstants, sigma: &StructureConstants, k: usize, sn: bool) -> Result<bool, String> {
    let op = |m: &StructureConstants| if sn { sn_k(m, k) } else { n_k(m, k) };
    let weights = derivative_weights(k as i64);
    let mut terms = Vec::new();
    for (j, c) in weights.into_iter().enumerate() {
        let m = mu.add_scaled(&Scalar::from_int(j as i64), sigma).map_err(e)?;
        terms.push((c, op(&m)));
    }
    let lin = if sn { dsnk_apply(mu, sigma, k) } else { dnk_apply(mu, sigma, k) };
    let mut diff = terms;
    diff.push((Scalar::from_int(-1), lin));
    Ok(combine(&diff).is_empty())
}

fn random_cochain(rng: &mut ChaCha8Rng, n: usize) -> StructureConstants {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if rng.gen_bool(0.3) {
                    entries.push((i, j, k, Scalar::from_int(rng.gen_range(-3..=3))));
                }
            }
        }
    }
    StructureConstants::from_entries(n, entries).expect("indices in range")
}

/// Rank of a small integer matrix by fraction-free elimination in `i128`.
fn bareiss_rank(mut a: Vec<Vec<i128>>) -> usize {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let (mut r, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
    }
    r
}

fn c11_properties(cat: &Catalog) -> Outcome {
    let members = catalog_members(cat)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for mu in &members {
        let name = mu.name().unwrap_or("?").to_string();
        let d1 = d1_matrix(mu);
        let d2 = d2_matrix(mu);
        ensure(d2.mul(&d1).map_err(e)?.is_zero(), format!("{name}: d2 d1 != 0"))?;
        let dj = dj_matrix(mu);
        let sum = dj.to_dense().iter().zip(d2.to_dense()).all(|(a, b)| a.iter().zip(&b).all(|(x, y)| (x + y).is_zero()));
        ensure(sum, format!("{name}: dJ != -d2"))?;
        if let Some(k) = nil_index(mu).map_err(e)? {
            let k = k.max(1);
            // two random elements of Im d¹
            let d1t = d1.transpose();
            for _ in 0..2 {
                let mut v = vec![Scalar::zero(); d1.nrows()];
                for row in d1t.rows() {
                    let c = Scalar::from_int(rng.gen_range(-2..=2));
                    for (idx, x) in row.entries() {
                        v[*idx] = &v[*idx] + &(&c * x);
                    }
                }
                let sigma = StructureConstants::from_cochain_vector(mu.dim(), &v).map_err(e)?;
                ensure(dnk_apply(mu, &sigma, k).is_zero(), format!("{name}: Im d1 not in Ker dN_{k}"))?;
            }
        }
        let lcs = lower_central_series(mu).map_err(e)?;
        let der = derived_series(mu).map_err(e)?;
        for (i, d) in der.iter().enumerate() {
            let idx = ((1usize << i.min(20)) - 1).min(lcs.len() - 1);
            ensure(d.is_contained_in(&lcs[idx]), format!("{name}: g^({i}) not in g^{idx}"))?;
        }
    }
    for name in ["g_{5,6}", "f5", "g_{5,3}", "12346_E"] {
        let mu = cat.algebra(name).map_err(e)?;
        for k in [3usize, 4] {
            let sigma = random_cochain(&mut rng, mu.dim());
            ensure(first_order_holds(&mu, &sigma, k, false)?, format!("{name}: N_{k} expansion"))?;
            ensure(first_order_holds(&mu, &sigma, k, true)?, format!("{name}: SN_{k} expansion"))?;
        }
    }
    for trial in 0..100 {
        let (nr, nc) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let zeros = rng.gen_bool(0.5);
        let ints: Vec<Vec<i128>> = (0..nr)
            .map(|_| (0..nc).map(|_| if zeros && rng.gen_bool(0.5) { 0 } else { rng.gen_range(-4..=4) }).collect())
            .collect();
        let m = ExactMatrix::from_dense(
            ints.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x as i64)).collect()).collect(),
        )
        .map_err(e)?;
        let ours = rank(&m).rank;
        ensure(ours == bareiss_rank(ints), format!("rank oracle disagrees on trial {trial}"))?;
        ensure(ours == rank(&m.transpose()).rank, "rank != rank of transpose")?;
    }
    let names: BTreeSet<&str> = members.iter().filter_map(|m| m.name()).collect();
    Ok(format!("{} catalog members; expansions for N_k, SN_k; 100 rank oracles", names.len()))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: Box<dyn Fn(&Catalog) -> Outcome>,
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    let c = |id, title, limit, run: Box<dyn Fn(&Catalog) -> Outcome>| Criterion { id, title, limit, run };
    vec![
        c(1, "dim-5 table", s(1), Box::new(c1_dim5)),
        c(2, "nu_1/nu_2 certificate", s(1), Box::new(c2_nu)),
        c(3, "12346_E", s(1), Box::new(c3_12346e)),
        c(4, "Heisenberg extensions", s(1), Box::new(|_| c4_heisenberg())),
        c(5, "ideal generators", s(5), Box::new(|_| c5_generators())),
        c(6, "ideal membership", s(120), Box::new(|_| c6_membership())),
        c(7, "N_{7,3} rigid points", s(10), Box::new(c7_rigid)),
        c(8, "N_{7,3} non-rigid points", s(10), Box::new(c8_nonrigid)),
        c(9, "rigid-curve exactness", s(12 * 600), Box::new(c9_exactness)),
        c(10, "curve cohomology", s(10), Box::new(c10_curve)),
        c(11, "property suites", s(30), Box::new(c11_properties)),
    ]
}

fn main() -> ExitCode {
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let cat = match Catalog::from_env() {
        Ok(c) => c,
        Err(err) => {
            eprintln!("cannot load data pack: {err}");
            return ExitCode::FAILURE;
        }
    };
    let mut failed = 0;
    for c in criteria().into_iter().filter(|c| only.is_none_or(|o| o == c.id)) {
        let start = Instant::now();
        let outcome = (c.run)(&cat);
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > c.limit => Err(format!("{msg}; over time limit")),
            other => other,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!(
            "criterion {:>2} {tag} {:<26} {:>7} ms (limit {} s)  {msg}",
            c.id,
            c.title,
            took.as_millis(),
            c.limit.as_secs()
        );
        failed += outcome.is_err() as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
