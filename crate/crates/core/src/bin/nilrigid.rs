use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilrigid::catalog::Catalog;
use nilrigid::cohomology::{augmented_exactness, derivation_dim, h2_dim, h2_knil, orbit_dim, Constraint};
use nilrigid::error::{CatalogError, Error, IdealError, LieError};
use nilrigid::ideals::{self, Kind, MultiPoly, Var};
use nilrigid::lie::{self, nil_index, solvable_length, ParametricTable, StructureConstants};
use nilrigid::reproduce::{self, Suite};
use nilrigid::Scalar;

const PASS: u8 = 0;
const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "nilrigid", version, about = "Rigidity certificates for nilpotent Lie algebras")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension, field, nil-index, solvable length, derivation and orbit dimensions.
    Info(Input),
    /// `H²_{k-nil}` (or ordinary `H²` without --k).
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: Option<usize>,
        /// Exit 1 unless h equals this value.
        #[arg(long)]
        expect_h: Option<usize>,
    },
    /// Exactness of the linearized complex at a point of a family.
    Exactness {
        #[command(flatten)]
        input: Input,
        /// Point, e.g. `r=1,t=2`.
        #[arg(long)]
        at: String,
        /// Free parameters, e.g. `r,t`; the rest are frozen.
        #[arg(long, default_value = "")]
        free: String,
        /// `j`, `n<k>` or `sn<k>`.
        #[arg(long, default_value = "sn5")]
        constraint: String,
    },
    /// Generators and membership for `I_{n,k}`.
    Ideal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Run a reproduction suite.
    Reproduce {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

#[derive(Args)]
struct Input {
    /// Catalog name or alias, or a JSON/table file.
    target: String,
    /// Parameter values, e.g. `t=3/2,s=1`.
    #[arg(long, default_value = "")]
    params: String,
    /// Dimension of a table-text file (default: highest letter used).
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Subcommand)]
enum IdealOp {
    /// List the generators of one operator, or of the whole ideal.
    Gens {
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Certify `f ∈ I_{n,k}` with multipliers of degree at most --degree.
    Member {
        poly: String,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Certify `f ∉ I_{n,k}` after setting the listed variables to zero.
    Nonmember {
        poly: String,
        /// Variables to set to zero, e.g. `t124,t134`.
        #[arg(long)]
        zero: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    J,
    N,
    Sn,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Dim5,
    Dim6,
    N73,
    Curves,
    Ideals,
    Counterexamples,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Dim5 => Suite::Dim5,
            SuiteArg::Dim6 => Suite::Dim6,
            SuiteArg::N73 => Suite::N73,
            SuiteArg::Curves => Suite::Curves,
            SuiteArg::Ideals => Suite::Ideals,
            SuiteArg::Counterexamples => Suite::Counterexamples,
            SuiteArg::All => Suite::All,
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn parse_point(s: &str) -> Result<BTreeMap<char, Scalar>, Error> {
    let mut out = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| usage(format!("expected sym=value, got {part:?}")))?;
        let mut chars = k.trim().chars();
        let sym = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => return Err(usage(format!("parameter must be one letter, got {k:?}"))),
        };
        let value = v.parse::<Scalar>().map_err(|e| usage(e.to_string()))?;
        out.insert(sym, value);
    }
    Ok(out)
}

fn table_dim(text: &str) -> usize {
    let mut lhs = 0;
    for line in text.split([',', '\n', ';']) {
        if let Some((l, r)) = line.split_once('=') {
            for c in l.chars().chain(r.chars()).filter(|c| ('a'..='h').contains(c)) {
                lhs = lhs.max(c as usize - 'a' as usize + 1);
            }
        }
    }
    lhs
}

enum Loaded {
    Family(String, ParametricTable),
    Fixed(StructureConstants),
}

fn load(cat: &Catalog, input: &Input) -> Result<Loaded, Error> {
    let path = Path::new(&input.target);
    if path.is_file() {
        let src = std::fs::read_to_string(path)?;
        if src.trim_start().starts_with('{') {
            return Ok(Loaded::Fixed(lie::json::from_json(&src)?));
        }
        let dim = input.dim.unwrap_or_else(|| table_dim(&src));
        return Ok(Loaded::Family(input.target.clone(), ParametricTable::parse(&src, dim)?));
    }
    let rec = match cat.get(&input.target) {
        Ok(rec) => rec,
        Err(CatalogError::ExternalDataRequired(_)) => return Ok(Loaded::Fixed(cat.algebra(&input.target)?)),
        Err(err) => return Err(err.into()),
    };
    if rec.params.is_empty() {
        Ok(Loaded::Fixed(cat.algebra(&input.target)?))
    } else {
        Ok(Loaded::Family(rec.name.clone(), cat.family(&input.target)?))
    }
}

fn algebra(cat: &Catalog, input: &Input) -> Result<StructureConstants, Error> {
    let params = parse_point(&input.params)?;
    match load(cat, input)? {
        Loaded::Fixed(mu) => Ok(mu),
        Loaded::Family(name, fam) => {
            if cat.get(&input.target).is_ok() {
                Ok(cat.eval(&input.target, &params)?)
            } else {
                Ok(fam.eval(&params)?.with_name(name))
            }
        }
    }
}

fn info(cat: &Catalog, input: &Input, as_json: bool) -> Result<u8, Error> {
    let mu = algebra(cat, input)?;
    if !lie::is_lie(&mu) {
        return Err(LieError::NotLie.into());
    }
    let n = mu.dim();
    let step = nil_index(&mu)?;
    let solv = solvable_length(&mu)?;
    let der = derivation_dim(&mu);
    let orbit = orbit_dim(&mu);
    if as_json {
        let v = json!({
            "name": mu.name(), "dim": n, "field": mu.field().tag(), "nil_index": step,
            "solvable_length": solv, "derivation_dim": der, "orbit_dim": orbit,
        });
        println!("{v}");
        return Ok(PASS);
    }
    let kind = match step {
        _ if mu.is_abelian() => "abelian".to_string(),
        Some(s) => format!("{s}-step nilpotent"),
        None => match solv {
            Some(l) => format!("solvable of length {l}, not nilpotent"),
            None => "not solvable".to_string(),
        },
    };
    if let Some(name) = mu.name() {
        println!("{name}");
    }
    println!("{n}-dim, {kind}, orbit dim {orbit}");
    println!("field {}, derivations {der}", mu.field().tag());
    Ok(PASS)
}

fn cohomology(cat: &Catalog, input: &Input, k: Option<usize>, expect: Option<usize>, as_json: bool) -> Result<u8, Error> {
    let mu = algebra(cat, input)?;
    let rep = match k {
        Some(k) => h2_knil(&mu, k)?,
        None => h2_dim(&mu)?,
    };
    if as_json {
        println!("{}", rep.to_json());
    } else {
        let space = k.map_or("H^2".to_string(), |k| format!("H^2_{{{k}-nil}}"));
        println!("{} {space}: {} = {} - {}", mu.name().unwrap_or("input"), rep.h, rep.z, rep.b);
        println!("orbit dim {}", rep.orbit_dim);
        match k {
            Some(k) if rep.h == 0 => println!("RIGID in N_{{{},{k}}}", rep.n),
            _ => println!("no certificate"),
        }
    }
    Ok(match expect {
        Some(h) if h != rep.h => MISMATCH,
        _ => PASS,
    })
}

fn exactness(cat: &Catalog, input: &Input, at: &str, free: &str, constraint: &str, as_json: bool) -> Result<u8, Error> {
    let (name, fam) = match load(cat, input)? {
        Loaded::Family(n, f) => (n, f),
        Loaded::Fixed(_) => return Err(usage(format!("{} has no parameters", input.target))),
    };
    let point = parse_point(at)?;
    if cat.get(&input.target).is_ok() {
        cat.eval(&input.target, &point)?;
    }
    let free: Vec<char> = free.split(',').filter_map(|s| s.trim().chars().next()).collect();
    let c: Constraint = constraint.parse().map_err(usage)?;
    let rep = augmented_exactness(&fam, &point, &free, c)?.with_family(name);
    if as_json {
        println!("{}", rep.to_json());
    } else {
        let point: Vec<String> = rep.point.iter().map(|(s, v)| format!("{s}={v}")).collect();
        println!(
            "{} at ({}) free {{{}}} in {}",
            rep.family.as_deref().unwrap_or(""),
            point.join(", "),
            rep.free.join(","),
            rep.constraint
        );
        println!("dF: {} -> {}, dG rows {}", rep.dims[0], rep.dims[1], rep.dims[2]);
        println!("rank d1 {}, rank dF {}, dim ker dG {}", rep.rank_d1, rep.rank_df, rep.dim_ker_dg);
        println!("{}", if rep.exact { "EXACT" } else { "NOT EXACT" });
    }
    Ok(if rep.exact { PASS } else { MISMATCH })
}

fn parse_poly(s: &str) -> Result<MultiPoly, Error> {
    Ok(s.parse::<MultiPoly>()?)
}

fn ideal(n: usize, k: usize, op: &IdealOp, as_json: bool) -> Result<u8, Error> {
    if !(3..=8).contains(&n) {
        return Err(usage("n must be between 3 and 8"));
    }
    match op {
        IdealOp::Gens { kind } => {
            let gens = match kind {
                None => ideals::ideal(n, k).generators,
                Some(KindArg::J) => ideals::generators(n, k, Kind::J),
                Some(KindArg::N) => ideals::generators(n, k, Kind::N),
                Some(KindArg::Sn) => {
                    if k < 2 {
                        return Err(usage("SN_k needs k >= 2"));
                    }
                    ideals::generators(n, k, Kind::SN)
                }
            };
            if as_json {
                let list: Vec<_> = gens
                    .iter()
                    .map(|g| json!({"kind": g.kind.to_string(), "poly": g.poly.to_string()}))
                    .collect();
                println!("{}", json!({"n": n, "k": k, "generators": list}));
            } else {
                for g in &gens {
                    println!("{:<3} {}", g.kind.to_string(), g.poly);
                }
                println!("{} generators", gens.len());
            }
            Ok(PASS)
        }
        IdealOp::Member { poly, degree } => {
            let f = parse_poly(poly)?;
            let gens = ideals::ideal(n, k).polys();
            let cert = ideals::member_bounded(&f, &gens, *degree)?;
            match &cert {
                Some(c) if as_json => println!("{}", c.to_json()),
                Some(c) => {
                    println!("MEMBER of I_{{{n},{k}}} (degree bound {degree}), {} multipliers", c.nonzero().count());
                    for (i, m) in c.nonzero() {
                        println!("  ({m}) * [{}]", gens[i]);
                    }
                }
                None if as_json => println!("{}", json!({"member": null, "degree_bound": degree})),
                None => println!("no certificate up to degree {degree}"),
            }
            Ok(if cert.is_some() { PASS } else { MISMATCH })
        }
        IdealOp::Nonmember { poly, zero } => {
            let f = parse_poly(poly)?;
            let mut assignment = BTreeMap::new();
            for s in zero.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let vars: Vec<Var> = parse_poly(s)?.variables().into_iter().collect();
                match vars.as_slice() {
                    [v] => assignment.insert(*v, Default::default()),
                    _ => return Err(usage(format!("{s:?} is not a variable"))),
                };
            }
            let gens = ideals::ideal(n, k).polys();
            let cert = ideals::non_membership(&f, &gens, &assignment)?;
            if as_json {
                let basis: Vec<String> = cert.restricted_basis.iter().map(|p| p.to_string()).collect();
                let v = json!({
                    "holds": cert.holds(), "restricted_target": cert.restricted_target.to_string(),
                    "restricted_basis": basis, "normal_form": cert.normal_form.to_string(),
                });
                println!("{v}");
            } else {
                println!("restricted target {}", cert.restricted_target);
                for b in &cert.restricted_basis {
                    println!("  basis {b}");
                }
                println!("normal form {}", cert.normal_form);
                println!("{}", if cert.holds() { "NOT A MEMBER" } else { "inconclusive" });
            }
            Ok(if cert.holds() { PASS } else { MISMATCH })
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let cat = Catalog::from_env()?;
    match &cli.cmd {
        Cmd::Info(input) => info(&cat, input, cli.json),
        Cmd::Cohomology { input, k, expect_h } => cohomology(&cat, input, *k, *expect_h, cli.json),
        Cmd::Exactness { input, at, free, constraint } => exactness(&cat, input, at, free, constraint, cli.json),
        Cmd::Ideal { n, k, op } => ideal(*n, *k, op, cli.json),
        Cmd::Reproduce { suite } => {
            let rep = reproduce::run((*suite).into(), &cat);
            if cli.json {
                println!("{}", rep.to_json());
            } else {
                println!("{rep}");
            }
            Ok(if rep.pass {
                PASS
            } else if rep.count(reproduce::Status::ResourceCap) > 0 && rep.count(reproduce::Status::Fail) == 0 {
                CAP
            } else {
                MISMATCH
            })
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Ideal(IdealError::ResourceCap(_)) => CAP,
        _ => USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if cli.json {
                println!("{}", json!({"error": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
