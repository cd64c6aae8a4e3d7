//! Structure tables written out in the source literature.

use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Provenance {
    /// Table printed verbatim.
    Printed,
    /// Printed only as a member of a printed family, e.g. `g(0)`.
    PrintedViaFamily,
    /// A family built here to witness a degeneration; checked by `verify_witness`.
    Derived,
    /// Cited but not printed; loaded from the external data pack.
    ExternalPack,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AlgebraRecord {
    pub name: String,
    pub aliases: Vec<String>,
    pub dim: usize,
    pub field: Field,
    pub table: String,
    /// Parameter symbols, for families.
    pub params: Vec<char>,
    /// A polynomial in the parameters that must not vanish, e.g. `1 + rt`.
    pub nonvanishing: Option<String>,
    pub provenance: Provenance,
    pub citation: String,
}

fn rec(name: &str, aliases: &[&str], dim: usize, table: &str, params: &[char], provenance: Provenance, citation: &str) -> AlgebraRecord {
    AlgebraRecord {
        name: name.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
        dim,
        field: Field::Rational,
        table: table.to_string(),
        params: params.to_vec(),
        nonvanishing: None,
        provenance,
        citation: citation.to_string(),
    }
}

pub(crate) fn builtin() -> Vec<AlgebraRecord> {
    use Provenance::*;
    let five = "5-dimensional nilpotent list";
    let mut out = vec![
        rec("f3+R2", &["f_3+R^2", "f3"], 5, "ab = c", &[], Printed, five),
        rec("g_{5,1}", &["g51"], 5, "ab = e, cd = e", &[], Printed, five),
        rec("g_{5,2}", &["g52"], 5, "ab = d, ac = e", &[], Printed, five),
        rec("f4+R", &["f_4+R", "f4"], 5, "ab = c, ac = d", &[], Printed, five),
        rec("g_{5,3}", &["g53"], 5, "ab = d, ad = e, bc = e", &[], Printed, five),
        rec("g_{5,4}", &["g54"], 5, "ab = c, ac = d, bc = e", &[], Printed, five),
        rec("f5", &["f_5"], 5, "ab = c, ac = d, ad = e", &[], Printed, five),
        rec("g_{5,6}", &["g56"], 5, "ab = c, ac = d, ad = e, bc = e", &[], Printed, five),
        rec(
            "12346_E",
            &["g_{6,14}", "g614"],
            6,
            "ab = c, ac = d, ad = e, bc = e, be = f, cd = -f",
            &[],
            Printed,
            "Seeley 12346_E",
        ),
        rec(
            "g_6(r,t)",
            &["g6", "g_6"],
            7,
            "ab = c, ac = d, ad = e, ae = f, af = g, ag = rg, bc = e, bd = f, be = rtf+(1-t)g, bf = rg, bg = r^2g, cd = -rtf+tg",
            &['r', 't'],
            Printed,
            "surface through the 6-step rigid curve g_I(α) = g_6(0,α)",
        ),
        rec(
            "g_5(r,t)",
            &["g5", "g_5"],
            7,
            "ab = (1+tr)c, ac = d, ad = f+tg, ae = g, af = -rf+g, bc = e, bd = g, be = rd+f, ce = g",
            &['r', 't'],
            Printed,
            "surface through the 5-step rigid curve g_1(λ) = g_5(0,λ)",
        ),
        rec("g_{137A}", &["137A"], 7, "ab = e, ae = g, cd = f, cf = g", &[], Printed, "Gong 137A"),
        rec("g_{137B}", &["137B"], 7, "ab = e, ae = g, cd = f, cf = g, bd = g", &[], Printed, "Gong 137B"),
        rec("g_{137A_1}", &["137A1", "g_{137A1}"], 7, "ac = e, ad = f, ae = g, bc = -f, bd = e, bf = g", &[], Printed, "Gong 137A_1"),
        rec(
            "g_{137B_1}",
            &["137B1", "g_{137B1}"],
            7,
            "ac = e, ad = f, ae = g, bc = -f, bd = e, bf = g, cd = g",
            &[],
            Printed,
            "Gong 137B_1",
        ),
        rec(
            "g_{137D}",
            &["137D"],
            7,
            "ab = e, ad = f, af = g, bc = f, bd = g, ce = -g",
            &[],
            PrintedViaFamily,
            "g(0) of the g_{137B} curve, same structure table as Gong 137D",
        ),
        rec(
            "g_{(1)}(t)",
            &["item1"],
            7,
            "ab = e, ad = f, af = g, bc = f, bd = g, cd = -t^2e, ce = -g",
            &['t'],
            Printed,
            "curve g(t) ≃ g_{137B} (t ≠ 0) with g(0) = g_{137D}",
        ),
        rec(
            "g_{147E_1}(t)",
            &["147E1", "g_{147E1}"],
            7,
            "ab = d, ac = -f, af = -tg, bc = e, be = tg, bf = 2g, cd = -2g",
            &['t'],
            Printed,
            "Gong 147E_1",
        ),
        rec(
            "g_{147D}",
            &["147D"],
            7,
            "ab = d, ac = -f, ae = g, af = g, bc = e, bf = g, cd = -2g",
            &[],
            Printed,
            "Gong 147D",
        ),
        rec(
            "g_{247H}",
            &["247H"],
            7,
            "ab = d, ac = e, ad = f, bd = f, be = g, cd = g, ce = f",
            &[],
            Printed,
            "Gong 247H",
        ),
        rec(
            "g_{247K}",
            &["247K"],
            7,
            "ab = d, ac = e, ad = f, be = g, cd = g, ce = f",
            &[],
            Printed,
            "Gong 247K",
        ),
        rec(
            "g_{247G}",
            &["247G"],
            7,
            "ab = d, ac = e, ad = f, ae = f, bd = f, be = g, cd = g, ce = f",
            &[],
            PrintedViaFamily,
            "g(0) of the g_{247H} curve with coefficients (1 ± t³/2)",
        ),
        rec(
            "g_{(3)}(t)",
            &["item3"],
            7,
            "ab = d, ac = e, ad = (1+t^3/2)f+t^3/2 g, ae = (1-t^3/2)f-t^3/2 g, bd = f, be = g, cd = g, ce = f",
            &['t'],
            Printed,
            "curve g(t) ≃ g_{247H} (t ≠ 0) with g(0) = g_{247G}",
        ),
        rec(
            "g_{GR}",
            &["GR"],
            7,
            "ab = c, ac = d, ae = f, af = g, bc = d, be = f, ce = g, ef = d",
            &[],
            Printed,
            "claimed rigid in [GR]; isomorphic to g_{247K}",
        ),
        rec(
            "g_{(4)}(t)",
            &["item4"],
            7,
            "ab = d, ac = e, ad = f, bc = t^2e, be = g, cd = g, ce = f",
            &['t'],
            Printed,
            "curve g(t) ≃ g_{247H} over C (t ≠ 0) with g(0) = g_{247K}",
        ),
        rec(
            "g_{137B}(s)",
            &["137Bs"],
            7,
            "ab = e, ae = g, cd = f, cf = g, bd = sg",
            &['s'],
            Derived,
            "rescaling of g_{137B} (s ≠ 0) with limit g_{137A}",
        ),
        rec(
            "g_{137B_1}(s)",
            &["137B1s"],
            7,
            "ac = e, ad = f, ae = g, bc = -f, bd = e, bf = g, cd = sg",
            &['s'],
            Derived,
            "rescaling of g_{137B_1} (s ≠ 0) with limit g_{137A_1}",
        ),
    ];
    for r in &mut out {
        r.nonvanishing = match r.name.as_str() {
            "g_5(r,t)" => Some("1+rt".into()),
            "g_6(r,t)" => Some("t".into()),
            _ => None,
        };
    }
    out
}

/// The cocycles `ν₁, ν₂` of `g_{5,3}`.
pub(crate) const NU1: &str = "bc = c";
pub(crate) const NU2: &str = "ab = b, ac = -c, ad = -d";
