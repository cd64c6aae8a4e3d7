// Exactness of the linearized complex along the surface `g_6(r,t)` inside `J = SN_5 = 0`.

use std::collections::BTreeMap;

use nilrigid::catalog::Catalog;
use nilrigid::cohomology::{augmented_exactness, h2_dim, Constraint};
use nilrigid::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::builtin();
    let name = "g_6(r,t)";
    let family = cat.family(name)?;
    let point: BTreeMap<char, Scalar> = [('r', Scalar::from_int(2)), ('t', Scalar::from_int(3))].into();
    for free in [&['r', 't'][..], &['t'][..]] {
        let rep = augmented_exactness(&family, &point, free, Constraint::JSN(5))?.with_family(name);
        println!(
            "free {:?}: rank d1 {}, rank dF {}, dim ker dG {} -> exact {}",
            rep.free, rep.rank_d1, rep.rank_df, rep.dim_ker_dg, rep.exact
        );
        assert!(rep.exact);
    }
    let generic = cat.eval(name, &[('r', Scalar::zero()), ('t', Scalar::one())].into())?;
    println!("dim H^2 at (0,1): {}", h2_dim(&generic)?.h);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
