// Verify the change-of-basis witnesses and the limits `g(0)` of the curves in `N_{7,3}`.

use std::collections::BTreeMap;

use nilrigid::catalog::Catalog;
use nilrigid::cohomology::h2_knil;
use nilrigid::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::builtin();
    for w in cat.witnesses() {
        let points: Vec<Option<&Scalar>> =
            if w.param.is_some() { w.samples.iter().map(Some).collect() } else { vec![None] };
        let ok = points.into_iter().all(|p| cat.verify_witness(w, p).map(|r| r.ok).unwrap_or(false));
        println!("{:<14} {} -> {}: {}", w.name, w.source, w.target, if ok { "verified" } else { "FAILED" });
        assert!(ok);
    }
    let zero: BTreeMap<char, Scalar> = [('t', Scalar::zero())].into();
    for (family, target) in [("g_{(3)}(t)", "g_{247G}"), ("g_{(4)}(t)", "g_{247K}")] {
        let ok = cat.verify_degeneration(family, &zero, target)?;
        let h = h2_knil(&cat.eval(family, &zero)?, 3)?.h;
        println!("{family} at t=0 is {target}: {ok}, h_3nil = {h}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
