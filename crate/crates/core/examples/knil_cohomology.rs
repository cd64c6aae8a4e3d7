// `H²_{k-nil}` of the 5-dimensional nilpotent algebras, each in the variety of its own step.

use nilrigid::catalog::Catalog;
use nilrigid::cohomology::h2_knil;
use nilrigid::lie::nil_index;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::builtin();
    println!("{:<10} {:>2} {:>4} {:>4} {:>4}", "algebra", "k", "z", "b", "h");
    for name in ["f3+R2", "g_{5,1}", "g_{5,2}", "f4+R", "g_{5,3}", "g_{5,4}", "f5", "g_{5,6}"] {
        let mu = cat.algebra(name)?;
        let k = nil_index(&mu)?.expect("nilpotent");
        let r = h2_knil(&mu, k)?;
        let note = if r.rigid_certificate { "rigid" } else { "" };
        let line = format!("{name:<10} {k:>2} {:>4} {:>4} {:>4} {note}", r.z, r.b, r.h);
        println!("{}", line.trim_end());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
