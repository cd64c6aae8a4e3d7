// Run a reproduction suite against the builtin catalog (plus the data pack if configured).

use nilrigid::catalog::Catalog;
use nilrigid::reproduce::{run, Suite};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::from_env()?;
    let report = run(Suite::Counterexamples, &cat);
    println!("{report}");
    assert!(report.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
