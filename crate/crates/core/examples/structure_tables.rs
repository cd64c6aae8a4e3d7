// Parse a structure table, inspect its series and move it to another basis.

use nilrigid::lie::{self, change_basis, derived_series, lower_central_series, nil_index, parse_table_str};
use nilrigid::{ExactMatrix, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mu = parse_table_str("ab = c, ac = d, ad = e, bc = e", 5)?.with_name("g_{5,6}");
    println!("{mu}");
    let lcs: Vec<usize> = lower_central_series(&mu)?.iter().map(|s| s.dim()).collect();
    let der: Vec<usize> = derived_series(&mu)?.iter().map(|s| s.dim()).collect();
    println!("lower central series dims {lcs:?}, derived series dims {der:?}");
    println!("nil-index {:?}", nil_index(&mu)?);

    // swap a and b: the table changes, the algebra does not
    let mut p = ExactMatrix::zeros(5, 5).to_dense();
    for (r, c) in [(1, 0), (0, 1), (2, 2), (3, 3), (4, 4)] {
        p[r][c] = Scalar::one();
    }
    let nu = change_basis(&mu, &ExactMatrix::from_dense(p)?)?;
    println!("after a <-> b: {}", nu.to_table_text());
    assert_eq!(nil_index(&nu)?, Some(4));

    let back = lie::json::from_json(&lie::json::to_json(&mu))?;
    assert!(back.table_eq(&mu));
    println!("JSON round trip ok");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
