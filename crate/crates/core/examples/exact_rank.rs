// Rank, kernel and solve over ℚ and ℚ(i), with no floating point anywhere.

use nilrigid::linalg::{kernel_basis, rank, solve};
use nilrigid::{ExactMatrix, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = |s: &str| s.parse::<Scalar>().unwrap();
    let m = ExactMatrix::from_dense(vec![
        vec![q("1"), q("1/2"), q("1/3")],
        vec![q("1/2"), q("1/3"), q("1/4")],
        vec![q("3/2"), q("5/6"), q("7/12")],
    ])?;
    let profile = rank(&m);
    println!("rank {} with pivots {:?}", profile.rank, profile.pivots);
    for v in kernel_basis(&m) {
        let shown: Vec<String> = v.iter().map(Scalar::to_string).collect();
        println!("kernel vector ({})", shown.join(", "));
    }

    // a Gaussian system: (1+i)x = 2
    let a = ExactMatrix::from_dense(vec![vec![q("1+1 i")]])?;
    let x = solve(&a, &[q("2")])?.expect("solvable");
    println!("(1+i) x = 2  =>  x = {}", x[0]);
    assert_eq!(profile.rank, 2);
    assert!(x[0].value_eq(&q("1-1 i")));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
