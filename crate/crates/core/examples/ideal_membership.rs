// `I_{6,4}` is not radical: `Q_14² ∈ I_{6,4}` but `Q_14 ∉ I_{6,4}`.

use nilrigid::ideals::{ideal, member_bounded, non_membership, reference};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let i64 = ideal(6, 4);
    let gens = i64.polys();
    println!("I_{{6,4}} has {} generators", gens.len());
    let q14 = &reference::parse_all(&reference::Q6)[13];
    println!("Q_14 = {q14}");

    let square = member_bounded(&q14.pow(2), &gens, 6)?.expect("Q_14^2 is a member");
    assert!(square.verify(&gens));
    println!("Q_14^2 certified with {} nonzero multipliers", square.nonzero().count());
    assert!(member_bounded(q14, &gens, 4)?.is_none());

    let cert = non_membership(q14, &gens, &reference::assignment_q14())?;
    println!("restricted: {} reduces to {}", cert.restricted_target, cert.normal_form);
    assert!(cert.holds());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
