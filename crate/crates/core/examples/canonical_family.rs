//! The canonical monotone family: solo ranges strictly increase while
//! fuel-per-squared-rate strictly decreases, with the last range capped.
//!
//! Run with `cargo run --example canonical_family`.

use refuel::{gen_canonical, validate_monotone_preconditions, Rational};

fn main() -> refuel::Result<()> {
    let cap: Rational = "10".parse()?;
    let inst = gen_canonical(6, &cap)?;

    println!("{}:", inst.label());
    println!("{:>5} {:>10} {:>6} {:>10} {:>10}", "plane", "fuel", "rate", "v/c", "v/c^2");
    for plane in inst.items() {
        let range = plane.fuel() / plane.rate();
        let curvature = &range / plane.rate();
        println!(
            "{:>5} {:>10} {:>6} {:>10} {:>10}",
            plane.id(),
            plane.fuel().to_string(),
            plane.rate().to_string(),
            range.to_string(),
            curvature.to_string()
        );
    }
    let check = validate_monotone_preconditions(&inst, &cap);
    println!("monotone preconditions with cap {cap}: {check:?}");

    // The same validator rejects fleets that break the ordering.
    let bad = refuel::Instance::from_ints(refuel::ProblemKind::Arp, &[(6, 2), (1, 1)], "bad")?;
    println!(
        "counterexample fleet: {:?}",
        validate_monotone_preconditions(&bad, &cap)
    );
    Ok(())
}
