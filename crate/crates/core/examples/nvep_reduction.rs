//! Vehicle exploration reduces to airplane refueling: same numbers, same
//! objective, so solving one solves the other. Also demonstrates the
//! polynomial-time certificate verifier.
//!
//! Run with `cargo run --example nvep_reduction`.

use refuel::{
    nvep_distance, reduce_nvep_to_arp, solve, verify_certificate, Instance, Permutation,
    ProblemKind, Rational,
};

fn main() -> refuel::Result<()> {
    let vehicles = Instance::from_ints(
        ProblemKind::Nvep,
        &[(6, 2), (1, 1), (2, 1)],
        "three rovers",
    )?;
    let planes = reduce_nvep_to_arp(&vehicles)?;

    // The mapping is the identity on the numbers, so every drop-out order
    // travels exactly as far in either reading.
    for order in ["1,2,3", "2,1,3", "3,2,1"] {
        let perm: Permutation = order.parse()?;
        let ground = nvep_distance(&vehicles, &perm)?;
        let air = refuel::evaluate(&planes, &perm)?;
        assert_eq!(&ground, air.total());
        println!("order {perm}: distance {ground} in both framings");
    }

    let report = solve(&planes)?;
    println!(
        "\noptimal order {} reaches {}",
        report.optimal_perms[0], report.optimum
    );

    // A permutation is a checkable certificate that some threshold is
    // reachable: one evaluation, polynomial in the fleet size.
    let threshold: Rational = "4".parse()?;
    let cert = report.optimal_perms[0].as_slice();
    println!(
        "certificate {} for threshold {threshold}: {}",
        report.optimal_perms[0],
        verify_certificate(&planes, cert, &threshold)
    );
    // Malformed certificates are rejected, not errors.
    println!(
        "certificate 1,1,2 for threshold {threshold}: {}",
        verify_certificate(&planes, &[1, 1, 2], &threshold)
    );
    Ok(())
}
