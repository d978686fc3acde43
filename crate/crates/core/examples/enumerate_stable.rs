//! Walk every sequential feasible (swap-stable) drop-out order of a fleet.
//!
//! Run with `cargo run --example enumerate_stable`.

use refuel::{
    enumerate_sequential_feasible, is_sequential_feasible, Instance, ProblemKind, Stability,
};

fn main() -> refuel::Result<()> {
    let inst = Instance::from_ints(
        ProblemKind::Arp,
        &[(6, 2), (1, 1), (2, 1), (3, 2), (5, 4)],
        "five planes",
    )?;

    println!("swap-stable orders of a {}-plane fleet:", inst.n());
    let count = enumerate_sequential_feasible(&inst, |perm, total| {
        println!("  {perm}  ->  {total} (~{})", total.decimal_string());
    })?;
    println!("Q_n = {count} of {} orders total", factorial(inst.n()));

    // A non-stable order comes with a witness: the adjacent swap that
    // strictly improves it.
    let worst = "1,2,3,4,5".parse()?;
    match is_sequential_feasible(&inst, &worst)? {
        Stability::Stable => println!("{worst} is stable"),
        Stability::Improvable(w) => println!(
            "{worst} is not stable: swapping positions {} and {} lifts {} to {}",
            w.position,
            w.position + 1,
            w.original_value,
            w.swapped_value
        ),
    }
    Ok(())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
