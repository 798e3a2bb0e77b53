// Solutions of phi(n + x) + 1 = n + x on 0 < x < n - 2, checked against
// pi(2n - 2) - pi(n).
//
// `cargo run --example bertrand_window -- 100`

use std::error::Error;

use phi_systems::bertrand::{bertrand_solutions, bertrand_solutions_via, count_identity_check, expected_count};
use phi_systems::{Route, Sieve};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sieve = Sieve::new(200)?;
    for n in [4, 5, 10, 31, 100] {
        show(&sieve, n)?;
    }
    Ok(())
}

fn show(sieve: &Sieve, n: u64) -> Result<(), Box<dyn Error>> {
    let witnesses = bertrand_solutions(sieve, n)?;
    // same solutions when each candidate goes through its congruence system
    assert_eq!(witnesses, bertrand_solutions_via(sieve, n, Route::Congruences)?);
    let xs: Vec<u64> = witnesses.iter().map(|w| w.x).collect();
    println!(
        "n = {n}: x in {xs:?}, {} solution(s), pi(2n-2) - pi(n) = {}, identity {}",
        xs.len(),
        expected_count(sieve, n)?,
        if count_identity_check(sieve, n)? { "holds" } else { "FAILS" }
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(n) => {
            let n: u64 = n.parse()?;
            show(&Sieve::new((2 * n).max(8))?, n)
        }
        None => run_example(),
    }
}
