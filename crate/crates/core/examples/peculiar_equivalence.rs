// An odd n > 5 has a decomposition containing the prime 3 exactly when
// n - 3 is a sum of two primes.
//
// `cargo run --example peculiar_equivalence -- 100001`

use std::error::Error;

use phi_systems::goldbach::{first_peculiar_witness, is_sum_of_two_primes, proposition_check};
use phi_systems::Sieve;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    sweep(5001)
}

fn sweep(hi: u64) -> Result<(), Box<dyn Error>> {
    let sieve = Sieve::new(hi.max(7))?;
    let mut checked = 0;
    for n in (7..=hi).step_by(2) {
        assert!(proposition_check(&sieve, n)?, "equivalence fails at {n}");
        checked += 1;
    }
    println!("equivalence holds for all {checked} odd n in [7, {hi}]");
    for n in [7, 9, 101, hi | 1] {
        if n > hi {
            continue;
        }
        let w = first_peculiar_witness(&sieve, n)?.expect("peculiar witness");
        println!(
            "  {n} = {} + {} + {};  {} two-prime sum: {}",
            w.p,
            w.q,
            w.r,
            n - 3,
            is_sum_of_two_primes(&sieve, n - 3)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(hi) => sweep(hi.parse()?),
        None => run_example(),
    }
}
