// The four binary forms for one n, side by side.
//
// `cargo run --example binary_forms -- 50`

use std::error::Error;

use phi_systems::goldbach::{
    binary_solutions, fermat_system_solutions, folded_raw_form, raw_form_solutions, substitution_bijection_check,
};
use phi_systems::Sieve;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sieve = Sieve::new(200)?;
    for n in [5, 7, 50] {
        show(&sieve, n)?;
    }
    Ok(())
}

fn show(sieve: &Sieve, n: u64) -> Result<(), Box<dyn Error>> {
    println!("2n = {}", 2 * n);
    let centred = binary_solutions(sieve, n)?;
    for w in &centred {
        println!("    x = {:>3}: {} + {}", w.x, w.p, w.q);
    }
    let raw = raw_form_solutions(sieve, n)?;
    println!("  raw form x in ({}, {}): {raw:?}", 2 * n + 1, 4 * n - 1);
    println!("  folded by |3n - x|:     {:?}", folded_raw_form(sieve, n)?);
    println!("  substitution bijection: {}", substitution_bijection_check(sieve, n)?);
    if n > 3 {
        println!("  Fermat-system x:        {:?}", fermat_system_solutions(sieve, n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(n) => {
            let n: u64 = n.parse()?;
            show(&Sieve::new(2 * n)?, n)
        }
        None => run_example(),
    }
}
