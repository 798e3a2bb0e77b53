// Odd n as (n - x - y) + (2x - n) + (n - x + y), and back.
//
// `cargo run --example ternary_decompositions -- 19`

use std::error::Error;

use phi_systems::goldbach::{decomposition_to_xy, peculiar_solutions, ternary_solutions};
use phi_systems::Sieve;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sieve = Sieve::new(100)?;
    for n in [7, 9, 11, 19] {
        show(&sieve, n)?;
    }
    Ok(())
}

fn show(sieve: &Sieve, n: u64) -> Result<(), Box<dyn Error>> {
    println!("n = {n}");
    let peculiar = peculiar_solutions(sieve, n)?;
    for w in ternary_solutions(sieve, n)? {
        let back = decomposition_to_xy(w.p, w.q, w.r, n)?;
        assert_eq!(back, (w.x, w.y));
        let tag = if peculiar.contains(&w) { "  (peculiar)" } else { "" };
        println!("    (x, y) = ({}, {}): {} + {} + {}{tag}", w.x, w.y, w.p, w.q, w.r);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(n) => {
            let n: u64 = n.parse()?;
            show(&Sieve::new(n)?, n)
        }
        None => run_example(),
    }
}
