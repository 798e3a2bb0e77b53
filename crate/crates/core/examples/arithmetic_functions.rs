// Prime exponents, prime-factor counts, totients and prime counts from one
// smallest-prime-factor table.
//
// `cargo run --example arithmetic_functions -- 360`

use std::error::Error;

use phi_systems::Sieve;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    describe(360)
}

fn describe(a: u64) -> Result<(), Box<dyn Error>> {
    let sieve = Sieve::new(a.max(100))?;
    let factors = sieve.spf().factorize(a)?;
    let shown: Vec<String> =
        factors.iter().map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") }).collect();
    println!("{a} = {}", if shown.is_empty() { "1".to_string() } else { shown.join(" * ") });
    for &(p, _) in &factors {
        println!("  nu_{p}({a}) = {}", sieve.nu_p(p, a)?);
    }
    println!("  nu({a})  = {}", sieve.nu(a)?);
    println!("  phi({a}) = {}", sieve.phi(a)?);
    println!("  prime?   {} (phi(a) + 1 = a: {})", sieve.is_prime(a)?, sieve.spf().satisfies_totient_equation(a)?);
    println!("  pi({a})  = {}", sieve.prime_pi(a)?);

    println!();
    println!("{:>4} {:>3} {:>5}", "a", "nu", "phi");
    for b in 1..=12 {
        println!("{b:>4} {:>3} {:>5}", sieve.nu(b)?, sieve.phi(b)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(a) => describe(a.parse()?),
        None => run_example(),
    }
}
