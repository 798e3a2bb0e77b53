// Primality as a system of Fermat congruences over the primes up to the
// square root.
//
// `cargo run --example fermat_certificate -- 1009 1001`

use std::error::Error;

use phi_systems::certify::{certify, certify_with, CertifyOptions};
use phi_systems::{build_spf, SpfTable};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = build_spf(1000)?;
    for m in [2, 9, 25, 29, 97, 221] {
        show(&table, m)?;
    }
    // a composite fails every congruence at its prime factors
    let full = certify_with(&table, 30, CertifyOptions::full())?;
    let failing: Vec<u64> = full.checks.iter().filter(|c| !c.holds()).map(|c| c.modulus).collect();
    println!("30: failing moduli {failing:?}");
    Ok(())
}

fn show(table: &SpfTable, m: u64) -> Result<(), Box<dyn Error>> {
    let cert = certify(table, m)?;
    println!("{m}: {:?} after {} congruence(s)", cert.verdict, cert.check_count);
    for c in &cert.checks {
        let mark = if c.holds() { "ok" } else { "fails" };
        println!("    {}^{} mod {} = {}  {mark}", c.base, c.exponent, c.modulus, c.residue);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let subjects: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    if subjects.is_empty() {
        return run_example();
    }
    let root = subjects.iter().map(|m| m.isqrt()).max().unwrap_or(2).max(2);
    let table = build_spf(root)?;
    for m in subjects {
        show(&table, m)?;
    }
    Ok(())
}
