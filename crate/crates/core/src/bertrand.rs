//! Bertrand's postulate as the equation `phi(n + x) + 1 = n + x` on `0 < x < n - 2`.
//!
//! Each solution `x` marks a prime `n + x` strictly between `n` and `2n - 2`,
//! and the number of solutions is `pi(2n - 2) - pi(n)`. The upper endpoint
//! `2n - 2` is even and greater than 2 for `n > 3`, so it is never prime and
//! the open interval loses nothing against the prime count.

use serde::{Deserialize, Serialize};

use crate::arith::Sieve;
use crate::certify::certifies_prime;
use crate::error::{Error, Result};
use crate::Route;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BertrandWitness {
    pub n: u64,
    pub x: u64,
    pub prime: u64,
}

fn check_domain(sieve: &Sieve, n: u64) -> Result<()> {
    if n <= 3 {
        return Err(Error::Domain { op: "bertrand", value: n, reason: "n must exceed 3" });
    }
    sieve.require("bertrand", 2 * n - 2)
}

fn candidates(n: u64) -> std::ops::Range<u64> {
    1..n - 2
}

fn is_solution(sieve: &Sieve, route: Route, n: u64, x: u64) -> Result<bool> {
    match route {
        Route::Sieve => Ok(sieve.spf().is_prime_in_table(n + x)),
        Route::Congruences => certifies_prime(sieve.spf(), n + x),
    }
}

/// All `x` in `(0, n - 2)` with `n + x` prime, ascending.
pub fn bertrand_solutions(sieve: &Sieve, n: u64) -> Result<Vec<BertrandWitness>> {
    bertrand_solutions_via(sieve, n, Route::Sieve)
}

pub fn bertrand_solutions_via(sieve: &Sieve, n: u64, route: Route) -> Result<Vec<BertrandWitness>> {
    check_domain(sieve, n)?;
    let mut out = Vec::new();
    for x in candidates(n) {
        if is_solution(sieve, route, n, x)? {
            out.push(BertrandWitness { n, x, prime: n + x });
        }
    }
    Ok(out)
}

/// Smallest solution, scanning upward.
pub fn first_bertrand_witness(sieve: &Sieve, n: u64, route: Route) -> Result<Option<BertrandWitness>> {
    check_domain(sieve, n)?;
    for x in candidates(n) {
        if is_solution(sieve, route, n, x)? {
            return Ok(Some(BertrandWitness { n, x, prime: n + x }));
        }
    }
    Ok(None)
}

/// Number of solutions, by scanning every candidate.
pub fn bertrand_count(sieve: &Sieve, n: u64) -> Result<u64> {
    check_domain(sieve, n)?;
    let lo = n as usize + 1;
    let hi = (2 * n - 2) as usize;
    let spf = &sieve.spf().spf_slice()[lo..hi];
    Ok(spf.iter().zip(lo as u32..).filter(|&(&s, a)| s == a).count() as u64)
}

/// `pi(2n - 2) - pi(n)`.
pub fn expected_count(sieve: &Sieve, n: u64) -> Result<u64> {
    check_domain(sieve, n)?;
    Ok(sieve.prime_pi(2 * n - 2)? - sieve.prime_pi(n)?)
}

/// Does the solution count equal `pi(2n - 2) - pi(n)`?
pub fn count_identity_check(sieve: &Sieve, n: u64) -> Result<bool> {
    Ok(bertrand_count(sieve, n)? == expected_count(sieve, n)?)
}
