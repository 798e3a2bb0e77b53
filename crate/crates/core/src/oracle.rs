//! Brute-force references.
//!
//! Nothing here touches the sieve tables or modular exponentiation: primality
//! is trial division by every integer up to the square root, the totient is a
//! gcd count, and the Goldbach enumerations are exhaustive scans. Only meant
//! for small inputs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest argument the pair and triple enumerations accept.
pub const ORACLE_LIMIT: u64 = 10_000_000;

/// Trial division by every integer in `2..=isqrt(a)`.
pub fn oracle_is_prime(a: u64) -> Result<bool> {
    if a == 0 {
        return Err(Error::Zero { op: "oracle_is_prime" });
    }
    Ok(a >= 2 && (2..=a.isqrt()).all(|d| !a.is_multiple_of(d)))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `|{k in 1..=a : gcd(k, a) = 1}|`.
pub fn oracle_phi(a: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::Zero { op: "oracle_phi" });
    }
    Ok((1..=a).filter(|&k| gcd(k, a) == 1).count() as u64)
}

/// Exponent of `d` in `a` by repeated division; `d >= 2`.
pub fn oracle_nu_p(d: u64, mut a: u64) -> Result<u32> {
    if a == 0 {
        return Err(Error::Zero { op: "oracle_nu_p" });
    }
    if !oracle_is_prime(d.max(1))? {
        return Err(Error::NotPrime { op: "oracle_nu_p", value: d });
    }
    let mut e = 0;
    while a.is_multiple_of(d) {
        a /= d;
        e += 1;
    }
    Ok(e)
}

/// Prime factors with multiplicity, by dividing out every integer in turn.
pub fn oracle_nu(mut a: u64) -> Result<u32> {
    if a == 0 {
        return Err(Error::Zero { op: "oracle_nu" });
    }
    let mut count = 0;
    let mut d = 2;
    while d * d <= a {
        while a.is_multiple_of(d) {
            a /= d;
            count += 1;
        }
        d += 1;
    }
    if a > 1 {
        count += 1;
    }
    Ok(count)
}

/// Primality of every integer in `0..=limit`, by trial division.
fn trial_table(limit: u64) -> Vec<bool> {
    (0..=limit).map(|a| a >= 2 && (2..=a.isqrt()).all(|d| a % d != 0)).collect()
}

/// Every way to write an even total as `p + q` with primes `p <= q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDecomposition {
    pub total: u64,
    pub pairs: Vec<(u64, u64)>,
}

impl PairDecomposition {
    /// Pairs made of two odd primes.
    pub fn odd_pairs(&self) -> usize {
        self.pairs.iter().filter(|&&(p, _)| p != 2).count()
    }
}

pub fn oracle_pairs(total: u64) -> Result<PairDecomposition> {
    if total < 4 || total % 2 == 1 || total > ORACLE_LIMIT {
        return Err(Error::Domain {
            op: "oracle_pairs",
            value: total,
            reason: "total must be even, at least 4 and within the oracle limit",
        });
    }
    let pairs = (2..=total / 2)
        .filter(|&p| oracle_is_prime(p).unwrap_or(false) && oracle_is_prime(total - p).unwrap_or(false))
        .map(|p| (p, total - p))
        .collect();
    Ok(PairDecomposition { total, pairs })
}

/// Every `(p, q, r)` of primes with `p + q + r = n`, `q` odd and `p <= r`,
/// ordered by `q` ascending, then `p` descending.
pub fn oracle_triples(n: u64) -> Result<Vec<(u64, u64, u64)>> {
    if n.is_multiple_of(2) || n <= 5 || n > ORACLE_LIMIT {
        return Err(Error::Domain {
            op: "oracle_triples",
            value: n,
            reason: "n must be odd, greater than 5 and within the oracle limit",
        });
    }
    let prime = trial_table(n);
    let mut out = Vec::new();
    for q in (3..n).step_by(2) {
        if !prime[q as usize] {
            continue;
        }
        let rest = n - q;
        for p in (2..=rest / 2).rev() {
            let r = rest - p;
            if prime[p as usize] && prime[r as usize] {
                out.push((p, q, r));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_examples() {
        assert!(!oracle_is_prime(1).unwrap());
        assert!(oracle_is_prime(2).unwrap());
        assert!(oracle_is_prime(97).unwrap());
        assert!(!oracle_is_prime(91).unwrap());
        assert!(oracle_is_prime(0).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(oracle_phi(1).unwrap(), 1);
        assert_eq!(oracle_phi(12).unwrap(), 4);
        assert_eq!(oracle_nu(12).unwrap(), 3);
        assert_eq!(oracle_nu(1).unwrap(), 0);
        assert_eq!(oracle_nu_p(2, 12).unwrap(), 2);
        assert!(oracle_nu_p(4, 12).is_err());
        assert!(oracle_nu_p(1, 12).is_err());
    }

    #[test]
    fn pair_examples() {
        assert_eq!(oracle_pairs(4).unwrap().pairs, vec![(2, 2)]);
        assert_eq!(oracle_pairs(10).unwrap().pairs, vec![(3, 7), (5, 5)]);
        assert_eq!(oracle_pairs(6).unwrap().pairs, vec![(3, 3)]);
        assert_eq!(oracle_pairs(4).unwrap().odd_pairs(), 0);
        for bad in [0, 2, 7, ORACLE_LIMIT + 2] {
            assert!(oracle_pairs(bad).is_err());
        }
    }

    #[test]
    fn triple_examples() {
        assert_eq!(oracle_triples(7).unwrap(), vec![(2, 3, 2)]);
        assert_eq!(oracle_triples(9).unwrap(), vec![(3, 3, 3), (2, 5, 2)]);
        assert_eq!(oracle_triples(11).unwrap(), vec![(3, 3, 5), (3, 5, 3), (2, 7, 2)]);
        for bad in [4, 5, 8, 12] {
            assert!(oracle_triples(bad).is_err());
        }
    }

    #[test]
    fn triples_are_duplicate_free() {
        for n in (7..400).step_by(2) {
            let t = oracle_triples(n).unwrap();
            let mut sorted = t.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), t.len());
            assert!(t.iter().all(|&(p, q, r)| p + q + r == n && p <= r && q % 2 == 1));
        }
    }
}
