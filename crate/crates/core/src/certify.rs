//! Primality certification by a system of Fermat congruences.
//!
//! For `m >= 2` the system is `m^(p-1) ≡ 1 (mod p)` for every prime
//! `p <= isqrt(m)`. Each congruence holds exactly when `p` does not divide
//! `m`, so the whole system holds exactly when `m` has no prime factor up to
//! its square root, i.e. when `m` is prime. The residues are computed by
//! modular exponentiation; divisibility is never consulted.

use serde::{Deserialize, Serialize};

use crate::arith::SpfTable;
use crate::error::{Error, Result};

/// Largest modulus for which [`fermat_congruence_holds`] is defined.
pub const MAX_MODULUS: u64 = 1 << 32;

/// `base^exp mod modulus` by square-and-multiply.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "pow_mod: zero modulus");
    if modulus == 1 {
        return 0;
    }
    if modulus <= u64::from(u32::MAX) {
        // residues < 2^32, so products fit in 64 bits
        let mut b = base % modulus;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % modulus;
            }
            b = b * b % modulus;
            exp >>= 1;
        }
        acc
    } else {
        let m = u128::from(modulus);
        let mut b = u128::from(base) % m;
        let mut acc = 1u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        acc as u64
    }
}

/// One congruence `base^exponent mod modulus = residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCheck {
    pub modulus: u64,
    pub base: u64,
    pub exponent: u64,
    pub residue: u64,
}

impl CongruenceCheck {
    fn evaluate(base: u64, prime: u64) -> Self {
        let exponent = prime - 1;
        Self { modulus: prime, base, exponent, residue: pow_mod(base, exponent, prime) }
    }

    pub fn holds(&self) -> bool {
        self.residue == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Prime,
    Composite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: u64,
    /// Checks in increasing modulus order; empty unless retention was requested.
    pub checks: Vec<CongruenceCheck>,
    /// Number of congruences actually evaluated.
    pub check_count: usize,
    pub verdict: Verdict,
    /// Smallest prime whose congruence fails.
    pub failing_modulus: Option<u64>,
}

impl Certificate {
    pub fn is_prime(&self) -> bool {
        self.verdict == Verdict::Prime
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Keep every evaluated [`CongruenceCheck`] in the certificate.
    pub retain_checks: bool,
    /// Stop at the first failing congruence.
    pub short_circuit: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { retain_checks: false, short_circuit: true }
    }
}

impl CertifyOptions {
    /// Evaluate and keep the entire system.
    pub fn full() -> Self {
        Self { retain_checks: true, short_circuit: false }
    }
}

/// Does `m^(p-1) ≡ 1 (mod p)` hold?
pub fn fermat_congruence_holds(table: &SpfTable, m: u64, p: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::Zero { op: "fermat_congruence_holds" });
    }
    if p >= MAX_MODULUS {
        return Err(Error::Domain { op: "fermat_congruence_holds", value: p, reason: "modulus must be below 2^32" });
    }
    if p == 0 || !table.is_prime(p)? {
        return Err(Error::NotPrime { op: "fermat_congruence_holds", value: p });
    }
    Ok(pow_mod(m, p - 1, p) == 1)
}

/// Certifies `m` with the retained check list, stopping at the first failure.
pub fn certify(table: &SpfTable, m: u64) -> Result<Certificate> {
    certify_with(table, m, CertifyOptions { retain_checks: true, short_circuit: true })
}

pub fn certify_with(table: &SpfTable, m: u64, options: CertifyOptions) -> Result<Certificate> {
    let moduli = moduli_for(table, m)?;
    let mut checks = Vec::new();
    let mut check_count = 0;
    let mut failing_modulus = None;
    for &p in moduli {
        let check = CongruenceCheck::evaluate(m, u64::from(p));
        check_count += 1;
        if options.retain_checks {
            checks.push(check);
        }
        if !check.holds() && failing_modulus.is_none() {
            failing_modulus = Some(check.modulus);
            if options.short_circuit {
                break;
            }
        }
    }
    let verdict = if failing_modulus.is_some() { Verdict::Composite } else { Verdict::Prime };
    Ok(Certificate { subject: m, checks, check_count, verdict, failing_modulus })
}

/// Verdict only, without building a certificate.
pub fn certifies_prime(table: &SpfTable, m: u64) -> Result<bool> {
    Ok(moduli_for(table, m)?.iter().all(|&p| pow_mod(m, u64::from(p) - 1, u64::from(p)) == 1))
}

/// The moduli of the system for `m`: all primes `p <= isqrt(m)`.
fn moduli_for(table: &SpfTable, m: u64) -> Result<&[u32]> {
    if m < 2 {
        return Err(Error::Domain { op: "certify", value: m, reason: "subject must be at least 2" });
    }
    let root = m.isqrt();
    if root > table.limit() {
        return Err(Error::OutOfRange { op: "certify", value: root, limit: table.limit() });
    }
    Ok(table.primes_up_to(root))
}
