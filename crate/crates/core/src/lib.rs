//! Totient-equation forms of classical prime problems, made executable.
//!
//! Primality becomes `phi(a) + 1 = a` or a system of Fermat congruences
//! over the primes up to `isqrt(a)`; Bertrand's postulate and the binary and
//! ternary Goldbach problems become solvability questions for systems of such
//! equations. Every form is enumerated here over sieve-backed tables and can
//! be cross-checked against the brute-force references in [`oracle`].

pub mod arith;
pub mod bertrand;
pub mod certify;
pub mod error;
pub mod goldbach;
pub mod oracle;
pub mod sweep;

pub use arith::{build_spf, PrimePi, Sieve, SpfTable};
pub use certify::{certify, Certificate, CongruenceCheck, Verdict};
pub use error::{Error, Result};

/// How candidate values are decided prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Smallest-prime-factor table lookup.
    #[default]
    Sieve,
    /// The Fermat congruence system for each candidate.
    Congruences,
}
