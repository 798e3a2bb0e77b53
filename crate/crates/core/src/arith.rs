//! Sieve-backed arithmetic functions.
//!
//! [`SpfTable`] stores the smallest prime factor of every integer in
//! `[2, limit]`, which turns factorization into a chain of table lookups.
//! On top of it sit the prime exponent `nu_p`, the total prime-factor count
//! `nu` (with multiplicity), Euler's totient `phi`, and primality as
//! `nu(a) == 1`. [`PrimePi`] is the cumulative prime count over the same
//! range.
//!
//! Arguments above the table limit are factored by trial division with the
//! table's primes (and odd integers past them), so every function stays
//! correct on the whole `u64` domain, only slower.

use crate::error::{Error, Result};

/// Default cap on sieve memory, in bytes.
pub const DEFAULT_MEMORY_BUDGET: u64 = 1 << 30;

/// Smallest-prime-factor table over `[2, limit]`.
#[derive(Debug, Clone)]
pub struct SpfTable {
    limit: u64,
    spf: Vec<u32>,
    primes: Vec<u32>,
}

/// Builds the smallest-prime-factor table for `[2, limit]` under the default
/// memory budget.
pub fn build_spf(limit: u64) -> Result<SpfTable> {
    SpfTable::with_budget(limit, DEFAULT_MEMORY_BUDGET)
}

impl SpfTable {
    pub fn new(limit: u64) -> Result<Self> {
        build_spf(limit)
    }

    /// Rough upper estimate of the heap used by a table of this size.
    pub fn estimated_bytes(limit: u64) -> u64 {
        let entries = limit.saturating_add(1);
        // pi(x) < 1.26 x / ln x for x > 1
        let ln = (limit.max(3) as f64).ln();
        let primes = (1.26 * limit as f64 / ln) as u64 + 16;
        entries.saturating_mul(4).saturating_add(primes.saturating_mul(4))
    }

    pub fn with_budget(limit: u64, budget: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::LimitTooSmall(limit));
        }
        if limit >= u64::from(u32::MAX) {
            return Err(Error::LimitTooLarge(limit));
        }
        let needed = Self::estimated_bytes(limit);
        if needed > budget {
            return Err(Error::MemoryBudget { limit, needed, budget });
        }

        // Linear sieve: every composite is struck exactly once, by its
        // smallest prime factor.
        let len = limit as usize + 1;
        let mut spf = vec![0u32; len];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..len {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let j = i * p as usize;
                if p > si || j >= len {
                    break;
                }
                spf[j] = p;
            }
        }
        Ok(Self { limit, spf, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// The primes `<= x`, ascending. Truncated at the table limit.
    pub fn primes_up_to(&self, x: u64) -> &[u32] {
        let end = self.primes.partition_point(|&p| u64::from(p) <= x);
        &self.primes[..end]
    }

    /// Smallest prime factor of `a`, or `None` when `a < 2` or `a` is past
    /// the limit.
    pub fn smallest_prime_factor(&self, a: u64) -> Option<u64> {
        if a < 2 || a > self.limit {
            None
        } else {
            Some(u64::from(self.spf[a as usize]))
        }
    }

    /// Table lookup primality for `2 <= a <= limit`. No range check.
    #[inline]
    pub(crate) fn is_prime_in_table(&self, a: u64) -> bool {
        a >= 2 && self.spf[a as usize] as u64 == a
    }

    /// Raw table slice, indexed by the integer itself.
    pub(crate) fn spf_slice(&self) -> &[u32] {
        &self.spf
    }

    /// Prime factorization of `a` as ascending `(prime, exponent)` pairs.
    pub fn factorize(&self, a: u64) -> Result<Vec<(u64, u32)>> {
        if a == 0 {
            return Err(Error::Zero { op: "factorize" });
        }
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut push = |p: u64| match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        };

        let mut rest = a;
        if rest > self.limit {
            for &p in &self.primes {
                let p = u64::from(p);
                if p * p > rest {
                    break;
                }
                while rest.is_multiple_of(p) {
                    rest /= p;
                    push(p);
                }
                if rest <= self.limit {
                    break;
                }
            }
            if rest > self.limit {
                // Ran out of table primes with rest still large.
                let last = u64::from(*self.primes.last().unwrap_or(&2));
                let mut d = if last % 2 == 0 { last + 1 } else { last + 2 };
                while d.checked_mul(d).is_some_and(|dd| dd <= rest) {
                    while rest.is_multiple_of(d) {
                        rest /= d;
                        push(d);
                    }
                    d += 2;
                }
                if rest > self.limit {
                    push(rest);
                    rest = 1;
                }
            }
        }
        while rest > 1 {
            let p = u64::from(self.spf[rest as usize]);
            rest /= p;
            push(p);
        }
        Ok(out)
    }

    /// Primality for any `a >= 1`: table lookup in range, trial division past it.
    pub fn is_prime(&self, a: u64) -> Result<bool> {
        if a == 0 {
            return Err(Error::Zero { op: "is_prime" });
        }
        if a <= self.limit {
            return Ok(self.is_prime_in_table(a));
        }
        Ok(self.nu(a)? == 1)
    }

    /// Exponent of the prime `p` in `a`.
    pub fn nu_p(&self, p: u64, a: u64) -> Result<u32> {
        if a == 0 {
            return Err(Error::Zero { op: "nu_p" });
        }
        if p == 0 || !self.is_prime(p)? {
            return Err(Error::NotPrime { op: "nu_p", value: p });
        }
        let mut rest = a;
        let mut exp = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            exp += 1;
        }
        Ok(exp)
    }

    /// Number of prime factors of `a`, counted with multiplicity.
    pub fn nu(&self, a: u64) -> Result<u32> {
        if a == 0 {
            return Err(Error::Zero { op: "nu" });
        }
        if a <= self.limit {
            let mut rest = a as usize;
            let mut count = 0;
            while rest > 1 {
                rest /= self.spf[rest] as usize;
                count += 1;
            }
            return Ok(count);
        }
        Ok(self.factorize(a)?.iter().map(|&(_, e)| e).sum())
    }

    /// Euler's totient, from the factorization of `a`.
    pub fn phi(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::Zero { op: "phi" });
        }
        let mut phi = 1u64;
        for (p, e) in self.factorize(a)? {
            phi *= (p - 1) * p.pow(e - 1);
        }
        Ok(phi)
    }

    /// `phi(a) + 1 == a`, the totient form of primality.
    pub fn satisfies_totient_equation(&self, a: u64) -> Result<bool> {
        Ok(self.phi(a)? + 1 == a)
    }
}

/// Trial division by 2 and odd integers up to `isqrt(a)`; no table needed.
pub fn is_prime_by_trial_division(a: u64) -> bool {
    if a < 4 {
        return a >= 2;
    }
    if a.is_multiple_of(2) {
        return false;
    }
    let root = a.isqrt();
    (3..=root).step_by(2).all(|d| !a.is_multiple_of(d))
}

/// Cumulative prime count: `count(x)` is the number of primes `<= x`.
#[derive(Debug, Clone)]
pub struct PrimePi {
    cumulative: Vec<u32>,
}

impl PrimePi {
    pub fn new(table: &SpfTable) -> Self {
        let spf = table.spf_slice();
        let mut cumulative = Vec::with_capacity(spf.len());
        let mut running = 0u32;
        for (a, &s) in spf.iter().enumerate() {
            if a >= 2 && s as usize == a {
                running += 1;
            }
            cumulative.push(running);
        }
        Self { cumulative }
    }

    pub fn limit(&self) -> u64 {
        self.cumulative.len() as u64 - 1
    }

    pub fn count(&self, x: u64) -> Result<u64> {
        self.cumulative.get(x as usize).map(|&c| u64::from(c)).ok_or(Error::OutOfRange {
            op: "prime_pi",
            value: x,
            limit: self.limit(),
        })
    }
}

/// Factor table and prime counts over one shared range.
#[derive(Debug, Clone)]
pub struct Sieve {
    spf: SpfTable,
    pi: PrimePi,
}

impl Sieve {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_budget(limit, DEFAULT_MEMORY_BUDGET)
    }

    /// Estimated bytes for both tables.
    pub fn estimated_bytes(limit: u64) -> u64 {
        SpfTable::estimated_bytes(limit).saturating_add(limit.saturating_add(1).saturating_mul(4))
    }

    pub fn with_budget(limit: u64, budget: u64) -> Result<Self> {
        let needed = Self::estimated_bytes(limit);
        if limit >= 2 && limit < u64::from(u32::MAX) && needed > budget {
            return Err(Error::MemoryBudget { limit, needed, budget });
        }
        let spf = SpfTable::with_budget(limit, budget)?;
        let pi = PrimePi::new(&spf);
        Ok(Self { spf, pi })
    }

    pub fn limit(&self) -> u64 {
        self.spf.limit()
    }

    pub fn spf(&self) -> &SpfTable {
        &self.spf
    }

    pub fn pi(&self) -> &PrimePi {
        &self.pi
    }

    pub fn is_prime(&self, a: u64) -> Result<bool> {
        self.spf.is_prime(a)
    }

    pub fn nu(&self, a: u64) -> Result<u32> {
        self.spf.nu(a)
    }

    pub fn nu_p(&self, p: u64, a: u64) -> Result<u32> {
        self.spf.nu_p(p, a)
    }

    pub fn phi(&self, a: u64) -> Result<u64> {
        self.spf.phi(a)
    }

    pub fn prime_pi(&self, x: u64) -> Result<u64> {
        self.pi.count(x)
    }

    /// Fails with `OutOfRange` unless `value` is covered by the tables.
    pub(crate) fn require(&self, op: &'static str, value: u64) -> Result<()> {
        if value > self.limit() {
            Err(Error::OutOfRange { op, value, limit: self.limit() })
        } else {
            Ok(())
        }
    }
}
