//! Binary and ternary Goldbach problems as totient-equation systems.
//!
//! Binary forms for `2n`:
//!
//! * raw form: `nu((x - 2n)(4n - x)) = 2` with `2n + 1 < x < 4n - 1`;
//! * centred form: `nu(n^2 - x^2) = 2` with `0 <= x <= n - 3`, obtained from
//!   the raw form by `x -> 3n - x`;
//! * the paired system `phi(n - x) + 1 = n - x`, `phi(n + x) + 1 = n + x`;
//! * the paired Fermat congruence systems for `n - x` and `n + x`.
//!
//! The raw window is symmetric under `x -> 6n - x` (it swaps the two
//! factors), so it holds each unordered pair `{p, q}` twice when `p != q`.
//! Only its lower half `x <= 3n` maps onto centred solutions; the upper half
//! lands on `-x`. [`substitution_bijection_check`] verifies both facts.
//!
//! Ternary form for odd `n > 5`: `(n - x - y)(2x - n)(n - x + y)` has
//! `nu = 3` under `0 <= y < x < x + y + 2 < n + 1 < 2x`. The middle prime
//! `q = 2x - n` is odd because `n` is. The peculiar case additionally
//! requires `(n - x - y)(2x - n) ≡ 0 (mod 3)`.

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime_by_trial_division, Sieve};
use crate::certify::certifies_prime;
use crate::error::{Error, Result};
use crate::Route;

/// A solution `x` of the paired system, with `n - x` and `n + x` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryWitness {
    pub n: u64,
    pub x: u64,
    pub p: u64,
    pub q: u64,
}

impl BinaryWitness {
    fn new(n: u64, x: u64) -> Self {
        Self { n, x, p: n - x, q: n + x }
    }
}

/// A solution `(x, y)` of the triple system for odd `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryWitness {
    pub n: u64,
    pub x: u64,
    pub y: u64,
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

impl TernaryWitness {
    fn new(n: u64, x: u64, y: u64) -> Self {
        Self { n, x, y, p: n - x - y, q: 2 * x - n, r: n - x + y }
    }

    /// `(n - x - y)(2x - n) ≡ 0 (mod 3)`.
    pub fn is_peculiar(&self) -> bool {
        ((self.p % 3) * (self.q % 3)).is_multiple_of(3)
    }

    /// The ordering chain `0 <= y < x < x + y + 2 < n + 1 < 2x`.
    pub fn satisfies_chain(&self) -> bool {
        self.y < self.x && self.x < self.x + self.y + 2 && self.x + self.y + 2 < self.n + 1 && self.n + 1 < 2 * self.x
    }
}

// ---------------------------------------------------------------------------
// binary

fn binary_domain(sieve: &Sieve, n: u64, min: u64, op: &'static str) -> Result<()> {
    if n < min {
        let reason = if min == 2 {
            "n must be at least 2"
        } else if min == 3 {
            "n must be at least 3"
        } else {
            "n must exceed 3"
        };
        return Err(Error::Domain { op, value: n, reason });
    }
    sieve.require(op, 2 * n)
}

/// `nu(n^2 - x^2)`, as `nu(n - x) + nu(n + x)`.
fn nu_difference_of_squares(sieve: &Sieve, n: u64, x: u64) -> Result<u32> {
    Ok(sieve.nu(n - x)? + sieve.nu(n + x)?)
}

/// `x` range of the centred form; `[0, 0]` for `n = 2`, `[0, n - 3]` otherwise.
fn centred_range(n: u64) -> std::ops::RangeInclusive<u64> {
    if n == 2 {
        0..=0
    } else {
        0..=n - 3
    }
}

fn binary_holds(sieve: &Sieve, route: Route, n: u64, x: u64) -> Result<bool> {
    if n == 2 {
        return Ok(x == 0);
    }
    match route {
        // n - x >= 3, so nu = 2 forces both factors prime
        Route::Sieve => Ok(nu_difference_of_squares(sieve, n, x)? == 2),
        Route::Congruences => Ok(certifies_prime(sieve.spf(), n - x)? && certifies_prime(sieve.spf(), n + x)?),
    }
}

/// All `x` in `[0, n - 3]` with `n - x` and `n + x` prime, ascending.
///
/// `n = 2` has the empty range `[0, -1]`; it is given the single witness
/// `x = 0`, the pair `2 + 2`.
pub fn binary_solutions(sieve: &Sieve, n: u64) -> Result<Vec<BinaryWitness>> {
    binary_domain(sieve, n, 2, "binary_solutions")?;
    let mut out = Vec::new();
    for x in centred_range(n) {
        if binary_holds(sieve, Route::Sieve, n, x)? {
            out.push(BinaryWitness::new(n, x));
        }
    }
    Ok(out)
}

/// Smallest `x` solving the binary system, by the chosen route.
pub fn first_binary_witness(sieve: &Sieve, n: u64, route: Route) -> Result<Option<BinaryWitness>> {
    let min = if route == Route::Congruences { 4 } else { 2 };
    binary_domain(sieve, n, min, "first_binary_witness")?;
    let spf = sieve.spf();
    for x in centred_range(n) {
        let hit = match route {
            Route::Sieve => n == 2 || (spf.is_prime_in_table(n - x) && spf.is_prime_in_table(n + x)),
            Route::Congruences => binary_holds(sieve, route, n, x)?,
        };
        if hit {
            return Ok(Some(BinaryWitness::new(n, x)));
        }
    }
    Ok(None)
}

/// Number of binary solutions, by the chosen route.
pub fn binary_count(sieve: &Sieve, n: u64, route: Route) -> Result<u64> {
    Ok(match route {
        Route::Sieve => binary_solutions(sieve, n)?.len() as u64,
        Route::Congruences => fermat_system_solutions(sieve, n)?.len() as u64,
    })
}

/// All `x` in `(2n + 1, 4n - 1)` with `nu((x - 2n)(4n - x)) = 2`, ascending.
///
/// Both factors exceed 1 on this window, so `nu = 2` means both are prime.
pub fn raw_form_solutions(sieve: &Sieve, n: u64) -> Result<Vec<u64>> {
    binary_domain(sieve, n, 2, "raw_form_solutions")?;
    let mut out = Vec::new();
    for x in 2 * n + 2..4 * n - 1 {
        if sieve.nu(x - 2 * n)? + sieve.nu(4 * n - x)? == 2 {
            out.push(x);
        }
    }
    Ok(out)
}

/// `{|3n - x| : x in raw_form_solutions(n)}`, ascending and deduplicated.
///
/// This is the raw form's solution set after folding its `x -> 6n - x`
/// mirror image, and equals the centred `x`-set for `n >= 3`.
pub fn folded_raw_form(sieve: &Sieve, n: u64) -> Result<Vec<u64>> {
    let mut folded: Vec<u64> = raw_form_solutions(sieve, n)?.into_iter().map(|x| (3 * n).abs_diff(x)).collect();
    folded.sort_unstable();
    folded.dedup();
    Ok(folded)
}

/// Checks the substitution `x -> 3n - x` between the raw and centred forms.
///
/// True iff the raw solutions are closed under `x -> 6n - x` and the
/// substitution maps the raw solutions with `x <= 3n` one-to-one onto the
/// centred solutions.
pub fn substitution_bijection_check(sieve: &Sieve, n: u64) -> Result<bool> {
    binary_domain(sieve, n, 3, "substitution_bijection_check")?;
    let raw = raw_form_solutions(sieve, n)?;
    let centred: Vec<u64> = binary_solutions(sieve, n)?.iter().map(|w| w.x).collect();

    let mirrored = raw.iter().rev().map(|&x| 6 * n - x);
    if !mirrored.eq(raw.iter().copied()) {
        return Ok(false);
    }
    // raw is ascending, so the lower half maps to a descending image
    let mut image: Vec<u64> = raw.iter().filter(|&&x| x <= 3 * n).map(|&x| 3 * n - x).collect();
    image.reverse();
    Ok(image == centred)
}

/// All `x` in `[0, n - 3]` for which both `n - x` and `n + x` pass their
/// Fermat congruence systems.
pub fn fermat_system_solutions(sieve: &Sieve, n: u64) -> Result<Vec<u64>> {
    binary_domain(sieve, n, 4, "fermat_system_solutions")?;
    let mut out = Vec::new();
    for x in 0..=n - 3 {
        if binary_holds(sieve, Route::Congruences, n, x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Is the even number `total` a sum of two primes (including `2 + 2`)?
pub fn is_sum_of_two_primes(sieve: &Sieve, total: u64) -> Result<bool> {
    if total < 4 || total % 2 == 1 {
        return Err(Error::Domain {
            op: "is_sum_of_two_primes",
            value: total,
            reason: "total must be even and at least 4",
        });
    }
    sieve.require("is_sum_of_two_primes", total)?;
    let spf = sieve.spf();
    Ok(spf.primes_up_to(total / 2).iter().any(|&p| spf.is_prime_in_table(total - u64::from(p))))
}

// ---------------------------------------------------------------------------
// ternary

fn ternary_domain(sieve: &Sieve, n: u64, op: &'static str) -> Result<()> {
    if n.is_multiple_of(2) || n <= 5 {
        return Err(Error::Domain { op, value: n, reason: "n must be odd and greater than 5" });
    }
    sieve.require(op, n)
}

/// Visits every ternary solution of `n` in `(x, y)` order until `visit`
/// returns `false`.
fn scan_ternary(sieve: &Sieve, n: u64, mut visit: impl FnMut(TernaryWitness) -> bool) {
    let spf = sieve.spf();
    // n + 1 < 2x
    let x_min = (n + 3) / 2;
    for x in x_min..n {
        if !spf.is_prime_in_table(2 * x - n) {
            continue;
        }
        // y < x and x + y + 2 < n + 1
        let y_end = x.min(n - 1 - x);
        for y in 0..y_end {
            if spf.is_prime_in_table(n - x - y)
                && spf.is_prime_in_table(n - x + y)
                && !visit(TernaryWitness::new(n, x, y))
            {
                return;
            }
        }
    }
}

/// Every `(x, y)` on the chain with all three forms prime, ordered by `(x, y)`.
pub fn ternary_solutions(sieve: &Sieve, n: u64) -> Result<Vec<TernaryWitness>> {
    ternary_domain(sieve, n, "ternary_solutions")?;
    let mut out = Vec::new();
    scan_ternary(sieve, n, |w| {
        out.push(w);
        true
    });
    Ok(out)
}

pub fn first_ternary_witness(sieve: &Sieve, n: u64) -> Result<Option<TernaryWitness>> {
    ternary_domain(sieve, n, "first_ternary_witness")?;
    let mut first = None;
    scan_ternary(sieve, n, |w| {
        first = Some(w);
        false
    });
    Ok(first)
}

pub fn ternary_count(sieve: &Sieve, n: u64) -> Result<u64> {
    ternary_domain(sieve, n, "ternary_count")?;
    let mut count = 0;
    scan_ternary(sieve, n, |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// Ternary solutions with `(n - x - y)(2x - n) ≡ 0 (mod 3)`.
pub fn peculiar_solutions(sieve: &Sieve, n: u64) -> Result<Vec<TernaryWitness>> {
    ternary_domain(sieve, n, "peculiar_solutions")?;
    let mut out = Vec::new();
    scan_ternary(sieve, n, |w| {
        if w.is_peculiar() {
            out.push(w);
        }
        true
    });
    Ok(out)
}

pub fn first_peculiar_witness(sieve: &Sieve, n: u64) -> Result<Option<TernaryWitness>> {
    ternary_domain(sieve, n, "first_peculiar_witness")?;
    let mut first = None;
    scan_ternary(sieve, n, |w| {
        if w.is_peculiar() {
            first = Some(w);
            false
        } else {
            true
        }
    });
    Ok(first)
}

pub fn peculiar_count(sieve: &Sieve, n: u64) -> Result<u64> {
    ternary_domain(sieve, n, "peculiar_count")?;
    let mut count = 0;
    scan_ternary(sieve, n, |w| {
        count += u64::from(w.is_peculiar());
        true
    });
    Ok(count)
}

/// Inverts the ternary parametrization: `x = (n + q) / 2`, `y = (r - p) / 2`.
pub fn decomposition_to_xy(p: u64, q: u64, r: u64, n: u64) -> Result<(u64, u64)> {
    let fail = |reason| Err(Error::Decomposition { p, q, r, n, reason });
    if n.is_multiple_of(2) || n <= 5 {
        return fail("n must be odd and greater than 5");
    }
    if p.checked_add(q).and_then(|s| s.checked_add(r)) != Some(n) {
        return fail("p + q + r must equal n");
    }
    if ![p, q, r].into_iter().all(is_prime_by_trial_division) {
        return fail("p, q and r must be prime");
    }
    if q.is_multiple_of(2) {
        return fail("the middle prime q must be odd");
    }
    if p > r {
        return fail("p must not exceed r");
    }
    if p % 2 != r % 2 {
        return fail("p and r must have equal parity");
    }
    Ok(((n + q) / 2, (r - p) / 2))
}

/// `[peculiar_solutions(n) nonempty] <=> [n - 3 is a sum of two primes]`.
pub fn proposition_check(sieve: &Sieve, n: u64) -> Result<bool> {
    ternary_domain(sieve, n, "proposition_check")?;
    let peculiar = first_peculiar_witness(sieve, n)?.is_some();
    Ok(peculiar == is_sum_of_two_primes(sieve, n - 3)?)
}
