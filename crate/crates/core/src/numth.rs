//! Elementary number theory: factorization, divisors, totients, and lifting
//! of per-prime-power counting functions to arbitrary arguments.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{invalid, Result};

/// Prime power factorization of a positive integer.
///
/// Pairs are `(prime, exponent)` with strictly increasing primes and
/// exponents at least 1. The empty factorization represents 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factored integer, zero when `p` does not divide it.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .binary_search_by_key(&p, |&(q, _)| q)
            .map_or(0, |i| self.pairs[i].1)
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn divisor_count(&self) -> u64 {
        self.pairs.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    /// All divisors of the factored integer, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.pairs {
            let len = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn factor_nonzero(mut n: u64) -> Factorization {
    let mut pairs = Vec::new();
    let mut p = 2u64;
    while p <= n / p {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        pairs.push((n, 1));
    }
    Factorization { pairs }
}

fn require_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        invalid(format!("{what} must be a positive integer, got 0"))
    } else {
        Ok(())
    }
}

/// Factors `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    require_positive(n, "n")?;
    Ok(factor_nonzero(n))
}

/// Ascending list of all positive divisors of `n`.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n, "n")?;
    Ok(divisor_list(n))
}

/// Divisors of a value already known to be positive.
pub(crate) fn divisor_list(n: u64) -> Vec<u64> {
    debug_assert!(n > 0);
    factor_nonzero(n).divisors()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    require_positive(n, "n")?;
    Ok(phi(n))
}

pub(crate) fn phi(n: u64) -> u64 {
    factor_nonzero(n)
        .pairs
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Jordan's totient of order two, `n^2 * prod_{p | n} (1 - 1/p^2)`.
pub fn jordan_phi2(n: u64) -> Result<u64> {
    require_positive(n, "n")?;
    Ok(factor_nonzero(n)
        .pairs
        .iter()
        .map(|&(p, e)| p.pow(2 * (e - 1)) * (p * p - 1))
        .product())
}

/// Whether `k` divides the product of `factors`, without forming the product.
pub fn divides_product(k: u64, factors: &[u64]) -> bool {
    if k == 0 {
        return false;
    }
    let mut rest = k;
    for &f in factors {
        if f == 0 {
            return true;
        }
        rest /= rest.gcd(&f);
    }
    rest == 1
}

/// Lifts a per-prime-power counting function to four arbitrary arguments.
///
/// `f(p, [e1, e2, e3, e4], ek)` receives the exponents of `p` in `m, n, r, s`
/// and, when `k` is supplied, in `k`. The result is the product of `f` over
/// every prime dividing `mnrs`; with no such prime the empty product is 1.
pub fn multiplicative_lift4<F>(
    f: F,
    m: u64,
    n: u64,
    r: u64,
    s: u64,
    k: Option<u64>,
) -> Result<BigUint>
where
    F: Fn(u64, [u32; 4], Option<u32>) -> BigUint,
{
    for (v, name) in [(m, "m"), (n, "n"), (r, "r"), (s, "s")] {
        require_positive(v, name)?;
    }
    if let Some(k) = k {
        require_positive(k, "k")?;
        if !divides_product(k, &[m, n, r, s]) {
            return invalid(format!(
                "k = {k} does not divide m*n*r*s for ({m}, {n}, {r}, {s})"
            ));
        }
    }

    let facs = [m, n, r, s].map(factor_nonzero);
    let kf = k.map(factor_nonzero);
    // k | mnrs, so the primes of k are already among those of m, n, r, s.
    let mut primes: BTreeMap<u64, ()> = BTreeMap::new();
    for f in &facs {
        primes.extend(f.primes().map(|p| (p, ())));
    }

    let mut acc = BigUint::one();
    for &p in primes.keys() {
        let exps = [0, 1, 2, 3].map(|i| facs[i].exponent_of(p));
        acc *= f(p, exps, kf.as_ref().map(|kf| kf.exponent_of(p)));
    }
    Ok(acc)
}
