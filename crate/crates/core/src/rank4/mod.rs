//! Subgroup counts of `Z_m x Z_n x Z_r x Z_s`.
//!
//! Goursat's lemma applied to `(Z_m x Z_n) x (Z_r x Z_s)` pairs a section
//! `B <= A` of the left factor with a section `D <= C` of the right factor and
//! an isomorphism `A/B -> C/D`. Both quotients have the form `Z_u x Z_v`, so
//! the count is
//!
//! ```text
//! N(m, n, r, s) = sum over (u, v) of L(u, v) * R(u, v) * F(u, v)
//! ```
//!
//! where `L` and `R` are [`SideProfile`]s and `F(u, v)` counts automorphisms
//! of `Z_u x Z_v`. The order of the subgroup is `|A| * |D|`, which is why the
//! left profile is read by its outer order and the right one by its inner
//! order in the order-restricted count.

mod exponent;
mod naive;
mod profile;
mod scan;

pub use exponent::{
    exponent_side_profile, poly_order_distribution, poly_rank4, poly_rank4_order, ExponentKey,
    ExponentProfile,
};
pub use naive::{naive_count_rank4, naive_order_distribution, summation_tuples, GoursatTuple20};
pub use profile::{side_profile, ProfileKey, SideProfile};
pub use scan::{
    check_conjectures, check_symmetry_unimodality, scan_degree_rule, scan_equal_exponents,
    ConjectureReport, DegreeFinding, SymmetryReport,
};

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use crate::error::{invalid, Result};
use crate::goursat2::aut_count;
use crate::numth::{divides_product, multiplicative_lift4};

fn check_args(m: u64, n: u64, r: u64, s: u64) -> Result<()> {
    if [m, n, r, s].contains(&0) {
        return invalid(format!(
            "arguments must be positive, got ({m}, {n}, {r}, {s})"
        ));
    }
    Ok(())
}

fn check_order(m: u64, n: u64, r: u64, s: u64, k: u64) -> Result<()> {
    check_args(m, n, r, s)?;
    if k == 0 || !divides_product(k, &[m, n, r, s]) {
        return invalid(format!(
            "k = {k} does not divide m*n*r*s for ({m}, {n}, {r}, {s})"
        ));
    }
    Ok(())
}

/// Total number of subgroups of `Z_m x Z_n x Z_r x Z_s`, computed directly
/// (no prime splitting).
pub fn count_rank4(m: u64, n: u64, r: u64, s: u64) -> Result<BigUint> {
    check_args(m, n, r, s)?;
    let left = side_profile(m, n)?.by_pair();
    let right = side_profile(r, s)?.by_pair();
    let mut total = BigUint::default();
    for (&(u, v), lw) in &left {
        if let Some(rw) = right.get(&(u, v)) {
            total += lw * rw * aut_count(u, v)?;
        }
    }
    Ok(total)
}

type Sections = BTreeMap<(u64, u64), Vec<(u64, BigUint)>>;

fn sections(by_order: BTreeMap<(u64, u64, u64), BigUint>) -> Sections {
    let mut out = Sections::new();
    for ((u, v, order), w) in by_order {
        out.entry((u, v)).or_default().push((order, w));
    }
    out
}

fn pair_sections(left: &Sections, right: &Sections) -> Result<BTreeMap<u64, BigUint>> {
    let mut dist: BTreeMap<u64, BigUint> = BTreeMap::new();
    for (&(u, v), lw) in left {
        let Some(rw) = right.get(&(u, v)) else {
            continue;
        };
        let aut = aut_count(u, v)?;
        for (lo, lweight) in lw {
            let la = lweight * &aut;
            for (ro, rweight) in rw {
                *dist.entry(lo * ro).or_default() += &la * rweight;
            }
        }
    }
    Ok(dist)
}

/// `N(m, n, r, s; k)` for every `k | mnrs` that has subgroups, keyed by `k`.
pub fn order_distribution(m: u64, n: u64, r: u64, s: u64) -> Result<BTreeMap<u64, BigUint>> {
    check_args(m, n, r, s)?;
    let (lp, rp) = (side_profile(m, n)?, side_profile(r, s)?);
    // |K| = |A| * |D|
    let dist = pair_sections(&sections(lp.by_pair_outer()), &sections(rp.by_pair_inner()))?;
    let small = [m, n, r, s]
        .iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x))
        .is_some_and(|o| o <= 4096);
    if cfg!(debug_assertions) && small {
        // |K| = |B| * |C| must give the same distribution.
        let alt = pair_sections(&sections(lp.by_pair_inner()), &sections(rp.by_pair_outer()))?;
        debug_assert_eq!(
            dist, alt,
            "order distributions disagree for ({m}, {n}, {r}, {s})"
        );
    }
    Ok(dist)
}

/// Number of subgroups of order `k` of `Z_m x Z_n x Z_r x Z_s`, computed
/// directly.
pub fn count_rank4_order(m: u64, n: u64, r: u64, s: u64, k: u64) -> Result<BigUint> {
    check_order(m, n, r, s, k)?;
    let left = side_profile(m, n)?.by_pair_outer();
    let right = side_profile(r, s)?.by_pair_inner();
    let mut total = BigUint::default();
    for (&(u, v, outer), lw) in &left {
        if k % outer != 0 {
            continue;
        }
        if let Some(rw) = right.get(&(u, v, k / outer)) {
            total += lw * rw * aut_count(u, v)?;
        }
    }
    Ok(total)
}

fn prime_power_count(p: u64, e: [u32; 4], ek: Option<u32>) -> BigUint {
    let [a, b, c, d] = e.map(|x| p.pow(x));
    match ek {
        None => count_rank4(a, b, c, d),
        Some(k) => count_rank4_order(a, b, c, d, p.pow(k)),
    }
    .expect("prime powers are valid arguments")
}

/// Same counts as [`count_rank4`] / [`count_rank4_order`], assembled from the
/// prime-power components of the arguments.
pub fn count_via_primes(m: u64, n: u64, r: u64, s: u64, k: Option<u64>) -> Result<BigUint> {
    multiplicative_lift4(prime_power_count, m, n, r, s, k)
}

/// `(n, N(n, n, n, n))` for `1 <= n <= max_n`.
pub fn table_n(max_n: u64) -> Result<Vec<(u64, BigUint)>> {
    if max_n == 0 {
        return invalid("table size must be at least 1");
    }
    // N(n) only depends on the exponent of each prime; reuse prime-power values.
    let cache: RefCell<HashMap<(u64, u32), BigUint>> = RefCell::default();
    let lookup = |p: u64, e: [u32; 4], _: Option<u32>| {
        debug_assert!(e.iter().all(|&x| x == e[0]));
        if let Some(v) = cache.borrow().get(&(p, e[0])) {
            return v.clone();
        }
        let v = prime_power_count(p, e, None);
        cache.borrow_mut().insert((p, e[0]), v.clone());
        v
    };
    (1..=max_n)
        .map(|n| Ok((n, multiplicative_lift4(lookup, n, n, n, n, None)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_rank4(1, 1, 1, 1).unwrap(), big(1));
        assert_eq!(count_rank4(2, 2, 2, 2).unwrap(), big(67));
        assert_eq!(count_rank4(3, 3, 3, 3).unwrap(), big(212));
        assert_eq!(count_rank4(1, 1, 2, 2).unwrap(), big(5));
        assert_eq!(count_rank4(2, 1, 2, 1).unwrap(), big(5));
        assert_eq!(count_rank4(2, 2, 1, 1).unwrap(), big(5));
        assert!(count_rank4(0, 1, 1, 1).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(count_rank4_order(6, 4, 3, 5, 1).unwrap(), big(1));
        assert_eq!(count_rank4_order(2, 2, 2, 2, 2).unwrap(), big(15));
        assert_eq!(count_rank4_order(2, 2, 2, 2, 4).unwrap(), big(35));
        let s: BigUint = [1, 2, 4, 8, 16]
            .iter()
            .map(|&k| count_rank4_order(2, 2, 2, 2, k).unwrap())
            .sum();
        assert_eq!(s, big(67));
        assert!(count_rank4_order(2, 2, 2, 2, 32).is_err());
        assert!(count_rank4_order(2, 2, 2, 2, 3).is_err());
        assert!(count_rank4_order(2, 2, 2, 2, 0).is_err());
    }

    #[test]
    fn distribution_matches_pointwise_counts() {
        for (m, n, r, s) in [(2, 2, 2, 2), (4, 6, 3, 2), (1, 8, 2, 4), (5, 1, 5, 1)] {
            let dist = order_distribution(m, n, r, s).unwrap();
            for k in crate::numth::divisor_list(m * n * r * s) {
                let expect = count_rank4_order(m, n, r, s, k).unwrap();
                assert_eq!(
                    dist.get(&k).cloned().unwrap_or_default(),
                    expect,
                    "({m},{n},{r},{s};{k})"
                );
            }
        }
    }

    #[test]
    fn via_primes_examples() {
        assert_eq!(count_via_primes(6, 6, 6, 6, None).unwrap(), big(14204));
        assert_eq!(
            count_via_primes(30, 30, 30, 30, None).unwrap(),
            big(15_908_480)
        );
        assert_eq!(count_via_primes(1, 1, 1, 1, None).unwrap(), big(1));
        assert_eq!(count_via_primes(2, 2, 2, 2, Some(4)).unwrap(), big(35));
        assert!(count_via_primes(2, 2, 2, 2, Some(3)).is_err());
    }

    #[test]
    fn table_examples() {
        let t = table_n(25).unwrap();
        assert_eq!(t[0], (1, big(1)));
        assert_eq!(t[17], (18, big(1_610_211)));
        assert_eq!(t[24], (25, big(810_969)));
        assert!(table_n(0).is_err());
    }
}
