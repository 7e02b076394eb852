//! Integer side profiles.
//!
//! The twenty summation variables split into an `(x, y)` half that only sees
//! `(m, n)` and a `(z, t)` half that only sees `(r, s)`; the halves meet
//! through the pair `(u, v)` alone. A [`SideProfile`] is one half summed out
//! down to that pair plus the subgroup orders needed for order-restricted
//! counts.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::numth::{divisor_list, phi};

/// Coupling key of one side tuple.
///
/// For the `(x, y)` half, `u = gcd(y2, y5)`, `v = y3 * lcm(y2, y5)`, `outer`
/// is the order `x1*x3*x4` of the subgroup `A` and `inner` the order
/// `y1*y3*y4` of `B <= A`. Since `A/B ~ Z_u x Z_v`, `outer = inner * u * v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileKey {
    pub u: u64,
    pub v: u64,
    pub outer: u64,
    pub inner: u64,
}

/// Weighted multiset of coupling keys; weights are sums of `phi(x3)*phi(y3)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SideProfile {
    weights: BTreeMap<ProfileKey, BigUint>,
}

impl SideProfile {
    pub fn get(&self, key: &ProfileKey) -> Option<&BigUint> {
        self.weights.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProfileKey, &BigUint)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn add(&mut self, key: ProfileKey, weight: impl Into<BigUint>) {
        let w = weight.into();
        if !w.is_zero() {
            *self.weights.entry(key).or_default() += w;
        }
    }

    /// Key-wise sum; profiles built from disjoint tuple sets merge into the
    /// profile of their union.
    pub fn merge(&mut self, other: &SideProfile) {
        for (k, w) in &other.weights {
            *self.weights.entry(*k).or_default() += w;
        }
    }

    pub fn total_weight(&self) -> BigUint {
        self.weights.values().sum()
    }

    /// Weights summed over the order components.
    pub fn by_pair(&self) -> BTreeMap<(u64, u64), BigUint> {
        self.aggregate(|k| (k.u, k.v))
    }

    /// Weights keyed by `(u, v, outer)`.
    pub fn by_pair_outer(&self) -> BTreeMap<(u64, u64, u64), BigUint> {
        self.aggregate(|k| (k.u, k.v, k.outer))
    }

    /// Weights keyed by `(u, v, inner)`.
    pub fn by_pair_inner(&self) -> BTreeMap<(u64, u64, u64), BigUint> {
        self.aggregate(|k| (k.u, k.v, k.inner))
    }

    fn aggregate<K: Ord>(&self, f: impl Fn(&ProfileKey) -> K) -> BTreeMap<K, BigUint> {
        let mut out: BTreeMap<K, BigUint> = BTreeMap::new();
        for (k, w) in &self.weights {
            *out.entry(f(k)).or_default() += w;
        }
        out
    }
}

/// One half of a side tuple: `(x1..x5)` with `x1*x2*x3 = m` and
/// `x3*x4*x5 = n`, or the analogous `y`-tuple over `(gcd(x1, x4),
/// x3*lcm(x1, x4))`.
pub(crate) fn factor_pairs(m: u64, n: u64) -> impl Iterator<Item = [u64; 5]> {
    divisor_list(m.gcd(&n)).into_iter().flat_map(move |x3| {
        let dn = divisor_list(n / x3);
        divisor_list(m / x3).into_iter().flat_map(move |x1| {
            let x2 = m / (x1 * x3);
            dn.clone()
                .into_iter()
                .map(move |x4| [x1, x2, x3, x4, n / (x3 * x4)])
        })
    })
}

/// Profile of the `(x, y)` half for `Z_m x Z_n`.
///
/// The same function serves the `(z, t)` half for `Z_r x Z_s`.
pub fn side_profile(m: u64, n: u64) -> Result<SideProfile> {
    if m == 0 || n == 0 {
        return invalid(format!("moduli must be positive, got ({m}, {n})"));
    }
    let mut profile = SideProfile::default();
    for x in factor_pairs(m, n) {
        let [x1, _, x3, x4, _] = x;
        let phi_x3 = u128::from(phi(x3));
        let outer = x1 * x3 * x4;
        for y in factor_pairs(x1.gcd(&x4), x3 * x1.lcm(&x4)) {
            let [y1, y2, y3, y4, y5] = y;
            let key = ProfileKey {
                u: y2.gcd(&y5),
                v: y3 * y2.lcm(&y5),
                outer,
                inner: y1 * y3 * y4,
            };
            debug_assert_eq!(key.v % key.u, 0);
            debug_assert_eq!(key.outer, key.inner * key.u * key.v);
            profile.add(key, phi_x3 * u128::from(phi(y3)));
        }
    }
    Ok(profile)
}
