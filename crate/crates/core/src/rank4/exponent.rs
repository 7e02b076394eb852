//! Polynomial counts for `Z_{p^a} x Z_{p^b} x Z_{p^c} x Z_{p^d}`.
//!
//! Same split as the integer engine, written over exponents: products become
//! sums, `gcd` becomes `min`, `lcm` becomes `max`, and the weights are the
//! polynomials `phi(p^x3) * phi(p^y3)`.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::polynomial::{aut_poly, phi_poly, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentKey {
    pub u: u32,
    pub v: u32,
    pub outer: u32,
    pub inner: u32,
}

/// Exponent-form counterpart of [`SideProfile`](super::SideProfile).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExponentProfile {
    weights: BTreeMap<ExponentKey, IntPolynomial>,
}

impl ExponentProfile {
    pub fn iter(&self) -> impl Iterator<Item = (&ExponentKey, &IntPolynomial)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn grouped(
        &self,
        order: impl Fn(&ExponentKey) -> u32,
    ) -> BTreeMap<(u32, u32), BTreeMap<u32, IntPolynomial>> {
        let mut out: BTreeMap<(u32, u32), BTreeMap<u32, IntPolynomial>> = BTreeMap::new();
        for (k, w) in &self.weights {
            *out.entry((k.u, k.v))
                .or_default()
                .entry(order(k))
                .or_default() += w;
        }
        out
    }
}

/// Tuples `(x1..x5)` in nonnegative integers with `x1+x2+x3 = a` and
/// `x3+x4+x5 = b`.
fn exponent_pairs(a: u32, b: u32) -> impl Iterator<Item = [u32; 5]> {
    (0..=a.min(b)).flat_map(move |x3| {
        (0..=a - x3)
            .flat_map(move |x1| (0..=b - x3).map(move |x4| [x1, a - x1 - x3, x3, x4, b - x3 - x4]))
    })
}

pub fn exponent_side_profile(a: u32, b: u32) -> ExponentProfile {
    let mut weights: BTreeMap<ExponentKey, IntPolynomial> = BTreeMap::new();
    for [x1, _, x3, x4, _] in exponent_pairs(a, b) {
        let phi_x3 = phi_poly(x3);
        for [y1, y2, y3, y4, y5] in exponent_pairs(x1.min(x4), x3 + x1.max(x4)) {
            let key = ExponentKey {
                u: y2.min(y5),
                v: y3 + y2.max(y5),
                outer: x1 + x3 + x4,
                inner: y1 + y3 + y4,
            };
            *weights.entry(key).or_default() += &(&phi_x3 * &phi_poly(y3));
        }
    }
    ExponentProfile { weights }
}

/// `N(p^a, p^b, p^c, p^d; p^k)` for every `0 <= k <= a+b+c+d`, indexed by `k`.
pub fn poly_order_distribution(a: u32, b: u32, c: u32, d: u32) -> Vec<IntPolynomial> {
    let left = exponent_side_profile(a, b).grouped(|k| k.outer);
    let right = exponent_side_profile(c, d).grouped(|k| k.inner);
    let mut dist = vec![IntPolynomial::zero(); (a + b + c + d + 1) as usize];
    let mut aut_cache: BTreeMap<(u32, u32), IntPolynomial> = BTreeMap::new();
    for (&(u, v), lw) in &left {
        let Some(rw) = right.get(&(u, v)) else {
            continue;
        };
        let aut = aut_cache
            .entry((u, v))
            .or_insert_with(|| aut_poly(u, v).expect("v >= u by construction"));
        for (&outer, lp) in lw {
            let la = lp * aut;
            for (&inner, rp) in rw {
                dist[(outer + inner) as usize] += &(&la * rp);
            }
        }
    }
    dist
}

/// Total number of subgroups of `Z_{p^a} x Z_{p^b} x Z_{p^c} x Z_{p^d}` as a
/// polynomial in `p`. Exponents may be zero and need not be sorted.
pub fn poly_rank4(a: u32, b: u32, c: u32, d: u32) -> IntPolynomial {
    let left = exponent_side_profile(a, b).grouped(|_| 0);
    let right = exponent_side_profile(c, d).grouped(|_| 0);
    let mut total = IntPolynomial::zero();
    for (&(u, v), lw) in &left {
        if let Some(rw) = right.get(&(u, v)) {
            let aut = aut_poly(u, v).expect("v >= u by construction");
            total += &(&(&lw[&0] * &rw[&0]) * &aut);
        }
    }
    total
}

/// Number of subgroups of order `p^k`, for `0 <= k <= a+b+c+d`.
pub fn poly_rank4_order(a: u32, b: u32, c: u32, d: u32, k: u32) -> Result<IntPolynomial> {
    let n = a + b + c + d;
    if k > n {
        return invalid(format!("order exponent {k} exceeds a+b+c+d = {n}"));
    }
    Ok(poly_order_distribution(a, b, c, d).swap_remove(k as usize))
}
