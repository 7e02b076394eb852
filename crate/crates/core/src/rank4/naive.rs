//! Reference implementation: the twenty-variable sum enumerated directly,
//! without the profile factorization. Only meant for small arguments.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::goursat2::aut_count;
use crate::numth::{divisor_list, phi};

/// One summation tuple `(x1..x5, y1..y5, z1..z5, t1..t5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoursatTuple20 {
    pub x: [u64; 5],
    pub y: [u64; 5],
    pub z: [u64; 5],
    pub t: [u64; 5],
}

impl GoursatTuple20 {
    /// `(u, v) = (gcd(y2, y5), y3 * lcm(y2, y5))`.
    pub fn coupling(&self) -> (u64, u64) {
        let y = self.y;
        (y[1].gcd(&y[4]), y[2] * y[1].lcm(&y[4]))
    }

    /// Order of the described subgroup, `x1*x3*x4*t1*t3*t4`.
    pub fn order(&self) -> u64 {
        let (x, t) = (self.x, self.t);
        x[0] * x[2] * x[3] * t[0] * t[2] * t[3]
    }

    /// `phi(x3) phi(y3) phi(z3) phi(t3) F(u, v)`.
    pub fn weight(&self) -> BigUint {
        let (u, v) = self.coupling();
        let phis = [self.x[2], self.y[2], self.z[2], self.t[2]]
            .iter()
            .map(|&w| BigUint::from(phi(w)))
            .product::<BigUint>();
        phis * aut_count(u, v).expect("coupling values are positive")
    }

    /// All ten defining conditions for `Z_m x Z_n x Z_r x Z_s`.
    pub fn satisfies(&self, m: u64, n: u64, r: u64, s: u64) -> bool {
        let half = |a: [u64; 5], b: [u64; 5], m: u64, n: u64| {
            a[0] * a[1] * a[2] == m
                && a[2] * a[3] * a[4] == n
                && b[0] * b[1] * b[2] == a[0].gcd(&a[3])
                && b[2] * b[3] * b[4] == a[2] * a[0].lcm(&a[3])
        };
        let t = self.t;
        half(self.x, self.y, m, n)
            && half(self.z, self.t, r, s)
            && self.coupling() == (t[1].gcd(&t[4]), t[2] * t[1].lcm(&t[4]))
    }
}

/// Every `(a1..a5)` with `a1*a2*a3 = m` and `a3*a4*a5 = n`, by filtering all
/// divisor choices.
fn half_tuples(m: u64, n: u64) -> Vec<[u64; 5]> {
    let (dm, dn) = (divisor_list(m), divisor_list(n));
    let mut out = Vec::new();
    for &a1 in &dm {
        for &a2 in &dm {
            for &a3 in &dm {
                if a1 * a2 * a3 != m {
                    continue;
                }
                for &a4 in &dn {
                    for &a5 in &dn {
                        if a3 * a4 * a5 == n {
                            out.push([a1, a2, a3, a4, a5]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn side_tuples(m: u64, n: u64) -> Vec<([u64; 5], [u64; 5])> {
    half_tuples(m, n)
        .into_iter()
        .flat_map(|x| {
            let g = x[0].gcd(&x[3]);
            let l = x[2] * x[0].lcm(&x[3]);
            half_tuples(g, l).into_iter().map(move |y| (x, y))
        })
        .collect()
}

/// All tuples satisfying the ten defining conditions.
pub fn summation_tuples(m: u64, n: u64, r: u64, s: u64) -> Vec<GoursatTuple20> {
    let left = side_tuples(m, n);
    let right = side_tuples(r, s);
    let mut out = Vec::new();
    for &(x, y) in &left {
        for &(z, t) in &right {
            let tuple = GoursatTuple20 { x, y, z, t };
            if tuple.satisfies(m, n, r, s) {
                out.push(tuple);
            }
        }
    }
    out
}

/// `N(m, n, r, s; k)` for every order `k`, straight from the tuple sum.
pub fn naive_order_distribution(m: u64, n: u64, r: u64, s: u64) -> BTreeMap<u64, BigUint> {
    let mut out: BTreeMap<u64, BigUint> = BTreeMap::new();
    for tuple in summation_tuples(m, n, r, s) {
        *out.entry(tuple.order()).or_default() += tuple.weight();
    }
    out
}

pub fn naive_count_rank4(m: u64, n: u64, r: u64, s: u64) -> BigUint {
    naive_order_distribution(m, n, r, s).into_values().sum()
}
