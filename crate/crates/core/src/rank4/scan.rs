//! Empirical scans over the prime-power polynomials: the degree and leading
//! coefficient patterns, and the symmetry and unimodality of the order
//! counts. These report what holds on the scanned range and nothing more.

use num_bigint::BigInt;
use num_traits::One;

use super::exponent::{poly_order_distribution, poly_rank4};
use crate::polynomial::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeFinding {
    pub exponents: [u32; 4],
    pub degree: usize,
    pub expected_degree: usize,
    pub leading: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConjectureReport {
    /// Degree `2a + b + c` for `1 <= a <= b <= c <= d`.
    pub degree_rule: Vec<DegreeFinding>,
    /// Degree `4m` and leading coefficient 1 for `a = b = c = d = m`.
    pub equal_exponents: Vec<DegreeFinding>,
}

impl ConjectureReport {
    pub fn all_pass(&self) -> bool {
        self.degree_rule
            .iter()
            .chain(&self.equal_exponents)
            .all(|f| f.pass)
    }
}

fn finding(exponents: [u32; 4], expected_degree: usize, need_monic: bool) -> DegreeFinding {
    let [a, b, c, d] = exponents;
    let poly = poly_rank4(a, b, c, d);
    let degree = poly.degree().unwrap_or(0);
    let leading = poly.leading_coefficient().cloned().unwrap_or_default();
    let pass = degree == expected_degree && (!need_monic || leading.is_one());
    DegreeFinding {
        exponents,
        degree,
        expected_degree,
        leading,
        pass,
    }
}

/// Degree of `N(p^a, p^b, p^c, p^d)` against `2a + b + c` for all
/// `1 <= a <= b <= c <= d <= max_exp`.
pub fn scan_degree_rule(max_exp: u32) -> Vec<DegreeFinding> {
    let mut out = Vec::new();
    for a in 1..=max_exp {
        for b in a..=max_exp {
            for c in b..=max_exp {
                for d in c..=max_exp {
                    out.push(finding([a, b, c, d], (2 * a + b + c) as usize, false));
                }
            }
        }
    }
    out
}

/// Degree `4m` and leading coefficient 1 of `N(p^m, p^m, p^m, p^m)` for
/// `1 <= m <= max_exp`.
pub fn scan_equal_exponents(max_exp: u32) -> Vec<DegreeFinding> {
    (1..=max_exp)
        .map(|m| finding([m; 4], 4 * m as usize, true))
        .collect()
}

pub fn check_conjectures(max_exp: u32) -> ConjectureReport {
    ConjectureReport {
        degree_rule: scan_degree_rule(max_exp),
        equal_exponents: scan_equal_exponents(max_exp),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub exponents: [u32; 4],
    /// `N(; p^k)` for `0 <= k <= a+b+c+d`, each computed from the sum directly.
    pub distribution: Vec<IntPolynomial>,
    /// Orders `k` with `N(; p^k) != N(; p^(n-k))`.
    pub asymmetric: Vec<usize>,
    /// Orders `1 <= k <= n/2` where `N(; p^k) - N(; p^(k-1))` has a negative
    /// coefficient.
    pub non_unimodal: Vec<usize>,
}

impl SymmetryReport {
    pub fn pass(&self) -> bool {
        self.asymmetric.is_empty() && self.non_unimodal.is_empty()
    }
}

pub fn check_symmetry_unimodality(a: u32, b: u32, c: u32, d: u32) -> SymmetryReport {
    let distribution = poly_order_distribution(a, b, c, d);
    let n = distribution.len() - 1;
    let asymmetric = (0..=n)
        .filter(|&k| distribution[k] != distribution[n - k])
        .collect();
    let non_unimodal = (1..=n / 2)
        .filter(|&k| !(&distribution[k] - &distribution[k - 1]).has_nonnegative_coeffs())
        .collect();
    SymmetryReport {
        exponents: [a, b, c, d],
        distribution,
        asymmetric,
        non_unimodal,
    }
}
