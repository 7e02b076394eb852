//! Rank-two machinery for `Z_m x Z_n`.
//!
//! Subgroups of `Z_m x Z_n` correspond one-to-one to tuples `(a, b, c, d, l)`
//! with `a | m`, `b | a`, `c | n`, `d | c`, `a/b = c/d = e`, `1 <= l <= e` and
//! `gcd(l, e) = 1`. The subgroup attached to a tuple is
//! `{(i*m/a, i*l*n/c + j*n/d) : 0 <= i < a, 0 <= j < d}`, of order `a*d`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::numth::{divisor_list, factorize, jordan_phi2, phi};
use crate::polynomial::{phi_poly, IntPolynomial};

/// A finite abelian group of rank at most two in invariant factor form
/// `Z_first x Z_second` with `first | second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianPair {
    pub first: u64,
    pub second: u64,
}

impl AbelianPair {
    pub fn new(first: u64, second: u64) -> Result<Self> {
        if first == 0 || second == 0 || second % first != 0 {
            return invalid(format!(
                "({first}, {second}) is not an invariant factor pair"
            ));
        }
        Ok(Self { first, second })
    }

    pub fn order(&self) -> u64 {
        self.first * self.second
    }
}

impl fmt::Display for AbelianPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} x Z_{}", self.first, self.second)
    }
}

/// The tuple `(a, b, c, d, l)` describing one subgroup of `Z_m x Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgroupDescriptor {
    m: u64,
    n: u64,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    l: u64,
}

impl SubgroupDescriptor {
    pub fn new(m: u64, n: u64, a: u64, b: u64, c: u64, d: u64, l: u64) -> Result<Self> {
        let ok = [m, n, a, b, c, d, l].iter().all(|&v| v > 0)
            && m % a == 0
            && a % b == 0
            && n % c == 0
            && c % d == 0
            && a / b == c / d
            && l <= a / b
            && l.gcd(&(a / b)) == 1;
        if !ok {
            return invalid(format!(
                "({a}, {b}, {c}, {d}, {l}) does not describe a subgroup of Z_{m} x Z_{n}"
            ));
        }
        Ok(Self {
            m,
            n,
            a,
            b,
            c,
            d,
            l,
        })
    }

    pub fn moduli(&self) -> (u64, u64) {
        (self.m, self.n)
    }

    /// `(a, b, c, d, l)`.
    pub fn tuple(&self) -> (u64, u64, u64, u64, u64) {
        (self.a, self.b, self.c, self.d, self.l)
    }

    /// The common ratio `e = a/b = c/d`.
    pub fn ratio(&self) -> u64 {
        self.a / self.b
    }

    pub fn order(&self) -> u64 {
        self.a * self.d
    }

    /// Generators `(m/a, l*n/c)` and `(0, n/d)`, reduced mod `(m, n)`.
    pub fn generators(&self) -> [(u64, u64); 2] {
        let (m, n) = (self.m, self.n);
        [
            ((m / self.a) % m, (self.l * (n / self.c)) % n),
            (0, (n / self.d) % n),
        ]
    }
}

/// One descriptor per subgroup of `Z_m x Z_n`, sorted lexicographically by
/// `(a, b, c, d, l)`.
pub fn enumerate_descriptors(m: u64, n: u64) -> Result<Vec<SubgroupDescriptor>> {
    check_moduli(m, n)?;
    let mut out = Vec::new();
    // a = b*e and c = d*e, so the ratio constraint holds by construction.
    for b in divisor_list(m) {
        for e in divisor_list(m / b) {
            for d in divisor_list(n) {
                if (n / d) % e != 0 {
                    continue;
                }
                for l in (1..=e).filter(|l| l.gcd(&e) == 1) {
                    out.push(SubgroupDescriptor {
                        m,
                        n,
                        a: b * e,
                        b,
                        c: d * e,
                        d,
                        l,
                    });
                }
            }
        }
    }
    out.sort_unstable_by_key(SubgroupDescriptor::tuple);
    Ok(out)
}

/// Elements of the described subgroup as sorted `(x mod m, y mod n)` pairs.
pub fn descriptor_elements(desc: &SubgroupDescriptor) -> Vec<(u64, u64)> {
    let SubgroupDescriptor {
        m, n, a, c, d, l, ..
    } = *desc;
    let mut out = Vec::with_capacity((a * d) as usize);
    for i in 0..a {
        for j in 0..d {
            let x = i * (m / a);
            let y = ((i * l % n) * (n / c) + j * (n / d)) % n;
            out.push((x, y));
        }
    }
    out.sort_unstable();
    out
}

/// Invariant factors `(gcd(b, d), lcm(a, c))` of the described subgroup.
pub fn descriptor_invariants(desc: &SubgroupDescriptor) -> AbelianPair {
    AbelianPair {
        first: desc.b.gcd(&desc.d),
        second: desc.a.lcm(&desc.c),
    }
}

/// Invariant factors `(gcd(m/a, n/c), lcm(m/b, n/d))` of the quotient of
/// `Z_m x Z_n` by the described subgroup.
pub fn quotient_invariants(desc: &SubgroupDescriptor) -> AbelianPair {
    let SubgroupDescriptor {
        m, n, a, b, c, d, ..
    } = *desc;
    AbelianPair {
        first: (m / a).gcd(&(n / c)),
        second: (m / b).lcm(&(n / d)),
    }
}

fn check_moduli(m: u64, n: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return invalid(format!("moduli must be positive, got ({m}, {n})"));
    }
    Ok(())
}

/// Total number of subgroups of `Z_m x Z_n`: the sum of `gcd(i, j)` over
/// `i | m`, `j | n`.
pub fn count_rank2(m: u64, n: u64) -> Result<BigUint> {
    check_moduli(m, n)?;
    let dn = divisor_list(n);
    let total: u128 = divisor_list(m)
        .into_iter()
        .flat_map(|i| dn.iter().map(move |j| u128::from(i.gcd(j))))
        .sum();
    Ok(BigUint::from(total))
}

/// Number of subgroups of order `k` of `Z_m x Z_n`: the sum of `phi(ij/k)`
/// over `i | gcd(m, k)`, `j | gcd(n, k)` with `k | ij`.
pub fn count_rank2_order(m: u64, n: u64, k: u64) -> Result<BigUint> {
    check_moduli(m, n)?;
    if k == 0 || !crate::numth::divides_product(k, &[m, n]) {
        return invalid(format!("k = {k} does not divide m*n = {m}*{n}"));
    }
    let dj = divisor_list(n.gcd(&k));
    let mut total = 0u128;
    for i in divisor_list(m.gcd(&k)) {
        for &j in &dj {
            let ij = u128::from(i) * u128::from(j);
            if ij % u128::from(k) == 0 {
                total += u128::from(phi((ij / u128::from(k)) as u64));
            }
        }
    }
    Ok(BigUint::from(total))
}

fn check_rank2_exponents(a: u32, b: u32) -> Result<()> {
    if a == 0 || a > b {
        return invalid(format!(
            "rank-two exponents must satisfy 1 <= a <= b, got ({a}, {b})"
        ));
    }
    Ok(())
}

/// Total subgroup count of `Z_{p^a} x Z_{p^b}` as a polynomial in `p`, for
/// `1 <= a <= b`.
pub fn poly_rank2(a: u32, b: u32) -> Result<IntPolynomial> {
    check_rank2_exponents(a, b)?;
    // gcd(p^i, p^j) = p^min(i, j)
    let poly: IntPolynomial = (0..=a)
        .flat_map(|i| (0..=b).map(move |j| IntPolynomial::monomial(1, i.min(j) as usize)))
        .sum();
    debug_assert_eq!(
        &poly * &IntPolynomial::from_coeffs([1, -2, 1]),
        rank2_closed_numerator(a, b),
        "rank-two polynomial disagrees with its closed form at ({a}, {b})"
    );
    Ok(poly)
}

/// `(b-a+1)p^(a+2) - (b-a-1)p^(a+1) - (a+b+3)p + (a+b+1)`, which equals the
/// rank-two total count times `(p-1)^2`.
pub(crate) fn rank2_closed_numerator(a: u32, b: u32) -> IntPolynomial {
    let (a, b) = (i64::from(a), i64::from(b));
    [
        IntPolynomial::monomial(b - a + 1, (a + 2) as usize),
        IntPolynomial::monomial(-(b - a - 1), (a + 1) as usize),
        IntPolynomial::monomial(-(a + b + 3), 1),
        IntPolynomial::constant(a + b + 1),
    ]
    .into_iter()
    .sum()
}

/// Number of subgroups of order `p^c` of `Z_{p^a} x Z_{p^b}` as a polynomial,
/// for `1 <= a <= b` and `0 <= c <= a + b`.
pub fn poly_rank2_order(a: u32, b: u32, c: u32) -> Result<IntPolynomial> {
    check_rank2_exponents(a, b)?;
    if c > a + b {
        return invalid(format!("order exponent {c} exceeds a + b = {}", a + b));
    }
    let mut poly = IntPolynomial::zero();
    for i in 0..=a.min(c) {
        for j in 0..=b.min(c) {
            if i + j >= c {
                poly += &phi_poly(i + j - c);
            }
        }
    }
    debug_assert_eq!(poly, rank2_order_closed_form(a, b, c));
    Ok(poly)
}

/// The three-case geometric-sum closed form of the rank-two order count.
pub(crate) fn rank2_order_closed_form(a: u32, b: u32, c: u32) -> IntPolynomial {
    let top = if c <= a {
        c
    } else if c <= b {
        a
    } else {
        a + b - c
    };
    IntPolynomial::geometric(top as usize)
}

/// Number of automorphisms of `Z_m x Z_n`.
///
/// Multiplicative over primes; on the sorted exponent pair `u <= v` of each
/// prime it is `p^(2u) phi(p^u) phi(p^v)` for `u < v` and
/// `p^u phi_2(p^u) phi(p^u)` for `u = v`.
pub fn aut_count(m: u64, n: u64) -> Result<BigUint> {
    check_moduli(m, n)?;
    let fm = factorize(m)?;
    let fn_ = factorize(n)?;
    let mut primes: Vec<u64> = fm.primes().chain(fn_.primes()).collect();
    primes.sort_unstable();
    primes.dedup();

    let mut acc = BigUint::one();
    for p in primes {
        let (e1, e2) = (fm.exponent_of(p), fn_.exponent_of(p));
        let (u, v) = (e1.min(e2), e1.max(e2));
        let pu = BigUint::from(p).pow(u);
        let phi_u = BigUint::from(phi(p.pow(u)));
        let factor = if u < v {
            &pu * &pu * phi_u * BigUint::from(phi(p.pow(v)))
        } else {
            pu * BigUint::from(jordan_phi2(p.pow(u))?) * phi_u
        };
        acc *= factor;
    }
    debug_assert!(!acc.is_zero());
    Ok(acc)
}
