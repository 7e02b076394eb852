//! Dense univariate polynomials with exact integer coefficients in the
//! indeterminate `p`, plus the two prime-power kernels used by the counting
//! formulas: Euler's totient `phi(p^x)` and the automorphism count
//! `F(p^u, p^v)` of `Z_{p^u} x Z_{p^v}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// `coeffs[i]` is the coefficient of `p^i`. The vector is empty for the zero
/// polynomial and otherwise ends in a nonzero coefficient, so derived
/// equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * p^deg`.
    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::from(c);
        Self { coeffs }.normalize()
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        }
        .normalize()
    }

    /// `1 + p + ... + p^n`.
    pub fn geometric(n: usize) -> Self {
        Self::from_coeffs(vec![1; n + 1])
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: u64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let taken = std::mem::take(self);
        *self = taken.normalize();
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs.clone())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }.normalize()
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, x| acc + x)
    }
}

/// Descending powers with explicit `*` and `^`, e.g. `p^4 + 3*p^3 + 5`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match deg {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("p")?,
                1 => write!(f, "{mag}*p")?,
                _ if unit => write!(f, "p^{deg}")?,
                _ => write!(f, "{mag}*p^{deg}")?,
            }
        }
        Ok(())
    }
}

/// `phi(p^x)` as a polynomial in `p`: 1 for `x = 0`, else `p^x - p^(x-1)`.
pub fn phi_poly(x: u32) -> IntPolynomial {
    let x = x as usize;
    if x == 0 {
        IntPolynomial::one()
    } else {
        &IntPolynomial::monomial(1, x) - &IntPolynomial::monomial(1, x - 1)
    }
}

/// Number of automorphisms of `Z_{p^u} x Z_{p^v}` as a polynomial in `p`.
///
/// The exponents must be sorted, `u <= v`.
pub fn aut_poly(u: u32, v: u32) -> Result<IntPolynomial> {
    if u > v {
        return invalid(format!("aut_poly expects u <= v, got ({u}, {v})"));
    }
    let (u, v) = (u as usize, v as usize);
    let terms: &[(i64, usize)] = match (u, v) {
        (0, 0) => return Ok(IntPolynomial::one()),
        (0, _) => return Ok(phi_poly(v as u32)),
        _ if u < v => &[(1, 3 * u + v), (-2, 3 * u + v - 1), (1, 3 * u + v - 2)],
        _ => &[(1, 4 * u), (-1, 4 * u - 1), (-1, 4 * u - 2), (1, 4 * u - 3)],
    };
    Ok(terms
        .iter()
        .map(|&(c, d)| IntPolynomial::monomial(c, d))
        .sum())
}
