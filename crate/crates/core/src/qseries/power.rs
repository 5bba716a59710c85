//! Univariate power series in `q`, truncated at a fixed order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::format::q_poly;
use crate::error::{Error, Result};

/// `sum_{n=0}^{order} c_n q^n`, exact up to and including `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(order: u32) -> Self {
        PowerSeries { coeffs: vec![BigInt::zero(); order as usize + 1] }
    }

    pub fn one(order: u32) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `c q^exp`; vanishes when `exp > order`.
    pub fn monomial(exp: u32, c: BigInt, order: u32) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp as usize] = c;
        }
        s
    }

    /// Truncates (or zero-pads) `coeffs` to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: u32) -> Self {
        coeffs.resize(order as usize + 1, BigInt::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: u32) -> Result<&BigInt> {
        self.coeffs
            .get(n as usize)
            .ok_or(Error::BeyondOrder { q_exp: n as i64, order: self.order() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: u32) -> PowerSeries {
        Self::from_coeffs(self.coeffs[..=(order.min(self.order()) as usize)].to_vec(), order)
    }

    /// Multiplication by `q^exp`.
    pub fn shift(&self, exp: u32) -> PowerSeries {
        let order = self.order() as usize;
        let e = exp as usize;
        let mut out = Self::zero(self.order());
        if e <= order {
            out.coeffs[e..].clone_from_slice(&self.coeffs[..=order - e]);
        }
        out
    }

    /// Multiplication by a polynomial given as `(exp, coeff)` pairs.
    pub fn mul_poly(&self, poly: &[(u32, BigInt)]) -> PowerSeries {
        let mut out = Self::zero(self.order());
        for (e, c) in poly {
            if *e > self.order() || c.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                let j = i + *e as usize;
                if j >= out.coeffs.len() {
                    break;
                }
                if !a.is_zero() {
                    out.coeffs[j] += a * c;
                }
            }
        }
        out
    }

    /// In-place division by `1 - q^i`, `i >= 1`.
    pub(crate) fn div_one_minus_q_pow(&mut self, i: usize) {
        debug_assert!(i >= 1);
        for j in i..self.coeffs.len() {
            let prev = self.coeffs[j - i].clone();
            self.coeffs[j] += prev;
        }
    }

    pub(crate) fn add_assign_ref(&mut self, rhs: &PowerSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.coeffs.truncate(self.coeffs.len().min(rhs.coeffs.len()));
    }

    /// Lowest `n` at which the two series differ, with both coefficients.
    pub fn first_difference(&self, other: &PowerSeries) -> Option<(u32, BigInt, BigInt)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(n, (a, b))| (n as u32, a.clone(), b.clone()))
    }

    /// Text form without the `O(q^..)` tail.
    pub fn body_string(&self) -> String {
        q_poly(self.coeffs.iter().enumerate().map(|(n, c)| (n as i64, c)), false)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.body_string();
        let tail = self.order() + 1;
        if body == "0" {
            write!(f, "O(q^{tail})")
        } else {
            write!(f, "{body} + O(q^{tail})")
        }
    }
}

impl Add<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self + &(-rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul<&PowerSeries> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order()) as usize;
        let mut out = PowerSeries::zero(order as u32);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Add for PowerSeries {
    type Output = PowerSeries;
    fn add(mut self, rhs: PowerSeries) -> PowerSeries {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Mul for PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: PowerSeries) -> PowerSeries {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(c: &[i64], order: u32) -> PowerSeries {
        PowerSeries::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect(), order)
    }

    #[test]
    fn geometric_series_telescopes() {
        let geo = ps(&[1; 11], 10);
        let one_minus_q = ps(&[1, -1], 10);
        assert_eq!(&geo * &one_minus_q, PowerSeries::one(10));
    }

    #[test]
    fn identity_and_order_min() {
        let a = ps(&[1, 2, 3, 4], 6);
        assert_eq!(&a * &PowerSeries::one(6), a);
        let b = ps(&[1, 1], 3);
        assert_eq!((&a * &b).order(), 3);
    }

    #[test]
    fn reads_beyond_order_fail() {
        let a = ps(&[1, 2], 4);
        assert!(a.coeff(4).is_ok());
        assert_eq!(a.coeff(5), Err(Error::BeyondOrder { q_exp: 5, order: 4 }));
    }

    #[test]
    fn shift_drops_overflow() {
        let a = ps(&[1, 2, 3], 3);
        assert_eq!(a.shift(2), ps(&[0, 0, 1, 2], 3));
        assert!(a.shift(7).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(ps(&[1, 1, 2, 3, 5], 4).to_string(), "1 + q + 2q^2 + 3q^3 + 5q^4 + O(q^5)");
        assert_eq!(PowerSeries::zero(2).to_string(), "O(q^3)");
    }
}
