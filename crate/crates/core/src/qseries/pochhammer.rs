//! q-Pochhammer symbols, their truncated inverses and Gaussian binomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Substitution};
use super::power::PowerSeries;
use crate::error::{Error, Result};

/// Length of a q-Pochhammer product `(q)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(i64),
    Infinite,
}

impl From<i64> for PochLen {
    fn from(n: i64) -> Self {
        PochLen::Finite(n)
    }
}

/// `1/(q)_n` truncated at `order`. Negative `n` gives the zero series.
pub fn inv_pochhammer(n: PochLen, order: u32) -> PowerSeries {
    let factors = match n {
        PochLen::Finite(n) if n < 0 => return PowerSeries::zero(order),
        PochLen::Finite(n) => (n as u64).min(order as u64) as usize,
        PochLen::Infinite => order as usize,
    };
    let mut s = PowerSeries::one(order);
    for i in 1..=factors {
        s.div_one_minus_q_pow(i);
    }
    s
}

/// Precomputed `1/(q)_n` for `0 <= n <= order`, plus `1/(q)_inf`.
///
/// `1/(q)_n` and `1/(q)_inf` agree through `q^n`, so every `n >= order`
/// resolves to the infinite product.
#[derive(Clone, Debug)]
pub struct QFactorialTable {
    order: u32,
    inv: Vec<PowerSeries>,
    zero: PowerSeries,
}

impl QFactorialTable {
    pub fn new(order: u32) -> Self {
        let mut inv = Vec::with_capacity(order as usize + 1);
        let mut cur = PowerSeries::one(order);
        inv.push(cur.clone());
        for i in 1..=order as usize {
            cur.div_one_minus_q_pow(i);
            inv.push(cur.clone());
        }
        QFactorialTable { order, inv, zero: PowerSeries::zero(order) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `1/(q)_n`, with `1/(q)_n = 0` for `n < 0`.
    pub fn inv(&self, n: i64) -> &PowerSeries {
        if n < 0 {
            &self.zero
        } else {
            &self.inv[(n as u64).min(self.order as u64) as usize]
        }
    }

    pub fn inv_infinite(&self) -> &PowerSeries {
        &self.inv[self.order as usize]
    }

    pub fn get(&self, n: PochLen) -> &PowerSeries {
        match n {
            PochLen::Finite(n) => self.inv(n),
            PochLen::Infinite => self.inv_infinite(),
        }
    }

    /// `q^exp / ((q)_a (q)_b)`; zero when the exponent exceeds the order or
    /// either length is negative. A negative exponent is an error.
    pub fn term(&self, exp: i64, a: i64, b: i64) -> Result<PowerSeries> {
        if a < 0 || b < 0 {
            return Ok(self.zero.clone());
        }
        if exp < 0 {
            return Err(Error::NegativeQExponent { q_exp: exp });
        }
        if exp > self.order as i64 {
            return Ok(self.zero.clone());
        }
        let prod = self.inv(a) * self.inv(b);
        Ok(prod.shift(exp as u32))
    }
}

/// Coefficients of the Gaussian binomial `[n, m]_q`, lowest degree first.
/// Empty when `m < 0` or `m > n`.
pub fn qbinom_coeffs(n: i64, m: i64) -> Vec<BigInt> {
    if m < 0 || n < 0 || m > n {
        return Vec::new();
    }
    let m = m.min(n - m) as usize;
    let n = n as usize;
    let degree = m * (n - m);
    // After step i the buffer holds [n - m + i, i]_q, so it never outgrows `degree + n`.
    let mut c = vec![BigInt::zero(); degree + n + 1];
    c[0] = BigInt::one();
    let mut top = 0usize;
    for i in 1..=m {
        let a = n - m + i;
        for j in (a..=top + a).rev() {
            let prev = c[j - a].clone();
            c[j] -= prev;
        }
        for j in i..=top + a {
            let prev = c[j - i].clone();
            c[j] += prev;
        }
        top += a - i;
    }
    c.truncate(degree + 1);
    c
}

/// `[n, m]_q` as a polynomial in `q`; zero outside `0 <= m <= n`.
pub fn qbinom(n: i64, m: i64) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(0, 0, &qbinom_coeffs(n, m))
}

/// Both sides of `[a, b]_{1/q} = q^{-(a-b)b} [a, b]_q`.
pub fn qbinom_invert_check(a: i64, b: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    if b < 0 || b > a {
        return Err(Error::InvalidParameter(format!("need 0 <= b <= a, got a = {a}, b = {b}")));
    }
    let base = qbinom(a, b);
    let lhs = base.subst(Substitution { z_pow: 1, q_shift: 0, q_invert: true });
    let rhs = base.mul_monomial(0, -(a - b) * b);
    Ok((lhs, rhs))
}
