//! Exact Laurent polynomials in `z` and `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::format::{q_poly, var_power};

/// A finitely supported element of `Z[z, 1/z, q, 1/q]`.
///
/// Terms are keyed by `(z_exp, q_exp)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

/// The substitution `z -> z^z_pow q^q_shift`, optionally combined with `q -> 1/q`.
///
/// Both replacements happen simultaneously, so `z^a q^b` maps to
/// `z^(a z_pow) q^(a q_shift ± b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub z_pow: i64,
    pub q_shift: i64,
    pub q_invert: bool,
}

impl Substitution {
    pub const IDENTITY: Substitution = Substitution { z_pow: 1, q_shift: 0, q_invert: false };

    /// `z -> z q^shift`, `q` untouched.
    pub fn shift(q_shift: i64) -> Self {
        Substitution { z_pow: 1, q_shift, q_invert: false }
    }

    /// `z -> z q^shift`, `q -> 1/q`.
    pub fn shift_inverted(q_shift: i64) -> Self {
        Substitution { z_pow: 1, q_shift, q_invert: true }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// `c z^z_exp q^q_exp`.
    pub fn monomial(z_exp: i64, q_exp: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(z_exp, q_exp, c.into());
        p
    }

    /// `z^z_exp * sum_i coeffs[i] q^(q_start + i)`.
    pub fn from_q_coeffs(z_exp: i64, q_start: i64, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(z_exp, q_start + i as i64, c.clone());
        }
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, BigInt)>,
    {
        let mut p = Self::zero();
        for (z, q, c) in terms {
            p.add_term(z, q, c);
        }
        p
    }

    pub fn add_term(&mut self, z_exp: i64, q_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (z_exp, q_exp);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, z_exp: i64, q_exp: i64) -> BigInt {
        self.terms.get(&(z_exp, q_exp)).cloned().unwrap_or_default()
    }

    /// Iterates `(z_exp, q_exp, coeff)` sorted by `z_exp`, then `q_exp`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(z, q), c)| (z, q, c))
    }

    /// Coefficient of `z^z_exp`, returned as a polynomial in `q` alone.
    pub fn z_coefficient(&self, z_exp: i64) -> LaurentPoly {
        let terms = self
            .terms
            .range((z_exp, i64::MIN)..=(z_exp, i64::MAX))
            .map(|(&(_, q), c)| ((0, q), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, q)| q).min()
    }

    pub fn max_q_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, q)| q).max()
    }

    /// Value at `z = 1, q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&k, v)| (k, v * c)).collect();
        LaurentPoly { terms }
    }

    /// Multiplication by `z^z_exp q^q_exp`.
    pub fn mul_monomial(&self, z_exp: i64, q_exp: i64) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(z, q), c)| ((z + z_exp, q + q_exp), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn subst(&self, s: Substitution) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(z, q), c) in &self.terms {
            let q_base = if s.q_invert { -q } else { q };
            out.add_term(z * s.z_pow, z * s.q_shift + q_base, c.clone());
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Groups terms by ascending power of `z`, e.g. `1 + z(1+q+q^2) + z^2 q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut groups: BTreeMap<i64, Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (z, q, c) in self.terms() {
            groups.entry(z).or_default().push((q, c));
        }
        let mut first = true;
        for (z, qs) in groups {
            let zpart = var_power("z", z);
            if zpart.is_empty() {
                let body = q_poly(qs.iter().map(|(q, c)| (*q, *c)), false);
                if !first {
                    if let Some(rest) = body.strip_prefix('-') {
                        write!(f, " - {rest}")?;
                    } else {
                        write!(f, " + {body}")?;
                    }
                } else {
                    f.write_str(&body)?;
                }
            } else if qs.len() == 1 {
                let (q, c) = qs[0];
                let mag = c.abs();
                let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
                let qpart = var_power("q", q);
                let body = if qpart.is_empty() {
                    format!("{coeff}{zpart}")
                } else {
                    format!("{coeff}{zpart} {qpart}")
                };
                match (first, c.is_negative()) {
                    (true, false) => f.write_str(&body)?,
                    (true, true) => write!(f, "-{body}")?,
                    (false, false) => write!(f, " + {body}")?,
                    (false, true) => write!(f, " - {body}")?,
                }
            } else {
                let inner = q_poly(qs.iter().map(|(q, c)| (*q, *c)), true);
                if first {
                    write!(f, "{zpart}({inner})")?;
                } else {
                    write!(f, " + {zpart}({inner})")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(z, q), c) in &rhs.terms {
            out.add_term(z, q, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(z, q), c) in &rhs.terms {
            out.add_term(z, q, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(z1, q1), c1) in &self.terms {
            for (&(z2, q2), c2) in &rhs.terms {
                out.add_term(z1 + z2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&k, v)| (k, -v)).collect();
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(z, q, c)| (z, q, BigInt::from(c))))
    }

    #[test]
    fn distributivity_example() {
        let a = p(&[(0, 0, 1), (1, 0, 1)]);
        let b = p(&[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(&a * &b, p(&[(0, 0, 1), (1, 0, 1), (1, 1, 1), (2, 1, 1)]));
    }

    #[test]
    fn annihilator_and_difference_of_squares() {
        let a = p(&[(0, 0, 1), (1, 0, 1)]);
        assert!((&a * &LaurentPoly::zero()).is_zero());
        let b = p(&[(0, 0, 1), (1, 0, -1)]);
        assert_eq!(&a * &b, p(&[(0, 0, 1), (2, 0, -1)]));
    }

    #[test]
    fn substitution_examples() {
        let zq2 = p(&[(1, 2, 1)]);
        assert_eq!(zq2.subst(Substitution::shift_inverted(-1)), p(&[(1, -3, 1)]));
        let chi1 = p(&[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(chi1.subst(Substitution::shift(1)), p(&[(0, 0, 1), (1, 1, 1)]));
        let z2 = p(&[(2, 0, 1)]);
        assert_eq!(z2.subst(Substitution::IDENTITY), z2);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = p(&[(1, 1, 3)]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).len(), 0);
    }

    #[test]
    fn display_groups_by_z() {
        let chi3 = p(&[(0, 0, 1), (1, 0, 1), (1, 1, 1), (1, 2, 1), (2, 2, 1)]);
        assert_eq!(chi3.to_string(), "1 + z(1+q+q^2) + z^2 q^2");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(0, -1, 1), (0, 0, 1)]).to_string(), "q^-1 + 1");
        assert_eq!(p(&[(0, 0, 1), (2, 0, -1)]).to_string(), "1 - z^2");
        assert_eq!(p(&[(-1, 1, 2)]).to_string(), "2z^-1 q");
    }
}
