//! Truncated elements of `Z[z, 1/z][[q]]`.
//!
//! A [`QSeries`] knows every coefficient with `q`-exponent at most its order
//! and `z`-exponent inside its window. A series is *complete* when, in
//! addition, all of its coefficients up to the order lie inside the window,
//! so it is known to vanish outside. Products and sums only report windows
//! on which every coefficient is guaranteed exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::power::PowerSeries;
use crate::error::{Error, Result};

/// Closed interval of `z`-exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZWindow {
    pub min: i64,
    pub max: i64,
}

impl ZWindow {
    pub fn new(min: i64, max: i64) -> Result<Self> {
        if min > max {
            return Err(Error::InvalidParameter(format!("empty z-window [{min}, {max}]")));
        }
        Ok(ZWindow { min, max })
    }

    /// `[-radius, radius]`.
    pub fn symmetric(radius: i64) -> Self {
        ZWindow { min: -radius.abs(), max: radius.abs() }
    }

    pub fn point(z: i64) -> Self {
        ZWindow { min: z, max: z }
    }

    pub fn contains(&self, z: i64) -> bool {
        self.min <= z && z <= self.max
    }

    pub fn contains_window(&self, other: &ZWindow) -> bool {
        self.min <= other.min && other.max <= self.max
    }

    pub fn intersect(&self, other: &ZWindow) -> Option<ZWindow> {
        let min = self.min.max(other.min);
        let max = self.max.min(other.max);
        (min <= max).then_some(ZWindow { min, max })
    }

    pub fn hull(&self, other: &ZWindow) -> ZWindow {
        ZWindow { min: self.min.min(other.min), max: self.max.max(other.max) }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.min..=self.max
    }
}

impl fmt::Display for ZWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

/// Location and values of the first coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMismatch {
    pub z_exp: i64,
    pub q_exp: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: u32,
    window: ZWindow,
    complete: bool,
    coeffs: BTreeMap<(i64, u32), BigInt>,
}

impl QSeries {
    /// The zero series; complete, so any window is exact.
    pub fn zero(order: u32, window: ZWindow) -> Self {
        QSeries { order, window, complete: true, coeffs: BTreeMap::new() }
    }

    /// Builds a series from raw terms. Terms above the order are dropped; terms
    /// outside the window are dropped and mark the series incomplete.
    pub fn from_terms<I>(order: u32, window: ZWindow, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64, BigInt)>,
    {
        let mut s = Self::zero(order, window);
        for (z, q, c) in terms {
            if q < 0 {
                return Err(Error::NegativeQExponent { q_exp: q });
            }
            s.add_term(z, q as u64, c);
        }
        Ok(s)
    }

    /// Truncation of a polynomial in `Z[z, 1/z][q]`.
    pub fn from_poly(p: &LaurentPoly, order: u32, window: ZWindow) -> Result<Self> {
        Self::from_terms(order, window, p.terms().map(|(z, q, c)| (z, q, c.clone())))
    }

    /// `z^z_exp * f(q)`.
    pub fn from_z_slice(z_exp: i64, f: &PowerSeries, window: ZWindow) -> Self {
        let mut s = Self::zero(f.order(), window);
        s.accumulate(z_exp, 0, f, &BigInt::from(1));
        s
    }

    fn add_term(&mut self, z: i64, q: u64, c: BigInt) {
        if q > self.order as u64 || c.is_zero() {
            return;
        }
        if !self.window.contains(z) {
            self.complete = false;
            return;
        }
        let key = (z, q as u32);
        let entry = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Adds `c * z^z_exp * q^q_shift * f(q)`.
    pub fn accumulate(&mut self, z_exp: i64, q_shift: u64, f: &PowerSeries, c: &BigInt) {
        if q_shift > self.order as u64 {
            return;
        }
        for (n, a) in f.coeffs().iter().enumerate() {
            let q = q_shift + n as u64;
            if q > self.order as u64 {
                break;
            }
            if !a.is_zero() {
                self.add_term(z_exp, q, a * c);
            }
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn window(&self) -> ZWindow {
        self.window
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms as `(z_exp, q_exp, coeff)`, sorted by `z`, then `q`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&(z, q), c)| (z, q, c))
    }

    /// Smallest window holding every stored coefficient.
    pub fn support_hull(&self) -> Option<ZWindow> {
        let min = self.coeffs.keys().next()?.0;
        let max = self.coeffs.keys().next_back()?.0;
        Some(ZWindow { min, max })
    }

    pub fn coeff(&self, z_exp: i64, q_exp: u32) -> Result<BigInt> {
        self.check_z(z_exp)?;
        if q_exp > self.order {
            return Err(Error::BeyondOrder { q_exp: q_exp as i64, order: self.order });
        }
        Ok(self.coeffs.get(&(z_exp, q_exp)).cloned().unwrap_or_default())
    }

    fn check_z(&self, z_exp: i64) -> Result<()> {
        if self.window.contains(z_exp) {
            Ok(())
        } else {
            Err(Error::WindowUnderflow(format!(
                "z^{z_exp} lies outside the exact window {}",
                self.window
            )))
        }
    }

    /// The coefficient of `z^z_exp` as a univariate series.
    pub fn coeff_of_z(&self, z_exp: i64) -> Result<PowerSeries> {
        self.check_z(z_exp)?;
        let mut coeffs = vec![BigInt::zero(); self.order as usize + 1];
        for (&(_, q), c) in self.coeffs.range((z_exp, 0)..=(z_exp, u32::MAX)) {
            coeffs[q as usize] = c.clone();
        }
        let out = PowerSeries::from_coeffs(coeffs, self.order);
        Ok(out)
    }

    /// Re-targets the window. A complete series may move to any window and stays
    /// complete if no nonzero coefficient is dropped; an incomplete series may
    /// only narrow.
    pub fn with_window(&self, window: ZWindow) -> Result<QSeries> {
        if !self.complete && !self.window.contains_window(&window) {
            return Err(Error::WindowUnderflow(format!(
                "cannot widen incomplete series from {} to {window}",
                self.window
            )));
        }
        let coeffs: BTreeMap<_, _> = self
            .coeffs
            .iter()
            .filter(|((z, _), _)| window.contains(*z))
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        let complete = self.complete && coeffs.len() == self.coeffs.len();
        Ok(QSeries { order: self.order, window, complete, coeffs })
    }

    pub fn truncate(&self, order: u32) -> QSeries {
        let order = order.min(self.order);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|((_, q), _)| *q <= order)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        QSeries { order, window: self.window, complete: self.complete, coeffs }
    }

    /// Multiplication by `z^z_exp q^q_exp`, `q_exp >= 0`.
    pub fn mul_monomial(&self, z_exp: i64, q_exp: u32) -> QSeries {
        let window = ZWindow { min: self.window.min + z_exp, max: self.window.max + z_exp };
        let coeffs = self
            .coeffs
            .iter()
            .filter(|((_, q), _)| (*q as u64 + q_exp as u64) <= self.order as u64)
            .map(|(&(z, q), c)| ((z + z_exp, q + q_exp), c.clone()))
            .collect();
        QSeries { order: self.order, window, complete: self.complete, coeffs }
    }

    fn sum_window(&self, other: &QSeries) -> Result<(ZWindow, bool)> {
        match (self.complete, other.complete) {
            (true, true) => Ok((self.window.hull(&other.window), true)),
            (true, false) => Ok((other.window, false)),
            (false, true) => Ok((self.window, false)),
            (false, false) => self
                .window
                .intersect(&other.window)
                .map(|w| (w, false))
                .ok_or_else(|| {
                    Error::WindowUnderflow(format!(
                        "windows {} and {} do not overlap",
                        self.window, other.window
                    ))
                }),
        }
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.combine(other, true)
    }

    fn combine(&self, other: &QSeries, negate: bool) -> Result<QSeries> {
        let (window, complete) = self.sum_window(other)?;
        let order = self.order.min(other.order);
        let mut out = QSeries { order, window, complete: true, coeffs: BTreeMap::new() };
        for (z, q, c) in self.terms() {
            if window.contains(z) {
                out.add_term(z, q as u64, c.clone());
            }
        }
        for (z, q, c) in other.terms() {
            if window.contains(z) {
                out.add_term(z, q as u64, if negate { -c } else { c.clone() });
            }
        }
        out.complete = complete;
        Ok(out)
    }

    /// Product with the largest window on which every coefficient is exact.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        let (window, complete) = match (self.complete, other.complete) {
            (true, true) => (
                ZWindow {
                    min: self.window.min + other.window.min,
                    max: self.window.max + other.window.max,
                },
                true,
            ),
            (false, true) | (true, false) => {
                let (inc, comp) = if self.complete { (other, self) } else { (self, other) };
                // A complete factor with empty support makes the product exactly zero.
                let Some(hull) = comp.support_hull() else {
                    return Ok(QSeries::zero(self.order.min(other.order), inc.window));
                };
                let w = ZWindow { min: inc.window.min + hull.max, max: inc.window.max + hull.min };
                if w.min > w.max {
                    return Err(Error::WindowUnderflow(format!(
                        "product of incomplete window {} with support {} leaves no exact z-exponent",
                        inc.window, hull
                    )));
                }
                (w, false)
            }
            (false, false) => {
                return Err(Error::WindowUnderflow(
                    "product of two incomplete series has no guaranteed window".to_string(),
                ))
            }
        };
        let order = self.order.min(other.order);
        let mut out = QSeries { order, window, complete: true, coeffs: BTreeMap::new() };
        for (&(z1, q1), c1) in &self.coeffs {
            if q1 > order {
                continue;
            }
            for (&(z2, q2), c2) in &other.coeffs {
                if q1 + q2 > order {
                    continue;
                }
                let z = z1 + z2;
                if window.contains(z) {
                    out.add_term(z, (q1 + q2) as u64, c1 * c2);
                }
            }
        }
        out.complete = complete;
        Ok(out)
    }

    /// First disagreement, scanning by ascending `q` then `z`, over the common
    /// window and the smaller order.
    pub fn first_mismatch(&self, other: &QSeries) -> Result<Option<CoeffMismatch>> {
        let window = self.window.intersect(&other.window).ok_or_else(|| {
            Error::WindowUnderflow(format!(
                "windows {} and {} do not overlap",
                self.window, other.window
            ))
        })?;
        let order = self.order.min(other.order);
        let mut keys: Vec<(u32, i64)> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .filter(|(z, q)| window.contains(*z) && *q <= order)
            .map(|&(z, q)| (q, z))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for (q, z) in keys {
            let a = self.coeffs.get(&(z, q)).cloned().unwrap_or_default();
            let b = other.coeffs.get(&(z, q)).cloned().unwrap_or_default();
            if a != b {
                return Ok(Some(CoeffMismatch { z_exp: z, q_exp: q, lhs: a, rhs: b }));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for QSeries {
    /// One line per `z`-exponent in the window that carries a nonzero slice.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for z in self.window.iter() {
            let slice = self.coeff_of_z(z).map_err(|_| fmt::Error)?;
            if slice.is_zero() {
                continue;
            }
            if any {
                writeln!(f)?;
            }
            write!(f, "[z^{z}] {slice}")?;
            any = true;
        }
        if !any {
            write!(f, "O(q^{})", self.order + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::laurent::LaurentPoly;

    fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(z, q, c)| (z, q, BigInt::from(c))))
    }

    #[test]
    fn from_poly_examples() {
        let w = ZWindow::symmetric(3);
        let p = poly(&[(0, 0, 1), (1, 1, 1)]);
        let s = QSeries::from_poly(&p, 5, w).unwrap();
        assert_eq!(s.coeff(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(0, 0).unwrap(), BigInt::from(1));

        let high = QSeries::from_poly(&poly(&[(1, 7, 1)]), 5, w).unwrap();
        assert!(high.is_zero());
        assert_eq!(high.order(), 5);

        let neg = QSeries::from_poly(&poly(&[(1, -1, 1)]), 5, w);
        assert_eq!(neg, Err(Error::NegativeQExponent { q_exp: -1 }));
    }

    #[test]
    fn reads_outside_window_fail() {
        let s = QSeries::from_poly(&poly(&[(0, 0, 1), (1, 0, 1), (1, 1, 1)]), 4, ZWindow::new(0, 1).unwrap())
            .unwrap();
        assert_eq!(s.coeff_of_z(1).unwrap().body_string(), "1 + q");
        assert!(matches!(s.coeff_of_z(2), Err(Error::WindowUnderflow(_))));
        assert!(matches!(s.coeff(0, 5), Err(Error::BeyondOrder { .. })));
        let zero = QSeries::zero(3, ZWindow::point(0));
        assert!(zero.coeff_of_z(0).unwrap().is_zero());
    }

    #[test]
    fn incomplete_products_shrink_the_window() {
        // 1 + z + z^2 + ... seen through the window [0, 3]: incomplete.
        let ones = QSeries::from_terms(2, ZWindow::new(0, 3).unwrap(), (0..10).map(|z| (z, 0, BigInt::from(1))))
            .unwrap();
        assert!(!ones.is_complete());
        // (1 - z) is complete with support [0, 1].
        let one_minus_z = QSeries::from_poly(&poly(&[(0, 0, 1), (1, 0, -1)]), 2, ZWindow::new(0, 1).unwrap()).unwrap();
        let prod = ones.mul(&one_minus_z).unwrap();
        assert_eq!(prod.window(), ZWindow::new(1, 3).unwrap());
        for z in 1..=3 {
            assert_eq!(prod.coeff(z, 0).unwrap(), BigInt::zero());
        }
        assert!(ones.mul(&ones).is_err());
    }

    #[test]
    fn narrowing_keeps_completeness_when_nothing_is_dropped() {
        let s = QSeries::from_poly(&poly(&[(0, 0, 1), (1, 0, 1)]), 2, ZWindow::symmetric(5)).unwrap();
        assert!(s.with_window(ZWindow::new(0, 1).unwrap()).unwrap().is_complete());
        let narrow = s.with_window(ZWindow::point(0)).unwrap();
        assert!(!narrow.is_complete());
        assert!(narrow.with_window(ZWindow::symmetric(1)).is_err());
    }

    #[test]
    fn first_mismatch_scans_by_q() {
        let w = ZWindow::symmetric(2);
        let a = QSeries::from_poly(&poly(&[(1, 1, 1), (-1, 3, 1)]), 5, w).unwrap();
        let b = QSeries::from_poly(&poly(&[(1, 1, 1), (2, 2, 1)]), 5, w).unwrap();
        let m = a.first_mismatch(&b).unwrap().unwrap();
        assert_eq!((m.z_exp, m.q_exp), (2, 2));
        assert!(a.first_mismatch(&a).unwrap().is_none());
    }
}
