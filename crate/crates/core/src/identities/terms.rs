//! Builders for sums of `± z^a q^e / ((q)_x (q)_y)` terms.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qseries::{PowerSeries, QFactorialTable, QSeries, ZWindow};

/// Evaluation context for one identity instance. Every exponent that enters a
/// formula goes through [`Ctx::e`], which adds one at the perturbed site.
pub struct Ctx<'a> {
    pub order: u32,
    pub window: ZWindow,
    pub census_max: u32,
    pub table: &'a QFactorialTable,
    pub fault: Option<&'a str>,
}

impl Ctx<'_> {
    pub fn e(&self, site: &str, value: i64) -> i64 {
        if self.fault == Some(site) {
            value + 1
        } else {
            value
        }
    }

    /// Summation bound large enough that every later term exceeds the order.
    pub fn kcap(&self, spread: i64) -> i64 {
        self.order as i64 + 2 * spread.abs() + 8
    }

    pub fn unperturbed(&self) -> Ctx<'_> {
        Ctx { order: self.order, window: self.window, census_max: self.census_max, table: self.table, fault: None }
    }
}

#[derive(Clone, Copy, Debug)]
struct Term {
    sign: i64,
    z: i64,
    exp: i64,
    a: i64,
    b: Option<i64>,
}

/// Accumulates terms, then evaluates them against a factorial table.
#[derive(Default)]
pub struct Terms {
    terms: Vec<Term>,
}

impl Terms {
    pub fn new() -> Self {
        Self::default()
    }

    /// `sign z^z q^exp / ((q)_a (q)_b)`.
    pub fn push(&mut self, sign: i64, z: i64, exp: i64, a: i64, b: i64) {
        self.terms.push(Term { sign, z, exp, a, b: Some(b) });
    }

    /// `sign z^z q^exp / (q)_a`.
    pub fn push1(&mut self, sign: i64, z: i64, exp: i64, a: i64) {
        self.terms.push(Term { sign, z, exp, a, b: None });
    }

    fn live(&self, order: u32) -> impl Iterator<Item = &Term> {
        self.terms.iter().filter(move |t| t.a >= 0 && t.b.is_none_or(|b| b >= 0) && t.exp <= order as i64)
    }

    fn value(t: &Term, table: &QFactorialTable) -> Result<PowerSeries> {
        if t.exp < 0 {
            return Err(Error::NegativeQExponent { q_exp: t.exp });
        }
        Ok(match t.b {
            Some(b) => table.term(t.exp, t.a, b)?,
            None => table.inv(t.a).shift(t.exp as u32),
        })
    }

    /// Sum as a univariate series; `z` powers are ignored.
    pub fn power(&self, table: &QFactorialTable) -> Result<PowerSeries> {
        let mut acc = PowerSeries::zero(table.order());
        for t in self.live(table.order()) {
            let v = Self::value(t, table)?;
            acc = if t.sign >= 0 { &acc + &v } else { &acc - &v };
        }
        Ok(acc)
    }

    /// Sum as a bivariate series, exact on the hull of the live `z` powers.
    pub fn series(&self, table: &QFactorialTable) -> Result<QSeries> {
        let order = table.order();
        let window = self
            .live(order)
            .map(|t| ZWindow::point(t.z))
            .reduce(|a, b| a.hull(&b))
            .unwrap_or(ZWindow::point(0));
        let mut s = QSeries::zero(order, window);
        for t in self.live(order) {
            let v = Self::value(t, table)?;
            s.accumulate(t.z, 0, &v, &BigInt::from(t.sign));
        }
        Ok(s)
    }

    /// `(exp, sorted Pochhammer lengths)` of every live term, sorted.
    pub fn shape(&self, order: u32) -> Vec<(i64, (i64, i64))> {
        let mut v: Vec<_> = self
            .live(order)
            .map(|t| {
                let b = t.b.unwrap_or(0);
                (t.exp, (t.a.min(b), t.a.max(b)))
            })
            .collect();
        v.sort_unstable();
        v
    }
}

/// `[z^z]` of `s` divided by `q^norm`. `s` must be known through `q^(norm + order)`
/// and its slice must vanish below `q^norm`.
pub fn normalized_slice(s: &QSeries, z: i64, norm: i64, order: u32) -> Result<PowerSeries> {
    let need = norm + order as i64;
    if norm < 0 || (s.order() as i64) < need {
        return Err(Error::InvalidParameter(format!("slice z^{z} needs order {need} but has {}", s.order())));
    }
    let slice = s.coeff_of_z(z)?;
    let c = slice.coeffs();
    if let Some(e) = c[..norm as usize].iter().position(|x| x != &BigInt::from(0)) {
        return Err(Error::InvalidParameter(format!("slice z^{z} has a term at q^{e} below q^{norm}")));
    }
    Ok(PowerSeries::from_coeffs(c[norm as usize..].to_vec(), order))
}
