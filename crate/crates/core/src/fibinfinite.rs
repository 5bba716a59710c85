//! Infinite Fibonacci configurations of type `(theta, l)`.
//!
//! A configuration is a 0/1 function on the integers with at most one 1 in any
//! `l + 1` consecutive sites, empty far to the right and equal to the vacuum
//! far to the left. The vacuum occupies `theta - (l+1)k` for `k > 0`. A
//! configuration is stored as its finite deviation from the vacuum.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fibfinite;
use crate::qseries::{QFactorialTable, QSeries, Substitution, ZWindow};

pub(crate) fn check_type(theta: i64, l: i64) -> Result<()> {
    if l < 0 || theta < 0 || theta > l {
        return Err(Error::BadTheta { theta, l });
    }
    Ok(())
}

/// Whether the vacuum of type `(theta, l)` occupies site `x`.
pub fn is_vacuum_site(theta: i64, l: i64, x: i64) -> bool {
    let gap = theta - x;
    gap > l && gap % (l + 1) == 0
}

/// Largest vacuum site strictly below `x`.
fn vacuum_site_below(theta: i64, l: i64, x: i64) -> i64 {
    let step = l + 1;
    // smallest k > 0 with theta - step k < x
    let k = ((theta - x).div_euclid(step) + 1).max(1);
    theta - step * k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnergyCharge {
    pub charge: i64,
    pub energy: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfFibConfig {
    theta: i64,
    l: i64,
    added: BTreeSet<i64>,
    removed: BTreeSet<i64>,
}

impl InfFibConfig {
    pub fn vacuum(theta: i64, l: i64) -> Result<Self> {
        check_type(theta, l)?;
        Ok(InfFibConfig { theta, l, added: BTreeSet::new(), removed: BTreeSet::new() })
    }

    /// A configuration given by the sites it adds to and removes from the vacuum.
    pub fn new<A, R>(theta: i64, l: i64, added: A, removed: R) -> Result<Self>
    where
        A: IntoIterator<Item = i64>,
        R: IntoIterator<Item = i64>,
    {
        check_type(theta, l)?;
        let cfg = InfFibConfig {
            theta,
            l,
            added: added.into_iter().collect(),
            removed: removed.into_iter().collect(),
        };
        if let Some(x) = cfg.added.iter().find(|&&x| is_vacuum_site(theta, l, x)) {
            return Err(Error::InvalidConfiguration(format!("site {x} is already occupied by the vacuum")));
        }
        if let Some(x) = cfg.removed.iter().find(|&&x| !is_vacuum_site(theta, l, x)) {
            return Err(Error::InvalidConfiguration(format!("site {x} is not a vacuum site")));
        }
        let occ = cfg.occupied_from(cfg.stable_below() - (l + 1));
        for w in occ.windows(2) {
            if w[0] - w[1] <= l {
                return Err(Error::InvalidConfiguration(format!(
                    "particles at {} and {} are within distance {l}",
                    w[1], w[0]
                )));
            }
        }
        Ok(cfg)
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn added(&self) -> &BTreeSet<i64> {
        &self.added
    }

    pub fn removed(&self) -> &BTreeSet<i64> {
        &self.removed
    }

    pub fn is_vacuum(&self) -> bool {
        self.added.is_empty() && self.removed.is_empty()
    }

    pub fn is_occupied(&self, x: i64) -> bool {
        self.added.contains(&x) || (is_vacuum_site(self.theta, self.l, x) && !self.removed.contains(&x))
    }

    /// A site at or below which the configuration coincides with the vacuum.
    pub fn stable_below(&self) -> i64 {
        let lowest = self.added.iter().chain(&self.removed).min().copied();
        match lowest {
            Some(x) => vacuum_site_below(self.theta, self.l, x),
            None => self.theta - (self.l + 1),
        }
    }

    /// Occupied sites `>= lo`, highest first.
    pub fn occupied_from(&self, lo: i64) -> Vec<i64> {
        let step = self.l + 1;
        let top_vac = self.theta - step;
        let mut out: Vec<i64> = self.added.iter().copied().filter(|&x| x >= lo).collect();
        let mut v = top_vac;
        while v >= lo {
            if !self.removed.contains(&v) {
                out.push(v);
            }
            v -= step;
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn energy_charge(&self) -> EnergyCharge {
        EnergyCharge {
            charge: self.added.len() as i64 - self.removed.len() as i64,
            energy: self.added.iter().sum::<i64>() - self.removed.iter().sum::<i64>(),
        }
    }
}

/// Depth below zero to which deviations are searched at energy bound `d`.
pub fn default_depth(theta: i64, l: i64, d: u32) -> i64 {
    (l + 1) * (d as i64 + 2) + theta + l + 1
}

/// Charges `s` whose lowest energy `theta s + (l+1) s (s-1) / 2` is at most `d`.
pub fn natural_window(theta: i64, l: i64, d: u32) -> ZWindow {
    let lowest = |s: i64| theta * s + (l + 1) * s * (s - 1) / 2;
    let d = d as i64;
    let mut max = 0;
    while lowest(max + 1) <= d {
        max += 1;
    }
    let mut min = 0;
    while lowest(min - 1) <= d {
        min -= 1;
    }
    ZWindow { min, max }
}

/// A configuration reached by the enumerator, as sites added to / removed from
/// the vacuum (both listed highest first).
pub struct Deviation<'a> {
    pub added: &'a [i64],
    pub removed: &'a [i64],
    pub charge: i64,
    pub energy: i64,
}

impl Deviation<'_> {
    pub fn to_config(&self, theta: i64, l: i64) -> InfFibConfig {
        InfFibConfig {
            theta,
            l,
            added: self.added.iter().copied().collect(),
            removed: self.removed.iter().copied().collect(),
        }
    }

    /// Lowest site where the configuration differs from the vacuum.
    pub fn lowest(&self) -> Option<i64> {
        let a = self.added.last().copied();
        let r = self.removed.last().copied();
        match (a, r) {
            (Some(a), Some(r)) => Some(a.min(r)),
            (a, r) => a.or(r),
        }
    }
}

struct Search<'v> {
    theta: i64,
    l: i64,
    d: i64,
    top: i64,
    len: usize,
    // bound[idx][b]: least energy any valid completion adds from index idx on,
    // with the next b sites blocked
    bound: Vec<Vec<i64>>,
    added: Vec<i64>,
    removed: Vec<i64>,
    visit: &'v mut dyn FnMut(&Deviation),
}

const UNREACHABLE: i64 = i64::MAX / 4;

impl Search<'_> {
    fn site(&self, idx: usize) -> i64 {
        self.top - idx as i64
    }

    fn vac(&self, x: i64) -> bool {
        is_vacuum_site(self.theta, self.l, x)
    }

    fn cost_empty(&self, x: i64) -> i64 {
        if self.vac(x) {
            -x
        } else {
            0
        }
    }

    fn cost_occupied(&self, x: i64) -> i64 {
        if self.vac(x) {
            0
        } else {
            x
        }
    }

    fn fill_bound(&mut self, bottom: i64) {
        let l = self.l as usize;
        let slack = (bottom - 1 - vacuum_site_below(self.theta, self.l, bottom)) as usize;
        let mut bound = vec![vec![UNREACHABLE; l + 1]; self.len + 1];
        for (b, v) in bound[self.len].iter_mut().enumerate() {
            if b <= slack {
                *v = 0;
            }
        }
        for idx in (0..self.len).rev() {
            let x = self.site(idx);
            for b in 0..=l {
                let empty = bound[idx + 1][b.saturating_sub(1)].saturating_add(self.cost_empty(x));
                let best = if b == 0 {
                    empty.min(bound[idx + 1][l].saturating_add(self.cost_occupied(x)))
                } else {
                    empty
                };
                bound[idx][b] = best.min(UNREACHABLE);
            }
        }
        self.bound = bound;
    }

    fn go(&mut self, idx: usize, blocked: usize, energy: i64, charge: i64) {
        if idx == self.len {
            (self.visit)(&Deviation { added: &self.added, removed: &self.removed, charge, energy });
            return;
        }
        let x = self.site(idx);
        let vac = self.vac(x);
        let e = energy + self.cost_empty(x);
        if e + self.bound[idx + 1][blocked.saturating_sub(1)] <= self.d {
            if vac {
                self.removed.push(x);
            }
            self.go(idx + 1, blocked.saturating_sub(1), e, charge - vac as i64);
            if vac {
                self.removed.pop();
            }
        }
        if blocked == 0 {
            let e = energy + self.cost_occupied(x);
            let l = self.l as usize;
            if e + self.bound[idx + 1][l] <= self.d {
                if !vac {
                    self.added.push(x);
                }
                self.go(idx + 1, l, e, charge + !vac as i64);
                if !vac {
                    self.added.pop();
                }
            }
        }
    }
}

/// Visits every configuration of energy at most `d` whose deviations lie in
/// `[-depth, d]`, each exactly once.
pub fn visit_upto(theta: i64, l: i64, d: u32, depth: i64, visit: &mut dyn FnMut(&Deviation)) -> Result<()> {
    check_type(theta, l)?;
    if depth < 0 {
        return Err(Error::InvalidParameter(format!("search depth {depth} is negative")));
    }
    let top = d as i64;
    let len = (top + depth + 1) as usize;
    let mut s = Search {
        theta,
        l,
        d: top,
        top,
        len,
        bound: Vec::new(),
        added: Vec::new(),
        removed: Vec::new(),
        visit,
    };
    s.fill_bound(-depth);
    if s.bound[0][0] <= s.d {
        s.go(0, 0, 0, 0);
    }
    Ok(())
}

/// All configurations of energy at most `d`.
pub fn enumerate_upto(theta: i64, l: i64, d: u32) -> Result<Vec<InfFibConfig>> {
    let mut out = Vec::new();
    visit_upto(theta, l, d, default_depth(theta, l, d), &mut |dev| out.push(dev.to_config(theta, l)))?;
    Ok(out)
}

/// Counts of configurations by `(charge, energy)`, searched to the given depth.
pub fn census(theta: i64, l: i64, d: u32, depth: i64) -> Result<HashMap<EnergyCharge, u64>> {
    census_filtered(theta, l, d, depth, &|_| true)
}

fn census_filtered(
    theta: i64,
    l: i64,
    d: u32,
    depth: i64,
    keep: &dyn Fn(&Deviation) -> bool,
) -> Result<HashMap<EnergyCharge, u64>> {
    let mut counts: HashMap<EnergyCharge, u64> = HashMap::new();
    visit_upto(theta, l, d, depth, &mut |dev| {
        if keep(dev) {
            *counts.entry(EnergyCharge { charge: dev.charge, energy: dev.energy }).or_default() += 1;
        }
    })?;
    Ok(counts)
}

fn census_series(counts: HashMap<EnergyCharge, u64>, d: u32, window: ZWindow) -> Result<QSeries> {
    if let Some(ec) = counts.keys().find(|ec| !window.contains(ec.charge)) {
        return Err(Error::WindowUnderflow(format!(
            "a configuration of charge {} falls outside the window {window}",
            ec.charge
        )));
    }
    QSeries::from_terms(d, window, counts.into_iter().map(|(ec, c)| (ec.charge, ec.energy, BigInt::from(c))))
}

/// Character by enumeration, up to `q^d`.
pub fn char_brute(theta: i64, l: i64, d: u32, window: ZWindow) -> Result<QSeries> {
    char_brute_at_depth(theta, l, d, window, default_depth(theta, l, d))
}

pub fn char_brute_at_depth(theta: i64, l: i64, d: u32, window: ZWindow, depth: i64) -> Result<QSeries> {
    census_series(census(theta, l, d, depth)?, d, window)
}

/// Enumerated character of the configurations that agree with the vacuum at
/// every site `<= theta - k(l+1)`.
pub fn char_brute_stabilized(theta: i64, l: i64, k: i64, d: u32, window: ZWindow) -> Result<QSeries> {
    let cut = theta - k * (l + 1);
    let keep = move |dev: &Deviation| dev.lowest().is_none_or(|x| x > cut);
    census_series(census_filtered(theta, l, d, default_depth(theta, l, d), &keep)?, d, window)
}

/// `sum_m (z q^theta)^m q^((l+1) m (m-1)/2) / (q)_inf`, exact on its natural window.
pub fn bilateral(theta: i64, l: i64, d: u32, table: &QFactorialTable) -> Result<QSeries> {
    check_type(theta, l)?;
    let window = natural_window(theta, l, d);
    let mut s = QSeries::zero(d, window);
    let one = BigInt::from(1);
    for m in window.iter() {
        let e = theta * m + (l + 1) * m * (m - 1) / 2;
        s.accumulate(m, e as u64, table.inv_infinite(), &one);
    }
    Ok(s)
}

/// Closed bilateral character restricted to `window`.
pub fn char_closed(theta: i64, l: i64, d: u32, window: ZWindow) -> Result<QSeries> {
    bilateral(theta, l, d, &QFactorialTable::new(d))?.with_window(window)
}

/// Character of the configurations stabilizing on `theta - k(l+1)`:
/// `sum_{m > -k} (z q^theta)^m q^((l+1) m (m-1)/2) / (q)_{m+k-1}`.
pub fn char_stabilized(theta: i64, l: i64, k: i64, d: u32, window: ZWindow) -> Result<QSeries> {
    check_type(theta, l)?;
    if k < 1 {
        return Err(Error::InvalidParameter(format!("stabilization depth k = {k} must be at least 1")));
    }
    let table = QFactorialTable::new(d);
    let nat = natural_window(theta, l, d);
    let lo = nat.min.max(1 - k);
    let mut s = QSeries::zero(d, ZWindow { min: lo.min(nat.max), max: nat.max });
    let one = BigInt::from(1);
    for m in lo..=nat.max {
        let e = theta * m + (l + 1) * m * (m - 1) / 2;
        s.accumulate(m, e as u64, table.inv(m + k - 1), &one);
    }
    s.with_window(window)
}

/// `P^l_inf(z q^shift) = sum_n z^n q^(shift n + (l+1) n (n-1)/2) / (q)_n`.
pub fn p_infinite(l: i64, shift: i64, d: u32, table: &QFactorialTable) -> QSeries {
    let exp = |n: i64| shift * n + (l + 1) * n * (n - 1) / 2;
    let mut top = 0;
    while exp(top + 1) <= d as i64 {
        top += 1;
    }
    let mut s = QSeries::zero(d, ZWindow { min: 0, max: top });
    let one = BigInt::from(1);
    for n in 0..=top {
        s.accumulate(n, exp(n) as u64, table.inv(n), &one);
    }
    s
}

/// Which sites among `0..l` a configuration occupies, as in the splitting
/// `Z = Z_<0 + {0..l-1} + Z_>=l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Empty,
    Occupied(i64),
}

impl Slot {
    /// `k` such that the left part is `P~^{-k}`: sites `-k+1 .. -1` stay empty.
    pub fn left_depth(self, l: i64) -> i64 {
        match self {
            Slot::Empty => 1,
            Slot::Occupied(i) => l + 1 - i,
        }
    }

    fn check(self, l: i64) -> Result<()> {
        match self {
            Slot::Occupied(i) if i < 0 || i >= l => {
                Err(Error::InvalidParameter(format!("slot {i} must lie in 0..{l}")))
            }
            _ => Ok(()),
        }
    }

    /// All slots for a given `l`: the empty one first.
    pub fn all(l: i64) -> impl Iterator<Item = Slot> {
        std::iter::once(Slot::Empty).chain((0..l.max(0)).map(Slot::Occupied))
    }
}

/// Character of the right part for a slot.
pub fn right_char(theta: i64, l: i64, slot: Slot, d: u32) -> Result<QSeries> {
    check_type(theta, l)?;
    slot.check(l)?;
    let shift = match slot {
        Slot::Empty => l,
        Slot::Occupied(i) => i + l + 1,
    };
    Ok(p_infinite(l, shift, d, &QFactorialTable::new(d)))
}

/// First summation index of the left-part series.
pub fn alpha(theta: i64, l: i64, k: i64) -> i64 {
    if theta + k > l + 1 {
        1
    } else {
        0
    }
}

fn check_left(theta: i64, l: i64, k: i64) -> Result<()> {
    check_type(theta, l)?;
    if k < 1 || k > l + 1 {
        return Err(Error::InvalidParameter(format!("left depth k = {k} must lie in 1..={}", l + 1)));
    }
    Ok(())
}

/// `sum_{m >= alpha} (z q^theta)^(-m) q^((l+1) m (m+1)/2) / (q)_{(m+1)(l+1) - theta - k}`.
pub fn left_char(theta: i64, l: i64, k: i64, d: u32) -> Result<QSeries> {
    check_left(theta, l, k)?;
    Ok(left_series(theta, l, k, d, &QFactorialTable::new(d), &|_, v| v))
}

/// Left part with every exponent routed through `adjust(site, value)`; sites
/// are `"exp"` (the `q`-power) and `"poch"` (the Pochhammer length).
pub(crate) fn left_series(
    theta: i64,
    l: i64,
    k: i64,
    d: u32,
    table: &QFactorialTable,
    adjust: &dyn Fn(&str, i64) -> i64,
) -> QSeries {
    let exp = |m: i64| adjust("exp", -theta * m + (l + 1) * m * (m + 1) / 2);
    let a = alpha(theta, l, k);
    let mut top = a;
    while exp(top + 1) <= d as i64 {
        top += 1;
    }
    let mut s = QSeries::zero(d, ZWindow { min: -top, max: 0 });
    let one = BigInt::from(1);
    for m in a..=top {
        let e = exp(m);
        if (0..=d as i64).contains(&e) {
            s.accumulate(-m, e as u64, table.inv(adjust("poch", (m + 1) * (l + 1) - theta - k)), &one);
        }
    }
    s
}

/// `z^-b q^((l+1) b (b+1)/2 - theta b) chi^l_{b(l+1) - theta - k + 1}(z q^-k, q^-1)`:
/// the configurations on `Z_<0` below `-k+1` that stabilize on `theta - (b+1)(l+1)`.
pub fn left_char_at(theta: i64, l: i64, k: i64, b: i64, d: u32) -> Result<QSeries> {
    check_left(theta, l, k)?;
    let n = b * (l + 1) - theta - k + 1;
    if b < 1 || n < 0 {
        return Err(Error::InvalidParameter(format!("stabilization index b = {b} is too small")));
    }
    let chi = fibfinite::char_closed(n as usize, l as usize);
    let w = chi
        .subst(Substitution::shift_inverted(-k))
        .mul_monomial(-b, (l + 1) * b * (b + 1) / 2 - theta * b);
    QSeries::from_poly(&w, d, ZWindow { min: -b, max: 0 })
}

/// Upper bound on the iterations of [`left_char_finite`].
pub const LEFT_LIMIT_STEPS: i64 = 64;

/// The left part as a limit of finite characters: increases `b` until two
/// consecutive terms agree through `q^d`. Returns the series and the `b` used.
pub fn left_char_finite(theta: i64, l: i64, k: i64, d: u32) -> Result<(QSeries, i64)> {
    check_left(theta, l, k)?;
    // The finite and limiting m = 0 terms first differ at q^(b+1).
    let start = d as i64 + 1;
    let mut prev = left_char_at(theta, l, k, start, d)?;
    for b in start + 1..start + LEFT_LIMIT_STEPS {
        let next = left_char_at(theta, l, k, b, d)?;
        let w = next.window();
        if prev.with_window(w)? == next {
            return Ok((next, b - 1));
        }
        prev = next;
    }
    Err(Error::InvalidParameter(format!(
        "left part ({theta}, {l}, {k}) did not stabilize within {LEFT_LIMIT_STEPS} steps"
    )))
}

/// Right-hand side of the splitting `ch = L_0 R_0 + sum_i z q^i L_i R_i`,
/// exact on its natural window.
pub fn split_rhs(theta: i64, l: i64, d: u32, table: &QFactorialTable) -> Result<QSeries> {
    check_type(theta, l)?;
    let mut total: Option<QSeries> = None;
    for slot in Slot::all(l) {
        let left = left_series(theta, l, slot.left_depth(l), d, table, &|_, v| v);
        let right = match slot {
            Slot::Empty => p_infinite(l, l, d, table),
            Slot::Occupied(i) => p_infinite(l, i + l + 1, d, table).mul_monomial(1, i as u32),
        };
        let term = left.mul(&right)?;
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term)?,
        });
    }
    Ok(total.expect("at least the empty slot"))
}

/// Checks the splitting against the closed and the enumerated character.
pub fn split_identity_check(theta: i64, l: i64, d: u32, window: ZWindow) -> Result<crate::identities::IdentityReport> {
    let mut params = crate::identities::Params::new();
    params.insert("theta".into(), theta);
    params.insert("l".into(), l);
    let config = crate::identities::SuiteConfig { order: d, window, ..Default::default() };
    crate::identities::run_one("split", &params, &config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_sites() {
        let v = InfFibConfig::vacuum(1, 1).unwrap();
        assert_eq!(v.occupied_from(-7), vec![-1, -3, -5, -7]);
        let v = InfFibConfig::vacuum(0, 2).unwrap();
        assert_eq!(v.occupied_from(-9), vec![-3, -6, -9]);
        let v = InfFibConfig::vacuum(0, 0).unwrap();
        assert_eq!(v.occupied_from(-3), vec![-1, -2, -3]);
        assert!(InfFibConfig::vacuum(2, 1).is_err());
    }

    #[test]
    fn validation() {
        // move the top vacuum particle of (1,1) from -1 to 0: too close to -3? no, gap 3
        let c = InfFibConfig::new(1, 1, [0], [-1]).unwrap();
        assert_eq!(c.energy_charge(), EnergyCharge { charge: 0, energy: 1 });
        assert!(InfFibConfig::new(1, 1, [-2], []).is_err());
        assert!(InfFibConfig::new(1, 1, [0], []).is_err());
        assert!(InfFibConfig::new(1, 1, [], [-2]).is_err());
        assert!(InfFibConfig::new(1, 1, [-1], []).is_err());
    }

    #[test]
    fn low_energy_enumeration() {
        // energy 0 holds the vacuum and the vacuum plus a particle at 0
        let zero = enumerate_upto(0, 0, 0).unwrap();
        assert_eq!(zero.len(), 2);
        assert_eq!(zero.iter().filter(|c| c.is_vacuum()).count(), 1);
        let c = census(1, 1, 1, default_depth(1, 1, 1)).unwrap();
        assert_eq!(c.get(&EnergyCharge { charge: 0, energy: 1 }), Some(&1));
        let c = census(0, 0, 1, default_depth(0, 0, 1)).unwrap();
        let at_one: u64 = c.iter().filter(|(ec, _)| ec.energy == 1).map(|(_, v)| v).sum();
        // charges -1, 0, 1, 2
        assert_eq!(at_one, 4);
    }

    #[test]
    fn enumerated_configurations_are_valid_and_distinct() {
        let all = enumerate_upto(1, 2, 8).unwrap();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for c in &all {
            let rebuilt = InfFibConfig::new(1, 2, c.added().iter().copied(), c.removed().iter().copied()).unwrap();
            assert!(rebuilt.energy_charge().energy <= 8);
        }
    }

    #[test]
    fn brute_matches_closed_small() {
        for l in 0..=2 {
            for theta in 0..=l {
                let w = natural_window(theta, l, 10);
                let b = char_brute(theta, l, 10, w).unwrap();
                let c = char_closed(theta, l, 10, w).unwrap();
                assert_eq!(b, c, "({theta}, {l})");
            }
        }
    }

    #[test]
    fn brute_window_underflow() {
        assert!(matches!(char_brute(0, 0, 6, ZWindow::point(0)), Err(Error::WindowUnderflow(_))));
    }

    #[test]
    fn left_part_examples() {
        let d = 12;
        let t = QFactorialTable::new(d);
        // (1,1,1): sum z^-m q^(m^2) / (q)_(2m)
        let mut want = QSeries::zero(d, ZWindow { min: -3, max: 0 });
        for m in 0..=3i64 {
            want.accumulate(-m, (m * m) as u64, t.inv(2 * m), &BigInt::from(1));
        }
        assert_eq!(left_char(1, 1, 1, d).unwrap(), want);
        assert_eq!(alpha(1, 1, 2), 1);
        assert_eq!(alpha(0, 1, 2), 0);
    }

    #[test]
    fn right_part_z0_is_one() {
        let r = right_char(1, 1, Slot::Empty, 10).unwrap();
        assert_eq!(r.coeff_of_z(0).unwrap(), crate::qseries::PowerSeries::one(10));
        assert!(right_char(0, 1, Slot::Occupied(1), 10).is_err());
    }
}
