//! Characters of the lattice modules `V_(i),sqrt(N)` and the map from infinite
//! Fibonacci configurations to indices of semi-infinite monomials.
//!
//! Module `(i, N)` is read as configuration type `(theta, l) = (i, N - 1)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fibinfinite::{self, InfFibConfig};
use crate::qseries::{QSeries, ZWindow};

/// `q^q_offset * body`, with the rational prefactor kept apart from the
/// integer-exponent body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSeries {
    pub q_offset: Ratio<i64>,
    pub body: QSeries,
}

impl fmt::Display for ShiftedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q_offset == Ratio::from_integer(0) {
            write!(f, "{}", self.body)
        } else {
            write!(f, "q^({}) * [{}]", self.q_offset, self.body)
        }
    }
}

fn check_module(i: i64, n: i64) -> Result<()> {
    if n < 1 || i < 0 || i >= n {
        return Err(Error::BadModuleIndex { i, n });
    }
    Ok(())
}

/// `i^2 / (2N) - i / 2`.
pub fn q_offset(i: i64, n: i64) -> Result<Ratio<i64>> {
    check_module(i, n)?;
    Ok(Ratio::new(i * i, 2 * n) - Ratio::new(i, 2))
}

/// Character of `V_(i),sqrt(N)` through `q^d` (of the body) on `window`.
pub fn voa_char(i: i64, n: i64, d: u32, window: ZWindow) -> Result<ShiftedSeries> {
    let q_offset = q_offset(i, n)?;
    Ok(ShiftedSeries { q_offset, body: fibinfinite::char_closed(i, n - 1, d, window)? })
}

/// An increasing index sequence: a finite head, then steps of `step` forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIndices {
    head: Vec<i64>,
    step: i64,
}

impl MonomialIndices {
    pub fn head(&self) -> &[i64] {
        &self.head
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    /// `i_k`, 1-based.
    pub fn get(&self, k: usize) -> i64 {
        assert!(k >= 1, "indices are 1-based");
        match self.head.get(k - 1) {
            Some(&x) => x,
            None => self.head[self.head.len() - 1] + self.step * (k - self.head.len()) as i64,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        (1..).map(move |k| self.get(k))
    }

    /// The four basis conditions for module `(i, N)`: increasing; gaps at
    /// least `N`; eventually `= i mod N`; eventually gaps exactly `N`.
    pub fn conditions(&self, i: i64, n: i64) -> [bool; 4] {
        // past the head every gap is `step`, so the first two tail terms settle 3 and 4
        let seen: Vec<i64> = self.iter().take(self.head.len() + 2).collect();
        let gaps: Vec<i64> = seen.windows(2).map(|w| w[1] - w[0]).collect();
        let tail = seen[seen.len() - 1];
        [
            gaps.iter().all(|&g| g > 0) && self.step > 0,
            gaps.iter().all(|&g| g >= n) && self.step >= n,
            tail.rem_euclid(n) == i.rem_euclid(n) && self.step % n == 0,
            self.step == n,
        ]
    }
}

impl fmt::Display for MonomialIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.iter().take(self.head.len() + 2).map(|x| x.to_string()).collect();
        write!(f, "{}, ...", shown.join(", "))
    }
}

/// Positions of the 1's of `a(-n)`, ascending.
pub fn tau(a: &InfFibConfig) -> Result<MonomialIndices> {
    let step = a.l() + 1;
    let support = a.occupied_from(a.stable_below());
    if support.is_empty() {
        return Err(Error::InvalidConfiguration("configuration has no particles".into()));
    }
    let head: Vec<i64> = support.iter().map(|x| -x).collect();
    Ok(MonomialIndices { head, step })
}

/// A configuration whose image breaks one of the four conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    pub condition: usize,
    pub added: Vec<i64>,
    pub removed: Vec<i64>,
    pub indices: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Audit {
    pub i: i64,
    pub n: i64,
    pub d: u32,
    pub configurations: usize,
    /// Number of images failing each condition.
    pub violations: [usize; 4],
    /// First failing configuration for each condition.
    pub examples: [Option<ConditionFailure>; 4],
    pub injective: bool,
    /// `(charge, energy, counted, body coefficient)` where they differ.
    pub count_mismatches: Vec<(i64, i64, u64, BigInt)>,
}

impl Theorem2Audit {
    pub fn conditions_hold(&self) -> bool {
        self.violations.iter().all(|&v| v == 0)
    }

    pub fn counts_match(&self) -> bool {
        self.count_mismatches.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.conditions_hold() && self.counts_match() && self.injective
    }
}

impl fmt::Display for Theorem2Audit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(i, N) = ({}, {}), energy <= {}: {} configurations, violations {:?}, injective {}, counts {}",
            self.i,
            self.n,
            self.d,
            self.configurations,
            self.violations,
            self.injective,
            if self.counts_match() { "match" } else { "differ" }
        )?;
        for x in self.examples.iter().flatten() {
            write!(f, "\n  condition {} fails for {}", x.condition, x.indices)?;
        }
        Ok(())
    }
}

/// Maps every configuration of energy at most `d` of type `(i, N-1)` through
/// [`tau`], checks the four conditions and compares counts with the body of
/// [`voa_char`].
pub fn theorem2_audit(i: i64, n: i64, d: u32) -> Result<Theorem2Audit> {
    check_module(i, n)?;
    let (theta, l) = (i, n - 1);
    let configs = fibinfinite::enumerate_upto(theta, l, d)?;
    let mut violations = [0usize; 4];
    let mut examples: [Option<ConditionFailure>; 4] = Default::default();
    let mut images = HashSet::new();
    let mut counts: BTreeMap<(i64, i64), u64> = BTreeMap::new();
    for a in &configs {
        let t = tau(a)?;
        for (c, ok) in t.conditions(i, n).into_iter().enumerate() {
            if !ok {
                violations[c] += 1;
                examples[c].get_or_insert_with(|| ConditionFailure {
                    condition: c + 1,
                    added: a.added().iter().copied().collect(),
                    removed: a.removed().iter().copied().collect(),
                    indices: t.to_string(),
                });
            }
        }
        images.insert(t);
        let ec = a.energy_charge();
        *counts.entry((ec.charge, ec.energy)).or_default() += 1;
    }
    let window = fibinfinite::natural_window(theta, l, d);
    let body = voa_char(i, n, d, window)?.body;
    let mut count_mismatches = Vec::new();
    for z in window.iter() {
        for q in 0..=d {
            let counted = counts.get(&(z, q as i64)).copied().unwrap_or(0);
            let want = body.coeff(z, q)?;
            if want != BigInt::from(counted) {
                count_mismatches.push((z, q as i64, counted, want));
            }
        }
    }
    if counts.keys().any(|(z, _)| !window.contains(*z)) {
        count_mismatches.push((0, 0, 0, BigInt::from(-1)));
    }
    Ok(Theorem2Audit {
        i,
        n,
        d,
        configurations: configs.len(),
        violations,
        examples,
        injective: images.len() == configs.len(),
        count_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `tau` by its recursive definition: repeatedly take the largest remaining site.
    fn tau_literal(a: &InfFibConfig, terms: usize) -> Vec<i64> {
        let mut support = a.occupied_from(a.stable_below() - (a.l() + 1) * terms as i64);
        let mut out = Vec::new();
        for _ in 0..terms {
            let top = *support.iter().max().unwrap();
            support.retain(|&x| x != top);
            out.push(-top);
        }
        out
    }

    #[test]
    fn offsets() {
        assert_eq!(q_offset(0, 5).unwrap(), Ratio::from_integer(0));
        assert_eq!(q_offset(1, 2).unwrap(), Ratio::new(-1, 4));
        assert_eq!(q_offset(2, 3).unwrap(), Ratio::new(-1, 3));
        assert!(q_offset(3, 3).is_err());
        assert!(q_offset(0, 0).is_err());
    }

    #[test]
    fn offset_denominator_divides_2n() {
        for n in 1..8 {
            for i in 0..n {
                assert_eq!((2 * n) % *q_offset(i, n).unwrap().denom(), 0);
            }
        }
    }

    #[test]
    fn body_is_the_configuration_character() {
        let w = ZWindow::symmetric(3);
        let v = voa_char(1, 3, 12, w).unwrap();
        assert_eq!(v.body, fibinfinite::char_closed(1, 2, 12, w).unwrap());
    }

    #[test]
    fn vacuum_image() {
        let v = InfFibConfig::vacuum(1, 1).unwrap();
        let t = tau(&v).unwrap();
        assert_eq!(t.iter().take(4).collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert_eq!(t.conditions(1, 2), [true; 4]);
    }

    #[test]
    fn tau_matches_definition() {
        for a in fibinfinite::enumerate_upto(1, 2, 6).unwrap() {
            let t = tau(&a).unwrap();
            assert_eq!(t.iter().take(8).collect::<Vec<_>>(), tau_literal(&a, 8));
        }
    }

    #[test]
    fn one_particle_excitation() {
        // move the top particle of the (1,1) vacuum from -1 to 0
        let a = InfFibConfig::new(1, 1, [0], [-1]).unwrap();
        let t = tau(&a).unwrap();
        assert_eq!(t.iter().take(4).collect::<Vec<_>>(), vec![0, 3, 5, 7]);
        assert_eq!(t.step(), 2);
    }

    #[test]
    fn audits_at_small_energy() {
        let a = theorem2_audit(1, 2, 10).unwrap();
        assert!(a.passed(), "{a}");
        let a = theorem2_audit(0, 1, 8).unwrap();
        assert!(a.passed(), "{a}");
        let a = theorem2_audit(1, 2, 0).unwrap();
        assert_eq!(a.configurations, 1);
        assert!(a.passed());
        // for i = 0 a particle at site 0 also costs nothing
        let a = theorem2_audit(0, 3, 0).unwrap();
        assert_eq!(a.configurations, 2);
        assert!(a.passed());
    }

    #[test]
    fn residue_condition_reads_the_vacuum_as_minus_i() {
        // vacuum images are = -i mod N, so condition 3 only holds when 2i = 0 mod N
        let a = theorem2_audit(1, 3, 6).unwrap();
        assert!(a.counts_match() && a.injective);
        assert_eq!(a.violations[2], a.configurations);
        assert_eq!([a.violations[0], a.violations[1], a.violations[3]], [0, 0, 0]);
    }
}
