//! Integer partitions and their classification by shifted Durfee rectangles.
//!
//! For fixed `l, n, m` a partition either misses the `n x m` rectangle or has a
//! largest `k` with the `(k+n) x ((l+1)k+m)` rectangle inside it. The latter
//! splits further by how far row `k+n+1` reaches past column `(l+1)k+m`.
//! Rectangles are `rows x cols`, and `λ` contains `a x b` iff `λ_a >= b`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qseries::{PowerSeries, QFactorialTable};

/// Largest `N` accepted by [`enumerate_partitions`].
pub const PARTITION_CAP: u32 = 50;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Parses `"4,3,1"`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|e| Error::InvalidPartition(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `λ_row` (1-based), zero past the last part.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// At least `rows` parts, each at least `cols`.
    pub fn contains_rect(&self, rows: i64, cols: i64) -> bool {
        if rows <= 0 || cols <= 0 {
            return true;
        }
        (self.part(rows as usize) as i64) >= cols
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, largest first part first (reverse lexicographic).
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n > PARTITION_CAP {
        return Err(Error::CapExceeded { what: "partition size", value: n as i64, cap: PARTITION_CAP as i64 });
    }
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Kind of a classified partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DurfeeKind {
    /// Misses the `n x m` rectangle (only possible for `n, m >= 1`).
    NoRect,
    /// Durfee rectangle `(k+n) x ((l+1)k+m)`, class index `i` in `0..=l`.
    Rect { k: i64, i: i64 },
}

impl fmt::Display for DurfeeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DurfeeKind::NoRect => f.write_str("NoRect"),
            DurfeeKind::Rect { k, i } => write!(f, "Rect k={k} i={i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DurfeeClass {
    pub l: i64,
    pub n: i64,
    pub m: i64,
    pub kind: DurfeeKind,
}

impl DurfeeClass {
    /// `(rows, cols)` of the Durfee rectangle.
    pub fn durfee_rect(&self) -> Option<(i64, i64)> {
        match self.kind {
            DurfeeKind::NoRect => None,
            DurfeeKind::Rect { k, .. } => Some((k + self.n, (self.l + 1) * k + self.m)),
        }
    }

    /// The `l` enveloping rectangles `(k+n+1) x ((l+1)k+m+i)`, `1 <= i <= l`.
    pub fn enveloping_rects(&self) -> Vec<(i64, i64)> {
        match self.kind {
            DurfeeKind::NoRect => Vec::new(),
            DurfeeKind::Rect { k, .. } => {
                (1..=self.l).map(|i| (k + self.n + 1, (self.l + 1) * k + self.m + i)).collect()
            }
        }
    }

    /// The next Durfee rectangle `(k+n+1) x ((l+1)(k+1)+m)`.
    pub fn next_rect(&self) -> Option<(i64, i64)> {
        match self.kind {
            DurfeeKind::NoRect => None,
            DurfeeKind::Rect { k, .. } => Some((k + 1 + self.n, (self.l + 1) * (k + 1) + self.m)),
        }
    }
}

fn check_shape(l: i64, n: i64, m: i64) -> Result<()> {
    if l < 0 || n < 0 || m < 0 {
        return Err(Error::InvalidParameter(format!("l, n, m must be nonnegative, got {l}, {n}, {m}")));
    }
    Ok(())
}

pub fn durfee_classify(p: &Partition, l: i64, n: i64, m: i64) -> Result<DurfeeClass> {
    check_shape(l, n, m)?;
    let kind = if n >= 1 && m >= 1 && !p.contains_rect(n, m) {
        DurfeeKind::NoRect
    } else {
        let mut k = 0;
        while p.contains_rect(k + 1 + n, (l + 1) * (k + 1) + m) {
            k += 1;
        }
        let base = (l + 1) * k + m;
        let reach = p.part((k + n + 1) as usize) as i64;
        let i = if reach <= base { 0 } else { reach - base };
        debug_assert!(i <= l);
        DurfeeKind::Rect { k, i }
    };
    Ok(DurfeeClass { l, n, m, kind })
}

/// Generating function of `Rect(k, i)`:
/// `q^((k+n)c) / ((q)_(k+n) (q)_c)` with `c = (l+1)k+m` for `i = 0`, and
/// `q^((k+n+1)c) / ((q)_(k+n) (q)_c)` with `c = (l+1)k+m+i` for `i >= 1`.
pub fn class_genfun(l: i64, n: i64, m: i64, k: i64, i: i64, table: &QFactorialTable) -> Result<PowerSeries> {
    check_shape(l, n, m)?;
    if k < 0 || i < 0 || i > l {
        return Err(Error::InvalidParameter(format!("class (k, i) = ({k}, {i}) out of range for l = {l}")));
    }
    let c = (l + 1) * k + m + i;
    let rows = if i == 0 { k + n } else { k + n + 1 };
    table.term(rows * c, k + n, c)
}

/// `sum_{j<m} q^(nj) / ((q)_(n-1) (q)_j)` for `n, m >= 1`, else zero.
pub fn norect_genfun(l: i64, n: i64, m: i64, table: &QFactorialTable) -> Result<PowerSeries> {
    check_shape(l, n, m)?;
    let mut s = PowerSeries::zero(table.order());
    if n >= 1 && m >= 1 {
        for j in 0..m {
            s = &s + &table.term(n * j, n - 1, j)?;
        }
    }
    Ok(s)
}

/// Every class whose generating function can reach `q^order`, in order
/// `NoRect, Rect(0,0), Rect(0,1), .., Rect(1,0), ..`.
pub fn live_classes(l: i64, n: i64, m: i64, order: u32) -> Vec<DurfeeKind> {
    let mut out = Vec::new();
    if n >= 1 && m >= 1 {
        out.push(DurfeeKind::NoRect);
    }
    let mut k = 0;
    while (k + n) * ((l + 1) * k + m) <= order as i64 {
        out.push(DurfeeKind::Rect { k, i: 0 });
        for i in 1..=l {
            if (k + n + 1) * ((l + 1) * k + m + i) <= order as i64 {
                out.push(DurfeeKind::Rect { k, i });
            }
        }
        k += 1;
    }
    out
}

pub fn kind_genfun(l: i64, n: i64, m: i64, kind: DurfeeKind, table: &QFactorialTable) -> Result<PowerSeries> {
    match kind {
        DurfeeKind::NoRect => norect_genfun(l, n, m, table),
        DurfeeKind::Rect { k, i } => class_genfun(l, n, m, k, i, table),
    }
}

/// A census entry that disagrees with its generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusMismatch {
    pub size: u32,
    pub kind: DurfeeKind,
    pub counted: u64,
    pub expected: String,
}

impl fmt::Display for CensusMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "class {} at N = {}: {} partitions counted, generating function gives {}",
            self.kind, self.size, self.counted, self.expected
        )
    }
}

/// Classifies every partition of each `N <= max_size` and compares class
/// counts against the generating function coefficients, and their total
/// against `p(N)`.
pub fn census_check(l: i64, n: i64, m: i64, max_size: u32) -> Result<Option<CensusMismatch>> {
    let table = QFactorialTable::new(max_size);
    let mut genfuns: BTreeMap<DurfeeKind, PowerSeries> = BTreeMap::new();
    for kind in live_classes(l, n, m, max_size) {
        genfuns.insert(kind, kind_genfun(l, n, m, kind, &table)?);
    }
    for size in 0..=max_size {
        let all = enumerate_partitions(size)?;
        let mut counts: BTreeMap<DurfeeKind, u64> = BTreeMap::new();
        for p in &all {
            *counts.entry(durfee_classify(p, l, n, m)?.kind).or_default() += 1;
        }
        let mut keys: Vec<DurfeeKind> = counts.keys().chain(genfuns.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        for kind in keys {
            let counted = counts.get(&kind).copied().unwrap_or(0);
            let expected = match genfuns.get(&kind) {
                Some(g) => g.coeff(size)?.clone(),
                None => 0.into(),
            };
            if expected != counted.into() {
                return Ok(Some(CensusMismatch { size, kind, counted, expected: expected.to_string() }));
            }
        }
        let total: u64 = counts.values().sum();
        let p_n = table.inv_infinite().coeff(size)?;
        if *p_n != total.into() {
            return Err(Error::InvalidParameter(format!("census at N = {size} does not sum to p(N)")));
        }
    }
    Ok(None)
}

/// `norect + sum_k class(k,0) + sum_i sum_k class(k,i)` up to `q^order`.
pub fn durfee_rhs(l: i64, n: i64, m: i64, table: &QFactorialTable) -> Result<PowerSeries> {
    let mut s = PowerSeries::zero(table.order());
    for kind in live_classes(l, n, m, table.order()) {
        s = &s + &kind_genfun(l, n, m, kind, table)?;
    }
    Ok(s)
}

/// Checks the `(l, n, m)` Durfee identity against `1/(q)_inf` and the census.
pub fn durfee_identity_check(l: i64, n: i64, m: i64, order: u32) -> Result<crate::identities::IdentityReport> {
    let params = crate::identities::params(&[("l", l), ("n", n), ("m", m)]);
    let config = crate::identities::SuiteConfig { order, ..Default::default() };
    crate::identities::run_one("durfee", &params, &config)
}

/// Checks that the `(n1, m1)` and `(n1+1, m1+l+1)` instances coincide.
pub fn line_equivalence_check(l: i64, n1: i64, m1: i64, order: u32) -> Result<crate::identities::IdentityReport> {
    let params = crate::identities::params(&[("l", l), ("n", n1), ("m", m1)]);
    let config = crate::identities::SuiteConfig { order, ..Default::default() };
    crate::identities::run_one("line-equivalence", &params, &config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::default()]);
        assert_eq!(enumerate_partitions(5).unwrap().len(), 7);
        let four: Vec<String> = enumerate_partitions(4).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert!(enumerate_partitions(PARTITION_CAP + 1).is_err());
    }

    #[test]
    fn containment() {
        let p = Partition::parse("3,1").unwrap();
        assert!(p.contains_rect(1, 3));
        assert!(!p.contains_rect(2, 2));
        assert!(p.contains_rect(0, 9));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("").unwrap().is_empty());
    }

    #[test]
    fn classification_examples() {
        let p = Partition::parse("4,3,1").unwrap();
        assert_eq!(durfee_classify(&p, 1, 0, 0).unwrap().kind, DurfeeKind::Rect { k: 1, i: 1 });
        let e = Partition::default();
        assert_eq!(durfee_classify(&e, 3, 0, 0).unwrap().kind, DurfeeKind::Rect { k: 0, i: 0 });
        let one = Partition::parse("1").unwrap();
        assert_eq!(durfee_classify(&one, 2, 1, 2).unwrap().kind, DurfeeKind::NoRect);
    }

    #[test]
    fn genfun_edges() {
        let t = QFactorialTable::new(10);
        assert_eq!(class_genfun(1, 0, 0, 0, 0, &t).unwrap(), PowerSeries::one(10));
        assert!(norect_genfun(2, 0, 3, &t).unwrap().is_zero());
        assert!(norect_genfun(2, 3, 0, &t).unwrap().is_zero());
    }

    #[test]
    fn small_census() {
        assert_eq!(census_check(1, 0, 0, 12).unwrap(), None);
        assert_eq!(census_check(2, 1, 2, 12).unwrap(), None);
    }
}
