//! Catalog of identities as runnable coefficient comparisons.
//!
//! Every identity is data: a builder for both sides, the exponent sites a fault
//! may perturb, an optional auxiliary check (census, enumeration, term shapes),
//! and a default parameter grid.

mod catalog;
mod terms;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{LaurentPoly, QFactorialTable, ZWindow};

pub use catalog::{lookup, IdentityDef, CATALOG};
use catalog::Side;
use terms::Ctx;

pub type Params = BTreeMap<String, i64>;

pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FirstMismatch {
    pub z_exp: i64,
    pub q_exp: i64,
    pub lhs_coeff: String,
    pub rhs_coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: Params,
    pub order: u32,
    pub z_window: Option<[i64; 2]>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub first_mismatch: Option<FirstMismatch>,
    pub elapsed_millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Perturbs one exponent site of one identity instance by +1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub identity: String,
    pub params: Params,
    pub site: String,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Identity ids to run; `"all"` expands to the whole catalog.
    pub identities: Vec<String>,
    pub order: u32,
    /// z-window for bivariate comparisons.
    pub window: ZWindow,
    pub l_max: i64,
    pub s_max: i64,
    pub nm_max: i64,
    pub fib_n_max: i64,
    pub fib_l_max: i64,
    /// Partition census bound for the Durfee checks.
    pub census_max: u32,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            identities: Vec::new(),
            order: 30,
            window: ZWindow::symmetric(8),
            l_max: 3,
            s_max: 3,
            nm_max: 3,
            fib_n_max: 18,
            fib_l_max: 4,
            census_max: 28,
            fault: None,
        }
    }
}

impl SuiteConfig {
    /// The whole catalog at the default grid.
    pub fn all() -> Self {
        SuiteConfig { identities: vec!["all".into()], ..Default::default() }
    }
}

/// The Durfee instance `(n, m)` at level `l + 1` matching the `z^s` slice of type `(theta, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceEntry {
    pub theta: i64,
    pub l: i64,
    pub s: i64,
    pub n: i64,
    pub m: i64,
    pub level: i64,
}

pub fn correspondence(theta: i64, l: i64, s: i64) -> Result<CorrespondenceEntry> {
    crate::fibinfinite::check_type(theta, l)?;
    let (n, m) = if s <= 0 { (0, l - s - l * s - theta) } else { (s, l - theta) };
    Ok(CorrespondenceEntry { theta, l, s, n, m, level: l + 1 })
}

/// First differing term of two Laurent polynomials, scanning by `q` then `z`.
pub(crate) fn poly_mismatch(a: &LaurentPoly, b: &LaurentPoly) -> Option<(i64, i64, String, String)> {
    let keys: BTreeSet<(i64, i64)> = a.terms().chain(b.terms()).map(|(z, q, _)| (q, z)).collect();
    keys.into_iter().find_map(|(q, z)| {
        let (x, y) = (a.coeff(z, q), b.coeff(z, q));
        (x != y).then(|| (z, q, x.to_string(), y.to_string()))
    })
}

fn compare(lhs: Side, rhs: Side, window: ZWindow) -> Result<(Option<[i64; 2]>, Option<FirstMismatch>)> {
    let fm = |z: i64, q: i64, a: String, b: String| FirstMismatch { z_exp: z, q_exp: q, lhs_coeff: a, rhs_coeff: b };
    Ok(match (lhs, rhs) {
        (Side::Uni(a), Side::Uni(b)) => {
            (None, a.first_difference(&b).map(|(q, x, y)| fm(0, q as i64, x.to_string(), y.to_string())))
        }
        (Side::Bi(a), Side::Bi(b)) => {
            let (a, b) = (a.with_window(window)?, b.with_window(window)?);
            let mm = a.first_mismatch(&b)?;
            (Some([window.min, window.max]), mm.map(|m| fm(m.z_exp, m.q_exp as i64, m.lhs.to_string(), m.rhs.to_string())))
        }
        (Side::Poly(a), Side::Poly(b)) => (None, poly_mismatch(&a, &b).map(|(z, q, x, y)| fm(z, q, x, y))),
        _ => unreachable!("both sides of an identity have the same shape"),
    })
}

fn check_params(def: &IdentityDef, p: &Params) -> Result<()> {
    let want: BTreeSet<&str> = def.params.iter().copied().collect();
    let got: BTreeSet<&str> = p.keys().map(String::as_str).collect();
    if want != got {
        return Err(Error::InvalidParameter(format!(
            "{} takes parameters {:?}, got {:?}",
            def.id, def.params, got
        )));
    }
    Ok(())
}

/// Runs one identity at one parameter point.
pub fn run_one(id: &str, params: &Params, config: &SuiteConfig) -> Result<IdentityReport> {
    let def = lookup(id).ok_or_else(|| Error::InvalidParameter(format!("unknown identity {id:?}")))?;
    check_params(def, params)?;
    let fault = match &config.fault {
        Some(f) if f.identity == id && &f.params == params => {
            if !def.sites.contains(&f.site.as_str()) {
                return Err(Error::InvalidParameter(format!("{id} has no exponent site {:?}", f.site)));
            }
            Some(f.site.as_str())
        }
        _ => None,
    };
    let start = Instant::now();
    let table = QFactorialTable::new(config.order);
    let ctx = Ctx { order: config.order, window: config.window, census_max: config.census_max, table: &table, fault };
    let (lhs, rhs) = (def.build)(params, &ctx)?;
    let (z_window, mut first_mismatch) = compare(lhs, rhs, config.window)?;
    let mut detail = None;
    if first_mismatch.is_none() {
        if let Some(extra) = def.extra {
            if let Some(x) = extra(params, &ctx)? {
                first_mismatch = Some(FirstMismatch { z_exp: x.z_exp, q_exp: x.q_exp, lhs_coeff: x.lhs, rhs_coeff: x.rhs });
                detail = Some(x.detail);
            }
        }
    }
    Ok(IdentityReport {
        identity_id: id.to_string(),
        params: params.clone(),
        order: config.order,
        z_window,
        matched: first_mismatch.is_none(),
        first_mismatch,
        elapsed_millis: start.elapsed().as_millis() as u64,
        detail,
    })
}

/// The `(identity, params)` jobs a config expands to, in catalog order.
pub fn plan(config: &SuiteConfig) -> Result<Vec<(&'static IdentityDef, Params)>> {
    let mut ids: BTreeSet<&str> = BTreeSet::new();
    for id in &config.identities {
        if id == "all" {
            ids.extend(CATALOG.iter().map(|d| d.id));
        } else if lookup(id).is_some() {
            ids.insert(id);
        } else {
            return Err(Error::InvalidParameter(format!("unknown identity {id:?}")));
        }
    }
    Ok(CATALOG
        .iter()
        .filter(|d| ids.contains(d.id))
        .flat_map(|d| (d.grid)(config).into_iter().map(move |p| (d, p)))
        .collect())
}

/// Runs every planned check, concurrently, returning reports in catalog order.
/// A check that errors yields a failed report carrying the error text.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    let jobs = plan(config)?;
    Ok(jobs
        .par_iter()
        .map(|(def, p)| {
            run_one(def.id, p, config).unwrap_or_else(|e| IdentityReport {
                identity_id: def.id.to_string(),
                params: p.clone(),
                order: config.order,
                z_window: None,
                matched: false,
                first_mismatch: None,
                elapsed_millis: 0,
                detail: Some(format!("error: {e}")),
            })
        })
        .collect())
}

fn single(id: &str, p: Params, order: u32, window: ZWindow) -> Result<IdentityReport> {
    run_one(id, &p, &SuiteConfig { order, window, ..Default::default() })
}

pub fn check_jacobi(order: u32, window: ZWindow) -> Result<IdentityReport> {
    single("jacobi", Params::new(), order, window)
}

/// `theta = 1` is the `(1,1)` variant, `theta = 0` the `(0,1)` one.
pub fn check_l1_explicit(theta: i64, order: u32, window: ZWindow) -> Result<IdentityReport> {
    single("l1-explicit", params(&[("theta", theta)]), order, window)
}

pub fn check_zslice_family(theta: i64, l: i64, s: i64, order: u32) -> Result<IdentityReport> {
    single("zslice", params(&[("theta", theta), ("l", l), ("s", s)]), order, ZWindow::point(s))
}

pub fn check_correspondence(theta: i64, l: i64, s: i64, order: u32) -> Result<IdentityReport> {
    single("correspondence", params(&[("theta", theta), ("l", l), ("s", s)]), order, ZWindow::point(s))
}

pub fn check_final_theta_zero(l: i64, order: u32, window: ZWindow) -> Result<IdentityReport> {
    single("final-theta-zero", params(&[("l", l)]), order, window)
}

#[cfg(test)]
mod tests;
