//! The identity catalog: each entry builds both sides of one identity.

use crate::error::{Error, Result};
use crate::fibfinite;
use crate::fibinfinite::{self, natural_window, Slot};
use crate::partitions;
use crate::qseries::{qbinom_coeffs, LaurentPoly, PowerSeries, QFactorialTable, QSeries, ZWindow};

use super::terms::{normalized_slice, Ctx, Terms};
use super::{correspondence, Params, SuiteConfig};

/// One side of an identity.
pub enum Side {
    Uni(PowerSeries),
    Bi(QSeries),
    Poly(LaurentPoly),
}

/// A failed auxiliary check, reported like a coefficient mismatch.
pub struct ExtraFailure {
    pub z_exp: i64,
    pub q_exp: i64,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

type Build = fn(&Params, &Ctx) -> Result<(Side, Side)>;
type Extra = fn(&Params, &Ctx) -> Result<Option<ExtraFailure>>;
type Grid = fn(&SuiteConfig) -> Vec<Params>;

pub struct IdentityDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
    /// Exponent sites that fault injection may perturb.
    pub sites: &'static [&'static str],
    /// A parameter point at which every site contributes.
    pub probe: &'static [(&'static str, i64)],
    pub(crate) build: Build,
    pub(crate) extra: Option<Extra>,
    pub(crate) grid: Grid,
}

fn get(p: &Params, name: &str) -> Result<i64> {
    p.get(name).copied().ok_or_else(|| Error::InvalidParameter(format!("missing parameter {name}")))
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn pts(names: &[&str], ranges: &[std::ops::RangeInclusive<i64>], keep: impl Fn(&[i64]) -> bool) -> Vec<Params> {
    let mut out = vec![Vec::new()];
    for r in ranges {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| r.clone().map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out.into_iter()
        .filter(|v| keep(v))
        .map(|v| names.iter().map(|n| n.to_string()).zip(v).collect())
        .collect()
}

// ---- shared pieces -------------------------------------------------------

fn inv_inf(ctx: &Ctx) -> PowerSeries {
    ctx.table.inv_infinite().clone()
}

/// `sum_m z^m q^(theta m + (l+1) m (m-1)/2) / (q)_inf`.
fn bilateral(ctx: &Ctx, theta: i64, l: i64, site: &str) -> Result<QSeries> {
    fibinfinite::check_type(theta, l)?;
    let mut t = Terms::new();
    for m in natural_window(theta, l, ctx.order).iter() {
        t.push1(1, m, ctx.e(site, theta * m + (l + 1) * m * (m - 1) / 2), ctx.order as i64);
    }
    t.series(ctx.table)
}

/// `P^l_inf(z q^shift)` with sites `{pre}exp`, `{pre}poch`.
fn p_inf(ctx: &Ctx, l: i64, shift: i64, pre: &str) -> Result<QSeries> {
    let mut t = Terms::new();
    for n in 0..=ctx.kcap(0) {
        t.push1(1, n, ctx.e(&format!("{pre}exp"), shift * n + (l + 1) * n * (n - 1) / 2), ctx.e(&format!("{pre}poch"), n));
    }
    t.series(ctx.table)
}

/// Left part for depth `k` with sites `{pre}exp`, `{pre}poch`.
fn left(ctx: &Ctx, theta: i64, l: i64, k: i64, pre: &str) -> Result<QSeries> {
    let mut t = Terms::new();
    for m in fibinfinite::alpha(theta, l, k)..=ctx.kcap(0) {
        let e = ctx.e(&format!("{pre}exp"), -theta * m + (l + 1) * m * (m + 1) / 2);
        t.push1(1, -m, e, ctx.e(&format!("{pre}poch"), (m + 1) * (l + 1) - theta - k));
    }
    t.series(ctx.table)
}

/// `sum_slots L R` with right shifts and prefactors as in the splitting.
fn split_sum(ctx: &Ctx, theta: i64, l: i64) -> Result<QSeries> {
    let mut total: Option<QSeries> = None;
    for slot in Slot::all(l) {
        let lft = left(ctx, theta, l, slot.left_depth(l), "left.")?;
        let term = match slot {
            Slot::Empty => lft.mul(&p_inf(ctx, l, l, "right.")?)?,
            Slot::Occupied(i) => {
                let e = ctx.e("slot.exp", i);
                lft.mul(&p_inf(ctx, l, i + l + 1, "right.")?)?.mul_monomial(1, e as u32)
            }
        };
        total = Some(match total {
            None => term,
            Some(s) => s.add(&term)?,
        });
    }
    Ok(total.expect("empty slot"))
}

fn norm(theta: i64, l: i64, s: i64) -> i64 {
    theta * s + (l + 1) * s * (s - 1) / 2
}

/// Terms of the `z^s` slice of the splitting, divided by its leading monomial.
pub(crate) fn zslice_terms(ctx: &Ctx, theta: i64, l: i64, s: i64, pre: &str) -> Terms {
    let nm = norm(theta, l, s);
    let site = |x: &str| format!("{pre}{x}");
    let mut t = Terms::new();
    let cap = ctx.kcap(s);
    for m in 0..=cap {
        let n = s + m;
        if n < 0 {
            continue;
        }
        let e = -theta * m + (l + 1) * m * (m + 1) / 2 + l * n + (l + 1) * n * (n - 1) / 2 - nm;
        let a = (m + 1) * (l + 1) - theta - 1;
        t.push(1, 0, ctx.e(&site("empty.exp"), e), ctx.e(&site("empty.left"), a), ctx.e(&site("empty.right"), n));
    }
    for j in 0..l {
        for m in (theta > j) as i64..=cap {
            let n = s - 1 + m;
            if n < 0 {
                continue;
            }
            let e = j - theta * m + (l + 1) * m * (m + 1) / 2 + (l + j + 1) * n + (l + 1) * n * (n - 1) / 2 - nm;
            let a = m * (l + 1) + j - theta;
            t.push(1, 0, ctx.e(&site("slot.exp"), e), ctx.e(&site("slot.left"), a), ctx.e(&site("slot.right"), n));
        }
    }
    t
}

/// Right side of the `(l, n, m)` Durfee identity, by classes.
pub(crate) fn durfee_terms(ctx: &Ctx, l: i64, n: i64, m: i64, pre: &str) -> Terms {
    let site = |x: &str| format!("{pre}{x}");
    let mut t = Terms::new();
    if n >= 1 && m >= 1 {
        for j in 0..m {
            t.push(1, 0, ctx.e(&site("norect.exp"), n * j), ctx.e(&site("norect.rows"), n - 1), ctx.e(&site("norect.cols"), j));
        }
    }
    for k in 0..=ctx.kcap(0) {
        let c = (l + 1) * k + m;
        t.push(1, 0, ctx.e(&site("base.exp"), (k + n) * c), ctx.e(&site("base.rows"), k + n), ctx.e(&site("base.cols"), c));
        for i in 1..=l {
            let c = c + i;
            t.push(1, 0, ctx.e(&site("env.exp"), (k + n + 1) * c), ctx.e(&site("env.rows"), k + n), ctx.e(&site("env.cols"), c));
        }
    }
    t
}

fn check_lnm(l: i64, n: i64, m: i64) -> Result<()> {
    need(l >= 0 && n >= 0 && m >= 0, || format!("l, n, m must be nonnegative, got {l}, {n}, {m}"))
}

fn slice_mismatch(a: &PowerSeries, b: &PowerSeries, z: i64, detail: &str) -> Option<ExtraFailure> {
    a.first_difference(b).map(|(q, x, y)| ExtraFailure {
        z_exp: z,
        q_exp: q as i64,
        lhs: x.to_string(),
        rhs: y.to_string(),
        detail: detail.to_string(),
    })
}

/// Compares `printed` with the normalized `z^z` slice of the explicit `l = 1` product form.
fn against_explicit(ctx: &Ctx, theta: i64, z: i64, printed: &PowerSeries) -> Result<Option<ExtraFailure>> {
    let nm = norm(theta, 1, z);
    let order = ctx.order + nm as u32;
    let table = QFactorialTable::new(order);
    let big = Ctx { order, table: &table, ..ctx.unperturbed() };
    let full = l1_explicit_rhs(&big, theta)?;
    let slice = normalized_slice(&full, z, nm, ctx.order)?;
    Ok(slice_mismatch(&slice, printed, z, "printed form differs from the slice of the product form"))
}

// ---- builders ------------------------------------------------------------

fn jacobi(_: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let lhs = bilateral(ctx, 0, 0, "lhs.exp")?;
    let d = ctx.order;
    let mut rhs = QSeries::from_terms(d, ZWindow::point(0), [(0, 0, 1.into())])?;
    let mut factor = |z: i64, e: i64| -> Result<()> {
        if e <= d as i64 {
            let f = QSeries::from_terms(d, ZWindow::new(z.min(0), z.max(0))?, [(0, 0, 1.into()), (z, e, 1.into())])?;
            rhs = rhs.mul(&f)?;
        }
        Ok(())
    };
    for j in 0..=d as i64 {
        factor(1, ctx.e("rhs.right", j))?;
    }
    for j in 1..=d as i64 {
        factor(-1, ctx.e("rhs.left", j))?;
    }
    Ok((Side::Bi(lhs), Side::Bi(rhs)))
}

fn durfee_l0(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let s = get(p, "s")?;
    let mut t = Terms::new();
    for k in 0..=ctx.kcap(s) {
        let m = k + s;
        t.push(1, 0, ctx.e("exp", k * m), ctx.e("poch.k", k), ctx.e("poch.m", m));
    }
    Ok((Side::Uni(inv_inf(ctx)), Side::Uni(t.power(ctx.table)?)))
}

fn l1_explicit_rhs(ctx: &Ctx, theta: i64) -> Result<QSeries> {
    need(theta == 0 || theta == 1, || format!("theta must be 0 or 1 for l = 1, got {theta}"))?;
    let mut r0 = Terms::new();
    let mut l0 = Terms::new();
    let mut r1 = Terms::new();
    let mut l1 = Terms::new();
    let e = |s: &str, v: i64| ctx.e(s, v);
    for n in 0..=ctx.kcap(0) {
        if theta == 1 {
            r0.push1(1, n, e("r0.exp", n * n), e("r0.poch", n));
            l0.push1(1, -n, e("l0.exp", n * n), e("l0.poch", 2 * n));
            r1.push1(1, n, e("r1.exp", n * (n + 1)), e("r1.poch", n));
            l1.push1(1, -n, e("l1.exp", (n + 1) * (n + 1)), e("l1.poch", 2 * n + 1));
        } else {
            r0.push1(1, n + 1, e("r0.exp", n * (n + 1)), e("r0.poch", n));
            l0.push1(1, -n, e("l0.exp", n * (n + 1)), e("l0.poch", 2 * n));
            r1.push1(1, n, e("r1.exp", n * n), e("r1.poch", n));
            l1.push1(1, -n, e("l1.exp", n * (n + 1)), e("l1.poch", 2 * n + 1));
        }
    }
    let t = ctx.table;
    r0.series(t)?.mul(&l0.series(t)?)?.add(&r1.series(t)?.mul(&l1.series(t)?)?)
}

fn l1_explicit(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let theta = get(p, "theta")?;
    let rhs = l1_explicit_rhs(ctx, theta)?;
    Ok((Side::Bi(bilateral(ctx, theta, 1, "lhs.exp")?), Side::Bi(rhs)))
}

fn nonneg_s(p: &Params, min: i64) -> Result<i64> {
    let s = get(p, "s")?;
    need(s >= min, || format!("s must be at least {min}, got {s}"))?;
    Ok(s)
}

/// Two families `q^ea / ((q)_a1 (q)_a2) + q^eb / ((q)_b1 (q)_b2)` summed over `k >= 0`.
fn two_family(ctx: &Ctx, s: i64, f: impl Fn(i64) -> [(i64, i64, i64); 2]) -> Terms {
    let mut t = Terms::new();
    for k in 0..=ctx.kcap(s) {
        let [a, b] = f(k);
        t.push(1, 0, ctx.e("a.exp", a.0), ctx.e("a.rows", a.1), ctx.e("a.cols", a.2));
        t.push(1, 0, ctx.e("b.exp", b.0), ctx.e("b.rows", b.1), ctx.e("b.cols", b.2));
    }
    t
}

/// `q^e (1 + q^plus - q^minus) / ((q)_rows (q)_cols)` summed over `k >= 0`.
fn combined(ctx: &Ctx, s: i64, f: impl Fn(i64) -> (i64, i64, i64, i64, i64)) -> Terms {
    let mut t = Terms::new();
    for k in 0..=ctx.kcap(s) {
        let (e, plus, minus, rows, cols) = f(k);
        let (e, rows, cols) = (ctx.e("exp", e), ctx.e("rows", rows), ctx.e("cols", cols));
        t.push(1, 0, e, rows, cols);
        t.push(1, 0, e + ctx.e("num.plus", plus), rows, cols);
        t.push(-1, 0, e + ctx.e("num.minus", minus), rows, cols);
    }
    t
}

fn pos11(ctx: &Ctx, s: i64) -> Terms {
    two_family(ctx, s, |k| [(2 * k * (k + s), k + s, 2 * k), ((2 * k + 1) * (k + s + 1), k + s, 2 * k + 1)])
}

fn pos11_combined(ctx: &Ctx, s: i64) -> Terms {
    combined(ctx, s, |k| (2 * k * (k + s), 3 * k + s + 1, 2 * k + 1, k + s, 2 * k + 1))
}

fn neg11(ctx: &Ctx, s: i64) -> Terms {
    two_family(ctx, s, |n| [(2 * n * (n + s), n, 2 * (n + s)), ((2 * (n + s) + 1) * (n + 1), n, 2 * (n + s) + 1)])
}

fn neg11_combined(ctx: &Ctx, s: i64) -> Terms {
    combined(ctx, s, |n| (2 * n * (n + s), 2 * (n + s) + n + 1, 2 * (n + s) + 1, n, 2 * (n + s) + 1))
}

fn pos01(ctx: &Ctx, s: i64) -> Terms {
    let mut t = two_family(ctx, s, |k| {
        [((2 * k + 1) * (k + s), k + s, 2 * k + 1), ((2 * k + 2) * (k + s + 1), k + s, 2 * k + 2)]
    });
    t.push1(1, 0, 0, ctx.e("lead.poch", s - 1));
    t
}

fn pos01_combined(ctx: &Ctx, s: i64) -> Terms {
    let mut t = combined(ctx, s, |k| ((2 * k + 1) * (k + s), 3 * k + s + 2, 2 * k + 2, k + s, 2 * k + 2));
    t.push1(1, 0, 0, ctx.e("lead.poch", s - 1));
    t
}

fn neg01(ctx: &Ctx, s: i64) -> Terms {
    two_family(ctx, s, |n| {
        [(2 * (n + 1) * (n + s + 1), n, 2 * (n + s + 1)), ((2 * (n + s) + 1) * n, n, 2 * (n + s) + 1)]
    })
}

fn neg01_combined(ctx: &Ctx, s: i64) -> Terms {
    combined(ctx, s, |n| (2 * n * (n + s) + n, 2 * (n + s + 1) + n, 2 * (n + s + 1), n, 2 * (n + s + 1)))
}

/// `(theta, sign of s, minimum s, printed sum)` for the `l = 1` slice identities.
type SliceSum = fn(&Ctx, i64) -> Terms;

fn l1_slice(id: &str) -> (i64, i64, i64, SliceSum) {
    match id {
        "11pos" => (1, 1, 0, pos11),
        "11pos-combined" => (1, 1, 0, pos11_combined),
        "11neg" => (1, -1, 0, neg11),
        "11neg-combined" => (1, -1, 0, neg11_combined),
        "01pos" => (0, 1, 1, pos01),
        "01pos-combined" => (0, 1, 1, pos01_combined),
        "01neg" => (0, -1, 0, neg01),
        "01neg-combined" => (0, -1, 0, neg01_combined),
        _ => unreachable!("not an l = 1 slice identity: {id}"),
    }
}

macro_rules! l1_slice_def {
    ($build:ident, $extra:ident, $id:literal) => {
        fn $build(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
            let (_, _, min, f) = l1_slice($id);
            let s = nonneg_s(p, min)?;
            Ok((Side::Uni(inv_inf(ctx)), Side::Uni(f(ctx, s).power(ctx.table)?)))
        }
        fn $extra(p: &Params, ctx: &Ctx) -> Result<Option<ExtraFailure>> {
            let (theta, sign, min, f) = l1_slice($id);
            let s = nonneg_s(p, min)?;
            let printed = f(&ctx.unperturbed(), s).power(ctx.table)?;
            against_explicit(ctx, theta, sign * s, &printed)
        }
    };
}

l1_slice_def!(b_11pos, x_11pos, "11pos");
l1_slice_def!(b_11pos_c, x_11pos_c, "11pos-combined");
l1_slice_def!(b_11neg, x_11neg, "11neg");
l1_slice_def!(b_11neg_c, x_11neg_c, "11neg-combined");
l1_slice_def!(b_01pos, x_01pos, "01pos");
l1_slice_def!(b_01pos_c, x_01pos_c, "01pos-combined");
l1_slice_def!(b_01neg, x_01neg, "01neg");
l1_slice_def!(b_01neg_c, x_01neg_c, "01neg-combined");

fn andrews(_: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let t = two_family(ctx, 0, |k| [(2 * k * k, k, 2 * k), ((k + 1) * (2 * k + 1), k, 2 * k + 1)]);
    Ok((Side::Uni(inv_inf(ctx)), Side::Uni(t.power(ctx.table)?)))
}

fn andrews_combined(_: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let t = combined(ctx, 0, |k| (2 * k * k, 3 * k + 1, 2 * k + 1, k, 2 * k + 1));
    Ok((Side::Uni(inv_inf(ctx)), Side::Uni(t.power(ctx.table)?)))
}

fn andrews_gen(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (l, s) = (get(p, "l")?, get(p, "s")?);
    need(l >= 0, || format!("l must be nonnegative, got {l}"))?;
    let mut t = Terms::new();
    for k in 0..=ctx.kcap(s) {
        if k + s < 0 {
            continue;
        }
        let c = (l + 1) * k + l;
        t.push(1, 0, ctx.e("top.exp", (k + s) * c), ctx.e("top.rows", k + s), ctx.e("top.cols", c));
        for i in 0..l {
            let c = (l + 1) * k + i;
            if k + s > 0 {
                t.push(1, 0, ctx.e("mid.exp", (k + s) * c), ctx.e("mid.rows", k + s - 1), ctx.e("mid.cols", c));
            }
        }
    }
    Ok((Side::Uni(inv_inf(ctx)), Side::Uni(t.power(ctx.table)?)))
}

fn check_tls(p: &Params) -> Result<(i64, i64, i64)> {
    let (theta, l, s) = (get(p, "theta")?, get(p, "l")?, get(p, "s")?);
    fibinfinite::check_type(theta, l)?;
    Ok((theta, l, s))
}

fn zslice(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (theta, l, s) = check_tls(p)?;
    let rhs = zslice_terms(ctx, theta, l, s, "").power(ctx.table)?;
    Ok((Side::Uni(inv_inf(ctx)), Side::Uni(rhs)))
}

/// The slice formula against the normalized `z^s` slice of the full splitting.
fn zslice_extra(p: &Params, ctx: &Ctx) -> Result<Option<ExtraFailure>> {
    let (theta, l, s) = check_tls(p)?;
    let nm = norm(theta, l, s);
    let order = ctx.order + nm as u32;
    let table = QFactorialTable::new(order);
    let full = fibinfinite::split_rhs(theta, l, order, &table)?;
    let slice = normalized_slice(&full, s, nm, ctx.order)?;
    let formula = zslice_terms(&ctx.unperturbed(), theta, l, s, "").power(ctx.table)?;
    Ok(slice_mismatch(&slice, &formula, s, "slice formula differs from the slice of the splitting"))
}

fn durfee(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (l, n, m) = (get(p, "l")?, get(p, "n")?, get(p, "m")?);
    check_lnm(l, n, m)?;
    Ok((Side::Uni(inv_inf(ctx)), Side::Uni(durfee_terms(ctx, l, n, m, "").power(ctx.table)?)))
}

fn durfee_extra(p: &Params, ctx: &Ctx) -> Result<Option<ExtraFailure>> {
    let (l, n, m) = (get(p, "l")?, get(p, "n")?, get(p, "m")?);
    let cap = ctx.order.min(ctx.census_max);
    Ok(partitions::census_check(l, n, m, cap)?.map(|c| ExtraFailure {
        z_exp: 0,
        q_exp: c.size as i64,
        lhs: c.counted.to_string(),
        rhs: c.expected.clone(),
        detail: format!("census: {c}"),
    }))
}

fn split(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (theta, l) = (get(p, "theta")?, get(p, "l")?);
    fibinfinite::check_type(theta, l)?;
    Ok((Side::Bi(bilateral(ctx, theta, l, "lhs.exp")?), Side::Bi(split_sum(ctx, theta, l)?)))
}

/// Enumeration against the bilateral sum, at the default depth and one period deeper.
fn split_extra(p: &Params, ctx: &Ctx) -> Result<Option<ExtraFailure>> {
    let (theta, l) = (get(p, "theta")?, get(p, "l")?);
    let d = ctx.order;
    let w = natural_window(theta, l, d);
    let closed = fibinfinite::bilateral(theta, l, d, ctx.table)?;
    let depth = fibinfinite::default_depth(theta, l, d);
    let shallow = fibinfinite::char_brute_at_depth(theta, l, d, w, depth)?;
    let deep = fibinfinite::char_brute_at_depth(theta, l, d, w, depth + l + 1)?;
    for (other, what) in [(&shallow, "enumeration"), (&deep, "deeper enumeration")] {
        if let Some(mm) = closed.first_mismatch(other)? {
            return Ok(Some(ExtraFailure {
                z_exp: mm.z_exp,
                q_exp: mm.q_exp as i64,
                lhs: mm.lhs.to_string(),
                rhs: mm.rhs.to_string(),
                detail: format!("{what} differs from the bilateral sum"),
            }));
        }
    }
    Ok(None)
}

fn final_theta_zero(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let l = get(p, "l")?;
    need(l >= 0, || format!("l must be nonnegative, got {l}"))?;
    let mut total: Option<QSeries> = None;
    for i in 0..=l {
        let delta = (i == 0) as i64;
        let right = p_inf(ctx, l, l + i, "right.")?;
        let mut lt = Terms::new();
        for k in 0..=ctx.kcap(0) {
            let e = ctx.e("left.exp", (l + 1) * k * (k + 1) / 2);
            lt.push1(1, -k, e, ctx.e("left.poch", (l + 1) * (k + delta) + i - 1));
        }
        let pre = ctx.e("prefactor.exp", i - 1 + delta);
        let term = lt.series(ctx.table)?.mul(&right)?.mul_monomial(1 - delta, pre as u32);
        total = Some(match total {
            None => term,
            Some(s) => s.add(&term)?,
        });
    }
    Ok((Side::Bi(bilateral(ctx, 0, l, "lhs.exp")?), Side::Bi(total.expect("i = 0"))))
}

fn correspondence_build(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (theta, l, s) = check_tls(p)?;
    let c = correspondence(theta, l, s)?;
    let lhs = zslice_terms(ctx, theta, l, s, "slice.").power(ctx.table)?;
    let rhs = durfee_terms(ctx, l, c.n, c.m, "durfee.").power(ctx.table)?;
    Ok((Side::Uni(lhs), Side::Uni(rhs)))
}

/// Term-for-term comparison of the slice formula with the mapped Durfee instance.
fn correspondence_extra(p: &Params, ctx: &Ctx) -> Result<Option<ExtraFailure>> {
    let (theta, l, s) = check_tls(p)?;
    let c = correspondence(theta, l, s)?;
    let plain = ctx.unperturbed();
    let a = zslice_terms(&plain, theta, l, s, "").shape(ctx.order);
    let b = durfee_terms(&plain, l, c.n, c.m, "").shape(ctx.order);
    if a == b {
        return Ok(None);
    }
    let at = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()));
    let show = |v: &[(i64, (i64, i64))]| {
        v.get(at).map_or("none".to_string(), |(e, (x, y))| format!("q^{e}/((q)_{x}(q)_{y})"))
    };
    Ok(Some(ExtraFailure {
        z_exp: s,
        q_exp: a.get(at).or(b.get(at)).map_or(0, |t| t.0),
        lhs: show(&a),
        rhs: show(&b),
        detail: format!("term {at} of the slice differs from the ({}, {}) Durfee instance", c.n, c.m),
    }))
}

fn line_equivalence(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (l, n, m) = (get(p, "l")?, get(p, "n")?, get(p, "m")?);
    check_lnm(l, n, m)?;
    let a = durfee_terms(ctx, l, n, m, "a.").power(ctx.table)?;
    let b = durfee_terms(ctx, l, n + 1, m + l + 1, "b.").power(ctx.table)?;
    Ok((Side::Uni(a), Side::Uni(b)))
}

fn support(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (n, m) = (get(p, "n")?, get(p, "m")?);
    need(n >= 0 && m >= 0, || format!("n, m must be nonnegative, got {n}, {m}"))?;
    let mut lhs = Terms::new();
    for j in 0..m {
        lhs.push(1, 0, ctx.e("sum.exp", n * j), ctx.e("sum.rows", n - 1), ctx.e("sum.cols", j));
    }
    lhs.push(1, 0, ctx.e("corner.exp", n * m), ctx.e("corner.rows", n), ctx.e("corner.cols", m));
    let mut rhs = Terms::new();
    for j in 0..=m {
        rhs.push(1, 0, ctx.e("rhs.exp", (n + 1) * j), ctx.e("rhs.rows", n), ctx.e("rhs.cols", j));
    }
    Ok((Side::Uni(lhs.power(ctx.table)?), Side::Uni(rhs.power(ctx.table)?)))
}

fn left_part(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (theta, l, k) = (get(p, "theta")?, get(p, "l")?, get(p, "k")?);
    fibinfinite::check_type(theta, l)?;
    need((1..=l + 1).contains(&k), || format!("k must lie in 1..={}, got {k}", l + 1))?;
    let lhs = left(ctx, theta, l, k, "")?;
    let (rhs, _) = fibinfinite::left_char_finite(theta, l, k, ctx.order)?;
    Ok((Side::Bi(lhs), Side::Bi(rhs)))
}

fn fib_finite(p: &Params, ctx: &Ctx) -> Result<(Side, Side)> {
    let (n, l) = (get(p, "n")?, get(p, "l")?);
    need(n >= 0 && l >= 0, || format!("n, l must be nonnegative, got {n}, {l}"))?;
    let lhs = fibfinite::char_brute(n as usize, l as usize)?;
    let big = n + l;
    let mut rhs = LaurentPoly::zero();
    for m in 0..=big / (l + 1) {
        let shift = ctx.e("exp", (l + 1) * m * (m - 1) / 2);
        let coeffs = qbinom_coeffs(ctx.e("binom.top", big - l * m), ctx.e("binom.bottom", m));
        for (e, c) in coeffs.into_iter().enumerate() {
            rhs.add_term(m, shift + e as i64, c);
        }
    }
    Ok((Side::Poly(lhs), Side::Poly(rhs)))
}

fn fib_finite_extra(p: &Params, _: &Ctx) -> Result<Option<ExtraFailure>> {
    let (n, l) = (get(p, "n")? as usize, get(p, "l")? as usize);
    let brute = fibfinite::char_brute(n, l)?;
    let rec = fibfinite::char_recurrence(n, l);
    Ok(super::poly_mismatch(&brute, &rec).map(|(z, q, a, b)| ExtraFailure {
        z_exp: z,
        q_exp: q,
        lhs: a,
        rhs: b,
        detail: "recurrence differs from enumeration".into(),
    }))
}

// ---- grids ---------------------------------------------------------------

fn g_none(_: &SuiteConfig) -> Vec<Params> {
    vec![Params::new()]
}

fn g_s_signed(c: &SuiteConfig) -> Vec<Params> {
    pts(&["s"], &[-c.s_max..=c.s_max], |_| true)
}

fn g_s0(c: &SuiteConfig) -> Vec<Params> {
    pts(&["s"], &[0..=c.s_max], |_| true)
}

fn g_s1(c: &SuiteConfig) -> Vec<Params> {
    pts(&["s"], &[1..=c.s_max.max(1)], |_| true)
}

fn g_theta01(_: &SuiteConfig) -> Vec<Params> {
    pts(&["theta"], &[0..=1], |_| true)
}

fn g_ls(c: &SuiteConfig) -> Vec<Params> {
    pts(&["l", "s"], &[0..=c.l_max, -c.s_max..=c.s_max], |_| true)
}

fn g_tls(c: &SuiteConfig) -> Vec<Params> {
    pts(&["theta", "l", "s"], &[0..=c.l_max, 0..=c.l_max, -c.s_max..=c.s_max], |v| v[0] <= v[1])
}

fn g_tl(c: &SuiteConfig) -> Vec<Params> {
    pts(&["theta", "l"], &[0..=c.l_max, 0..=c.l_max], |v| v[0] <= v[1])
}

fn g_l(c: &SuiteConfig) -> Vec<Params> {
    pts(&["l"], &[0..=c.l_max], |_| true)
}

fn g_lnm(c: &SuiteConfig) -> Vec<Params> {
    pts(&["l", "n", "m"], &[0..=c.l_max, 0..=c.nm_max, 0..=c.nm_max], |_| true)
}

fn g_nm(c: &SuiteConfig) -> Vec<Params> {
    pts(&["n", "m"], &[0..=c.nm_max, 0..=c.nm_max], |_| true)
}

fn g_tlk(c: &SuiteConfig) -> Vec<Params> {
    pts(&["theta", "l", "k"], &[0..=c.l_max, 0..=c.l_max, 1..=c.l_max + 1], |v| v[0] <= v[1] && v[2] <= v[1] + 1)
}

fn g_fib(c: &SuiteConfig) -> Vec<Params> {
    pts(&["n", "l"], &[0..=c.fib_n_max, 0..=c.fib_l_max], |_| true)
}

// ---- the table -----------------------------------------------------------

const TWO_FAMILY: &[&str] = &["a.exp", "a.rows", "a.cols", "b.exp", "b.rows", "b.cols"];
const COMBINED: &[&str] = &["exp", "num.plus", "num.minus", "rows", "cols"];
const DURFEE: &[&str] = &[
    "norect.exp", "norect.rows", "norect.cols", "base.exp", "base.rows", "base.cols", "env.exp", "env.rows", "env.cols",
];

macro_rules! def {
    ($id:literal, $summary:literal, [$($p:literal),*], $sites:expr, [$(($pn:literal, $pv:expr)),*], $build:expr, $extra:expr, $grid:expr) => {
        IdentityDef {
            id: $id,
            summary: $summary,
            params: &[$($p),*],
            sites: $sites,
            probe: &[$(($pn, $pv)),*],
            build: $build,
            extra: $extra,
            grid: $grid,
        }
    };
}

pub static CATALOG: &[IdentityDef] = &[
    def!("jacobi", "Jacobi triple product: bilateral sum against the two infinite products",
        [], &["lhs.exp", "rhs.right", "rhs.left"], [], jacobi, None, g_none),
    def!("durfee-l0", "z^s slice of the triple product: Durfee rectangles k x (k+s)",
        ["s"], &["exp", "poch.k", "poch.m"], [("s", 1)], durfee_l0, None, g_s_signed),
    def!("l1-explicit", "l = 1 character as a sum of two products of a right and a left part",
        ["theta"], &["lhs.exp", "r0.exp", "r0.poch", "l0.exp", "l0.poch", "r1.exp", "r1.poch", "l1.exp", "l1.poch"],
        [("theta", 1)], l1_explicit, None, g_theta01),
    def!("11pos", "theta = 1, l = 1, coefficient of z^s, s >= 0",
        ["s"], TWO_FAMILY, [("s", 1)], b_11pos, Some(x_11pos), g_s0),
    def!("11pos-combined", "theta = 1, l = 1, coefficient of z^s, single sum with a three-term numerator",
        ["s"], COMBINED, [("s", 1)], b_11pos_c, Some(x_11pos_c), g_s0),
    def!("11neg", "theta = 1, l = 1, coefficient of z^-s, s >= 0",
        ["s"], TWO_FAMILY, [("s", 1)], b_11neg, Some(x_11neg), g_s0),
    def!("11neg-combined", "theta = 1, l = 1, coefficient of z^-s, single sum with a three-term numerator",
        ["s"], COMBINED, [("s", 1)], b_11neg_c, Some(x_11neg_c), g_s0),
    def!("01pos", "theta = 0, l = 1, coefficient of z^s, s >= 1",
        ["s"], &["lead.poch", "a.exp", "a.rows", "a.cols", "b.exp", "b.rows", "b.cols"], [("s", 2)],
        b_01pos, Some(x_01pos), g_s1),
    def!("01pos-combined", "theta = 0, l = 1, coefficient of z^s, single sum with a three-term numerator",
        ["s"], &["lead.poch", "exp", "num.plus", "num.minus", "rows", "cols"], [("s", 2)],
        b_01pos_c, Some(x_01pos_c), g_s1),
    def!("01neg", "theta = 0, l = 1, coefficient of z^-s, s >= 0",
        ["s"], TWO_FAMILY, [("s", 1)], b_01neg, Some(x_01neg), g_s0),
    def!("01neg-combined", "theta = 0, l = 1, coefficient of z^-s, single sum with a three-term numerator",
        ["s"], COMBINED, [("s", 1)], b_01neg_c, Some(x_01neg_c), g_s0),
    def!("andrews", "1/(q)_inf by Durfee rectangles k x 2k and their two extensions",
        [], TWO_FAMILY, [], andrews, None, g_none),
    def!("andrews-combined", "the same identity as a single sum with a three-term numerator",
        [], COMBINED, [], andrews_combined, None, g_none),
    def!("andrews-gen", "1/(q)_inf by Durfee rectangles (k+s) x ((l+1)k+l)",
        ["l", "s"], &["top.exp", "top.rows", "top.cols", "mid.exp", "mid.rows", "mid.cols"], [("l", 2), ("s", 1)],
        andrews_gen, None, g_ls),
    def!("zslice", "coefficient of z^s in the splitting, normalized to 1/(q)_inf",
        ["theta", "l", "s"],
        &["empty.exp", "empty.left", "empty.right", "slot.exp", "slot.left", "slot.right"],
        [("theta", 1), ("l", 2), ("s", 1)], zslice, Some(zslice_extra), g_tls),
    def!("durfee", "1/(q)_inf by shifted Durfee rectangles (k+n) x ((l+1)k+m), with a partition census",
        ["l", "n", "m"], DURFEE, [("l", 1), ("n", 1), ("m", 1)], durfee, Some(durfee_extra), g_lnm),
    def!("split", "bilateral character against the left/right splitting, and against enumeration",
        ["theta", "l"], &["lhs.exp", "left.exp", "left.poch", "right.exp", "right.poch", "slot.exp"],
        [("theta", 1), ("l", 2)], split, Some(split_extra), g_tl),
    def!("final-theta-zero", "theta = 0 character as l+1 products",
        ["l"], &["lhs.exp", "prefactor.exp", "right.exp", "right.poch", "left.exp", "left.poch"], [("l", 2)],
        final_theta_zero, None, g_l),
    def!("correspondence", "z^s slice formula against its Durfee instance (n, m)",
        ["theta", "l", "s"],
        &["slice.empty.exp", "slice.empty.left", "slice.empty.right", "slice.slot.exp", "slice.slot.left",
          "slice.slot.right", "durfee.norect.exp", "durfee.norect.rows", "durfee.norect.cols", "durfee.base.exp",
          "durfee.base.rows", "durfee.base.cols", "durfee.env.exp", "durfee.env.rows", "durfee.env.cols"],
        [("theta", 1), ("l", 2), ("s", 1)], correspondence_build, Some(correspondence_extra), g_tls),
    def!("line-equivalence", "Durfee instances (n, m) and (n+1, m+l+1) coincide",
        ["l", "n", "m"],
        &["a.norect.exp", "a.norect.rows", "a.norect.cols", "a.base.exp", "a.base.rows", "a.base.cols", "a.env.exp",
          "a.env.rows", "a.env.cols", "b.norect.exp", "b.norect.rows", "b.norect.cols", "b.base.exp", "b.base.rows",
          "b.base.cols", "b.env.exp", "b.env.rows", "b.env.cols"],
        [("l", 1), ("n", 1), ("m", 1)], line_equivalence, None, g_lnm),
    def!("support", "partitions missing the n x m rectangle plus the corner term, by largest part",
        ["n", "m"], &["sum.exp", "sum.rows", "sum.cols", "corner.exp", "corner.rows", "corner.cols", "rhs.exp", "rhs.rows", "rhs.cols"],
        [("n", 2), ("m", 2)], support, None, g_nm),
    def!("left-part", "left part as a series against the limit of reflected finite characters",
        ["theta", "l", "k"], &["exp", "poch"], [("theta", 1), ("l", 2), ("k", 1)], left_part, None, g_tlk),
    def!("fib-finite", "finite character by enumeration against the Gaussian binomial sum",
        ["n", "l"], &["exp", "binom.top", "binom.bottom"], [("n", 6), ("l", 1)],
        fib_finite, Some(fib_finite_extra), g_fib),
];

pub fn lookup(id: &str) -> Option<&'static IdentityDef> {
    CATALOG.iter().find(|d| d.id == id)
}
