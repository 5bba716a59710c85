//! Canonical text rendering shared by polynomials and truncated series.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) fn var_power(var: &str, exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

/// Magnitude and variable part of a single term, e.g. `2q^3`, `q`, `5`.
fn term_body(c: &BigInt, exp: i64) -> String {
    let mag = c.abs();
    if exp == 0 {
        return mag.to_string();
    }
    let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
    format!("{coeff}{}", var_power("q", exp))
}

/// Renders `sum c_e q^e` in ascending exponent order. `compact` drops the
/// spaces around the signs (used inside parenthesised groups).
pub(crate) fn q_poly<'a, I>(terms: I, compact: bool) -> String
where
    I: IntoIterator<Item = (i64, &'a BigInt)>,
{
    let mut out = String::new();
    for (exp, c) in terms {
        if c.is_zero() {
            continue;
        }
        let body = term_body(c, exp);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            let sign = if c.is_negative() { '-' } else { '+' };
            if compact {
                out.push(sign);
            } else {
                out.push(' ');
                out.push(sign);
                out.push(' ');
            }
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
