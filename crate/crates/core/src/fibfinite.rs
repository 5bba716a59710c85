//! Finite Fibonacci-`l` configurations and their characters.
//!
//! A configuration on `n` points is a 0/1 word `a_0 .. a_{n-1}` in which any two
//! 1's are more than `l` apart. Its weight is `z^(sum a_i) q^(sum i a_i)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qseries::{qbinom_coeffs, LaurentPoly};

/// Largest `n` accepted by the exhaustive routines.
pub const ENUMERATION_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FibConfig {
    l: usize,
    bits: Vec<bool>,
}

impl FibConfig {
    pub fn new(l: usize, bits: Vec<bool>) -> Result<Self> {
        let mut last: Option<usize> = None;
        for (i, &b) in bits.iter().enumerate() {
            if !b {
                continue;
            }
            if let Some(p) = last {
                if i - p <= l {
                    return Err(Error::InvalidConfiguration(format!(
                        "1's at {p} and {i} are within distance {l}"
                    )));
                }
            }
            last = Some(i);
        }
        Ok(FibConfig { l, bits })
    }

    /// Parses a word such as `"0101"`.
    pub fn parse(l: usize, word: &str) -> Result<Self> {
        let bits = word
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidConfiguration(format!("unexpected symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(l, bits)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn charge(&self) -> i64 {
        self.bits.iter().filter(|&&b| b).count() as i64
    }

    pub fn energy(&self) -> i64 {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as i64).sum()
    }
}

impl fmt::Display for FibConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "configuration length",
            value: n as i64,
            cap: ENUMERATION_CAP as i64,
        });
    }
    Ok(())
}

/// Calls `visit` on every word of `Fib_n^l` in lexicographic order.
fn for_each_word(n: usize, l: usize, visit: &mut dyn FnMut(&[bool])) {
    fn go(word: &mut Vec<bool>, n: usize, l: usize, blocked: usize, visit: &mut dyn FnMut(&[bool])) {
        if word.len() == n {
            visit(word);
            return;
        }
        word.push(false);
        go(word, n, l, blocked.saturating_sub(1), visit);
        word.pop();
        if blocked == 0 {
            word.push(true);
            go(word, n, l, l, visit);
            word.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, l, 0, visit);
}

/// All of `Fib_n^l`, lexicographically ordered.
pub fn enumerate(n: usize, l: usize) -> Result<Vec<FibConfig>> {
    check_cap(n)?;
    let mut out = Vec::new();
    for_each_word(n, l, &mut |w| out.push(FibConfig { l, bits: w.to_vec() }));
    Ok(out)
}

/// Sum of weights over an explicit enumeration.
pub fn char_brute(n: usize, l: usize) -> Result<LaurentPoly> {
    check_cap(n)?;
    let mut counts: HashMap<(i64, i64), u64> = HashMap::new();
    for_each_word(n, l, &mut |w| {
        let mut z = 0;
        let mut q = 0;
        for (i, &b) in w.iter().enumerate() {
            if b {
                z += 1;
                q += i as i64;
            }
        }
        *counts.entry((z, q)).or_default() += 1;
    });
    Ok(LaurentPoly::from_terms(counts.into_iter().map(|((z, q), c)| (z, q, BigInt::from(c)))))
}

/// `chi_{n+1} = chi_n + z q^n chi_{n-l}`, seeded by `chi_m = 1 + z(1 + .. + q^(m-1))` for `m <= l`.
pub fn char_recurrence(n: usize, l: usize) -> LaurentPoly {
    let mut chi: Vec<LaurentPoly> = Vec::with_capacity(n + 1);
    for m in 0..=n.min(l) {
        let mut p = LaurentPoly::one();
        for e in 0..m {
            p.add_term(1, e as i64, BigInt::from(1));
        }
        chi.push(p);
    }
    for m in l..n {
        let next = &chi[m] + &chi[m - l].mul_monomial(1, m as i64);
        chi.push(next);
    }
    chi.swap_remove(n)
}

/// `P^l_n = sum_m z^m q^((l+1) m (m-1) / 2) [n - l m, m]_q`.
pub fn p_finite(l: usize, n: usize) -> LaurentPoly {
    let (l, n) = (l as i64, n as i64);
    let mut out = LaurentPoly::zero();
    for m in 0..=n / (l + 1) {
        let shift = (l + 1) * m * (m - 1) / 2;
        for (e, c) in qbinom_coeffs(n - l * m, m).into_iter().enumerate() {
            out.add_term(m, shift + e as i64, c);
        }
    }
    out
}

/// `chi_n^l = P^l_{n+l}`.
pub fn char_closed(n: usize, l: usize) -> LaurentPoly {
    p_finite(l, n + l)
}

/// The character computed three independent ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTriple {
    pub brute: LaurentPoly,
    pub recur: LaurentPoly,
    pub closed: LaurentPoly,
}

impl CharTriple {
    pub fn compute(n: usize, l: usize) -> Result<Self> {
        Ok(CharTriple { brute: char_brute(n, l)?, recur: char_recurrence(n, l), closed: char_closed(n, l) })
    }

    pub fn agree(&self) -> bool {
        self.brute == self.recur && self.recur == self.closed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(n: usize, l: usize) -> Vec<String> {
        enumerate(n, l).unwrap().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(words(3, 1), ["000", "001", "010", "100", "101"]);
        assert_eq!(words(0, 3), [""]);
        assert_eq!(words(2, 2), ["00", "01", "10"]);
        assert!(enumerate(ENUMERATION_CAP + 1, 1).is_err());
    }

    #[test]
    fn listed_characters() {
        assert_eq!(char_brute(1, 1).unwrap().to_string(), "1 + z");
        assert_eq!(char_brute(2, 1).unwrap().to_string(), "1 + z(1+q)");
        assert_eq!(char_brute(3, 1).unwrap().to_string(), "1 + z(1+q+q^2) + z^2 q^2");
        // single particles on four points only reach energy 3
        assert_eq!(char_brute(4, 1).unwrap().to_string(), "1 + z(1+q+q^2+q^3) + z^2(q^2+q^3+q^4)");
        assert_eq!(char_closed(4, 1), char_brute(4, 1).unwrap());
    }

    #[test]
    fn closed_form_base_cases() {
        assert_eq!(p_finite(3, 0), LaurentPoly::one());
        assert_eq!(char_recurrence(0, 5), LaurentPoly::one());
        assert_eq!(char_closed(0, 5), LaurentPoly::one());
    }

    #[test]
    fn counts() {
        for n in 0..12 {
            assert_eq!(char_recurrence(n, 0).eval_at_one(), BigInt::from(1u64 << n));
        }
        assert_eq!(char_recurrence(10, 1).eval_at_one(), BigInt::from(144));
    }

    #[test]
    fn parse_rejects_close_particles() {
        assert!(FibConfig::parse(1, "0101").is_ok());
        assert!(FibConfig::parse(2, "0101").is_err());
        assert!(FibConfig::parse(1, "01x").is_err());
    }
}
