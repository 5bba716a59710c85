use num_bigint::BigInt;
use proptest::prelude::*;

use fibcfg::fibfinite::{char_closed, char_recurrence, enumerate, FibConfig};
use fibcfg::fibinfinite::enumerate_upto;
use fibcfg::identities::{correspondence, FirstMismatch, IdentityReport, Params};
use fibcfg::partitions::{census_check, durfee_classify, enumerate_partitions};
use fibcfg::qseries::{qbinom, qbinom_invert_check, LaurentPoly, QFactorialTable};
use fibcfg::voachar::{tau, theorem2_audit};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=6, -5i64..=5), 0..6)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(z, q, c)| (z, q, BigInt::from(c)))))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Words of length n with 1's more than l apart, by the first-1 recurrence.
fn spaced_words(n: usize, l: usize) -> u64 {
    let mut a = vec![0u64; n + 1];
    for i in 0..=n {
        // empty, or a first 1 at position j followed by a gap of l
        a[i] = 1 + (0..i).map(|j| if i > j + l + 1 { a[i - j - l - 1] } else { 1 }).sum::<u64>();
    }
    a[n]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn qbinom_inversion(a in 0i64..=12, b in 0i64..=12) {
        prop_assume!(b <= a);
        let (lhs, rhs) = qbinom_invert_check(a, b).unwrap();
        prop_assert_eq!(lhs, rhs);
        let g = qbinom(a, b);
        prop_assert_eq!(g.eval_at_one(), BigInt::from(binomial(a as u64, b as u64)));
        prop_assert_eq!(g, qbinom(a, a - b));
    }

    #[test]
    fn inverse_pochhammer_recurrence(n in 1i64..20, d in 0u32..30) {
        // (1 - q^n) / (q)_n = 1 / (q)_{n-1}
        let t = QFactorialTable::new(d);
        let lhs = t.inv(n).mul_poly(&[(0, BigInt::from(1)), (n as u32, BigInt::from(-1))]);
        prop_assert_eq!(&lhs, t.inv(n - 1));
    }

    #[test]
    fn report_json_round_trip(
        id in "[a-z][a-z0-9-]{0,12}",
        ps in prop::collection::btree_map("[a-z]{1,5}", -50i64..50, 0..4),
        order in 0u32..200,
        window in prop::option::of((-20i64..0, 0i64..20)),
        mismatch in prop::option::of((-9i64..9, 0i64..60, -1000i64..1000, -1000i64..1000)),
        millis in 0u64..100_000,
        detail in prop::option::of(".{0,20}"),
    ) {
        let r = IdentityReport {
            identity_id: id,
            params: ps.into_iter().collect::<Params>(),
            order,
            z_window: window.map(|(a, b)| [a, b]),
            matched: mismatch.is_none(),
            first_mismatch: mismatch.map(|(z, q, a, b)| FirstMismatch {
                z_exp: z, q_exp: q, lhs_coeff: a.to_string(), rhs_coeff: b.to_string(),
            }),
            elapsed_millis: millis,
            detail,
        };
        let text = serde_json::to_string(&r).unwrap();
        let back: IdentityReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn fib_closed_form_counts(n in 0usize..=14, l in 0usize..=4) {
        let all = enumerate(n, l).unwrap();
        prop_assert_eq!(all.len() as u64, spaced_words(n, l));
        prop_assert_eq!(char_closed(n, l).eval_at_one(), BigInt::from(all.len()));
        prop_assert_eq!(char_recurrence(n, l), char_closed(n, l));
        for c in &all {
            prop_assert_eq!(&FibConfig::parse(l, &c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn close_ones_are_rejected(l in 1usize..5, gap in 1usize..5, lead in 0usize..4) {
        prop_assume!(gap <= l);
        let mut bits = vec![false; lead + gap + 1];
        bits[lead] = true;
        bits[lead + gap] = true;
        prop_assert!(FibConfig::new(l, bits).is_err());
    }

    #[test]
    fn every_partition_has_one_class(size in 0u32..=14, l in 0i64..=3, n in 0i64..=3, m in 0i64..=3) {
        let all = enumerate_partitions(size).unwrap();
        for p in &all {
            prop_assert_eq!(p.size(), size as u64);
            let c = durfee_classify(p, l, n, m).unwrap();
            if let Some((r, col)) = c.durfee_rect() {
                prop_assert!(p.contains_rect(r, col));
            }
        }
    }

    #[test]
    fn census_matches_generating_functions(l in 0i64..=3, n in 0i64..=3, m in 0i64..=3) {
        prop_assert!(census_check(l, n, m, 14).unwrap().is_none());
    }

    #[test]
    fn tau_is_injective(l in 0i64..=3, theta_frac in 0i64..=3, d in 0u32..=7) {
        let theta = theta_frac.min(l);
        let configs = enumerate_upto(theta, l, d).unwrap();
        let images: std::collections::HashSet<_> = configs.iter().map(|a| tau(a).unwrap()).collect();
        prop_assert_eq!(images.len(), configs.len());
        for t in &images {
            let v: Vec<i64> = t.iter().take(t.head().len() + 3).collect();
            prop_assert!(v.windows(2).all(|w| w[1] - w[0] > l));
        }
    }

    #[test]
    fn correspondence_lands_on_its_lines(l in 0i64..=6, theta_frac in 0i64..=6, s in -8i64..=8) {
        let theta = theta_frac.min(l);
        let c = correspondence(theta, l, s).unwrap();
        prop_assert_eq!(c.level, l + 1);
        prop_assert!(c.n >= 0 && c.m >= 0);
        if s > 0 {
            prop_assert_eq!((c.n, c.m), (s, l - theta));
        } else {
            prop_assert_eq!(c.n, 0);
            // one line-equivalence step (n, m) -> (n+1, m+l+1) per unit of -s
            prop_assert_eq!(c.m, (l - theta) + (-s) * (l + 1));
        }
    }
}

#[test]
fn audit_counts_match_for_small_modules() {
    for (i, n) in [(0, 1), (0, 2), (1, 2), (0, 3)] {
        let a = theorem2_audit(i, n, 6).unwrap();
        assert!(a.passed(), "{a}");
    }
}
