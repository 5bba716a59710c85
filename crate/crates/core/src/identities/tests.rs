use super::*;
use crate::qseries::PowerSeries;
use num_bigint::BigInt;

fn ok(r: &IdentityReport) {
    assert!(r.matched, "{} {:?}: {:?} {:?}", r.identity_id, r.params, r.first_mismatch, r.detail);
    assert!(r.first_mismatch.is_none());
}

/// Partition numbers by Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[i] += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                p[i] += sign * p[i - g2];
            }
            k += 1;
        }
    }
    p
}

#[test]
fn jacobi_small_coefficients() {
    let r = check_jacobi(30, ZWindow::symmetric(8)).unwrap();
    ok(&r);
    assert_eq!(r.z_window, Some([-8, 8]));
    // the bilateral side at z^0 is the partition generating function
    let t = QFactorialTable::new(10);
    let lhs = crate::fibinfinite::bilateral(0, 0, 10, &t).unwrap();
    assert_eq!(lhs.coeff(0, 3).unwrap(), BigInt::from(partition_numbers(3)[3]));
    for s in -4..=4i64 {
        let e = (s * (s - 1) / 2) as u32;
        if e <= 10 {
            assert_eq!(lhs.coeff(s, e).unwrap(), BigInt::from(1));
        }
    }
}

#[test]
fn partition_table_matches_pentagonal_numbers() {
    let t = QFactorialTable::new(40);
    let p = partition_numbers(40);
    for (n, &v) in p.iter().enumerate() {
        assert_eq!(t.inv_infinite().coeff(n as u32).unwrap(), &BigInt::from(v));
    }
}

#[test]
fn explicit_and_final_forms() {
    ok(&check_l1_explicit(1, 25, ZWindow::symmetric(6)).unwrap());
    ok(&check_l1_explicit(0, 25, ZWindow::symmetric(6)).unwrap());
    ok(&check_final_theta_zero(1, 25, ZWindow::symmetric(6)).unwrap());
    ok(&check_final_theta_zero(0, 25, ZWindow::symmetric(6)).unwrap());
    ok(&check_final_theta_zero(3, 20, ZWindow::symmetric(6)).unwrap());
}

#[test]
fn zslice_examples() {
    ok(&check_zslice_family(0, 2, 0, 30).unwrap());
    ok(&check_zslice_family(0, 3, 1, 30).unwrap());
    ok(&check_zslice_family(1, 1, -2, 30).unwrap());
}

#[test]
fn zslice_of_three_level_is_the_caption_identity() {
    // 1/(q)_inf = sum q^{k(3k+2)}/((q)_k (q)_{3k+2}) + sum_{i<2} q^{(k+1)(3k+2+i)}/((q)_k (q)_{3k+2+i})
    let d = 30;
    let t = QFactorialTable::new(d);
    let mut s = PowerSeries::zero(d);
    for k in 0..8i64 {
        s = &s + &t.term(k * (3 * k + 2), k, 3 * k + 2).unwrap();
        for i in 1..=2 {
            s = &s + &t.term((k + 1) * (3 * k + 2 + i), k, 3 * k + 2 + i).unwrap();
        }
    }
    assert_eq!(&s, t.inv_infinite());
}

#[test]
fn correspondence_examples() {
    let c = correspondence(1, 1, 0).unwrap();
    assert_eq!((c.n, c.m, c.level), (0, 0, 2));
    let c = correspondence(0, 1, 1).unwrap();
    assert_eq!((c.n, c.m, c.level), (1, 1, 2));
    let c = correspondence(0, 1, -1).unwrap();
    assert_eq!((c.n, c.m, c.level), (0, 3, 2));
    assert!(correspondence(2, 1, 0).is_err());
    ok(&check_correspondence(1, 1, 0, 25).unwrap());
    ok(&check_correspondence(0, 1, -1, 25).unwrap());
}

#[test]
fn correspondence_branches_agree_at_zero() {
    for l in 0..5 {
        for theta in 0..=l {
            let c = correspondence(theta, l, 0).unwrap();
            assert_eq!((c.n, c.m), (0, l - theta));
        }
    }
}

#[test]
fn correspondence_images_lie_on_the_lines() {
    for l in 0..5 {
        for theta in 0..=l {
            for s in -6..=6 {
                let c = correspondence(theta, l, s).unwrap();
                assert!(c.n >= 0 && c.m >= 0);
                // n = 0, or the image normalizes back to the line n = 0 by line-equivalence steps
                assert!(c.n == 0 || (0..=l).contains(&c.m), "{c:?}");
            }
        }
    }
}

#[test]
fn empty_config_runs_nothing() {
    assert!(run_suite(&SuiteConfig::default()).unwrap().is_empty());
}

#[test]
fn unknown_identity_is_rejected() {
    let c = SuiteConfig { identities: vec!["nope".into()], ..Default::default() };
    assert!(run_suite(&c).is_err());
    assert!(run_one("durfee", &params(&[("l", 1)]), &SuiteConfig::default()).is_err());
}

#[test]
fn single_fault_gives_single_mismatch() {
    let p = params(&[("l", 1), ("n", 1), ("m", 1)]);
    let c = SuiteConfig {
        identities: vec!["durfee".into(), "andrews".into()],
        order: 20,
        fault: Some(Fault { identity: "durfee".into(), params: p.clone(), site: "env.exp".into() }),
        ..Default::default()
    };
    let reports = run_suite(&c).unwrap();
    let bad: Vec<_> = reports.iter().filter(|r| !r.matched).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].params, p);
    assert!(bad[0].first_mismatch.is_some());
    assert_eq!(reports[0].identity_id, "andrews");
}

#[test]
fn report_json_round_trip() {
    let r = check_jacobi(6, ZWindow::symmetric(2)).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains("\"identityId\":\"jacobi\""));
    assert!(text.contains("\"match\":true"));
    assert!(text.contains("\"firstMismatch\":null"));
    let back: IdentityReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
}

#[test]
fn every_probe_covers_its_parameters() {
    for def in CATALOG {
        let names: Vec<&str> = def.probe.iter().map(|p| p.0).collect();
        assert_eq!(names, def.params, "{}", def.id);
        assert!(!def.sites.is_empty());
    }
}

#[test]
#[ignore = "full default grid; run with --ignored --release"]
fn default_suite_all_match() {
    let reports = run_suite(&SuiteConfig::all()).unwrap();
    let bad: Vec<_> = reports.iter().filter(|r| !r.matched).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}
