use std::path::Path;

use fibcfg::cli::{run_with, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use fibcfg::identities::IdentityReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fibcfg").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn char_fib_text() {
    let (code, out, _) = run(&["char", "fib", "--n", "3", "--l", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 + z(1+q+q^2) + z^2 q^2"), "{out}");
}

#[test]
fn char_fib_json_terms() {
    let (code, out, _) = run(&["char", "fib", "--n", "2", "--l", "0", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // (1 + z)(1 + zq)
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert!(terms.contains(&serde_json::json!([2, 1, "1"])));
}

#[test]
fn char_voa_has_rational_offset() {
    let (code, out, _) = run(&["char", "voa", "--i", "1", "--N", "2", "--order", "6", "--json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["qOffset"], "-1/4");
}

#[test]
fn verify_single_point_matches_golden() {
    let (code, out, _) =
        run(&["verify", "durfee", "--l", "2", "--n", "1", "--m", "1", "--order", "20", "--no-timings"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("verify_durfee.json"));
    let r: IdentityReport = serde_json::from_str(out.trim()).unwrap();
    assert!(r.matched && r.first_mismatch.is_none());
}

#[test]
fn verify_partial_params_filter_the_grid() {
    let (code, out, _) = run(&["verify", "11pos", "--order", "20", "--no-timings"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("verify_11pos.json"));
    let (_, out, _) = run(&["verify", "durfee", "--l", "1", "--order", "12", "--format", "text"]);
    assert_eq!(out.lines().count(), 16);
}

#[test]
fn verify_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, out, _) = run(&["verify", "andrews", "--order", "10", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().contains("\"identityId\":\"andrews\""));
}

#[test]
fn render_goldens_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        let (code, _, err) = run(&["render", "durfee", "--parts", "4,3,1", "--l", "1", "--out", p.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(std::fs::read_to_string(&a).unwrap(), golden("durfee_431.svg"));

    let f = dir.path().join("f.svg");
    let args = ["render", "family", "--l", "2", "--n", "0", "--m", "2", "--kmax", "3", "--out", f.to_str().unwrap()];
    assert_eq!(run(&args).0, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), golden("family_l2_m2.svg"));
}

#[test]
fn durfee_classify_prints_class() {
    let (code, out, _) = run(&["durfee", "classify", "--parts", "4,3,1", "--l", "1", "--n", "0", "--m", "0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Rect k=1 i=1"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "no-such-identity"][..],
        &["verify", "jacobi", "--order", "-1"],
        &["durfee", "classify", "--parts", "1,2", "--l", "1", "--n", "0", "--m", "0"],
        &["char", "fib", "--n", "3"],
        &["render", "family", "--l", "1", "--n", "0", "--m", "0", "--kmax", "99", "--out", "/dev/null"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn order_flag_names_itself_on_bad_input() {
    let (_, _, err) = run(&["verify", "jacobi", "--order", "-1"]);
    assert!(err.contains("--order"), "{err}");
}

#[test]
fn mismatch_exit_code_is_distinct() {
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn catalog_lists_every_identity() {
    let (code, out, _) = run(&["catalog"]);
    assert_eq!(code, EXIT_OK);
    for def in fibcfg::identities::CATALOG {
        assert!(out.contains(def.id), "{}", def.id);
    }
}
