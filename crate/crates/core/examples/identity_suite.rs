//! Runs the identity catalog, then shows a perturbed exponent being caught.
//!
//! Usage: cargo run --release --example identity_suite -- [order]

use std::time::Instant;

use fibcfg::identities::{params, run_one, run_suite, Fault, SuiteConfig, CATALOG};
use fibcfg::Result;

fn main() -> Result<()> {
    let order = std::env::args().nth(1).map(|a| a.parse().expect("order")).unwrap_or(20);
    let config = SuiteConfig { order, ..SuiteConfig::all() };

    let start = Instant::now();
    let reports = run_suite(&config)?;
    let failed = reports.iter().filter(|r| !r.matched).count();
    println!("{} checks through q^{order}, {failed} failed, {:?}", reports.len(), start.elapsed());
    for def in CATALOG {
        let n = reports.iter().filter(|r| r.identity_id == def.id).count();
        println!("  {:<18} {n:>3} points  {}", def.id, def.summary);
    }

    let p = params(&[("l", 2), ("n", 1), ("m", 1)]);
    let faulty = SuiteConfig {
        order,
        fault: Some(Fault { identity: "durfee".into(), params: p.clone(), site: "env.exp".into() }),
        ..Default::default()
    };
    let r = run_one("durfee", &p, &faulty)?;
    println!("durfee {p:?} with env.exp + 1: match = {}, first mismatch {:?}", r.matched, r.first_mismatch);
    Ok(())
}
