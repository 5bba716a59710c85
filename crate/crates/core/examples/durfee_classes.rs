//! Shifted Durfee rectangles: classify partitions, and check class counts
//! against their generating functions.

use fibcfg::partitions::{census_check, durfee_classify, durfee_rhs, enumerate_partitions, Partition};
use fibcfg::qseries::QFactorialTable;
use fibcfg::Result;

fn main() -> Result<()> {
    let (l, n, m) = (1, 0, 0);
    for parts in ["4,3,1", "", "2,2", "5,5,1"] {
        let p = Partition::parse(parts)?;
        let c = durfee_classify(&p, l, n, m)?;
        println!("{p}: {}  durfee {:?} enveloping {:?}", c.kind, c.durfee_rect(), c.enveloping_rects());
    }

    println!("partitions of 6 by class (l, n, m) = (2, 1, 1):");
    for p in enumerate_partitions(6)? {
        println!("  {p}: {}", durfee_classify(&p, 2, 1, 1)?.kind);
    }

    let table = QFactorialTable::new(20);
    println!("sum of class generating functions: {}", durfee_rhs(l, n, m, &table)?);
    println!("1/(q)_inf:                         {}", table.inv_infinite());

    for (l, n, m) in [(1, 0, 0), (2, 1, 2), (3, 2, 0)] {
        let verdict = match census_check(l, n, m, 20)? {
            None => "every class count matches".to_string(),
            Some(x) => x.to_string(),
        };
        println!("census ({l}, {n}, {m}) to N = 20: {verdict}");
    }
    Ok(())
}
