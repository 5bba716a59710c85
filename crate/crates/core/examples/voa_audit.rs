//! Lattice module characters and the map to semi-infinite monomials.

use fibcfg::fibinfinite::InfFibConfig;
use fibcfg::qseries::ZWindow;
use fibcfg::voachar::{q_offset, tau, theorem2_audit, voa_char};
use fibcfg::Result;

fn main() -> Result<()> {
    let v = voa_char(1, 2, 8, ZWindow::symmetric(1))?;
    println!("ch V_(1),sqrt2 = {v}");

    let a = InfFibConfig::new(1, 1, [0], [-1])?;
    println!("tau of the vacuum: {}", tau(&InfFibConfig::vacuum(1, 1)?)?);
    println!("tau of a one-particle move: {}", tau(&a)?);

    for (i, n) in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)] {
        println!("offset {}", q_offset(i, n)?);
        println!("{}", theorem2_audit(i, n, 12)?);
    }
    Ok(())
}
