//! Truncated q-series: Pochhammer inverses, Gaussian binomials and bivariate
//! series on a z-window.

use fibcfg::qseries::{qbinom, qbinom_invert_check, PochLen, QFactorialTable, QSeries, ZWindow};
use fibcfg::Result;

fn main() -> Result<()> {
    let d = 12;
    let table = QFactorialTable::new(d);

    println!("1/(q)_inf = {}", table.inv_infinite());
    println!("1/(q)_3   = {}", table.get(PochLen::Finite(3)));
    println!("q^2/((q)_1 (q)_2) = {}", table.term(2, 1, 2)?);

    println!("[5,2]_q = {}", qbinom(5, 2));
    let (lhs, rhs) = qbinom_invert_check(5, 2)?;
    println!("[5,2]_(1/q) = {lhs}  (q^-6 [5,2]_q = {rhs})");

    // (1 + z q)(1 + z^-1 q) on |z| <= 1
    let w = ZWindow::symmetric(1);
    let a = QSeries::from_terms(d, w, [(0, 0, 1.into()), (1, 1, 1.into())])?;
    let b = QSeries::from_terms(d, w, [(0, 0, 1.into()), (-1, 1, 1.into())])?;
    let p = a.mul(&b)?;
    println!("(1 + zq)(1 + q/z):\n{p}");
    Ok(())
}
