//! Infinite configurations of type (theta, l): enumeration against the
//! bilateral sum, and the split into left and right parts.

use fibcfg::fibinfinite::{
    char_brute, char_closed, enumerate_upto, left_char, left_char_finite, natural_window, right_char, split_rhs, Slot,
};
use fibcfg::qseries::QFactorialTable;
use fibcfg::Result;

fn main() -> Result<()> {
    let (theta, l, d) = (1, 2, 10);
    let w = natural_window(theta, l, d);

    let low = enumerate_upto(theta, l, 3)?;
    println!("({theta}, {l}) configurations of energy <= 3: {}", low.len());
    for c in &low {
        let ec = c.energy_charge();
        println!("  added {:?} removed {:?}  charge {} energy {}", c.added(), c.removed(), ec.charge, ec.energy);
    }

    let brute = char_brute(theta, l, d, w)?;
    let closed = char_closed(theta, l, d, w)?;
    println!("enumeration equals the bilateral sum through q^{d}: {}", brute == closed);
    println!("{closed}");

    for slot in Slot::all(l) {
        let k = slot.left_depth(l);
        let left = left_char(theta, l, k, d)?;
        let (limit, b) = left_char_finite(theta, l, k, d)?;
        println!("{slot:?}: left part k = {k} agrees with the finite limit (b = {b}): {}", left == limit.with_window(left.window())?);
        println!("  right part z^1 slice: {}", right_char(theta, l, slot, d)?.coeff_of_z(1)?);
    }

    let split = split_rhs(theta, l, d, &QFactorialTable::new(d))?.with_window(w)?;
    println!("split sum equals the character: {}", split == closed);
    Ok(())
}
