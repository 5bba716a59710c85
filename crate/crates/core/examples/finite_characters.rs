//! Finite Fibonacci configurations: enumeration, and the character computed
//! by brute force, by recurrence and in closed form.
//!
//! Usage: cargo run --example finite_characters -- [n] [l]

use fibcfg::fibfinite::{enumerate, CharTriple};
use fibcfg::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(4);
    let l = args.next().unwrap_or(1);

    let all = enumerate(n, l)?;
    println!("Fib_{n}^{l}: {} configurations", all.len());
    for c in all.iter().take(12) {
        println!("  {c}  z^{} q^{}", c.charge(), c.energy());
    }
    if all.len() > 12 {
        println!("  ...");
    }

    let t = CharTriple::compute(n, l)?;
    println!("chi = {}", t.closed);
    println!("brute, recurrence and closed form agree: {}", t.agree());

    // at z = q = 1 and l = 1 the counts are Fibonacci numbers
    let counts: Vec<String> = (0..12).map(|n| fibcfg::fibfinite::char_recurrence(n, 1).eval_at_one().to_string()).collect();
    println!("|Fib_n^1|, n = 0..11: {}", counts.join(" "));
    Ok(())
}
