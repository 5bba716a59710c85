//! Writes a Durfee dissection and a family figure as SVG.
//!
//! Usage: cargo run --example render_figure -- [output directory]

use std::path::PathBuf;

use fibcfg::cli::{family_caption, render_durfee, render_family};
use fibcfg::partitions::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let p = Partition::parse("4,3,1")?;
    let one = dir.join("durfee_431.svg");
    std::fs::write(&one, render_durfee(&p, 1, 0, 0)?)?;
    let fam = dir.join("family_l2_m2.svg");
    std::fs::write(&fam, render_family(2, 0, 2, 2)?)?;
    println!("wrote {} and {}", one.display(), fam.display());
    println!("caption: {}", family_caption(2, 0, 2));
    Ok(())
}
