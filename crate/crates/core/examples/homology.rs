//! Bigraded homology of a grid: `cargo run --example homology -- [grid file or corpus name]`.

use gridhfk::corpus;
use gridhfk::homology::{GridComplex, HomologyOptions};

fn main() -> gridhfk::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "figure-eight".into());
    let g = match corpus::find(&arg) {
        Some(e) => e.grid,
        None => corpus::load_grid(arg.as_ref())?,
    };
    let opts = HomologyOptions::default();
    let cx = GridComplex::new(&g, &opts)?;
    println!("{} generators in {} bigradings", cx.generator_count(), cx.slice_sizes().len());
    let report = cx.homology(&opts)?;
    println!("fully blocked: {}", report.poincare);
    println!("hat:           {}", report.hat_poincare);
    for (gr, rank) in report.hat_ranks() {
        println!("  (M, A) = {gr}: rank {rank}");
    }
    println!("Alexander polynomial mod 2: {}", report.alexander_mod2);
    Ok(())
}
