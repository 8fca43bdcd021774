//! The Legendrian front read off a grid: crossings, cusps and classical
//! invariants.

use gridhfk::corpus;
use gridhfk::grid::CuspKind;

fn main() -> gridhfk::Result<()> {
    for e in corpus::builtin() {
        let g = &e.grid;
        let front = g.front_projection()?;
        let ci = g.classical_invariants()?;
        println!("{}\n{}", e.name, g.render());
        println!(
            "crossings {} writhe {} cusps up {} down {} -> tb {} r {} sl {}/{}\n",
            front.crossings.len(),
            front.writhe(),
            front.cusp_count(CuspKind::Up),
            front.cusp_count(CuspKind::Down),
            ci.tb,
            ci.r,
            ci.sl_plus,
            ci.sl_minus
        );
    }
    Ok(())
}
