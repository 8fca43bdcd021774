//! The eight stabilization types on the trefoil: move class, change of the
//! classical invariants and shift of the bigrading of x+.

use gridhfk::complex::bigrading;
use gridhfk::corpus;
use gridhfk::invariants::x_plus;
use gridhfk::moves::{apply_move, GridMove, StabType};
use gridhfk::Marker;

fn main() -> gridhfk::Result<()> {
    let g = corpus::trefoil();
    let base = g.classical_invariants()?;
    let base_x = bigrading(&g, &x_plus(&g));
    println!("{}\ntb {} r {} x+ at {base_x}\n", g.render(), base.tb, base.r);
    for kind in StabType::all() {
        let row = match kind.marker {
            Marker::X => g.x_rows()[0],
            Marker::O => g.o_rows()[0],
        };
        let m = GridMove::Stabilize { column: 1, row: row + 1, kind };
        let h = apply_move(&g, &m)?;
        let ci = h.classical_invariants()?;
        let shift = bigrading(&h, &x_plus(&h)) - base_x;
        println!(
            "{m:<16} {:<15} dtb {:>2} dr {:>2}  x+ shift {shift}",
            format!("{:?}", m.classify()),
            ci.tb - base.tb,
            ci.r - base.r
        );
    }
    Ok(())
}
