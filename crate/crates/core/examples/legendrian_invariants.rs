//! Status of the classes of x+ and x- on each built-in grid, with the bounded
//! minus-flavor search as corroboration.

use gridhfk::corpus;
use gridhfk::homology::{GridComplex, HomologyOptions};
use gridhfk::invariants::{lambda_status_in, Sign};

fn main() -> gridhfk::Result<()> {
    for entry in corpus::builtin() {
        let cx = GridComplex::new(&entry.grid, &HomologyOptions::default())?;
        let ci = entry.grid.classical_invariants()?;
        println!("{} (tb {}, r {}, sl {})", entry.name, ci.tb, ci.r, ci.sl_plus);
        for sign in [Sign::Plus, Sign::Minus] {
            let s = lambda_status_in(&cx, sign, Some(1))?;
            println!("  x{sign}: {}", s.to_json());
        }
    }
    Ok(())
}
