//! Dumps the nonzero boundary blocks of the trefoil's fully blocked complex in
//! coordinate text format.

use gridhfk::corpus;
use gridhfk::homology::{BigradedComplex, GridComplex, HomologyOptions};

fn main() -> gridhfk::Result<()> {
    let cx = GridComplex::new(&corpus::trefoil(), &HomologyOptions::default())?;
    let complex = BigradedComplex::build(&cx, None);
    assert!(complex.squares_to_zero());
    for (gr, block) in &complex.boundaries {
        println!("block leaving {gr}: {} x {}", block.rows(), block.cols());
        if block.nnz() > 0 && block.nnz() <= 24 {
            print!("{}", block.to_coordinate_text());
        }
    }
    Ok(())
}
