//! Alexander polynomials mod 2, including a product under connected sum.

use gridhfk::corpus;
use gridhfk::homology::alexander_polynomial;
use gridhfk::moves::connect_sum_aligned;

fn main() -> gridhfk::Result<()> {
    for e in corpus::builtin() {
        println!("{:<14} {}", e.name, alexander_polynomial(&e.grid)?);
    }
    let sum = connect_sum_aligned(&corpus::trefoil(), &corpus::figure_eight())?;
    println!("{:<14} {}", "trefoil#4_1", alexander_polynomial(&sum)?);
    Ok(())
}
