//! Sparse F2 linear algebra: rank, solving and the coordinate text dump.

use gridhfk::SparseF2Matrix;

fn main() -> gridhfk::Result<()> {
    // boundary of a filled triangle: edges x vertices, transposed
    let d = SparseF2Matrix::from_entries(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (0, 2), (2, 2)])?;
    println!("rank {}", d.rank());
    print!("{}", d.to_coordinate_text());
    let b = [true, false, true];
    match d.solve(&b)? {
        Some(x) => println!("preimage of {b:?}: {x:?}"),
        None => println!("{b:?} is not in the column span"),
    }
    println!("odd vertex set solvable: {}", d.solve(&[true, false, false])?.is_some());
    Ok(())
}
