//! The non-simplicity pipeline on a synthetic pair, and on a user-supplied
//! pair when `GRIDHFK_USER_PAIR` names a directory with `l1.grid`, `l2.grid`.

use gridhfk::corpus;
use gridhfk::invariants::{nonsimplicity_pipeline, InvariantOptions};
use gridhfk::moves::{apply_move, Corner, GridMove, StabType};
use gridhfk::Marker;

fn main() -> gridhfk::Result<()> {
    let opts = InvariantOptions::default();
    let t = corpus::trefoil();
    let positive = GridMove::Stabilize {
        column: 1,
        row: t.x_rows()[0] + 1,
        kind: StabType::new(Marker::X, Corner::SW),
    };
    let a = apply_move(&t, &positive)?;
    let r = nonsimplicity_pipeline(&a, &corpus::unknot(), 1, &opts)?;
    println!("synthetic: {}", r.to_json());
    let r = nonsimplicity_pipeline(&corpus::trefoil(), &corpus::trefoil(), 2, &opts)?;
    println!("identical: {}", r.to_json());
    if let Some(pair) = corpus::user_pair_from_env() {
        let [l1, l2] = pair?;
        for copies in 1..=2 {
            let r = nonsimplicity_pipeline(&l1.grid, &l2.grid, copies, &opts)?;
            println!("user pair, {copies} copies: {}", r.to_json());
        }
    }
    Ok(())
}
