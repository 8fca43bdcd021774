//! Connected sums of built-in grids compared with their factors.

use gridhfk::corpus;
use gridhfk::homology::HomologyOptions;
use gridhfk::invariants::kunneth_check;

fn main() -> gridhfk::Result<()> {
    let pairs = [
        ("unknot", "unknot"),
        ("trefoil", "unknot"),
        ("trefoil", "figure-eight"),
        ("trefoil", "trefoil"),
    ];
    for (a, b) in pairs {
        let g1 = corpus::find(a).expect("built in").grid;
        let g2 = corpus::find(b).expect("built in").grid;
        let r = kunneth_check(&g1, &g2, &HomologyOptions::default())?;
        println!("{a} # {b}:");
        println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("json"));
        let sl = |g: &gridhfk::GridDiagram| g.classical_invariants().map(|c| c.sl_plus);
        println!("  sl: {} + {} + 1 = {}\n", sl(&g1)?, sl(&g2)?, sl(&r.sum)?);
    }
    Ok(())
}
