// The graph on reduced words joined by single braid or commutation moves.
//
// `cargo run --example word_graph`

use stairgraph::perm;
use stairgraph::report::findings_text;
use stairgraph::rwgraph;

pub fn run_example() -> stairgraph::Result<()> {
    for ell in 3..=6 {
        let report = rwgraph::verify_structure(ell)?;
        print!("{}", findings_text(&report.findings()));
    }
    let g = rwgraph::build_rwgraph(&perm::z_permutation(4)?)?;
    println!("{}", rwgraph::export_dot(&g));
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
