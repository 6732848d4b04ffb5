// Cell-adjacency graphs of staircase shapes, their match with the word
// graphs, parity pairs and the parity matrix.
//
// `cargo run --example staircase_graph`

use stairgraph::partition::{checkerboard_ascii, staircase};
use stairgraph::{blambda, perm, rwgraph};

pub fn run_example() -> stairgraph::Result<()> {
    let lam = staircase(4)?;
    print!("{}", checkerboard_ascii(&lam));
    let b = blambda::build_blambda(&lam)?;
    println!(
        "B{lam}: layers {:?}, {} edges, pseudo-multipartite {}",
        b.layer_sizes(),
        b.edge_count(),
        b.is_pseudo_multipartite()
    );
    for ell in 3..=6 {
        let g = rwgraph::build_rwgraph(&perm::z_permutation(ell + 1)?)?;
        let b = blambda::build_blambda(&staircase(ell)?)?;
        println!("ell={ell}: word graph isomorphic to B: {}", blambda::iso_check(&g, &b)?);
    }
    let p = blambda::is_parity_pair(&staircase(5)?, &staircase(6)?)?;
    println!("(5) and (6) parity conditions agree: {}", p.all_agree);
    for k in [1u64, 2, 10] {
        let m = blambda::parity_matrix(k)?;
        println!("k={k}: det {} column sums {:?}", m.determinant(), m.column_sums());
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
