// Truncated generating-function comparisons.
//
// `cargo run --example generating_functions`

use stairgraph::{blambda, partition};

pub fn run_example() -> stairgraph::Result<()> {
    let tri = partition::triangular_gf_check(10)?;
    println!("{}: all match {}", tri.description, tri.all_match());
    let fam = blambda::family_gf_check(5, 5)?;
    println!("{}", fam.description);
    for row in fam.mismatches() {
        println!(
            "  z^{} e^{}: series {} vs term sum {}",
            row.z_degree,
            row.e_degree.unwrap_or(0),
            row.closed_form,
            row.term_sum
        );
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
