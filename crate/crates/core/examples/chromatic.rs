// Chromatic polynomials by deletion–contraction against the closed forms.
//
// `cargo run --example chromatic`

use stairgraph::partition::staircase;
use stairgraph::{blambda, chroma, SimpleGraph};

pub fn run_example() -> stairgraph::Result<()> {
    for d in 1..=4 {
        let dc = chroma::chromatic_polynomial_dc(&SimpleGraph::ladder(d))?;
        println!("{d} squares: {} (closed form agrees: {})", dc.to_string_in("k"), dc == chroma::chi_c4_chain(d as u32)?);
    }
    for ell in 3..=6 {
        let a = chroma::chi_blambda_audit(ell)?;
        println!(
            "ell={ell}: {} vertices, degree {} vs closed form {}, polynomials equal: {}",
            a.vertices, a.degree.observed, a.degree.claimed, a.polynomial_matches
        );
        let b = blambda::build_blambda(&staircase(ell)?)?;
        println!("  chromatic number {}", chroma::chromatic_number(&b.to_simple())?);
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
