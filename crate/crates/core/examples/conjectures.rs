// Audits of the two binomial-ideal conjectures.
//
// `cargo run --example conjectures`

use stairgraph::toric;

pub fn run_example() -> stairgraph::Result<()> {
    for ell in [5, 6] {
        let r = toric::conjecture1_check(ell)?;
        print!("{}", r.to_markdown());
    }
    for ell in 2..=5 {
        let r = toric::conjecture2_check(ell)?;
        let h = &r.hilbert;
        println!("cartoon ell={ell}: dimension {}, degree {}, oracle agrees {}", h.dimension, h.degree, r.oracle_agrees);
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
