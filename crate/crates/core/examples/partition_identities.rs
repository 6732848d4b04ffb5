// Colour-separation partition identities, their primitive pieces and a
// truncated Graver basis of the matching weight vector.
//
// `cargo run --example partition_identities`

use stairgraph::partition::staircase;
use stairgraph::pid;

pub fn run_example() -> stairgraph::Result<()> {
    println!("reading: {}", pid::PRIMITIVITY_READING);
    for ell in 5..=7 {
        let r = pid::cspi_report(&staircase(ell)?)?;
        println!("ell={ell}: {} (primitive: {})", r.identity, r.primitive);
        for sub in &r.primitive_subidentities {
            println!("  {sub}");
        }
        println!("  parity splits contained: {}", r.contains_parity_splits);
    }
    let small = pid::make_identity(&[1, 2], &[3], 3)?;
    println!("{small} primitive: {}", pid::is_primitive(&small)?);
    let g = pid::graver_1xn(&[1, 2, 3], 2)?;
    println!("Graver basis of (1,2,3) through degree 2: {:?}", g.to_strings());
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
