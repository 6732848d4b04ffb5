// Two-colour separations of staircase graphs and the balance bound.
//
// `cargo run --example colour_separation`

use stairgraph::chroma;
use stairgraph::partition::staircase;

pub fn run_example() -> stairgraph::Result<()> {
    for ell in 1..=8 {
        let s = chroma::colour_separation(&staircase(ell)?)?;
        println!("ell={ell}: mu={} kappa={} balance={}", s.mu, s.kappa, s.balance);
    }
    let bound = chroma::balance_bound_check(50)?;
    println!(
        "ell=1..50: within bound {}, equality where predicted {}",
        bound.all_within_bound(),
        bound.equality_as_predicted()
    );
    for k in 1..=10 {
        assert!(chroma::shared_balance_check(k)?);
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
