// The cartoon diagram of a staircase as Graphviz text.
//
// `cargo run --example cartoon`

use stairgraph::partition::staircase;
use stairgraph::toric;

pub fn run_example() -> stairgraph::Result<()> {
    let c = toric::cartoon_diagram(&staircase(4)?)?;
    println!("weights {:?}", c.weights());
    print!("{}", c.to_dot());
    let ideal = toric::cartoon_ideal(4)?;
    for g in ideal.generator_strings() {
        println!("{g}");
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
