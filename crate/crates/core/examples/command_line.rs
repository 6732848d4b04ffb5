// Driving the command-line front end from code.
//
// `cargo run --example command_line`

use stairgraph::cli;

pub fn run_example() -> stairgraph::Result<()> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["stairgraph", "verify-all", "--ell", "3..5"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}");
    let strict = cli::run(["stairgraph", "graph", "--ell", "3", "--strict"], &mut Vec::new(), &mut Vec::new());
    println!("strict exit {strict}");
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
