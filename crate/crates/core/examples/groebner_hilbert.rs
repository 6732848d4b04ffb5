// Gröbner bases of pure-difference binomial ideals and Hilbert data of
// their initial ideals.
//
// `cargo run --example groebner_hilbert`

use stairgraph::toric::{self, Binomial, MonomialOrder};

pub fn run_example() -> stairgraph::Result<()> {
    // two quadrics on the rational normal curve of degree 3
    let gens = vec![
        Binomial::from_indices(4, &[0, 2], &[1, 1])?,
        Binomial::from_indices(4, &[0, 3], &[1, 2])?,
    ];
    let run = toric::buchberger_binomial_with(&gens, MonomialOrder::Grevlex, &stairgraph::Limits::default(), true)?;
    for (b, cert) in run.basis.iter().zip(run.certificates.as_deref().unwrap_or(&[])) {
        println!("{b}   certified: {}", cert.proves(&gens, b));
    }
    println!("all S-pairs reduce: {}", toric::all_s_pairs_reduce(&run.basis, MonomialOrder::Grevlex));
    let ini = toric::initial_ideal(&run.basis, MonomialOrder::Grevlex, 4)?;
    let h = toric::hilbert(&ini)?;
    println!(
        "initial ideal {:?}: numerator {}, dimension {}, degree {}",
        ini.display_with(&toric::index_names(4)),
        h.numerator.to_string_in("t"),
        h.dimension,
        h.degree
    );
    println!("series {:?}", h.series(6));
    println!("by counting {:?}", toric::standard_monomial_counts(&ini, 6));
    let probe = Binomial::from_indices(4, &[1, 3], &[2, 2])?;
    match toric::normal_form(&probe, &run.basis, MonomialOrder::Grevlex) {
        Some(nf) => println!("{probe} reduces to {nf}"),
        None => println!("{probe} lies in the ideal"),
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
