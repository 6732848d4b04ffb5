// Reduced words of a permutation and of the z-permutations.
//
// `cargo run --example reduced_words`

use stairgraph::perm::{self, Permutation};

pub fn run_example() -> stairgraph::Result<()> {
    let w = Permutation::parse("35124")?;
    let words = perm::enumerate_reduced_words(&w)?;
    println!("{w} has length {} and {} reduced words:", w.length(), words.len());
    for word in &words {
        println!("  {word}");
    }
    for r in 4..=8 {
        let z = perm::z_permutation(r)?;
        let words = perm::enumerate_reduced_words(&z)?;
        let split = perm::last_letter_split(&words);
        println!("r={r}: {z} has {} reduced words, split by last letter {split:?}", words.len());
        for word in &words {
            assert_eq!(perm::apply_word(word.letters(), r)?, z);
        }
    }
    Ok(())
}

fn main() -> stairgraph::Result<()> {
    run_example()
}
