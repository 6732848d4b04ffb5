//! Permutations in one-line notation and their reduced words.
//!
//! Letters are 1-indexed: `s_i` swaps positions `i` and `i + 1`. A word
//! `a_1 a_2 ... a_r` denotes the product `s_{a_1} s_{a_2} ... s_{a_r}`, which
//! acting on the identity's one-line notation swaps positions `a_1`, then
//! `a_2`, and so on.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::MalformedPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::MalformedPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::MalformedPermutation(format!("duplicate value {v}")));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    /// Parses a digit string such as `"35124"` (degrees up to 9).
    pub fn parse(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::MalformedPermutation(format!("non-digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right descents: 1-indexed positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `w * s_i`, i.e. swap positions `i` and `i + 1`.
    pub fn times_simple(&self, i: usize) -> Result<Self> {
        check_letter(i, self.degree())?;
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Ok(Self { word })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() > 9 { "," } else { "" };
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

fn check_letter(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::domain(format!(
            "generator index {i} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// A word in the simple transpositions. Ordered lexicographically on letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Digit-string label, e.g. `"42312"`. Words with a letter of 10 or more
    /// are written dot-separated so the label stays unambiguous.
    pub fn label(&self) -> String {
        if self.letters.iter().all(|&a| a < 10) {
            self.letters.iter().map(|a| a.to_string()).collect()
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            parts.join(".")
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let letters = if s.contains('.') {
            s.split('.')
                .map(|p| p.parse::<usize>().map_err(|e| Error::domain(e.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::domain(format!("non-digit {c:?} in word")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self { letters })
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl From<ReducedWord> for String {
    fn from(w: ReducedWord) -> Self {
        w.label()
    }
}

impl TryFrom<String> for ReducedWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Self::parse(&s)
    }
}

/// The one-line word `2, 3, ..., r-3, r, r-2, r-1, 1` of degree `r`.
pub fn z_permutation(r: usize) -> Result<Permutation> {
    if r < 4 {
        return Err(Error::domain(format!("z-permutation needs r >= 4, got {r}")));
    }
    let mut word: Vec<usize> = (2..=r - 3).collect();
    word.extend([r, r - 2, r - 1, 1]);
    Permutation::new(word)
}

/// Whether the z-permutation of degree `r` has exactly `r + 1` inversions.
pub fn verify_z_length(r: usize) -> Result<bool> {
    Ok(z_permutation(r)?.length() == r + 1)
}

/// Composes `s_{a_1} ... s_{a_r}` starting from the identity of degree `n`.
pub fn apply_word(letters: &[usize], n: usize) -> Result<Permutation> {
    let mut word: Vec<usize> = (1..=n).collect();
    if n == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    for &a in letters {
        check_letter(a, n)?;
        word.swap(a - 1, a);
    }
    Permutation::new(word)
}

/// All reduced words of `w`, in lexicographic order, with the default caps.
pub fn enumerate_reduced_words(w: &Permutation) -> Result<Vec<ReducedWord>> {
    enumerate_reduced_words_with(w, &Limits::default())
}

/// Reduced words by peeling right descents: `R(w)` is the union over descents
/// `i` of `{u.i : u in R(w s_i)}`, with `R(e) = {empty}`. Memoized on the
/// one-line word.
pub fn enumerate_reduced_words_with(w: &Permutation, limits: &Limits) -> Result<Vec<ReducedWord>> {
    if w.degree() > limits.max_degree {
        return Err(Error::resource(
            format!("permutation degree {}", w.degree()),
            limits.max_degree,
        ));
    }
    let mut memo: HashMap<Permutation, Vec<Vec<usize>>> = HashMap::new();
    let mut words = peel(w, &mut memo, limits.max_words)?;
    words.sort();
    words.dedup();
    Ok(words.into_iter().map(ReducedWord::new).collect())
}

fn peel(
    w: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<usize>>>,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    if let Some(hit) = memo.get(w) {
        return Ok(hit.clone());
    }
    let out = if w.is_identity() {
        vec![Vec::new()]
    } else {
        let mut out = Vec::new();
        for i in w.descents() {
            let shorter = w.times_simple(i)?;
            for mut u in peel(&shorter, memo, cap)? {
                u.push(i);
                out.push(u);
                if out.len() > cap {
                    return Err(Error::resource("reduced-word count", cap));
                }
            }
        }
        out
    };
    memo.insert(w.clone(), out.clone());
    Ok(out)
}

/// Count of reduced words grouped by their last letter.
pub fn last_letter_split(words: &[ReducedWord]) -> BTreeMap<usize, usize> {
    let mut split = BTreeMap::new();
    for w in words {
        if let Some(&last) = w.letters().last() {
            *split.entry(last).or_insert(0) += 1;
        }
    }
    split
}

/// Reduced-word set as a JSON array of digit strings.
pub fn words_to_json(words: &[ReducedWord]) -> String {
    serde_json::to_string(words).expect("string list serializes")
}
