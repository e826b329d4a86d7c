use std::fmt;

use super::{Alphabet, FreeError};
use crate::graded::{FreeElement, Letter, Word};

/// Occurrence counts of each generator, indexed by ordinal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multidegree {
    counts: Vec<u32>,
}

impl Multidegree {
    pub fn new(counts: Vec<u32>) -> Self {
        Multidegree { counts }
    }

    pub fn zero(n: usize) -> Self {
        Multidegree { counts: vec![0; n] }
    }

    pub fn of_word(w: &Word, n: usize) -> Self {
        let mut counts = vec![0; n];
        for l in w.letters() {
            counts[l.ordinal as usize] += 1;
        }
        Multidegree { counts }
    }

    /// The common multidegree of all words of `e`; `None` for zero or mixed
    /// elements.
    pub fn of_element(e: &FreeElement, n: usize) -> Option<Self> {
        let mut words = e.words();
        let first = Multidegree::of_word(words.next()?, n);
        words.all(|w| Multidegree::of_word(w, n) == first).then_some(first)
    }

    /// Parse `x:2,y:2`; generators not mentioned get count 0.
    pub fn parse(src: &str, alphabet: &Alphabet) -> Result<Self, FreeError> {
        let mut counts = vec![0; alphabet.len()];
        for part in src.split(',').filter(|s| !s.trim().is_empty()) {
            let malformed = || FreeError::MalformedMultidegree(src.to_string());
            let (name, n) = part.split_once(':').ok_or_else(malformed)?;
            let l = alphabet
                .letter(name.trim())
                .ok_or_else(|| FreeError::UnboundGenerator(name.trim().to_string()))?;
            counts[l.ordinal as usize] = n.trim().parse().map_err(|_| malformed())?;
        }
        Ok(Multidegree { counts })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, l: Letter) -> u32 {
        self.counts[l.ordinal as usize]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        self.counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Multidegree::new)
    }

    /// All nonzero multidegrees `e <= self` with `e != self`, in a fixed order.
    pub fn proper_parts(&self) -> Vec<Multidegree> {
        let mut out = vec![Vec::new()];
        for &c in &self.counts {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=c).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(Multidegree::new)
            .filter(|m| !m.is_zero() && m != self)
            .collect()
    }

    /// All words with this multidegree, in canonical (lexicographic) order.
    pub fn words(&self, alphabet: &Alphabet) -> Vec<Word> {
        let letters: Vec<Letter> = alphabet.letters().collect();
        let mut remaining = self.counts.clone();
        let mut current = Vec::with_capacity(self.total());
        let mut out = Vec::new();
        fn rec(
            letters: &[Letter],
            remaining: &mut [u32],
            current: &mut Vec<Letter>,
            left: usize,
            out: &mut Vec<Word>,
        ) {
            if left == 0 {
                if let Some(w) = Word::try_new(current) {
                    out.push(w);
                }
                return;
            }
            for (i, &l) in letters.iter().enumerate() {
                if remaining[i] > 0 {
                    remaining[i] -= 1;
                    current.push(l);
                    rec(letters, remaining, current, left - 1, out);
                    current.pop();
                    remaining[i] += 1;
                }
            }
        }
        rec(&letters, &mut remaining, &mut current, self.total(), &mut out);
        out
    }

    /// All multidegrees over `n` generators with the given total.
    pub fn all_with_total(n: usize, total: u32) -> Vec<Multidegree> {
        fn rec(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if prefix.len() + 1 == n {
                prefix.push(total);
                out.push(Multidegree::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for k in (0..=total).rev() {
                prefix.push(k);
                rec(n, total - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, total, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayMultidegree(self, alphabet)
    }
}

impl std::ops::Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        Multidegree::new(self.counts.iter().zip(&rhs.counts).map(|(a, b)| a + b).collect())
    }
}

struct DisplayMultidegree<'a>(&'a Multidegree, &'a Alphabet);

impl fmt::Display for DisplayMultidegree<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .1
            .generators()
            .iter()
            .zip(&self.0.counts)
            .map(|(g, c)| format!("{}:{}", g.name, c))
            .collect();
        f.write_str(&parts.join(","))
    }
}
