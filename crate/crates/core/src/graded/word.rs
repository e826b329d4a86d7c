use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::ops::Index;

use smallvec::SmallVec;

use super::{GradedError, Parity};

/// A named generator of the free algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
    /// Position in the declared alphabet; induces the canonical order.
    pub ordinal: u16,
}

impl Generator {
    pub fn letter(&self) -> Letter {
        Letter::new(self.ordinal, self.parity)
    }
}

/// A generator as it occurs inside a word: its ordinal plus its parity, so
/// sign computations never need to consult the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub ordinal: u16,
    pub parity: Parity,
}

impl Letter {
    pub fn new(ordinal: u16, parity: Parity) -> Self {
        Letter { ordinal, parity }
    }
}

type Letters = SmallVec<[Letter; 8]>;

/// A nonempty word `v_{i_1} ... v_{i_n}`; the free Zinbiel basis monomial.
///
/// Words order by length first, then lexicographically by ordinal.
#[derive(Debug, Clone)]
pub struct Word {
    letters: Letters,
    parity: Parity,
    packed: Option<u64>,
}

/// Short words (at most 8 letters, ordinals below 127) also have a `u64`
/// key: one nonzero byte `2·ordinal + parity + 1` per letter, most
/// significant first. Keys compare exactly like the canonical word order,
/// and the word can be rebuilt from its key alone.
pub(crate) mod packed {
    use super::{Letter, Parity};

    pub const MAX_LEN: usize = 8;

    pub fn code(l: Letter) -> Option<u64> {
        (l.ordinal < 127).then(|| 2 * l.ordinal as u64 + l.parity.bit() as u64 + 1)
    }

    pub fn key(letters: &[Letter]) -> Option<u64> {
        if letters.len() > MAX_LEN {
            return None;
        }
        letters.iter().try_fold(0u64, |acc, &l| Some(acc << 8 | code(l)?))
    }

    pub fn len(key: u64) -> usize {
        (64 - key.leading_zeros() as usize).div_ceil(8)
    }

    /// The key of the word `a` followed by the `b_len` letters of `b`.
    pub fn join(a: u64, b: u64, b_len: usize) -> u64 {
        if b_len == 0 {
            a
        } else if a == 0 {
            b
        } else {
            a << (8 * b_len) | b
        }
    }

    pub fn letters(key: u64) -> impl Iterator<Item = Letter> {
        let n = len(key);
        (0..n).rev().map(move |k| {
            let c = (key >> (8 * k)) & 0xff;
            Letter::new(((c - 1) / 2) as u16, Parity::from_bit(((c - 1) % 2) as u8))
        })
    }
}

impl Word {
    fn assemble(letters: Letters, parity: Parity) -> Self {
        Word { packed: packed::key(&letters), letters, parity }
    }

    pub(crate) fn from_packed(key: u64) -> Self {
        let letters: Letters = packed::letters(key).collect();
        Word {
            parity: Parity::sum(letters.iter().map(|l| l.parity)),
            letters,
            packed: Some(key),
        }
    }

    pub(crate) fn packed_key(&self) -> Option<u64> {
        self.packed
    }

    /// Panics on an empty slice: the free algebra has no unit.
    pub fn new(letters: &[Letter]) -> Self {
        assert!(!letters.is_empty(), "words have length at least one");
        Word::assemble(letters.into(), Parity::sum(letters.iter().map(|l| l.parity)))
    }

    /// Caller guarantees `parity` is the sum of the letter parities.
    pub(crate) fn with_parity(letters: &[Letter], parity: Parity) -> Self {
        debug_assert!(!letters.is_empty());
        debug_assert_eq!(parity, Parity::sum(letters.iter().map(|l| l.parity)));
        Word::assemble(letters.into(), parity)
    }

    pub fn try_new(letters: &[Letter]) -> Option<Self> {
        (!letters.is_empty()).then(|| Word::new(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Word::new(&[l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn last(&self) -> Letter {
        self.letters[self.letters.len() - 1]
    }

    /// The word with its last letter removed, or `None` for a single letter.
    pub fn init(&self) -> Option<Word> {
        Word::try_new(&self.letters[..self.letters.len() - 1])
    }

    pub fn push(&self, l: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(l);
        Word::assemble(letters, self.parity + l.parity)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::assemble(letters, self.parity + other.parity)
    }

    /// Swap the letters at positions `i` and `i + 1`.
    pub fn swap_adjacent(&self, i: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.swap(i, i + 1);
        Word::assemble(letters, self.parity)
    }

    /// The word `w_{σ(0)} w_{σ(1)} ...`; `perm` must be a bijection.
    pub fn permute(&self, perm: &[usize]) -> Result<Word, GradedError> {
        check_permutation(perm, self.len())?;
        let letters: Letters = perm.iter().map(|&i| self.letters[i]).collect();
        Ok(Word::assemble(letters, self.parity))
    }
}

impl Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.letters[i]
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        match (self.packed, other.packed) {
            (Some(x), Some(y)) => x == y,
            _ => self.letters == other.letters,
        }
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.packed {
            Some(key) => state.write_u64(key),
            None => self.letters.hash(state),
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn word_parity(w: &Word) -> Parity {
    w.parity()
}

/// Shorter words first; equal lengths compare lexicographically by ordinal.
pub fn canonical_compare(a: &Word, b: &Word) -> Ordering {
    if let (Some(x), Some(y)) = (a.packed, b.packed) {
        return x.cmp(&y);
    }
    a.len().cmp(&b.len()).then_with(|| {
        a.letters
            .iter()
            .map(|l| l.ordinal)
            .cmp(b.letters.iter().map(|l| l.ordinal))
    })
}

fn check_permutation(perm: &[usize], len: usize) -> Result<(), GradedError> {
    let malformed = || GradedError::MalformedPermutation {
        perm: perm.to_vec(),
        len,
    };
    if perm.len() != len {
        return Err(malformed());
    }
    let mut seen = vec![false; len];
    for &i in perm {
        if i >= len || std::mem::replace(&mut seen[i], true) {
            return Err(malformed());
        }
    }
    Ok(())
}

/// Koszul sign of rearranging `w` into `w_{σ(0)} w_{σ(1)} ...`: `(-1)^φ` where
/// φ sums `|w_{σ_i}||w_{σ_j}|` over the inversions `i < j, σ_i > σ_j`.
pub fn koszul_sign(perm: &[usize], w: &Word) -> Result<i64, GradedError> {
    check_permutation(perm, w.len())?;
    let mut phi = 0u32;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                phi += (w[perm[i]].parity * w[perm[j]].parity).bit() as u32;
            }
        }
    }
    Ok(if phi % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::*;

    fn l(o: u16, p: Parity) -> Letter {
        Letter::new(o, p)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn parity_of_words() {
        assert_eq!(word_parity(&Word::new(&[l(0, Odd)])), Odd);
        assert_eq!(word_parity(&Word::new(&[l(0, Odd), l(1, Even)])), Odd);
        assert_eq!(word_parity(&Word::new(&[l(0, Odd), l(0, Odd)])), Even);
    }

    #[test]
    fn koszul_examples() {
        let odd2 = Word::new(&[l(0, Odd), l(1, Odd)]);
        let mixed = Word::new(&[l(0, Odd), l(1, Even)]);
        assert_eq!(koszul_sign(&[0, 1], &odd2).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &odd2).unwrap(), -1);
        assert_eq!(koszul_sign(&[1, 0], &mixed).unwrap(), 1);
        assert!(matches!(
            koszul_sign(&[0, 0], &odd2),
            Err(GradedError::MalformedPermutation { .. })
        ));
        assert!(koszul_sign(&[0], &odd2).is_err());
        assert!(koszul_sign(&[0, 2], &odd2).is_err());
    }

    #[test]
    fn koszul_sign_is_multiplicative() {
        for n in 3..=4 {
            for bits in 0..(1u32 << n) {
                let letters: Vec<Letter> = (0..n)
                    .map(|i| l(i as u16, Parity::from_bit((bits >> i) as u8)))
                    .collect();
                let w = Word::new(&letters);
                let perms = permutations(n);
                for s in &perms {
                    let ws = w.permute(s).unwrap();
                    for t in &perms {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        assert_eq!(ws.permute(t).unwrap(), w.permute(&st).unwrap());
                        assert_eq!(
                            koszul_sign(&st, &w).unwrap(),
                            koszul_sign(s, &w).unwrap() * koszul_sign(t, &ws).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_order_examples() {
        let x = l(0, Even);
        let y = l(1, Odd);
        let wx = Word::new(&[x]);
        let wxy = Word::new(&[x, y]);
        let wyx = Word::new(&[y, x]);
        assert_eq!(canonical_compare(&wx, &wxy), Ordering::Less);
        assert_eq!(canonical_compare(&wxy, &wyx), Ordering::Less);
        assert_eq!(canonical_compare(&wxy, &wxy.clone()), Ordering::Equal);
    }

    #[test]
    fn canonical_order_is_strict_total() {
        let a = l(0, Even);
        let b = l(1, Odd);
        let mut words = Vec::new();
        for n in 1..=3 {
            for bits in 0..(1u32 << n) {
                let ls: Vec<Letter> = (0..n).map(|i| if bits >> i & 1 == 0 { a } else { b }).collect();
                words.push(Word::new(&ls));
            }
        }
        for u in &words {
            for v in &words {
                let uv = canonical_compare(u, v);
                assert_eq!(uv, canonical_compare(v, u).reverse());
                assert_eq!(uv == Ordering::Equal, u == v);
                for w in &words {
                    if uv == Ordering::Less && canonical_compare(v, w) == Ordering::Less {
                        assert_eq!(canonical_compare(u, w), Ordering::Less);
                    }
                }
            }
        }
    }
}
