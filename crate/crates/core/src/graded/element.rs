use std::collections::btree_map::{self, Entry};
use std::collections::{hash_map, BTreeMap};

use rustc_hash::FxHashMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::{GradedError, Letter, Parity, Rational, Word};

/// A finite linear combination of words with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements. Iteration follows the canonical word order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeElement {
    terms: BTreeMap<Word, Rational>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    pub fn from_word(w: Word) -> Self {
        FreeElement::term(w, Rational::from(1))
    }

    pub fn letter(l: Letter) -> Self {
        FreeElement::from_word(Word::letter(l))
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut out = FreeElement::zero();
        out.add_term(w, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut out = FreeElement::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    /// Sums the coefficients of repeated words; the input may be in any order.
    pub fn from_unsorted(terms: Vec<(Word, Rational)>) -> Self {
        let mut acc = Accumulator::with_capacity(terms.len());
        for (w, c) in terms {
            acc.add(w, c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The least word in canonical order together with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FreeElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, d) in other.iter() {
            self.add_term(w.clone(), c * d);
        }
    }

    pub fn add_assign_ref(&mut self, other: &FreeElement) {
        for (w, d) in other.iter() {
            self.add_term(w.clone(), d.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), c * d)).collect(),
        }
    }

    /// Apply a word-to-word map that is injective and multiplies by a sign.
    pub fn map_words<F: FnMut(&Word) -> (Word, bool)>(&self, mut f: F) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w, c) in self.iter() {
            let (image, negate) = f(w);
            out.add_term(image, if negate { -c } else { c.clone() });
        }
        out
    }

    /// Append a letter to every word (right multiplication by a generator).
    pub fn push_letter(&self, l: Letter) -> FreeElement {
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.push(l), c.clone())).collect(),
        }
    }

    /// The common parity of all words, if there is one.
    pub fn parity(&self) -> Option<Parity> {
        let mut words = self.words();
        let first = words.next()?.parity();
        words.all(|w| w.parity() == first).then_some(first)
    }

    /// Parity of a homogeneous element. Zero counts as even.
    pub fn homogeneous_parity(&self) -> Result<Parity, GradedError> {
        if self.is_zero() {
            return Ok(Parity::Even);
        }
        self.parity().ok_or(GradedError::Inhomogeneous)
    }

    /// Split into its even and odd components.
    pub fn by_parity(&self) -> [FreeElement; 2] {
        let mut parts = [FreeElement::zero(), FreeElement::zero()];
        for (w, c) in self.iter() {
            parts[w.parity().bit() as usize]
                .terms
                .insert(w.clone(), c.clone());
        }
        parts
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.words().map(Word::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.words().map(Word::len).max()
    }
}

/// Hash-based scratch space for sums with many repeated words.
#[derive(Debug, Default)]
pub struct Accumulator {
    packed: FxHashMap<u64, Rational>,
    terms: FxHashMap<Word, Rational>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Accumulator {
            packed: FxHashMap::with_capacity_and_hasher(n, Default::default()),
            terms: FxHashMap::default(),
        }
    }

    pub(crate) fn add_packed(&mut self, key: u64, c: &Rational) {
        match self.packed.entry(key) {
            hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
        }
    }

    pub fn add(&mut self, w: Word, c: Rational) {
        if let Some(key) = w.packed_key() {
            return self.add_packed(key, &c);
        }
        match self.terms.entry(w) {
            hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            hash_map::Entry::Occupied(mut e) => *e.get_mut() += &c,
        }
    }

    /// Whether every accumulated coefficient cancelled.
    pub fn is_zero(&self) -> bool {
        self.packed.values().all(Zero::is_zero) && self.terms.values().all(Zero::is_zero)
    }

    /// Adds `c · u`.
    pub fn add_scaled(&mut self, u: &FreeElement, c: &Rational) {
        for (w, d) in u.iter() {
            self.add(w.clone(), c * d);
        }
    }

    pub fn finish(self) -> FreeElement {
        let mut terms: Vec<(Word, Rational)> = self
            .packed
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Word::from_packed(k), c))
            .chain(self.terms.into_iter().filter(|(_, c)| !c.is_zero()))
            .collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        FreeElement {
            terms: terms.into_iter().collect(),
        }
    }
}

impl FromIterator<(Word, Rational)> for FreeElement {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        FreeElement::from_terms(iter)
    }
}

impl Add<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for FreeElement {
    type Output = FreeElement;
    fn add(mut self, rhs: FreeElement) -> FreeElement {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::from(-1));
        out
    }
}

impl Sub for FreeElement {
    type Output = FreeElement;
    fn sub(mut self, rhs: FreeElement) -> FreeElement {
        self.add_scaled(&rhs, &Rational::from(-1));
        self
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(bits: &[u8]) -> Word {
        let ls: Vec<Letter> = bits
            .iter()
            .map(|&b| Letter::new(b as u16, Parity::from_bit(b)))
            .collect();
        Word::new(&ls)
    }

    fn element() -> impl Strategy<Value = FreeElement> {
        prop::collection::vec(
            (prop::collection::vec(0u8..3, 1..4), -3i64..=3),
            0..6,
        )
        .prop_map(|ts| {
            ts.into_iter()
                .map(|(w, c)| (word(&w), Rational::from(c)))
                .collect()
        })
    }

    #[test]
    fn cancellation_removes_terms() {
        let w = word(&[0, 1]);
        let mut e = FreeElement::term(w.clone(), Rational::from(2));
        e.add_term(w, Rational::from(-2));
        assert!(e.is_zero());
        assert_eq!(e, FreeElement::zero());
    }

    #[test]
    fn homogeneity_metadata() {
        let even = FreeElement::from_word(word(&[0, 2]));
        let odd = FreeElement::from_word(word(&[1]));
        assert_eq!(even.parity(), Some(Parity::Even));
        let mixed = &even + &odd;
        assert_eq!(mixed.parity(), None);
        assert_eq!(mixed.homogeneous_parity(), Err(GradedError::Inhomogeneous));
        let [e, o] = mixed.by_parity();
        assert_eq!(e, even);
        assert_eq!(o, odd);
    }

    proptest! {
        #[test]
        fn addition_is_an_abelian_group(a in element(), b in element(), c in element()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &FreeElement::zero(), a.clone());
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
