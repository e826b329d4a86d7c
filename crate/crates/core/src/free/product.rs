use num_traits::One;

use super::shuffle::shuffle_into;
use rustc_hash::FxHashMap;

use super::{Alphabet, Multidegree};
use crate::graded::{swap_sign, Accumulator, FreeElement, Parity, Rational, Word};
use crate::superalgebra::SuperAlgebra;

/// Zinbiel product of basis words: `u ∘ v = (u ⧢ v') v_q`, and `u v_q` when
/// `v` is a single letter.
pub fn zinbiel_words(u: &Word, v: &Word) -> FreeElement {
    let mut out = Accumulator::new();
    zinbiel_words_into(u, v, &Rational::one(), &mut out);
    out.finish()
}

fn zinbiel_words_into(u: &Word, v: &Word, c: &Rational, out: &mut Accumulator) {
    let (init, last) = v.letters().split_at(v.len() - 1);
    shuffle_into(u.letters(), init, last, c, out);
}

/// Extends `on_words(a, b, c, out)`, which pushes the terms of `c · (a op b)`.
fn bilinear_into<F>(u: &FreeElement, v: &FreeElement, c: &Rational, out: &mut Accumulator, on_words: F)
where
    F: Fn(&Word, &Word, &Rational, &mut Accumulator),
{
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            on_words(a, b, &(c * &(ca * cb)), out);
        }
    }
}

fn commutator_words_into(a: &Word, b: &Word, c: &Rational, out: &mut Accumulator) {
    zinbiel_words_into(a, b, c, out);
    zinbiel_words_into(b, a, &-(c * swap_sign(a.parity(), b.parity())), out);
}

fn anticommutator_words_into(a: &Word, b: &Word, c: &Rational, out: &mut Accumulator) {
    zinbiel_words_into(a, b, c, out);
    zinbiel_words_into(b, a, &(c * swap_sign(a.parity(), b.parity())), out);
}

/// Adds `c · (u ∘ v)` to `out`.
pub fn zinbiel_product_into(u: &FreeElement, v: &FreeElement, c: &Rational, out: &mut Accumulator) {
    bilinear_into(u, v, c, out, zinbiel_words_into)
}

/// Adds `c · [u, v]` to `out`.
pub fn super_commutator_into(u: &FreeElement, v: &FreeElement, c: &Rational, out: &mut Accumulator) {
    bilinear_into(u, v, c, out, commutator_words_into)
}

/// Adds `c · {u, v}` to `out`.
pub fn super_anticommutator_into(u: &FreeElement, v: &FreeElement, c: &Rational, out: &mut Accumulator) {
    bilinear_into(u, v, c, out, anticommutator_words_into)
}

fn collect(f: impl FnOnce(&mut Accumulator)) -> FreeElement {
    let mut out = Accumulator::new();
    f(&mut out);
    out.finish()
}

pub fn zinbiel_product(u: &FreeElement, v: &FreeElement) -> FreeElement {
    collect(|out| zinbiel_product_into(u, v, &Rational::one(), out))
}

/// `[u, v] = u∘v - (-1)^{|u||v|} v∘u`, extended bilinearly over the
/// parity-homogeneous word components of both operands.
pub fn super_commutator(u: &FreeElement, v: &FreeElement) -> FreeElement {
    collect(|out| super_commutator_into(u, v, &Rational::one(), out))
}

/// `{u, v} = u∘v + (-1)^{|u||v|} v∘u`; coincides with the shuffle product.
pub fn super_anticommutator(u: &FreeElement, v: &FreeElement) -> FreeElement {
    collect(|out| super_anticommutator_into(u, v, &Rational::one(), out))
}

/// The left-bracketed product `(...(a_1 ∘ a_2) ...) ∘ a_n`.
pub fn left_nested(factors: &[FreeElement]) -> FreeElement {
    let mut iter = factors.iter();
    let Some(first) = iter.next() else {
        return FreeElement::zero();
    };
    iter.fold(first.clone(), |acc, f| zinbiel_product(&acc, f))
}

/// The free Zinbiel superalgebra modulo words longer than `max_len`, as a
/// structure-constant algebra. Basis: the words of length `1..=max_len`,
/// even words first, each block in length-then-word order.
pub fn truncated_free_algebra(alphabet: &Alphabet, max_len: u32) -> (Vec<Word>, SuperAlgebra) {
    let mut words: Vec<Word> = (1..=max_len)
        .flat_map(|t| Multidegree::all_with_total(alphabet.len(), t))
        .flat_map(|d| d.words(alphabet))
        .collect();
    words.sort_by(|a, b| (a.parity().is_odd(), a.len(), a).cmp(&(b.parity().is_odd(), b.len(), b)));
    let index: FxHashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut constants = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.len() + v.len() <= max_len as usize {
                for (w, c) in zinbiel_words(u, v).iter() {
                    constants.push(((i, j, index[w]), c.clone()));
                }
            }
        }
    }
    let even = words.iter().filter(|w| !w.parity().is_odd()).count();
    let alg = SuperAlgebra::from_constants(even, words.len() - even, Parity::Even, constants)
        .expect("words are homogeneous");
    (words, alg)
}
