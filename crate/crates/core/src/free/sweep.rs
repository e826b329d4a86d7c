//! Exhaustive checks of the free-algebra identities over all tuples of
//! basis words up to a total degree.

use std::fmt;

use super::laws::{self, TortkaraParts};
use super::{shuffle_by_enumeration, shuffle_words, zinbiel_product, zinbiel_words, Alphabet, Multidegree};
use crate::graded::{swap_sign, FreeElement, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Zinbiel,
    ShuffleCommutativity,
    ShuffleAssociativity,
    /// The product of words against the shuffle of the right factor's initial part.
    ZinbielWordFormula,
    /// The recursive description of the shuffle of two words.
    ShuffleRecursion,
    AnticommutatorCommutativity,
    AnticommutatorAssociativity,
    CommutatorAnticommutativity,
    SuperTortkara,
}

impl Law {
    pub const ALL: [Law; 9] = [
        Law::Zinbiel,
        Law::ShuffleCommutativity,
        Law::ShuffleAssociativity,
        Law::ZinbielWordFormula,
        Law::ShuffleRecursion,
        Law::AnticommutatorCommutativity,
        Law::AnticommutatorAssociativity,
        Law::CommutatorAnticommutativity,
        Law::SuperTortkara,
    ];

    pub fn arity(self) -> usize {
        match self {
            Law::ShuffleCommutativity
            | Law::ZinbielWordFormula
            | Law::ShuffleRecursion
            | Law::AnticommutatorCommutativity
            | Law::CommutatorAnticommutativity => 2,
            Law::Zinbiel | Law::ShuffleAssociativity | Law::AnticommutatorAssociativity => 3,
            Law::SuperTortkara => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Law::Zinbiel => "zinbiel",
            Law::ShuffleCommutativity => "shuffle-commutativity",
            Law::ShuffleAssociativity => "shuffle-associativity",
            Law::ZinbielWordFormula => "zinbiel-word-formula",
            Law::ShuffleRecursion => "shuffle-recursion",
            Law::AnticommutatorCommutativity => "anticommutator-commutativity",
            Law::AnticommutatorAssociativity => "anticommutator-associativity",
            Law::CommutatorAnticommutativity => "commutator-anticommutativity",
            Law::SuperTortkara => "super-tortkara",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    pub args: Vec<Word>,
    pub residual: FreeElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub law: Law,
    pub tuples: u64,
    /// The first tuple (in enumeration order) with a nonzero residual.
    pub failure: Option<SweepFailure>,
}

impl SweepOutcome {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// `u ∘ v` rebuilt from the enumeration shuffle, as a reference.
fn zinbiel_word_reference(u: &Word, v: &Word) -> FreeElement {
    if v.len() == 1 {
        return FreeElement::from_word(u.concat(v));
    }
    let (init, last) = v.letters().split_at(v.len() - 1);
    shuffle_by_enumeration(u, &Word::new(init)).push_letter(last[0])
}

/// The shuffle of two words by the three-case recursion on first letters
/// and last letters.
fn shuffle_recursion_reference(u: &Word, v: &Word) -> FreeElement {
    let (p, q) = (u.len(), v.len());
    let e = |w: Word| FreeElement::from_word(w);
    let init = |w: &Word| Word::new(&w.letters()[..w.len() - 1]);
    let last = |w: &Word| e(Word::letter(w.last()));
    if p == 1 && q == 1 {
        let mut r = e(u.concat(v));
        r.add_scaled(&e(v.concat(u)), &swap_sign(u.parity(), v.parity()));
        return r;
    }
    if p == 1 {
        let mut r = zinbiel_product(&shuffle_words(u, &init(v)), &last(v));
        r.add_scaled(&e(v.concat(u)), &swap_sign(u.parity(), v.parity()));
        return r;
    }
    if q == 1 {
        // mirror of the previous case through commutativity
        return shuffle_recursion_reference(v, u).scale(&swap_sign(u.parity(), v.parity()));
    }
    let sign = swap_sign(u.last().parity, v.parity());
    let mut r = zinbiel_product(&shuffle_words(&init(u), v), &last(u)).scale(&sign);
    r.add_assign_ref(&zinbiel_product(&shuffle_words(u, &init(v)), &last(v)));
    r
}

fn residual2(law: Law, a: &Word, b: &Word, ea: &FreeElement, eb: &FreeElement) -> FreeElement {
    match law {
        Law::ShuffleCommutativity => laws::shuffle_commutativity(ea, eb),
        Law::ZinbielWordFormula => &zinbiel_words(a, b) - &zinbiel_word_reference(a, b),
        Law::ShuffleRecursion => &shuffle_words(a, b) - &shuffle_recursion_reference(a, b),
        Law::AnticommutatorCommutativity => laws::anticommutator_commutativity(ea, eb),
        Law::CommutatorAnticommutativity => laws::commutator_anticommutativity(ea, eb),
        _ => unreachable!("binary laws only"),
    }
}

fn residual3(law: Law, a: &FreeElement, b: &FreeElement, c: &FreeElement) -> FreeElement {
    match law {
        Law::Zinbiel => laws::zinbiel(a, b, c),
        Law::ShuffleAssociativity => laws::shuffle_associativity(a, b, c),
        Law::AnticommutatorAssociativity => laws::anticommutator_associativity(a, b, c),
        _ => unreachable!("ternary laws only"),
    }
}

/// Lengths `(l_1, ..., l_k)` with every `l_i >= 1` and sum at most `max_total`.
fn length_tuples(arity: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, arity: usize, budget: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == arity {
            out.push(prefix.clone());
            return;
        }
        let reserve = arity - prefix.len() - 1;
        for l in 1..=budget.saturating_sub(reserve) {
            prefix.push(l);
            go(prefix, arity, budget - l, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), arity, max_total, &mut out);
    out
}

/// Checks `law` on every tuple of basis words of total degree at most
/// `max_total`, stopping at the first nonzero residual.
pub fn sweep(law: Law, alphabet: &Alphabet, max_total: usize) -> SweepOutcome {
    let arity = law.arity();
    let longest = max_total.saturating_sub(arity - 1);
    let words: Vec<Vec<(Word, FreeElement)>> = (0..=longest)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            Multidegree::all_with_total(alphabet.len(), n as u32)
                .iter()
                .flat_map(|md| md.words(alphabet))
                .map(|w| (w.clone(), FreeElement::from_word(w)))
                .collect()
        })
        .collect();
    let mut tuples = 0u64;
    let fail = |args: Vec<&Word>, residual: FreeElement, tuples: u64| SweepOutcome {
        law,
        tuples,
        failure: Some(SweepFailure { args: args.into_iter().cloned().collect(), residual }),
    };
    for ls in length_tuples(arity, max_total) {
        match arity {
            2 => {
                for (a, ea) in &words[ls[0]] {
                    for (b, eb) in &words[ls[1]] {
                        tuples += 1;
                        let r = residual2(law, a, b, ea, eb);
                        if !r.is_zero() {
                            return fail(vec![a, b], r, tuples);
                        }
                    }
                }
            }
            3 => {
                for (a, ea) in &words[ls[0]] {
                    for (b, eb) in &words[ls[1]] {
                        for (c, ec) in &words[ls[2]] {
                            tuples += 1;
                            let r = residual3(law, ea, eb, ec);
                            if !r.is_zero() {
                                return fail(vec![a, b, c], r, tuples);
                            }
                        }
                    }
                }
            }
            _ => {
                for (a, ea) in &words[ls[0]] {
                    for (b, eb) in &words[ls[1]] {
                        for (c, ec) in &words[ls[2]] {
                            let parts = TortkaraParts::new(ea, eb, ec);
                            for (d, ed) in &words[ls[3]] {
                                tuples += 1;
                                let r = parts.residual(ea, eb, ec, ed);
                                if !r.is_zero() {
                                    return fail(vec![a, b, c, d], r, tuples);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    SweepOutcome { law, tuples, failure: None }
}
