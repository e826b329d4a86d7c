//! Closed-form expansions of products and brackets of skew-rcom elements
//! on distinct letters, and their residuals against direct evaluation.
//!
//! Three sign exponents of the literal formulas do not survive odd
//! letters. [`SignReading::Printed`] keeps them literally and
//! [`SignReading::Corrected`] uses the exponents forced by the general
//! product formula. The same switch selects whether the tenth term of the
//! double-bracket expansion carries a bar.

use std::fmt;

use serde::Serialize;

use super::{bar, super_commutator, super_shuffle, zinbiel_product};
use crate::graded::{FreeElement, Letter, Parity, Rational, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignReading {
    Printed,
    Corrected,
}

/// Which expansion, with the lengths `m` and `n` of the two skew-rcom
/// factors where they vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum Expansion {
    /// `bar(I) ∘ bar(j1 j2)`.
    ProductWithPair { m: usize },
    /// `bar(I) ∘ bar(J)` with `|J| >= 3`.
    ProductWithLong { m: usize, n: usize },
    /// `[bar(I), j]`.
    BracketWithLetter { m: usize },
    /// `[bar(i1 i2), bar(j1 j2)]`.
    BracketOfPairs,
    /// `[bar(I), bar(J)]` outside the cases above.
    BracketGeneral { m: usize, n: usize },
    /// `[[a, b], [c, d]]` as twelve skew-rcom terms.
    DoubleBracket,
    /// `[[[a, b], c], d]` as twelve skew-rcom terms.
    NestedBracket,
}

impl Expansion {
    /// Every instance checked by the test suites.
    pub const CHECKED: [Expansion; 13] = [
        Expansion::ProductWithPair { m: 2 },
        Expansion::ProductWithPair { m: 3 },
        Expansion::ProductWithLong { m: 2, n: 3 },
        Expansion::ProductWithLong { m: 3, n: 3 },
        Expansion::BracketWithLetter { m: 2 },
        Expansion::BracketWithLetter { m: 3 },
        Expansion::BracketOfPairs,
        Expansion::BracketGeneral { m: 3, n: 2 },
        Expansion::BracketGeneral { m: 2, n: 3 },
        Expansion::BracketGeneral { m: 3, n: 3 },
        Expansion::BracketGeneral { m: 3, n: 4 },
        Expansion::DoubleBracket,
        Expansion::NestedBracket,
    ];

    /// Number of distinct letters involved.
    pub fn letters(&self) -> usize {
        match *self {
            Expansion::ProductWithPair { m } => m + 2,
            Expansion::ProductWithLong { m, n } | Expansion::BracketGeneral { m, n } => m + n,
            Expansion::BracketWithLetter { m } => m + 1,
            Expansion::BracketOfPairs | Expansion::DoubleBracket | Expansion::NestedBracket => 4,
        }
    }

    /// `direct evaluation - closed form` for the letters `0..k` with the
    /// given parities.
    pub fn residual(&self, parities: &[Parity], reading: SignReading) -> FreeElement {
        assert_eq!(parities.len(), self.letters(), "one parity per letter");
        let l = Letters { letters: parities.iter().enumerate().map(|(i, &p)| Letter::new(i as u16, p)).collect() };
        let corrected = reading == SignReading::Corrected;
        match *self {
            Expansion::ProductWithPair { m } => product_with_pair(&l, m, corrected),
            Expansion::ProductWithLong { m, n } => product_with_long(&l, m, n),
            Expansion::BracketWithLetter { m } => bracket_with_letter(&l, m),
            Expansion::BracketOfPairs => bracket_of_pairs(&l),
            Expansion::BracketGeneral { m, n } => bracket_general(&l, m, n, corrected),
            Expansion::DoubleBracket => {
                let unbarred: &[usize] = if corrected { &[] } else { &[9] };
                &double_bracket(&l) - &twelve(&l, &DOUBLE_BRACKET, unbarred)
            }
            Expansion::NestedBracket => &nested_bracket(&l) - &twelve(&l, &NESTED_BRACKET, &[]),
        }
    }

    /// Parity masks (bit `i` set when letter `i` is odd) with a nonzero
    /// residual.
    pub fn failing_masks(&self, reading: SignReading) -> Vec<u32> {
        let k = self.letters();
        (0..1u32 << k)
            .filter(|&mask| {
                let parities: Vec<Parity> = (0..k).map(|i| Parity::from_bit((mask >> i & 1) as u8)).collect();
                !self.residual(&parities, reading).is_zero()
            })
            .collect()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Expansion::ProductWithPair { m } => write!(f, "bar(I{m}) o bar(J2)"),
            Expansion::ProductWithLong { m, n } => write!(f, "bar(I{m}) o bar(J{n})"),
            Expansion::BracketWithLetter { m } => write!(f, "[bar(I{m}), j]"),
            Expansion::BracketOfPairs => f.write_str("[bar(I2), bar(J2)]"),
            Expansion::BracketGeneral { m, n } => write!(f, "[bar(I{m}), bar(J{n})]"),
            Expansion::DoubleBracket => f.write_str("[[a,b],[c,d]]"),
            Expansion::NestedBracket => f.write_str("[[[a,b],c],d]"),
        }
    }
}

struct Letters {
    letters: Vec<Letter>,
}

impl Letters {
    fn par(&self, i: usize) -> u32 {
        self.letters[i].parity.is_odd() as u32
    }

    fn total(&self, idx: &[usize]) -> u32 {
        idx.iter().map(|&i| self.par(i)).sum()
    }

    fn word(&self, idx: &[usize]) -> FreeElement {
        FreeElement::from_word(Word::new(&idx.iter().map(|&i| self.letters[i]).collect::<Vec<_>>()))
    }

    /// `u ⧢ v`, with the empty word as unit.
    fn sh(&self, u: &[usize], v: &[usize]) -> FreeElement {
        match (u.is_empty(), v.is_empty()) {
            (true, _) => self.word(v),
            (_, true) => self.word(u),
            _ => super_shuffle(&self.word(u), &self.word(v)),
        }
    }

    /// `e` followed by the letters `idx`, i.e. left-nested products.
    fn then(&self, e: &FreeElement, idx: &[usize]) -> FreeElement {
        idx.iter().fold(e.clone(), |acc, &i| acc.push_letter(self.letters[i]))
    }
}

fn sign(exp: u32) -> Rational {
    Rational::from(if exp % 2 == 0 { 1 } else { -1 })
}

fn b(e: &FreeElement) -> FreeElement {
    bar(e).expect("expansion terms have degree at least 2")
}

fn cat(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().chain(b).copied().collect()
}

fn sum(terms: Vec<(Rational, FreeElement)>) -> FreeElement {
    let mut out = FreeElement::zero();
    for (c, e) in terms {
        out.add_scaled(&e, &c);
    }
    out
}

fn split(m: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    ((0..m).collect(), (m..m + n).collect())
}

fn product_with_pair(l: &Letters, m: usize, corrected: bool) -> FreeElement {
    let (i, j) = split(m, 2);
    let p = |k: usize| l.par(k);
    let (im1, im, j1, j2) = (i[m - 2], i[m - 1], j[0], j[1]);
    let head = &i[..m - 2];
    let swapped = cat(head, &[im, im1]);
    // the literal exponent lacks |i_{m-1}||i_m|
    let fourth = p(im1) * p(j1) + if corrected { p(im1) * p(im) } else { 0 };
    let lhs = zinbiel_product(&b(&l.word(&i)), &b(&l.word(&j)));
    let rhs = sum(vec![
        (sign(0), b(&l.word(&cat(&i, &j)))),
        (-sign(p(im1) * p(im)), b(&l.word(&cat(&swapped, &j)))),
        (sign(p(im) * p(j1)), l.then(&l.sh(&i[..m - 1], &[j1]), &[im, j2])),
        (-sign(fourth), l.then(&l.sh(&cat(head, &[im]), &[j1]), &[im1, j2])),
        (-sign(p(j2) * (p(j1) + p(im))), l.then(&l.sh(&i[..m - 1], &[j2]), &[im, j1])),
        (
            sign(p(j2) * (p(j1) + p(im1)) + p(im1) * p(im)),
            l.then(&l.sh(&cat(head, &[im]), &[j2]), &[im1, j1]),
        ),
    ]);
    &lhs - &rhs
}

fn product_with_long(l: &Letters, m: usize, n: usize) -> FreeElement {
    let (i, j) = split(m, n);
    let p = |k: usize| l.par(k);
    let (im1, im) = (i[m - 2], i[m - 1]);
    let (jn1, jn) = (j[n - 2], j[n - 1]);
    let (head, jhead) = (&i[..m - 2], &j[..n - 2]);
    let swapped = cat(head, &[im, im1]);
    let lead = l.total(&j[..n - 1]);
    let lhs = zinbiel_product(&b(&l.word(&i)), &b(&l.word(&j)));
    let rhs = sum(vec![
        (sign(0), b(&l.then(&l.sh(&i, jhead), &[jn1, jn]))),
        (-sign(p(im) * p(im1)), b(&l.then(&l.sh(&swapped, jhead), &[jn1, jn]))),
        (sign(p(im) * lead), l.then(&l.sh(&i[..m - 1], &j[..n - 1]), &[im, jn])),
        (-sign(p(im1) * (p(im) + lead)), l.then(&l.sh(&cat(head, &[im]), &j[..n - 1]), &[im1, jn])),
        (
            -sign(p(im) * (l.total(jhead) + p(jn)) + p(jn) * p(jn1)),
            l.then(&l.sh(&i[..m - 1], &cat(jhead, &[jn])), &[im, jn1]),
        ),
        (
            sign(p(im1) * (p(im) + l.total(jhead) + p(jn)) + p(jn) * p(jn1)),
            l.then(&l.sh(&cat(head, &[im]), &cat(jhead, &[jn])), &[im1, jn1]),
        ),
    ]);
    &lhs - &rhs
}

fn bracket_with_letter(l: &Letters, m: usize) -> FreeElement {
    let (i, j) = split(m, 1);
    let p = |k: usize| l.par(k);
    let j1 = j[0];
    let (im1, im) = (i[m - 2], i[m - 1]);
    let head = &i[..m - 2];
    let lhs = super_commutator(&b(&l.word(&i)), &l.word(&j));
    let rhs = if m == 2 {
        sum(vec![
            (sign(0), b(&l.word(&[i[0], i[1], j1]))),
            (-sign(p(i[0]) * p(i[1])), b(&l.word(&[i[1], i[0], j1]))),
            (-sign((p(i[0]) + p(i[1])) * p(j1)), b(&l.word(&[j1, i[0], i[1]]))),
        ])
    } else {
        sum(vec![
            (sign(0), b(&l.word(&cat(&i, &[j1])))),
            (-sign(p(im) * p(im1)), b(&l.word(&cat(head, &[im, im1, j1])))),
            (-sign(p(j1) * l.total(&i)), b(&l.then(&l.sh(&[j1], head), &[im1, im]))),
        ])
    };
    &lhs - &rhs
}

fn bracket_of_pairs(l: &Letters) -> FreeElement {
    let p = |k: usize| l.par(k);
    let (i1, i2, j1, j2) = (0, 1, 2, 3);
    let lhs = super_commutator(&b(&l.word(&[i1, i2])), &b(&l.word(&[j1, j2])));
    let rhs = sum(vec![
        (sign(0), b(&l.then(&b(&l.word(&[i1, i2])), &[j1, j2]))),
        (-sign((p(i1) + p(i2)) * (p(j1) + p(j2))), b(&l.then(&b(&l.word(&[j1, j2])), &[i1, i2]))),
        (sign(p(i2) * p(j1)), b(&l.then(&l.sh(&[i1], &[j1]), &[i2, j2]))),
        (-sign((p(i2) + p(j1)) * p(j2)), b(&l.then(&l.sh(&[i1], &[j2]), &[i2, j1]))),
        (sign(p(i1) * (p(i2) + p(j2)) + p(j1) * p(j2)), b(&l.then(&l.sh(&[i2], &[j2]), &[i1, j1]))),
        (-sign(p(i1) * (p(i2) + p(j1))), b(&l.then(&l.sh(&[i2], &[j1]), &[i1, j2]))),
    ]);
    &lhs - &rhs
}

fn bracket_general(l: &Letters, m: usize, n: usize, corrected: bool) -> FreeElement {
    let (i, j) = split(m, n);
    let p = |k: usize| l.par(k);
    let (im1, im) = (i[m - 2], i[m - 1]);
    let (jn1, jn) = (j[n - 2], j[n - 1]);
    let (head, jhead) = (&i[..m - 2], &j[..n - 2]);
    let iswap = cat(head, &[im, im1]);
    let jswap = cat(jhead, &[jn, jn1]);
    let outer = (p(im1) + p(im)) * l.total(&j);
    let lead = l.total(&j[..n - 1]);
    let seventh = p(im) * l.total(jhead) + (p(im) + p(jn1)) * p(jn);
    // the literal fifth and eighth exponents swap the roles of i_{m-1}
    // and i_m
    let (fifth, eighth) = if corrected {
        (p(im) * lead, p(im1) * (l.total(jhead) + p(jn)) + p(jn1) * p(jn) + p(im) * p(im1))
    } else {
        (p(im1) * lead, seventh + p(im) * p(im1))
    };
    let lhs = super_commutator(&b(&l.word(&i)), &b(&l.word(&j)));
    let rhs = sum(vec![
        (sign(0), b(&l.then(&l.sh(&i, jhead), &[jn1, jn]))),
        (-sign(p(im1) * p(im)), b(&l.then(&l.sh(&iswap, jhead), &[jn1, jn]))),
        (-sign(outer), b(&l.then(&l.sh(head, &j), &[im1, im]))),
        (sign(outer + p(jn1) * p(jn)), b(&l.then(&l.sh(head, &jswap), &[im1, im]))),
        (sign(fifth), b(&l.then(&l.sh(&i[..m - 1], &j[..n - 1]), &[im, jn]))),
        (
            -sign(p(im1) * lead + p(im1) * p(im)),
            b(&l.then(&l.sh(&cat(head, &[im]), &j[..n - 1]), &[im1, jn])),
        ),
        (-sign(seventh), b(&l.then(&l.sh(&i[..m - 1], &cat(jhead, &[jn])), &[im, jn1]))),
        (sign(eighth), b(&l.then(&l.sh(&cat(head, &[im]), &cat(jhead, &[jn])), &[im1, jn1]))),
    ]);
    &lhs - &rhs
}

/// Sign, left-nested word and sign exponent (in the parities of `a, b, c, d`)
/// of each of the twelve terms.
type Twelve = [(i64, &'static str, fn([u32; 4]) -> u32); 12];

const DOUBLE_BRACKET: Twelve = [
    (1, "abcd", |_| 0),
    (1, "acbd", |[_, b, c, _]| b * c),
    (-1, "adbc", |[_, b, c, d]| (b + c) * d),
    (-1, "bacd", |[a, b, _, _]| a * b),
    (-1, "bcad", |[a, b, c, _]| a * (b + c)),
    (1, "bdac", |[a, b, c, d]| a * b + (a + c) * d),
    (1, "cabd", |[a, b, c, _]| (a + b) * c),
    (-1, "cbad", |[a, b, c, _]| a * b + (a + b) * c),
    (-1, "cdab", |[a, b, c, d]| (a + b) * (c + d)),
    (-1, "dabc", |[a, b, c, d]| (a + b + c) * d),
    (1, "dbac", |[a, b, c, d]| a * b + (a + b + c) * d),
    (1, "dcab", |[a, b, c, d]| (a + b) * c + (a + b + c) * d),
];

const NESTED_BRACKET: Twelve = [
    (1, "abcd", |_| 0),
    (-1, "acbd", |[_, b, c, _]| b * c),
    (-1, "adbc", |[_, b, c, d]| (b + c) * d),
    (-1, "bacd", |[a, b, _, _]| a * b),
    (1, "bcad", |[a, b, c, _]| a * (b + c)),
    (1, "bdac", |[a, b, c, d]| a * b + (a + c) * d),
    (-1, "cabd", |[a, b, c, _]| (a + b) * c),
    (1, "cbad", |[a, b, c, _]| a * b + (a + b) * c),
    (1, "cdab", |[a, b, c, d]| (a + b) * c + (a + b) * d),
    (-1, "dabc", |[a, b, c, d]| (a + b + c) * d),
    (1, "dbac", |[a, b, c, d]| a * b + (a + b + c) * d),
    (1, "dcab", |[a, b, c, d]| (a + b) * c + (a + b + c) * d),
];

fn twelve(l: &Letters, table: &Twelve, unbarred: &[usize]) -> FreeElement {
    let pars = [l.par(0), l.par(1), l.par(2), l.par(3)];
    let terms = table
        .iter()
        .enumerate()
        .map(|(k, (s, w, e))| {
            let idx: Vec<usize> = w.bytes().map(|c| (c - b'a') as usize).collect();
            let word = l.word(&idx);
            let term = if unbarred.contains(&k) { word } else { b(&word) };
            (&Rational::from(*s) * &sign(e(pars)), term)
        })
        .collect();
    sum(terms)
}

fn double_bracket(l: &Letters) -> FreeElement {
    let w = |i: usize| l.word(&[i]);
    super_commutator(&super_commutator(&w(0), &w(1)), &super_commutator(&w(2), &w(3)))
}

fn nested_bracket(l: &Letters) -> FreeElement {
    let w = |i: usize| l.word(&[i]);
    super_commutator(&super_commutator(&super_commutator(&w(0), &w(1)), &w(2)), &w(3))
}
