//! Exact elimination over the word basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::graded::{FreeElement, Rational, Word};

/// A subspace of the free algebra kept in reduced row echelon form.
///
/// Each row is normalized so its least word (the pivot) has coefficient 1,
/// and no pivot word occurs in any other row. Rows are ordered by pivot.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Span {
    rows: BTreeMap<Word, FreeElement>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn from_elements<'a, I: IntoIterator<Item = &'a FreeElement>>(elements: I) -> Self {
        let mut span = Span::new();
        for e in elements {
            span.insert(e.clone());
        }
        span
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis rows in increasing pivot order.
    pub fn basis(&self) -> impl Iterator<Item = &FreeElement> {
        self.rows.values()
    }

    pub fn into_basis(self) -> Vec<FreeElement> {
        self.rows.into_values().collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot word.
    pub fn reduce(&self, v: &FreeElement) -> FreeElement {
        let mut out = v.clone();
        let hits: Vec<(Word, Rational)> = v
            .iter()
            .filter(|(w, _)| self.rows.contains_key(*w))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        for (w, c) in hits {
            out.add_scaled(&self.rows[&w], &-c);
        }
        out
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: FreeElement) -> bool {
        let r = self.reduce(&v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let pivot = pivot.clone();
        let r = if lead.is_one() { r.clone() } else { r.scale(&lead.recip()) };
        for row in self.rows.values_mut() {
            let c = row.coefficient(&pivot);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn extend<I: IntoIterator<Item = FreeElement>>(&mut self, items: I) {
        for v in items {
            self.insert(v);
        }
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.basis().all(|v| other.contains(v))
    }

    /// `self ∩ other`, from the linear relations between the two bases.
    pub fn intersection(&self, other: &Span) -> Span {
        let mine: Vec<FreeElement> = self.basis().cloned().collect();
        let vectors: Vec<FreeElement> = mine.iter().chain(other.basis()).cloned().collect();
        let mut out = Span::new();
        for rel in linear_relations(&vectors) {
            out.insert(combine(&rel[..mine.len()], &mine));
        }
        out
    }

    /// `self + other`.
    pub fn sum(&self, other: &Span) -> Span {
        let mut out = self.clone();
        out.extend(other.basis().cloned());
        out
    }
}

/// A basis of the space of coefficient vectors `λ` with `Σ λ_i v_i = 0`.
pub fn linear_relations(vectors: &[FreeElement]) -> Vec<Vec<Rational>> {
    let n = vectors.len();
    // rows: pivot -> (vector, combination of inputs producing it)
    let mut rows: BTreeMap<Word, (FreeElement, Vec<Rational>)> = BTreeMap::new();
    let mut relations = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut cur = v.clone();
        let mut combo = vec![Rational::zero(); n];
        combo[i] = Rational::one();
        let hits: Vec<(Word, Rational)> = v
            .iter()
            .filter(|(w, _)| rows.contains_key(*w))
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        for (w, c) in hits {
            let (row, row_combo) = &rows[&w];
            cur.add_scaled(row, &-&c);
            for (a, b) in combo.iter_mut().zip(row_combo) {
                if !b.is_zero() {
                    *a -= &(&c * b);
                }
            }
        }
        match cur.leading() {
            None => relations.push(combo),
            Some((pivot, lead)) => {
                let pivot = pivot.clone();
                let inv = lead.recip();
                let cur = cur.scale(&inv);
                let combo: Vec<Rational> = combo.iter().map(|c| c * &inv).collect();
                for (row, row_combo) in rows.values_mut() {
                    let c = row.coefficient(&pivot);
                    if !c.is_zero() {
                        row.add_scaled(&cur, &-&c);
                        for (a, b) in row_combo.iter_mut().zip(&combo) {
                            if !b.is_zero() {
                                *a -= &(&c * b);
                            }
                        }
                    }
                }
                rows.insert(pivot, (cur, combo));
            }
        }
    }
    relations
}

/// `Σ λ_i v_i`.
pub fn combine(coeffs: &[Rational], vectors: &[FreeElement]) -> FreeElement {
    let mut out = FreeElement::zero();
    for (c, v) in coeffs.iter().zip(vectors) {
        out.add_scaled(v, c);
    }
    out
}

/// Intersection of a span with the kernel of a linear map.
pub fn kernel_within<F: Fn(&FreeElement) -> FreeElement>(span: &Span, map: F) -> Span {
    let basis: Vec<FreeElement> = span.basis().cloned().collect();
    let images: Vec<FreeElement> = basis.iter().map(&map).collect();
    let mut out = Span::new();
    for rel in linear_relations(&images) {
        out.insert(combine(&rel, &basis));
    }
    out
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] -= &d;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{Letter, Parity};

    fn w(s: &str) -> Word {
        let ls: Vec<Letter> = s
            .bytes()
            .map(|b| Letter::new((b - b'a') as u16, Parity::Even))
            .collect();
        Word::new(&ls)
    }

    fn e(terms: &[(&str, i64)]) -> FreeElement {
        terms.iter().map(|(s, c)| (w(s), Rational::from(*c))).collect()
    }

    #[test]
    fn echelon_invariants() {
        let mut s = Span::new();
        assert!(s.insert(e(&[("ab", 2), ("ba", 2)])));
        assert!(s.insert(e(&[("ab", 1), ("bb", 1)])));
        assert!(!s.insert(e(&[("ba", 1), ("bb", -1)])));
        assert_eq!(s.dim(), 2);
        let pivots: Vec<&Word> = s.pivots().collect();
        assert!(pivots.windows(2).all(|p| p[0] < p[1]));
        for (p, row) in s.rows.iter() {
            assert_eq!(row.leading().unwrap().0, p);
            assert!(row.leading().unwrap().1.is_one());
            for (q, other) in s.rows.iter() {
                if p != q {
                    assert!(other.coefficient(p).is_zero());
                }
            }
        }
        assert!(s.contains(&e(&[("ab", 3), ("bb", 3)])));
        assert!(!s.contains(&e(&[("aa", 1)])));
    }

    #[test]
    fn relations_and_kernels() {
        let vs = vec![e(&[("a", 1)]), e(&[("b", 1)]), e(&[("a", 1), ("b", -1)])];
        let rel = linear_relations(&vs);
        assert_eq!(rel.len(), 1);
        assert!(combine(&rel[0], &vs).is_zero());
        let span = Span::from_elements(&vs);
        // kernel of "coefficient of a" inside span{a, b}
        let k = kernel_within(&span, |v| FreeElement::term(w("a"), v.coefficient(&w("a"))));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&e(&[("b", 1)])));
    }

    #[test]
    fn dense_rank() {
        let q = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        assert_eq!(rank(&[q(&[1, 2]), q(&[2, 4])]), 1);
        assert_eq!(rank(&[q(&[0, 1, 0]), q(&[1, 0, 0]), q(&[1, 1, 1])]), 3);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn intersection_of_planes() {
        let p = Span::from_elements(&[e(&[("a", 1)]), e(&[("b", 1)])]);
        let q = Span::from_elements(&[e(&[("b", 1), ("a", 1)]), e(&[("c", 1)])]);
        let i = p.intersection(&q);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&e(&[("a", 2), ("b", 2)])));
        assert!(p.intersection(&Span::new()).is_zero());
    }
}
