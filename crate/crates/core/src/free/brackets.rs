use std::collections::HashMap;

use super::{super_commutator, Alphabet, Multidegree};
use crate::graded::FreeElement;
use crate::linalg::Span;

/// Spans of bracket monomials (iterated super commutators of letters),
/// one per multidegree, memoized across calls.
///
/// The component of multidegree `d` is the sum of `[B_e, B_{d-e}]` over
/// proper parts `e`; super anti-commutativity lets us keep only `e <= d-e`.
#[derive(Debug, Clone)]
pub struct BracketSpans {
    alphabet: Alphabet,
    memo: HashMap<Multidegree, Span>,
}

impl BracketSpans {
    pub fn new(alphabet: &Alphabet) -> Self {
        BracketSpans { alphabet: alphabet.clone(), memo: HashMap::new() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn component(&mut self, d: &Multidegree) -> &Span {
        if !self.memo.contains_key(d) {
            let span = self.build(d);
            self.memo.insert(d.clone(), span);
        }
        &self.memo[d]
    }

    fn build(&mut self, d: &Multidegree) -> Span {
        let mut span = Span::new();
        if d.total() == 1 {
            for w in d.words(&self.alphabet) {
                span.insert(FreeElement::from_word(w));
            }
            return span;
        }
        for e in d.proper_parts() {
            let rest = d.checked_sub(&e).expect("proper part");
            if e > rest {
                continue;
            }
            let left: Vec<FreeElement> = self.component(&e).basis().cloned().collect();
            let right: Vec<FreeElement> = self.component(&rest).basis().cloned().collect();
            for (i, a) in left.iter().enumerate() {
                // on the diagonal, [b, a] = ±[a, b]
                let start = if e == rest { i } else { 0 };
                for b in &right[start..] {
                    span.insert(super_commutator(a, b));
                }
            }
        }
        span
    }
}

/// The span of bracket monomials of multidegree `d`.
pub fn bracket_monomial_span(d: &Multidegree, alphabet: &Alphabet) -> Span {
    BracketSpans::new(alphabet).component(d).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{is_tortkara_element, skew_rcom_basis};

    #[test]
    fn small_components() {
        let al = Alphabet::parse_inline("x:odd,y:even").unwrap();
        let md = |s: &str| Multidegree::parse(s, &al).unwrap();
        let mut spans = BracketSpans::new(&al);
        assert_eq!(spans.component(&md("x:1")).dim(), 1);
        assert_eq!(spans.component(&md("y:2")).dim(), 0);
        // [x, x] = 2xx
        assert_eq!(spans.component(&md("x:2")).dim(), 1);
        for s in ["x:1,y:1", "x:2,y:1", "x:1,y:2", "x:2,y:2"] {
            let span = spans.component(&md(s)).clone();
            assert!(span.basis().all(|v| is_tortkara_element(v).unwrap()));
            let st = Span::from_elements(&skew_rcom_basis(&md(s), &al).unwrap());
            assert_eq!(span, st, "component {s}");
        }
    }
}
