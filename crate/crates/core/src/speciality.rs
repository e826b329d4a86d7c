//! Ideal components in the free Zinbiel superalgebra and in its special
//! Tortkara subalgebra, and the speciality test that compares them.
//!
//! A quotient of the special Tortkara algebra by an ideal `I` is special iff
//! every element of the Zinbiel ideal generated by `I` that is itself a
//! Tortkara element already lies in `I`. All checks here are made one
//! multidegree component at a time.

use std::collections::HashMap;

use thiserror::Error;

use crate::free::{
    is_tortkara_element, skew_rcom_basis, super_commutator, zinbiel_product, Alphabet,
    BracketSpans, FreeError, Multidegree,
};
use crate::graded::FreeElement;
use crate::linalg::Span;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialityError {
    #[error("component of total degree {total} exceeds the degree bound {bound}")]
    DegreeBoundExceeded { total: usize, bound: usize },
    #[error("generator {index} is not a Tortkara element")]
    NotTortkara { index: usize },
    #[error("generator {index} is zero or mixes multidegrees")]
    Inhomogeneous { index: usize },
    #[error("degree bound {bound} is below the degree {degree} of generator {index}")]
    BoundBelowGenerator { index: usize, degree: usize, bound: usize },
    #[error("multidegree has {got} entries, alphabet has {expected} generators")]
    AlphabetMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Free(#[from] FreeError),
}

/// One multidegree component of a subspace, in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpan {
    pub multidegree: Multidegree,
    pub span: Span,
}

impl ComponentSpan {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> impl Iterator<Item = &FreeElement> {
        self.span.basis()
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.span.contains(v)
    }
}

/// Generators of an ideal of the special Tortkara algebra, with the largest
/// total degree up to which components may be requested.
#[derive(Debug, Clone)]
pub struct IdealSpec {
    generators: Vec<(FreeElement, Multidegree)>,
    alphabet: Alphabet,
    degree_bound: usize,
}

impl IdealSpec {
    pub fn new(
        generators: Vec<FreeElement>,
        alphabet: &Alphabet,
        degree_bound: usize,
    ) -> Result<Self, SpecialityError> {
        let mut checked = Vec::with_capacity(generators.len());
        for (index, g) in generators.into_iter().enumerate() {
            let md = Multidegree::of_element(&g, alphabet.len())
                .ok_or(SpecialityError::Inhomogeneous { index })?;
            if !is_tortkara_element(&g)? {
                return Err(SpecialityError::NotTortkara { index });
            }
            if md.total() > degree_bound {
                return Err(SpecialityError::BoundBelowGenerator {
                    index,
                    degree: md.total(),
                    bound: degree_bound,
                });
            }
            checked.push((g, md));
        }
        Ok(IdealSpec { generators: checked, alphabet: alphabet.clone(), degree_bound })
    }

    pub fn generators(&self) -> impl Iterator<Item = &FreeElement> {
        self.generators.iter().map(|(g, _)| g)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    fn check(&self, d: &Multidegree) -> Result<(), SpecialityError> {
        if d.counts().len() != self.alphabet.len() {
            return Err(SpecialityError::AlphabetMismatch {
                got: d.counts().len(),
                expected: self.alphabet.len(),
            });
        }
        if d.total() > self.degree_bound {
            return Err(SpecialityError::DegreeBoundExceeded { total: d.total(), bound: self.degree_bound });
        }
        Ok(())
    }

    fn generator_span(&self, d: &Multidegree) -> Span {
        Span::from_elements(self.generators.iter().filter(|(_, m)| m == d).map(|(g, _)| g))
    }
}

/// Saturates an ideal component by component: the part of multidegree `e`
/// is the generators of that multidegree plus `step(I_f, e - f)` over all
/// proper parts `f`.
struct Saturation<'a, F> {
    ideal: &'a IdealSpec,
    memo: HashMap<Multidegree, Span>,
    step: F,
}

impl<F: FnMut(&Span, &Multidegree, &mut Span)> Saturation<'_, F> {
    fn component(&mut self, e: &Multidegree) -> Span {
        if let Some(s) = self.memo.get(e) {
            return s.clone();
        }
        let mut span = self.ideal.generator_span(e);
        for f in e.proper_parts() {
            let inner = self.component(&f);
            if inner.is_zero() {
                continue;
            }
            let rest = e.checked_sub(&f).expect("proper part");
            (self.step)(&inner, &rest, &mut span);
        }
        self.memo.insert(e.clone(), span.clone());
        span
    }
}

/// The component of multidegree `d` of the ideal of the special Tortkara
/// algebra generated by `I`: the generators closed under brackets with
/// bracket monomials. By super anti-commutativity, right brackets suffice.
pub fn tortkara_ideal_component(
    ideal: &IdealSpec,
    d: &Multidegree,
) -> Result<ComponentSpan, SpecialityError> {
    ideal.check(d)?;
    let mut brackets = BracketSpans::new(&ideal.alphabet);
    let mut sat = Saturation {
        ideal,
        memo: HashMap::new(),
        step: |inner: &Span, rest: &Multidegree, out: &mut Span| {
            let monomials: Vec<FreeElement> = brackets.component(rest).basis().cloned().collect();
            for i in inner.basis() {
                for s in &monomials {
                    out.insert(super_commutator(i, s));
                }
            }
        },
    };
    Ok(ComponentSpan { multidegree: d.clone(), span: sat.component(d) })
}

/// The component of multidegree `d` of the two-sided Zinbiel ideal generated
/// by `I`, closed under left and right products with all words.
pub fn zinbiel_ideal_component(
    ideal: &IdealSpec,
    d: &Multidegree,
) -> Result<ComponentSpan, SpecialityError> {
    ideal.check(d)?;
    let alphabet = &ideal.alphabet;
    let mut sat = Saturation {
        ideal,
        memo: HashMap::new(),
        step: |inner: &Span, rest: &Multidegree, out: &mut Span| {
            for w in rest.words(alphabet) {
                let w = FreeElement::from_word(w);
                for i in inner.basis() {
                    out.insert(zinbiel_product(i, &w));
                    out.insert(zinbiel_product(&w, i));
                }
            }
        },
    };
    Ok(ComponentSpan { multidegree: d.clone(), span: sat.component(d) })
}

/// The component of multidegree `d` of the special Tortkara algebra, as the
/// fixed space of `-p` (spanned by the skew-rcom elements).
pub fn st_component(alphabet: &Alphabet, d: &Multidegree) -> Result<ComponentSpan, SpecialityError> {
    let basis = skew_rcom_basis(d, alphabet)?;
    Ok(ComponentSpan { multidegree: d.clone(), span: Span::from_elements(&basis) })
}

/// The same component built from bracket monomials instead.
pub fn st_component_by_brackets(alphabet: &Alphabet, d: &Multidegree) -> ComponentSpan {
    let span = BracketSpans::new(alphabet).component(d).clone();
    ComponentSpan { multidegree: d.clone(), span }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialityVerdict {
    Special,
    /// A Tortkara element of the Zinbiel ideal outside the Tortkara ideal.
    Exceptional { witness: FreeElement },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohnReport {
    pub tortkara_ideal: ComponentSpan,
    pub zinbiel_ideal: ComponentSpan,
    pub st: ComponentSpan,
    /// Zinbiel ideal ∩ special Tortkara algebra.
    pub tortkara_part: ComponentSpan,
    pub verdict: SpecialityVerdict,
}

/// Compares the Tortkara elements of the Zinbiel ideal with the Tortkara
/// ideal at one multidegree. The witness, if any, is the first echelon basis
/// vector of the intersection that the Tortkara ideal misses.
pub fn cohn_speciality_check(ideal: &IdealSpec, d: &Multidegree) -> Result<CohnReport, SpecialityError> {
    let tortkara_ideal = tortkara_ideal_component(ideal, d)?;
    let zinbiel_ideal = zinbiel_ideal_component(ideal, d)?;
    let st = st_component(&ideal.alphabet, d)?;
    let tortkara_part = ComponentSpan {
        multidegree: d.clone(),
        span: zinbiel_ideal.span.intersection(&st.span),
    };
    let verdict = match tortkara_part.basis().find(|w| !tortkara_ideal.contains(w)) {
        Some(w) => SpecialityVerdict::Exceptional { witness: w.clone() },
        None => SpecialityVerdict::Special,
    };
    Ok(CohnReport { tortkara_ideal, zinbiel_ideal, st, tortkara_part, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{bar, p_map};

    fn xy() -> Alphabet {
        Alphabet::parse_inline("x:odd,y:even").unwrap()
    }

    fn generators(al: &Alphabet) -> (FreeElement, FreeElement) {
        let e = |s: &str| al.element_str(s).unwrap();
        (bar(&e("yyx")).unwrap(), e("yxx"))
    }

    #[test]
    fn generator_validation() {
        let al = xy();
        let e = |s: &str| al.element_str(s).unwrap();
        let err = IdealSpec::new(vec![e("xy")], &al, 4).unwrap_err();
        assert_eq!(err, SpecialityError::NotTortkara { index: 0 });
        let err = IdealSpec::new(vec![&e("yxx") + &e("yx")], &al, 4).unwrap_err();
        assert_eq!(err, SpecialityError::Inhomogeneous { index: 0 });
        let err = IdealSpec::new(vec![e("yxx")], &al, 2).unwrap_err();
        assert!(matches!(err, SpecialityError::BoundBelowGenerator { .. }));
        let spec = IdealSpec::new(vec![e("yxx")], &al, 3).unwrap();
        let md = Multidegree::parse("x:2,y:2", &al).unwrap();
        assert!(matches!(
            tortkara_ideal_component(&spec, &md),
            Err(SpecialityError::DegreeBoundExceeded { total: 4, bound: 3 })
        ));
    }

    #[test]
    fn components_below_and_at_generators() {
        let al = xy();
        let (f1, f2) = generators(&al);
        let spec = IdealSpec::new(vec![f1.clone(), f2], &al, 4).unwrap();
        let md = |s: &str| Multidegree::parse(s, &al).unwrap();
        assert!(tortkara_ideal_component(&spec, &md("x:1,y:1")).unwrap().span.is_zero());
        assert!(zinbiel_ideal_component(&spec, &md("x:1,y:1")).unwrap().span.is_zero());
        let own = tortkara_ideal_component(&spec, &md("x:1,y:2")).unwrap();
        assert_eq!(own.dim(), 1);
        assert!(own.contains(&f1));
        assert!(zinbiel_ideal_component(&spec, &md("x:1,y:2")).unwrap().contains(&f1));
    }

    #[test]
    fn ideal_elements_are_tortkara() {
        let al = xy();
        let (f1, f2) = generators(&al);
        let spec = IdealSpec::new(vec![f1, f2], &al, 5).unwrap();
        for s in ["x:2,y:2", "x:3,y:2", "x:2,y:3"] {
            let c = tortkara_ideal_component(&spec, &Multidegree::parse(s, &al).unwrap()).unwrap();
            for v in c.basis() {
                assert_eq!(&p_map(v), &-v.clone());
            }
        }
    }

    #[test]
    fn st_component_examples() {
        let al = xy();
        let md = |s: &str| Multidegree::parse(s, &al).unwrap();
        assert_eq!(st_component(&al, &md("x:1,y:1")).unwrap().dim(), 1);
        assert_eq!(st_component(&al, &md("y:2")).unwrap().dim(), 0);
        assert!(st_component(&al, &md("y:1")).is_err());
    }

    #[test]
    fn trivial_verdicts() {
        let al = xy();
        let md = Multidegree::parse("x:2,y:2", &al).unwrap();
        let zero = IdealSpec::new(vec![], &al, 4).unwrap();
        assert_eq!(cohn_speciality_check(&zero, &md).unwrap().verdict, SpecialityVerdict::Special);
        let whole: Vec<FreeElement> = st_component(&al, &md).unwrap().basis().cloned().collect();
        let spec = IdealSpec::new(whole, &al, 4).unwrap();
        assert_eq!(cohn_speciality_check(&spec, &md).unwrap().verdict, SpecialityVerdict::Special);
    }
}
