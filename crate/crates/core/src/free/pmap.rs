use super::{Alphabet, FreeError, Multidegree};
use crate::graded::{FreeElement, Word};
use crate::linalg::Span;

/// `p` on a basis word: `p(x) = -x`, and on longer words the last two
/// letters are swapped with the sign `(-1)^{|y||z|}`. Returns the image word
/// and whether the sign is negative.
pub fn p_map_word(w: &Word) -> (Word, bool) {
    let n = w.len();
    if n == 1 {
        return (w.clone(), true);
    }
    let (y, z) = (w[n - 2], w[n - 1]);
    (w.swap_adjacent(n - 2), (y.parity * z.parity).is_odd())
}

pub fn p_map(u: &FreeElement) -> FreeElement {
    u.map_words(p_map_word)
}

/// `ū = u - p(u)`; every word of `u` must have length at least 2.
pub fn bar(u: &FreeElement) -> Result<FreeElement, FreeError> {
    if let Some(w) = u.words().find(|w| w.len() < 2) {
        return Err(FreeError::DegreeTooLow(format!(
            "bar needs words of length >= 2, found one of length {}",
            w.len()
        )));
    }
    Ok(u - &p_map(u))
}

/// The Tortkara-element criterion: `u` lies in the special Tortkara
/// subalgebra generated by the alphabet iff `p(u) = -u`.
///
/// `p` preserves multidegree, so mixed inputs are decided componentwise by
/// the same test.
pub fn is_tortkara_element(u: &FreeElement) -> Result<bool, FreeError> {
    if u.words().any(|w| w.len() < 2) {
        return Err(FreeError::CriterionInapplicable);
    }
    Ok((&p_map(u) + u).is_zero())
}

/// The skew-rcom elements `bar(w)` for the words of one multidegree,
/// reduced to a linearly independent list in canonical pivot order.
pub fn skew_rcom_basis(d: &Multidegree, alphabet: &Alphabet) -> Result<Vec<FreeElement>, FreeError> {
    if d.total() < 2 {
        return Err(FreeError::DegreeTooLow(format!(
            "skew-rcom elements need total degree >= 2, got {}",
            d.total()
        )));
    }
    let mut span = Span::new();
    for w in d.words(alphabet) {
        span.insert(bar(&FreeElement::from_word(w))?);
    }
    Ok(span.into_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::super_commutator;
    use crate::graded::Rational;

    fn al() -> Alphabet {
        Alphabet::parse_inline("x:odd,y:even,a:odd,b:even,c:odd,d:even").unwrap()
    }

    #[test]
    fn p_on_basis_words() {
        let al = al();
        let e = |s: &str| al.element_str(s).unwrap();
        assert_eq!(p_map(&e("x")), -e("x"));
        assert_eq!(p_map(&e("xy")), e("yx"));
        assert_eq!(p_map(&e("xa")), -e("ax"));
        // p(abcd) = (-1)^{|c||d|} abdc, and (-1)^{|a||c|} for abca
        assert_eq!(p_map(&e("abcd")), e("abdc"));
        assert_eq!(p_map(&e("abca")), -e("abac"));
    }

    #[test]
    fn p_is_an_involution() {
        let al = al();
        for s in ["x", "xy", "xa", "yxab", "abcd", "xxx"] {
            let u = al.element_str(s).unwrap();
            assert_eq!(p_map(&p_map(&u)), u);
        }
    }

    #[test]
    fn bar_examples() {
        let al = al();
        let e = |s: &str| al.element_str(s).unwrap();
        assert_eq!(bar(&e("xy")).unwrap(), super_commutator(&e("x"), &e("y")));
        // p(xa) = -ax and p(ax) = -xa, so w = xa + ax satisfies p(w) = -w
        let w = &e("xa") + &e("ax");
        assert_eq!(bar(&w).unwrap(), w.scale(&Rational::from(2)));
        let b = bar(&e("xya")).unwrap();
        assert_eq!(p_map(&b), -b);
        assert!(matches!(bar(&e("x")), Err(FreeError::DegreeTooLow(_))));
    }

    #[test]
    fn criterion_examples() {
        let al = al();
        let e = |s: &str| al.element_str(s).unwrap();
        assert!(is_tortkara_element(&bar(&e("xya")).unwrap()).unwrap());
        // ω x x with x odd
        assert!(is_tortkara_element(&e("ybxx")).unwrap());
        assert!(!is_tortkara_element(&e("yb")).unwrap());
        assert_eq!(is_tortkara_element(&e("y")), Err(FreeError::CriterionInapplicable));
    }

    #[test]
    fn skew_rcom_basis_examples() {
        let al = Alphabet::parse_inline("x:odd,y:even").unwrap();
        let md = |s: &str| Multidegree::parse(s, &al).unwrap();
        let b = skew_rcom_basis(&md("x:1,y:1"), &al).unwrap();
        assert_eq!(b.len(), 1);
        let b = skew_rcom_basis(&md("x:2"), &al).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0], al.element_str("xx").unwrap());
        assert!(skew_rcom_basis(&md("y:3"), &al).unwrap().is_empty());
        assert!(skew_rcom_basis(&md("y:1"), &al).is_err());
        for v in skew_rcom_basis(&md("x:2,y:2"), &al).unwrap() {
            assert_eq!(p_map(&v), -v.clone());
        }
    }
}
