//! The Tortkara-element criterion: bracket expressions are exactly the
//! solutions of `p(f) = -f`, componentwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zinbiel_core::free::{
    bar, bracket_monomial_span, expand, is_tortkara_element, p_map, skew_rcom_basis, Alphabet, BracketExpr,
    BracketSpans, Multidegree,
};
use zinbiel_core::graded::{FreeElement, Rational, Word};
use zinbiel_core::linalg::{kernel_within, Span};

/// A random super-commutator tree with `leaves` letters.
fn random_bracket(rng: &mut ChaCha8Rng, names: &[&str], leaves: usize, depth: usize) -> BracketExpr {
    if leaves == 1 || depth == 0 {
        return BracketExpr::gen(names[rng.gen_range(0..names.len())]);
    }
    let left = rng.gen_range(1..leaves);
    let l = random_bracket(rng, names, left, depth - 1);
    let r = random_bracket(rng, names, leaves - left, depth - 1);
    let e = BracketExpr::scom(l, r);
    if rng.gen_bool(0.2) {
        BracketExpr::scale(Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4)), e)
    } else {
        e
    }
}

#[test]
fn bracket_expressions_satisfy_the_criterion() {
    let al = Alphabet::parse_inline("x:odd,y:even,z:odd,w:even").unwrap();
    let names = ["x", "y", "z", "w"];
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a1b);
    let mut nonzero = 0;
    for _ in 0..200 {
        let leaves = rng.gen_range(2..=6);
        let e = random_bracket(&mut rng, &names, leaves, 4);
        let f = expand(&e, &al).unwrap();
        assert_eq!(p_map(&f), -&f, "{e}");
        if !f.is_zero() {
            nonzero += 1;
            assert!(is_tortkara_element(&f).unwrap(), "{e}");
        }
    }
    // guard against a generator that only produces zeros
    assert!(nonzero > 150, "{nonzero}");
}

fn fixed_point_space(d: &Multidegree, al: &Alphabet) -> Span {
    let words = Span::from_elements(&d.words(al).into_iter().map(FreeElement::from_word).collect::<Vec<_>>());
    kernel_within(&words, |v| &p_map(v) + v)
}

#[test]
fn bracket_spans_equal_the_fixed_points_of_minus_p() {
    let al = Alphabet::parse_inline("x:odd,y:even").unwrap();
    let mut spans = BracketSpans::new(&al);
    let mut checked = 0;
    for total in 2..=5 {
        for d in Multidegree::all_with_total(al.len(), total) {
            let brackets = spans.component(&d).clone();
            let kernel = fixed_point_space(&d, &al);
            let skew = Span::from_elements(&skew_rcom_basis(&d, &al).unwrap());
            assert_eq!(brackets.dim(), kernel.dim(), "{}", d.display(&al));
            assert!(brackets.is_subspace_of(&kernel) && kernel.is_subspace_of(&brackets), "{}", d.display(&al));
            assert_eq!(skew, kernel, "{}", d.display(&al));
            checked += 1;
        }
    }
    assert_eq!(checked, 3 + 4 + 5 + 6);
}

#[test]
fn degree_three_skew_element_as_brackets() {
    for spec in ["x:odd,y:odd,z:odd", "x:odd,y:even,z:odd", "x:even,y:even,z:even", "x:even,y:odd,z:odd"] {
        let al = Alphabet::parse_inline(spec).unwrap();
        let lhs = bar(&al.element_str("xyz").unwrap()).unwrap();
        let (y, z) = (al.letter("y").unwrap(), al.letter("z").unwrap());
        let op = if (y.parity * z.parity).is_odd() { "+" } else { "-" };
        let src = format!("1/2*[[x,y],z] {op} 1/2*[[x,z],y]");
        let rhs = expand(&zinbiel_core::free::parse_expr(&src).unwrap(), &al).unwrap();
        assert_eq!(lhs, rhs, "{spec}");
    }
}

fn swap_sign(w: &Word, k: usize) -> i64 {
    if (w[k].parity * w[k + 1].parity).is_odd() {
        -1
    } else {
        1
    }
}

fn bar_word(w: &Word) -> FreeElement {
    bar(&FreeElement::from_word(w.clone())).unwrap()
}

#[test]
fn skew_elements_are_congruent_under_reordering() {
    let al = Alphabet::parse_inline("x:odd,y:even,z:odd,w:even").unwrap();
    for total in [4u32, 5] {
        for d in Multidegree::all_with_total(al.len(), total) {
            let brackets = bracket_monomial_span(&d, &al);
            for w in d.words(&al) {
                let n = w.len();
                // adjacent swaps among the first n - 2 letters
                for k in 0..n - 3 {
                    let moved = w.swap_adjacent(k);
                    let diff = &bar_word(&w) - &bar_word(&moved).scale(&Rational::from(swap_sign(&w, k)));
                    assert!(brackets.contains(&diff), "{}", al.format_word(&w));
                }
                // x..a b c ≡ -(-1)^{|c|(|a|+|b|) + |a||b|} x..c b a
                let (a, b, c) = (w[n - 3], w[n - 2], w[n - 1]);
                let exp = (c.parity * (a.parity + b.parity)).bit() + (a.parity * b.parity).bit();
                let mut letters: Vec<_> = w.letters().to_vec();
                letters[n - 3] = c;
                letters[n - 1] = a;
                let other = bar_word(&Word::new(&letters));
                let s = if exp % 2 == 0 { -1 } else { 1 };
                let diff = &bar_word(&w) - &other.scale(&Rational::from(s));
                assert!(brackets.contains(&diff), "{}", al.format_word(&w));
            }
        }
    }
}
