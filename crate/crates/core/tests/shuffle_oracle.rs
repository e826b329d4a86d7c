//! Production shuffle paths against the permutation-enumeration definition.

use zinbiel_core::free::{shuffle_by_enumeration, shuffle_words, super_shuffle, Alphabet, Multidegree};
use zinbiel_core::graded::{FreeElement, Letter, Parity, Word};

fn check(u: &Word, v: &Word) {
    let oracle = shuffle_by_enumeration(u, v);
    assert_eq!(shuffle_words(u, v), oracle, "{u:?} {v:?}");
    let (fu, fv) = (FreeElement::from_word(u.clone()), FreeElement::from_word(v.clone()));
    assert_eq!(super_shuffle(&fu, &fv), oracle, "{u:?} {v:?}");
}

#[test]
fn distinct_letters_every_parity_pattern_up_to_total_eight() {
    let mut pairs = 0;
    for n in 2..=8usize {
        for mask in 0..1u32 << n {
            let letters: Vec<Letter> = (0..n)
                .map(|i| Letter::new(i as u16, Parity::from_bit((mask >> i & 1) as u8)))
                .collect();
            for p in 1..n {
                check(&Word::new(&letters[..p]), &Word::new(&letters[p..]));
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs, (2..=8).map(|n: u32| (n - 1) << n).sum::<u32>());
}

#[test]
fn repeated_letters_up_to_total_six() {
    let al = Alphabet::parse_inline("a:even,b:even,x:odd,y:odd").unwrap();
    let words = |len: u32| -> Vec<Word> {
        Multidegree::all_with_total(al.len(), len).iter().flat_map(|d| d.words(&al)).collect()
    };
    for total in 2..=6 {
        for p in 1..total {
            for u in words(p) {
                for v in words(total - p) {
                    check(&u, &v);
                }
            }
        }
    }
}
