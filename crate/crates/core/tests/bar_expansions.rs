//! The closed-form skew-rcom expansions against direct evaluation, for every
//! parity pattern of distinct letters.

use zinbiel_core::free::expansions::{Expansion, SignReading};

fn odd(mask: u32, i: usize) -> u32 {
    mask >> i & 1
}

#[test]
fn corrected_readings_hold_for_every_parity_pattern() {
    for e in Expansion::CHECKED {
        assert_eq!(e.failing_masks(SignReading::Corrected), Vec::<u32>::new(), "{e}");
    }
}

#[test]
fn printed_readings_fail_exactly_where_a_corrected_sign_differs() {
    for e in Expansion::CHECKED {
        let k = e.letters();
        let expected: Vec<u32> = (0..1u32 << k)
            .filter(|&mask| match e {
                // the missing term is |i_{m-1}||i_m|
                Expansion::ProductWithPair { m } => odd(mask, m - 2) * odd(mask, m - 1) == 1,
                // fifth and eighth exponents differ by (|i_{m-1}| + |i_m|) times
                // the parity of J without j_n, resp. without j_{n-1}
                Expansion::BracketGeneral { m, n } => {
                    let roles = odd(mask, m - 2) ^ odd(mask, m - 1);
                    let without_last = (m..m + n - 1).map(|i| odd(mask, i)).sum::<u32>() % 2;
                    let without_second_last = (m..m + n).filter(|&i| i != m + n - 2).map(|i| odd(mask, i)).sum::<u32>() % 2;
                    roles == 1 && (without_last == 1 || without_second_last == 1)
                }
                Expansion::DoubleBracket => true,
                _ => false,
            })
            .collect();
        assert_eq!(e.failing_masks(SignReading::Printed), expected, "{e}");
    }
}
