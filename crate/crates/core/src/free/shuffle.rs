use num_traits::One;
use smallvec::SmallVec;

use crate::graded::{koszul_sign, packed, Accumulator, FreeElement, Letter, Parity, Rational, Word};

/// Super shuffle of two words via the last-letter recursion
///
/// ```text
/// x ⧢ y       = xy + (-1)^{|x||y|} yx
/// x ⧢ v       = (x ⧢ v') ∘ y_q + (-1)^{|x||v|} v x
/// u ⧢ v       = (-1)^{|x_p||v|} (u' ⧢ v) ∘ x_p + (u ⧢ v') ∘ y_q
/// ```
///
/// where `u'`, `v'` drop the last letters `x_p`, `y_q`; an empty prefix acts
/// as the shuffle unit. The recursion is unrolled depth first, so every
/// branch writes its finished word straight into the result.
pub fn shuffle_words(u: &Word, v: &Word) -> FreeElement {
    let mut out = Accumulator::new();
    shuffle_into(u.letters(), v.letters(), &[], &Rational::one(), &mut out);
    out.finish()
}

/// Pushes the terms of `c · (u ⧢ v) tail` onto `out`, unmerged; either of
/// `u`, `v` may be empty but not all three slices.
pub(crate) fn shuffle_into(
    u: &[Letter],
    v: &[Letter],
    tail: &[Letter],
    c: &Rational,
    out: &mut Accumulator,
) {
    let neg_c = -c;
    if u.len() + v.len() + tail.len() <= packed::MAX_LEN {
        if let (Some(u_keys), Some(v_keys), Some(tail_key)) =
            (prefix_keys(u), prefix_keys(v), packed::key(tail))
        {
            let mut state = PackedUnroll {
                u_keys,
                v_keys,
                v_parity: prefix_parities(v),
                u_parity: u.iter().map(|l| l.parity).collect(),
                tail_key,
                tail_len: tail.len(),
                c,
                neg_c,
                out,
            };
            state.run(u.len(), v.len(), false, 0, 0);
            return;
        }
    }
    let parity = Parity::sum(u.iter().chain(v).chain(tail).map(|l| l.parity));
    let mut state = Unroll {
        u,
        v,
        v_parity: prefix_parities(v).to_vec(),
        suffix: Vec::with_capacity(u.len() + v.len()),
        tail,
        buf: Vec::with_capacity(u.len() + v.len() + tail.len()),
        c,
        neg_c,
        parity,
        out,
    };
    state.run(u.len(), v.len(), false);
}

type Prefixes<T> = SmallVec<[T; packed::MAX_LEN + 1]>;

/// Parities of the prefixes `w[..j]`.
fn prefix_parities(w: &[Letter]) -> Prefixes<Parity> {
    let mut out = Prefixes::with_capacity(w.len() + 1);
    out.push(Parity::Even);
    for l in w {
        out.push(out[out.len() - 1] + l.parity);
    }
    out
}

/// Packed keys of the prefixes `w[..j]`.
fn prefix_keys(w: &[Letter]) -> Option<Prefixes<u64>> {
    let mut keys = Prefixes::with_capacity(w.len() + 1);
    keys.push(0);
    for &l in w {
        keys.push(keys[keys.len() - 1] << 8 | packed::code(l)?);
    }
    Some(keys)
}

/// The same recursion on packed keys, for results of at most eight letters.
struct PackedUnroll<'a> {
    u_keys: Prefixes<u64>,
    v_keys: Prefixes<u64>,
    u_parity: Prefixes<Parity>,
    v_parity: Prefixes<Parity>,
    tail_key: u64,
    tail_len: usize,
    c: &'a Rational,
    neg_c: Rational,
    out: &'a mut Accumulator,
}

impl PackedUnroll<'_> {
    // `suffix` holds the `suffix_len` letters fixed so far
    fn run(&mut self, i: usize, j: usize, negative: bool, suffix: u64, suffix_len: usize) {
        if i == 0 || j == 0 {
            let prefix = if i == 0 { self.v_keys[j] } else { self.u_keys[i] };
            let key = packed::join(packed::join(prefix, suffix, suffix_len), self.tail_key, self.tail_len);
            let c = if negative { &self.neg_c } else { self.c };
            self.out.add_packed(key, c);
            return;
        }
        // the low byte of a prefix key is the code of its last letter
        let x = self.u_keys[i] & 0xff;
        let y = self.v_keys[j] & 0xff;
        let shift = 8 * suffix_len;
        let sign = (self.u_parity[i - 1] * self.v_parity[j]).is_odd();
        self.run(i - 1, j, negative ^ sign, x << shift | suffix, suffix_len + 1);
        self.run(i, j - 1, negative, y << shift | suffix, suffix_len + 1);
    }
}

struct Unroll<'a> {
    u: &'a [Letter],
    v: &'a [Letter],
    v_parity: Vec<Parity>,
    // letters fixed so far, last letter first
    suffix: Vec<Letter>,
    tail: &'a [Letter],
    buf: Vec<Letter>,
    c: &'a Rational,
    neg_c: Rational,
    parity: Parity,
    out: &'a mut Accumulator,
}

impl Unroll<'_> {
    fn run(&mut self, i: usize, j: usize, negative: bool) {
        if i == 0 || j == 0 {
            self.buf.clear();
            self.buf.extend_from_slice(&self.u[..i]);
            self.buf.extend_from_slice(&self.v[..j]);
            self.buf.extend(self.suffix.iter().rev());
            self.buf.extend_from_slice(self.tail);
            let coeff = if negative { self.neg_c.clone() } else { self.c.clone() };
            self.out.add(Word::with_parity(&self.buf, self.parity), coeff);
            return;
        }
        let x = self.u[i - 1];
        self.suffix.push(x);
        self.run(i - 1, j, negative ^ (x.parity * self.v_parity[j]).is_odd());
        self.suffix.pop();
        self.suffix.push(self.v[j - 1]);
        self.run(i, j - 1, negative);
        self.suffix.pop();
    }
}

/// Super shuffle straight from the definition: sum over all interleavings
/// with the Koszul sign of the interleaving permutation. Used as an oracle.
pub fn shuffle_by_enumeration(u: &Word, v: &Word) -> FreeElement {
    let (p, q) = (u.len(), v.len());
    let n = p + q;
    assert!(n < 64, "word too long to enumerate");
    let uv = u.concat(v);
    let mut out = FreeElement::zero();
    let mut perm = vec![0usize; n];
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        // positions with a set bit receive the letters of u, in order
        let (mut iu, mut iv) = (0, p);
        for (k, slot) in perm.iter_mut().enumerate() {
            if mask >> k & 1 == 1 {
                *slot = iu;
                iu += 1;
            } else {
                *slot = iv;
                iv += 1;
            }
        }
        let w = uv.permute(&perm).expect("interleaving is a permutation");
        let sign = koszul_sign(&perm, &uv).expect("interleaving is a permutation");
        out.add_term(w, Rational::from(sign));
    }
    out
}

/// Bilinear extension of [`shuffle_words`]; zero if either side is zero.
pub fn super_shuffle(u: &FreeElement, v: &FreeElement) -> FreeElement {
    let mut out = Accumulator::new();
    super_shuffle_into(u, v, &Rational::from(1), &mut out);
    out.finish()
}

/// Adds `c · (u ⧢ v)` to `out`.
pub fn super_shuffle_into(u: &FreeElement, v: &FreeElement, c: &Rational, out: &mut Accumulator) {
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            shuffle_into(a.letters(), b.letters(), &[], &(c * &(ca * cb)), out);
        }
    }
}
