//! Residuals of the identities satisfied by the products on the free
//! algebra. Each function returns `lhs - rhs` for homogeneous arguments, so
//! an identity holds on a tuple iff its residual is zero.
//!
//! The residuals are summed in one accumulator, so the intermediate
//! products never have to be sorted.

use super::{
    super_anticommutator as anti, super_anticommutator_into as anti_into, super_commutator as com,
    super_commutator_into as com_into, super_shuffle as sh, super_shuffle_into as sh_into,
    zinbiel_product as zin, zinbiel_product_into as zin_into,
};
use crate::graded::{swap_sign, Accumulator, FreeElement, Parity, Rational};

fn par(u: &FreeElement) -> Parity {
    u.parity().unwrap_or(Parity::Even)
}

fn s(a: &FreeElement, b: &FreeElement) -> Rational {
    swap_sign(par(a), par(b))
}

fn one() -> Rational {
    Rational::from(1)
}

fn residual(f: impl FnOnce(&mut Accumulator)) -> FreeElement {
    let mut acc = Accumulator::new();
    f(&mut acc);
    acc.finish()
}

/// `a∘(b∘c) - (a∘b)∘c - (-1)^{|a||b|} (b∘a)∘c`.
pub fn zinbiel(a: &FreeElement, b: &FreeElement, c: &FreeElement) -> FreeElement {
    residual(|r| {
        zin_into(a, &zin(b, c), &one(), r);
        zin_into(&zin(a, b), c, &-one(), r);
        zin_into(&zin(b, a), c, &-s(a, b), r);
    })
}

/// `a ⧢ b - (-1)^{|a||b|} b ⧢ a`.
pub fn shuffle_commutativity(a: &FreeElement, b: &FreeElement) -> FreeElement {
    residual(|r| {
        sh_into(a, b, &one(), r);
        sh_into(b, a, &-s(a, b), r);
    })
}

/// `(a ⧢ b) ⧢ c - a ⧢ (b ⧢ c)`.
pub fn shuffle_associativity(a: &FreeElement, b: &FreeElement, c: &FreeElement) -> FreeElement {
    residual(|r| {
        sh_into(&sh(a, b), c, &one(), r);
        sh_into(a, &sh(b, c), &-one(), r);
    })
}

/// `{a, b} - (-1)^{|a||b|} {b, a}`.
pub fn anticommutator_commutativity(a: &FreeElement, b: &FreeElement) -> FreeElement {
    residual(|r| {
        anti_into(a, b, &one(), r);
        anti_into(b, a, &-s(a, b), r);
    })
}

/// `{{a, b}, c} - {a, {b, c}}`.
pub fn anticommutator_associativity(a: &FreeElement, b: &FreeElement, c: &FreeElement) -> FreeElement {
    residual(|r| {
        anti_into(&anti(a, b), c, &one(), r);
        anti_into(a, &anti(b, c), &-one(), r);
    })
}

/// `[a, b] + (-1)^{|a||b|} [b, a]`.
pub fn commutator_anticommutativity(a: &FreeElement, b: &FreeElement) -> FreeElement {
    residual(|r| {
        com_into(a, b, &one(), r);
        com_into(b, a, &s(a, b), r);
    })
}

/// The super-Jacobian `(xy)z - x(yz) - (-1)^{|y||z|} (xz)y` of the bracket.
pub fn super_jacobian(x: &FreeElement, y: &FreeElement, z: &FreeElement) -> FreeElement {
    residual(|r| {
        com_into(&com(x, y), z, &one(), r);
        com_into(x, &com(y, z), &-one(), r);
        com_into(&com(x, z), y, &-s(y, z), r);
    })
}

/// `(ab)(cd) - (-1)^{|d|(|b|+|c|)} (ad)(bc) - J(a,b,c)d - (-1)^{|a||b|} b J(a,c,d)`
/// for the bracket product.
pub fn super_tortkara(a: &FreeElement, b: &FreeElement, c: &FreeElement, d: &FreeElement) -> FreeElement {
    let parts = TortkaraParts {
        ab: com(a, b),
        jabc: super_jacobian(a, b, c),
    };
    parts.residual(a, b, c, d)
}

/// The pieces of the super Tortkara residual that depend only on `(a, b, c)`,
/// so sweeps over the last argument can share them.
#[derive(Debug, Clone)]
pub struct TortkaraParts {
    pub ab: FreeElement,
    pub jabc: FreeElement,
}

impl TortkaraParts {
    pub fn new(a: &FreeElement, b: &FreeElement, c: &FreeElement) -> Self {
        TortkaraParts { ab: com(a, b), jabc: super_jacobian(a, b, c) }
    }

    pub fn residual(&self, a: &FreeElement, b: &FreeElement, c: &FreeElement, d: &FreeElement) -> FreeElement {
        let (pb, pc, pd) = (par(b), par(c), par(d));
        residual(|r| {
            com_into(&self.ab, &com(c, d), &one(), r);
            com_into(&com(a, d), &com(b, c), &-(pd * (pb + pc)).sign_rational(), r);
            com_into(&self.jabc, d, &-one(), r);
            com_into(b, &super_jacobian(a, c, d), &-s(a, b), r);
        })
    }
}
