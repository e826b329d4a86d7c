use serde::Serialize;

use super::{AlgebraError, SuperAlgebra};
use crate::graded::{Parity, Rational};

/// Largest supported number of Grassmann generators.
pub const MAX_GRASSMANN_GENERATORS: usize = 12;

/// A basis vector `ξ_S ⊗ e_i` of a truncated Grassmann envelope; `S` is a
/// bit set of generator indices with `|S| ≡ |e_i|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnvelopeBasis {
    pub monomial: u32,
    pub index: usize,
}

/// The even part `G_0 ⊗ A_0 + G_1 ⊗ A_1` of `G ⊗ A`, where `G` is the
/// Grassmann algebra on `n` generators, as an ordinary (purely even)
/// algebra. Products are `(ξ_S ⊗ a)(ξ_T ⊗ b) = ξ_S ξ_T ⊗ ab`.
#[derive(Debug, Clone)]
pub struct GrassmannEnvelope {
    pub algebra: SuperAlgebra,
    pub basis: Vec<EnvelopeBasis>,
    pub generators: usize,
}

/// `ξ_S ξ_T = ±ξ_{S∪T}`, or `None` when the sets meet.
fn grassmann_product(s: u32, t: u32) -> Option<(u32, bool)> {
    if s & t != 0 {
        return None;
    }
    // each pair (i in S, j in T) with i > j costs one transposition
    let mut swaps = 0;
    for j in 0..32 {
        if t >> j & 1 == 1 {
            swaps += (s >> (j + 1)).count_ones();
        }
    }
    Some((s | t, swaps % 2 == 1))
}

pub fn grassmann_envelope(alg: &SuperAlgebra, n: usize) -> Result<GrassmannEnvelope, AlgebraError> {
    if alg.product_parity().is_odd() {
        return Err(AlgebraError::OddProduct);
    }
    if n == 0 && alg.odd_dim() > 0 {
        return Err(AlgebraError::TruncationTooSmall { generators: n, odd_dim: alg.odd_dim() });
    }
    if n > MAX_GRASSMANN_GENERATORS {
        return Err(AlgebraError::TruncationTooLarge { generators: n, max: MAX_GRASSMANN_GENERATORS });
    }
    let mut basis = Vec::new();
    for monomial in 0..1u32 << n {
        let p = Parity::from_bit((monomial.count_ones() % 2) as u8);
        for index in 0..alg.dim() {
            if alg.parity(index) == p {
                basis.push(EnvelopeBasis { monomial, index });
            }
        }
    }
    let position = |monomial: u32, index: usize| {
        basis
            .binary_search_by(|b| (b.monomial, b.index).cmp(&(monomial, index)))
            .expect("graded product lands in the envelope")
    };
    let mut constants = Vec::new();
    for (x, bx) in basis.iter().enumerate() {
        for (y, by) in basis.iter().enumerate() {
            let Some((m, negative)) = grassmann_product(bx.monomial, by.monomial) else {
                continue;
            };
            for (k, c) in alg.basis_product(bx.index, by.index) {
                let c = if negative { -c } else { c.clone() };
                constants.push(((x, y, position(m, *k)), c));
            }
        }
    }
    let algebra = SuperAlgebra::from_constants(basis.len(), 0, Parity::Even, constants)?;
    Ok(GrassmannEnvelope { algebra, basis, generators: n })
}

impl GrassmannEnvelope {
    /// The coordinates of `ξ_S ⊗ e_i`, if it is a basis vector.
    pub fn position(&self, monomial: u32, index: usize) -> Option<usize> {
        self.basis.iter().position(|b| b.monomial == monomial && b.index == index)
    }

    pub fn coefficient(&self, x: usize, y: usize, z: usize) -> Rational {
        self.algebra.constant(x, y, z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::{verify_identity, IdentityKind};

    #[test]
    fn grassmann_signs() {
        assert_eq!(grassmann_product(0b01, 0b10), Some((0b11, false)));
        assert_eq!(grassmann_product(0b10, 0b01), Some((0b11, true)));
        assert_eq!(grassmann_product(0b01, 0b01), None);
        // ξ2 · ξ1ξ3 = -ξ1ξ2ξ3
        assert_eq!(grassmann_product(0b010, 0b101), Some((0b111, true)));
    }

    #[test]
    fn odd_square_in_the_envelope() {
        // e2 e2 = e1 with e2 odd
        let a = SuperAlgebra::parse("dims 1 1\n2 2 1 1\n").unwrap();
        let env = grassmann_envelope(&a, 2).unwrap();
        let x = env.position(0b01, 1).unwrap();
        let y = env.position(0b10, 1).unwrap();
        let z = env.position(0b11, 0).unwrap();
        assert_eq!(env.coefficient(x, y, z), Rational::from(1));
        assert_eq!(env.coefficient(y, x, z), Rational::from(-1));
        assert!(verify_identity(&env.algebra, IdentityKind::SuperAntiCommutative).holds());
    }

    #[test]
    fn even_algebras_embed_with_scalar_coefficients() {
        let a = SuperAlgebra::parse("dims 2 0\n1 2 2 1\n2 1 2 -1\n").unwrap();
        let env = grassmann_envelope(&a, 0).unwrap();
        assert_eq!(env.algebra, a);
        assert!(matches!(
            grassmann_envelope(&SuperAlgebra::zero(1, 1), 0),
            Err(AlgebraError::TruncationTooSmall { .. })
        ));
    }
}
