//! Rota–Baxter operators of either parity on structure-constant superalgebras,
//! the Zinbiel products they induce, and the parity-shift construction.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::graded::{swap_sign, Parity, Rational};
use crate::poly::Poly;
use crate::superalgebra::{verify_identity, AlgebraError, IdentityKind, IdentityVerdict, SparseVec, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotaBaxterError {
    #[error("{}syntax error: {message}", if *line > 0 { format!("line {line}: ") } else { String::new() })]
    Syntax { line: usize, message: String },
    #[error("operator acts on dimension {operator} but the algebra has dimension {algebra}")]
    DimensionMismatch { operator: usize, algebra: usize },
    #[error("operator of parity {parity} sends e{from} to e{to}, breaking the block structure")]
    NotHomogeneous { parity: Parity, from: usize, to: usize },
    #[error("the algebra is not supercommutative associative (fails at {tuple:?})")]
    NotSupercommutativeAssociative { tuple: Vec<usize> },
    #[error("the algebra is not Zinbiel (fails at {tuple:?})")]
    NotZinbiel { tuple: Vec<usize> },
    #[error("the operator is not Rota–Baxter (fails at e{}, e{})", .pair.0 + 1, .pair.1 + 1)]
    NotRotaBaxter { pair: (usize, usize) },
    #[error("the tower needs an even operator")]
    OddTowerOperator,
    #[error("tower level {level}: {reason}")]
    Tower { level: usize, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parity-homogeneous linear map. `matrix[j][i]` is the coefficient of
/// `e_j` in the image of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOperator {
    even_dim: usize,
    matrix: Vec<Vec<Rational>>,
    parity: Parity,
}

impl GradedOperator {
    pub fn new(even_dim: usize, matrix: Vec<Vec<Rational>>, parity: Parity) -> Result<Self, RotaBaxterError> {
        let n = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(RotaBaxterError::DimensionMismatch { operator: n, algebra: row.len() });
        }
        let op = GradedOperator { even_dim, matrix, parity };
        for (j, row) in op.matrix.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() && op.block_parity(j) != op.block_parity(i) + parity {
                    return Err(RotaBaxterError::NotHomogeneous { parity, from: i + 1, to: j + 1 });
                }
            }
        }
        Ok(op)
    }

    pub fn zero(even_dim: usize, odd_dim: usize, parity: Parity) -> Self {
        let n = even_dim + odd_dim;
        GradedOperator { even_dim, matrix: vec![vec![Rational::zero(); n]; n], parity }
    }

    pub fn identity(even_dim: usize, odd_dim: usize) -> Self {
        let mut op = Self::zero(even_dim, odd_dim, Parity::Even);
        for i in 0..op.dim() {
            op.matrix[i][i] = Rational::one();
        }
        op
    }

    /// A diagonal even operator.
    pub fn diagonal(even_dim: usize, entries: Vec<Rational>) -> Self {
        let mut op = Self::zero(even_dim, entries.len() - even_dim, Parity::Even);
        for (i, c) in entries.into_iter().enumerate() {
            op.matrix[i][i] = c;
        }
        op
    }

    fn block_parity(&self, i: usize) -> Parity {
        if i < self.even_dim { Parity::Even } else { Parity::Odd }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn apply(&self, v: &[(usize, Rational)]) -> SparseVec {
        (0..self.dim())
            .filter_map(|j| {
                let c = v.iter().fold(Rational::zero(), |acc, (i, x)| acc + &self.matrix[j][*i] * x);
                (!c.is_zero()).then_some((j, c))
            })
            .collect()
    }

    pub fn image(&self, i: usize) -> SparseVec {
        self.apply(&[(i, Rational::one())])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedOperator) -> GradedOperator {
        let n = self.dim();
        let matrix = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| (0..n).fold(Rational::zero(), |acc, k| acc + &self.matrix[j][k] * &other.matrix[k][i]))
                    .collect()
            })
            .collect();
        GradedOperator { even_dim: self.even_dim, matrix, parity: self.parity + other.parity }
    }

    pub fn power(&self, k: usize) -> GradedOperator {
        let mut out = Self::identity(self.even_dim, self.dim() - self.even_dim);
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// Parses `parity even|odd` followed by `i j coefficient` lines, each
    /// setting the coefficient of `e_j` in the image of `e_i` (1-based).
    pub fn parse(src: &str, even_dim: usize, odd_dim: usize) -> Result<Self, RotaBaxterError> {
        let n = even_dim + odd_dim;
        let mut parity = None;
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let syntax = |m: &str| RotaBaxterError::Syntax { line, message: m.to_string() };
            let fields: Vec<&str> = text.split_whitespace().collect();
            match (fields.as_slice(), parity) {
                (["parity", p], None) => parity = Some(p.parse::<Parity>().map_err(|e| syntax(&e))?),
                (["parity", _], Some(_)) => return Err(syntax("duplicate `parity` header")),
                (_, None) => return Err(syntax("expected `parity even|odd` first")),
                (&[i, j, c], Some(_)) => {
                    let index = |s: &str| match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(syntax(&format!("basis index must lie in 1..={n}"))),
                    };
                    let c: Rational = c.parse().map_err(|_| syntax("malformed coefficient"))?;
                    let (i, j) = (index(i)?, index(j)?);
                    matrix[j][i] += &c;
                }
                _ => return Err(syntax("expected `i j coefficient`")),
            }
        }
        let parity = parity.ok_or(RotaBaxterError::Syntax { line: 0, message: "missing `parity` header".into() })?;
        Self::new(even_dim, matrix, parity)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("parity {}\n", if self.parity.is_odd() { "odd" } else { "even" });
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.matrix[j][i].is_zero() {
                    out.push_str(&format!("{} {} {}\n", i + 1, j + 1, self.matrix[j][i]));
                }
            }
        }
        out
    }

    fn check_dims(&self, alg: &SuperAlgebra) -> Result<(), RotaBaxterError> {
        if self.dim() != alg.dim() || self.even_dim != alg.even_dim() {
            return Err(RotaBaxterError::DimensionMismatch { operator: self.dim(), algebra: alg.dim() });
        }
        Ok(())
    }
}

impl fmt::Display for GradedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn axpy(terms: &[(Rational, &SparseVec)]) -> SparseVec {
    let mut acc: Vec<(usize, Rational)> = Vec::new();
    for (c, v) in terms {
        for (i, x) in v.iter() {
            match acc.iter_mut().find(|(k, _)| k == i) {
                Some((_, s)) => *s += &(c * x),
                None => acc.push((*i, c * x)),
            }
        }
    }
    acc.retain(|(_, c)| !c.is_zero());
    acc.sort_unstable_by_key(|(k, _)| *k);
    acc
}

/// `R(x)R(y) - R(s R(x) y + x R(y))` with `s = (-1)^{|R|(|x|+|R|)}`, for basis `x`, `y`.
pub fn rota_baxter_residual(alg: &SuperAlgebra, r: &GradedOperator, x: usize, y: usize) -> SparseVec {
    let (ex, ey) = (vec![(x, Rational::one())], vec![(y, Rational::one())]);
    let (rx, ry) = (r.apply(&ex), r.apply(&ey));
    let s = (r.parity * (alg.parity(x) + r.parity)).sign_rational();
    let inner = axpy(&[(s, &alg.mul_sparse(&rx, &ey)), (Rational::one(), &alg.mul_sparse(&ex, &ry))]);
    axpy(&[(Rational::one(), &alg.mul_sparse(&rx, &ry)), (-Rational::one(), &r.apply(&inner))])
}

/// The defining identity on all basis pairs; bilinearity makes this sufficient.
pub fn is_rota_baxter(alg: &SuperAlgebra, r: &GradedOperator) -> Result<IdentityVerdict, RotaBaxterError> {
    r.check_dims(alg)?;
    for x in 0..alg.dim() {
        for y in 0..alg.dim() {
            let residual = rota_baxter_residual(alg, r, x, y);
            if !residual.is_empty() {
                return Ok(IdentityVerdict::Fails { tuple: vec![x, y], residual });
            }
        }
    }
    Ok(IdentityVerdict::Holds)
}

/// The Rota–Baxter identity as polynomial equations in the entries of an
/// unknown operator of the given parity.
///
/// Unknowns are the entries allowed by the block structure, numbered
/// column by column; [`operator_from_values`] inverts the numbering.
pub fn rota_baxter_system(alg: &SuperAlgebra, parity: Parity) -> (Vec<(usize, usize)>, Vec<Poly>) {
    let n = alg.dim();
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (j, i)))
        .filter(|&(j, i)| alg.parity(j) == alg.parity(i) + parity)
        .collect();
    let nv = slots.len();
    let entry = |j: usize, i: usize| match slots.iter().position(|&s| s == (j, i)) {
        Some(v) => Poly::var(nv, v),
        None => Poly::zero(nv),
    };
    let apply = |v: &[Poly]| -> Vec<Poly> {
        (0..n)
            .map(|j| (0..n).fold(Poly::zero(nv), |acc, i| if v[i].is_zero() { acc } else { acc.add(&entry(j, i).mul(&v[i])) }))
            .collect()
    };
    let mul = |u: &[Poly], v: &[Poly]| -> Vec<Poly> {
        let mut out = vec![Poly::zero(nv); n];
        for (a, pa) in u.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (b, pb) in v.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let ab = pa.mul(pb);
                for (k, c) in alg.basis_product(a, b) {
                    out[*k] = out[*k].add(&ab.scale(c));
                }
            }
        }
        out
    };
    let unit = |i: usize| -> Vec<Poly> {
        (0..n).map(|k| if k == i { Poly::constant(nv, Rational::one()) } else { Poly::zero(nv) }).collect()
    };
    let mut equations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (unit(x), unit(y));
            let (rx, ry) = (apply(&ex), apply(&ey));
            let s = (parity * (alg.parity(x) + parity)).sign_rational();
            let inner: Vec<Poly> =
                mul(&rx, &ey).iter().zip(mul(&ex, &ry)).map(|(a, b)| a.scale(&s).add(&b)).collect();
            let lhs = mul(&rx, &ry);
            for (l, r) in lhs.iter().zip(apply(&inner)) {
                let eq = l.sub(&r);
                if !eq.is_zero() && !equations.contains(&eq) {
                    equations.push(eq);
                }
            }
        }
    }
    (slots, equations)
}

/// Builds the operator whose unknown entries take `values`.
pub fn operator_from_values(
    alg: &SuperAlgebra,
    parity: Parity,
    slots: &[(usize, usize)],
    values: &[Rational],
) -> Result<GradedOperator, RotaBaxterError> {
    let n = alg.dim();
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    for (&(j, i), v) in slots.iter().zip(values) {
        matrix[j][i] = v.clone();
    }
    GradedOperator::new(alg.even_dim(), matrix, parity)
}

/// The values an operator gives to the unknowns of [`rota_baxter_system`].
pub fn operator_values(r: &GradedOperator, slots: &[(usize, usize)]) -> Vec<Rational> {
    slots.iter().map(|&(j, i)| r.matrix[j][i].clone()).collect()
}

fn require_rota_baxter(alg: &SuperAlgebra, r: &GradedOperator) -> Result<(), RotaBaxterError> {
    match is_rota_baxter(alg, r)? {
        IdentityVerdict::Holds => Ok(()),
        IdentityVerdict::Fails { tuple, .. } => Err(RotaBaxterError::NotRotaBaxter { pair: (tuple[0], tuple[1]) }),
    }
}

fn from_table<F>(alg: &SuperAlgebra, parity: Parity, mut product: F) -> Result<SuperAlgebra, RotaBaxterError>
where
    F: FnMut(usize, usize) -> SparseVec,
{
    let n = alg.dim();
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            constants.extend(product(i, j).into_iter().map(|(k, c)| ((i, j, k), c)));
        }
    }
    Ok(SuperAlgebra::from_constants(alg.even_dim(), alg.odd_dim(), parity, constants)?)
}

/// `a∘b = R(a)b` on a supercommutative associative algebra. The product has
/// the parity of `R`.
pub fn derived_product(alg: &SuperAlgebra, r: &GradedOperator) -> Result<SuperAlgebra, RotaBaxterError> {
    r.check_dims(alg)?;
    if let IdentityVerdict::Fails { tuple, .. } = verify_identity(alg, IdentityKind::SuperCommutativeAssociative) {
        return Err(RotaBaxterError::NotSupercommutativeAssociative { tuple });
    }
    require_rota_baxter(alg, r)?;
    from_table(alg, r.parity, |i, j| alg.mul_sparse(&r.image(i), &[(j, Rational::one())]))
}

/// `a∘' b = R(a)∘b + a∘R(b)`.
pub fn next_product(z: &SuperAlgebra, r: &GradedOperator) -> Result<SuperAlgebra, RotaBaxterError> {
    from_table(z, z.product_parity() + r.parity, |i, j| {
        let (ei, ej) = (vec![(i, Rational::one())], vec![(j, Rational::one())]);
        axpy(&[
            (Rational::one(), &z.mul_sparse(&r.image(i), &ej)),
            (Rational::one(), &z.mul_sparse(&ei, &r.image(j))),
        ])
    })
}

/// `[∘_0, ∘_1, ..., ∘_n]` with `∘_0` the product of `z`. Every level is
/// checked to be Zinbiel with `R` still Rota–Baxter for it.
pub fn derived_tower(z: &SuperAlgebra, r: &GradedOperator, n: usize) -> Result<Vec<SuperAlgebra>, RotaBaxterError> {
    r.check_dims(z)?;
    if r.parity.is_odd() {
        return Err(RotaBaxterError::OddTowerOperator);
    }
    let certify = |level: usize, alg: &SuperAlgebra| -> Result<(), RotaBaxterError> {
        let reason = match (verify_identity(alg, IdentityKind::SuperZinbiel), is_rota_baxter(alg, r)?) {
            (IdentityVerdict::Fails { tuple, .. }, _) => format!("not Zinbiel at {tuple:?}"),
            (_, IdentityVerdict::Fails { tuple, .. }) => format!("operator is not Rota–Baxter at {tuple:?}"),
            _ => return Ok(()),
        };
        Err(RotaBaxterError::Tower { level, reason })
    };
    certify(0, z)?;
    let mut tower = vec![z.clone()];
    for level in 1..=n {
        let next = next_product(&tower[level - 1], r)?;
        certify(level, &next)?;
        tower.push(next);
    }
    Ok(tower)
}

fn binomial(n: usize, k: usize) -> Rational {
    Rational::from_integer((0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64))
}

/// `Σ_i C(n,i) R^{i+1}(a) R^{n-i}(b)`: the closed form of the tower built
/// from `a∘b = R(a)b` on a supercommutative associative algebra.
pub fn binomial_product(alg: &SuperAlgebra, r: &GradedOperator, n: usize) -> Result<SuperAlgebra, RotaBaxterError> {
    binomial_sum(alg, r, n, |i| (i + 1, n - i))
}

/// `Σ_i C(n,i) R^i(a) R^{n-i+1}(b)`, the mirror image of
/// [`binomial_product`]; at `n = 0` it is `aR(b)` rather than `R(a)b`.
pub fn mirrored_binomial_product(alg: &SuperAlgebra, r: &GradedOperator, n: usize) -> Result<SuperAlgebra, RotaBaxterError> {
    binomial_sum(alg, r, n, |i| (i, n - i + 1))
}

fn binomial_sum<F>(alg: &SuperAlgebra, r: &GradedOperator, n: usize, powers: F) -> Result<SuperAlgebra, RotaBaxterError>
where
    F: Fn(usize) -> (usize, usize),
{
    r.check_dims(alg)?;
    if r.parity.is_odd() {
        return Err(RotaBaxterError::OddTowerOperator);
    }
    let pw: Vec<GradedOperator> = (0..=n + 1).map(|k| r.power(k)).collect();
    from_table(alg, Parity::Even, |i, j| {
        let parts: Vec<(Rational, SparseVec)> = (0..=n)
            .map(|k| {
                let (p, q) = powers(k);
                (binomial(n, k), alg.mul_sparse(&pw[p].image(i), &pw[q].image(j)))
            })
            .collect();
        let refs: Vec<(Rational, &SparseVec)> = parts.iter().map(|(c, v)| (c.clone(), v)).collect();
        axpy(&refs)
    })
}

/// `a∘' b = (-1)^{|a||b|} b∘a`.
pub fn super_opposite(alg: &SuperAlgebra) -> SuperAlgebra {
    let flip = alg.constants().map(|(i, j, k, c)| ((j, i, k), c * &swap_sign(alg.parity(i), alg.parity(j))));
    SuperAlgebra::from_constants(alg.even_dim(), alg.odd_dim(), alg.product_parity(), flip.collect::<Vec<_>>())
        .expect("swapping arguments keeps the grading")
}

/// Position in the shifted basis of each original basis vector: the old odd
/// vectors come first, since they become even.
fn shift_permutation(alg: &SuperAlgebra) -> Vec<usize> {
    let (p, q) = (alg.even_dim(), alg.odd_dim());
    (0..p + q).map(|i| if i < p { q + i } else { i - p }).collect()
}

fn shift_with_sign(alg: &SuperAlgebra, extra: Parity) -> SuperAlgebra {
    let to = shift_permutation(alg);
    let constants: Vec<_> = alg
        .constants()
        .map(|(i, j, k, c)| {
            // parity of the first argument after the shift
            let sign = (alg.parity(i).flip() + extra).sign_rational();
            ((to[i], to[j], to[k]), c * &sign)
        })
        .collect();
    SuperAlgebra::from_constants(alg.odd_dim(), alg.even_dim(), alg.product_parity().flip(), constants)
        .expect("a parity shift keeps the grading")
}

/// `a⋆b = (-1)^{|a|} Π(Π(a)∘Π(b))` on the parity-shifted space. The shifted
/// basis lists the formerly odd vectors first.
pub fn parity_shift(z: &SuperAlgebra) -> SuperAlgebra {
    shift_with_sign(z, Parity::Even)
}

/// Undoes [`parity_shift`]: `a∘b = (-1)^{|a|+1} Π(Π(a)⋆Π(b))`.
pub fn parity_unshift(star: &SuperAlgebra) -> SuperAlgebra {
    shift_with_sign(star, Parity::Odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn block_structure_is_enforced() {
        let m = vec![vec![q(0, 1), q(1, 1)], vec![q(0, 1), q(0, 1)]];
        assert!(matches!(
            GradedOperator::new(1, m.clone(), Parity::Even),
            Err(RotaBaxterError::NotHomogeneous { from: 2, to: 1, .. })
        ));
        assert!(GradedOperator::new(1, m, Parity::Odd).is_ok());
    }

    #[test]
    fn operator_text_round_trip() {
        let r = GradedOperator::parse("# integration\nparity even\n1 1 2\n2 2 1/2\n", 2, 0).unwrap();
        assert_eq!(r.matrix()[1][1], q(1, 2));
        assert_eq!(GradedOperator::parse(&r.to_text(), 2, 0).unwrap(), r);
        assert!(matches!(GradedOperator::parse("1 1 1\n", 1, 0), Err(RotaBaxterError::Syntax { line: 1, .. })));
        assert!(matches!(GradedOperator::parse("parity even\n1 3 1\n", 1, 1), Err(RotaBaxterError::Syntax { line: 2, .. })));
    }

    #[test]
    fn zero_operator_is_rota_baxter_with_zero_products() {
        let a = SuperAlgebra::parse("dims 1 2\n2 3 1 1\n3 2 1 -1\n").unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            let r = GradedOperator::zero(1, 2, parity);
            assert!(is_rota_baxter(&a, &r).unwrap().holds());
            assert!(derived_product(&a, &r).unwrap().is_trivial());
        }
    }

    #[test]
    fn identity_on_square_zero_algebra() {
        let trivial = SuperAlgebra::zero(1, 1);
        assert!(is_rota_baxter(&trivial, &GradedOperator::identity(1, 1)).unwrap().holds());
        // x·x = x: R(x)R(x) = x but R(2x) = 2x
        let idem = SuperAlgebra::parse("dims 1 0\n1 1 1 1\n").unwrap();
        assert!(!is_rota_baxter(&idem, &GradedOperator::identity(1, 0)).unwrap().holds());
    }

    #[test]
    fn system_vanishes_exactly_on_rota_baxter_operators() {
        let a = SuperAlgebra::parse("dims 2 0\n1 1 2 1\n").unwrap();
        let (slots, eqs) = rota_baxter_system(&a, Parity::Even);
        for (d1, d2, ok) in [(2, 1, true), (1, 1, false), (4, 2, true), (3, 1, false)] {
            let r = GradedOperator::diagonal(2, vec![q(d1, 1), q(d2, 1)]);
            let vals = operator_values(&r, &slots);
            assert_eq!(eqs.iter().all(|e| e.evaluate(&vals).is_zero()), ok);
            assert_eq!(is_rota_baxter(&a, &r).unwrap().holds(), ok);
        }
    }

    #[test]
    fn binomial_coefficients() {
        assert_eq!((0..=4).map(|k| binomial(4, k)).collect::<Vec<_>>(), [1, 4, 6, 4, 1].map(Rational::from));
    }

    #[test]
    fn shift_round_trips() {
        let z = SuperAlgebra::parse("dims 1 1\n2 2 1 1\n2 1 2 3\n").unwrap();
        let star = parity_shift(&z);
        assert_eq!((star.even_dim(), star.odd_dim()), (1, 1));
        assert_eq!(star.product_parity(), Parity::Odd);
        assert_eq!(parity_unshift(&star), z);
        assert!(parity_shift(&SuperAlgebra::zero(2, 1)).is_trivial());
    }
}
