use std::fmt::Write as _;

use num_traits::Zero;

use super::AlgebraError;
use crate::graded::{Parity, Rational};

/// A sparse vector: `(basis index, coefficient)` pairs, sorted by index,
/// without zero coefficients.
pub type SparseVec = Vec<(usize, Rational)>;

/// A finite-dimensional superalgebra given by structure constants
/// `e_i e_j = Σ_k c_ij^k e_k` over a basis whose first `even_dim` vectors
/// are even and the rest odd.
///
/// The product itself may be odd (as for products derived from an odd
/// operator); then `c_ij^k` is nonzero only if `|e_k| = |e_i| + |e_j| + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    even_dim: usize,
    odd_dim: usize,
    product_parity: Parity,
    // row-major over (i, j)
    table: Vec<SparseVec>,
}

impl SuperAlgebra {
    /// The algebra with zero product.
    pub fn zero(even_dim: usize, odd_dim: usize) -> Self {
        Self::zero_with_parity(even_dim, odd_dim, Parity::Even)
    }

    pub fn zero_with_parity(even_dim: usize, odd_dim: usize, product_parity: Parity) -> Self {
        let n = even_dim + odd_dim;
        SuperAlgebra { even_dim, odd_dim, product_parity, table: vec![Vec::new(); n * n] }
    }

    /// Builds an algebra from 0-based constants `((i, j, k), c)`; repeated
    /// entries are summed.
    pub fn from_constants<I>(
        even_dim: usize,
        odd_dim: usize,
        product_parity: Parity,
        constants: I,
    ) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = ((usize, usize, usize), Rational)>,
    {
        let mut a = Self::zero_with_parity(even_dim, odd_dim, product_parity);
        for ((i, j, k), c) in constants {
            a.add_constant(i, j, k, c, None)?;
        }
        Ok(a)
    }

    fn add_constant(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        c: Rational,
        line: Option<usize>,
    ) -> Result<(), AlgebraError> {
        let n = self.dim();
        if let Some(&index) = [i, j, k].iter().find(|&&x| x >= n) {
            return Err(AlgebraError::IndexOutOfRange { line, index: index + 1, dim: n });
        }
        if c.is_zero() {
            return Ok(());
        }
        if self.parity(k) != self.parity(i) + self.parity(j) + self.product_parity {
            return Err(AlgebraError::Grading { line, i: i + 1, j: j + 1, k: k + 1 });
        }
        let entry = &mut self.table[i * n + j];
        match entry.binary_search_by_key(&k, |(x, _)| *x) {
            Ok(pos) => {
                entry[pos].1 += &c;
                if entry[pos].1.is_zero() {
                    entry.remove(pos);
                }
            }
            Err(pos) => entry.insert(pos, (k, c)),
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn product_parity(&self) -> Parity {
        self.product_parity
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even_dim {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// `e_i e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j)
            .iter()
            .find(|(x, _)| *x == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// All nonzero constants `(i, j, k, c)`, 0-based, in index order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Product of two sparse vectors.
    pub fn mul_sparse(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        match (x, y) {
            ([], _) | (_, []) => Vec::new(),
            ([(i, a)], [(j, b)]) => {
                let ab = a * b;
                self.basis_product(*i, *j).iter().map(|(k, c)| (*k, &ab * c)).collect()
            }
            _ => {
                let mut terms: SparseVec = Vec::new();
                for (i, a) in x {
                    for (j, b) in y {
                        let entry = self.basis_product(*i, *j);
                        if entry.is_empty() {
                            continue;
                        }
                        let ab = a * b;
                        terms.extend(entry.iter().map(|(k, c)| (*k, &ab * c)));
                    }
                }
                merge(terms)
            }
        }
    }

    /// Product of two dense coordinate vectors.
    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        to_dense(&self.mul_sparse(&to_sparse(x.to_vec()), &to_sparse(y.to_vec())), self.dim())
    }

    /// Parses the line-oriented structure-constant format:
    ///
    /// ```text
    /// dims 2 1
    /// parity odd        # optional; the product is even by default
    /// 1 2 1 -1          # c_12^1 = -1 (1-based, even basis first)
    /// ```
    pub fn parse(src: &str) -> Result<Self, AlgebraError> {
        let mut alg: Option<SuperAlgebra> = None;
        for (n, raw) in src.lines().enumerate() {
            let line = n + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let fields: Vec<&str> = text.split_whitespace().collect();
            let syntax = |msg: &str| AlgebraError::Syntax { line, message: msg.to_string() };
            match (fields[0], &mut alg) {
                ("dims", None) => {
                    let [_, p, q] = fields[..] else {
                        return Err(syntax("expected `dims p q`"));
                    };
                    let p = p.parse().map_err(|_| syntax("even dimension is not a number"))?;
                    let q = q.parse().map_err(|_| syntax("odd dimension is not a number"))?;
                    alg = Some(SuperAlgebra::zero(p, q));
                }
                ("dims", Some(_)) => return Err(syntax("duplicate `dims` header")),
                (_, None) => return Err(syntax("expected `dims p q` before any constant")),
                ("parity", Some(a)) => {
                    if !a.is_trivial() {
                        return Err(syntax("`parity` must precede the constants"));
                    }
                    a.product_parity = match fields[..] {
                        [_, "even"] => Parity::Even,
                        [_, "odd"] => Parity::Odd,
                        _ => return Err(syntax("expected `parity even|odd`")),
                    };
                }
                (_, Some(a)) => {
                    let [i, j, k, c] = fields[..] else {
                        return Err(syntax("expected `i j k coefficient`"));
                    };
                    let index = |s: &str| -> Result<usize, AlgebraError> {
                        match s.parse::<usize>() {
                            Ok(x) if x >= 1 => Ok(x - 1),
                            _ => Err(syntax("basis indices are 1-based integers")),
                        }
                    };
                    let c: Rational = c.parse().map_err(|_| syntax("malformed coefficient"))?;
                    a.add_constant(index(i)?, index(j)?, index(k)?, c, Some(line))?;
                }
            }
        }
        alg.ok_or(AlgebraError::Syntax { line: 0, message: "missing `dims p q` header".into() })
    }

    /// The text format read by [`SuperAlgebra::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("dims {} {}\n", self.even_dim, self.odd_dim);
        if self.product_parity.is_odd() {
            out.push_str("parity odd\n");
        }
        for (i, j, k, c) in self.constants() {
            let _ = writeln!(out, "{} {} {} {}", i + 1, j + 1, k + 1, c);
        }
        out
    }
}

pub(crate) fn to_sparse(v: Vec<Rational>) -> SparseVec {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn to_dense(v: &[(usize, Rational)], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Sorts by index, sums repeated indices and drops zeros.
fn merge(mut terms: SparseVec) -> SparseVec {
    terms.sort_unstable_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((last, sum)) if *last == k => *sum += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `Σ c_i v_i` over sparse vectors.
pub(crate) fn combine(terms: &[(Rational, &[(usize, Rational)])]) -> SparseVec {
    let mut all: SparseVec = Vec::new();
    for (c, v) in terms {
        if !c.is_zero() {
            all.extend(v.iter().map(|(i, x)| (*i, c * x)));
        }
    }
    merge(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_text() {
        let src = "dims 2 1\n# comment\n1 2 1 -1\n2 3 3 1\n3 3 1 1/2\n";
        let a = SuperAlgebra::parse(src).unwrap();
        assert_eq!(a.constant(0, 1, 0), Rational::from(-1));
        assert_eq!(a.constant(2, 2, 0), Rational::new(1, 2));
        assert_eq!(SuperAlgebra::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn grading_errors_carry_line_numbers() {
        let err = SuperAlgebra::parse("dims 1 1\n\n1 2 1 1\n").unwrap_err();
        assert_eq!(err, AlgebraError::Grading { line: Some(3), i: 1, j: 2, k: 1 });
        let err = SuperAlgebra::parse("dims 1 1\n1 1 3 1\n").unwrap_err();
        assert!(matches!(err, AlgebraError::IndexOutOfRange { line: Some(2), index: 3, .. }));
        let err = SuperAlgebra::parse("1 1 1 1\n").unwrap_err();
        assert!(matches!(err, AlgebraError::Syntax { line: 1, .. }));
        // odd products flip the grading rule
        let a = SuperAlgebra::parse("dims 1 1\nparity odd\n1 1 2 1\n").unwrap();
        assert_eq!(a.product_parity(), Parity::Odd);
        assert!(SuperAlgebra::parse("dims 1 1\nparity odd\n1 1 1 1\n").is_err());
    }

    #[test]
    fn dense_products() {
        let a = SuperAlgebra::parse("dims 1 1\n1 2 2 1\n2 1 2 -1\n").unwrap();
        let x = vec![Rational::from(2), Rational::from(3)];
        let y = vec![Rational::from(1), Rational::from(1)];
        // (2e1 + 3e2)(e1 + e2) = 2 e2 - 3 e2
        assert_eq!(a.mul(&x, &y), vec![Rational::from(0), Rational::from(-1)]);
    }
}
