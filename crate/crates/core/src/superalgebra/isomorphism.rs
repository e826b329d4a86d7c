//! Isomorphism testing for small superalgebras by exact polynomial solving.
//!
//! An even change of basis `φ(e_i) = Σ_k x_ki f_k` is a homomorphism iff
//! `Σ_k a_ij^k x_lk = Σ_mn x_mi x_nj b_mn^l` for all `i, j, l`; invertibility
//! is encoded by an extra unknown `t` with `t · det = 1`. A reduced Gröbner
//! basis equal to `{1}` proves that no isomorphism exists over any field
//! extension. Otherwise an isomorphism exists over the algebraic closure, and
//! a rational one is searched for by fixing unknowns one at a time: to a
//! rational root when the current basis contains a univariate polynomial in
//! that unknown, and to small ansatz values otherwise.

use num_traits::{One, Zero};
use serde::Serialize;

use super::catalog::CatalogEntry;
use super::{AlgebraError, SuperAlgebra};
use crate::graded::Rational;
use crate::poly::{groebner_basis, is_inconsistent, rational_roots, Poly};

#[derive(Debug, Clone)]
pub struct IsomorphismOptions {
    /// S-polynomial reductions allowed per Gröbner basis computation.
    pub max_reductions: usize,
    /// Values tried for unknowns that the basis leaves free.
    pub ansatz_values: Vec<Rational>,
    /// Gröbner basis computations allowed in the rational witness search.
    pub max_search_steps: usize,
}

impl Default for IsomorphismOptions {
    fn default() -> Self {
        let ansatz_values = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-3, 1)]
            .iter()
            .map(|&(n, d)| Rational::new(n, d))
            .collect();
        IsomorphismOptions { max_reductions: 20_000, ansatz_values, max_search_steps: 400 }
    }
}

/// A change of basis: column `i` holds the coordinates of the image of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChangeOfBasis {
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum IsomorphismVerdict {
    /// Isomorphic over the algebraic closure; `witness` is a verified
    /// rational isomorphism when the search found one.
    Isomorphic { witness: Option<ChangeOfBasis> },
    Distinct,
    Undetermined { reason: String },
}

impl IsomorphismVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsomorphismVerdict::Isomorphic { .. })
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, IsomorphismVerdict::Distinct)
    }

    pub fn name(&self) -> &'static str {
        match self {
            IsomorphismVerdict::Isomorphic { .. } => "isomorphic",
            IsomorphismVerdict::Distinct => "distinct",
            IsomorphismVerdict::Undetermined { .. } => "undetermined",
        }
    }
}

/// Positions of the unknowns: `x_ki` exists only when `e_i` and `f_k` have
/// the same parity.
struct Unknowns {
    index: Vec<Vec<Option<usize>>>,
    t: usize,
    count: usize,
}

impl Unknowns {
    fn new(a: &SuperAlgebra) -> Self {
        let n = a.dim();
        let mut index = vec![vec![None; n]; n];
        let mut count = 0;
        for (k, row) in index.iter_mut().enumerate() {
            for (i, cell) in row.iter_mut().enumerate() {
                if a.parity(k) == a.parity(i) {
                    *cell = Some(count);
                    count += 1;
                }
            }
        }
        Unknowns { index, t: count, count: count + 1 }
    }

    fn entry(&self, k: usize, i: usize) -> Poly {
        match self.index[k][i] {
            Some(v) => Poly::var(self.count, v),
            None => Poly::zero(self.count),
        }
    }
}

fn determinant(m: &[Vec<Poly>], nvars: usize) -> Poly {
    match m.len() {
        0 => Poly::constant(nvars, Rational::one()),
        1 => m[0][0].clone(),
        n => {
            let mut det = Poly::zero(nvars);
            for c in 0..n {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][c].mul(&determinant(&minor, nvars));
                det = if c % 2 == 0 { det.add(&term) } else { det.sub(&term) };
            }
            det
        }
    }
}

/// The polynomial system whose solutions are the isomorphisms `a → b`.
fn isomorphism_system(a: &SuperAlgebra, b: &SuperAlgebra) -> (Vec<Poly>, Unknowns) {
    let n = a.dim();
    let u = Unknowns::new(a);
    let nv = u.count;
    let mut system = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // φ(e_i e_j) in coordinate l
                let mut lhs = Poly::zero(nv);
                for (k, c) in a.basis_product(i, j) {
                    lhs = lhs.add(&u.entry(l, *k).scale(c));
                }
                // φ(e_i) φ(e_j) in coordinate l
                let mut rhs = Poly::zero(nv);
                for m in 0..n {
                    for nn in 0..n {
                        let c = b.constant(m, nn, l);
                        if !c.is_zero() {
                            rhs = rhs.add(&u.entry(m, i).mul(&u.entry(nn, j)).scale(&c));
                        }
                    }
                }
                let eq = lhs.sub(&rhs);
                if !eq.is_zero() {
                    system.push(eq);
                }
            }
        }
    }
    let block = |range: std::ops::Range<usize>| -> Vec<Vec<Poly>> {
        range.clone().map(|k| range.clone().map(|i| u.entry(k, i)).collect()).collect()
    };
    let det = determinant(&block(0..a.even_dim()), nv).mul(&determinant(&block(a.even_dim()..n), nv));
    system.push(Poly::var(nv, u.t).mul(&det).sub(&Poly::constant(nv, Rational::one())));
    (system, u)
}

/// Whether `m` (columns are images) is an invertible even homomorphism.
pub fn is_isomorphism(a: &SuperAlgebra, b: &SuperAlgebra, m: &ChangeOfBasis) -> bool {
    let n = a.dim();
    if b.dim() != n || a.even_dim() != b.even_dim() || m.matrix.len() != n {
        return false;
    }
    for k in 0..n {
        for i in 0..n {
            if a.parity(k) != a.parity(i) && !m.matrix[k][i].is_zero() {
                return false;
            }
        }
    }
    if crate::linalg::rank(&m.matrix) != n {
        return false;
    }
    let image = |i: usize| -> Vec<Rational> { (0..n).map(|k| m.matrix[k][i].clone()).collect() };
    for i in 0..n {
        for j in 0..n {
            let mut lhs = vec![Rational::zero(); n];
            for (k, c) in a.basis_product(i, j) {
                for (l, x) in lhs.iter_mut().enumerate() {
                    *x += &(c * &m.matrix[l][*k]);
                }
            }
            if lhs != b.mul(&image(i), &image(j)) {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    options: &'a IsomorphismOptions,
    steps: usize,
}

impl Search<'_> {
    /// A rational zero of `system`, with `point` holding the values fixed so far.
    fn solve(&mut self, system: &[Poly], point: &mut Vec<Option<Rational>>) -> Option<Vec<Rational>> {
        self.steps += 1;
        if self.steps > self.options.max_search_steps {
            return None;
        }
        let gb = groebner_basis(system, self.options.max_reductions).ok()?;
        if is_inconsistent(&gb) {
            return None;
        }
        let free: Vec<usize> = (0..point.len()).filter(|&i| point[i].is_none()).collect();
        let Some(&first) = free.first() else {
            return point.iter().cloned().collect();
        };
        // prefer an unknown the basis already pins down
        let pinned = free.iter().find_map(|&v| gb.iter().find_map(|g| g.univariate(v).map(|c| (v, c))));
        let (var, candidates) = match pinned {
            Some((v, coeffs)) => (v, rational_roots(&coeffs)),
            None => (first, self.options.ansatz_values.clone()),
        };
        for value in candidates {
            let next: Vec<Poly> = gb.iter().map(|g| g.substitute(var, &value)).filter(|g| !g.is_zero()).collect();
            point[var] = Some(value);
            if let Some(found) = self.solve(&next, point) {
                return Some(found);
            }
            if self.steps > self.options.max_search_steps {
                break;
            }
        }
        point[var] = None;
        None
    }
}

/// Decides whether `a` and `b` are isomorphic by an even change of basis.
pub fn is_isomorphic(a: &SuperAlgebra, b: &SuperAlgebra, options: &IsomorphismOptions) -> IsomorphismVerdict {
    if a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim() || a.product_parity() != b.product_parity() {
        return IsomorphismVerdict::Distinct;
    }
    let (system, u) = isomorphism_system(a, b);
    let gb = match groebner_basis(&system, options.max_reductions) {
        Ok(gb) => gb,
        Err(_) => {
            return IsomorphismVerdict::Undetermined {
                reason: format!("Gröbner basis exceeded {} reductions", options.max_reductions),
            }
        }
    };
    if is_inconsistent(&gb) {
        return IsomorphismVerdict::Distinct;
    }
    let mut search = Search { options, steps: 0 };
    let mut point = vec![None; u.count];
    let witness = search.solve(&gb, &mut point).and_then(|values| {
        let n = a.dim();
        let matrix = (0..n)
            .map(|k| (0..n).map(|i| u.index[k][i].map(|v| values[v].clone()).unwrap_or_else(Rational::zero)).collect())
            .collect();
        let m = ChangeOfBasis { matrix };
        // never report an unchecked witness
        is_isomorphism(a, b, &m).then_some(m)
    });
    IsomorphismVerdict::Isomorphic { witness }
}

/// Parameter values excluded from a family's domain.
fn excluded_values(entry: &CatalogEntry) -> Vec<Rational> {
    // the closed form β = (3 + α)/(α - 1) for this family has a pole at 1
    if (entry.label.index, entry.label.even_dim, entry.label.odd_dim) == (3, 1, 2) {
        vec![Rational::one()]
    } else {
        Vec::new()
    }
}

/// Compares two members of a parameterized catalog family.
pub fn family_isomorphism_check(
    entry: &CatalogEntry,
    alpha: &Rational,
    beta: &Rational,
    options: &IsomorphismOptions,
) -> Result<IsomorphismVerdict, AlgebraError> {
    if entry.parameter.is_none() {
        return Err(AlgebraError::NotAFamily(entry.name()));
    }
    for value in [alpha, beta] {
        if excluded_values(entry).contains(value) {
            return Err(AlgebraError::ParameterOutOfDomain { family: entry.name(), value: value.to_string() });
        }
    }
    Ok(is_isomorphic(&entry.algebra(Some(alpha))?, &entry.algebra(Some(beta))?, options))
}
