//! Multivariate polynomials over the rationals and Gröbner bases by
//! Buchberger's algorithm, sized for the small systems that arise when
//! solving for a change of basis.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::graded::Rational;

pub type Monomial = SmallVec<[u16; 8]>;

/// Graded reverse lexicographic order on exponent vectors.
pub fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().map(|&e| e as u32).sum(), b.iter().map(|&e| e as u32).sum());
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// A polynomial in a fixed number of variables; terms are kept in
/// decreasing grevlex order without zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Poly::term(nvars, SmallVec::from_elem(0, nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m: Monomial = SmallVec::from_elem(0, nvars);
        m[i] = 1;
        Poly::term(nvars, m, Rational::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.iter().map(|&e| e as usize).sum()).max().unwrap_or(0)
    }

    /// Variables that occur with a nonzero exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.iter().any(|(m, _)| m[i] > 0)).collect()
    }

    fn from_unsorted(nvars: usize, mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((last, sum)) if *last == m => *sum += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { nvars, terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.add_scaled_shifted(other, &Rational::one(), None)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add_scaled_shifted(other, &-Rational::one(), None)
    }

    /// `self + c · x^shift · other`, merging the sorted term lists.
    fn add_scaled_shifted(&self, other: &Poly, c: &Rational, shift: Option<&[u16]>) -> Poly {
        let moved: Vec<(Monomial, Rational)> = other
            .terms
            .iter()
            .map(|(m, d)| {
                let m = match shift {
                    Some(s) => m.iter().zip(s).map(|(a, b)| a + b).collect(),
                    None => m.clone(),
                };
                (m, c * d)
            })
            .collect();
        let mut out = Vec::with_capacity(self.terms.len() + moved.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < moved.len() {
            match grevlex(&self.terms[i].0, &moved[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(moved[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &self.terms[i].1 + &moved[j].1;
                    if !s.is_zero() {
                        out.push((self.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(moved.into_iter().skip(j));
        Poly { nvars: self.nvars, terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                terms.push((a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d));
            }
        }
        Poly::from_unsorted(self.nvars, terms)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, d)| (m.clone(), c * d)).collect() }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Substitutes `x_i = v`.
    pub fn substitute(&self, i: usize, v: &Rational) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                let e = std::mem::replace(&mut m[i], 0);
                (m, c * &v.pow(e as u32))
            })
            .collect();
        Poly::from_unsorted(self.nvars, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.iter()) {
                if e > 0 {
                    t = &t * &x.pow(e as u32);
                }
            }
            sum += &t;
        }
        sum
    }

    /// Coefficients `[c_0, c_1, ...]` if only `x_i` occurs.
    pub fn univariate(&self, i: usize) -> Option<Vec<Rational>> {
        if self.terms.iter().any(|(m, _)| m.iter().enumerate().any(|(k, &e)| k != i && e > 0)) {
            return None;
        }
        let deg = self.terms.iter().map(|(m, _)| m[i] as usize).max()?;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m[i] as usize] = c.clone();
        }
        Some(out)
    }

    /// Remainder of full division by `basis`.
    pub fn reduce(&self, basis: &[Poly]) -> Poly {
        let mut f = self.clone();
        let mut rem: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = f.terms.first().cloned() {
            match basis.iter().find(|g| g.leading().is_some_and(|(lm, _)| divides(lm, &m))) {
                Some(g) => {
                    let (lm, lc) = g.leading().expect("nonzero divisor");
                    let shift = quotient(&m, lm);
                    f = f.add_scaled_shifted(g, &-(&c / lc), Some(&shift));
                }
                None => {
                    rem.push((m, c));
                    f.terms.remove(0);
                }
            }
        }
        Poly { nvars: self.nvars, terms: rem }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (lf, cf) = f.leading().expect("nonzero");
    let (lg, cg) = g.leading().expect("nonzero");
    let l = lcm(lf, lg);
    let a = Poly::zero(f.nvars).add_scaled_shifted(f, &cf.recip(), Some(&quotient(&l, lf)));
    a.add_scaled_shifted(g, &-cg.recip(), Some(&quotient(&l, lg)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerLimitExceeded;

/// The reduced Gröbner basis (grevlex, monic) of the ideal generated by
/// `polys`, or an error after `max_reductions` S-polynomial reductions.
pub fn groebner_basis(polys: &[Poly], max_reductions: usize) -> Result<Vec<Poly>, GroebnerLimitExceeded> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut reductions = 0;
    let mut pending: Vec<Poly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    // add low-degree generators first so they reduce the rest
    pending.sort_by(|a, b| grevlex(&b.leading().expect("nonzero").0, &a.leading().expect("nonzero").0));
    loop {
        let next = match pending.pop() {
            Some(p) => p,
            None => {
                // normal strategy: the pair with the least lcm first
                let Some(pos) = (0..pairs.len()).min_by(|&x, &y| grevlex(&pairs[x].lcm, &pairs[y].lcm)) else {
                    break;
                };
                let pair = pairs.swap_remove(pos);
                reductions += 1;
                if reductions > max_reductions {
                    return Err(GroebnerLimitExceeded);
                }
                s_polynomial(&basis[pair.i], &basis[pair.j])
            }
        };
        let r = next.reduce(&basis);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(vec![Poly::constant(r.nvars, Rational::one())]);
        }
        update_pairs(&basis, &mut pairs, &r);
        basis.push(r.monic());
    }
    Ok(interreduce(basis))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Möller update before `h` joins `basis`.
fn update_pairs(basis: &[Poly], pairs: &mut Vec<Pair>, h: &Poly) {
    let k = basis.len();
    let lh = &h.leading().expect("nonzero").0;
    let lm = |i: usize| &basis[i].leading().expect("nonzero").0;
    // old pairs whose lcm is strictly covered through h
    pairs.retain(|p| {
        !(divides(lh, &p.lcm) && lcm(lm(p.i), lh) != p.lcm && lcm(lm(p.j), lh) != p.lcm)
    });
    let candidates: Vec<Pair> = (0..k).map(|i| Pair { i, j: k, lcm: lcm(lm(i), lh) }).collect();
    let mut kept: Vec<&Pair> = Vec::new();
    for (x, p) in candidates.iter().enumerate() {
        // drop if another new lcm properly divides this one, or an equal one came earlier
        let dominated = candidates.iter().enumerate().any(|(y, q)| {
            y != x && divides(&q.lcm, &p.lcm) && (q.lcm != p.lcm || y < x)
        });
        if !dominated {
            kept.push(p);
        }
    }
    for p in kept {
        if !coprime(lm(p.i), lh) {
            pairs.push(Pair { i: p.i, j: p.j, lcm: p.lcm.clone() });
        }
    }
}

fn interreduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    basis.sort_by(|a, b| grevlex(&a.leading().expect("nonzero").0, &b.leading().expect("nonzero").0));
    let mut minimal: Vec<Poly> = Vec::new();
    for p in basis {
        let lm = p.leading().expect("nonzero").0.clone();
        if !minimal.iter().any(|q| divides(&q.leading().expect("nonzero").0, &lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
        let (lm, lc) = minimal[k].leading().expect("nonzero").clone();
        let tail = Poly { nvars: minimal[k].nvars, terms: minimal[k].terms[1..].to_vec() }.reduce(&others);
        out.push(Poly::term(minimal[k].nvars, lm, lc).add(&tail).monic());
    }
    out
}

/// Whether the ideal is the whole ring, i.e. the system has no solution
/// over the algebraic closure.
pub fn is_inconsistent(basis: &[Poly]) -> bool {
    basis.iter().any(Poly::is_unit)
}

/// Rational roots of `Σ c_i x^i`, by the rational root test.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Signed;

    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    if c.len() <= 1 {
        return roots;
    }
    let low = c.iter().position(|x| !x.is_zero()).expect("nonzero polynomial");
    if low > 0 {
        roots.push(Rational::zero());
        c.drain(..low);
    }
    if c.len() <= 1 {
        return roots;
    }
    // clear denominators
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let divisors = |n: &BigInt| -> Option<Vec<BigInt>> {
        let n = n.abs();
        if n > BigInt::from(1_000_000) {
            return None;
        }
        let n: i64 = n.try_into().ok()?;
        Some((1..=n).filter(|d| n % d == 0).map(BigInt::from).collect())
    };
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(&ints[ints.len() - 1])) else {
        return roots;
    };
    let eval = |x: &Rational| {
        c.iter().rev().fold(Rational::zero(), |acc, k| &(&acc * x) + k)
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let r = Rational::from_big(num_rational::BigRational::new(p * sign, q.clone()));
                if !roots.contains(&r) && eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}
