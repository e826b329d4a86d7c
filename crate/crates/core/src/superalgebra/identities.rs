use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::algebra::{combine, SparseVec, SuperAlgebra};
use crate::graded::{swap_sign, Parity, Rational};

/// The identities that can be checked on a structure-constant algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    /// `ab = -(-1)^{|a||b|} ba`.
    SuperAntiCommutative,
    /// `a(bc) - (ab)c - (-1)^{|a||b|} (ba)c = 0`.
    SuperZinbiel,
    /// `(ab)(cd) - (-1)^{|d|(|b|+|c|)} (ad)(bc) = J(a,b,c)d + (-1)^{|a||b|} b J(a,c,d)`.
    SuperTortkara,
    Malcev,
    /// The super-Jacobian `(ab)c - a(bc) - (-1)^{|b||c|} (ac)b` vanishes.
    SuperJacobi,
    /// `ab = (-1)^{|a||b|} ba` and `(ab)c = a(bc)`.
    SuperCommutativeAssociative,
    /// `a(bc) = (-1)^{|a|+1} (ab)c + (-1)^{|a|(|b|+1)} (ba)c`, satisfied by
    /// products built from odd operators.
    OddZinbiel,
    /// The ungraded Tortkara identity `(ab)(cd) + (ad)(cb) = J(a,b,c)d + J(a,d,c)b`
    /// with the cyclic Jacobian `J(x,y,z) = (xy)z + (yz)x + (zx)y`.
    Tortkara,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 8] = [
        IdentityKind::SuperAntiCommutative,
        IdentityKind::SuperZinbiel,
        IdentityKind::SuperTortkara,
        IdentityKind::Malcev,
        IdentityKind::SuperJacobi,
        IdentityKind::SuperCommutativeAssociative,
        IdentityKind::OddZinbiel,
        IdentityKind::Tortkara,
    ];

    pub fn arity(self) -> usize {
        match self {
            IdentityKind::SuperAntiCommutative => 2,
            IdentityKind::SuperZinbiel
            | IdentityKind::SuperJacobi
            | IdentityKind::SuperCommutativeAssociative
            | IdentityKind::OddZinbiel => 3,
            IdentityKind::SuperTortkara | IdentityKind::Malcev | IdentityKind::Tortkara => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::SuperAntiCommutative => "super-anti-commutative",
            IdentityKind::SuperZinbiel => "super-zinbiel",
            IdentityKind::SuperTortkara => "super-tortkara",
            IdentityKind::Malcev => "malcev",
            IdentityKind::SuperJacobi => "super-jacobi",
            IdentityKind::SuperCommutativeAssociative => "super-commutative-associative",
            IdentityKind::OddZinbiel => "odd-zinbiel",
            IdentityKind::Tortkara => "tortkara",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityVerdict {
    Holds,
    /// The first failing basis tuple (0-based, lexicographic) and its residual.
    Fails { tuple: Vec<usize>, residual: SparseVec },
}

impl IdentityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityVerdict::Holds)
    }
}

/// Evaluates residuals on basis tuples, caching the basis products.
struct Evaluator<'a> {
    alg: &'a SuperAlgebra,
    par: Vec<Parity>,
    units: Vec<SparseVec>,
}

impl<'a> Evaluator<'a> {
    fn new(alg: &'a SuperAlgebra) -> Self {
        let units = (0..alg.dim()).map(|i| vec![(i, Rational::from(1))]).collect();
        Evaluator { alg, par: alg.parities(), units }
    }

    fn m(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        self.alg.mul_sparse(x, y)
    }

    fn e(&self, i: usize) -> &SparseVec {
        &self.units[i]
    }

    fn sum(&self, terms: &[(Rational, &SparseVec)]) -> SparseVec {
        let terms: Vec<(Rational, &[(usize, Rational)])> =
            terms.iter().map(|(c, v)| (c.clone(), v.as_slice())).collect();
        combine(&terms)
    }

    fn s(&self, x: usize, y: usize) -> Rational {
        swap_sign(self.par[x], self.par[y])
    }

    /// `(xy)z - x(yz) - (-1)^{|y||z|} (xz)y` for basis `y`, `z` and any `x`.
    fn jacobian(&self, x: &SparseVec, y: usize, z: usize) -> SparseVec {
        let (ey, ez) = (self.e(y), self.e(z));
        let xy_z = self.m(&self.m(x, ey), ez);
        let x_yz = self.m(x, &self.m(ey, ez));
        let xz_y = self.m(&self.m(x, ez), ey);
        let one = Rational::from(1);
        self.sum(&[(one.clone(), &xy_z), (-one, &x_yz), (-self.s(y, z), &xz_y)])
    }

    fn cyclic_jacobian(&self, x: &SparseVec, y: &SparseVec, z: &SparseVec) -> SparseVec {
        let one = Rational::from(1);
        let a = self.m(&self.m(x, y), z);
        let b = self.m(&self.m(y, z), x);
        let c = self.m(&self.m(z, x), y);
        self.sum(&[(one.clone(), &a), (one.clone(), &b), (one, &c)])
    }

    fn residual(&self, kind: IdentityKind, t: &[usize]) -> SparseVec {
        let one = Rational::from(1);
        let p = &self.par;
        let sign = |x: Parity| x.sign_rational();
        match kind {
            IdentityKind::SuperAntiCommutative => {
                let (a, b) = (self.e(t[0]), self.e(t[1]));
                let (ab, ba) = (self.m(a, b), self.m(b, a));
                self.sum(&[(one, &ab), (self.s(t[0], t[1]), &ba)])
            }
            IdentityKind::SuperZinbiel | IdentityKind::OddZinbiel => {
                let (a, b, c) = (self.e(t[0]), self.e(t[1]), self.e(t[2]));
                let a_bc = self.m(a, &self.m(b, c));
                let ab_c = self.m(&self.m(a, b), c);
                let ba_c = self.m(&self.m(b, a), c);
                let (k1, k2) = if kind == IdentityKind::SuperZinbiel {
                    (one.clone(), self.s(t[0], t[1]))
                } else {
                    (sign(p[t[0]].flip()), sign(p[t[0]] * p[t[1]].flip()))
                };
                self.sum(&[(one, &a_bc), (-k1, &ab_c), (-k2, &ba_c)])
            }
            IdentityKind::SuperJacobi => self.jacobian(self.e(t[0]), t[1], t[2]),
            IdentityKind::SuperCommutativeAssociative => {
                let (a, b, c) = (self.e(t[0]), self.e(t[1]), self.e(t[2]));
                let (ab, ba) = (self.m(a, b), self.m(b, a));
                let comm = self.sum(&[(one.clone(), &ab), (-self.s(t[0], t[1]), &ba)]);
                if !comm.is_empty() {
                    return comm;
                }
                let ab_c = self.m(&ab, c);
                let a_bc = self.m(a, &self.m(b, c));
                self.sum(&[(one.clone(), &ab_c), (-one, &a_bc)])
            }
            IdentityKind::SuperTortkara => {
                let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
                let (ea, eb, ec, ed) = (self.e(a), self.e(b), self.e(c), self.e(d));
                let ab_cd = self.m(&self.m(ea, eb), &self.m(ec, ed));
                let ad_bc = self.m(&self.m(ea, ed), &self.m(eb, ec));
                let j1 = self.m(&self.jacobian(ea, b, c), ed);
                let j2 = self.m(eb, &self.jacobian(ea, c, d));
                self.sum(&[
                    (one.clone(), &ab_cd),
                    (-sign(p[d] * (p[b] + p[c])), &ad_bc),
                    (-one, &j1),
                    (-self.s(a, b), &j2),
                ])
            }
            IdentityKind::Malcev => {
                let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
                let (ea, eb, ec, ed) = (self.e(a), self.e(b), self.e(c), self.e(d));
                let left3 = |x: &SparseVec, y: &SparseVec, z: &SparseVec, w: &SparseVec| {
                    self.m(&self.m(&self.m(x, y), z), w)
                };
                let abcd = left3(ea, eb, ec, ed);
                let bcda = left3(eb, ec, ed, ea);
                let cdab = left3(ec, ed, ea, eb);
                let dabc = left3(ed, ea, eb, ec);
                let ac_bd = self.m(&self.m(ea, ec), &self.m(eb, ed));
                self.sum(&[
                    (one, &abcd),
                    (sign(p[a] * (p[b] + p[c] + p[d])), &bcda),
                    (sign((p[a] + p[b]) * (p[c] + p[d])), &cdab),
                    (sign(p[d] * (p[a] + p[b] + p[c])), &dabc),
                    (-sign(p[b] * p[c]), &ac_bd),
                ])
            }
            IdentityKind::Tortkara => {
                let (a, b, c, d) = (self.e(t[0]), self.e(t[1]), self.e(t[2]), self.e(t[3]));
                let ab_cd = self.m(&self.m(a, b), &self.m(c, d));
                let ad_cb = self.m(&self.m(a, d), &self.m(c, b));
                let j1 = self.m(&self.cyclic_jacobian(a, b, c), d);
                let j2 = self.m(&self.cyclic_jacobian(a, d, c), b);
                self.sum(&[(one.clone(), &ab_cd), (one.clone(), &ad_cb), (-one.clone(), &j1), (-one, &j2)])
            }
        }
    }
}

/// The residual of `kind` on one basis tuple (0-based indices).
pub fn identity_residual(alg: &SuperAlgebra, kind: IdentityKind, tuple: &[usize]) -> SparseVec {
    assert_eq!(tuple.len(), kind.arity(), "tuple length must match the arity");
    Evaluator::new(alg).residual(kind, tuple)
}

/// Checks `kind` on every basis tuple in lexicographic order. The residuals
/// are multilinear, so basis tuples decide the identity on all elements.
pub fn verify_identity(alg: &SuperAlgebra, kind: IdentityKind) -> IdentityVerdict {
    let ev = Evaluator::new(alg);
    let n = alg.dim();
    let arity = kind.arity();
    let mut tuple = vec![0; arity];
    if n == 0 {
        return IdentityVerdict::Holds;
    }
    loop {
        let r = ev.residual(kind, &tuple);
        if !r.is_empty() {
            return IdentityVerdict::Fails { tuple, residual: r };
        }
        // next tuple in lexicographic order
        let mut pos = arity;
        loop {
            if pos == 0 {
                return IdentityVerdict::Holds;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}
