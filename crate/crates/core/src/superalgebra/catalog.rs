//! Tortkara superalgebras of dimension two and three, one representative per
//! isomorphism class, with their expected Malcev and Lie flags.

use std::fmt;

use serde::Serialize;

use super::{grassmann_envelope, verify_identity, AlgebraError, IdentityKind, SuperAlgebra};
use crate::graded::{swap_sign, Parity, Rational};

/// Sample values for parameterized families. Residuals are polynomials of
/// degree at most 4 in the parameter, so vanishing at five distinct values
/// certifies an identity for the whole family.
pub fn default_samples() -> Vec<Rational> {
    vec![
        Rational::from(0),
        Rational::from(1),
        Rational::from(-1),
        Rational::from(2),
        Rational::new(1, 2),
    ]
}

pub const PARAMETER_DEGREE_BOUND: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CatalogLabel {
    pub index: u8,
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl fmt::Display for CatalogLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T^{}_{{{}|{}}}", self.index, self.even_dim, self.odd_dim)
    }
}

impl CatalogLabel {
    /// Accepts `T^3_{2|1}`, `T3_{2|1}`, `T3_2|1` and superscript digits.
    pub fn parse(src: &str) -> Option<CatalogLabel> {
        let plain: String = src
            .chars()
            .filter(|c| !matches!(c, '^' | '{' | '}' | ' '))
            .map(|c| match c {
                '⁰' => '0',
                '¹' => '1',
                '²' => '2',
                '³' => '3',
                '⁴' => '4',
                '⁵' => '5',
                '⁶' => '6',
                '⁷' => '7',
                '⁸' => '8',
                '⁹' => '9',
                other => other,
            })
            .collect();
        let rest = plain.strip_prefix('T').or_else(|| plain.strip_prefix('t'))?;
        let (index, dims) = rest.split_once('_')?;
        let (p, q) = dims.split_once('|')?;
        Some(CatalogLabel {
            index: index.parse().ok()?,
            even_dim: p.parse().ok()?,
            odd_dim: q.parse().ok()?,
        })
    }
}

/// One listed product `e_i e_j = Σ c_k e_k` (1-based), with coefficients
/// affine in the family parameter: `c_k = constant + slope · t`.
type ProductSpec = (usize, usize, &'static [(usize, i64, i64)]);

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub label: CatalogLabel,
    /// Name of the family parameter, if any.
    pub parameter: Option<&'static str>,
    #[serde(skip)]
    products: &'static [ProductSpec],
    pub is_malcev: bool,
    pub is_lie: bool,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        match self.parameter {
            Some(p) => format!("{}({p})", self.label),
            None => self.label.to_string(),
        }
    }

    /// The algebra at a parameter value; the value must be given exactly
    /// for families.
    pub fn algebra(&self, parameter: Option<&Rational>) -> Result<SuperAlgebra, AlgebraError> {
        let t = match (self.parameter, parameter) {
            (Some(_), Some(t)) => t.clone(),
            (None, None) => Rational::from(0),
            (Some(_), None) => return Err(AlgebraError::MissingParameter(self.name())),
            (None, Some(_)) => return Err(AlgebraError::UnexpectedParameter(self.name())),
        };
        let (p, q) = (self.label.even_dim, self.label.odd_dim);
        let parity = |i: usize| if i < p { Parity::Even } else { Parity::Odd };
        let mut constants: Vec<((usize, usize, usize), Rational)> = Vec::new();
        for &(i, j, terms) in self.products {
            let (i, j) = (i - 1, j - 1);
            for &(k, c0, c1) in terms {
                let c = &Rational::from(c0) + &(&Rational::from(c1) * &t);
                // the anti-commuted partner e_j e_i = -(-1)^{|i||j|} e_i e_j
                let partner = -(&c * &swap_sign(parity(i), parity(j)));
                constants.push(((i, j, k - 1), c));
                if i != j {
                    constants.push(((j, i, k - 1), partner));
                } else if partner != constants[constants.len() - 1].1 {
                    return Err(AlgebraError::CatalogConflict { entry: self.name(), i: i + 1, j: j + 1 });
                }
            }
        }
        // a listed product whose partner is also listed must agree with it
        for &(i, j, _) in self.products {
            if i != j && self.products.iter().any(|&(a, b, _)| (a, b) == (j, i)) {
                return Err(AlgebraError::CatalogConflict { entry: self.name(), i, j });
            }
        }
        SuperAlgebra::from_constants(p, q, Parity::Even, constants)
    }

    /// Algebras to check: the single member, or the family at `samples`.
    pub fn instances(&self, samples: &[Rational]) -> Vec<(Option<Rational>, SuperAlgebra)> {
        match self.parameter {
            None => vec![(None, self.algebra(None).expect("catalog entries are well formed"))],
            Some(_) => samples
                .iter()
                .map(|t| (Some(t.clone()), self.algebra(Some(t)).expect("catalog entries are well formed")))
                .collect(),
        }
    }
}

const fn entry(
    index: u8,
    even_dim: usize,
    odd_dim: usize,
    parameter: Option<&'static str>,
    products: &'static [ProductSpec],
    is_malcev: bool,
    is_lie: bool,
) -> CatalogEntry {
    CatalogEntry { label: CatalogLabel { index, even_dim, odd_dim }, parameter, products, is_malcev, is_lie }
}

/// All seventeen classes. Only one of each anti-commuting pair of products
/// is listed; unlisted products are zero.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        entry(1, 1, 1, None, &[], true, true),
        entry(2, 1, 1, None, &[(1, 2, &[(2, 1, 0)])], true, true),
        entry(3, 1, 1, None, &[(2, 2, &[(1, 1, 0)])], true, true),
        entry(1, 2, 0, None, &[], true, true),
        entry(2, 2, 0, None, &[(1, 2, &[(2, 1, 0)])], true, true),
        entry(1, 2, 1, None, &[], true, true),
        entry(2, 2, 1, None, &[(3, 3, &[(1, 1, 0)])], true, true),
        entry(
            3,
            2,
            1,
            None,
            &[(1, 2, &[(1, -1, 0)]), (2, 3, &[(3, 1, 0)]), (3, 3, &[(1, 1, 0)])],
            false,
            false,
        ),
        entry(7, 2, 1, None, &[(1, 2, &[(1, 1, 0)])], true, true),
        entry(8, 2, 1, None, &[(1, 2, &[(1, 1, 0)]), (1, 3, &[(3, 1, 0)])], false, false),
        entry(9, 2, 1, Some("gamma"), &[(1, 2, &[(2, 0, 1)]), (1, 3, &[(3, 1, 0)])], true, true),
        entry(1, 1, 2, None, &[], true, true),
        entry(2, 1, 2, None, &[(1, 3, &[(2, 1, 0)]), (3, 3, &[(1, 1, 0)])], true, true),
        entry(
            3,
            1,
            2,
            Some("alpha"),
            &[(1, 2, &[(2, 1, 0), (3, 1, 0)]), (1, 3, &[(2, 1, 0), (3, 0, 1)])],
            true,
            true,
        ),
        entry(
            4,
            1,
            2,
            Some("alpha"),
            &[(2, 3, &[(1, 1, 0)]), (3, 3, &[(1, 1, 0)]), (2, 2, &[(1, 0, 1)])],
            true,
            true,
        ),
        entry(5, 1, 2, None, &[(1, 3, &[(2, 1, 0)])], true, true),
        entry(6, 1, 2, None, &[(1, 2, &[(2, 1, 0)])], true, true),
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    let label = CatalogLabel::parse(name.split('(').next().unwrap_or(name))?;
    catalog().into_iter().find(|e| e.label == label)
}

/// Checks one algebra against an entry's expectations.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub parameter: Option<String>,
    pub anti_commutative: bool,
    pub tortkara: bool,
    pub malcev: bool,
    pub lie: bool,
    pub expected_malcev: bool,
    pub expected_lie: bool,
    /// The classical Tortkara identity on the truncated Grassmann envelope.
    pub envelope_tortkara: Option<bool>,
}

impl CatalogRow {
    pub fn mismatches(&self) -> Vec<String> {
        let at = match &self.parameter {
            Some(t) => format!("{} at {t}", self.name),
            None => self.name.clone(),
        };
        let mut out = Vec::new();
        if !self.anti_commutative {
            out.push(format!("{at}: not super anti-commutative"));
        }
        if !self.tortkara {
            out.push(format!("{at}: super Tortkara identity fails"));
        }
        if self.malcev != self.expected_malcev {
            out.push(format!("{at}: Malcev is {}, expected {}", self.malcev, self.expected_malcev));
        }
        if self.lie != self.expected_lie {
            out.push(format!("{at}: Lie is {}, expected {}", self.lie, self.expected_lie));
        }
        if self.envelope_tortkara == Some(false) {
            out.push(format!("{at}: Grassmann envelope is not Tortkara"));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogReport {
    pub rows: Vec<CatalogRow>,
    pub mismatches: Vec<String>,
    pub parameter_degree_bound: usize,
    pub samples: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct CatalogOptions {
    pub samples: Vec<Rational>,
    /// Grassmann generators for the envelope cross-check; `None` skips it.
    pub envelope_generators: Option<usize>,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions { samples: default_samples(), envelope_generators: Some(4) }
    }
}

pub fn check_algebra(entry: &CatalogEntry, parameter: Option<Rational>, alg: &SuperAlgebra, envelope: Option<usize>) -> CatalogRow {
    let holds = |k| verify_identity(alg, k).holds();
    let anti_commutative = holds(IdentityKind::SuperAntiCommutative);
    let envelope_tortkara = envelope.map(|n| {
        let env = grassmann_envelope(alg, n).expect("catalog algebras have even products");
        verify_identity(&env.algebra, IdentityKind::Tortkara).holds()
    });
    CatalogRow {
        name: entry.name(),
        parameter: parameter.map(|t| t.to_string()),
        anti_commutative,
        tortkara: holds(IdentityKind::SuperTortkara),
        malcev: anti_commutative && holds(IdentityKind::Malcev),
        lie: anti_commutative && holds(IdentityKind::SuperJacobi),
        expected_malcev: entry.is_malcev,
        expected_lie: entry.is_lie,
        envelope_tortkara,
    }
}

pub fn verify_catalog(entries: &[CatalogEntry], options: &CatalogOptions) -> CatalogReport {
    let mut rows = Vec::new();
    for entry in entries {
        for (t, alg) in entry.instances(&options.samples) {
            rows.push(check_algebra(entry, t, &alg, options.envelope_generators));
        }
    }
    let mismatches = rows.iter().flat_map(CatalogRow::mismatches).collect();
    CatalogReport {
        rows,
        mismatches,
        parameter_degree_bound: PARAMETER_DEGREE_BOUND,
        samples: options.samples.iter().map(ToString::to_string).collect(),
    }
}
