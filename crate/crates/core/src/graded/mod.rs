//! Scalars, parities, graded words and their linear combinations.

mod element;
mod rational;
mod word;

pub use element::{Accumulator, FreeElement};
pub use rational::{ParseRationalError, Rational};
pub(crate) use word::packed;
pub use word::{canonical_compare, koszul_sign, word_parity, Generator, Letter, Word};

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("malformed permutation {perm:?} for a word of length {len}")]
    MalformedPermutation { perm: Vec<usize>, len: usize },
    #[error("operand is not parity-homogeneous")]
    Inhomogeneous,
}

/// An element of Z/2: the parity of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        self + Parity::Odd
    }

    /// `(-1)^self` as an integer.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    /// `(-1)^self` as a rational.
    pub fn sign_rational(self) -> Rational {
        Rational::sign(self.is_odd())
    }

    pub fn sum<I: IntoIterator<Item = Parity>>(iter: I) -> Parity {
        iter.into_iter().fold(Parity::Even, |a, b| a + b)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() & rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}` (expected even|odd)")),
        }
    }
}

/// `(-1)^{|a||b|}`: the sign picked up when two homogeneous elements pass each other.
pub fn swap_sign(a: Parity, b: Parity) -> Rational {
    (a * b).sign_rational()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_arithmetic() {
        use Parity::*;
        assert_eq!(Odd + Odd, Even);
        assert_eq!(Odd + Even, Odd);
        assert_eq!(Odd * Odd, Odd);
        assert_eq!(Odd * Even, Even);
        assert_eq!(Parity::sum([Odd, Odd, Odd]), Odd);
        assert_eq!(swap_sign(Odd, Odd), Rational::from(-1));
        assert_eq!(swap_sign(Odd, Even), Rational::from(1));
    }
}
