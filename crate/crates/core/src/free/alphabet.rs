use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::One;

use super::FreeError;
use crate::graded::{FreeElement, Generator, Letter, Parity, Rational, Word};

const KEYWORDS: [&str; 3] = ["o", "sh", "bar"];

/// The generating set `X = X_even ∪ X_odd`, in ordinal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    generators: Vec<Generator>,
    by_name: HashMap<String, u16>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&name)
}

impl Alphabet {
    pub fn new<S: Into<String>>(decls: Vec<(S, Parity)>) -> Result<Self, FreeError> {
        if decls.is_empty() {
            return Err(FreeError::EmptyAlphabet);
        }
        let mut generators = Vec::with_capacity(decls.len());
        let mut by_name = HashMap::new();
        for (i, (name, parity)) in decls.into_iter().enumerate() {
            let name = name.into();
            if !valid_name(&name) {
                return Err(FreeError::InvalidGeneratorName(name));
            }
            if by_name.insert(name.clone(), i as u16).is_some() {
                return Err(FreeError::DuplicateGenerator(name));
            }
            generators.push(Generator {
                name,
                parity,
                ordinal: i as u16,
            });
        }
        Ok(Alphabet {
            generators,
            by_name,
        })
    }

    /// Inline syntax: `x:odd,y:even`.
    pub fn parse_inline(src: &str) -> Result<Self, FreeError> {
        let decls = src
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(parse_decl)
            .collect::<Result<Vec<_>, _>>()?;
        Alphabet::new(decls)
    }

    /// Header syntax: one `name : even|odd` per line; `#` starts a comment.
    pub fn parse_header(src: &str) -> Result<Self, FreeError> {
        let decls = src
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(parse_decl)
            .collect::<Result<Vec<_>, _>>()?;
        Alphabet::new(decls)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.by_name
            .get(name)
            .map(|&i| self.generators[i as usize].letter())
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.generators.iter().map(Generator::letter)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.generators[l.ordinal as usize].name
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, FreeError> {
        let letters = names
            .iter()
            .map(|n| {
                self.letter(n)
                    .ok_or_else(|| FreeError::UnboundGenerator(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::try_new(&letters).ok_or_else(|| FreeError::DegreeTooLow("empty word".into()))
    }

    /// Read a word written letter by letter, e.g. `xyyx`; only for alphabets
    /// whose generator names are single characters.
    pub fn word_str(&self, s: &str) -> Result<Word, FreeError> {
        let names: Vec<String> = s.chars().map(String::from).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.word(&refs)
    }

    pub fn element_str(&self, s: &str) -> Result<FreeElement, FreeError> {
        self.word_str(s).map(FreeElement::from_word)
    }

    fn single_char_names(&self) -> bool {
        self.generators.iter().all(|g| g.name.chars().count() == 1)
    }

    pub fn format_word(&self, w: &Word) -> String {
        let sep = if self.single_char_names() { "" } else { "*" };
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Canonical printing: terms in canonical word order, `c word` with the
    /// coefficient omitted when it is ±1.
    pub fn format(&self, e: &FreeElement) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in e.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            let mag = c.abs();
            if mag != Rational::one() {
                let _ = write!(out, "{mag} ");
            }
            out.push_str(&self.format_word(w));
        }
        out
    }
}

fn parse_decl(decl: &str) -> Result<(String, Parity), FreeError> {
    let malformed = || FreeError::MalformedAlphabet(decl.trim().to_string());
    let (name, parity) = decl.split_once(':').ok_or_else(malformed)?;
    let parity: Parity = parity.trim().parse().map_err(|_| malformed())?;
    Ok((name.trim().to_string(), parity))
}
