//! A small expression language for elements of the free algebra.
//!
//! ```text
//! expr     := term { ("+" | "-") term }
//! term     := ["-"] [rational "*"] shchain
//! shchain  := zchain { "sh" zchain }
//! zchain   := factor { ("o" | "*") factor }
//! factor   := ident | "(" expr ")" | "[" expr "," expr "]"
//!           | "{" expr "," expr "}" | "bar" "(" expr ")"
//! rational := integer [ "/" integer ]
//! ```
//!
//! `o` is the Zinbiel product and associates to the left; a chain joined
//! only by `*` is a left-nested product. A leading rational scales the first
//! factor, a bare `-` negates the whole term.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::{bar, super_anticommutator, super_commutator, super_shuffle, zinbiel_product, Alphabet, FreeError};
use crate::graded::{FreeElement, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketExpr {
    Gen(String),
    Zin(Box<BracketExpr>, Box<BracketExpr>),
    Shuffle(Box<BracketExpr>, Box<BracketExpr>),
    SCom(Box<BracketExpr>, Box<BracketExpr>),
    SAnti(Box<BracketExpr>, Box<BracketExpr>),
    Scale(Rational, Box<BracketExpr>),
    Sum(Vec<BracketExpr>),
    Bar(Box<BracketExpr>),
    /// `(...(a1 ∘ a2) ...) ∘ an`, at least two factors.
    LeftNest(Vec<BracketExpr>),
}

impl BracketExpr {
    pub fn gen(name: &str) -> Self {
        BracketExpr::Gen(name.to_string())
    }

    pub fn zin(l: BracketExpr, r: BracketExpr) -> Self {
        BracketExpr::Zin(Box::new(l), Box::new(r))
    }

    pub fn shuffle(l: BracketExpr, r: BracketExpr) -> Self {
        BracketExpr::Shuffle(Box::new(l), Box::new(r))
    }

    pub fn scom(l: BracketExpr, r: BracketExpr) -> Self {
        BracketExpr::SCom(Box::new(l), Box::new(r))
    }

    pub fn santi(l: BracketExpr, r: BracketExpr) -> Self {
        BracketExpr::SAnti(Box::new(l), Box::new(r))
    }

    pub fn scale(q: Rational, e: BracketExpr) -> Self {
        BracketExpr::Scale(q, Box::new(e))
    }

    pub fn bar(e: BracketExpr) -> Self {
        BracketExpr::Bar(Box::new(e))
    }
}

/// Canonical form; parsing it gives back the same tree.
impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Gen(n) => f.write_str(n),
            BracketExpr::Zin(l, r) => write!(f, "({l} o {r})"),
            BracketExpr::Shuffle(l, r) => write!(f, "({l} sh {r})"),
            BracketExpr::SCom(l, r) => write!(f, "[{l}, {r}]"),
            BracketExpr::SAnti(l, r) => write!(f, "{{{l}, {r}}}"),
            BracketExpr::Scale(q, e) => write!(f, "({q}*{e})"),
            BracketExpr::Bar(e) => write!(f, "bar({e})"),
            BracketExpr::Sum(items) => write_joined(f, items, " + "),
            BracketExpr::LeftNest(items) => write_joined(f, items, "*"),
        }
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, items: &[BracketExpr], sep: &str) -> fmt::Result {
    f.write_str("(")?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    f.write_str(")")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: unexpected character `{ch}`")]
    Lexical { line: usize, col: usize, ch: char },
    #[error("{line}:{col}: unbalanced delimiters: {detail}")]
    Unbalanced { line: usize, col: usize, detail: String },
    #[error("{line}:{col}: unknown operator `{op}`")]
    UnknownOperator { line: usize, col: usize, op: String },
    #[error("{line}:{col}: expected {expected}, found {found}")]
    Unexpected { line: usize, col: usize, expected: String, found: String },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Lexical { line, col, .. }
            | ParseError::Unbalanced { line, col, .. }
            | ParseError::UnknownOperator { line, col, .. }
            | ParseError::Unexpected { line, col, .. } => (*line, *col),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Slash,
    Plus,
    Minus,
    Star,
    Comma,
    Open(char),
    Close(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Open(c) | Tok::Close(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

const OPERATOR_CHARS: &str = "^&|.%!=<>~?:;@#$\\";

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        let mut take = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        let tok = match c {
            c if c.is_whitespace() => {
                take(&mut chars);
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while matches!(chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_') {
                    s.push(take(&mut chars));
                }
                Tok::Ident(s)
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                    s.push(take(&mut chars));
                }
                Tok::Int(s)
            }
            _ => {
                take(&mut chars);
                match c {
                    '/' => Tok::Slash,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    ',' => Tok::Comma,
                    '(' | '[' | '{' => Tok::Open(c),
                    ')' | ']' | '}' => Tok::Close(c),
                    c if OPERATOR_CHARS.contains(c) => {
                        return Err(ParseError::UnknownOperator { line: l, col: k, op: c.to_string() })
                    }
                    c => return Err(ParseError::Lexical { line: l, col: k, ch: c }),
                }
            }
        };
        out.push(Spanned { tok, line: l, col: k });
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

fn closer(open: char) -> char {
    match open {
        '(' => ')',
        '[' => ']',
        _ => '}',
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> &Spanned {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError::Unexpected {
            line: t.line,
            col: t.col,
            expected: expected.to_string(),
            found: t.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            return Ok(());
        }
        Err(self.unexpected(&tok.to_string()))
    }

    /// Consumes the closing delimiter matching `open`, opened at `at`.
    fn close(&mut self, open: char, at: (usize, usize)) -> Result<(), ParseError> {
        let want = closer(open);
        let t = &self.toks[self.pos];
        match &t.tok {
            Tok::Close(c) if *c == want => {
                self.bump();
                Ok(())
            }
            Tok::Close(_) | Tok::Eof => Err(ParseError::Unbalanced {
                line: t.line,
                col: t.col,
                detail: format!("`{open}` opened at {}:{} is not closed by `{want}` (found {})", at.0, at.1, t.tok),
            }),
            _ => Err(self.unexpected(&format!("`{want}`"))),
        }
    }

    fn expr(&mut self) -> Result<BracketExpr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => terms.push(self.term()?),
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { BracketExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<BracketExpr, ParseError> {
        let negate = *self.peek() == Tok::Minus;
        if negate {
            self.bump();
        }
        let scale = match self.peek() {
            Tok::Int(_) => {
                let q = self.rational()?;
                self.expect(Tok::Star)?;
                Some(if negate { -q } else { q })
            }
            _ => None,
        };
        let chain = self.shchain(scale.clone())?;
        Ok(match (negate, scale) {
            (true, None) => BracketExpr::scale(-Rational::one(), chain),
            _ => chain,
        })
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let Tok::Int(num) = self.peek().clone() else {
            return Err(self.unexpected("an integer"));
        };
        self.bump();
        if *self.peek() != Tok::Slash {
            return Ok(num.parse().expect("digits"));
        }
        self.bump();
        let Tok::Int(den) = self.peek().clone() else {
            return Err(self.unexpected("a positive denominator"));
        };
        if den.bytes().all(|b| b == b'0') {
            return Err(self.unexpected("a positive denominator"));
        }
        self.bump();
        Ok(format!("{num}/{den}").parse().expect("digits"))
    }

    fn shchain(&mut self, scale: Option<Rational>) -> Result<BracketExpr, ParseError> {
        let mut acc = self.zchain(scale)?;
        while matches!(self.peek(), Tok::Ident(s) if s == "sh") {
            self.bump();
            acc = BracketExpr::shuffle(acc, self.zchain(None)?);
        }
        Ok(acc)
    }

    fn zchain(&mut self, scale: Option<Rational>) -> Result<BracketExpr, ParseError> {
        let first = self.factor()?;
        let mut factors = vec![match scale {
            Some(q) => BracketExpr::scale(q, first),
            None => first,
        }];
        let mut only_stars = true;
        loop {
            match self.peek() {
                Tok::Star => {}
                Tok::Ident(s) if s == "o" => only_stars = false,
                Tok::Ident(s) if s == "sh" => break,
                Tok::Ident(s) => {
                    let t = &self.toks[self.pos];
                    return Err(ParseError::UnknownOperator { line: t.line, col: t.col, op: s.clone() });
                }
                Tok::Int(_) | Tok::Open(_) => return Err(self.unexpected("an operator")),
                _ => break,
            }
            self.bump();
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        if only_stars {
            return Ok(BracketExpr::LeftNest(factors));
        }
        let mut iter = factors.into_iter();
        let first = iter.next().unwrap();
        Ok(iter.fold(first, BracketExpr::zin))
    }

    fn factor(&mut self) -> Result<BracketExpr, ParseError> {
        let t = self.bump();
        let at = (t.line, t.col);
        match t.tok.clone() {
            Tok::Ident(s) if s == "bar" => {
                let t = &self.toks[self.pos];
                let open_at = (t.line, t.col);
                self.expect(Tok::Open('('))?;
                let inner = self.expr()?;
                self.close('(', open_at)?;
                Ok(BracketExpr::bar(inner))
            }
            Tok::Ident(s) if s == "o" || s == "sh" => {
                self.pos -= 1;
                Err(self.unexpected("an operand"))
            }
            Tok::Ident(s) => Ok(BracketExpr::Gen(s)),
            Tok::Open('(') => {
                let inner = self.expr()?;
                self.close('(', at)?;
                Ok(inner)
            }
            Tok::Open(open) => {
                let l = self.expr()?;
                self.expect(Tok::Comma)?;
                let r = self.expr()?;
                self.close(open, at)?;
                Ok(if open == '[' { BracketExpr::scom(l, r) } else { BracketExpr::santi(l, r) })
            }
            Tok::Close(c) => Err(ParseError::Unbalanced {
                line: at.0,
                col: at.1,
                detail: format!("unmatched `{c}`"),
            }),
            Tok::Eof => Err(self.unexpected("an operand")),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("an operand"))
            }
        }
    }
}

pub fn parse_expr(src: &str) -> Result<BracketExpr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    let t = &p.toks[p.pos];
    match &t.tok {
        Tok::Eof => Ok(e),
        Tok::Close(c) => Err(ParseError::Unbalanced {
            line: t.line,
            col: t.col,
            detail: format!("unmatched `{c}`"),
        }),
        _ => Err(p.unexpected("end of input")),
    }
}

/// Evaluates an expression in the word basis.
pub fn expand(e: &BracketExpr, alphabet: &Alphabet) -> Result<FreeElement, FreeError> {
    let ex = |e: &BracketExpr| expand(e, alphabet);
    Ok(match e {
        BracketExpr::Gen(name) => FreeElement::letter(
            alphabet
                .letter(name)
                .ok_or_else(|| FreeError::UnboundGenerator(name.clone()))?,
        ),
        BracketExpr::Zin(l, r) => zinbiel_product(&ex(l)?, &ex(r)?),
        BracketExpr::Shuffle(l, r) => super_shuffle(&ex(l)?, &ex(r)?),
        BracketExpr::SCom(l, r) => super_commutator(&ex(l)?, &ex(r)?),
        BracketExpr::SAnti(l, r) => super_anticommutator(&ex(l)?, &ex(r)?),
        BracketExpr::Scale(q, e) => {
            let v = ex(e)?;
            if q.is_zero() {
                FreeElement::zero()
            } else {
                v.scale(q)
            }
        }
        BracketExpr::Sum(items) => {
            let mut acc = FreeElement::zero();
            for item in items {
                acc.add_assign_ref(&ex(item)?);
            }
            acc
        }
        BracketExpr::Bar(e) => bar(&ex(e)?)?,
        BracketExpr::LeftNest(items) => {
            let mut iter = items.iter();
            let mut acc = match iter.next() {
                Some(first) => ex(first)?,
                None => FreeElement::zero(),
            };
            for item in iter {
                acc = zinbiel_product(&acc, &ex(item)?);
            }
            acc
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{left_nested, p_map};
    use proptest::prelude::*;

    fn g(s: &str) -> BracketExpr {
        BracketExpr::gen(s)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_expr("[x,y]").unwrap(), BracketExpr::scom(g("x"), g("y")));
        assert_eq!(
            parse_expr("bar(x*y*z)").unwrap(),
            BracketExpr::bar(BracketExpr::LeftNest(vec![g("x"), g("y"), g("z")]))
        );
        assert_eq!(
            parse_expr("(x sh y) o z").unwrap(),
            BracketExpr::zin(BracketExpr::shuffle(g("x"), g("y")), g("z"))
        );
    }

    #[test]
    fn precedence() {
        // o binds tighter than sh and associates to the left
        assert_eq!(
            parse_expr("a o b sh c o d o e").unwrap(),
            BracketExpr::shuffle(
                BracketExpr::zin(g("a"), g("b")),
                BracketExpr::zin(BracketExpr::zin(g("c"), g("d")), g("e"))
            )
        );
        assert_eq!(
            parse_expr("2*x o y - 1/2*z - w").unwrap(),
            BracketExpr::Sum(vec![
                BracketExpr::zin(BracketExpr::scale(Rational::from(2), g("x")), g("y")),
                BracketExpr::scale(Rational::new(-1, 2), g("z")),
                BracketExpr::scale(Rational::from(-1), g("w")),
            ])
        );
        assert_eq!(
            parse_expr("{bar(x o y), [x, y]}").unwrap(),
            BracketExpr::santi(
                BracketExpr::bar(BracketExpr::zin(g("x"), g("y"))),
                BracketExpr::scom(g("x"), g("y"))
            )
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_expr("x £ y"), Err(ParseError::Lexical { line: 1, col: 3, ch: '£' })));
        assert!(matches!(parse_expr("[x, y"), Err(ParseError::Unbalanced { line: 1, col: 6, .. })));
        assert!(matches!(parse_expr("(x o y]"), Err(ParseError::Unbalanced { line: 1, col: 7, .. })));
        assert!(matches!(parse_expr("x o y)"), Err(ParseError::Unbalanced { line: 1, col: 6, .. })));
        assert!(matches!(parse_expr("x\n ^ y"), Err(ParseError::UnknownOperator { line: 2, col: 2, .. })));
        assert!(matches!(
            parse_expr("x dot y"),
            Err(ParseError::UnknownOperator { line: 1, col: 3, ref op }) if op == "dot"
        ));
        assert!(matches!(parse_expr("x o"), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse_expr("1/0*x"), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse_expr("[x, y, z]"), Err(ParseError::Unexpected { .. })));
        assert_eq!(parse_expr("x\n ^ y").unwrap_err().position(), (2, 2));
    }

    #[test]
    fn evaluation() {
        let al = Alphabet::parse_inline("x:odd,y:even,z:odd").unwrap();
        let ev = |s: &str| expand(&parse_expr(s).unwrap(), &al).unwrap();
        let e = |s: &str| al.element_str(s).unwrap();
        assert_eq!(ev("x*y*z"), left_nested(&[e("x"), e("y"), e("z")]));
        assert_eq!(ev("x o y o z"), ev("x*y*z"));
        assert_eq!(ev("bar(x o y)"), ev("[x, y]"));
        assert_eq!(ev("x o y - x o y"), FreeElement::zero());
        assert_eq!(ev("0*x"), FreeElement::zero());
        let b = ev("bar(x*y*z)");
        assert_eq!(p_map(&b), -b);
        assert_eq!(
            expand(&parse_expr("x o w").unwrap(), &al),
            Err(FreeError::UnboundGenerator("w".into()))
        );
        assert!(matches!(expand(&parse_expr("bar(x)").unwrap(), &al), Err(FreeError::DegreeTooLow(_))));
    }

    fn arb_expr() -> impl Strategy<Value = BracketExpr> {
        let leaf = prop_oneof![Just(g("x")), Just(g("y")), Just(g("z1"))];
        leaf.prop_recursive(4, 48, 4, |inner| {
            let q = (-9i64..10, 1i64..6).prop_map(|(n, d)| Rational::new(n, d));
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| BracketExpr::zin(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| BracketExpr::shuffle(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| BracketExpr::scom(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| BracketExpr::santi(l, r)),
                (q, inner.clone()).prop_map(|(q, e)| BracketExpr::scale(q, e)),
                prop::collection::vec(inner.clone(), 2..4).prop_map(BracketExpr::Sum),
                prop::collection::vec(inner.clone(), 2..4).prop_map(BracketExpr::LeftNest),
                inner.prop_map(BracketExpr::bar),
            ]
        })
    }

    proptest! {
        #[test]
        fn printer_round_trips(e in arb_expr()) {
            let printed = e.to_string();
            prop_assert_eq!(parse_expr(&printed).unwrap(), e, "{}", printed);
        }
    }
}
