//! The line-oriented `.poset` text format.
//!
//! ```text
//! # comment
//! poset NAME
//! elements L1 L2 ...
//! covers A<B A<C ...
//! prime A:B C:D ...
//! ```
//!
//! Sections appear in this order. `elements`, `covers` and `prime` may be
//! split over several consecutive lines; `prime` is optional. Labels are any
//! whitespace-free strings that contain neither `<` nor `:`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::poset::{OpPoset, Poset, PosetError};
use crate::subset::{Subset, MAX_ELEMENTS};

/// A parsed `.poset` file, still in terms of labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub prime: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `poset NAME` header")]
    MissingHeader,
    #[error("missing `{0}` section")]
    MissingSection(&'static str),
    #[error("unknown section `{0}`")]
    UnknownSection(String),
    #[error("section `{0}` out of order")]
    OutOfOrder(String),
    #[error("`poset` takes exactly one name")]
    BadHeader,
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("more than {MAX_ELEMENTS} elements")]
    TooManyElements,
    #[error("expected `A<B`, found `{0}`")]
    BadCover(String),
    #[error("expected `A:B`, found `{0}`")]
    BadPrime(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cover `{0}<{1}` closes a cycle")]
    Cycle(String, String),
    #[error("no least element")]
    MissingBottom,
    #[error("no greatest element")]
    MissingTop,
    #[error("`{0}` already has an image under prime")]
    DuplicatePrime(String),
    #[error("prime has no image for `{0}`")]
    PartialPrime(String),
}

/// A parse failure with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.kind
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("document `{0}` has no prime section")]
    NoPrime(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }

    fn error_at(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column + offset,
            kind,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Header,
    Elements,
    Covers,
    Prime,
}

fn tokenize(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let content = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in content.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, c))) => {
                out.push(Token {
                    text: &content[b..byte],
                    line: line_no,
                    column: c + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: &content[b..],
            line: line_no,
            column: c + 1,
        });
    }
    out
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains('<') && !s.contains(':')
}

/// Parses a `.poset` document and validates it: labels are declared, the
/// closure of the covers is antisymmetric with a least and a greatest
/// element, and `prime` (when present) is total.
pub fn parse_poset(text: &str) -> Result<PosetDocument, ParseError> {
    let mut name: Option<String> = None;
    let mut elements: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut elements_pos: Option<(usize, usize)> = None;
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut down: Vec<Subset> = Vec::new();
    let mut prime: Option<Vec<(String, String)>> = None;
    let mut prime_pos: Option<(usize, usize)> = None;
    let mut seen_prime: Vec<bool> = Vec::new();
    let mut stage: Option<Section> = None;
    let mut last_line = 0;

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let tokens = tokenize(line, line_no);
        let Some((&head, rest)) = tokens.split_first() else {
            continue;
        };
        let section = match head.text {
            "poset" => Section::Header,
            "elements" => Section::Elements,
            "covers" => Section::Covers,
            "prime" => Section::Prime,
            other => {
                if stage.is_none() {
                    return Err(head.error(ParseErrorKind::MissingHeader));
                }
                return Err(head.error(ParseErrorKind::UnknownSection(other.to_string())));
            }
        };
        match stage {
            None if section != Section::Header => {
                return Err(head.error(ParseErrorKind::MissingHeader));
            }
            Some(s) if section < s || (section == s && s == Section::Header) => {
                return Err(head.error(ParseErrorKind::OutOfOrder(head.text.to_string())));
            }
            Some(Section::Header) if section > Section::Elements => {
                return Err(head.error(ParseErrorKind::MissingSection("elements")));
            }
            _ => {}
        }
        if section == Section::Prime && stage == Some(Section::Elements) {
            return Err(head.error(ParseErrorKind::MissingSection("covers")));
        }
        if section != Section::Elements && stage == Some(Section::Elements) {
            // elements are complete; set up the closure
            down = (0..elements.len()).map(Subset::singleton).collect();
        }
        stage = Some(section);

        match section {
            Section::Header => {
                if rest.len() != 1 {
                    return Err(head.error(ParseErrorKind::BadHeader));
                }
                name = Some(rest[0].text.to_string());
            }
            Section::Elements => {
                elements_pos.get_or_insert((head.line, head.column));
                for tok in rest {
                    if !valid_label(tok.text) {
                        return Err(tok.error(ParseErrorKind::InvalidLabel(tok.text.into())));
                    }
                    if index.contains_key(tok.text) {
                        return Err(tok.error(ParseErrorKind::DuplicateElement(tok.text.into())));
                    }
                    if elements.len() == MAX_ELEMENTS {
                        return Err(tok.error(ParseErrorKind::TooManyElements));
                    }
                    index.insert(tok.text.to_string(), elements.len());
                    elements.push(tok.text.to_string());
                }
            }
            Section::Covers => {
                for tok in rest {
                    let Some((lo, hi)) = tok.text.split_once('<') else {
                        return Err(tok.error(ParseErrorKind::BadCover(tok.text.into())));
                    };
                    if lo.is_empty() || hi.is_empty() || hi.contains('<') {
                        return Err(tok.error(ParseErrorKind::BadCover(tok.text.into())));
                    }
                    let a = *index
                        .get(lo)
                        .ok_or_else(|| tok.error(ParseErrorKind::UnknownLabel(lo.into())))?;
                    let b = *index.get(hi).ok_or_else(|| {
                        tok.error_at(
                            lo.chars().count() + 1,
                            ParseErrorKind::UnknownLabel(hi.into()),
                        )
                    })?;
                    if down[a].contains(b) {
                        return Err(tok.error(ParseErrorKind::Cycle(lo.into(), hi.into())));
                    }
                    // everything at or below a is now below everything at or above b
                    let below = down[a];
                    for row in down.iter_mut().filter(|row| row.contains(b)) {
                        *row = row.union(below);
                    }
                    covers.push((lo.to_string(), hi.to_string()));
                }
            }
            Section::Prime => {
                prime_pos.get_or_insert((head.line, head.column));
                if seen_prime.is_empty() {
                    seen_prime = vec![false; elements.len()];
                }
                let entries = prime.get_or_insert_with(Vec::new);
                for tok in rest {
                    let Some((from, to)) = tok.text.split_once(':') else {
                        return Err(tok.error(ParseErrorKind::BadPrime(tok.text.into())));
                    };
                    if from.is_empty() || to.is_empty() || to.contains(':') {
                        return Err(tok.error(ParseErrorKind::BadPrime(tok.text.into())));
                    }
                    let a = *index
                        .get(from)
                        .ok_or_else(|| tok.error(ParseErrorKind::UnknownLabel(from.into())))?;
                    if !index.contains_key(to) {
                        return Err(tok.error_at(
                            from.chars().count() + 1,
                            ParseErrorKind::UnknownLabel(to.into()),
                        ));
                    }
                    if seen_prime[a] {
                        return Err(tok.error(ParseErrorKind::DuplicatePrime(from.into())));
                    }
                    seen_prime[a] = true;
                    entries.push((from.to_string(), to.to_string()));
                }
            }
        }
    }

    let eof = ParseError {
        line: last_line.max(1),
        column: 1,
        kind: ParseErrorKind::MissingHeader,
    };
    let name = name.ok_or(eof.clone())?;
    let Some((el_line, el_col)) = elements_pos else {
        return Err(ParseError {
            kind: ParseErrorKind::MissingSection("elements"),
            ..eof
        });
    };
    if elements.is_empty() {
        return Err(ParseError {
            line: el_line,
            column: el_col,
            kind: ParseErrorKind::MissingSection("elements"),
        });
    }
    if stage == Some(Section::Elements) {
        return Err(ParseError {
            kind: ParseErrorKind::MissingSection("covers"),
            ..eof
        });
    }
    let n = elements.len();
    let full = Subset::full(n);
    let at_elements = |kind| ParseError {
        line: el_line,
        column: el_col,
        kind,
    };
    if !(0..n).any(|x| (0..n).all(|y| down[y].contains(x))) {
        return Err(at_elements(ParseErrorKind::MissingBottom));
    }
    if !(0..n).any(|x| down[x] == full) {
        return Err(at_elements(ParseErrorKind::MissingTop));
    }
    if let Some((line, column)) = prime_pos {
        if let Some(missing) = seen_prime.iter().position(|&s| !s) {
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::PartialPrime(elements[missing].clone()),
            });
        }
    }

    Ok(PosetDocument {
        name,
        elements,
        covers,
        prime,
    })
}

impl PosetDocument {
    /// Describes an existing structure, listing only cover pairs.
    pub fn from_poset(name: &str, poset: &Poset) -> Self {
        let label = |x: usize| poset.name(x).to_string();
        PosetDocument {
            name: name.to_string(),
            elements: poset.names().to_vec(),
            covers: poset
                .covers()
                .into_iter()
                .map(|(a, b)| (label(a), label(b)))
                .collect(),
            prime: None,
        }
    }

    pub fn from_op_poset(name: &str, op: &OpPoset) -> Self {
        let mut doc = Self::from_poset(name, op.poset());
        doc.prime = Some(
            (0..op.len())
                .map(|x| (op.name(x).to_string(), op.name(op.prime(x)).to_string()))
                .collect(),
        );
        doc
    }

    pub fn to_poset(&self) -> Result<Poset, DocumentError> {
        let index: HashMap<&str, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or(DocumentError::Poset(PosetError::OutOfRange(usize::MAX)))
        };
        let covers = self
            .covers
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(Poset::from_covers(self.elements.clone(), &covers)?)
    }

    pub fn to_op_poset(&self) -> Result<OpPoset, DocumentError> {
        let poset = self.to_poset()?;
        let entries = self
            .prime
            .as_ref()
            .ok_or_else(|| DocumentError::NoPrime(self.name.clone()))?;
        let mut prime = vec![usize::MAX; poset.len()];
        for (from, to) in entries {
            let (Some(a), Some(b)) = (poset.index_of(from), poset.index_of(to)) else {
                return Err(PosetError::OutOfRange(usize::MAX).into());
            };
            prime[a] = b;
        }
        if prime.contains(&usize::MAX) {
            let got = prime.iter().filter(|&&y| y != usize::MAX).count();
            return Err(PosetError::PrimeNotTotal {
                n: poset.len(),
                got,
            }
            .into());
        }
        Ok(OpPoset::new(poset, prime)?)
    }

    /// Serializes back to the text format, one section per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "poset {}\nelements {}\ncovers",
            self.name,
            self.elements.join(" ")
        );
        for (a, b) in &self.covers {
            out.push_str(&format!(" {a}<{b}"));
        }
        out.push('\n');
        if let Some(prime) = &self.prime {
            out.push_str("prime");
            for (a, b) in prime {
                out.push_str(&format!(" {a}:{b}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn kind(text: &str) -> ParseErrorKind {
        parse_poset(text).unwrap_err().kind
    }

    #[test]
    fn bundled_ex1() {
        let doc = parse_poset(fixtures::EX1).unwrap();
        assert_eq!(doc.name, "ex1");
        assert_eq!(doc.elements.len(), 7);
        assert_eq!(doc.covers.len(), 10);
        assert_eq!(doc.prime.as_ref().unwrap().len(), 7);
    }

    #[test]
    fn two_chain_inline() {
        let doc = parse_poset("poset t\nelements 0 1\ncovers 0<1\nprime 0:1 1:0").unwrap();
        let op = doc.to_op_poset().unwrap();
        assert_eq!(op.len(), 2);
        assert!(op.poset().leq(0, 1));
        assert_eq!(op.prime(0), 1);
    }

    #[test]
    fn cycle_is_reported_at_closing_cover() {
        let err = parse_poset("poset t\nelements 0 1\ncovers 0<1 1<0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Cycle("1".into(), "0".into()));
        assert_eq!((err.line, err.column), (3, 12));
    }

    #[test]
    fn error_kinds() {
        assert_eq!(
            kind("poset t\nelements 0 a a 1\ncovers"),
            ParseErrorKind::DuplicateElement("a".into())
        );
        assert_eq!(
            kind("poset t\nelements 0 1\ncovers 0<2"),
            ParseErrorKind::UnknownLabel("2".into())
        );
        assert_eq!(
            kind("poset t\nelements 0 1\ncovers 0<1\nprime 0:1 x:0"),
            ParseErrorKind::UnknownLabel("x".into())
        );
        assert_eq!(
            kind("poset t\nelements 0 a b\ncovers 0<a 0<b"),
            ParseErrorKind::MissingTop
        );
        assert_eq!(
            kind("poset t\nelements a b 1\ncovers a<1 b<1"),
            ParseErrorKind::MissingBottom
        );
        assert_eq!(
            kind("poset t\nelements 0 1\ncovers 0<1\nprime 0:1"),
            ParseErrorKind::PartialPrime("1".into())
        );
        assert_eq!(
            kind("poset t\nelements 0 1\ncovers 0<1\nprime 0:1 0:0 1:0"),
            ParseErrorKind::DuplicatePrime("0".into())
        );
        assert_eq!(kind("elements 0 1"), ParseErrorKind::MissingHeader);
        assert_eq!(
            kind("poset t\ncovers 0<1"),
            ParseErrorKind::MissingSection("elements")
        );
        assert_eq!(
            kind("poset t\nelements 0\nprime 0:0"),
            ParseErrorKind::MissingSection("covers")
        );
        assert_eq!(
            kind("poset t\nelements 0 1\ncovers 0<1\nelements 2"),
            ParseErrorKind::OutOfOrder("elements".into())
        );
        assert_eq!(
            kind("poset t\nelements 0 1\ncovers 0-1"),
            ParseErrorKind::BadCover("0-1".into())
        );
        assert_eq!(
            kind("poset t\nelements 0 a<b"),
            ParseErrorKind::InvalidLabel("a<b".into())
        );
    }

    #[test]
    fn column_of_unknown_upper_label() {
        let err = parse_poset("poset t\nelements 0 1\ncovers 0<1  1<zz").unwrap_err();
        assert_eq!((err.line, err.column), (3, 15));
    }

    #[test]
    fn comments_and_split_sections() {
        let text = "# header\nposet t # name\nelements 0\nelements 1\ncovers\ncovers 0<1\n";
        let doc = parse_poset(text).unwrap();
        assert_eq!(doc.elements, vec!["0", "1"]);
        assert_eq!(doc.prime, None);
        assert!(matches!(doc.to_op_poset(), Err(DocumentError::NoPrime(_))));
    }

    #[test]
    fn one_element_poset() {
        let doc = parse_poset("poset one\nelements 0\ncovers\nprime 0:0").unwrap();
        let op = doc.to_op_poset().unwrap();
        assert_eq!(op.poset().bottom(), op.poset().top());
    }
}
