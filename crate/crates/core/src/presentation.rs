//! Monoid presentations and their line-oriented text format.
//!
//! ```text
//! generators: a b c d
//! relations:
//! aab = 0     # a^2 b is zero
//! ac = 1
//! ```
//!
//! `1` is the empty word, `0` the zero element, `#` starts a comment and
//! blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Element, Word};

/// One defining relation `lhs = rhs`. Only the right side may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Element,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Element) -> Self {
        Relation { lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Relation>) -> Self {
        Presentation {
            alphabet,
            relations,
        }
    }

    /// Parses the text format. Generators keep their declaration order,
    /// which is also the default precedence.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| (i + 1, strip_comment(raw)))
            .filter(|(_, l)| !l.trim().is_empty());

        let (gen_line, gen_text) = lines.next().ok_or(Error::Syntax {
            line: 1,
            column: 1,
            message: "expected 'generators:'".into(),
        })?;
        let rest = expect_header(gen_line, gen_text, "generators:")?;
        let alphabet = parse_generators(gen_line, gen_text, rest)?;

        let (rel_line, rel_text) = lines.next().ok_or(Error::Syntax {
            line: gen_line + 1,
            column: 1,
            message: "expected 'relations:'".into(),
        })?;
        let trailing = expect_header(rel_line, rel_text, "relations:")?;
        if !trailing.trim().is_empty() {
            return Err(Error::Syntax {
                line: rel_line,
                column: column_of(rel_text, trailing.trim_start()),
                message: "unexpected text after 'relations:'".into(),
            });
        }

        let relations = lines
            .map(|(n, l)| parse_relation(&alphabet, n, l))
            .collect::<Result<Vec<_>>>()?;
        let alphabet = match precedence_pragma(text) {
            Some(order) => alphabet.with_precedence(&order)?,
            None => alphabet,
        };
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    /// Renders the text format; `parse` reads it back unchanged. A
    /// non-default precedence is kept as a comment line.
    pub fn to_text(&self) -> String {
        let mut out = String::from("generators:");
        for c in self.alphabet.letters() {
            out.push(' ');
            out.push(*c);
        }
        out.push('\n');
        if self.alphabet.precedence() != self.alphabet.letters() {
            out.push_str("# precedence:");
            for c in self.alphabet.precedence() {
                out.push(' ');
                out.push(c);
            }
            out.push('\n');
        }
        out.push_str("relations:\n");
        for r in &self.relations {
            let _ = writeln!(
                out,
                "{} = {}",
                self.alphabet.render(&r.lhs),
                self.alphabet.render_element(&r.rhs)
            );
        }
        out
    }
}

/// Letters listed on a `# precedence: ...` comment line, if any.
fn precedence_pragma(text: &str) -> Option<Vec<char>> {
    text.lines().find_map(|l| {
        l.trim_start()
            .strip_prefix('#')
            .map(str::trim_start)
            .and_then(|rest| rest.strip_prefix("precedence:"))
            .map(|rest| rest.chars().filter(|c| !c.is_whitespace()).collect())
    })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// 1-based character column of `part`, which must be a subslice of `line`.
fn column_of(line: &str, part: &str) -> usize {
    let offset = part.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

fn expect_header<'a>(line: usize, text: &'a str, header: &str) -> Result<&'a str> {
    let trimmed = text.trim_start();
    trimmed.strip_prefix(header).ok_or_else(|| Error::Syntax {
        line,
        column: column_of(text, trimmed),
        message: format!("expected '{header}'"),
    })
}

fn parse_generators(line: usize, text: &str, rest: &str) -> Result<Alphabet> {
    let mut letters = Vec::new();
    for token in rest.split_whitespace() {
        let mut chars = token.chars();
        let c = chars
            .next()
            .expect("split_whitespace yields nonempty tokens");
        if chars.next().is_some() {
            return Err(Error::Syntax {
                line,
                column: column_of(text, token),
                message: format!("generator '{token}' must be a single character"),
            });
        }
        letters.push(c);
    }
    Alphabet::new(&letters)
}

fn parse_side(alphabet: &Alphabet, line: usize, text: &str, side: &str) -> Result<Element> {
    let token = side.trim();
    if token.is_empty() {
        return Err(Error::Syntax {
            line,
            column: column_of(text, side),
            message: "missing word".into(),
        });
    }
    let start = column_of(text, side.trim_start());
    if token.chars().any(char::is_whitespace) {
        return Err(Error::Syntax {
            line,
            column: start,
            message: "words may not contain whitespace".into(),
        });
    }
    match token {
        "0" => Ok(Element::Zero),
        "1" => Ok(Element::one()),
        _ => token
            .chars()
            .enumerate()
            .map(|(i, c)| {
                alphabet.index_of(c).ok_or(Error::UnknownLetter {
                    letter: c,
                    line,
                    column: start + i,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| Element::Word(Word(v))),
    }
}

fn parse_relation(alphabet: &Alphabet, line: usize, text: &str) -> Result<Relation> {
    let mut parts = text.splitn(2, '=');
    let left = parts.next().unwrap_or_default();
    let right = parts.next().ok_or_else(|| Error::Syntax {
        line,
        column: column_of(text, text.trim_start()),
        message: "expected '<word> = <word|1|0>'".into(),
    })?;
    if let Some(i) = right.find('=') {
        return Err(Error::Syntax {
            line,
            column: column_of(text, &right[i..]),
            message: "more than one '=' in relation".into(),
        });
    }
    let lhs = parse_side(alphabet, line, text, left)?;
    let rhs = parse_side(alphabet, line, text, right)?;
    match (lhs, rhs) {
        (Element::Zero, Element::Zero) => Err(Error::Syntax {
            line,
            column: column_of(text, text.trim_start()),
            message: "at most one side of a relation may be 0".into(),
        }),
        (Element::Zero, Element::Word(w)) | (Element::Word(w), Element::Zero) => {
            Ok(Relation::new(w, Element::Zero))
        }
        (Element::Word(l), r) => Ok(Relation::new(l, r)),
    }
}
