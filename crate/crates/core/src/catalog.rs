//! Built-in presentations: the family `M_n` and the commuting example with
//! quadratic derivation area.

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Relation};
use crate::system::{orient, RewritingSystem};
use crate::word::{Alphabet, Element, Letter, Word};

pub const A: Letter = 0;
pub const B: Letter = 1;
pub const C: Letter = 2;
pub const D: Letter = 3;

pub const DEHN_EXAMPLE: &str = "dehn-example";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    /// The alphabet inside carries the precedence used for orientation.
    pub presentation: Presentation,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn precedence(&self) -> Vec<char> {
        self.presentation.alphabet.precedence()
    }

    pub fn system(&self) -> RewritingSystem {
        let p = &self.presentation;
        orient(p, &p.alphabet.shortlex()).expect("catalog presentations orient")
    }
}

fn abcd() -> Alphabet {
    Alphabet::new(&['a', 'b', 'c', 'd']).expect("valid alphabet")
}

fn word(letters: &[Letter]) -> Word {
    Word(letters.to_vec())
}

fn power(l: Letter, k: usize) -> Vec<Letter> {
    vec![l; k]
}

/// `M_n = <a,b,c,d | a^n b = 0, ac = 1, db = 1, dc = 1, d a^k b = 1 (1 <= k < n)>`
/// with precedence `a < b < c < d`.
pub fn build_mn(n: usize) -> Result<CatalogEntry> {
    if n < 1 {
        return Err(Error::InvalidArgument("M_n needs n >= 1".into()));
    }
    let one = Element::one;
    let mut anb = power(A, n);
    anb.push(B);
    let mut relations = vec![
        Relation::new(word(&anb), Element::Zero),
        Relation::new(word(&[A, C]), one()),
        Relation::new(word(&[D, B]), one()),
        Relation::new(word(&[D, C]), one()),
    ];
    for k in 1..n {
        let mut w = vec![D];
        w.extend(power(A, k));
        w.push(B);
        relations.push(Relation::new(Word(w), one()));
    }
    Ok(CatalogEntry {
        name: format!("M{n}"),
        presentation: Presentation::new(abcd(), relations),
        provenance: "M_n family: congruence-free monoids a^n b = 0, ac = db = dc = 1, d a^k b = 1"
            .into(),
    })
}

/// The seven-rule complete system with the commutation `ab -> ba`, oriented
/// under `b < a < c < d`.
pub fn build_dehn_example() -> CatalogEntry {
    let alphabet = abcd()
        .with_precedence(&['b', 'a', 'c', 'd'])
        .expect("valid precedence");
    let one = Element::one;
    let relations = vec![
        Relation::new(word(&[A, B]), Element::Word(word(&[B, A]))),
        Relation::new(word(&[C, B, A, D]), one()),
        Relation::new(word(&[C, B, B]), one()),
        Relation::new(word(&[A, A, D]), one()),
        Relation::new(word(&[C, A, D]), Element::Zero),
        Relation::new(word(&[C, B, D]), Element::Zero),
        Relation::new(word(&[C, D]), one()),
    ];
    CatalogEntry {
        name: DEHN_EXAMPLE.into(),
        presentation: Presentation::new(alphabet, relations),
        provenance: "congruence-free monoid with a commuting pair and quadratic Dehn function"
            .into(),
    }
}

/// Names accepted by [`lookup`]. Any `M<n>` with `n >= 1` also resolves.
pub fn list_catalog() -> Vec<String> {
    (1..=5)
        .map(|n| format!("M{n}"))
        .chain(std::iter::once(DEHN_EXAMPLE.to_string()))
        .collect()
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    if name == DEHN_EXAMPLE {
        return Ok(build_dehn_example());
    }
    let n = name
        .strip_prefix('M')
        .and_then(|rest| rest.parse::<usize>().ok())
        .ok_or_else(|| Error::InvalidArgument(format!("unknown catalog entry '{name}'")))?;
    build_mn(n)
}

/// Parameter `n` when `name` refers to an `M_n` entry.
pub fn mn_parameter(name: &str) -> Option<usize> {
    name.strip_prefix('M')
        .and_then(|rest| rest.parse::<usize>().ok())
        .filter(|&n| n >= 1)
}
