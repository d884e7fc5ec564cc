//! Letters, words and elements of a monoid with zero.
//!
//! A [`Word`] stores letter indices into an [`Alphabet`]; rendering back to
//! text always goes through the alphabet. The empty word is written `1` and
//! the zero element `0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a generator inside its alphabet.
pub type Letter = u8;

/// Characters that have a fixed meaning in the text format.
const RESERVED: [char; 4] = ['0', '1', '#', '='];

/// Ordered set of single-character generators plus the precedence used by
/// the shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
    /// `rank[i]` is the position of letter `i` in the precedence.
    rank: Vec<u8>,
}

impl Alphabet {
    /// Builds an alphabet whose precedence is the declaration order.
    pub fn new(letters: &[char]) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if letters.len() > usize::from(Letter::MAX) {
            return Err(Error::InvalidArgument(format!(
                "at most {} generators are supported",
                Letter::MAX
            )));
        }
        for (i, &c) in letters.iter().enumerate() {
            if RESERVED.contains(&c) || c.is_whitespace() {
                return Err(Error::ReservedGenerator(c));
            }
            if letters[..i].contains(&c) {
                return Err(Error::DuplicateGenerator(c));
            }
        }
        Ok(Alphabet {
            letters: letters.to_vec(),
            rank: (0..letters.len() as u8).collect(),
        })
    }

    /// Parses a whitespace separated or contiguous list of letters, e.g. `"a b c"` or `"abc"`.
    pub fn from_str_letters(s: &str) -> Result<Self> {
        let letters: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        Alphabet::new(&letters)
    }

    /// Replaces the precedence. `order` lists every letter once, smallest first.
    pub fn with_precedence(mut self, order: &[char]) -> Result<Self> {
        if order.len() != self.letters.len() {
            return Err(Error::InvalidPrecedence(format!(
                "expected {} letters, got {}",
                self.letters.len(),
                order.len()
            )));
        }
        let mut rank = vec![u8::MAX; self.letters.len()];
        for (pos, &c) in order.iter().enumerate() {
            let idx = self
                .index_of(c)
                .ok_or_else(|| Error::InvalidPrecedence(format!("'{c}' is not a generator")))?;
            if rank[idx as usize] != u8::MAX {
                return Err(Error::InvalidPrecedence(format!("'{c}' listed twice")));
            }
            rank[idx as usize] = pos as u8;
        }
        self.rank = rank;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, idx: Letter) -> char {
        self.letters[idx as usize]
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| i as Letter)
    }

    /// Precedence rank of each letter index.
    pub fn ranks(&self) -> &[u8] {
        &self.rank
    }

    /// Letters sorted by precedence, smallest first.
    pub fn precedence(&self) -> Vec<char> {
        self.letters_by_precedence()
            .into_iter()
            .map(|i| self.letter(i))
            .collect()
    }

    /// Letter indices sorted by precedence, smallest first.
    pub fn letters_by_precedence(&self) -> Vec<Letter> {
        let mut idx: Vec<Letter> = (0..self.letters.len() as Letter).collect();
        idx.sort_by_key(|&i| self.rank[i as usize]);
        idx
    }

    pub fn shortlex(&self) -> ShortlexOrder {
        ShortlexOrder {
            rank: self.rank.clone(),
        }
    }

    /// Parses a raw generator string; `1` denotes the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .enumerate()
            .map(|(col, c)| {
                self.index_of(c).ok_or(Error::UnknownLetter {
                    letter: c,
                    line: 0,
                    column: col + 1,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Like [`parse_word`](Self::parse_word) but also accepts `0`.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        if s.trim() == "0" {
            Ok(Element::Zero)
        } else {
            self.parse_word(s).map(Element::Word)
        }
    }

    pub fn render(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| self.letter(l)).collect()
        }
    }

    pub fn render_element(&self, e: &Element) -> String {
        match e {
            Element::Zero => "0".to_string(),
            Element::Word(w) => self.render(w),
        }
    }
}

/// A word over an alphabet, stored as letter indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn into_inner(self) -> Vec<Letter> {
        self.0
    }

    /// Whether `pat` occurs as a contiguous factor.
    pub fn contains_factor(&self, pat: &[Letter]) -> bool {
        pat.is_empty() || self.0.windows(pat.len()).any(|w| w == pat)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    /// Letter indices, for debugging only; use [`Alphabet::render`] for text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A monoid element: the absorbing zero, or a word.
///
/// Values produced by normalization always hold normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Zero,
    Word(Word),
}

impl Element {
    pub fn one() -> Self {
        Element::Word(Word::empty())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Element::Word(w) if w.is_empty())
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Element::Zero => None,
            Element::Word(w) => Some(w),
        }
    }

    /// Length of the underlying word; zero counts as length 0.
    pub fn len(&self) -> usize {
        self.as_word().map_or(0, |w| w.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::Word(w)
    }
}

/// Shortlex order: shorter words first, equal lengths compared letterwise by
/// precedence rank. Zero sits below every word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortlexOrder {
    rank: Vec<u8>,
}

impl ShortlexOrder {
    pub fn new(alphabet: &Alphabet) -> Self {
        alphabet.shortlex()
    }

    pub fn compare(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| {
            u.iter()
                .zip(v)
                .map(|(&x, &y)| self.rank[x as usize].cmp(&self.rank[y as usize]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    pub fn compare_elements(&self, x: &Element, y: &Element) -> Ordering {
        match (x, y) {
            (Element::Zero, Element::Zero) => Ordering::Equal,
            (Element::Zero, Element::Word(_)) => Ordering::Less,
            (Element::Word(_), Element::Zero) => Ordering::Greater,
            (Element::Word(u), Element::Word(v)) => self.compare(u, v),
        }
    }

    pub fn greater(&self, x: &Element, y: &Element) -> bool {
        self.compare_elements(x, y) == Ordering::Greater
    }
}
