//! Two-sided unit witnesses: words `x`, `y` with `x w y = 1`, showing that
//! `w` generates the whole monoid as a two-sided ideal.

use std::collections::{HashMap, VecDeque};

use crate::catalog::{build_mn, A, B, C, D};
use crate::error::{Error, Result};
use crate::system::RewritingSystem;
use crate::word::{Element, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WitnessPair {
    pub x: Word,
    pub y: Word,
}

impl WitnessPair {
    pub fn size(&self) -> usize {
        self.x.len() + self.y.len()
    }

    /// Whether `x w y` normalizes to the identity.
    pub fn certifies(&self, s: &RewritingSystem, w: &[Letter]) -> bool {
        let mut full = self.x.0.clone();
        full.extend_from_slice(w);
        full.extend_from_slice(&self.y);
        s.normalize(&full).is_one()
    }
}

/// Constructive witnesses in `M_n`, peeling `w` from the right at its last
/// `d` and from the left otherwise.
#[derive(Debug, Clone)]
pub struct MnWitness {
    n: usize,
    system: RewritingSystem,
}

impl MnWitness {
    pub fn new(n: usize) -> Result<Self> {
        Ok(MnWitness {
            n,
            system: build_mn(n)?.system(),
        })
    }

    pub fn system(&self) -> &RewritingSystem {
        &self.system
    }

    /// Witness for a nonzero normal form `w`.
    pub fn witness(&self, w: &[Letter]) -> Result<WitnessPair> {
        self.witness_with_depth(w).map(|(p, _)| p)
    }

    /// Witness plus the recursion depth used to build it.
    pub fn witness_with_depth(&self, w: &[Letter]) -> Result<(WitnessPair, usize)> {
        if w.iter().any(|&l| l > D) {
            return Err(Error::InvalidArgument("letter outside {a,b,c,d}".into()));
        }
        if !self.system.is_normal(w) {
            return match self.system.normalize(w) {
                Element::Zero => Err(Error::ZeroElement),
                Element::Word(_) => Err(Error::NotNormalForm(self.system.alphabet().render(w))),
            };
        }
        Ok(self.build(w))
    }

    fn build(&self, w: &[Letter]) -> (WitnessPair, usize) {
        if w.is_empty() {
            return (
                WitnessPair {
                    x: Word::empty(),
                    y: Word::empty(),
                },
                0,
            );
        }

        if let Some(last_d) = w.iter().rposition(|&l| l == D) {
            // w = w' d a^k; right-multiplying by c^k a b (c^k b when n = 1)
            // leaves w'
            let tail = &w[last_d + 1..];
            assert!(
                tail.iter().all(|&l| l == A),
                "normal form has only a after its last d"
            );
            let k = tail.len();
            let (inner, depth) = self.build(&w[..last_d]);
            let mut y = vec![C; k];
            if self.n >= 2 {
                y.push(A);
            }
            y.push(B);
            y.extend_from_slice(&inner.y);
            return (
                WitnessPair {
                    x: inner.x,
                    y: Word(y),
                },
                depth + 1,
            );
        }

        if w[0] == B || w[0] == C {
            let rest = match self.system.normalize(&[&[D], w].concat()) {
                Element::Word(r) => r,
                Element::Zero => unreachable!("db = dc = 1"),
            };
            return self.prepend_d(&rest);
        }

        let k = w.iter().take_while(|&&l| l == A).count();
        if k == w.len() {
            return (
                WitnessPair {
                    x: Word::empty(),
                    y: Word(vec![C; k]),
                },
                1,
            );
        }
        // c cannot follow a in a normal form and a^n b is zero, so this is
        // a^k b w' with k < n, and d a^k b = 1
        assert!(
            w[k] == B && k < self.n,
            "normal forms starting with a are a^k b w'"
        );
        self.prepend_d(&w[k + 1..])
    }

    fn prepend_d(&self, rest: &[Letter]) -> (WitnessPair, usize) {
        let (inner, depth) = self.build(rest);
        let mut x = inner.x.0;
        x.push(D);
        (
            WitnessPair {
                x: Word(x),
                y: inner.y,
            },
            depth + 1,
        )
    }
}

/// Constructive witness for a nonzero normal form of `M_n`.
pub fn unit_witness_mn(n: usize, w: &[Letter]) -> Result<WitnessPair> {
    MnWitness::new(n)?.witness(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Longest intermediate normal form kept.
    pub max_len: usize,
    pub max_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_len: 12,
            max_nodes: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(WitnessPair),
    Undetermined { explored: usize },
}

#[derive(Debug, Clone, Copy)]
enum Move {
    Prepend(Letter),
    Append(Letter),
}

/// Breadth-first search over `normalize(x w y)`, growing `x` on the left or
/// `y` on the right by one letter per move. Returns a witness of minimal
/// `|x| + |y|`; prepends are tried before appends, letters in index order.
pub fn unit_witness_search(
    s: &RewritingSystem,
    w: &[Letter],
    limits: SearchLimits,
) -> Result<SearchOutcome> {
    let start = match s.normalize(w) {
        Element::Zero => return Err(Error::ZeroElement),
        Element::Word(v) => v,
    };
    let letters = s.alphabet().len() as Letter;
    let mut parent: HashMap<Word, Option<(Word, Move)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);

    let mut goal = None;
    'search: while let Some(state) = queue.pop_front() {
        if state.is_empty() {
            goal = Some(state);
            break;
        }
        let moves = (0..letters)
            .map(Move::Prepend)
            .chain((0..letters).map(Move::Append));
        for mv in moves {
            let word = match mv {
                Move::Prepend(g) => [&[g][..], &state].concat(),
                Move::Append(g) => [&state[..], &[g]].concat(),
            };
            let Element::Word(next) = s.normalize(&word) else {
                continue;
            };
            if next.len() > limits.max_len || parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= limits.max_nodes {
                break 'search;
            }
            parent.insert(next.clone(), Some((state.clone(), mv)));
            if next.is_empty() {
                goal = Some(next);
                break 'search;
            }
            queue.push_back(next);
        }
    }

    let Some(mut cur) = goal else {
        return Ok(SearchOutcome::Undetermined {
            explored: parent.len(),
        });
    };
    let mut x = Vec::new();
    let mut y = Vec::new();
    while let Some(Some((prev, mv))) = parent.get(&cur) {
        match *mv {
            Move::Prepend(g) => x.push(g),
            Move::Append(g) => y.push(g),
        }
        cur = prev.clone();
    }
    // x was collected last-prepended first, which is already left to right
    y.reverse();
    Ok(SearchOutcome::Found(WitnessPair {
        x: Word(x),
        y: Word(y),
    }))
}
