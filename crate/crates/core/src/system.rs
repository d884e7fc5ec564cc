//! Oriented rewriting systems with an absorbing zero.

use std::cmp::Ordering;

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matcher::{FactorMatcher, Occurrence};
use crate::presentation::{Presentation, Relation};
use crate::word::{Alphabet, Element, Letter, ShortlexOrder, Word};

/// An oriented rule `lhs -> rhs`; `rhs` may be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Element,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Element) -> Self {
        Rule { lhs, rhs }
    }

    /// Strictly shortens the word it applies to (zero counts as shortest).
    pub fn is_length_decreasing(&self) -> bool {
        match &self.rhs {
            Element::Zero => true,
            Element::Word(r) => r.len() < self.lhs.len(),
        }
    }
}

/// Result of a single rewrite step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Rewritten { element: Element, at: Occurrence },
    NoRedex,
}

/// Redex selection for [`RewritingSystem::normalize_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

#[derive(Debug, Clone)]
pub struct RewritingSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    matcher: FactorMatcher,
}

impl RewritingSystem {
    /// Builds a system from explicit rules. Rules are used exactly as given;
    /// callers that need termination should check it with
    /// [`check_termination`].
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Result<Self> {
        if let Some(r) = rules.iter().find(|r| r.lhs.is_empty()) {
            return Err(Error::UnorientableRelation(format!(
                "1 = {}: rules need a nonempty left side",
                alphabet.render_element(&r.rhs)
            )));
        }
        let width = alphabet.len();
        for w in rules
            .iter()
            .flat_map(|r| std::iter::once(&r.lhs).chain(r.rhs.as_word()))
        {
            if w.iter().any(|&l| l as usize >= width) {
                return Err(Error::InvalidArgument(
                    "rule uses a letter outside the alphabet".into(),
                ));
            }
        }
        let matcher =
            FactorMatcher::new(width, &rules.iter().map(|r| &r.lhs[..]).collect::<Vec<_>>());
        Ok(RewritingSystem {
            alphabet,
            rules,
            matcher,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn matcher(&self) -> &FactorMatcher {
        &self.matcher
    }

    pub fn max_lhs_len(&self) -> usize {
        self.matcher.max_len()
    }

    /// Whether `w` contains no left-hand side.
    pub fn is_normal(&self, w: &[Letter]) -> bool {
        !self.matcher.contains_any(w)
    }

    /// All redexes of `w`, by position then rule index.
    pub fn redexes(&self, w: &[Letter]) -> Vec<Occurrence> {
        self.matcher.find_all(w)
    }

    /// Applies the rule of `at` to `w`.
    pub fn apply(&self, w: &[Letter], at: Occurrence) -> Element {
        let rule = &self.rules[at.pattern];
        debug_assert_eq!(&w[at.pos..at.pos + rule.lhs.len()], &rule.lhs[..]);
        match &rule.rhs {
            Element::Zero => Element::Zero,
            Element::Word(r) => Element::Word(splice(w, at.pos, rule.lhs.len(), r)),
        }
    }

    /// One rewrite at the leftmost redex (longest left side, then lowest
    /// rule index on ties).
    pub fn rewrite_step(&self, w: &[Letter]) -> Step {
        match self.matcher.leftmost(w, 0) {
            None => Step::NoRedex,
            Some(at) => Step::Rewritten {
                element: self.apply(w, at),
                at,
            },
        }
    }

    /// Normal form of `w`. Requires a terminating system.
    pub fn normalize(&self, w: &[Letter]) -> Element {
        self.normalize_counted(w).0
    }

    /// Normal form together with the number of rewrite steps taken.
    pub fn normalize_counted(&self, w: &[Letter]) -> (Element, usize) {
        match self.run(w.to_vec(), usize::MAX) {
            Ok(r) => r,
            Err(_) => unreachable!("unbounded budget"),
        }
    }

    /// Normalization that gives up after `budget` rewrite steps, for systems
    /// not known to terminate.
    pub fn try_normalize(&self, w: &[Letter], budget: usize) -> Result<Element> {
        self.run(w.to_vec(), budget).map(|(e, _)| e)
    }

    fn run(&self, mut w: Vec<Letter>, budget: usize) -> Result<(Element, usize)> {
        let back = self.max_lhs_len().saturating_sub(1);
        let mut from = 0;
        let mut steps = 0usize;
        while let Some(at) = self.matcher.leftmost(&w, from) {
            if steps == budget {
                return Err(Error::StepBudgetExceeded(budget));
            }
            steps += 1;
            let rule = &self.rules[at.pattern];
            match &rule.rhs {
                Element::Zero => return Ok((Element::Zero, steps)),
                Element::Word(r) => {
                    w.splice(at.pos..at.pos + rule.lhs.len(), r.iter().copied());
                }
            }
            // no redex starts before at.pos in the old word, and a new one
            // must overlap the replaced window
            from = at.pos.saturating_sub(back);
        }
        Ok((Element::Word(Word(w)), steps))
    }

    /// Normalization under an explicit redex-selection strategy. Slow; meant
    /// for checking strategy independence.
    pub fn normalize_with(&self, w: &[Letter], strategy: Strategy) -> Element {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut current = w.to_vec();
        loop {
            let occ = self.matcher.find_all(&current);
            let Some(&first) = occ.first() else {
                return Element::Word(Word(current));
            };
            let at = match strategy {
                Strategy::Leftmost => first,
                Strategy::Rightmost => *occ.last().expect("nonempty"),
                Strategy::Random(_) => {
                    let rng = rng.as_mut().expect("seeded");
                    occ[rng.gen_range(0..occ.len())]
                }
            };
            match self.apply(&current, at) {
                Element::Zero => return Element::Zero,
                Element::Word(next) => current = next.0,
            }
        }
    }

    /// Monoid product with absorbing zero.
    pub fn product(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Word(u), Element::Word(v)) => self.normalize(&u.concat(v)),
            _ => Element::Zero,
        }
    }

    /// Normal form of an element given as possibly unreduced word or zero.
    pub fn normalize_element(&self, e: &Element) -> Element {
        match e {
            Element::Zero => Element::Zero,
            Element::Word(w) => self.normalize(w),
        }
    }

    /// Equality in the presented monoid. Only sound for "false" when the
    /// system is complete.
    pub fn equal_in_monoid(&self, u: &[Letter], v: &[Letter]) -> bool {
        self.normalize(u) == self.normalize(v)
    }

    pub fn render_rule(&self, r: &Rule) -> String {
        format!(
            "{} -> {}",
            self.alphabet.render(&r.lhs),
            self.alphabet.render_element(&r.rhs)
        )
    }
}

pub(crate) fn splice(w: &[Letter], pos: usize, len: usize, rhs: &[Letter]) -> Word {
    let mut out = Vec::with_capacity(w.len() - len + rhs.len());
    out.extend_from_slice(&w[..pos]);
    out.extend_from_slice(rhs);
    out.extend_from_slice(&w[pos + len..]);
    Word(out)
}

/// Orients a relation as `max -> min` under `ord`. `None` for a trivial
/// relation.
pub fn orient_relation(rel: &Relation, ord: &ShortlexOrder) -> Option<Rule> {
    let lhs = Element::Word(rel.lhs.clone());
    match ord.compare_elements(&lhs, &rel.rhs) {
        Ordering::Equal => None,
        Ordering::Greater => Some(Rule::new(rel.lhs.clone(), rel.rhs.clone())),
        Ordering::Less => {
            let big = rel.rhs.as_word().expect("zero is the minimum").clone();
            Some(Rule::new(big, lhs))
        }
    }
}

/// Turns every relation into a rule `max -> min`, keeping relation order.
/// Trivial relations `u = u` are skipped with a warning.
pub fn orient(p: &Presentation, ord: &ShortlexOrder) -> Result<RewritingSystem> {
    let mut rules = Vec::with_capacity(p.relations.len());
    for rel in &p.relations {
        match orient_relation(rel, ord) {
            None => warn!(
                "skipping trivial relation {} = {}",
                p.alphabet.render(&rel.lhs),
                p.alphabet.render_element(&rel.rhs)
            ),
            Some(rule) if rule.lhs.is_empty() => {
                return Err(Error::UnorientableRelation(format!(
                    "{} = {}",
                    p.alphabet.render(&rel.lhs),
                    p.alphabet.render_element(&rel.rhs)
                )))
            }
            Some(rule) => rules.push(rule),
        }
    }
    RewritingSystem::new(p.alphabet.clone(), rules)
}

/// True iff every rule is strictly decreasing under `ord`, which makes the
/// system terminating since shortlex is a well-founded reduction order.
pub fn check_termination(s: &RewritingSystem, ord: &ShortlexOrder) -> bool {
    s.rules()
        .iter()
        .all(|r| ord.greater(&Element::Word(r.lhs.clone()), &r.rhs))
}
