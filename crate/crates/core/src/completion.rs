//! Critical pairs, local confluence and Knuth-Bendix completion.
//!
//! Reducts are elements, so a rule with right side zero yields a zero
//! reduct. A zero reduct joins only with a reduct whose normal form is zero.

use std::cmp::Ordering;
use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matcher::Occurrence;
use crate::presentation::Presentation;
use crate::system::{check_termination, RewritingSystem, Rule};
use crate::word::{Element, ShortlexOrder, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OverlapKind {
    /// A proper suffix of the first left side is a proper prefix of the second.
    SuffixPrefix,
    /// The second left side is a factor of the first.
    Containment,
}

/// Two rule left-hand sides sharing letters inside `word`. The first rule
/// applies at position 0, the second at `offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub rule1: usize,
    pub rule2: usize,
    pub kind: OverlapKind,
    pub offset: usize,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Joinable(Element),
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub source: Overlap,
    pub left: Element,
    pub right: Element,
    pub verdict: Verdict,
}

impl CriticalPair {
    pub fn is_joinable(&self) -> bool {
        matches!(self.verdict, Verdict::Joinable(_))
    }
}

fn overlaps_of(rules: &[Rule], i: usize, j: usize, out: &mut Vec<Overlap>) {
    let l1 = &rules[i].lhs;
    let l2 = &rules[j].lhs;
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            out.push(Overlap {
                rule1: i,
                rule2: j,
                kind: OverlapKind::SuffixPrefix,
                offset: l1.len() - k,
                word: l1.concat(&l2[k..]),
            });
        }
    }
    // identical left sides are reported once, from the lower index
    let contained = l2.len() < l1.len() || (l2.len() == l1.len() && i < j);
    if i != j && contained {
        for p in 0..=l1.len() - l2.len() {
            if l1[p..p + l2.len()] == l2[..] {
                out.push(Overlap {
                    rule1: i,
                    rule2: j,
                    kind: OverlapKind::Containment,
                    offset: p,
                    word: l1.clone(),
                });
            }
        }
    }
}

/// Every suffix-prefix and containment overlap over all ordered rule pairs,
/// a rule with itself included. Ordered by `(rule1, rule2, kind, offset)`.
pub fn overlaps(s: &RewritingSystem) -> Vec<Overlap> {
    let rules = s.rules();
    (0..rules.len())
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            for j in 0..rules.len() {
                overlaps_of(rules, i, j, &mut found);
            }
            found
        })
        .flatten_iter()
        .collect()
}

fn reducts(s: &RewritingSystem, ov: &Overlap) -> (Element, Element) {
    let left = s.apply(
        &ov.word,
        Occurrence {
            pos: 0,
            pattern: ov.rule1,
        },
    );
    let right = s.apply(
        &ov.word,
        Occurrence {
            pos: ov.offset,
            pattern: ov.rule2,
        },
    );
    (left, right)
}

fn resolve(s: &RewritingSystem, ov: Overlap) -> CriticalPair {
    let (left, right) = reducts(s, &ov);
    let l = s.normalize_element(&left);
    let r = s.normalize_element(&right);
    let verdict = if l == r {
        Verdict::Joinable(l)
    } else {
        Verdict::Unresolved
    };
    CriticalPair {
        source: ov,
        left,
        right,
        verdict,
    }
}

/// Critical pairs with joinability verdicts. Needs a terminating system.
pub fn critical_pairs(s: &RewritingSystem) -> Vec<CriticalPair> {
    overlaps(s)
        .into_par_iter()
        .map(|ov| resolve(s, ov))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub locally_confluent: bool,
    pub terminating: bool,
    pub critical_pair_count: usize,
    pub unresolved: Vec<CriticalPair>,
}

impl ConfluenceReport {
    /// Terminating and locally confluent, hence confluent.
    pub fn is_complete(&self) -> bool {
        self.locally_confluent && self.terminating
    }

    pub fn summary(&self, s: &RewritingSystem) -> ConfluenceSummary {
        let a = s.alphabet();
        ConfluenceSummary {
            locally_confluent: self.locally_confluent,
            terminating: self.terminating,
            critical_pair_count: self.critical_pair_count,
            unresolved: self
                .unresolved
                .iter()
                .map(|cp| UnresolvedPair {
                    rule1: cp.source.rule1,
                    rule2: cp.source.rule2,
                    overlap_word: a.render(&cp.source.word),
                    left: a.render_element(&cp.left),
                    right: a.render_element(&cp.right),
                })
                .collect(),
        }
    }
}

/// Serializable form of a [`ConfluenceReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfluenceSummary {
    pub locally_confluent: bool,
    pub terminating: bool,
    pub critical_pair_count: usize,
    pub unresolved: Vec<UnresolvedPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct UnresolvedPair {
    pub rule1: usize,
    pub rule2: usize,
    pub overlap_word: String,
    pub left: String,
    pub right: String,
}

/// Local confluence plus termination under the alphabet's shortlex order.
pub fn check_local_confluence(s: &RewritingSystem) -> ConfluenceReport {
    let pairs = critical_pairs(s);
    let critical_pair_count = pairs.len();
    let unresolved: Vec<_> = pairs.into_iter().filter(|cp| !cp.is_joinable()).collect();
    ConfluenceReport {
        locally_confluent: unresolved.is_empty(),
        terminating: check_termination(s, &s.alphabet().shortlex()),
        critical_pair_count,
        unresolved,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionLimits {
    pub max_rules: usize,
    pub max_word_len: usize,
    pub max_steps: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_rules: 500,
            max_word_len: 64,
            max_steps: 100_000,
        }
    }
}

#[derive(Debug, Clone)]
pub enum CompletionOutcome {
    Completed {
        system: RewritingSystem,
        steps: usize,
    },
    ResourceLimit {
        system: RewritingSystem,
        unresolved: usize,
        steps: usize,
    },
}

impl CompletionOutcome {
    pub fn system(&self) -> &RewritingSystem {
        match self {
            CompletionOutcome::Completed { system, .. }
            | CompletionOutcome::ResourceLimit { system, .. } => system,
        }
    }

    pub fn is_completed(&self) -> bool {
        matches!(self, CompletionOutcome::Completed { .. })
    }
}

/// Knuth-Bendix completion with FIFO processing of pending equations and
/// inter-reduction after every new rule.
pub fn knuth_bendix(
    p: &Presentation,
    ord: &ShortlexOrder,
    limits: CompletionLimits,
) -> Result<CompletionOutcome> {
    let alphabet = p.alphabet.clone();
    let mut rules: Vec<Rule> = Vec::new();
    let mut system = RewritingSystem::new(alphabet.clone(), Vec::new())?;
    let mut pending: VecDeque<(Element, Element)> = p
        .relations
        .iter()
        .map(|r| (Element::Word(r.lhs.clone()), r.rhs.clone()))
        .collect();
    let mut steps = 0usize;

    let limit = |system: RewritingSystem, steps: usize| {
        let unresolved = check_local_confluence(&system).unresolved.len();
        Ok(CompletionOutcome::ResourceLimit {
            system,
            unresolved,
            steps,
        })
    };

    while let Some((x, y)) = pending.pop_front() {
        if steps == limits.max_steps {
            return limit(system, steps);
        }
        steps += 1;
        let x = system.normalize_element(&x);
        let y = system.normalize_element(&y);
        if x == y {
            continue;
        }
        let (big, small) = match (x, y) {
            (Element::Zero, Element::Word(u)) | (Element::Word(u), Element::Zero) => {
                (u, Element::Zero)
            }
            (Element::Word(u), Element::Word(v)) => {
                if ord.compare(&u, &v) == Ordering::Greater {
                    (u, Element::Word(v))
                } else {
                    (v, Element::Word(u))
                }
            }
            (Element::Zero, Element::Zero) => unreachable!("distinct elements"),
        };
        if big.is_empty() {
            // 1 = 0: every generator is zero
            rules = (0..alphabet.len() as u8)
                .map(|g| Rule::new(Word(vec![g]), Element::Zero))
                .collect();
            system = RewritingSystem::new(alphabet.clone(), rules.clone())?;
            pending.clear();
            continue;
        }
        if big.len() > limits.max_word_len {
            return limit(system, steps);
        }
        let new_rule = Rule::new(big, small);

        let mut kept = Vec::with_capacity(rules.len() + 1);
        for r in rules.drain(..) {
            if r.lhs.contains_factor(&new_rule.lhs) {
                pending.push_back((Element::Word(r.lhs), r.rhs));
            } else {
                kept.push(r);
            }
        }
        kept.push(new_rule);
        rules = kept;
        if rules.len() > limits.max_rules {
            return limit(RewritingSystem::new(alphabet.clone(), rules)?, steps);
        }
        system = RewritingSystem::new(alphabet.clone(), rules.clone())?;
        let mut changed = false;
        for r in rules.iter_mut() {
            let rhs = system.normalize_element(&r.rhs);
            if rhs != r.rhs {
                r.rhs = rhs;
                changed = true;
            }
        }
        if changed {
            system = RewritingSystem::new(alphabet.clone(), rules.clone())?;
        }

        let newest = rules.len() - 1;
        let mut found = Vec::new();
        for other in 0..rules.len() {
            overlaps_of(&rules, newest, other, &mut found);
            if other != newest {
                overlaps_of(&rules, other, newest, &mut found);
            }
        }
        for ov in found {
            pending.push_back(reducts(&system, &ov));
        }
    }

    Ok(CompletionOutcome::Completed { system, steps })
}
