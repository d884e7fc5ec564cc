use serde::{Deserialize, Serialize};

use crate::matcher::FactorMatcher;
use crate::system::RewritingSystem;
use crate::word::{Letter, Word};

/// Number of nonzero normal forms of each exact length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSeries {
    pub counts: Vec<u128>,
}

impl GrowthSeries {
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }
}

/// All words of length at most `max_len` avoiding every left-hand side,
/// ordered by length and then lexicographically by precedence.
pub fn enumerate_normal_forms(s: &RewritingSystem, max_len: usize) -> Vec<Word> {
    let m = s.matcher();
    let order = s.alphabet().letters_by_precedence();
    let mut out = vec![Word::empty()];
    // (word, automaton state) for the previous length
    let mut level: Vec<(Vec<Letter>, u32)> = vec![(Vec::new(), FactorMatcher::ROOT)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, state) in &level {
            for &l in &order {
                let t = m.step(*state, l);
                if m.is_accepting(t) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push((v, t));
            }
        }
        out.extend(next.iter().map(|(w, _)| Word(w.clone())));
        level = next;
        if level.is_empty() {
            break;
        }
    }
    out
}

/// Counts normal forms by length with a dynamic program over the states of
/// the factor automaton.
pub fn growth_series(s: &RewritingSystem, max_len: usize) -> GrowthSeries {
    let m = s.matcher();
    let letters = s.alphabet().len() as Letter;
    let mut dist = vec![0u128; m.state_count()];
    dist[FactorMatcher::ROOT as usize] = 1;
    let mut counts = vec![1u128];
    for _ in 0..max_len {
        let mut next = vec![0u128; dist.len()];
        for (state, &c) in dist.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for l in 0..letters {
                let t = m.step(state as u32, l);
                if !m.is_accepting(t) {
                    next[t as usize] += c;
                }
            }
        }
        counts.push(next.iter().sum());
        dist = next;
    }
    GrowthSeries { counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_mn;
    use crate::presentation::Presentation;
    use crate::system::orient;

    #[test]
    fn m1_small_lengths() {
        let s = build_mn(1).unwrap().system();
        let a = s.alphabet();
        let l1: Vec<String> = enumerate_normal_forms(&s, 1)
            .iter()
            .map(|w| a.render(w))
            .collect();
        assert_eq!(l1, ["1", "a", "b", "c", "d"]);
        let l2 = enumerate_normal_forms(&s, 2);
        assert_eq!(l2.len(), 5 + 12);
        assert!(l2.iter().all(|w| s.is_normal(w)));
        assert_eq!(growth_series(&s, 2).counts, vec![1, 4, 12]);
        assert_eq!(enumerate_normal_forms(&s, 0), vec![Word::empty()]);
    }

    #[test]
    fn m2_and_free_monoid() {
        let s = build_mn(2).unwrap().system();
        assert_eq!(growth_series(&s, 1).counts, vec![1, 4]);
        let p = Presentation::parse("generators: a\nrelations:").unwrap();
        let free = orient(&p, &p.alphabet.shortlex()).unwrap();
        assert_eq!(growth_series(&free, 6).counts, vec![1; 7]);
    }

    #[test]
    fn precedence_drives_enumeration_order() {
        let e = crate::catalog::build_dehn_example();
        let s = e.system();
        let words: Vec<String> = enumerate_normal_forms(&s, 1)
            .iter()
            .map(|w| s.alphabet().render(w))
            .collect();
        assert_eq!(words, ["1", "b", "a", "c", "d"]);
    }
}
