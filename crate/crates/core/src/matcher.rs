//! Multi-pattern factor index over rule left-hand sides.
//!
//! An Aho-Corasick automaton with a dense transition table. The alphabets
//! here are tiny, so every state stores one transition per letter and the
//! failure links are folded into the table at build time.

use std::collections::VecDeque;

use crate::word::Letter;

/// One occurrence of pattern `pattern` starting at `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub pos: usize,
    pub pattern: usize,
}

#[derive(Debug, Clone)]
pub struct FactorMatcher {
    width: usize,
    /// `delta[state * width + letter]`
    delta: Vec<u32>,
    /// Patterns ending at each state, including those reached through
    /// failure links. Sorted by pattern index.
    outputs: Vec<Vec<u32>>,
    pattern_lens: Vec<usize>,
    max_len: usize,
}

impl FactorMatcher {
    pub const ROOT: u32 = 0;

    /// Builds the automaton. Empty patterns are ignored.
    pub fn new<P: AsRef<[Letter]>>(alphabet_size: usize, patterns: &[P]) -> Self {
        let width = alphabet_size.max(1);
        let mut delta: Vec<u32> = vec![u32::MAX; width];
        let mut outputs: Vec<Vec<u32>> = vec![Vec::new()];
        let pattern_lens: Vec<usize> = patterns.iter().map(|p| p.as_ref().len()).collect();

        for (idx, pat) in patterns.iter().enumerate() {
            let pat = pat.as_ref();
            if pat.is_empty() {
                continue;
            }
            let mut state = 0usize;
            for &l in pat {
                let slot = state * width + l as usize;
                if delta[slot] == u32::MAX {
                    let next = outputs.len();
                    delta[slot] = next as u32;
                    delta.extend(std::iter::repeat_n(u32::MAX, width));
                    outputs.push(Vec::new());
                }
                state = delta[slot] as usize;
            }
            outputs[state].push(idx as u32);
        }

        let states = outputs.len();
        let mut fail = vec![0u32; states];
        let mut queue = VecDeque::new();
        for slot in delta.iter_mut().take(width) {
            let t = *slot;
            if t == u32::MAX {
                *slot = 0;
            } else {
                fail[t as usize] = 0;
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s] as usize;
            if f != s {
                let inherited = outputs[f].clone();
                let out = &mut outputs[s];
                out.extend(inherited);
                out.sort_unstable();
                out.dedup();
            }
            for l in 0..width {
                let slot = s * width + l;
                let t = delta[slot];
                let via_fail = delta[f * width + l];
                if t == u32::MAX {
                    delta[slot] = via_fail;
                } else {
                    fail[t as usize] = via_fail;
                    queue.push_back(t as usize);
                }
            }
        }

        FactorMatcher {
            width,
            delta,
            outputs,
            max_len: pattern_lens.iter().copied().max().unwrap_or(0),
            pattern_lens,
        }
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn pattern_len(&self, pattern: usize) -> usize {
        self.pattern_lens[pattern]
    }

    #[inline]
    pub fn step(&self, state: u32, letter: Letter) -> u32 {
        self.delta[state as usize * self.width + letter as usize]
    }

    /// Whether some pattern ends at `state`.
    #[inline]
    pub fn is_accepting(&self, state: u32) -> bool {
        !self.outputs[state as usize].is_empty()
    }

    pub fn outputs(&self, state: u32) -> &[u32] {
        &self.outputs[state as usize]
    }

    /// All occurrences, ordered by position then pattern index.
    pub fn find_all(&self, text: &[Letter]) -> Vec<Occurrence> {
        let mut found = Vec::new();
        let mut state = Self::ROOT;
        for (end, &l) in text.iter().enumerate() {
            state = self.step(state, l);
            for &p in self.outputs(state) {
                let len = self.pattern_lens[p as usize];
                found.push(Occurrence {
                    pos: end + 1 - len,
                    pattern: p as usize,
                });
            }
        }
        found.sort_unstable();
        found
    }

    pub fn contains_any(&self, text: &[Letter]) -> bool {
        let mut state = Self::ROOT;
        text.iter().any(|&l| {
            state = self.step(state, l);
            self.is_accepting(state)
        })
    }

    /// Leftmost occurrence starting at or after `from`. Ties at the same
    /// position go to the longest pattern, then to the lowest index.
    pub fn leftmost(&self, text: &[Letter], from: usize) -> Option<Occurrence> {
        let mut best: Option<(usize, usize, usize)> = None; // (pos, len, pattern)
        let mut state = Self::ROOT;
        for (end, &l) in text.iter().enumerate().skip(from) {
            if let Some((pos, _, _)) = best {
                if end >= pos + self.max_len {
                    break;
                }
            }
            state = self.step(state, l);
            for &p in self.outputs(state) {
                let len = self.pattern_lens[p as usize];
                let pos = end + 1 - len;
                let better = match best {
                    None => true,
                    Some((bp, bl, bi)) => {
                        pos < bp || (pos == bp && (len > bl || (len == bl && (p as usize) < bi)))
                    }
                };
                if better {
                    best = Some((pos, len, p as usize));
                }
            }
        }
        best.map(|(pos, _, pattern)| Occurrence { pos, pattern })
    }
}
