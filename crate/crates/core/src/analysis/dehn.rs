//! Derivation areas and the empirical Dehn profile.
//!
//! The derivation graph has one vertex per word of bounded length plus a
//! single absorbing zero vertex. Two words are adjacent when one defining
//! relation, used in either direction, turns one into the other; a word
//! containing the left side of a relation `l = 0` is adjacent to the zero
//! vertex. The area of an equal pair is its distance in this graph.
//!
//! `D(n)` is the largest area over pairs `u = v` with `|u| + |v| <= n`,
//! searched with words of length at most `n + slack`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcher::FactorMatcher;
use crate::presentation::Presentation;
use crate::system::RewritingSystem;
use crate::word::{Element, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AreaLimits {
    pub max_len: usize,
    pub max_nodes: usize,
}

impl Default for AreaLimits {
    fn default() -> Self {
        AreaLimits {
            max_len: 16,
            max_nodes: 2_000_000,
        }
    }
}

/// A vertex of the derivation graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Vertex {
    Word(Word),
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AreaResult {
    /// `derivation` has `steps + 1` vertices from `u` to `v`.
    Area {
        steps: usize,
        derivation: Vec<Vertex>,
    },
    NotEqual,
    ResourceLimit {
        explored: usize,
    },
}

impl AreaResult {
    pub fn steps(&self) -> Option<usize> {
        match self {
            AreaResult::Area { steps, .. } => Some(*steps),
            _ => None,
        }
    }
}

/// Undirected derivation graph of a presentation.
#[derive(Debug, Clone)]
pub struct DerivationGraph {
    /// Relations between two words, trivial ones dropped.
    pairs: Vec<(Word, Word)>,
    zero_matcher: FactorMatcher,
    has_zero: bool,
}

impl DerivationGraph {
    pub fn new(p: &Presentation) -> Self {
        let mut pairs = Vec::new();
        let mut zero_sides = Vec::new();
        for r in &p.relations {
            match &r.rhs {
                Element::Zero => zero_sides.push(r.lhs.clone()),
                Element::Word(w) if *w != r.lhs => pairs.push((r.lhs.clone(), w.clone())),
                Element::Word(_) => {}
            }
        }
        let has_zero = !zero_sides.is_empty();
        DerivationGraph {
            pairs,
            zero_matcher: FactorMatcher::new(p.alphabet.len(), &zero_sides),
            has_zero,
        }
    }

    /// Whether `w` is adjacent to the zero vertex.
    pub fn touches_zero(&self, w: &[Letter]) -> bool {
        // an empty zero side would make 1 = 0
        self.has_zero && (self.zero_matcher.contains_any(w) || self.zero_matcher.max_len() == 0)
    }

    /// Word neighbours of `w` with length at most `max_len`.
    pub fn neighbours(&self, w: &[Letter], max_len: usize, out: &mut Vec<Word>) {
        out.clear();
        for (l, r) in &self.pairs {
            rewrite_all(w, l, r, max_len, out);
            rewrite_all(w, r, l, max_len, out);
        }
    }
}

fn rewrite_all(w: &[Letter], from: &[Letter], to: &[Letter], max_len: usize, out: &mut Vec<Word>) {
    if w.len() < from.len() || w.len() - from.len() + to.len() > max_len {
        return;
    }
    for pos in 0..=w.len() - from.len() {
        if w[pos..pos + from.len()] == *from {
            let mut v = Vec::with_capacity(w.len() - from.len() + to.len());
            v.extend_from_slice(&w[..pos]);
            v.extend_from_slice(to);
            v.extend_from_slice(&w[pos + from.len()..]);
            out.push(Word(v));
        }
    }
}

struct Frontier {
    /// word -> (parent, depth)
    seen: HashMap<Word, (Option<Word>, usize)>,
    layer: Vec<Word>,
    depth: usize,
    zero_hit: Option<(Word, usize)>,
}

impl Frontier {
    fn new(graph: &DerivationGraph, start: &Word) -> Self {
        let mut seen = HashMap::new();
        seen.insert(start.clone(), (None, 0));
        let zero_hit = graph.touches_zero(start).then(|| (start.clone(), 0));
        Frontier {
            seen,
            layer: vec![start.clone()],
            depth: 0,
            zero_hit,
        }
    }

    fn exhausted(&self) -> bool {
        self.layer.is_empty()
    }

    /// Lower bound on the distance to the zero vertex minus one.
    fn zero_bound(&self) -> Option<usize> {
        match &self.zero_hit {
            Some((_, d)) => Some(*d),
            None if self.exhausted() => None,
            None => Some(self.depth + 1),
        }
    }

    fn path_to(&self, w: &Word) -> Vec<Word> {
        let mut path = vec![w.clone()];
        let mut cur = w;
        while let Some((Some(prev), _)) = self.seen.get(cur) {
            path.push(prev.clone());
            cur = prev;
        }
        path
    }
}

#[derive(Clone)]
enum Meeting {
    Direct(Word),
    ViaZero,
}

/// Shortest derivation between `u` and `v` by bidirectional breadth-first
/// search. `s` must be a complete system for the same monoid; it decides
/// equality up front.
pub fn dehn_area(
    p: &Presentation,
    s: &RewritingSystem,
    u: &[Letter],
    v: &[Letter],
    limits: AreaLimits,
) -> AreaResult {
    let value = s.normalize(u);
    if value != s.normalize(v) {
        return AreaResult::NotEqual;
    }
    let graph = DerivationGraph::new(p);
    shortest_derivation(
        &graph,
        &Word::from(u),
        &Word::from(v),
        value.is_zero(),
        limits,
    )
}

fn shortest_derivation(
    graph: &DerivationGraph,
    u: &Word,
    v: &Word,
    zero_valued: bool,
    limits: AreaLimits,
) -> AreaResult {
    if u == v {
        return AreaResult::Area {
            steps: 0,
            derivation: vec![Vertex::Word(u.clone())],
        };
    }
    if u.len() > limits.max_len || v.len() > limits.max_len {
        return AreaResult::ResourceLimit { explored: 0 };
    }
    let mut sides = [Frontier::new(graph, u), Frontier::new(graph, v)];
    let mut best: Option<(usize, Meeting)> = None;
    let mut scratch = Vec::new();

    loop {
        if zero_valued {
            if let (Some((_, za)), Some((_, zb))) = (&sides[0].zero_hit, &sides[1].zero_hit) {
                let len = za + zb + 2;
                if best.as_ref().is_none_or(|(b, _)| len < *b) {
                    best = Some((len, Meeting::ViaZero));
                }
            }
        }
        let direct_bound = if sides[0].exhausted() || sides[1].exhausted() {
            None
        } else {
            Some(sides[0].depth + sides[1].depth + 1)
        };
        let zero_bound = if zero_valued {
            match (sides[0].zero_bound(), sides[1].zero_bound()) {
                (Some(a), Some(b)) => Some(a + b + 2),
                _ => None,
            }
        } else {
            None
        };
        let lower = match (direct_bound, zero_bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match (&best, lower) {
            (Some((len, _)), Some(lb)) if *len <= lb => break,
            (Some(_), None) => break,
            (None, None) => {
                return AreaResult::ResourceLimit {
                    explored: sides[0].seen.len() + sides[1].seen.len(),
                }
            }
            _ => {}
        }

        let grow = match (sides[0].exhausted(), sides[1].exhausted()) {
            (false, false) => usize::from(sides[1].layer.len() < sides[0].layer.len()),
            (true, _) => 1,
            (_, true) => 0,
        };
        let (this, other) = if grow == 0 {
            let (a, b) = sides.split_at_mut(1);
            (&mut a[0], &b[0])
        } else {
            let (a, b) = sides.split_at_mut(1);
            (&mut b[0], &a[0])
        };
        let depth = this.depth + 1;
        let mut next = Vec::new();
        for w in std::mem::take(&mut this.layer) {
            graph.neighbours(&w, limits.max_len, &mut scratch);
            for nb in scratch.drain(..) {
                if this.seen.contains_key(&nb) {
                    continue;
                }
                if let Some((_, d)) = other.seen.get(&nb) {
                    let len = depth + d;
                    if best.as_ref().is_none_or(|(b, _)| len < *b) {
                        best = Some((len, Meeting::Direct(nb.clone())));
                    }
                }
                if this.zero_hit.is_none() && graph.touches_zero(&nb) {
                    this.zero_hit = Some((nb.clone(), depth));
                }
                this.seen.insert(nb.clone(), (Some(w.clone()), depth));
                next.push(nb);
            }
        }
        this.layer = next;
        this.depth = depth;
        if sides[0].seen.len() + sides[1].seen.len() > limits.max_nodes {
            return AreaResult::ResourceLimit {
                explored: sides[0].seen.len() + sides[1].seen.len(),
            };
        }
    }

    let (steps, meeting) = best.expect("loop exits with a best path");
    let derivation = match meeting {
        Meeting::Direct(mid) => {
            let mut path: Vec<Vertex> = sides[0]
                .path_to(&mid)
                .into_iter()
                .rev()
                .map(Vertex::Word)
                .collect();
            path.extend(sides[1].path_to(&mid).into_iter().skip(1).map(Vertex::Word));
            path
        }
        Meeting::ViaZero => {
            let (za, _) = sides[0].zero_hit.clone().expect("zero hit");
            let (zb, _) = sides[1].zero_hit.clone().expect("zero hit");
            let mut path: Vec<Vertex> = sides[0]
                .path_to(&za)
                .into_iter()
                .rev()
                .map(Vertex::Word)
                .collect();
            path.push(Vertex::Zero);
            path.extend(sides[1].path_to(&zb).into_iter().map(Vertex::Word));
            path
        }
    };
    debug_assert_eq!(derivation.len(), steps + 1);
    AreaResult::Area { steps, derivation }
}

/// Checks that consecutive vertices of `derivation` are adjacent.
pub fn is_derivation(graph: &DerivationGraph, derivation: &[Vertex], max_len: usize) -> bool {
    let mut scratch = Vec::new();
    derivation.windows(2).all(|pair| match pair {
        [Vertex::Word(x), Vertex::Word(y)] => {
            graph.neighbours(x, max_len, &mut scratch);
            scratch.contains(y)
        }
        [Vertex::Word(x), Vertex::Zero] | [Vertex::Zero, Vertex::Word(x)] => graph.touches_zero(x),
        _ => false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub n: usize,
    pub d: usize,
    /// Equal pairs whose area could not be settled within the limits.
    pub limited_pairs: usize,
    /// A pair attaining `d`, when `d > 0`.
    pub witness: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitedPair {
    pub n: usize,
    pub u: String,
    pub v: String,
    pub upper_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DehnProfile {
    pub slack: usize,
    pub rows: Vec<ProfileRow>,
    pub limited: Vec<LimitedPair>,
    /// Exact area computations performed; the remaining pairs were settled
    /// by the rewriting upper bound.
    pub searches: usize,
}

impl DehnProfile {
    pub fn values(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.d).collect()
    }
}

/// A word with its value and an upper bound on its distance to the value's
/// anchor: the normal form, or the zero vertex for zero-valued words.
struct Sized {
    word: Word,
    cost: usize,
}

struct Candidate {
    total: usize,
    bound: usize,
    u: Word,
    v: Word,
}

/// Walks all words up to `max_len` depth-first, normalizing incrementally.
/// `visit(word, value, cost)` sees every word once.
fn for_each_word<F: FnMut(&[Letter], &Element, usize)>(
    s: &RewritingSystem,
    graph: &DerivationGraph,
    max_len: usize,
    mut visit: F,
) {
    let letters = s.alphabet().len() as Letter;
    // (value, cost) per prefix length
    let mut stack: Vec<(Element, usize)> = vec![(Element::one(), 0)];
    let mut word: Vec<Letter> = Vec::new();
    visit(&word, &Element::one(), 0);
    if max_len == 0 {
        return;
    }
    word.push(0);
    loop {
        let (parent_value, parent_cost) = stack.last().expect("root").clone();
        let g = *word.last().expect("nonempty");
        let (value, mut cost) = match &parent_value {
            Element::Zero => (Element::Zero, parent_cost),
            Element::Word(nf) => {
                let (e, k) = s.normalize_counted(&nf.concat(&[g]));
                (e, parent_cost + k)
            }
        };
        if value.is_zero() && graph.touches_zero(&word) {
            cost = 1;
        }
        visit(&word, &value, cost);
        if word.len() < max_len {
            stack.push((value, cost));
            word.push(0);
            continue;
        }
        // advance to the next word in depth-first order
        loop {
            let last = word.pop().expect("nonempty");
            if last + 1 < letters {
                word.push(last + 1);
                break;
            }
            if word.is_empty() {
                return;
            }
            stack.pop();
        }
    }
}

/// Measures `D(1..=n_max)`. Pairs whose rewriting upper bound cannot beat
/// the current maximum are skipped, so only a small fraction of pairs is
/// searched exactly.
pub fn dehn_profile(
    p: &Presentation,
    s: &RewritingSystem,
    n_max: usize,
    slack: usize,
    max_nodes: usize,
    jobs: usize,
) -> Result<DehnProfile> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let graph = DerivationGraph::new(p);
    let a = s.alphabet();

    // short partners, grouped by value
    let mut short: HashMap<Element, Vec<Sized>> = HashMap::new();
    for_each_word(s, &graph, n_max / 2, |w, value, cost| {
        short.entry(value.clone()).or_default().push(Sized {
            word: Word::from(w),
            cost,
        });
    });

    let mut candidates: Vec<Candidate> = Vec::new();
    // pairs of area exactly 1, first one per total length
    let mut floor: Vec<Option<(Word, Word)>> = vec![None; n_max + 1];
    for_each_word(s, &graph, n_max, |v, value, v_cost| {
        let Some(partners) = short.get(value) else {
            return;
        };
        for u in partners {
            let total = u.word.len() + v.len();
            if u.word.len() > v.len() || total > n_max {
                continue;
            }
            if u.word.len() == v.len() && u.word[..] >= *v {
                continue;
            }
            let bound = u.cost + v_cost;
            if bound <= 1 {
                // distinct words, so the area is exactly 1
                if floor[total].is_none() {
                    floor[total] = Some((u.word.clone(), Word::from(v)));
                }
            } else {
                candidates.push(Candidate {
                    total,
                    bound,
                    u: u.word.clone(),
                    v: Word::from(v),
                });
            }
        }
    });
    candidates.sort_by(|x, y| {
        y.bound
            .cmp(&x.bound)
            .then(x.total.cmp(&y.total))
            .then_with(|| x.u.cmp(&y.u))
            .then_with(|| x.v.cmp(&y.v))
    });

    const CHUNK: usize = 64;
    let mut rows = Vec::with_capacity(n_max);
    let mut limited = Vec::new();
    let mut searches = 0usize;
    let mut floor_witness: Option<(Word, Word)> = None;
    for (n, unit) in floor.into_iter().enumerate().skip(1) {
        floor_witness = floor_witness.or(unit);
        let mut best = usize::from(floor_witness.is_some());
        let mut witness = floor_witness.clone();
        let mut limited_here = 0usize;
        let area_limits = AreaLimits {
            max_len: n + slack,
            max_nodes,
        };
        let eligible: Vec<&Candidate> = candidates.iter().filter(|c| c.total <= n).collect();
        let mut start = 0;
        while start < eligible.len() && eligible[start].bound > best {
            let end = (start + CHUNK).min(eligible.len());
            let chunk: Vec<&Candidate> = eligible[start..end]
                .iter()
                .copied()
                .filter(|c| c.bound > best)
                .collect();
            let results: Vec<AreaResult> = pool.install(|| {
                chunk
                    .par_iter()
                    .map(|c| {
                        let zero = s.normalize(&c.u).is_zero();
                        shortest_derivation(&graph, &c.u, &c.v, zero, area_limits)
                    })
                    .collect()
            });
            searches += chunk.len();
            for (c, r) in chunk.iter().zip(results) {
                match r {
                    AreaResult::Area { steps, .. } => {
                        if steps > best {
                            best = steps;
                            witness = Some((c.u.clone(), c.v.clone()));
                        }
                    }
                    AreaResult::ResourceLimit { .. } => {
                        limited_here += 1;
                        limited.push(LimitedPair {
                            n,
                            u: a.render(&c.u),
                            v: a.render(&c.v),
                            upper_bound: c.bound,
                        });
                    }
                    AreaResult::NotEqual => unreachable!("candidates share a value"),
                }
            }
            start = end;
        }
        rows.push(ProfileRow {
            n,
            d: best,
            limited_pairs: limited_here,
            witness: witness.map(|(u, v)| (a.render(&u), a.render(&v))),
        });
    }
    Ok(DehnProfile {
        slack,
        rows,
        limited,
        searches,
    })
}
