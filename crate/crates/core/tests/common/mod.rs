//! Independent oracles. Nothing here uses the matcher, the rewriting engine
//! or the analysis module; they work directly from the unoriented relations.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use cfmonoid::{Element, Letter, Presentation};

/// All words over `k` letters of length at most `max_len`, shortest first,
/// then lexicographic by letter index.
pub fn all_words(k: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for g in 0..k as Letter {
                let mut v: Vec<Letter> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn occurrences(w: &[Letter], pat: &[Letter]) -> Vec<usize> {
    if pat.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - pat.len())
        .filter(|&i| &w[i..i + pat.len()] == pat)
        .collect()
}

fn replace_at(w: &[Letter], at: usize, len: usize, by: &[Letter]) -> Vec<Letter> {
    let mut v = w[..at].to_vec();
    v.extend_from_slice(by);
    v.extend_from_slice(&w[at + len..]);
    v
}

pub type WordPairs = Vec<(Vec<Letter>, Vec<Letter>)>;

/// Splits relations into word pairs and zero sides.
pub fn relation_parts(p: &Presentation) -> (WordPairs, Vec<Vec<Letter>>) {
    let mut pairs = Vec::new();
    let mut zeros = Vec::new();
    for r in &p.relations {
        match &r.rhs {
            Element::Zero => zeros.push(r.lhs.0.clone()),
            Element::Word(w) => pairs.push((r.lhs.0.clone(), w.0.clone())),
        }
    }
    (pairs, zeros)
}

/// Congruence closure of the relations restricted to words of length at
/// most `bound`, plus one zero vertex.
pub struct ClosureOracle {
    k: usize,
    offsets: Vec<usize>,
    parent: Vec<usize>,
    zero: usize,
}

impl ClosureOracle {
    pub fn new(p: &Presentation, bound: usize) -> Self {
        let k = p.alphabet.len();
        let mut offsets = vec![0usize];
        let mut size = 1usize;
        for _ in 0..bound {
            offsets.push(offsets.last().unwrap() + size);
            size *= k;
        }
        let total = offsets[bound] + size;
        let zero = total;
        let mut oracle = ClosureOracle {
            k,
            offsets,
            parent: (0..=total).collect(),
            zero,
        };
        let (pairs, zeros) = relation_parts(p);
        let mut w: Vec<Letter> = Vec::new();
        for len in 0..=bound {
            let count = k.pow(len as u32);
            for code in 0..count {
                w.clear();
                let mut c = code;
                for _ in 0..len {
                    w.push((c % k) as Letter);
                    c /= k;
                }
                w.reverse();
                let here = oracle.index(&w);
                for (l, r) in &pairs {
                    if len - l.len().min(len) + r.len() <= bound {
                        for at in occurrences(&w, l) {
                            let other = oracle.index(&replace_at(&w, at, l.len(), r));
                            oracle.union(here, other);
                        }
                    }
                }
                if zeros.iter().any(|z| !occurrences(&w, z).is_empty()) {
                    oracle.union(here, zero);
                }
            }
        }
        oracle
    }

    pub fn index(&self, w: &[Letter]) -> usize {
        let mut code = 0usize;
        for &g in w {
            code = code * self.k + g as usize;
        }
        self.offsets[w.len()] + code
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn class(&mut self, w: &[Letter]) -> usize {
        let i = self.index(w);
        self.find(i)
    }

    pub fn is_zero(&mut self, w: &[Letter]) -> bool {
        let z = self.zero;
        self.class(w) == self.find(z)
    }
}

/// Counts words of each length avoiding every pattern as a factor, by
/// dynamic programming over the last `m - 1` letters.
pub fn factor_avoiding_counts(k: usize, patterns: &[Vec<Letter>], max_len: usize) -> Vec<u128> {
    let m = patterns.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let mut states: HashMap<Vec<Letter>, u128> = HashMap::from([(Vec::new(), 1)]);
    let mut counts = vec![1u128];
    for _ in 0..max_len {
        let mut next: HashMap<Vec<Letter>, u128> = HashMap::new();
        for (suffix, n) in &states {
            for g in 0..k as Letter {
                let mut ext = suffix.clone();
                ext.push(g);
                if patterns.iter().any(|p| ext.ends_with(p)) {
                    continue;
                }
                let keep = ext.len().saturating_sub(m - 1);
                *next.entry(ext[keep..].to_vec()).or_insert(0) += n;
            }
        }
        counts.push(next.values().sum());
        states = next;
    }
    counts
}

/// Plain breadth-first distance from `u` to `v` in the derivation graph
/// with words of length at most `max_len` and a zero vertex. `None` when
/// `v` is unreachable.
pub fn bfs_area(p: &Presentation, u: &[Letter], v: &[Letter], max_len: usize) -> Option<usize> {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum Node {
        W(Vec<Letter>),
        Zero,
    }
    let (pairs, zeros) = relation_parts(p);
    let mut all_words_with_zero: Option<Vec<Vec<Letter>>> = None;
    let target = Node::W(v.to_vec());
    let mut dist: HashMap<Node, usize> = HashMap::from([(Node::W(u.to_vec()), 0)]);
    let mut queue = VecDeque::from([Node::W(u.to_vec())]);
    while let Some(node) = queue.pop_front() {
        let d = dist[&node];
        if node == target {
            return Some(d);
        }
        let mut next = Vec::new();
        match &node {
            Node::W(w) => {
                for (l, r) in &pairs {
                    for (from, to) in [(l, r), (r, l)] {
                        for at in occurrences(w, from) {
                            let x = replace_at(w, at, from.len(), to);
                            if x.len() <= max_len {
                                next.push(Node::W(x));
                            }
                        }
                    }
                }
                if zeros.iter().any(|z| !occurrences(w, z).is_empty()) {
                    next.push(Node::Zero);
                }
            }
            Node::Zero => {
                let words = all_words_with_zero.get_or_insert_with(|| {
                    all_words(p.alphabet.len(), max_len)
                        .into_iter()
                        .filter(|w| zeros.iter().any(|z| !occurrences(w, z).is_empty()))
                        .collect()
                });
                next.extend(words.iter().cloned().map(Node::W));
            }
        }
        for n in next {
            if !dist.contains_key(&n) {
                dist.insert(n.clone(), d + 1);
                queue.push_back(n);
            }
        }
    }
    None
}

/// Ordinary least squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}
