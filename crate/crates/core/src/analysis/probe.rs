//! Bounded congruence probes.
//!
//! The ball of radius `L` holds every nonzero normal form of length at most
//! `L` together with zero. A probe merges a seed pair and closes the
//! partition under left and right multiplication by generators, keeping only
//! products that stay inside the ball. Every merge is a consequence of the
//! seed, so a collapse of `1` with `0` inside the ball is a proof that the
//! congruence generated by the seed is universal.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::normal_forms::enumerate_normal_forms;
use crate::error::{Error, Result};
use crate::system::RewritingSystem;
use crate::word::{Element, Letter, Word};

const OUTSIDE: u32 = u32::MAX;

/// Normal forms of bounded length plus zero, with generator multiplication
/// tables.
#[derive(Debug, Clone)]
pub struct CongruenceBall {
    radius: usize,
    members: Vec<Element>,
    index: HashMap<Element, u32>,
    letters: usize,
    /// `left[i * letters + g]` is the index of `g * members[i]`.
    left: Vec<u32>,
    right: Vec<u32>,
}

impl CongruenceBall {
    pub fn new(s: &RewritingSystem, radius: usize) -> Self {
        let mut members: Vec<Element> = enumerate_normal_forms(s, radius)
            .into_iter()
            .map(Element::Word)
            .collect();
        members.push(Element::Zero);
        let index: HashMap<Element, u32> = members
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let letters = s.alphabet().len();
        let zero = (members.len() - 1) as u32;
        let lookup = |e: Element| index.get(&e).copied().unwrap_or(OUTSIDE);

        let tables: Vec<(Vec<u32>, Vec<u32>)> = members
            .par_iter()
            .map(|m| match m {
                Element::Zero => (vec![zero; letters], vec![zero; letters]),
                Element::Word(w) => (0..letters as Letter)
                    .map(|g| {
                        let l = lookup(s.normalize(&[&[g][..], w].concat()));
                        let r = lookup(s.normalize(&[&w[..], &[g]].concat()));
                        (l, r)
                    })
                    .unzip(),
            })
            .collect();
        let mut left = Vec::with_capacity(members.len() * letters);
        let mut right = Vec::with_capacity(members.len() * letters);
        for (l, r) in tables {
            left.extend(l);
            right.extend(r);
        }
        CongruenceBall {
            radius,
            members,
            index,
            letters,
            left,
            right,
        }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn index_of(&self, e: &Element) -> Option<u32> {
        self.index.get(e).copied()
    }

    fn zero(&self) -> u32 {
        (self.members.len() - 1) as u32
    }

    fn one(&self) -> u32 {
        0
    }

    fn times(&self, side: Side, i: u32, g: usize) -> u32 {
        let slot = i as usize * self.letters + g;
        match side {
            Side::Left => self.left[slot],
            Side::Right => self.right[slot],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Seed,
    /// Multiply both sides of step `parent` by `generator` on `side`.
    Multiply {
        parent: usize,
        side: Side,
        generator: Letter,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub left: Element,
    pub right: Element,
    pub origin: Origin,
}

/// Certificate that `1` and `0` are congruent modulo the seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseTrace {
    pub seed: (Element, Element),
    /// Derived pairs, each obtained from an earlier one (or the seed).
    pub steps: Vec<TraceStep>,
    /// Step indices forming an equivalence chain from `1` to `0`.
    pub chain: Vec<usize>,
}

impl CollapseTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Recomputes every step with `s.product` and walks the chain.
    pub fn replay(&self, s: &RewritingSystem) -> bool {
        for (i, step) in self.steps.iter().enumerate() {
            let expected = match step.origin {
                Origin::Seed => self.seed.clone(),
                Origin::Multiply {
                    parent,
                    side,
                    generator,
                } => {
                    if parent >= i {
                        return false;
                    }
                    let p = &self.steps[parent];
                    let g = Element::Word(Word(vec![generator]));
                    match side {
                        Side::Left => (s.product(&g, &p.left), s.product(&g, &p.right)),
                        Side::Right => (s.product(&p.left, &g), s.product(&p.right, &g)),
                    }
                }
            };
            if expected != (step.left.clone(), step.right.clone()) {
                return false;
            }
        }
        let mut at = Element::one();
        for &i in &self.chain {
            let Some(step) = self.steps.get(i) else {
                return false;
            };
            at = if step.left == at {
                step.right.clone()
            } else if step.right == at {
                step.left.clone()
            } else {
                return false;
            };
        }
        at.is_zero()
    }

    pub fn view(&self, s: &RewritingSystem) -> TraceView {
        let a = s.alphabet();
        TraceView {
            seed: [
                a.render_element(&self.seed.0),
                a.render_element(&self.seed.1),
            ],
            steps: self
                .steps
                .iter()
                .map(|st| {
                    let (parent, side, generator) = match st.origin {
                        Origin::Seed => (None, None, None),
                        Origin::Multiply {
                            parent,
                            side,
                            generator,
                        } => (
                            Some(parent),
                            Some(side),
                            Some(a.letter(generator).to_string()),
                        ),
                    };
                    TraceStepView {
                        left: a.render_element(&st.left),
                        right: a.render_element(&st.right),
                        parent,
                        side,
                        generator,
                    }
                })
                .collect(),
            chain: self.chain.clone(),
        }
    }
}

/// JSON form of a [`CollapseTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceView {
    pub seed: [String; 2],
    pub steps: Vec<TraceStepView>,
    pub chain: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepView {
    pub left: String,
    pub right: String,
    pub parent: Option<usize>,
    pub side: Option<Side>,
    pub generator: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeResult {
    Collapsed {
        trace: CollapseTrace,
        truncated: usize,
    },
    Undetermined {
        class_count: usize,
        truncated: usize,
    },
}

impl ProbeResult {
    pub fn is_collapsed(&self) -> bool {
        matches!(self, ProbeResult::Collapsed { .. })
    }

    pub fn truncated(&self) -> usize {
        match self {
            ProbeResult::Collapsed { truncated, .. }
            | ProbeResult::Undetermined { truncated, .. } => *truncated,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeLimits {
    /// Maximum number of queued pairs examined by one probe.
    pub max_pairs: usize,
}

impl Default for ProbeLimits {
    fn default() -> Self {
        ProbeLimits {
            max_pairs: 50_000_000,
        }
    }
}

struct Edge {
    u: u32,
    v: u32,
    origin: Origin,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Runs one probe on a prebuilt ball.
pub fn probe_in_ball(
    ball: &CongruenceBall,
    seed: (&Element, &Element),
    limits: ProbeLimits,
) -> Result<ProbeResult> {
    let locate = |e: &Element| {
        ball.index_of(e).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "seed is not a normal form of length at most {}",
                ball.radius()
            ))
        })
    };
    let su = locate(seed.0)?;
    let sv = locate(seed.1)?;
    let (one, zero) = (ball.one(), ball.zero());

    let n = ball.len();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let mut size: Vec<u32> = vec![1; n];
    let mut classes = n;
    let mut edges: Vec<Edge> = Vec::new();
    let mut adjacency: HashMap<u32, Vec<usize>> = HashMap::new();
    let mut truncated = 0usize;
    let mut queue: VecDeque<(u32, u32, Origin)> = VecDeque::from([(su, sv, Origin::Seed)]);
    let mut examined = 0usize;

    let collapsed_edge = loop {
        if find(&mut parent, one) == find(&mut parent, zero) {
            break true;
        }
        let Some((u, v, origin)) = queue.pop_front() else {
            break false;
        };
        if examined == limits.max_pairs {
            break false;
        }
        examined += 1;
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            continue;
        }
        let (big, small) = if size[ru as usize] >= size[rv as usize] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        parent[small as usize] = big;
        size[big as usize] += size[small as usize];
        classes -= 1;

        let id = edges.len();
        edges.push(Edge { u, v, origin });
        adjacency.entry(u).or_default().push(id);
        adjacency.entry(v).or_default().push(id);

        for side in [Side::Left, Side::Right] {
            for g in 0..ball.letters {
                let (pu, pv) = (ball.times(side, u, g), ball.times(side, v, g));
                if pu == OUTSIDE || pv == OUTSIDE {
                    truncated += 1;
                } else if pu != pv {
                    queue.push_back((
                        pu,
                        pv,
                        Origin::Multiply {
                            parent: id,
                            side,
                            generator: g as Letter,
                        },
                    ));
                }
            }
        }
    };

    if !collapsed_edge {
        return Ok(ProbeResult::Undetermined {
            class_count: classes,
            truncated,
        });
    }
    let trace = extract_trace(ball, &edges, &adjacency, (seed.0.clone(), seed.1.clone()));
    Ok(ProbeResult::Collapsed { trace, truncated })
}

fn extract_trace(
    ball: &CongruenceBall,
    edges: &[Edge],
    adjacency: &HashMap<u32, Vec<usize>>,
    seed: (Element, Element),
) -> CollapseTrace {
    // accepted edges form a forest, so the path from 1 to 0 is unique
    let (one, zero) = (ball.one(), ball.zero());
    let mut came_from: HashMap<u32, (u32, usize)> = HashMap::new();
    let mut queue = VecDeque::from([one]);
    came_from.insert(one, (one, usize::MAX));
    while let Some(x) = queue.pop_front() {
        if x == zero {
            break;
        }
        for &e in adjacency.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            let y = if edges[e].u == x {
                edges[e].v
            } else {
                edges[e].u
            };
            if let std::collections::hash_map::Entry::Vacant(slot) = came_from.entry(y) {
                slot.insert((x, e));
                queue.push_back(y);
            }
        }
    }
    let mut path_edges = Vec::new();
    let mut at = zero;
    while at != one {
        let (prev, e) = came_from[&at];
        path_edges.push(e);
        at = prev;
    }
    path_edges.reverse();

    let mut needed = vec![false; edges.len()];
    let mut stack = path_edges.clone();
    while let Some(e) = stack.pop() {
        if needed[e] {
            continue;
        }
        needed[e] = true;
        if let Origin::Multiply { parent, .. } = edges[e].origin {
            stack.push(parent);
        }
    }
    let mut renumber = vec![usize::MAX; edges.len()];
    let mut steps = Vec::new();
    for (e, edge) in edges.iter().enumerate() {
        if !needed[e] {
            continue;
        }
        renumber[e] = steps.len();
        let origin = match edge.origin {
            Origin::Seed => Origin::Seed,
            Origin::Multiply {
                parent,
                side,
                generator,
            } => Origin::Multiply {
                parent: renumber[parent],
                side,
                generator,
            },
        };
        steps.push(TraceStep {
            left: ball.members[edge.u as usize].clone(),
            right: ball.members[edge.v as usize].clone(),
            origin,
        });
    }
    CollapseTrace {
        seed,
        steps,
        chain: path_edges.into_iter().map(|e| renumber[e]).collect(),
    }
}

/// Probes the congruence generated by `seed` on the ball of radius `radius`.
pub fn probe_congruence(
    s: &RewritingSystem,
    seed: (&Element, &Element),
    radius: usize,
    limits: ProbeLimits,
) -> Result<ProbeResult> {
    let ball = CongruenceBall::new(s, radius);
    probe_in_ball(&ball, seed, limits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbeStatus {
    Collapsed,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeRecord {
    pub seed_u: String,
    pub seed_v: String,
    pub status: ProbeStatus,
    pub trace_len: usize,
    pub truncated: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSummary {
    pub radius: usize,
    pub max_seed_len: usize,
    pub pairs: usize,
    pub collapsed: usize,
    pub undetermined: usize,
    pub max_trace_len: usize,
    pub records: Vec<ProbeRecord>,
}

impl ProbeSummary {
    pub fn all_collapsed(&self) -> bool {
        self.undetermined == 0
    }
}

/// Distinct unordered seed pairs over normal forms of length at most
/// `max_seed_len` plus zero, smallest `|u| + |v|` first.
pub fn seed_pairs(s: &RewritingSystem, max_seed_len: usize) -> Vec<(Element, Element)> {
    let mut elems: Vec<Element> = enumerate_normal_forms(s, max_seed_len)
        .into_iter()
        .map(Element::Word)
        .collect();
    elems.push(Element::Zero);
    let mut pairs = Vec::new();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            pairs.push((elems[i].clone(), elems[j].clone()));
        }
    }
    pairs.sort_by_key(|(u, v)| u.len() + v.len());
    pairs
}

/// Probes every seed pair on one shared ball, spread over `jobs` threads.
pub fn probe_all_pairs(
    s: &RewritingSystem,
    max_seed_len: usize,
    radius: usize,
    limits: ProbeLimits,
    jobs: usize,
) -> Result<ProbeSummary> {
    if max_seed_len > radius {
        return Err(Error::InvalidArgument(
            "seed length must not exceed the radius".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let a = s.alphabet();
    pool.install(|| {
        let ball = CongruenceBall::new(s, radius);
        let pairs = seed_pairs(s, max_seed_len);
        let records = pairs
            .par_iter()
            .map(|(u, v)| {
                let result = probe_in_ball(&ball, (u, v), limits)?;
                let (status, trace_len) = match &result {
                    ProbeResult::Collapsed { trace, .. } => (ProbeStatus::Collapsed, trace.len()),
                    ProbeResult::Undetermined { .. } => (ProbeStatus::Undetermined, 0),
                };
                Ok(ProbeRecord {
                    seed_u: a.render_element(u),
                    seed_v: a.render_element(v),
                    status,
                    trace_len,
                    truncated: result.truncated(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let collapsed = records
            .iter()
            .filter(|r| r.status == ProbeStatus::Collapsed)
            .count();
        Ok(ProbeSummary {
            radius,
            max_seed_len,
            pairs: records.len(),
            collapsed,
            undetermined: records.len() - collapsed,
            max_trace_len: records.iter().map(|r| r.trace_len).max().unwrap_or(0),
            records,
        })
    })
}
