//! Planar sweep evaluation of the Kauffman bracket.
//!
//! Crossings are absorbed one at a time. The state after each step is a map
//! from crossingless matchings of the open boundary edges to coefficients;
//! absorbing a crossing splits every matching into its two smoothings and
//! closes off any loops that appear.

use std::cmp::Reverse;
use std::collections::HashMap;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::ring::Coeffs;
use crate::link::LinkDiagram;
use crate::par;

type Key = SmallVec<[u8; 32]>;

const NONE: u8 = u8::MAX;

/// Largest boundary the engine accepts (matchings are stored as bytes).
pub const MAX_WIDTH: usize = 128;

/// Partner slot under each smoothing: the `A` smoothing joins slots 0-1 and
/// 2-3, the `B` smoothing joins 0-3 and 1-2.
const SMOOTHINGS: [[usize; 4]; 2] = [[1, 0, 3, 2], [3, 2, 1, 0]];

#[derive(Clone, Debug)]
struct Step {
    old_width: usize,
    /// Node ids: old boundary positions first, then the four slots.
    glue: Vec<u8>,
    new_nodes: Vec<u8>,
    new_index: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct SweepPlan {
    pub order: Vec<usize>,
    steps: Vec<Step>,
    pub max_width: usize,
}

struct Boundary {
    labels: Vec<u32>,
    pos: HashMap<u32, usize>,
}

impl Boundary {
    fn new() -> Self {
        Boundary { labels: Vec::new(), pos: HashMap::new() }
    }

    /// Width after absorbing a crossing, and the number of glued edges.
    fn preview(&self, edges: &[u32; 4]) -> (usize, usize) {
        let glued = edges.iter().filter(|e| self.pos.contains_key(e)).count();
        let mut fresh = 0;
        for (s, e) in edges.iter().enumerate() {
            if self.pos.contains_key(e) {
                continue;
            }
            let twice = edges.iter().enumerate().any(|(t, f)| t != s && f == e);
            if !twice {
                fresh += 1;
            }
        }
        (self.labels.len() - glued + fresh, glued)
    }

    fn absorb(&mut self, edges: &[u32; 4]) -> Step {
        let w = self.labels.len();
        let mut glue = vec![NONE; w + 4];
        for s in 0..4 {
            let e = edges[s];
            if let Some(&p) = self.pos.get(&e) {
                glue[p] = (w + s) as u8;
                glue[w + s] = p as u8;
            } else if let Some(t) = (0..4).find(|&t| t != s && edges[t] == e) {
                glue[w + s] = (w + t) as u8;
            }
        }
        let mut new_nodes = Vec::new();
        let mut labels = Vec::new();
        for p in 0..w {
            if glue[p] == NONE {
                new_nodes.push(p as u8);
                labels.push(self.labels[p]);
            }
        }
        for s in 0..4 {
            if glue[w + s] == NONE {
                new_nodes.push((w + s) as u8);
                labels.push(edges[s]);
            }
        }
        let mut new_index = vec![NONE; w + 4];
        for (i, &n) in new_nodes.iter().enumerate() {
            new_index[n as usize] = i as u8;
        }
        self.pos = labels.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        self.labels = labels;
        Step { old_width: w, glue, new_nodes, new_index }
    }
}

/// Greedy order from a given first crossing: always absorb the crossing
/// sharing the most edges with the boundary, preferring narrower results.
fn greedy_order(edges: &[[u32; 4]], first: usize) -> (Vec<usize>, usize, u64) {
    let n = edges.len();
    let mut done = vec![false; n];
    let mut b = Boundary::new();
    let mut order = Vec::with_capacity(n);
    let (mut max_w, mut cost) = (0usize, 0u64);
    let mut next = Some(first);
    // crossings touching each label
    let mut touching: HashMap<u32, Vec<usize>> = HashMap::new();
    for (c, x) in edges.iter().enumerate() {
        for &e in x {
            touching.entry(e).or_default().push(c);
        }
    }
    while let Some(c) = next {
        done[c] = true;
        order.push(c);
        b.absorb(&edges[c]);
        max_w = max_w.max(b.labels.len());
        cost += 1u64 << b.labels.len().min(60);
        let mut best: Option<((usize, Reverse<usize>, Reverse<usize>), usize)> = None;
        for &e in &b.labels {
            for &d in &touching[&e] {
                if done[d] {
                    continue;
                }
                let (w, g) = b.preview(&edges[d]);
                let cand = (g, Reverse(w), Reverse(d));
                if best.as_ref().is_none_or(|(bk, _)| cand > *bk) {
                    best = Some((cand, d));
                }
            }
        }
        next = best.map(|(_, d)| d).or_else(|| (0..n).find(|&d| !done[d]));
    }
    (order, max_w, cost)
}

impl SweepPlan {
    pub fn new(d: &LinkDiagram) -> Self {
        let edges: Vec<[u32; 4]> = d.crossings().iter().map(|x| x.edges).collect();
        let n = edges.len();
        let starts: Vec<usize> = if n <= 64 { (0..n).collect() } else { (0..64).map(|i| i * n / 64).collect() };
        let best = starts
            .iter()
            .map(|&s| greedy_order(&edges, s))
            .min_by_key(|(_, w, c)| (*w, *c))
            .map(|(o, _, _)| o)
            .unwrap_or_default();
        let mut b = Boundary::new();
        let mut max_width = 0;
        let steps = best
            .iter()
            .map(|&c| {
                let s = b.absorb(&edges[c]);
                max_width = max_width.max(b.labels.len());
                s
            })
            .collect();
        SweepPlan { order: best, steps, max_width }
    }
}

/// New matching and number of closed loops for one smoothing of one state.
fn transition(step: &Step, state: &[u8], sm: &[usize; 4], out: &mut Key, seen: &mut Vec<bool>) -> usize {
    let w = step.old_width;
    let n = w + 4;
    seen.clear();
    seen.resize(n, false);
    let arc = |x: usize| -> usize {
        if x < w {
            state[x] as usize
        } else {
            w + sm[x - w]
        }
    };
    out.clear();
    out.resize(step.new_nodes.len(), 0);
    for (i, &start) in step.new_nodes.iter().enumerate() {
        let start = start as usize;
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut cur = start;
        let end = loop {
            let a = arc(cur);
            seen[a] = true;
            let g = step.glue[a];
            if g == NONE {
                break a;
            }
            seen[g as usize] = true;
            cur = g as usize;
        };
        let j = step.new_index[end];
        out[i] = j;
        out[j as usize] = i as u8;
    }
    let mut loops = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut cur = start;
        loop {
            seen[cur] = true;
            let a = arc(cur);
            seen[a] = true;
            let g = step.glue[a] as usize;
            if g == start {
                break;
            }
            cur = g;
        }
    }
    loops
}

fn absorb_chunk<R: Coeffs>(
    ring: &R,
    step: &Step,
    weight: i64,
    states: &[(Key, R::Elem)],
) -> FxHashMap<Key, R::Elem> {
    let mut out: FxHashMap<Key, R::Elem> = FxHashMap::default();
    let mut key = Key::new();
    let mut seen = Vec::new();
    for (k, v) in states {
        for (i, sm) in SMOOTHINGS.iter().enumerate() {
            let loops = transition(step, k, sm, &mut key, &mut seen);
            let e = if i == 0 { weight } else { -weight };
            match out.get_mut(&key) {
                Some(slot) => ring.add_term(slot, v, e, loops),
                None => {
                    let mut slot = ring.zero();
                    ring.add_term(&mut slot, v, e, loops);
                    out.insert(key.clone(), slot);
                }
            }
        }
    }
    out
}

const PARALLEL_THRESHOLD: usize = 1 << 12;

/// Raw bracket with smoothing weights `t^{weight}` (A) and `t^{-weight}` (B).
pub fn sweep_bracket<R: Coeffs>(ring: &R, d: &LinkDiagram, plan: &SweepPlan, weight: i64) -> R::Elem {
    assert!(plan.max_width <= MAX_WIDTH, "sweep width {} exceeds engine limit", plan.max_width);
    let mut states: Vec<(Key, R::Elem)> = vec![(Key::new(), ring.one())];
    for step in &plan.steps {
        let merged = if par::PARALLEL && states.len() >= PARALLEL_THRESHOLD {
            let chunk = states.len().div_ceil(par::threads() * 4).max(1024);
            let parts: Vec<&[(Key, R::Elem)]> = states.chunks(chunk).collect();
            let maps = par::map(&parts, |c| absorb_chunk(ring, step, weight, c));
            let mut it = maps.into_iter();
            let mut acc = it.next().unwrap_or_default();
            for m in it {
                for (k, v) in m {
                    match acc.get_mut(&k) {
                        Some(a) => ring.add_assign(a, &v),
                        None => {
                            acc.insert(k, v);
                        }
                    }
                }
            }
            acc
        } else {
            absorb_chunk(ring, step, weight, &states)
        };
        states = merged.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect();
    }
    let mut total = ring.zero();
    for (_, v) in &states {
        ring.add_term(&mut total, v, 0, d.num_free_loops());
    }
    total
}

/// Peak number of matchings held during a sweep; for budgeting and benches.
pub fn sweep_state_count(plan: &SweepPlan) -> usize {
    let ring = super::ring::CyclicI128::new(3);
    let mut states: Vec<(Key, Box<[i128]>)> = vec![(Key::new(), ring.one())];
    let mut peak = 1;
    for step in &plan.steps {
        let m = absorb_chunk(&ring, step, 1, &states);
        states = m.into_iter().collect();
        peak = peak.max(states.len());
    }
    peak
}
