//! Oriented framed link diagrams in planar-diagram (PD) form.
//!
//! Orientation convention for the PD code: each crossing lists its four edge
//! labels counterclockwise, starting at the incoming under-edge, so the
//! under-strand runs from the first entry to the third. The direction of the
//! over-strand follows from the orientation of its component, which is
//! propagated along the component from its under-passes. A component that never
//! passes under is oriented so that it enters its first listed crossing at the
//! fourth entry; its orientation affects no invariant computed here, since such
//! a component is split from the rest of the link.
//!
//! Components that appear in the PD code are numbered by their smallest edge
//! label; crossingless components come after them.

mod braid;
mod cable;
pub mod catalog;
mod matrix;

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;

pub use braid::{closed_braid, BraidLetter};
pub use matrix::{Homology, LinkingMatrix, SignatureTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub edges: [u32; 4],
    pub positive: bool,
}

impl Crossing {
    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// Whether the strand at `slot` enters the crossing there.
    pub fn is_incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            1 => !self.positive,
            3 => self.positive,
            _ => unreachable!(),
        }
    }

    fn mirrored(&self) -> Crossing {
        let [a, b, c, d] = self.edges;
        if self.positive {
            Crossing { edges: [d, a, b, c], positive: false }
        } else {
            Crossing { edges: [b, c, d, a], positive: true }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MilnorDegree {
    Finite(u32),
    Infinite,
}

/// Structural identity of a diagram, independent of name, framings and metadata.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey {
    crossings: Vec<Crossing>,
    edge_comp: Vec<usize>,
    n_components: usize,
}

#[derive(Clone)]
pub struct LinkDiagram {
    name: String,
    crossings: Vec<Crossing>,
    /// Component of edge `label`, stored at index `label - 1`.
    edge_comp: Vec<usize>,
    /// Crossingless components.
    free_loops: Vec<usize>,
    n_components: usize,
    framings: Vec<i64>,
    milnor_degree: Option<MilnorDegree>,
    max_cabling_index: Option<u32>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.edge_comp == other.edge_comp
            && self.free_loops == other.free_loops
            && self.n_components == other.n_components
            && self.framings == other.framings
    }
}

impl Eq for LinkDiagram {}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinkDiagram({}, {} components, {} crossings, framings {:?})",
            self.name,
            self.n_components,
            self.crossings.len(),
            self.framings
        )
    }
}

type Rank = (i64, i64);

/// Oriented crossings plus component ranks; `assemble` traces components,
/// orders them by rank and relabels edges consecutively along each component.
struct Assembled {
    crossings: Vec<Crossing>,
    edge_comp: Vec<usize>,
    free_loops: Vec<usize>,
    n_components: usize,
}

fn occurrences(crossings: &[Crossing]) -> Result<HashMap<u32, Vec<(usize, usize)>>, Error> {
    let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (ci, x) in crossings.iter().enumerate() {
        for (s, &e) in x.edges.iter().enumerate() {
            occ.entry(e).or_default().push((ci, s));
        }
    }
    for (e, v) in &occ {
        if v.len() != 2 {
            return Err(Error::Parse(format!("edge label {e} appears {} times", v.len())));
        }
    }
    Ok(occ)
}

fn assemble(
    crossings: Vec<Crossing>,
    rank: &dyn Fn(u32) -> Rank,
    free_ranks: &[Rank],
) -> Result<Assembled, Error> {
    let occ = occurrences(&crossings)?;
    // head[e] = (crossing, slot) where edge e enters
    let mut head: HashMap<u32, (usize, usize)> = HashMap::new();
    for (&e, v) in &occ {
        let ins: Vec<_> = v.iter().filter(|&&(c, s)| crossings[c].is_incoming(s)).collect();
        if ins.len() != 1 {
            return Err(Error::Parse(format!("inconsistent orientation along edge {e}")));
        }
        head.insert(e, *ins[0]);
    }
    let next = |e: u32| -> u32 {
        let (c, s) = head[&e];
        crossings[c].edges[(s + 2) % 4]
    };
    let mut labels: Vec<u32> = occ.keys().copied().collect();
    labels.sort_unstable();
    let mut seen: HashMap<u32, bool> = HashMap::new();
    // (rank, cycle of labels) for diagram components; None marks a free loop
    let mut comps: Vec<(Rank, Option<Vec<u32>>)> = Vec::new();
    for &e0 in &labels {
        if seen.contains_key(&e0) {
            continue;
        }
        let mut cyc = vec![e0];
        seen.insert(e0, true);
        let mut e = next(e0);
        while e != e0 {
            if seen.contains_key(&e) {
                return Err(Error::Parse("edge reached twice while tracing a component".into()));
            }
            seen.insert(e, true);
            cyc.push(e);
            e = next(e);
        }
        let r = cyc.iter().map(|&l| (rank(l), l)).min().unwrap();
        let start = cyc.iter().position(|&l| l == r.1).unwrap();
        cyc.rotate_left(start);
        comps.push((r.0, Some(cyc)));
    }
    for &r in free_ranks {
        comps.push((r, None));
    }
    comps.sort_by(|a, b| a.0.cmp(&b.0));
    let mut relabel: HashMap<u32, u32> = HashMap::new();
    let mut edge_comp = Vec::new();
    let mut free_loops = Vec::new();
    for (ci, (_, cyc)) in comps.iter().enumerate() {
        match cyc {
            Some(cyc) => {
                for &l in cyc {
                    edge_comp.push(ci);
                    relabel.insert(l, edge_comp.len() as u32);
                }
            }
            None => free_loops.push(ci),
        }
    }
    let mut crossings: Vec<Crossing> = crossings
        .into_iter()
        .map(|x| Crossing { edges: x.edges.map(|e| relabel[&e]), positive: x.positive })
        .collect();
    // canonical order, so equal diagrams built along different routes share a key
    crossings.sort_unstable();
    Ok(Assembled { crossings, edge_comp, free_loops, n_components: comps.len() })
}

/// Crossing signs from an unsigned PD code.
fn infer_signs(pd: &[[u32; 4]]) -> Result<Vec<Crossing>, Error> {
    let mut xs: Vec<Crossing> = pd.iter().map(|&e| Crossing { edges: e, positive: true }).collect();
    let occ = occurrences(&xs)?;
    let other = |c: usize, s: usize| -> (usize, usize) {
        let e = pd[c][s];
        let v = &occ[&e];
        if v[0] == (c, s) {
            v[1]
        } else {
            v[0]
        }
    };
    let mut under_done = vec![false; pd.len()];
    let mut over_done = vec![false; pd.len()];
    for c in 0..pd.len() {
        if !under_done[c] {
            walk(&mut xs, &other, &mut under_done, &mut over_done, c, 0)?;
        }
    }
    for c in 0..pd.len() {
        if !over_done[c] {
            walk(&mut xs, &other, &mut under_done, &mut over_done, c, 3)?;
        }
    }
    Ok(xs)
}

/// Walk one component, entering crossing `c0` at slot `s0`.
fn walk(
    xs: &mut [Crossing],
    other: &dyn Fn(usize, usize) -> (usize, usize),
    under_done: &mut [bool],
    over_done: &mut [bool],
    c0: usize,
    s0: usize,
) -> Result<(), Error> {
    let (mut c, mut s) = (c0, s0);
    loop {
        match s {
            0 => {
                if under_done[c] {
                    break;
                }
                under_done[c] = true;
            }
            1 | 3 => {
                if over_done[c] {
                    if xs[c].is_incoming(s) {
                        break;
                    }
                    return Err(Error::Parse(format!("inconsistent orientation at crossing {c}")));
                }
                over_done[c] = true;
                xs[c].positive = s == 3;
            }
            _ => {
                return Err(Error::Parse(format!(
                    "under-strand entered through its outgoing slot at crossing {c}"
                )))
            }
        }
        (c, s) = other(c, (s + 2) % 4);
    }
    Ok(())
}

/// Faces of the diagram graph via the dart permutation.
fn face_count(crossings: &[Crossing]) -> usize {
    let occ = occurrences(crossings).expect("validated");
    let n = crossings.len() * 4;
    let mut seen = vec![false; n];
    let mut faces = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            let (c, s) = (d / 4, d % 4);
            let e = crossings[c].edges[s];
            let v = &occ[&e];
            let (c2, s2) = if v[0] == (c, s) { v[1] } else { v[0] };
            d = c2 * 4 + (s2 + 1) % 4;
        }
    }
    faces
}

fn graph_components(crossings: &[Crossing]) -> usize {
    let n = crossings.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    let mut first: HashMap<u32, usize> = HashMap::new();
    for (ci, x) in crossings.iter().enumerate() {
        for &e in &x.edges {
            if let Some(&cj) = first.get(&e) {
                let (a, b) = (find(&mut parent, ci), find(&mut parent, cj));
                parent[a] = b;
            } else {
                first.insert(e, ci);
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

impl LinkDiagram {
    fn from_assembled(name: String, a: Assembled, framings: Vec<i64>) -> Result<Self, Error> {
        if framings.len() != a.n_components {
            return Err(Error::Parse(format!(
                "{} framings for {} components",
                framings.len(),
                a.n_components
            )));
        }
        Ok(LinkDiagram {
            name,
            crossings: a.crossings,
            edge_comp: a.edge_comp,
            free_loops: a.free_loops,
            n_components: a.n_components,
            framings,
            milnor_degree: None,
            max_cabling_index: None,
        })
    }

    /// Build from an unsigned PD code (orientation inferred, see module docs).
    pub fn from_pd(
        name: &str,
        components: usize,
        pd: &[[u32; 4]],
        framings: Vec<i64>,
    ) -> Result<Self, Error> {
        let xs = infer_signs(pd)?;
        if !xs.is_empty() && face_count(&xs) != xs.len() + 2 * graph_components(&xs) {
            return Err(Error::Parse("PD code is not planar".into()));
        }
        let n_pd = {
            let a = assemble(xs.clone(), &|l| (l as i64, 0), &[])?;
            a.n_components
        };
        if components < n_pd {
            return Err(Error::Parse(format!(
                "declared {components} components but the PD code has {n_pd}"
            )));
        }
        let free: Vec<Rank> = (0..components - n_pd).map(|i| (i64::MAX, i as i64)).collect();
        let a = assemble(xs, &|l| (l as i64, 0), &free)?;
        Self::from_assembled(name.to_string(), a, framings)
    }

    /// Build from signed crossings with explicit component ranks.
    fn from_ranked(
        name: String,
        crossings: Vec<Crossing>,
        rank: &dyn Fn(u32) -> Rank,
        free_ranks: &[Rank],
        framings: Vec<i64>,
    ) -> Result<Self, Error> {
        let a = assemble(crossings, rank, free_ranks)?;
        Self::from_assembled(name, a, framings)
    }

    /// Same structure with new edge labels and component order kept.
    fn rebuilt(&self, name: String, crossings: Vec<Crossing>, framings: Vec<i64>) -> Self {
        let comp = self.edge_comp.clone();
        let free: Vec<Rank> = self.free_loops.iter().map(|&c| (c as i64, 0)).collect();
        let mut d = Self::from_ranked(
            name,
            crossings,
            &|l| (comp[l as usize - 1] as i64, 0),
            &free,
            framings,
        )
        .expect("operation preserves validity");
        d.milnor_degree = self.milnor_degree;
        d.max_cabling_index = self.max_cabling_index;
        d
    }

    pub fn unlink(n: usize) -> Self {
        LinkDiagram {
            name: format!("unlink_{n}"),
            crossings: Vec::new(),
            edge_comp: Vec::new(),
            free_loops: (0..n).collect(),
            n_components: n,
            framings: vec![0; n],
            milnor_degree: Some(MilnorDegree::Infinite),
            max_cabling_index: None,
        }
    }

    pub fn empty() -> Self {
        let mut d = Self::unlink(0);
        d.name = "empty".into();
        d
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_components(&self) -> usize {
        self.n_components
    }

    pub fn num_free_loops(&self) -> usize {
        self.free_loops.len()
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn with_framings(mut self, framings: Vec<i64>) -> Self {
        assert_eq!(framings.len(), self.n_components);
        self.framings = framings;
        self
    }

    pub fn milnor_degree(&self) -> Option<MilnorDegree> {
        self.milnor_degree
    }

    pub fn max_cabling_index(&self) -> Option<u32> {
        self.max_cabling_index
    }

    pub fn with_metadata(mut self, d: Option<MilnorDegree>, m: Option<u32>) -> Self {
        self.milnor_degree = d;
        self.max_cabling_index = m;
        self
    }

    pub fn key(&self) -> DiagramKey {
        DiagramKey {
            crossings: self.crossings.clone(),
            edge_comp: self.edge_comp.clone(),
            n_components: self.n_components,
        }
    }

    pub fn edge_component(&self, label: u32) -> usize {
        self.edge_comp[label as usize - 1]
    }

    pub fn num_edges(&self) -> usize {
        self.edge_comp.len()
    }

    /// Components of the under- and over-strand.
    pub fn strand_components(&self, x: &Crossing) -> (usize, usize) {
        (self.edge_component(x.edges[0]), self.edge_component(x.edges[1]))
    }

    /// Sum of signs of crossings of component `i` with itself.
    pub fn self_writhe(&self, i: usize) -> i64 {
        self.crossings
            .iter()
            .filter(|x| self.strand_components(x) == (i, i))
            .map(|x| x.sign())
            .sum()
    }

    pub fn total_self_writhe(&self) -> i64 {
        self.crossings
            .iter()
            .filter(|x| {
                let (u, o) = self.strand_components(x);
                u == o
            })
            .map(|x| x.sign())
            .sum()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign()).sum()
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let l = self.n_components;
        let mut twice = vec![vec![0i64; l]; l];
        for x in &self.crossings {
            let (u, o) = self.strand_components(x);
            if u != o {
                twice[u][o] += x.sign();
                twice[o][u] += x.sign();
            }
        }
        let mut a = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                a[i][j] = if i == j { self.framings[i] } else { twice[i][j] / 2 };
            }
        }
        LinkingMatrix::new(a)
    }

    /// Mirror image: every crossing flipped, framings negated.
    pub fn mirror(&self) -> Self {
        let xs = self.crossings.iter().map(|x| x.mirrored()).collect();
        let fr = self.framings.iter().map(|a| -a).collect();
        self.rebuilt(format!("mirror({})", self.name), xs, fr)
    }

    pub fn reverse_component(&self, i: usize) -> Result<Self, Error> {
        if i >= self.n_components {
            return Err(Error::Domain(format!("component {i} out of range")));
        }
        let xs = self
            .crossings
            .iter()
            .map(|x| {
                let (u, o) = self.strand_components(x);
                let [a, b, c, d] = x.edges;
                match (u == i, o == i) {
                    (true, true) => Crossing { edges: [c, d, a, b], positive: x.positive },
                    (true, false) => Crossing { edges: [c, d, a, b], positive: !x.positive },
                    (false, true) => Crossing { edges: x.edges, positive: !x.positive },
                    (false, false) => *x,
                }
            })
            .collect();
        Ok(self.rebuilt(self.name.clone(), xs, self.framings.clone()))
    }

    /// Disjoint union, components of `other` numbered after those of `self`.
    pub fn distant_union(&self, other: &LinkDiagram) -> Self {
        let off = self.edge_comp.len() as u32;
        let l = self.n_components;
        let mut xs = self.crossings.clone();
        xs.extend(other.crossings.iter().map(|x| Crossing {
            edges: x.edges.map(|e| e + off),
            positive: x.positive,
        }));
        let mut comp = self.edge_comp.clone();
        comp.extend(other.edge_comp.iter().map(|c| c + l));
        let mut free: Vec<Rank> = self.free_loops.iter().map(|&c| (c as i64, 0)).collect();
        free.extend(other.free_loops.iter().map(|&c| ((c + l) as i64, 0)));
        let mut fr = self.framings.clone();
        fr.extend_from_slice(&other.framings);
        let name = format!("{}+{}", self.name, other.name);
        let mut d = Self::from_ranked(name, xs, &|e| (comp[e as usize - 1] as i64, 0), &free, fr)
            .expect("union of valid diagrams");
        d.milnor_degree = None;
        d
    }

    /// Sub-diagram on the components with `keep[i]`; crossings with a removed
    /// strand are erased.
    pub fn sublink(&self, keep: &[bool]) -> Self {
        assert_eq!(keep.len(), self.n_components);
        let mut uf: Vec<u32> = (0..=self.edge_comp.len() as u32).collect();
        fn find(uf: &mut [u32], x: u32) -> u32 {
            let mut r = x;
            while uf[r as usize] != r {
                r = uf[r as usize];
            }
            uf[x as usize] = r;
            r
        }
        let mut kept = Vec::new();
        for x in &self.crossings {
            let (u, o) = self.strand_components(x);
            match (keep[u], keep[o]) {
                (true, true) => kept.push(*x),
                (true, false) => {
                    let (a, b) = (find(&mut uf, x.edges[0]), find(&mut uf, x.edges[2]));
                    uf[a as usize] = b;
                }
                (false, true) => {
                    let (a, b) = (find(&mut uf, x.edges[1]), find(&mut uf, x.edges[3]));
                    uf[a as usize] = b;
                }
                (false, false) => {}
            }
        }
        let xs: Vec<Crossing> = kept
            .iter()
            .map(|x| Crossing { edges: x.edges.map(|e| find(&mut uf, e)), positive: x.positive })
            .collect();
        let mut new_index = vec![usize::MAX; self.n_components];
        let mut cnt = 0;
        for i in 0..self.n_components {
            if keep[i] {
                new_index[i] = cnt;
                cnt += 1;
            }
        }
        let mut present = vec![false; self.n_components];
        for x in &xs {
            for &e in &x.edges {
                present[self.edge_component(e)] = true;
            }
        }
        let free: Vec<Rank> = (0..self.n_components)
            .filter(|&i| keep[i] && !present[i])
            .map(|i| (new_index[i] as i64, 0))
            .collect();
        let fr: Vec<i64> = (0..self.n_components).filter(|&i| keep[i]).map(|i| self.framings[i]).collect();
        let comp = &self.edge_comp;
        let name = format!("{}|{}", self.name, keep.iter().map(|&k| if k { '1' } else { '0' }).collect::<String>());
        Self::from_ranked(name, xs, &|e| (new_index[comp[e as usize - 1]] as i64, 0), &free, fr)
            .expect("sublink of a valid diagram")
    }

    /// All `2^l` sublinks with their sizes; bit `i` of the index selects component `i`.
    pub fn sublinks(&self) -> Vec<(LinkDiagram, usize)> {
        let l = self.n_components;
        (0..1usize << l)
            .map(|mask| {
                let keep: Vec<bool> = (0..l).map(|i| mask >> i & 1 == 1).collect();
                (self.sublink(&keep), mask.count_ones() as usize)
            })
            .collect()
    }

    /// Insert a curl on component `i`; `positive` selects the sign of the new crossing.
    pub fn add_kink(&self, i: usize, positive: bool) -> Self {
        let next = self.edge_comp.len() as u32 + 1;
        let (y, l) = (next, next + 1);
        let mut xs = self.crossings.clone();
        let x = match self.edge_comp.iter().position(|&c| c == i) {
            Some(idx) => {
                let e = idx as u32 + 1;
                'outer: for c in xs.iter_mut() {
                    for s in 0..4 {
                        if c.edges[s] == e && c.is_incoming(s) {
                            c.edges[s] = y;
                            break 'outer;
                        }
                    }
                }
                e
            }
            None => {
                assert!(self.free_loops.contains(&i), "component {i} out of range");
                y
            }
        };
        xs.push(if positive {
            Crossing { edges: [x, y, l, l], positive: true }
        } else {
            Crossing { edges: [x, l, l, y], positive: false }
        });
        let mut comp = self.edge_comp.clone();
        comp.push(i);
        comp.push(i);
        let free: Vec<Rank> =
            self.free_loops.iter().filter(|&&c| c != i).map(|&c| (c as i64, 0)).collect();
        let mut d = Self::from_ranked(
            self.name.clone(),
            xs,
            &|e| (comp[e as usize - 1] as i64, 0),
            &free,
            self.framings.clone(),
        )
        .expect("kink keeps validity");
        d.milnor_degree = self.milnor_degree;
        d.max_cabling_index = self.max_cabling_index;
        d
    }

    pub fn to_json(&self) -> Value {
        // diagram components first (by smallest label), then crossingless ones
        let mut order: Vec<usize> = Vec::new();
        for &c in &self.edge_comp {
            if !order.contains(&c) {
                order.push(c);
            }
        }
        order.extend(self.free_loops.iter().copied());
        let pd: Vec<Value> = self.crossings.iter().map(|x| json!(x.edges)).collect();
        let fr: Vec<i64> = order.iter().map(|&c| self.framings[c]).collect();
        let md = match self.milnor_degree {
            Some(MilnorDegree::Finite(d)) => json!(d),
            Some(MilnorDegree::Infinite) => json!("inf"),
            None => Value::Null,
        };
        json!({
            "name": self.name,
            "components": self.n_components,
            "pd": pd,
            "framings": fr,
            "milnor_degree": md,
            "max_cabling_index": self.max_cabling_index,
        })
    }

    /// The link file text: sorted keys, one crossing per line.
    pub fn to_file_text(&self) -> String {
        let v = self.to_json();
        let obj = v.as_object().expect("object");
        let mut keys: Vec<&String> = obj.keys().collect();
        keys.sort();
        let mut out = String::from("{\n");
        for (i, k) in keys.iter().enumerate() {
            let val = &obj[k.as_str()];
            let text = match val {
                Value::Array(rows) if *k == "pd" && !rows.is_empty() => {
                    let rows: Vec<String> = rows.iter().map(|r| format!("    {}", inline(r))).collect();
                    format!("[\n{}\n  ]", rows.join(",\n"))
                }
                _ => inline(val),
            };
            let comma = if i + 1 < keys.len() { "," } else { "" };
            out.push_str(&format!("  {}: {}{}\n", Value::String(k.to_string()), text, comma));
        }
        out.push_str("}\n");
        out
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let bad = |m: &str| Error::Parse(m.to_string());
        let name = v["name"].as_str().ok_or_else(|| bad("missing name"))?;
        let components = v["components"].as_u64().ok_or_else(|| bad("missing components"))? as usize;
        let pd_arr = v["pd"].as_array().ok_or_else(|| bad("missing pd"))?;
        let mut pd = Vec::with_capacity(pd_arr.len());
        for x in pd_arr {
            let a = x.as_array().filter(|a| a.len() == 4).ok_or_else(|| bad("crossing must have 4 edges"))?;
            let mut e = [0u32; 4];
            for (i, y) in a.iter().enumerate() {
                e[i] = y.as_u64().ok_or_else(|| bad("edge labels must be nonnegative integers"))? as u32;
            }
            pd.push(e);
        }
        let framings = v["framings"]
            .as_array()
            .ok_or_else(|| bad("missing framings"))?
            .iter()
            .map(|a| a.as_i64().ok_or_else(|| bad("framing must be an integer")))
            .collect::<Result<Vec<_>, _>>()?;
        let md = match &v["milnor_degree"] {
            Value::Null => None,
            Value::String(s) if s == "inf" => Some(MilnorDegree::Infinite),
            Value::Number(n) => Some(MilnorDegree::Finite(
                n.as_u64().filter(|&d| d >= 1).ok_or_else(|| bad("bad milnor_degree"))? as u32,
            )),
            _ => return Err(bad("bad milnor_degree")),
        };
        let mc = match &v["max_cabling_index"] {
            Value::Null => None,
            Value::Number(n) => Some(n.as_u64().ok_or_else(|| bad("bad max_cabling_index"))? as u32),
            _ => return Err(bad("bad max_cabling_index")),
        };
        Ok(Self::from_pd(name, components, &pd, framings)?.with_metadata(md, mc))
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}

/// Single-line JSON with a space after each comma.
fn inline(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        _ => v.to_string(),
    }
}
