use std::collections::HashMap;

use super::braid::{splice, BraidLetter};
use super::{Crossing, LinkDiagram, Rank};
use crate::error::Error;

struct Labels {
    parent: Vec<u32>,
}

impl Labels {
    fn fresh(&mut self) -> u32 {
        self.parent.push(self.parent.len() as u32);
        self.parent.len() as u32 - 1
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        self.parent[x as usize] = r;
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        self.parent[a as usize] = b;
    }
}

impl LinkDiagram {
    /// Replace component `i` by `counts[i]` zero-framed parallel copies
    /// (deleted when the count is zero). Copies of component `i` become
    /// consecutive components, numbered left to right relative to the
    /// orientation.
    pub fn cable(&self, counts: &[usize]) -> Result<LinkDiagram, Error> {
        let l = self.n_components;
        if counts.len() != l {
            return Err(Error::Domain(format!("{} cable counts for {l} components", counts.len())));
        }
        let mut offset = vec![0usize; l + 1];
        for i in 0..l {
            offset[i + 1] = offset[i] + counts[i];
        }
        // label 0 unused so that labels stay positive
        let mut lab = Labels { parent: vec![0] };
        let mut copy = vec![Vec::new(); self.edge_comp.len() + 1];
        let mut owner: HashMap<u32, usize> = HashMap::new();
        for e in 1..=self.edge_comp.len() {
            let i = self.edge_comp[e - 1];
            for k in 0..counts[i] {
                let f = lab.fresh();
                copy[e].push(f);
                owner.insert(f, offset[i] + k);
            }
        }
        let mut xs = Vec::new();
        for x in &self.crossings {
            let (uc, oc) = self.strand_components(x);
            let (cu, co) = (counts[uc], counts[oc]);
            let [a, b, c, d] = x.edges.map(|e| e as usize);
            if cu == 0 || co == 0 {
                for k in 0..cu {
                    lab.merge(copy[a][k], copy[c][k]);
                }
                for k in 0..co {
                    lab.merge(copy[d][k], copy[b][k]);
                }
                continue;
            }
            let o = |v: usize| if x.positive { co - 1 - v } else { v };
            // vertical segments V(u, v) for v = 0..=co, horizontal H(v, u) for u = 0..=cu
            let mut vert = vec![vec![0u32; co + 1]; cu];
            for (u, col) in vert.iter_mut().enumerate() {
                col[0] = copy[a][u];
                col[co] = copy[c][u];
                for seg in col.iter_mut().take(co).skip(1) {
                    *seg = lab.fresh();
                }
            }
            let mut horiz = vec![vec![0u32; cu + 1]; co];
            for (v, row) in horiz.iter_mut().enumerate() {
                row[0] = copy[d][o(v)];
                row[cu] = copy[b][o(v)];
                for seg in row.iter_mut().take(cu).skip(1) {
                    *seg = lab.fresh();
                }
            }
            for u in 0..cu {
                for v in 0..co {
                    xs.push(Crossing {
                        edges: [vert[u][v], horiz[v][u + 1], vert[u][v + 1], horiz[v][u]],
                        positive: x.positive,
                    });
                }
            }
        }
        for x in xs.iter_mut() {
            for e in x.edges.iter_mut() {
                *e = lab.find(*e);
            }
        }
        // undo the blackboard linking between copies
        let mut next = lab.parent.len() as u32;
        for i in 0..l {
            let w = self.self_writhe(i);
            if counts[i] < 2 || w == 0 {
                continue;
            }
            let e = self.edge_comp.iter().position(|&c| c == i).unwrap() + 1;
            let strands: Vec<u32> = copy[e].iter().map(|&f| lab.find(f)).collect();
            splice(&mut xs, &strands, &BraidLetter::full_twists(counts[i], -w), &mut next);
        }
        let mut comp_of: HashMap<u32, usize> = HashMap::new();
        for (&f, &c) in &owner {
            comp_of.insert(lab.find(f), c);
        }
        let mut present = vec![false; offset[l]];
        for x in &xs {
            for &e in &x.edges {
                if let Some(&c) = comp_of.get(&e) {
                    present[c] = true;
                }
            }
        }
        for &i in &self.free_loops {
            for k in 0..counts[i] {
                present[offset[i] + k] = false;
            }
        }
        let free: Vec<Rank> = (0..offset[l]).filter(|&c| !present[c]).map(|c| (c as i64, 0)).collect();
        let rank = |e: u32| comp_of.get(&e).map_or((i64::MAX, 0), |&c| (c as i64, 0));
        let name = format!("{}^{:?}", self.name, counts);
        LinkDiagram::from_ranked(name, xs, &rank, &free, vec![0; offset[l]])
    }

    /// Insert a braid into parallel edges (listed left to right relative to
    /// the orientation). Components joined by the braid take the smallest
    /// index among them; framings are reset to zero.
    pub fn splice_braid(&self, strands: &[u32], word: &[BraidLetter]) -> Result<LinkDiagram, Error> {
        let mut xs = self.crossings.clone();
        let mut next = self.edge_comp.len() as u32 + 1;
        splice(&mut xs, strands, word, &mut next);
        let comp = &self.edge_comp;
        let rank = |e: u32| comp.get(e as usize - 1).map_or((i64::MAX, 0), |&c| (c as i64, 0));
        let free: Vec<Rank> = self.free_loops.iter().map(|&c| (c as i64, 0)).collect();
        let probe = super::assemble(xs.clone(), &rank, &free)?;
        LinkDiagram::from_ranked(self.name.clone(), xs, &rank, &free, vec![0; probe.n_components])
    }

    /// Edge labels of the copies produced by `cable` for component `i`'s first
    /// edge, left to right; valid for a diagram returned by `cable`.
    pub fn first_edges_of_components(&self, comps: &[usize]) -> Vec<u32> {
        comps
            .iter()
            .map(|&c| self.edge_comp.iter().position(|&x| x == c).expect("component has edges") as u32 + 1)
            .collect()
    }
}
