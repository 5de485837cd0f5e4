use std::collections::HashMap;

use super::{Crossing, LinkDiagram, Rank};
use crate::error::Error;

/// Braid generator: strands at positions `index` and `index + 1` (counted
/// left to right, strands running upward) cross once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn pos(index: usize) -> Self {
        BraidLetter { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        BraidLetter { index, positive: false }
    }

    /// Parse a word like `[1, -2, 1]` (1-based, sign = crossing sign).
    pub fn word(gens: &[i32]) -> Vec<BraidLetter> {
        gens.iter()
            .map(|&g| {
                assert!(g != 0);
                BraidLetter { index: g.unsigned_abs() as usize - 1, positive: g > 0 }
            })
            .collect()
    }

    /// One full twist on `n` strands, repeated `|count|` times with the sign of `count`.
    pub fn full_twists(n: usize, count: i64) -> Vec<BraidLetter> {
        let mut w = Vec::new();
        for _ in 0..count.unsigned_abs() {
            for _ in 0..n {
                for j in 0..n.saturating_sub(1) {
                    w.push(BraidLetter { index: j, positive: count > 0 });
                }
            }
        }
        w
    }
}

/// Append braid crossings starting from the labels in `cur`, updating `cur`
/// to the outgoing labels.
pub(super) fn braid_crossings(cur: &mut [u32], word: &[BraidLetter], next: &mut u32) -> Vec<Crossing> {
    let mut xs = Vec::with_capacity(word.len());
    for l in word {
        let j = l.index;
        assert!(j + 1 < cur.len(), "generator out of range");
        let (nw, ne) = (*next, *next + 1);
        *next += 2;
        xs.push(if l.positive {
            Crossing { edges: [cur[j + 1], ne, nw, cur[j]], positive: true }
        } else {
            Crossing { edges: [cur[j], cur[j + 1], ne, nw], positive: false }
        });
        cur[j] = nw;
        cur[j + 1] = ne;
    }
    xs
}

/// Splice a braid into parallel strands of a raw crossing list. Each label in
/// `strands` must currently appear twice; the braid is inserted just before its
/// head.
pub(super) fn splice(xs: &mut Vec<Crossing>, strands: &[u32], word: &[BraidLetter], next: &mut u32) {
    let heads: Vec<(usize, usize)> = strands
        .iter()
        .map(|&e| {
            xs.iter()
                .enumerate()
                .find_map(|(c, x)| (0..4).find(|&s| x.edges[s] == e && x.is_incoming(s)).map(|s| (c, s)))
                .expect("strand label must have a head")
        })
        .collect();
    let mut cur = strands.to_vec();
    let new = braid_crossings(&mut cur, word, next);
    for (&(c, s), &l) in heads.iter().zip(&cur) {
        xs[c].edges[s] = l;
    }
    xs.extend(new);
}

/// Closure of a braid on `strands` strands.
pub fn closed_braid(
    name: &str,
    strands: usize,
    word: &[BraidLetter],
    framings: Option<Vec<i64>>,
) -> Result<LinkDiagram, Error> {
    let starts: Vec<u32> = (1..=strands as u32).collect();
    let mut cur = starts.clone();
    let mut next = strands as u32 + 1;
    let mut xs = braid_crossings(&mut cur, word, &mut next);
    let mut merge: HashMap<u32, u32> = HashMap::new();
    let mut free: Vec<Rank> = Vec::new();
    for k in 0..strands {
        if cur[k] == starts[k] {
            free.push((k as i64 + 1, 0));
        } else {
            merge.insert(cur[k], starts[k]);
        }
    }
    for x in xs.iter_mut() {
        for e in x.edges.iter_mut() {
            if let Some(&s) = merge.get(e) {
                *e = s;
            }
        }
    }
    let probe = super::assemble(xs.clone(), &|l| (l as i64, 0), &free)?;
    let framings = framings.unwrap_or_else(|| vec![0; probe.n_components]);
    LinkDiagram::from_ranked(name.to_string(), xs, &|l| (l as i64, 0), &free, framings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closures() {
        let t = closed_braid("t", 2, &BraidLetter::word(&[1, 1, 1]), None).unwrap();
        assert_eq!((t.num_components(), t.num_crossings(), t.writhe()), (1, 3, 3));
        let h = closed_braid("h", 2, &BraidLetter::word(&[1, 1]), None).unwrap();
        assert_eq!(h.num_components(), 2);
        assert_eq!(h.linking_matrix().entry(0, 1), 1);
        let b = closed_braid("b", 3, &BraidLetter::word(&[1, -2, 1, -2, 1, -2]), None).unwrap();
        assert_eq!(b.num_components(), 3);
        assert_eq!(b.linking_matrix().lambda(), 0);
        let u = closed_braid("u", 3, &BraidLetter::word(&[1]), None).unwrap();
        assert_eq!((u.num_components(), u.num_free_loops()), (2, 1));
    }

    #[test]
    fn full_twist_links_every_pair() {
        let w = BraidLetter::full_twists(3, -1);
        let d = closed_braid("tw", 3, &w, None).unwrap();
        assert_eq!(d.num_components(), 3);
        let a = d.linking_matrix();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(a.entry(i, j), -1);
                }
            }
        }
    }
}
