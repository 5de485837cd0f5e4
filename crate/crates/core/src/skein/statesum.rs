//! Brute-force Kauffman state sum over all `2^c` smoothings; an independent
//! check on the sweep engine for small diagrams.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::laurent::LaurentPoly;
use crate::link::LinkDiagram;

pub const MAX_STATE_SUM_CROSSINGS: usize = 20;

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

/// Raw bracket with `A = t^weight`; `None` above the crossing limit.
pub fn state_sum_bracket(d: &LinkDiagram, weight: i64) -> Option<LaurentPoly> {
    let c = d.num_crossings();
    if c > MAX_STATE_SUM_CROSSINGS {
        return None;
    }
    let mut index: HashMap<u32, usize> = HashMap::new();
    for x in d.crossings() {
        for &e in &x.edges {
            let n = index.len();
            index.entry(e).or_insert(n);
        }
    }
    let edges = index.len();
    // (number of A smoothings minus B smoothings, loops) -> count
    let mut tally: HashMap<(i64, usize), i64> = HashMap::new();
    let mut parent = vec![0usize; edges];
    for state in 0u64..1 << c {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut balance = 0i64;
        for (i, x) in d.crossings().iter().enumerate() {
            let [a, b, cc, dd] = x.edges.map(|e| index[&e]);
            let pairs = if state >> i & 1 == 0 {
                balance += 1;
                [(a, b), (cc, dd)]
            } else {
                balance -= 1;
                [(a, dd), (b, cc)]
            };
            for (u, v) in pairs {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let loops = (0..edges).filter(|&i| find(&mut parent, i) == i).count() + d.num_free_loops();
        *tally.entry((balance, loops)).or_insert(0) += 1;
    }
    let delta = -LaurentPoly::from_terms([(2, 1), (-2, 1)]);
    let mut total = LaurentPoly::zero();
    for ((bal, loops), n) in tally {
        total += &(delta.pow(loops as u32).shift(bal * weight).scale(&BigInt::from(n)));
    }
    Some(total)
}
