//! Kauffman bracket evaluation and the invariants built from it: the Jones
//! polynomial `J`, colored Jones polynomials through cabling, the sublink
//! projection `π`, the involution `δ` and the Ohtsuki polynomial `φ`.

mod ring;
mod statesum;
mod sweep;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::laurent::{binomial, quantum_int, LaurentPoly};
use crate::link::{DiagramKey, LinkDiagram};

pub use ring::{Coeffs, CyclicBig, CyclicI128, LaurentCoeffs};
pub use statesum::{state_sum_bracket, MAX_STATE_SUM_CROSSINGS};
pub use sweep::{sweep_bracket, sweep_state_count, SweepPlan, MAX_WIDTH};

/// The bracket variable is `A = t^SMOOTHING_EXPONENT`. Fixed by the
/// calibration tests against the Hopf, trefoil and Whitehead anchors.
pub const SMOOTHING_EXPONENT: i64 = -1;

/// Limits on diagrams handed to the sweep engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_crossings: usize,
    pub max_width: usize,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_crossings: usize::MAX, max_width: MAX_WIDTH };

    pub fn check(&self, d: &LinkDiagram, plan: &SweepPlan) -> Result<(), Error> {
        if d.num_crossings() > self.max_crossings {
            return Err(Error::Budget(format!(
                "{} has {} crossings, limit {}",
                d.name(),
                d.num_crossings(),
                self.max_crossings
            )));
        }
        if plan.max_width > self.max_width {
            return Err(Error::Budget(format!(
                "{} needs sweep width {}, limit {}",
                d.name(),
                plan.max_width,
                self.max_width
            )));
        }
        Ok(())
    }

    /// Applies the crossing limit to a surgery diagram and returns the budget
    /// for the cables evaluated from it, which limits sweep width only.
    pub fn admit(&self, d: &LinkDiagram) -> Result<Budget, Error> {
        if d.num_crossings() > self.max_crossings {
            return Err(Error::Budget(format!(
                "{} has {} crossings, limit {}",
                d.name(),
                d.num_crossings(),
                self.max_crossings
            )));
        }
        Ok(Budget { max_crossings: usize::MAX, max_width: self.max_width })
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

/// Shared memo tables; safe for concurrent use.
#[derive(Default)]
pub struct SkeinCache {
    plans: DashMap<DiagramKey, Arc<SweepPlan>>,
    jones: DashMap<DiagramKey, LaurentPoly>,
    folded: DashMap<(DiagramKey, u64), Arc<Vec<BigInt>>>,
    cables: DashMap<(DiagramKey, Vec<usize>), Arc<LinkDiagram>>,
}

impl SkeinCache {
    pub fn clear(&self) {
        self.plans.clear();
        self.jones.clear();
        self.folded.clear();
        self.cables.clear();
    }

    pub fn plan(&self, d: &LinkDiagram) -> Arc<SweepPlan> {
        let key = d.key();
        if let Some(p) = self.plans.get(&key) {
            return p.clone();
        }
        let p = Arc::new(SweepPlan::new(d));
        self.plans.insert(key, p.clone());
        p
    }

    pub fn cable(&self, d: &LinkDiagram, counts: &[usize]) -> Arc<LinkDiagram> {
        let key = (d.key(), counts.to_vec());
        if let Some(c) = self.cables.get(&key) {
            return c.clone();
        }
        let c = Arc::new(d.cable(counts).expect("cable counts match components"));
        self.cables.insert(key, c.clone());
        c
    }
}

pub fn cache() -> &'static SkeinCache {
    static CACHE: OnceLock<SkeinCache> = OnceLock::new();
    CACHE.get_or_init(SkeinCache::default)
}

/// Unnormalized Kauffman bracket: loop value `-(t^2 + t^-2)`, empty diagram 1.
pub fn raw_bracket(d: &LinkDiagram) -> LaurentPoly {
    let plan = cache().plan(d);
    sweep_bracket(&LaurentCoeffs, d, &plan, SMOOTHING_EXPONENT)
}

/// `(sign, exponent)` with `J = sign * t^exponent * raw_bracket`.
///
/// The factor is `(-1)^l (-A^3)^{-w}` where `w` counts only crossings of a
/// component with itself; crossings between distinct components stay in the
/// bracket, which is how the `s^{3 lambda}` term relating `J` to the
/// classical Jones polynomial arises.
pub fn writhe_factor(d: &LinkDiagram) -> (i64, i64) {
    let w = d.total_self_writhe();
    let sign = if (d.num_components() as i64 + w) % 2 == 0 { 1 } else { -1 };
    (sign, -3 * SMOOTHING_EXPONENT * w)
}

fn normalize(d: &LinkDiagram, raw: &LaurentPoly) -> LaurentPoly {
    let (sign, e) = writhe_factor(d);
    let j = raw.shift(e);
    if sign < 0 {
        -j
    } else {
        j
    }
}

/// Jones polynomial `J` of the underlying (zero-framed) link; `J` of the unknot is `[2]`.
#[allow(non_snake_case)]
pub fn jones_J(d: &LinkDiagram) -> LaurentPoly {
    let key = d.key();
    if let Some(j) = cache().jones.get(&key) {
        return j.clone();
    }
    let j = normalize(d, &raw_bracket(d));
    cache().jones.insert(key, j.clone());
    j
}

/// `J` reduced modulo `t^p - 1`, as `p` coefficients of `1, t, ..., t^{p-1}`.
pub fn jones_folded(d: &LinkDiagram, p: u64, budget: &Budget) -> Result<Arc<Vec<BigInt>>, Error> {
    let plan = cache().plan(d);
    budget.check(d, &plan)?;
    let key = (d.key(), p);
    if let Some(v) = cache().folded.get(&key) {
        return Ok(v.clone());
    }
    let small = CyclicI128::new(p);
    let raw = sweep_bracket(&small, d, &plan, SMOOTHING_EXPONENT);
    let raw: Vec<BigInt> = if small.overflowed() {
        sweep_bracket(&CyclicBig::new(p), d, &plan, SMOOTHING_EXPONENT)
    } else {
        raw.iter().map(|&c| BigInt::from(c)).collect()
    };
    let (sign, e) = writhe_factor(d);
    let r = e.rem_euclid(p as i64) as usize;
    let pu = p as usize;
    let mut out = vec![BigInt::zero(); pu];
    for (i, c) in raw.into_iter().enumerate() {
        out[(i + r) % pu] = if sign < 0 { -c } else { c };
    }
    let out = Arc::new(out);
    cache().folded.insert(key, out.clone());
    Ok(out)
}

/// Cable counts and coefficients expressing the colored Jones polynomial of
/// color `k` (one color per component) through Jones polynomials of cables.
/// Colors extend to all integers as odd functions.
pub fn cable_terms(k: &[i64]) -> Vec<(Vec<usize>, BigInt)> {
    let mut terms: Vec<(Vec<usize>, BigInt)> = vec![(Vec::new(), BigInt::one())];
    for &ki in k {
        if ki == 0 {
            return Vec::new();
        }
        let (sign, ka) = if ki < 0 { (-1, -ki) } else { (1, ki) };
        let mut single = Vec::new();
        for j in 0..=(ka - 1) / 2 {
            let c = binomial(ka - j - 1, j) * BigInt::from(if j % 2 == 0 { sign } else { -sign });
            if !c.is_zero() {
                single.push(((ka - 2 * j - 1) as usize, c));
            }
        }
        let mut next = Vec::with_capacity(terms.len() * single.len());
        for (cs, a) in &terms {
            for (c, b) in &single {
                let mut v = cs.clone();
                v.push(*c);
                next.push((v, a * b));
            }
        }
        terms = next;
    }
    terms
}

/// Colored Jones polynomial, `k[i]` the color (dimension) of component `i`.
pub fn colored_jones(d: &LinkDiagram, k: &[i64]) -> LaurentPoly {
    assert_eq!(k.len(), d.num_components(), "one color per component");
    cable_terms(k)
        .into_iter()
        .map(|(c, coef)| jones_J(&cache().cable(d, &c)).scale(&coef))
        .sum()
}

/// `S|L`: the sublink on `keep`, with each dropped component replaced by a
/// distant unknot.
pub fn sublink_with_unknots(d: &LinkDiagram, keep: &[bool]) -> LinkDiagram {
    let dropped = keep.iter().filter(|&&k| !k).count();
    d.sublink(keep).distant_union(&LinkDiagram::unlink(dropped))
}

/// Formal integer combination of links.
#[derive(Clone, Debug, Default)]
pub struct LinkCombo {
    terms: BTreeMap<DiagramKey, (LinkDiagram, BigInt)>,
}

impl LinkCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(d: &LinkDiagram) -> Self {
        let mut c = Self::new();
        c.add(d, BigInt::one());
        c
    }

    pub fn add(&mut self, d: &LinkDiagram, coef: BigInt) {
        let key = d.key();
        let remove = {
            let e = self.terms.entry(key.clone()).or_insert_with(|| (d.clone(), BigInt::zero()));
            e.1 += coef;
            e.1.is_zero()
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LinkDiagram, &BigInt)> {
        self.terms.values().map(|(d, c)| (d, c))
    }

    fn map_linear(&self, f: impl Fn(&LinkDiagram) -> LinkCombo) -> LinkCombo {
        let mut out = LinkCombo::new();
        for (d, c) in self.terms() {
            for (e, b) in f(d).terms() {
                out.add(e, c * b);
            }
        }
        out
    }

    pub fn pi(&self) -> LinkCombo {
        self.map_linear(pi_projection)
    }

    pub fn delta(&self) -> LinkCombo {
        self.map_linear(delta_involution)
    }

    pub fn distant_union(&self, other: &LinkCombo) -> LinkCombo {
        let mut out = LinkCombo::new();
        for (d, c) in self.terms() {
            for (e, b) in other.terms() {
                out.add(&d.distant_union(e), c * b);
            }
        }
        out
    }

    /// `J` extended linearly.
    pub fn jones(&self) -> LaurentPoly {
        self.terms().map(|(d, c)| jones_J(d).scale(c)).sum()
    }

    /// `φ` extended linearly.
    pub fn phi(&self) -> LaurentPoly {
        self.terms().map(|(d, c)| ohtsuki_phi(d).scale(c)).sum()
    }
}

fn masks(l: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1usize << l).map(move |m| (0..l).map(|i| m >> i & 1 == 1).collect())
}

/// `π(L) = Σ_S (-1)^{l-s} S|L`.
pub fn pi_projection(d: &LinkDiagram) -> LinkCombo {
    let l = d.num_components();
    let mut out = LinkCombo::new();
    for keep in masks(l) {
        let s = keep.iter().filter(|&&k| k).count();
        let sign = if (l - s) % 2 == 0 { 1 } else { -1 };
        out.add(&sublink_with_unknots(d, &keep), BigInt::from(sign));
    }
    out
}

/// `δ(L) = Σ_S (-1)^s S`.
pub fn delta_involution(d: &LinkDiagram) -> LinkCombo {
    let mut out = LinkCombo::new();
    for keep in masks(d.num_components()) {
        let s = keep.iter().filter(|&&k| k).count();
        out.add(&d.sublink(&keep), BigInt::from(if s % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Ohtsuki polynomial `φ_L = Σ_S [-2]^{l-s} J_S`.
pub fn ohtsuki_phi(d: &LinkDiagram) -> LaurentPoly {
    let l = d.num_components();
    let minus_two = -quantum_int(2);
    d.sublinks().iter().map(|(s, k)| minus_two.pow((l - k) as u32) * jones_J(s)).sum()
}

/// `J_L` rebuilt from the Ohtsuki polynomials of its sublinks.
pub fn jones_from_phi(d: &LinkDiagram) -> LaurentPoly {
    let l = d.num_components();
    let two = quantum_int(2);
    d.sublinks().iter().map(|(s, k)| two.pow((l - k) as u32) * ohtsuki_phi(s)).sum()
}

#[cfg(test)]
mod tests;
