//! p-brackets of framed links, the p-norm, the quantum SO(3) invariant `τ_p`
//! with its p-order and finite-type projections, and the lower-bound checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::cyclotomic::{p_sum, unknot_bracket_b, CycElem, PrimeLevel, Residue};
use crate::error::Error;
use crate::laurent::{framed_quantum_int, quantum_int, Order};
use crate::link::{DiagramKey, Homology, LinkDiagram, MilnorDegree};
use crate::par;
use crate::skein::{cable_terms, cache, jones_folded, ohtsuki_phi, Budget};

/// All vectors in `{lo..=hi}^len`, first entry varying slowest.
fn grid(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

fn folded_elem(d: &LinkDiagram, level: PrimeLevel, budget: &Budget) -> Result<CycElem, Error> {
    let f = jones_folded(d, level.p(), budget)?;
    Ok(CycElem::from_folded(level, &f))
}

/// Fails before any sweep runs when one of the diagrams is over budget.
fn admit_all<'a>(ds: impl IntoIterator<Item = &'a LinkDiagram>, budget: &Budget) -> Result<(), Error> {
    for s in ds {
        budget.check(s, &cache().plan(s))?;
    }
    Ok(())
}

/// `J` in the cyclotomic ring of every cable `L^c`, `0 <= c_i <= n`.
fn cable_table(
    d: &LinkDiagram,
    level: PrimeLevel,
    budget: &Budget,
) -> Result<HashMap<Vec<usize>, CycElem>, Error> {
    let counts: Vec<Vec<usize>> = grid(d.num_components(), 0, level.n() as i64)
        .into_iter()
        .map(|c| c.into_iter().map(|x| x as usize).collect())
        .collect();
    let cables: Vec<Arc<LinkDiagram>> = counts.iter().map(|c| cache().cable(d, c)).collect();
    admit_all(cables.iter().map(|c| &**c), budget)?;
    let vals = par::map(&cables, |c| folded_elem(c, level, budget));
    counts.into_iter().zip(vals).map(|(c, v)| v.map(|v| (c, v))).collect()
}

/// Colored Jones polynomial `J_{L,k}` in the cyclotomic ring, from the cable table.
fn colored_from_table(table: &HashMap<Vec<usize>, CycElem>, k: &[i64], level: PrimeLevel) -> CycElem {
    let mut acc = CycElem::zero(level);
    for (c, coef) in cable_terms(k) {
        acc = &acc + &table[&c].scale(&coef);
    }
    acc
}

/// The p-bracket as a sum over colorings `1 <= k_i <= m` of framed quantum
/// integers times colored Jones polynomials.
pub fn p_bracket_direct(d: &LinkDiagram, level: PrimeLevel, budget: &Budget) -> Result<CycElem, Error> {
    let budget = &budget.admit(d)?;
    let l = d.num_components();
    let m = level.m() as i64;
    let table = cable_table(d, level, budget)?;
    let framed: Vec<Vec<CycElem>> = d
        .framings()
        .iter()
        .map(|&a| (0..=m).map(|k| CycElem::reduce(&framed_quantum_int(a, k), level)).collect())
        .collect();
    let colorings = grid(l, 1, m);
    let terms = par::map(&colorings, |k| {
        let mut t = colored_from_table(&table, k, level);
        for (i, &ki) in k.iter().enumerate() {
            t = &t * &framed[i][ki as usize];
        }
        t
    });
    Ok(terms.iter().fold(CycElem::zero(level), |acc, t| &acc + t))
}

/// `φ` in the cyclotomic ring for every cable `L^c`, `0 <= c_i <= n`, each
/// evaluated from the genuine sublinks of the cabled diagram.
fn phi_table(
    d: &LinkDiagram,
    level: PrimeLevel,
    budget: &Budget,
) -> Result<Vec<(Vec<usize>, CycElem)>, Error> {
    let counts: Vec<Vec<usize>> = grid(d.num_components(), 0, level.n() as i64)
        .into_iter()
        .map(|c| c.into_iter().map(|x| x as usize).collect())
        .collect();
    let mut unique: BTreeMap<DiagramKey, LinkDiagram> = BTreeMap::new();
    let mut uses: Vec<Vec<(DiagramKey, usize)>> = Vec::with_capacity(counts.len());
    for c in &counts {
        let cabled = cache().cable(d, c);
        let mut u = Vec::new();
        for (s, size) in cabled.sublinks() {
            let key = s.key();
            unique.entry(key.clone()).or_insert(s);
            u.push((key, size));
        }
        uses.push(u);
    }
    admit_all(unique.values(), budget)?;
    let diagrams: Vec<(&DiagramKey, &LinkDiagram)> = unique.iter().collect();
    let vals = par::map(&diagrams, |(_, s)| folded_elem(s, level, budget));
    let mut j: HashMap<&DiagramKey, CycElem> = HashMap::new();
    for ((k, _), v) in diagrams.iter().zip(vals) {
        j.insert(*k, v?);
    }
    let minus_two = CycElem::reduce(&-quantum_int(2), level);
    let powers: Vec<CycElem> = {
        let total: usize = counts.iter().map(|c| c.iter().sum::<usize>()).max().unwrap_or(0);
        let mut v = vec![CycElem::one(level)];
        for i in 0..total {
            let next = &v[i] * &minus_two;
            v.push(next);
        }
        v
    };
    Ok(counts
        .into_iter()
        .zip(uses)
        .map(|(c, u)| {
            let size: usize = c.iter().sum();
            let phi = u
                .iter()
                .fold(CycElem::zero(level), |acc, (key, s)| &acc + &(&powers[size - s] * &j[key]));
            (c, phi)
        })
        .collect())
}

/// The p-bracket as `Σ_c Π_i (a_i|c_i) φ_{L^c}` over cablings `0 <= c_i <= n`.
pub fn p_bracket_via_phi(d: &LinkDiagram, level: PrimeLevel, budget: &Budget) -> Result<CycElem, Error> {
    let budget = &budget.admit(d)?;
    let n = level.n() as i64;
    let sums: Vec<Vec<CycElem>> = d
        .framings()
        .iter()
        .map(|&a| (0..=n).map(|c| p_sum(a, c, level)).collect())
        .collect();
    let mut acc = CycElem::zero(level);
    for (c, phi) in phi_table(d, level, budget)? {
        let mut t = phi;
        for (i, &ci) in c.iter().enumerate() {
            t = &t * &sums[i][ci];
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

/// The p-norm `b_1^{l+} b_{-1}^{l-} (b_0 / h^n)^{l0}`, of p-order exactly `n l`.
pub fn p_norm(d: &LinkDiagram, level: PrimeLevel) -> CycElem {
    let sig = d.linking_matrix().signature_triple();
    let n = level.n();
    let zero_part = unknot_bracket_b(0, level).div_h_power(n).expect("o_p(b_0) = 2n");
    let norm = &(&unknot_bracket_b(1, level).pow(sig.positive as u64)
        * &unknot_bracket_b(-1, level).pow(sig.negative as u64))
        * &zero_part.pow(sig.zero as u64);
    assert_eq!(
        norm.p_order(),
        Order::Finite(n * d.num_components() as u64),
        "p-norm must have p-order n l"
    );
    norm
}

/// `⟨L⟩ / |L|`, with the unit part of the norm inverted exactly.
pub fn tau_from_bracket(d: &LinkDiagram, bracket: &CycElem) -> Result<CycElem, Error> {
    let level = bracket.level();
    let shift = level.n() * d.num_components() as u64;
    let unit = p_norm(d, level).div_h_power(shift)?.invert_unit()?;
    Ok(&bracket.div_h_power(shift)? * &unit)
}

/// Status of one lower bound: required and observed values are rendered as
/// decimal strings (or `inf`), `pass` is `None` when the bound was skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub required: String,
    pub observed: String,
    pub pass: Option<bool>,
    pub notice: Option<String>,
}

impl BoundCheck {
    fn order_at_least(name: &str, observed: Order, required: BigRational) -> BoundCheck {
        let pass = match observed {
            Order::Infinite => true,
            Order::Finite(o) => BigRational::from_integer(BigInt::from(o)) >= required,
        };
        BoundCheck {
            name: name.into(),
            required: required.to_string(),
            observed: observed.to_string(),
            pass: Some(pass),
            notice: None,
        }
    }

    fn skipped(name: &str, notice: &str) -> BoundCheck {
        BoundCheck {
            name: name.into(),
            required: "-".into(),
            observed: "-".into(),
            pass: None,
            notice: Some(notice.into()),
        }
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "required": self.required,
            "observed": self.observed,
            "pass": match self.pass {
                Some(true) => "true",
                Some(false) => "false",
                None => "skipped",
            },
        });
        if let Some(n) = &self.notice {
            v["notice"] = json!(n);
        }
        v
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `(d-1)/(d+1)` and `d/(d+1)`; both are 1 in the limit `d = ∞`.
fn degree_factors(d: MilnorDegree) -> (BigRational, BigRational) {
    match d {
        MilnorDegree::Infinite => (BigRational::one(), BigRational::one()),
        MilnorDegree::Finite(d) => (ratio(d as i64 - 1, d as i64 + 1), ratio(d as i64, d as i64 + 1)),
    }
}

fn is_diagonal(d: &LinkDiagram) -> bool {
    let a = d.linking_matrix();
    (0..a.size()).all(|i| (0..a.size()).all(|j| i == j || a.entry(i, j) == 0))
}

/// Surgery on a zero-framed diagonal link whose triple linking vanishes is
/// H_1-bordant to a connected sum of copies of `S^1 x S^2`.
pub fn bordant_to_sum_of_handles(d: &LinkDiagram) -> bool {
    let triple_free = match d.milnor_degree() {
        _ if d.num_components() <= 2 => true,
        Some(MilnorDegree::Infinite) => true,
        Some(MilnorDegree::Finite(k)) => k >= 3,
        None => false,
    };
    d.framings().iter().all(|&a| a == 0) && is_diagonal(d) && triple_free
}

/// Every applicable lower bound, evaluated on the stored numbers.
pub fn verify_bounds(
    d: &LinkDiagram,
    level: PrimeLevel,
    bracket_order: Order,
    manifold_order: Order,
    homology: &Homology,
) -> Vec<BoundCheck> {
    let l = d.num_components() as i64;
    let n = level.n() as i64;
    let p = level.p() as i64;
    let b = d.framings().iter().filter(|&&a| a.rem_euclid(p) == 0).count() as i64;
    let diagonal = is_diagonal(d);
    let mut out = Vec::new();

    let (degree, assumed) = match d.milnor_degree() {
        Some(k) => (k, false),
        None => (MilnorDegree::Finite(1), true),
    };
    let (lower, upper) = degree_factors(degree);
    let req = (BigRational::from_integer(l.into()) + lower.clone() * BigRational::from_integer(b.into()))
        * BigRational::from_integer(n.into());
    let mut check = BoundCheck::order_at_least("bracket order >= (l + b(d-1)/(d+1)) n", bracket_order, req);
    if assumed {
        check.notice = Some("Milnor degree unknown; evaluated at d = 1".into());
    }
    out.push(check);
    if diagonal && b > 0 {
        out.push(BoundCheck::order_at_least(
            "bracket order >= (l + 1) n for diagonal links with b > 0",
            bracket_order,
            BigRational::from_integer(((l + 1) * n).into()),
        ));
    }

    let bp = homology.b_p as i64;
    out.push(BoundCheck::order_at_least(
        "o_p(M) >= b_p n / 3",
        manifold_order,
        ratio(bp * n, 3),
    ));
    if bp > 0 {
        out.push(BoundCheck::order_at_least(
            "o_p(M) >= n when b_p > 0",
            manifold_order,
            BigRational::from_integer(n.into()),
        ));
    }

    // Ohtsuki polynomial of the underlying link
    let phi = ohtsuki_phi(d);
    let two_l = BigRational::from_integer((2 * l).into());
    let phi_req = if d.milnor_degree().is_some() { two_l.clone() * upper } else { BigRational::from_integer(l.into()) };
    let mut check = BoundCheck::order_at_least("order(phi) >= 2 l d/(d+1)", phi.order(), phi_req.clone());
    if assumed {
        check.notice = Some("Milnor degree unknown; evaluated at d = 1".into());
    }
    out.push(check);
    let mut check = BoundCheck::order_at_least(
        "p-order(phi) >= 2 l d/(d+1)",
        CycElem::reduce(&phi, level).p_order(),
        phi_req,
    );
    if assumed {
        check.notice = Some("Milnor degree unknown; evaluated at d = 1".into());
    }
    out.push(check);
    let name = "order(phi) >= l + m for diagonal links";
    match (diagonal && l > 0, d.max_cabling_index()) {
        (true, Some(m)) => out.push(BoundCheck::order_at_least(
            name,
            phi.order(),
            BigRational::from_integer((l + m as i64).into()),
        )),
        (true, None) => out.push(BoundCheck::skipped(name, "maximum cabling index unknown")),
        (false, _) => {}
    }

    if bordant_to_sum_of_handles(d) {
        out.push(BoundCheck::order_at_least(
            "o_p(M) >= b n / 2 when H_1-bordant to a sum of S^1 x S^2",
            manifold_order,
            ratio(homology.b as i64 * n, 2),
        ));
    }
    out
}

/// Evaluation limits and the deepest projection to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub budget: Budget,
    pub depth: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: Budget::UNLIMITED, depth: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub link: String,
    pub level: PrimeLevel,
    pub tau: CycElem,
    pub order: Order,
    /// `o_p⟨L⟩ - n l`, computed without inverting the norm.
    pub order_from_bracket: Order,
    pub bracket: CycElem,
    pub b: usize,
    pub b_p: usize,
    pub torsion: Option<BigInt>,
    pub projections: Vec<(u64, Residue)>,
    pub bounds: Vec<BoundCheck>,
}

fn order_minus(o: Order, k: u64) -> Order {
    match o {
        Order::Infinite => Order::Infinite,
        Order::Finite(x) => Order::Finite(x - k),
    }
}

fn projections(tau: &CycElem, depth: u64) -> Vec<(u64, Residue)> {
    (0..=depth).map(|d| (d, tau.pi_d(d))).collect()
}

impl InvariantReport {
    /// Report for the manifold obtained by surgery on `d`.
    pub fn compute(d: &LinkDiagram, level: PrimeLevel, opts: &Options) -> Result<InvariantReport, Error> {
        let bracket = p_bracket_direct(d, level, &opts.budget)?;
        Self::from_bracket(d, bracket, opts.depth)
    }

    pub fn from_bracket(d: &LinkDiagram, bracket: CycElem, depth: u64) -> Result<InvariantReport, Error> {
        let level = bracket.level();
        let tau = tau_from_bracket(d, &bracket)?;
        let order = tau.p_order();
        let bracket_order = bracket.p_order();
        let shift = level.n() * d.num_components() as u64;
        let order_from_bracket = order_minus(bracket_order, shift);
        assert_eq!(order, order_from_bracket, "o_p(M) must equal o_p<L> - n l");
        let homology = d.linking_matrix().homology(level.p());
        let bounds = verify_bounds(d, level, bracket_order, order, &homology);
        Ok(InvariantReport {
            link: d.name().to_string(),
            level,
            projections: projections(&tau, depth),
            tau,
            order,
            order_from_bracket,
            bracket,
            b: homology.b,
            b_p: homology.b_p,
            torsion: homology.order,
            bounds,
        })
    }

    /// Report for the connected sum, from the invariants of the summands.
    pub fn connected_sum(&self, other: &InvariantReport) -> Result<InvariantReport, Error> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level.p(), other.level.p()));
        }
        let tau = &self.tau * &other.tau;
        let order = tau.p_order();
        let depth = self.projections.len().max(other.projections.len()).max(1) as u64 - 1;
        let n = self.level.n() as i64;
        let b_p = self.b_p + other.b_p;
        let mut bounds = vec![BoundCheck::order_at_least("o_p(M) >= b_p n / 3", order, ratio(b_p as i64 * n, 3))];
        if b_p > 0 {
            bounds.push(BoundCheck::order_at_least(
                "o_p(M) >= n when b_p > 0",
                order,
                BigRational::from_integer(n.into()),
            ));
        }
        let torsion = match (&self.torsion, &other.torsion) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        Ok(InvariantReport {
            link: format!("{} # {}", self.link, other.link),
            level: self.level,
            projections: projections(&tau, depth),
            tau,
            order,
            order_from_bracket: order,
            bracket: &self.bracket * &other.bracket,
            b: self.b + other.b,
            b_p,
            torsion,
            bounds,
        })
    }

    pub fn all_bounds_hold(&self) -> bool {
        !self.bounds.iter().any(BoundCheck::failed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "link": self.link,
            "p": self.level.p().to_string(),
            "tau": self.tau.to_json(),
            "order": self.order.to_string(),
            "order_from_bracket": self.order_from_bracket.to_string(),
            "bracket": self.bracket.to_json(),
            "b": self.b.to_string(),
            "b_p": self.b_p.to_string(),
            "torsion": self.torsion.as_ref().map_or("inf".to_string(), |t| t.to_string()),
            "projections": self
                .projections
                .iter()
                .map(|(d, r)| json!([d.to_string(), r.value.to_string(), r.modulus.to_string()]))
                .collect::<Vec<_>>(),
            "bounds": self.bounds.iter().map(BoundCheck::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau_{}({}) = {} (order {})", self.level.p(), self.link, self.tau, self.order)
    }
}

/// `τ_p` of surgery on `d`.
pub fn tau_p(d: &LinkDiagram, level: PrimeLevel, budget: &Budget) -> Result<CycElem, Error> {
    tau_from_bracket(d, &p_bracket_direct(d, level, budget)?)
}

/// The finite-type projection `π^depth(τ_p)`.
pub fn tau_p_d(d: &LinkDiagram, level: PrimeLevel, depth: u64, budget: &Budget) -> Result<Residue, Error> {
    Ok(tau_p(d, level, budget)?.pi_d(depth))
}

/// The lens space `L(k, 1)` as surgery on the `k`-framed unknot.
pub fn lens_space(k: i64) -> LinkDiagram {
    LinkDiagram::unlink(1).with_framings(vec![k]).with_name(&format!("lens_{k}_1"))
}

/// Reads `τ = 1 + 6 λ (q - 1) + O(h^2)` with `q = t^4` off the first two
/// reduced coefficients: whether the constant term is 1 mod p, and the `λ` in
/// `(-p/2, p/2)` with `24 λ ≡ x_1 (mod p)` (none at `p = 3`).
pub fn casson_lambda(tau: &CycElem) -> (bool, Option<i64>) {
    let p = tau.level().p() as i64;
    let one = tau.pi_d(0).value == BigInt::one();
    let x1 = tau.pi_d(1).value;
    let half = p / 2;
    let lambda = (-half..=half).find(|&l| (BigInt::from(24 * l) - &x1) % p == BigInt::zero());
    (one, if p == 3 { None } else { lambda })
}

#[cfg(test)]
mod tests;
